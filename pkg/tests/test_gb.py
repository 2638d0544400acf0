import random

import pytest

from symgb import (
    CapExceeded,
    EngineLimits,
    FiniteIdeal,
    LexOrder,
    ideal_equal,
    membership,
    symmetrize,
    t_,
    universal_gb_check,
    x_,
)
from symgb.gb import coordinate_universe
from symgb.parse import parse_polynomial as P

from oracles import linear_membership, random_polynomial


def ideal(*texts, universe=None, order=None, limits=None):
    kwargs = {}
    if universe is not None:
        kwargs["universe"] = universe
    if order is not None:
        kwargs["order"] = order
    if limits is not None:
        kwargs["limits"] = limits
    return FiniteIdeal([P(t) for t in texts], **kwargs)


class TestBuchberger:
    def test_linear_pair(self):
        gb = ideal("x[1]", "x[1]+x[2]").groebner_basis()
        assert list(gb) == [P("x[1]"), P("x[2]")]

    def test_elimination_kernel(self):
        I = ideal("x[1]-t[1]^2", "x[2]-t[2]^2", "x[3]-t[1]*t[2]")
        Q = I.eliminate([t_(1), t_(2)])
        assert list(Q.groebner_basis()) == [P("x[3]^2 - x[1]*x[2]")]

    def test_reduced_basis_is_canonical_under_shuffle(self):
        rng = random.Random(41)
        for _ in range(40):
            gens = [random_polynomial(rng, max_index=3, max_degree=3) for _ in range(3)]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            universe = coordinate_universe(3)
            reference = FiniteIdeal(gens, universe).groebner_basis()
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert FiniteIdeal(shuffled, universe).groebner_basis() == reference

    def test_monic_autoreduced_sorted(self):
        from symgb import LEX, leading_term

        rng = random.Random(42)
        for _ in range(30):
            gens = [random_polynomial(rng, max_index=3, max_degree=3) for _ in range(3)]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            gb = FiniteIdeal(gens, coordinate_universe(3)).groebner_basis()
            leads = [leading_term(g)[0] for g in gb]
            for i, g in enumerate(gb):
                assert leading_term(g)[1] == 1
                for mono in g.monomials():
                    for j, lead in enumerate(leads):
                        if j != i:
                            assert not lead.divides(mono)
            for a, b in zip(leads, leads[1:]):
                assert LEX.less(a, b)

    def test_spolynomials_reduce_post_hoc(self):
        from symgb import LEX, leading_term

        rng = random.Random(43)
        for _ in range(25):
            gens = [random_polynomial(rng, max_index=3, max_degree=3) for _ in range(2)]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            I = FiniteIdeal(gens, coordinate_universe(3))
            gb = I.groebner_basis()
            for i in range(len(gb)):
                for j in range(i + 1, len(gb)):
                    mi, ci = leading_term(gb[i])
                    mj, cj = leading_term(gb[j])
                    lcm_factors = {}
                    for v, e in mi.items():
                        lcm_factors[v] = e
                    for v, e in mj.items():
                        lcm_factors[v] = max(lcm_factors.get(v, 0), e)
                    from symgb import Monomial

                    lcm = Monomial(lcm_factors)
                    s = gb[i].mul_term(lcm.quotient_by(mi), 1 / ci) - gb[j].mul_term(
                        lcm.quotient_by(mj), 1 / cj
                    )
                    assert I.normal_form(s).is_zero()


class TestMembership:
    def test_trivial_cases(self):
        I = ideal("x[1]", universe=coordinate_universe(2))
        assert membership(P("x[1]*x[2]"), I)
        assert not membership(P("1"), I)

    def test_agrees_with_linear_algebra(self):
        rng = random.Random(44)
        checked = 0
        for _ in range(60):
            gens = [random_polynomial(rng, max_index=3, max_degree=2, max_terms=2)
                    for _ in range(2)]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            f = random_polynomial(rng, max_index=3, max_degree=2, max_terms=2)
            I = FiniteIdeal(gens, coordinate_universe(3))
            got = I.membership(f)
            if linear_membership(f, gens, 2):
                assert got
                checked += 1
            from oracles import random_arity1_monomial

            combo = sum(
                (g.mul_term(random_arity1_monomial(rng, 3, 2)) for g in gens),
                start=P("0"),
            )
            assert I.membership(combo)
        assert checked > 0

    def test_membership_requires_universe(self):
        I = ideal("x[1]", universe=coordinate_universe(1))
        with pytest.raises(ValueError):
            I.membership(P("x[5]"))


class TestIdealEqual:
    def test_generator_presentation_invariance(self):
        u = coordinate_universe(2)
        assert ideal_equal(ideal("x[1]", "x[1]+x[2]", universe=u), ideal("x[1]", "x[2]", universe=u))

    def test_strict_inclusion_detected(self):
        u = coordinate_universe(1)
        assert not ideal_equal(ideal("x[1]", universe=u), ideal("x[1]^2", universe=u))

    def test_universe_mismatch_rejected(self):
        with pytest.raises(ValueError):
            ideal_equal(ideal("x[1]"), ideal("x[2]"))


class TestEliminate:
    def test_empty_drop_is_identity(self):
        I = ideal("x[1]+x[2]")
        assert I.eliminate([]) is I

    def test_monotone_under_inclusion(self):
        u = coordinate_universe(3)
        small = ideal("x[1]*x[2] - x[3]", universe=u)
        large = ideal("x[1]*x[2] - x[3]", "x[2]^2 - x[3]", universe=u)
        ds = small.eliminate([x_(1)])
        dl = large.eliminate([x_(1)])
        for g in ds.groebner_basis():
            assert dl.membership(g)

    def test_eliminated_variables_gone(self):
        I = ideal("x[1]-t[1]^3", "x[2]-t[1]^2")
        Q = I.eliminate([t_(1)])
        for g in Q.groebner_basis():
            assert all(v.family == "x" for v in g.variables())
        assert Q.membership(P("x[1]^2 - x[2]^3"))


class TestUniversalCheck:
    def test_coordinate_basis_is_universal(self):
        for n in (2, 3, 4):
            B = [P(f"x[{i}]") for i in range(1, n + 1)]
            assert universal_gb_check(B, n)

    def test_single_variable_is_not(self):
        assert not universal_gb_check([P("x[1]")], 2)

    def test_zero_ideal(self):
        assert universal_gb_check([], 3)

    def test_sampled_mode(self):
        B = [P(f"x[{i}]") for i in range(1, 5)]
        assert universal_gb_check(B, 4, mode="sampled", sample_size=6, seed=5)

    def test_exhaustive_cap(self):
        with pytest.raises(CapExceeded):
            universal_gb_check([P("x[1]")], 8, mode="exhaustive")


class TestCaps:
    def test_pair_cap(self):
        gens = ["x[1]^2*x[2]-x[3]^2", "x[2]^2*x[3]-x[1]", "x[3]^2*x[1]-x[2]"]
        with pytest.raises(CapExceeded) as err:
            ideal(*gens, limits=EngineLimits(max_pairs=2)).groebner_basis()
        assert err.value.cap == "max-pairs"

    def test_degree_cap(self):
        gens = ["x[1]^3*x[2]-x[3]^2", "x[2]^3*x[3]-x[1]^2*x[3]^2"]
        with pytest.raises(CapExceeded) as err:
            ideal(*gens, limits=EngineLimits(max_degree=4)).groebner_basis()
        assert err.value.cap == "max-degree"


class TestDeclaredRankOrder:
    def test_recorded_display_order(self):
        from symgb.toric import DISPLAY_RANK_4_2, sorted_variable_kernel

        kernel = sorted_variable_kernel(4, 2)
        recorded = FiniteIdeal(
            kernel.groebner_basis(), kernel.universe, LexOrder(list(DISPLAY_RANK_4_2))
        )
        gb = set(recorded.groebner_basis())
        assert gb == {
            P("x[1,3]*x[2,4] - x[1,2]*x[3,4]"),
            P("x[1,4]*x[2,3] - x[1,2]*x[3,4]"),
        }


def test_symmetrize_helper_used_by_universal_check():
    # the invariant closure of {x[1]} in two variables is <x[1], x[2]>
    closure = symmetrize([P("x[1]")], 2)
    assert closure == [P("x[1]"), P("x[2]")]
