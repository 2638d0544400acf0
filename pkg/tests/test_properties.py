"""Randomized property suites; every suite drives at least 200 cases.

Run with: pytest tests/test_properties.py
"""

import random
from fractions import Fraction

from symgb import (
    LEX,
    FiniteIdeal,
    Monomial,
    Permutation,
    act,
    cancellation_witness,
    ideal_equal,
    leading_monomial,
    leading_term,
    level_universe,
    max_index,
    normal_form,
    reduce_step,
    squarefree_spec,
    symmetrize,
    toric_kernel,
    verify_trace,
    x_,
)
from symgb.gb import coordinate_universe
from symgb.parse import parse_polynomial as P

from oracles import random_arity1_monomial, random_polynomial

CASES = 200


def shifted(m: Monomial) -> Monomial:
    return m.relabel({i: i + 1 for i in m.index_support()})


def related(v, w) -> bool:
    return cancellation_witness(v, w).related


def test_suite_order_axioms():
    rng = random.Random(101)
    checked = 0
    while checked < CASES:
        u, v, w = (random_arity1_monomial(rng) for _ in range(3))
        c, crev = LEX.compare(v, w), LEX.compare(w, v)
        assert c == -crev
        assert (c == 0) == (v == w)
        assert LEX.leq(Monomial.one(), v)
        if LEX.leq(v, w):
            assert LEX.leq(u * v, u * w)
            if not w.is_one():
                assert (max_index(v) or 0) <= max_index(w)
        checked += 1


def test_suite_witness_soundness():
    rng = random.Random(102)
    hits = 0
    attempts = 0
    while hits < CASES:
        attempts += 1
        assert attempts < 40 * CASES
        v = random_arity1_monomial(rng, max_index=4, max_degree=5)
        w = random_arity1_monomial(rng, max_index=5, max_degree=6)
        report = cancellation_witness(v, w)
        if not report.related:
            continue
        hits += 1
        assert report.validate()
        image = act(report.sigma, v)
        assert image.divides(w)
        assert report.cofactor * image == w
        assert all(i <= (max_index(w) or 0) for i in report.sigma.support)


def test_suite_shift_stability():
    rng = random.Random(103)
    hits = 0
    attempts = 0
    while hits < CASES:
        attempts += 1
        assert attempts < 60 * CASES
        v = random_arity1_monomial(rng, max_index=3, max_degree=4)
        w = random_arity1_monomial(rng, max_index=4, max_degree=5)
        if w.is_one() or not related(v, w):
            continue
        hits += 1
        c = rng.randint(0, 3)
        lifted = Monomial({x_(1): c}) * shifted(w) if c else shifted(w)
        assert related(v, lifted)
        a = rng.randint(0, 2)
        b = a + rng.randint(0, 2)
        left = Monomial({x_(1): a}) * shifted(v)
        right = Monomial({x_(1): b}) * shifted(w)
        assert related(left, right)


def test_suite_trace_identities():
    rng = random.Random(104)
    checked = 0
    while checked < CASES:
        f = random_polynomial(rng, max_index=4, max_degree=4)
        basis = [g for g in (random_polynomial(rng) for _ in range(3)) if not g.is_zero()]
        if not basis:
            continue
        residue, trace = normal_form(f, basis, tail=bool(rng.getrandbits(1)))
        assert verify_trace(f, trace)
        assert trace.reconstruct() == f
        again, empty_trace = normal_form(residue, basis)
        assert again == residue and not empty_trace.steps
        checked += 1


def test_suite_leading_monomial_descent():
    rng = random.Random(105)
    checked = 0
    while checked < CASES:
        f = random_polynomial(rng, max_index=4, max_degree=4)
        basis = [g for g in (random_polynomial(rng) for _ in range(2)) if not g.is_zero()]
        if f.is_zero() or not basis:
            continue
        checked += 1
        work, previous, steps = f, None, 0
        bound = f.degree * 64 + 64
        while not work.is_zero():
            outcome = reduce_step(work, basis)
            if outcome is None:
                break
            lm = leading_monomial(work)
            if previous is not None:
                assert LEX.less(lm, previous)
            previous = lm
            work = outcome[0]
            steps += 1
            assert steps <= bound


def test_suite_buchberger_post_hoc():
    rng = random.Random(106)
    checked = 0
    while checked < CASES:
        gens = [random_polynomial(rng, max_index=3, max_degree=3, max_terms=2)
                for _ in range(2)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        ideal = FiniteIdeal(gens, coordinate_universe(3))
        gb = ideal.groebner_basis()
        for i in range(len(gb)):
            for j in range(i + 1, len(gb)):
                mi, ci = leading_term(gb[i])
                mj, cj = leading_term(gb[j])
                lcm_factors = dict(mi.items())
                for var, e in mj.items():
                    lcm_factors[var] = max(lcm_factors.get(var, 0), e)
                lcm = Monomial(lcm_factors)
                s = gb[i].mul_term(lcm.quotient_by(mi), 1 / ci)
                s = s - gb[j].mul_term(lcm.quotient_by(mj), 1 / cj)
                assert ideal.normal_form(s).is_zero()
        checked += 1


def test_suite_symmetrization_generator_independence():
    rng = random.Random(107)
    m = 3
    universe = level_universe(1, m)
    checked = 0
    while checked < CASES:
        gens = [random_polynomial(rng, max_index=2, max_degree=2, max_terms=2)
                for _ in range(2)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        multiplier = random_arity1_monomial(rng, max_index=2, max_degree=2)
        scale = Fraction(rng.randint(1, 3))
        redundant = gens[0].mul_term(multiplier, scale)
        if len(gens) > 1:
            redundant = redundant + gens[1]
        left = FiniteIdeal(symmetrize(gens, m), universe)
        right = FiniteIdeal(symmetrize(gens + [redundant], m), universe)
        assert ideal_equal(left, right)
        checked += 1


def test_suite_kernel_membership_invariance():
    rng = random.Random(108)
    kernels = [
        (4, toric_kernel(squarefree_spec(2), 4)),
        (3, toric_kernel(__import__("symgb").ToricSpec(2, P("t[1]^2*t[2]")), 3)),
    ]
    checked = 0
    while checked < CASES:
        n, ideal = kernels[checked % len(kernels)]
        basis = ideal.groebner_basis()
        images = list(range(1, n + 1))
        rng.shuffle(images)
        sigma = Permutation(dict(zip(range(1, n + 1), images)))
        g = basis[rng.randrange(len(basis))]
        if rng.getrandbits(1):
            other = basis[rng.randrange(len(basis))]
            u = rng.sample(range(1, n + 1), 2)
            g = g + other.mul_term(Monomial.of(x_(*u)), Fraction(rng.randint(1, 3)))
        assert ideal.membership(act(sigma, g))
        checked += 1
