import pytest
from fractions import Fraction

from symgb import (
    Monomial,
    Polynomial,
    exponent_profile,
    max_index,
    t_,
    x_,
)
from symgb.parse import parse_polynomial as P
from symgb.poly import mono_product, mono_quotient


def mono(text):
    return P(text).monomials()[0]


class TestVariable:
    def test_distinct_entries_required(self):
        with pytest.raises(ValueError):
            x_(1, 1)

    def test_positive_entries_required(self):
        with pytest.raises(ValueError):
            x_(0)

    def test_sort_order(self):
        assert x_(1) < x_(2) < x_(10)
        assert x_(1, 2) < x_(1, 3) < x_(2, 1)
        assert x_(5) < t_(1)


class TestMonomial:
    def test_product(self):
        assert mono_product(mono("x[1]^2"), mono("x[2]")) == mono("x[1]^2*x[2]")

    def test_quotient_from_chain_example(self):
        # x[1]^3 * (x[2]*x[3]^2) = x[1]^3*x[2]*x[3]^2
        u = mono_quotient(mono("x[2]*x[3]^2"), mono("x[1]^3*x[2]*x[3]^2"))
        assert u == mono("x[1]^3")

    def test_quotient_absent(self):
        assert mono_quotient(mono("x[1]"), mono("x[2]^2")) is None

    def test_quotient_product_round_trip(self):
        v, w = mono("x[2]*x[3]"), mono("x[1]*x[2]^2*x[3]")
        u = mono_quotient(v, w)
        assert mono_product(u, v) == w

    def test_mixed_arity_rejected(self):
        with pytest.raises(ValueError):
            mono_product(mono("x[1]"), mono("x[1,2]"))

    def test_degree_and_support(self):
        m = mono("x[2]*x[5]^3")
        assert m.degree == 4
        assert m.index_support() == (2, 5)

    def test_max_index_and_profile(self):
        assert max_index(mono("x[1]^3*x[2]*x[3]^2")) == 3
        assert max_index(Monomial.one()) is None
        assert exponent_profile(mono("x[1]*x[2]^2")) == (1, 2)
        assert exponent_profile(mono("x[3]^2")) == (0, 0, 2)
        assert exponent_profile(Monomial.one()) == ()

    def test_hashable_and_equal(self):
        assert mono("x[1]*x[2]") == mono("x[2]*x[1]")
        assert len({mono("x[1]"), mono("x[1]")}) == 1


class TestPolynomial:
    def test_zero_normalization(self):
        f = P("x[1]") - P("x[1]")
        assert f.is_zero()
        assert f == Polynomial.zero()

    def test_cancellation_keeps_exact_coefficients(self):
        f = P("1/3*x[1] + 1/6*x[1]")
        assert f.coefficient(mono("x[1]")) == Fraction(1, 2)

    def test_product_difference_of_squares(self):
        assert P("(x[1]-x[2])*(x[1]+x[2])") == P("x[1]^2 - x[2]^2")

    def test_add_inverse(self):
        f = P("x[1]*x[2]^2 + x[2] + x[1]^2")
        assert (f + f.scale(-1)).is_zero()

    def test_pow(self):
        assert P("x[1]+1") ** 3 == P("x[1]^3 + 3*x[1]^2 + 3*x[1] + 1")

    def test_substitute(self):
        f = P("x[1]*x[2] - x[3]^2")
        images = {x_(1): P("t[1]^2"), x_(2): P("t[2]^2"), x_(3): P("t[1]*t[2]")}
        assert f.substitute(images).is_zero()

    def test_substitute_leaves_other_variables(self):
        f = P("x[1] + x[2]")
        assert f.substitute({x_(1): P("t[1]")}) == P("t[1] + x[2]")

    def test_arity_mixing_detected(self):
        f = P("x[1] + x[1,2]")
        with pytest.raises(ValueError):
            f.arity()
