"""Term orders on monomials: lexicographic, permuted and block variants.

The lexicographic order here follows the convention that monomials are
compared starting from the *largest* variable: with x_1 < x_2 < ... and
v = x_1^a1 ... x_n^an, w = x_1^b1 ... x_n^bn, we put v <= w exactly when
(a_n, ..., a_1) <= (b_n, ..., b_1) componentwise-lexicographically.  This
makes 1 the least monomial and keeps the order multiplicative, and it has
the property that v <= w forces max_index(v) <= max_index(w).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .perm import Permutation, act
from .poly import Monomial, Polynomial, Variable, exponent_profile, max_index


class TermOrder:
    def compare(self, v: Monomial, w: Monomial) -> int:
        raise NotImplementedError

    def leq(self, v: Monomial, w: Monomial) -> bool:
        return self.compare(v, w) <= 0

    def less(self, v: Monomial, w: Monomial) -> bool:
        return self.compare(v, w) < 0

    def monomial_key(self):
        """A sort key carrying this order (ascending)."""
        return functools.cmp_to_key(self.compare)

    def describe(self) -> str:
        raise NotImplementedError


class LexOrder(TermOrder):
    """Lexicographic order that compares the largest variable first.

    ``var_rank`` optionally declares a custom total order on variables
    (a sequence listed from smallest to largest); by default variables
    compare by family and index tuple.
    """

    def __init__(self, var_rank: Optional[Sequence[Variable]] = None):
        self._rank = None
        if var_rank is not None:
            self._rank = {v: i for i, v in enumerate(var_rank)}

    def variable_key(self, v: Variable):
        if self._rank is None:
            return v.sort_key
        try:
            return self._rank[v]
        except KeyError:
            raise ValueError(f"variable {v} is not in the declared order") from None

    def compare(self, v: Monomial, w: Monomial) -> int:
        if v == w:
            return 0
        union = {var for var, _ in v.items()}
        union.update(var for var, _ in w.items())
        for var in sorted(union, key=self.variable_key, reverse=True):
            a, b = v.exponent(var), w.exponent(var)
            if a != b:
                return -1 if a < b else 1
        return 0

    def describe(self) -> str:
        if self._rank is None:
            return "lex"
        inner = ", ".join(repr(v) for v in sorted(self._rank, key=self._rank.get))
        return f"lex[{inner}]"


LEX = LexOrder()


class PermutedLexOrder(TermOrder):
    """Order v <= w iff sigma(v) <= sigma(w) under a base lexicographic order."""

    def __init__(self, sigma: Permutation, base: Optional[LexOrder] = None):
        self.sigma = sigma
        self.base = base if base is not None else LEX

    def compare(self, v: Monomial, w: Monomial) -> int:
        return self.base.compare(act(self.sigma, v), act(self.sigma, w))

    def describe(self) -> str:
        return f"lex^{self.sigma.cycle_string()}"


class BlockOrder(TermOrder):
    """Elimination order: monomials touching an eliminated variable rank
    above all monomials that avoid them; ties compare the eliminated parts
    lexicographically, then the remainders under the inner order."""

    def __init__(self, eliminated, inner: Optional[TermOrder] = None):
        self.eliminated = frozenset(eliminated)
        self.inner = inner if inner is not None else LEX
        self._outer = LexOrder()

    def split(self, m: Monomial) -> tuple[Monomial, Monomial]:
        elim, rest = {}, {}
        for v, e in m.items():
            (elim if v in self.eliminated else rest)[v] = e
        return Monomial(elim), Monomial(rest)

    def compare(self, v: Monomial, w: Monomial) -> int:
        ve, vr = self.split(v)
        we, wr = self.split(w)
        c = self._outer.compare(ve, we)
        if c != 0:
            return c
        return self.inner.compare(vr, wr)

    def describe(self) -> str:
        inner = ",".join(sorted(repr(v) for v in self.eliminated))
        return f"block[{inner} >> {self.inner.describe()}]"


@dataclass(frozen=True)
class LeadingData:
    monomial: Monomial
    coefficient: Fraction
    max_index: Optional[int]
    profile: Optional[tuple[int, ...]]


def leading_term(f: Polynomial, order: TermOrder = LEX) -> tuple[Monomial, Fraction]:
    if f.is_zero():
        raise ValueError("the zero polynomial has no leading term")
    lm = max(f.monomials(), key=order.monomial_key())
    return lm, f.coefficient(lm)


def leading_monomial(f: Polynomial, order: TermOrder = LEX) -> Monomial:
    return leading_term(f, order)[0]


def leading_data(f: Polynomial, order: TermOrder = LEX) -> LeadingData:
    """Leading monomial/coefficient plus, for arity-1 monomials, the top
    variable index and the exponent profile used by the embedding tests."""
    lm, lc = leading_term(f, order)
    try:
        top = max_index(lm)
        prof = exponent_profile(lm)
    except ValueError:
        top, prof = None, None
    return LeadingData(lm, lc, top, prof)


def monic(f: Polynomial, order: TermOrder = LEX) -> Polynomial:
    if f.is_zero():
        return f
    _, lc = leading_term(f, order)
    return f.scale(Fraction(1) / lc)


def sign_normalized(f: Polynomial, order: TermOrder = LEX) -> Polynomial:
    """Flip the sign when the leading coefficient is negative."""
    if f.is_zero():
        return f
    _, lc = leading_term(f, order)
    return -f if lc < 0 else f


def significance_positions(universe: Sequence[Variable], order: TermOrder) -> tuple[int, ...]:
    """Positions of ``universe`` listed from most to least significant.

    Comparing two exponent vectors at these positions in sequence agrees
    with ``order.compare`` on monomials over the universe; this is what
    lets the finite engine work on plain integer tuples.
    """
    idx = {v: i for i, v in enumerate(universe)}
    if isinstance(order, LexOrder):
        ranked = sorted(universe, key=order.variable_key, reverse=True)
        return tuple(idx[v] for v in ranked)
    if isinstance(order, PermutedLexOrder):
        if not isinstance(order.base, LexOrder):
            raise TypeError("permuted order must sit over a lexicographic base")
        ranked = sorted(
            universe, key=lambda v: order.base.variable_key(act(order.sigma, v)), reverse=True
        )
        return tuple(idx[v] for v in ranked)
    if isinstance(order, BlockOrder):
        elim = [v for v in universe if v in order.eliminated]
        rest = [v for v in universe if v not in order.eliminated]
        head = sorted(elim, key=lambda v: v.sort_key, reverse=True)
        tail = significance_positions(rest, order.inner)
        return tuple(idx[v] for v in head) + tuple(idx[rest[p]] for p in tail)
    raise TypeError(f"cannot compile order {order!r}")
