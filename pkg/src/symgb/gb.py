"""Classical Groebner-basis engine for finitely many variables.

Implements Buchberger completion with the normal selection strategy
(smallest lcm first) and Gebauer-Moeller pair pruning, producing the
unique reduced basis: monic, pairwise auto-reduced, sorted ascending by
leading monomial.  On top of it sit ideal membership, ideal equality,
block-order elimination and the universal-Groebner-basis check for all
permuted lexicographic orders.  This module is the independent exact
oracle that the chain and toric layers are verified against.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import _ring
from .order import LEX, BlockOrder, PermutedLexOrder, TermOrder, leading_monomial
from .perm import Permutation, injection_images
from .poly import Polynomial, Variable


@dataclass(frozen=True)
class EngineLimits:
    """Hard caps so runaway computations fail loudly instead of spinning."""

    max_degree: int = 40
    max_pairs: int = 200000


DEFAULT_LIMITS = EngineLimits()


class CapExceeded(RuntimeError):
    def __init__(self, cap: str, detail: str):
        super().__init__(f"cap exceeded: {cap} ({detail})")
        self.cap = cap


def _spoly(f, g, k):
    """S-polynomial of monic term lists, as a term list."""
    lf, lg = f[0][0], g[0][0]
    lcm = k.vec_lcm(lf, lg)
    uf, ug = k.vec_div(lcm, lf), k.vec_div(lcm, lg)
    acc = {}
    for vec, c in f:
        m = k.vec_mul(uf, vec)
        s = acc.get(m, 0) + c
        if s == 0:
            acc.pop(m, None)
        else:
            acc[m] = s
    for vec, c in g:
        m = k.vec_mul(ug, vec)
        s = acc.get(m, 0) - c
        if s == 0:
            acc.pop(m, None)
        else:
            acc[m] = s
    return sorted(acc.items(), reverse=True)


def reduced_basis_terms(gens_terms, nvars: int, limits: EngineLimits = DEFAULT_LIMITS):
    """Buchberger completion on term lists; returns the reduced basis.

    Pairs are pruned with the Gebauer-Moeller criteria (coprime leads and
    the chain criterion, applied per lcm class) and processed smallest lcm
    first; the property suite re-checks post hoc that every S-polynomial
    of the final basis reduces to zero.
    """
    k = _ring.kernel
    basis = k.Basis(nvars)
    alive = {}  # (i, j) -> lcm of the leads, for pairs still to process
    heap = []

    def add_with_pairs(r):
        t = len(basis)
        lead_t = r[0][0]
        for (i, j), lcm_ij in list(alive.items()):
            if (
                k.vec_divides(lead_t, lcm_ij)
                and lcm_ij != k.vec_lcm(basis.lead(i), lead_t)
                and lcm_ij != k.vec_lcm(basis.lead(j), lead_t)
            ):
                del alive[(i, j)]
        classes = {}
        for i in range(t):
            classes.setdefault(k.vec_lcm(basis.lead(i), lead_t), []).append(i)
        kept = []
        for lcm in sorted(classes):
            if all(not k.vec_divides(smaller, lcm) for smaller in kept):
                kept.append(lcm)
        for lcm in kept:
            members = classes[lcm]
            if any(
                k.vec_lcm(basis.lead(i), lead_t) == k.vec_mul(basis.lead(i), lead_t)
                for i in members
            ):
                continue
            if k.vec_deg(lcm) > limits.max_degree:
                raise CapExceeded("max-degree", f"S-pair lcm degree {k.vec_deg(lcm)}")
            pair = (min(members), t)
            alive[pair] = lcm
            heapq.heappush(heap, (lcm, pair[0], t))
        basis.add(r)

    def monic(terms):
        if not terms or terms[0][1] == 1:
            return terms
        inv = 1 / terms[0][1]
        return [(v, c * inv) for v, c in terms]

    for terms in gens_terms:
        r = basis.reduce(monic(list(terms))) if len(basis) else monic(list(terms))
        if r:
            add_with_pairs(monic(r))

    processed = 0
    while heap:
        lcm, i, j = heapq.heappop(heap)
        if alive.get((i, j)) != lcm:
            continue
        del alive[(i, j)]
        processed += 1
        if processed > limits.max_pairs:
            raise CapExceeded("max-pairs", f"more than {limits.max_pairs} S-pairs")
        r = basis.reduce(_spoly(basis.poly(i), basis.poly(j), k))
        if r:
            add_with_pairs(monic(r))

    # Minimal basis: drop every element whose lead another kept lead divides.
    order_idx = sorted(range(len(basis)), key=basis.lead)
    kept = []
    for i in order_idx:
        if all(not k.vec_divides(basis.lead(j), basis.lead(i)) for j in kept):
            kept.append(i)

    final = k.Basis(nvars)
    for i in kept:
        final.add(basis.poly(i))
    reduced = []
    for i in range(len(final)):
        r = final.reduce(final.poly(i), skip=i)
        final.replace(i, r)
        reduced.append(r)
    reduced.sort(key=lambda t: t[0][0])
    return reduced


class FiniteIdeal:
    """An ideal of Q[universe] with a cached canonical reduced basis."""

    def __init__(
        self,
        generators: Iterable[Polynomial],
        universe: Optional[Sequence[Variable]] = None,
        order: TermOrder = LEX,
        limits: EngineLimits = DEFAULT_LIMITS,
    ):
        self.generators = tuple(g for g in generators if not g.is_zero())
        if universe is None:
            vs = set()
            for g in self.generators:
                vs.update(g.variables())
            universe = sorted(vs, key=lambda v: v.sort_key)
        self.ring = _ring.CompiledRing(universe, order)
        self.order = order
        self.limits = limits
        missing = [
            v for g in self.generators for v in g.variables() if not self.ring.has_variable(v)
        ]
        if missing:
            raise ValueError(f"generator variables outside the universe: {missing[:3]}")
        self._gb_terms = None

    @property
    def universe(self) -> tuple[Variable, ...]:
        return self.ring.universe

    def _basis_terms(self):
        if self._gb_terms is None:
            gens = [self.ring.poly_to_terms(g) for g in self.generators]
            self._gb_terms = reduced_basis_terms(gens, self.ring.nvars, self.limits)
        return self._gb_terms

    def groebner_basis(self) -> tuple[Polynomial, ...]:
        return tuple(self.ring.terms_to_poly(t) for t in self._basis_terms())

    def normal_form(self, f: Polynomial) -> Polynomial:
        terms = self.ring.poly_to_terms(f)
        gb = self._basis_terms()
        basis = _ring.kernel.Basis(self.ring.nvars)
        for t in gb:
            basis.add(t)
        return self.ring.terms_to_poly(basis.reduce(terms))

    def membership(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def __contains__(self, f: Polynomial) -> bool:
        return self.membership(f)

    def is_zero(self) -> bool:
        return not self._basis_terms()

    def eliminate(self, drop: Iterable[Variable]) -> "FiniteIdeal":
        """Intersect with the subring avoiding ``drop``, via a block order."""
        drop = frozenset(drop)
        unknown = drop - set(self.universe)
        if unknown:
            raise ValueError(f"cannot eliminate variables outside the universe: {unknown}")
        if not drop:
            return self
        block = BlockOrder(drop, self.order)
        helper = FiniteIdeal(self.generators, self.universe, block, self.limits)
        kept_universe = tuple(v for v in self.universe if v not in drop)
        kept = [
            g
            for g in helper.groebner_basis()
            if not (set(g.variables()) & drop)
        ]
        result = FiniteIdeal(kept, kept_universe, self.order, self.limits)
        # A reduced basis under the block order restricts to a reduced basis
        # of the intersection, so prime the cache instead of recomputing.
        result._gb_terms = [result.ring.poly_to_terms(g) for g in kept]
        result._gb_terms.sort(key=lambda t: t[0][0])
        return result


def buchberger(ideal: FiniteIdeal) -> tuple[Polynomial, ...]:
    return ideal.groebner_basis()


def membership(f: Polynomial, ideal: FiniteIdeal) -> bool:
    return ideal.membership(f)


def ideal_equal(left: FiniteIdeal, right: FiniteIdeal) -> bool:
    if left.universe != right.universe:
        raise ValueError("ideal comparison requires a common universe")
    if left.order.describe() != right.order.describe():
        raise ValueError("ideal comparison requires a common term order")
    return left._basis_terms() == right._basis_terms()


def coordinate_universe(n: int) -> tuple[Variable, ...]:
    return tuple(Variable((i,)) for i in range(1, n + 1))


def universal_gb_check(
    B: Sequence[Polynomial],
    n: int,
    mode: str = "exhaustive",
    sample_size: int = 24,
    seed: int = 0,
    limits: EngineLimits = DEFAULT_LIMITS,
) -> bool:
    """Is B a universal Groebner basis, over all n! permuted lex orders, of
    the invariant ideal its orbit generates in Q[x1..xn]?

    For each permutation sigma this checks that B lies in the ideal and
    that every leading monomial of the reduced basis under the sigma-twisted
    order is divisible by the sigma-leading monomial of some member of B;
    together these say B contains a Groebner basis for that order.
    """
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exhaustive" and n > 7:
        raise CapExceeded("exhaustive-orders", f"{n}! orders is past the n <= 7 cap")
    universe = coordinate_universe(n)
    orbit = []
    seen = set()
    for g in B:
        for image in injection_images(g, n):
            if image not in seen:
                seen.add(image)
                orbit.append(image)
    base = FiniteIdeal(orbit, universe, LEX, limits)
    if not all(base.membership(g) for g in B):
        return False
    if base.is_zero():
        return True

    perms = itertools.permutations(range(1, n + 1))
    if mode == "sampled":
        pool = list(perms)
        rng = random.Random(seed)
        perms = rng.sample(pool, min(sample_size, len(pool)))
    for images in perms:
        sigma = Permutation(dict(zip(range(1, n + 1), images)))
        twisted = PermutedLexOrder(sigma)
        ideal_s = FiniteIdeal(orbit, universe, twisted, limits)
        lead_B = [leading_monomial(g, twisted) for g in B if not g.is_zero()]
        for g in ideal_s.groebner_basis():
            lm = leading_monomial(g, twisted)
            if not any(lb.divides(lm) for lb in lead_B):
                return False
    return True
