"""Kernels of substitution maps x_u -> f(t_u1, ..., t_uk) and their chains.

For a polynomial f in auxiliaries t[1..k], level n binds one variable
x[u] for every ordered k-tuple u from {1..n} and sends it to f evaluated
at the corresponding t's; the kernel Q_n collects all algebraic relations
among these quantities.  Kernels are computed exactly by block-order
elimination of the t's.  For square-free monomial f the module also
builds the small combinatorial generating set (sorting quadrics plus
symmetrizing binomials), whose bounded variable size drives the
stabilization bound 4k, and cross-checks it against the elimination
route level by level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .chains import (
    ChainSpec,
    InvarianceReport,
    StabilizationReport,
    _canonical_sort,
    detect_stabilization,
    invariance_check,
    level_universe,
    variable_size,
)
from .gb import DEFAULT_LIMITS, CapExceeded, EngineLimits, FiniteIdeal, ideal_equal
from .order import LEX
from .parse import render_polynomial
from .perm import Injection, Permutation, act
from .poly import Monomial, Polynomial, Variable, t_


MAX_EXPERIMENT_ARITY = 3
MAX_EXPERIMENT_LEVEL = 8


@dataclass(frozen=True)
class ToricSpec:
    """A substitution polynomial f in t[1..k] defining the kernel chain."""

    arity: int
    f: Polynomial

    def __post_init__(self):
        if self.f.is_zero():
            raise ValueError("the defining polynomial must be nonzero")
        for v in self.f.variables():
            if v.family != "t" or v.arity != 1:
                raise ValueError(f"defining polynomial must use t[i] variables, found {v}")
            if v.entries[0] > self.arity:
                raise ValueError(f"variable {v} exceeds arity {self.arity}")

    def occurring(self) -> tuple[int, ...]:
        return tuple(sorted(v.entries[0] for v in self.f.variables()))

    def normalize(self) -> tuple[int, Permutation, "ToricSpec"]:
        """Relabel so the variables actually occurring are t[1..i]; returns
        (i, the witnessing permutation of {1..k}, the normalized spec)."""
        occ = self.occurring()
        i = len(occ)
        if i == 0:
            return 0, Permutation.identity(), self
        rest = [j for j in range(1, self.arity + 1) if j not in occ]
        tau = Permutation(
            {**{o: pos + 1 for pos, o in enumerate(occ)},
             **{r: i + pos + 1 for pos, r in enumerate(rest)}}
        )
        return i, tau, ToricSpec(i, act(tau, self.f))

    def image(self, u: Sequence[int]) -> Polynomial:
        """f(t_u1, ..., t_uk): the binding target of x[u]."""
        return act(Injection({j + 1: idx for j, idx in enumerate(u)}), self.f)

    def apply(self, g: Polynomial) -> Polynomial:
        """Substitute every x-variable of g by its image polynomial in t."""
        images = {}
        for v in g.variables():
            if v.family != "x":
                continue
            if v.arity != self.arity:
                raise ValueError(f"variable {v} does not have arity {self.arity}")
            images[v] = self.image(v.entries)
        return g.substitute(images)

    def describe(self) -> str:
        return f"k={self.arity}, f={render_polynomial(self.f)}"


def squarefree_spec(k: int) -> ToricSpec:
    """The substitution data for f = t[1]*...*t[k]."""
    m = Monomial({t_(i): 1 for i in range(1, k + 1)})
    return ToricSpec(k, Polynomial.from_monomial(m))


def kernel_by_elimination(
    bindings: Sequence[tuple[Variable, Polynomial]],
    n: int,
    limits: EngineLimits = DEFAULT_LIMITS,
) -> FiniteIdeal:
    """Kernel of x_v -> image(v): eliminate t[1..n] from <x_v - image(v)>."""
    t_universe = tuple(t_(i) for i in range(1, n + 1))
    x_universe = tuple(v for v, _ in bindings)
    for _, image in bindings:
        for v in image.variables():
            if v.family != "t":
                raise ValueError(f"binding images must be polynomials in t, found {v}")
            if v.entries[0] > n:
                raise ValueError(f"binding image uses {v} beyond t[{n}]")
    gens = [Polynomial.variable(v) - image for v, image in bindings]
    graph = FiniteIdeal(gens, x_universe + t_universe, LEX, limits)
    return graph.eliminate(t_universe)


def toric_kernel(spec: ToricSpec, n: int, limits: EngineLimits = DEFAULT_LIMITS) -> FiniteIdeal:
    """Q_n for the chain induced by f, computed on the normalized arity."""
    i, _, normalized = spec.normalize()
    if i == 0:
        raise ValueError("constant defining polynomial: every x_u maps to the "
                         "same constant and there is no kernel chain to study")
    if n < i:
        raise ValueError(f"level {n} below the arity {i}")
    bindings = [
        (Variable(u), normalized.image(u))
        for u in itertools.permutations(range(1, n + 1), i)
    ]
    return kernel_by_elimination(bindings, n, limits)


def toric_chain(spec: ToricSpec, limits: EngineLimits = DEFAULT_LIMITS) -> ChainSpec:
    """The kernel chain as a ChainSpec; level generators are the reduced
    bases of the elimination kernels, computed on demand and cached."""
    i, _, normalized = spec.normalize()
    if i == 0:
        raise ValueError("constant defining polynomial induces no kernel chain")
    cache: dict[int, tuple[Polynomial, ...]] = {}

    def rule(n: int):
        if n not in cache:
            cache[n] = tuple(toric_kernel(normalized, n, limits).groebner_basis())
        return cache[n]

    return ChainSpec.from_rule(
        rule,
        arity=i,
        first_level=i,
        label=f"kernel chain for {normalized.describe()}",
        kind="toric",
        metadata={"f": render_polynomial(normalized.f), "k": i},
    )


@dataclass(frozen=True)
class SortingMatrix:
    """0/1 incidence of t-indices versus sorted k-subsets of {1..n}."""

    n: int
    k: int
    columns: tuple[tuple[int, ...], ...]

    def entry(self, row: int, column: tuple[int, ...]) -> int:
        return 1 if row in column else 0

    def rows(self) -> list[list[int]]:
        return [[self.entry(i, c) for c in self.columns] for i in range(1, self.n + 1)]

    def column_label(self, column: tuple[int, ...]) -> str:
        if max(column) <= 9:
            return "x" + "".join(map(str, column))
        return "x[" + ",".join(map(str, column)) + "]"

    def to_text(self) -> str:
        labels = [self.column_label(c) for c in self.columns]
        row_labels = [f"t{i}" if self.n <= 9 else f"t[{i}]" for i in range(1, self.n + 1)]
        left = max(len(r) for r in row_labels)
        header = " " * left + "".join(f"  {lab}" for lab in labels)
        lines = [header]
        for row_label, row in zip(row_labels, self.rows()):
            cells = "".join(f"  {str(e).rjust(len(lab))}" for lab, e in zip(labels, row))
            lines.append(row_label.ljust(left) + cells)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "columns": [list(c) for c in self.columns],
            "rows": self.rows(),
        }


def sorting_matrix(n: int, k: int) -> SortingMatrix:
    """Columns are the 0/1 vectors with exactly k ones among n coordinates,
    indexed by sorted k-subsets in ascending tuple order."""
    if k < 1 or n < k:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    return SortingMatrix(n, k, tuple(itertools.combinations(range(1, n + 1), k)))


def sorted_variable_kernel(
    n: int, k: int, limits: EngineLimits = DEFAULT_LIMITS
) -> FiniteIdeal:
    """The kernel restricted to sorted variables only: relations among the
    products t_u1*...*t_uk over sorted tuples u (the toric ideal of the
    sorting matrix)."""
    spec = squarefree_spec(k)
    bindings = [
        (Variable(u), spec.image(u)) for u in itertools.combinations(range(1, n + 1), k)
    ]
    return kernel_by_elimination(bindings, n, limits)


# Variable ranking under which the reduced basis of sorted_variable_kernel(4, 2)
# comes out as exactly x[1,3]*x[2,4] - x[1,2]*x[3,4] and
# x[1,4]*x[2,3] - x[1,2]*x[3,4]: both leads must outrank the shared tail.
DISPLAY_RANK_4_2 = (
    Variable((1, 2)),
    Variable((3, 4)),
    Variable((1, 3)),
    Variable((1, 4)),
    Variable((2, 3)),
    Variable((2, 4)),
)


def sort_word(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(word))


def sorted_pair(u: Sequence[int], v: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Merge two sorted k-tuples and deal the 2k entries back out
    alternately: odd merge positions form u', even positions form v'.

    The tuples may share entries (a shared letter appears twice in the
    merge and lands once in each output), but an entry repeated inside a
    single tuple is rejected: it could not name a variable.
    """
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise ValueError("tuples must have equal length")
    for w in (u, v):
        if list(w) != sorted(w):
            raise ValueError(f"tuple must be sorted increasingly: {w}")
        if len(set(w)) != len(w):
            raise ValueError(f"repeated entry in tuple: {w}")
    merged = sorted(u + v)
    return tuple(merged[0::2]), tuple(merged[1::2])


def _xvar(u) -> Polynomial:
    return Polynomial.variable(Variable(tuple(u)))


def squarefree_generating_set(n: int, k: int) -> list[Polynomial]:
    """Generators of Q_n for f = t[1]*...*t[k]: every symmetrizing binomial
    x_u - x_sort(u), plus the nontrivial quadratic sorting binomials
    x_u x_v - x_u' x_v' over pairs of sorted tuples, overlapping or not.
    Every element touches at most four variables, which is what bounds
    the stabilization level.
    """
    if k < 1 or n < k:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    out = []
    for base in itertools.combinations(range(1, n + 1), k):
        for u in itertools.permutations(base):
            if u != base:
                out.append(_xvar(u) - _xvar(base))
    for u, v in itertools.combinations(itertools.combinations(range(1, n + 1), k), 2):
        u2, v2 = sorted_pair(u, v)
        if {u2, v2} != {u, v}:
            out.append(_xvar(u) * _xvar(v) - _xvar(u2) * _xvar(v2))
    return _canonical_sort(out)


@dataclass(frozen=True)
class LevelAgreement:
    n: int
    agree: bool
    combinatorial_generators: int
    elimination_basis_size: int
    max_variable_size: int


@dataclass(frozen=True)
class SquarefreeExperimentReport:
    k: int
    window: tuple[int, int]
    agreements: tuple[LevelAgreement, ...]
    stabilization: StabilizationReport
    bound: int
    bound_premise_size: int
    violations_above_bound: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return all(a.agree for a in self.agreements) and not self.violations_above_bound

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "window": list(self.window),
            "levels": [
                {
                    "n": a.n,
                    "constructions_agree": a.agree,
                    "combinatorial_generators": a.combinatorial_generators,
                    "elimination_basis_size": a.elimination_basis_size,
                    "max_variable_size": a.max_variable_size,
                }
                for a in self.agreements
            ],
            "stabilization": self.stabilization.to_dict(),
            "variable_size_bound": self.bound_premise_size,
            "stabilization_bound": self.bound,
            "violations_above_bound": [list(v) for v in self.violations_above_bound],
            "ok": self.ok,
        }

    def to_text(self) -> str:
        lines = [
            f"square-free kernel experiment, k = {self.k}, levels {self.window[0]}..{self.window[1]}",
            "level  agree  comb-gens  elim-basis  max-var-size",
        ]
        for a in self.agreements:
            lines.append(
                f"{a.n:>5}  {'yes' if a.agree else 'NO '}  {a.combinatorial_generators:>9}"
                f"  {a.elimination_basis_size:>10}  {a.max_variable_size:>12}"
            )
        lines.append(
            f"all generators have variable size <= {self.bound_premise_size}; "
            f"the derived stabilization bound is max(k, k*{self.bound_premise_size}) = {self.bound}"
        )
        lines.append(self.stabilization.to_text())
        if self.violations_above_bound:
            lines.append(f"VIOLATIONS above bound: {self.violations_above_bound}")
        else:
            lines.append(
                f"no equality failure at any checked pair with n > {self.bound}; "
                "window evidence only, not a proof"
            )
        return "\n".join(lines)


def squarefree_stabilization_experiment(
    k: int,
    n_hi: int,
    limits: EngineLimits = DEFAULT_LIMITS,
    max_arity: int = MAX_EXPERIMENT_ARITY,
    max_level: int = MAX_EXPERIMENT_LEVEL,
) -> SquarefreeExperimentReport:
    """Build the square-free kernel chain both ways, check the routes agree
    as ideals level by level, then run stabilization detection."""
    if k > max_arity:
        raise CapExceeded("experiment-arity", f"k = {k} exceeds {max_arity}")
    if n_hi > max_level:
        raise CapExceeded("experiment-level", f"n_hi = {n_hi} exceeds {max_level}")
    spec = squarefree_spec(k)
    chain = toric_chain(spec, limits)
    agreements = []
    for n in range(k, n_hi + 1):
        oracle = FiniteIdeal(chain.generators(n), level_universe(k, n), LEX, limits)
        comb = squarefree_generating_set(n, k)
        combinatorial = FiniteIdeal(comb, level_universe(k, n), LEX, limits)
        agreements.append(
            LevelAgreement(
                n,
                ideal_equal(combinatorial, oracle),
                len(comb),
                len(oracle.groebner_basis()),
                max((variable_size(g) for g in comb), default=0),
            )
        )
    stabilization = detect_stabilization(chain, n_hi, limits)
    premise = max((a.max_variable_size for a in agreements), default=0)
    bound = max(k, k * premise)
    violations = tuple(
        (p.n, p.m) for p in stabilization.pairs if p.n > bound and not p.equal
    )
    return SquarefreeExperimentReport(
        k,
        (k, n_hi),
        tuple(agreements),
        stabilization,
        bound,
        premise,
        violations,
    )


@dataclass(frozen=True)
class ProbeReport:
    spec_text: str
    window: tuple[int, int]
    basis_sizes: tuple[tuple[int, int], ...]
    invariance: InvarianceReport
    stabilization: StabilizationReport

    def to_dict(self) -> dict:
        return {
            "f": self.spec_text,
            "window": list(self.window),
            "basis_sizes": [list(b) for b in self.basis_sizes],
            "invariance": self.invariance.to_dict(),
            "stabilization": self.stabilization.to_dict(),
            "note": "window evidence only; no claim beyond the verified levels",
        }

    def to_text(self) -> str:
        lines = [f"kernel chain probe for {self.spec_text}"]
        lines.append("level  kernel-basis-size")
        for n, size in self.basis_sizes:
            lines.append(f"{n:>5}  {size:>17}")
        lines.append(self.invariance.to_text())
        lines.append(self.stabilization.to_text())
        lines.append("window evidence only; no claim beyond the verified levels")
        return "\n".join(lines)


def conjecture_probe(
    spec: ToricSpec,
    n_hi: int,
    limits: EngineLimits = DEFAULT_LIMITS,
    max_level: int = MAX_EXPERIMENT_LEVEL,
) -> ProbeReport:
    """Gather window evidence for stabilization of the kernel chain of f."""
    if n_hi > max_level:
        raise CapExceeded("experiment-level", f"n_hi = {n_hi} exceeds {max_level}")
    chain = toric_chain(spec, limits)
    lo = chain.first_level
    if n_hi < lo:
        raise ValueError(f"n_hi = {n_hi} is below the first level {lo}")
    sizes = tuple((n, len(chain.generators(n))) for n in range(lo, n_hi + 1))
    invariance = invariance_check(chain, (lo, n_hi), limits)
    stabilization = detect_stabilization(chain, n_hi, limits)
    return ProbeReport(
        chain.label.replace("kernel chain for ", ""),
        (lo, n_hi),
        sizes,
        invariance,
        stabilization,
    )
