"""Invariant chains of ideals: symmetrization, projection, stabilization.

A chain assigns to every level n a finite generating set inside the ring
R_n on the first n indices (arity 1) or on all ordered k-tuples from
{1..n} (arity k).  Lifting a level into a larger ring takes the orbit of
its generators under index injections; projecting down intersects with
the smaller ring by block-order elimination.  Stabilization holds on a
window when every lifted level generates the target level exactly; the
report is a window certificate and claims nothing beyond it.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence

from .gb import DEFAULT_LIMITS, EngineLimits, FiniteIdeal, ideal_equal
from .order import LEX, sign_normalized
from .parse import parse_polynomial, render_polynomial
from .perm import injection_images
from .poly import Polynomial, Variable


def variable_size(g: Polynomial) -> int:
    """Number of distinct indeterminates occurring in g."""
    return len(g.variables())


def _canonical_sort(polys) -> list[Polynomial]:
    return sorted(polys, key=lambda p: (p.degree, render_polynomial(p)))


def symmetrize(B: Sequence[Polynomial], m: int) -> list[Polynomial]:
    """Orbit generators for the m-symmetrization of B.

    Enumerates the images of each generator under all injections of its
    index support into {1..m}, which generate the same ideal as the full
    symmetric-group orbit because generators have finite support.  Images
    are sign-normalized (positive leading coefficient) and deduplicated,
    and the result is returned in a canonical order.
    """
    out = set()
    for g in B:
        if g.is_zero():
            continue
        support = g.index_support()
        top = max(support, default=0)
        if top > m:
            raise ValueError(f"generator uses index {top} > m = {m}")
        for image in injection_images(g, m):
            out.add(sign_normalized(image, LEX))
    return _canonical_sort(out)


def level_universe(arity: int, n: int) -> tuple[Variable, ...]:
    """All variables of R_n: x[1..n] for arity 1, else x[u] for ordered
    k-tuples u from {1..n}."""
    if arity == 1:
        return tuple(Variable((i,)) for i in range(1, n + 1))
    return tuple(
        Variable(u) for u in itertools.permutations(range(1, n + 1), arity)
    )


def _infer_arity(polys: Sequence[Polynomial]) -> Optional[int]:
    for g in polys:
        a = g.arity()
        if a is not None:
            return a
    return None


def level_ideal(
    gens: Sequence[Polynomial],
    n: int,
    arity: Optional[int] = None,
    limits: EngineLimits = DEFAULT_LIMITS,
) -> FiniteIdeal:
    arity = arity or _infer_arity(gens) or 1
    return FiniteIdeal(gens, level_universe(arity, n), LEX, limits)


def project(
    B: Sequence[Polynomial],
    n: int,
    m: Optional[int] = None,
    limits: EngineLimits = DEFAULT_LIMITS,
) -> list[Polynomial]:
    """Generators (a reduced basis) of the n-projection of B from R_m:
    the invariant ideal generated by B in R_m, intersected with R_n."""
    B = [g for g in B if not g.is_zero()]
    if not B:
        return []
    arity = _infer_arity(B) or 1
    if m is None:
        m = max(n, max((max(g.index_support(), default=1) for g in B), default=1))
    if n > m:
        raise ValueError(f"projection level n = {n} exceeds m = {m}")
    universe = level_universe(arity, m)
    ideal = FiniteIdeal(symmetrize(B, m), universe, LEX, limits)
    drop = [v for v in universe if any(e > n for e in v.entries)]
    return list(ideal.eliminate(drop).groebner_basis())


@dataclass(frozen=True)
class ChainSpec:
    """A rule producing generators of the level-n ideal I_n of a chain."""

    arity: int
    first_level: int
    kind: str  # "explicit", "toric" or "rule"
    label: str = ""
    levels: Optional[Mapping[int, tuple[Polynomial, ...]]] = None
    rule: Optional[Callable[[int], Sequence[Polynomial]]] = None
    metadata: dict = field(default_factory=dict)

    def generators(self, n: int) -> tuple[Polynomial, ...]:
        if n < self.first_level:
            raise ValueError(f"level {n} below the first level {self.first_level}")
        if self.kind == "explicit":
            try:
                gens = self.levels[n]
            except KeyError:
                raise ValueError(f"no generators declared for level {n}") from None
        else:
            gens = self.rule(n)
        for g in gens:
            top = max(g.index_support(), default=0)
            if top > n:
                raise ValueError(f"level-{n} generator uses index {top}")
        return tuple(gens)

    @staticmethod
    def explicit(levels: Mapping[int, Sequence[Polynomial]], label: str = "") -> "ChainSpec":
        levels = {n: tuple(gs) for n, gs in levels.items()}
        arity = _infer_arity([g for gs in levels.values() for g in gs]) or 1
        return ChainSpec(arity, min(levels), "explicit", label, levels=levels)

    @staticmethod
    def from_rule(
        rule: Callable[[int], Sequence[Polynomial]],
        arity: int,
        first_level: int,
        label: str = "",
        kind: str = "rule",
        metadata: Optional[dict] = None,
    ) -> "ChainSpec":
        return ChainSpec(
            arity, first_level, kind, label, rule=rule, metadata=metadata or {}
        )

    def to_document(self, n_hi: Optional[int] = None) -> dict:
        doc = {
            "k": self.arity,
            "kind": self.kind,
            "first_level": self.first_level,
            "label": self.label,
        }
        doc.update(self.metadata)
        if self.kind == "explicit":
            doc["levels"] = {
                str(n): [render_polynomial(g) for g in gs]
                for n, gs in sorted(self.levels.items())
            }
        elif n_hi is not None:
            doc["levels"] = {
                str(n): [render_polynomial(g) for g in self.generators(n)]
                for n in range(self.first_level, n_hi + 1)
            }
        return doc


def chain_from_document(doc: Mapping) -> ChainSpec:
    """Load an explicit chain from its serialized form."""
    if doc.get("kind", "explicit") != "explicit":
        raise ValueError("only explicit chain documents load here; toric chains "
                         "are built from their defining polynomial")
    levels = {
        int(n): tuple(parse_polynomial(s) for s in texts)
        for n, texts in doc["levels"].items()
    }
    return ChainSpec.explicit(levels, label=doc.get("label", ""))


@dataclass(frozen=True)
class InvariancePair:
    n: int
    m: int
    symmetrization_ok: bool
    projection_ok: bool


@dataclass(frozen=True)
class InvarianceReport:
    window: tuple[int, int]
    pairs: tuple[InvariancePair, ...]

    @property
    def ok(self) -> bool:
        return all(p.symmetrization_ok and p.projection_ok for p in self.pairs)

    def to_dict(self) -> dict:
        return {
            "window": list(self.window),
            "invariant": self.ok,
            "pairs": [
                {
                    "n": p.n,
                    "m": p.m,
                    "symmetrization": p.symmetrization_ok,
                    "projection": p.projection_ok,
                }
                for p in self.pairs
            ],
        }

    def to_text(self) -> str:
        lines = [f"invariance check on window [{self.window[0]}, {self.window[1]}]"]
        for p in self.pairs:
            lines.append(
                f"  n={p.n} m={p.m}  L_m(I_n) <= I_m: {'yes' if p.symmetrization_ok else 'NO'}"
                f"  P_n(I_m) <= I_n: {'yes' if p.projection_ok else 'NO'}"
            )
        lines.append(f"invariant chain on window: {'yes' if self.ok else 'NO'}")
        return "\n".join(lines)


def invariance_check(
    chain: ChainSpec,
    window: tuple[int, int],
    limits: EngineLimits = DEFAULT_LIMITS,
) -> InvarianceReport:
    """Check both chain inclusions on every pair n <= m of the window."""
    lo, hi = window
    lo = max(lo, chain.first_level)
    ideals = {
        n: level_ideal(chain.generators(n), n, chain.arity, limits)
        for n in range(lo, hi + 1)
    }
    pairs = []
    for n in range(lo, hi + 1):
        for m in range(n, hi + 1):
            lifted = symmetrize(chain.generators(n), m)
            sym_ok = all(ideals[m].membership(g) for g in lifted)
            projected = project(list(chain.generators(m)), n, m, limits)
            proj_ok = all(ideals[n].membership(g) for g in projected)
            pairs.append(InvariancePair(n, m, sym_ok, proj_ok))
    return InvarianceReport((lo, hi), tuple(pairs))


@dataclass(frozen=True)
class LevelStat:
    n: int
    generators: int
    basis_size: int
    max_variable_size: int


@dataclass(frozen=True)
class PairStat:
    n: int
    m: int
    equal: bool
    lifted_basis_size: int
    target_basis_size: int
    seconds: float


@dataclass(frozen=True)
class StabilizationReport:
    window: tuple[int, int]
    levels: tuple[LevelStat, ...]
    pairs: tuple[PairStat, ...]
    stabilization_index: Optional[int]
    label: str = ""

    def pair(self, n: int, m: int) -> PairStat:
        for p in self.pairs:
            if p.n == n and p.m == m:
                return p
        raise KeyError((n, m))

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "window": list(self.window),
            "stabilization_index": self.stabilization_index,
            "levels": [
                {
                    "n": s.n,
                    "generators": s.generators,
                    "basis_size": s.basis_size,
                    "max_variable_size": s.max_variable_size,
                }
                for s in self.levels
            ],
            "pairs": [
                {
                    "n": p.n,
                    "m": p.m,
                    "equal": p.equal,
                    "lifted_basis_size": p.lifted_basis_size,
                    "target_basis_size": p.target_basis_size,
                    "seconds": round(p.seconds, 3),
                }
                for p in self.pairs
            ],
        }

    def to_text(self) -> str:
        lines = []
        if self.label:
            lines.append(self.label)
        lines.append(f"window [{self.window[0]}, {self.window[1]}]")
        lines.append("level  gens  basis  max-var-size")
        for s in self.levels:
            lines.append(f"{s.n:>5}  {s.generators:>4}  {s.basis_size:>5}  {s.max_variable_size:>12}")
        lines.append("pair (n, m)  L_m(I_n) = I_m  |L|  |I_m|  seconds")
        for p in self.pairs:
            lines.append(
                f"({p.n}, {p.m})".ljust(11)
                + ("  yes            " if p.equal else "  NO             ")
                + f"{p.lifted_basis_size:>4}  {p.target_basis_size:>5}  {p.seconds:>7.3f}"
            )
        if self.stabilization_index is None:
            lines.append("no stabilization index certified on this window")
        else:
            lines.append(
                f"stabilization index on window: N = {self.stabilization_index} "
                f"(window certificate only; says nothing beyond level {self.window[1]})"
            )
        return "\n".join(lines)


def detect_stabilization(
    chain: ChainSpec,
    n_hi: int,
    limits: EngineLimits = DEFAULT_LIMITS,
) -> StabilizationReport:
    """Compare every lifted level against every target level on the window
    and locate the smallest N whose strictly-later pairs all agree.

    N is reported only when at least one pair above it was actually
    verified, so a single-level window never certifies anything.
    """
    lo = chain.first_level
    levels = list(range(lo, n_hi + 1))
    gens = {n: chain.generators(n) for n in levels}
    ideals = {n: level_ideal(gens[n], n, chain.arity, limits) for n in levels}
    level_stats = tuple(
        LevelStat(
            n,
            len(gens[n]),
            len(ideals[n].groebner_basis()),
            max((variable_size(g) for g in gens[n]), default=0),
        )
        for n in levels
    )
    pairs = []
    for n in levels:
        for m in levels:
            if m < n:
                continue
            start = time.perf_counter()
            lifted = FiniteIdeal(
                symmetrize(gens[n], m), level_universe(chain.arity, m), LEX, limits
            )
            equal = ideal_equal(lifted, ideals[m])
            pairs.append(
                PairStat(
                    n,
                    m,
                    equal,
                    len(lifted.groebner_basis()),
                    len(ideals[m].groebner_basis()),
                    time.perf_counter() - start,
                )
            )
    index = None
    for candidate in levels[:-1]:
        if all(p.equal for p in pairs if p.n > candidate):
            index = candidate
            break
    return StabilizationReport((lo, n_hi), level_stats, tuple(pairs), index, chain.label)
