"""Finite-support permutations and injections of the positive integers.

A permutation moves finitely many indices and fixes everything else; an
injection is a plain injective map defined only on its finite domain.
Both act entrywise on variable index tuples, and so on monomials and
polynomials.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping

from .poly import Monomial, Polynomial, Variable


class Permutation:
    """A bijection of {1, 2, ...} fixing all but finitely many indices."""

    __slots__ = ("_map",)

    def __init__(self, mapping: Mapping[int, int] = ()):
        mapping = dict(mapping.items() if isinstance(mapping, Mapping) else mapping)
        moved = {k: v for k, v in mapping.items() if k != v}
        for k, v in moved.items():
            if not (isinstance(k, int) and isinstance(v, int) and k >= 1 and v >= 1):
                raise ValueError(f"indices must be positive integers: {k}->{v}")
        if set(moved.keys()) != set(moved.values()):
            raise ValueError(f"not a finite-support bijection: {moved}")
        self._map = moved

    @classmethod
    def identity(cls) -> "Permutation":
        return cls({})

    @classmethod
    def from_cycles(cls, *cycles: Iterable[int]) -> "Permutation":
        """Build from disjoint cycles, e.g. from_cycles((1, 2, 3), (5, 6))."""
        mapping = {}
        for cycle in cycles:
            cycle = tuple(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if a in mapping:
                    raise ValueError(f"index {a} appears in two cycles")
                mapping[a] = b
        return cls(mapping)

    @classmethod
    def transposition(cls, a: int, b: int) -> "Permutation":
        return cls({a: b, b: a})

    def __call__(self, index: int) -> int:
        return self._map.get(index, index)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._map))

    def is_identity(self) -> bool:
        return not self._map

    def inverse(self) -> "Permutation":
        return Permutation({v: k for k, v in self._map.items()})

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        keys = set(self._map) | set(other._map)
        return Permutation({k: self(other(k)) for k in keys})

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycle decomposition, each cycle starting at its least
        element, cycles sorted by least element."""
        seen = set()
        out = []
        for start in sorted(self._map):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._map == other._map

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def __repr__(self):
        return self.cycle_string()


class Injection:
    """An injective map defined on a finite set of positive integers."""

    __slots__ = ("_map",)

    def __init__(self, mapping: Mapping[int, int] = ()):
        mapping = dict(mapping.items() if isinstance(mapping, Mapping) else mapping)
        for k, v in mapping.items():
            if not (isinstance(k, int) and isinstance(v, int) and k >= 1 and v >= 1):
                raise ValueError(f"indices must be positive integers: {k}->{v}")
        if len(set(mapping.values())) != len(mapping):
            raise ValueError(f"not injective: {mapping}")
        self._map = mapping

    def __call__(self, index: int) -> int:
        if index not in self._map:
            raise KeyError(f"injection undefined on index {index}")
        return self._map[index]

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(sorted(self._map))

    def as_dict(self) -> dict[int, int]:
        return dict(sorted(self._map.items()))

    def extend_to_permutation(self) -> Permutation:
        """Extend to a finite-support permutation of {1..max moved index},
        filling leftover sources and targets in ascending order."""
        top = max(itertools.chain(self._map.keys(), self._map.values()), default=0)
        mapping = dict(self._map)
        sources = [i for i in range(1, top + 1) if i not in mapping]
        targets = set(mapping.values())
        free = [i for i in range(1, top + 1) if i not in targets]
        mapping.update(zip(sources, free))
        return Permutation(mapping)

    def __eq__(self, other):
        return isinstance(other, Injection) and self._map == other._map

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def __repr__(self):
        inner = ", ".join(f"{k}->{v}" for k, v in sorted(self._map.items()))
        return "{" + inner + "}"


def act(g: Permutation | Injection, target):
    """Apply a permutation or injection to a Variable, Monomial or Polynomial.

    The index map is applied entrywise to every variable index tuple.  An
    injection must be defined on every index occurring in the target.
    """
    if isinstance(target, Variable):
        support = set(target.entries)
    elif isinstance(target, (Monomial, Polynomial)):
        support = set(target.index_support())
    else:
        raise TypeError(f"cannot act on {target!r}")
    if isinstance(g, Permutation):
        mapping = {i: g(i) for i in support}
    elif isinstance(g, Injection):
        try:
            mapping = {i: g(i) for i in support}
        except KeyError as exc:
            raise ValueError(f"injection undefined on needed index: {exc}") from exc
    else:
        raise TypeError(f"expected Permutation or Injection, got {g!r}")
    return target.relabel(mapping)


def injection_images(f: Polynomial, m: int):
    """Yield act(pi, f) for every injection pi of f's index support into {1..m}.

    Generators with finite support make this the economical way to sweep a
    full symmetric-group orbit: only the images on the support matter.
    """
    support = f.index_support()
    if len(support) > m:
        return
    for targets in itertools.permutations(range(1, m + 1), len(support)):
        yield f.relabel(dict(zip(support, targets)))
