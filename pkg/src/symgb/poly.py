"""Exact sparse polynomials in indexed variables over the rationals.

Variables are indexed by tuples of pairwise distinct positive integers
(arity 1 gives the familiar x_1, x_2, ... case).  A second family of
auxiliary ``t`` variables is available for substitution targets such as
toric parametrizations.  All values are immutable and hashable, and all
arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


_FAMILIES = ("x", "t")


class Variable:
    """An indeterminate named by an index tuple, e.g. x[3] or x[1,2] or t[4]."""

    __slots__ = ("entries", "family", "_hash")

    def __init__(self, entries, family: str = "x"):
        if isinstance(entries, int):
            entries = (entries,)
        entries = tuple(entries)
        if not entries:
            raise ValueError("variable needs at least one index")
        if any(not isinstance(e, int) or e < 1 for e in entries):
            raise ValueError(f"variable indices must be positive integers: {entries}")
        if len(set(entries)) != len(entries):
            raise ValueError(f"variable indices must be pairwise distinct: {entries}")
        if family not in _FAMILIES:
            raise ValueError(f"unknown variable family {family!r}")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "_hash", hash((family, entries)))

    def __setattr__(self, name, value):
        raise AttributeError("Variable is immutable")

    @property
    def arity(self) -> int:
        return len(self.entries)

    @property
    def sort_key(self):
        """Default total order: all x-variables below all t-variables,
        ties within a family broken lexicographically on the index tuple."""
        return (_FAMILIES.index(self.family), self.entries)

    def relabel(self, mapping: Mapping[int, int]) -> "Variable":
        return Variable(tuple(mapping[e] for e in self.entries), self.family)

    def __eq__(self, other):
        return (
            isinstance(other, Variable)
            and self.family == other.family
            and self.entries == other.entries
        )

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __repr__(self):
        return f"{self.family}[{','.join(map(str, self.entries))}]"


def x_(*entries) -> Variable:
    """Shorthand constructor: x_(1) is x[1], x_(1, 2) is x[1,2]."""
    return Variable(entries, "x")


def t_(index: int) -> Variable:
    return Variable((index,), "t")


class Monomial:
    """A finite product of variable powers; the empty product is 1."""

    __slots__ = ("_factors", "_hash")

    def __init__(self, factors: Mapping[Variable, int] | Iterable = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        d = {}
        for var, exp in items:
            if not isinstance(exp, int):
                raise ValueError(f"exponent must be an integer: {exp!r}")
            if exp < 0:
                raise ValueError(f"negative exponent: {var}^{exp}")
            if exp == 0:
                continue
            d[var] = d.get(var, 0) + exp
        object.__setattr__(self, "_factors", d)
        object.__setattr__(self, "_hash", hash(frozenset(d.items())))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def one(cls) -> "Monomial":
        return cls(())

    @classmethod
    def of(cls, var: Variable, exp: int = 1) -> "Monomial":
        return cls(((var, exp),))

    def is_one(self) -> bool:
        return not self._factors

    def exponent(self, var: Variable) -> int:
        return self._factors.get(var, 0)

    def variables(self) -> tuple[Variable, ...]:
        return tuple(sorted(self._factors, key=lambda v: v.sort_key))

    def items(self):
        return tuple((v, self._factors[v]) for v in self.variables())

    @property
    def degree(self) -> int:
        return sum(self._factors.values())

    def index_support(self) -> tuple[int, ...]:
        """Sorted distinct index entries of all variables occurring here."""
        s = set()
        for v in self._factors:
            s.update(v.entries)
        return tuple(sorted(s))

    def arity(self) -> int | None:
        """Common arity of the variables, or None for the monomial 1.

        Raises if variables of different arity are mixed.
        """
        arities = {v.arity for v in self._factors}
        if not arities:
            return None
        if len(arities) > 1:
            raise ValueError(f"mixed variable arities in {self}")
        return arities.pop()

    def __mul__(self, other: "Monomial") -> "Monomial":
        d = dict(self._factors)
        for v, e in other._factors.items():
            d[v] = d.get(v, 0) + e
        return Monomial(d)

    def divides(self, other: "Monomial") -> bool:
        return all(other._factors.get(v, 0) >= e for v, e in self._factors.items())

    def quotient_by(self, divisor: "Monomial") -> "Monomial | None":
        """Return self / divisor, or None when divisor does not divide self."""
        d = dict(self._factors)
        for v, e in divisor._factors.items():
            r = d.get(v, 0) - e
            if r < 0:
                return None
            if r == 0:
                d.pop(v, None)
            else:
                d[v] = r
        return Monomial(d)

    def __pow__(self, n: int) -> "Monomial":
        if n < 0:
            raise ValueError("negative power")
        return Monomial({v: e * n for v, e in self._factors.items()})

    def relabel(self, mapping: Mapping[int, int]) -> "Monomial":
        """Apply an index map to every variable entrywise."""
        return Monomial({v.relabel(mapping): e for v, e in self._factors.items()})

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._factors == other._factors

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self._factors:
            return "1"
        return "*".join(
            repr(v) + (f"^{e}" if e > 1 else "") for v, e in self.items()
        )


def mono_product(v: Monomial, w: Monomial) -> Monomial:
    _check_same_arity(v, w)
    return v * w


def mono_quotient(divisor: Monomial, multiple: Monomial) -> Monomial | None:
    """Return u with u * divisor = multiple, or None when divisor does not divide."""
    _check_same_arity(divisor, multiple)
    return multiple.quotient_by(divisor)


def _check_same_arity(v: Monomial, w: Monomial):
    a, b = v.arity(), w.arity()
    if a is not None and b is not None and a != b:
        raise ValueError(f"mixed arities: {a} vs {b}")


def max_index(m: Monomial) -> int | None:
    """Largest variable index occurring in an arity-1 monomial (None for 1)."""
    best = None
    for v in m._factors:
        if v.arity != 1:
            raise ValueError("max_index requires arity-1 variables")
        i = v.entries[0]
        if best is None or i > best:
            best = i
    return best


def exponent_profile(m: Monomial) -> tuple[int, ...]:
    """Exponent sequence (e_1, ..., e_top) of an arity-1 monomial, 1 -> ()."""
    top = max_index(m)
    if top is None:
        return ()
    exps = [0] * top
    for v, e in m._factors.items():
        exps[v.entries[0] - 1] = e
    return tuple(exps)


class Polynomial:
    """A finite rational linear combination of monomials."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d = {}
        for mono, coeff in items:
            if not isinstance(mono, Monomial):
                raise TypeError(f"expected Monomial, got {mono!r}")
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            c = d.get(mono, Fraction(0)) + coeff
            if c == 0:
                d.pop(mono, None)
            else:
                d[mono] = c
        object.__setattr__(self, "_terms", d)
        object.__setattr__(self, "_hash", hash(frozenset(d.items())))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def from_monomial(cls, m: Monomial, coeff=1) -> "Polynomial":
        return cls(((m, Fraction(coeff)),))

    @classmethod
    def variable(cls, v: Variable) -> "Polynomial":
        return cls.from_monomial(Monomial.of(v))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls(((Monomial.one(), Fraction(c)),))

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(self._terms)

    def terms(self):
        return tuple(self._terms.items())

    def __len__(self):
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        return max((m.degree for m in self._terms), default=-1)

    def variables(self) -> tuple[Variable, ...]:
        vs = set()
        for m in self._terms:
            vs.update(v for v, _ in m.items())
        return tuple(sorted(vs, key=lambda v: v.sort_key))

    def index_support(self) -> tuple[int, ...]:
        s = set()
        for m in self._terms:
            s.update(m.index_support())
        return tuple(sorted(s))

    def arity(self) -> int | None:
        arities = set()
        for m in self._terms:
            a = m.arity()
            if a is not None:
                arities.add(a)
        if not arities:
            return None
        if len(arities) > 1:
            raise ValueError("mixed variable arities in polynomial")
        return arities.pop()

    def __add__(self, other: "Polynomial") -> "Polynomial":
        d = dict(self._terms)
        for m, c in other._terms.items():
            s = d.get(m, Fraction(0)) + c
            if s == 0:
                d.pop(m, None)
            else:
                d[m] = s
        return Polynomial(d)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero()
        return Polynomial({m: c * k for m, k in self._terms.items()})

    def mul_term(self, m: Monomial, c=1) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero()
        return Polynomial({mm * m: c * k for mm, k in self._terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        d = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                s = d.get(m, Fraction(0)) + c1 * c2
                if s == 0:
                    d.pop(m, None)
                else:
                    d[m] = s
        return Polynomial(d)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def relabel(self, mapping: Mapping[int, int]) -> "Polynomial":
        return Polynomial({m.relabel(mapping): c for m, c in self._terms.items()})

    def substitute(self, images: Mapping[Variable, "Polynomial"]) -> "Polynomial":
        """Evaluate with some variables replaced by polynomials."""
        total = Polynomial.zero()
        for m, c in self._terms.items():
            part = Polynomial.constant(c)
            plain = {}
            for v, e in m.items():
                if v in images:
                    part = part * images[v] ** e
                else:
                    plain[v] = e
            if plain:
                part = part.mul_term(Monomial(plain))
            total = total + part
        return total

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self):
        return self._hash

    def __repr__(self):
        from .parse import render_polynomial

        return render_polynomial(self)
