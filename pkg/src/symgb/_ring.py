"""Bridge between symbolic polynomials and the flat engine representation.

A CompiledRing fixes a finite variable universe and a term order, and
converts polynomials to lists of (exponent-vector, coefficient) pairs
whose plain tuple comparison realizes the order.  The reduction kernel
is the compiled extension when available, with a pure-Python fallback
selected at import; SYMGB_KERNEL=py|c forces the choice.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Sequence

from .order import TermOrder, significance_positions
from .poly import Monomial, Polynomial, Variable


def _load_kernel(name: str | None = None):
    name = (name or os.environ.get("SYMGB_KERNEL", "")).lower()
    if name in ("py", "python", "pure"):
        from . import _kernel_py

        return _kernel_py
    if name in ("c", "ext", "compiled"):
        from . import _kernel_c

        return _kernel_c
    try:
        from . import _kernel_c

        return _kernel_c
    except ImportError:
        from . import _kernel_py

        return _kernel_py


kernel = _load_kernel()


def use_kernel(name: str | None = None):
    """Swap the active kernel ('py' or 'c'); returns the module now in use."""
    global kernel
    kernel = _load_kernel(name)
    return kernel


class CompiledRing:
    def __init__(self, universe: Sequence[Variable], order: TermOrder):
        self.universe = tuple(sorted(set(universe), key=lambda v: v.sort_key))
        self.order = order
        self.positions = significance_positions(self.universe, order)
        self.nvars = len(self.universe)
        self._slot = {}
        for j, pos in enumerate(self.positions):
            self._slot[self.universe[pos]] = j

    def has_variable(self, v: Variable) -> bool:
        return v in self._slot

    def mono_to_vec(self, m: Monomial) -> tuple[int, ...]:
        vec = [0] * self.nvars
        for v, e in m.items():
            try:
                vec[self._slot[v]] = e
            except KeyError:
                raise ValueError(f"variable {v} is not in the ring universe") from None
        return tuple(vec)

    def vec_to_mono(self, vec) -> Monomial:
        return Monomial(
            {self.universe[pos]: e for pos, e in zip(self.positions, vec) if e}
        )

    def poly_to_terms(self, f: Polynomial):
        terms = [(self.mono_to_vec(m), c) for m, c in f.terms()]
        terms.sort(reverse=True)
        return terms

    def terms_to_poly(self, terms) -> Polynomial:
        return Polynomial({self.vec_to_mono(v): c for v, c in terms})

    def monic_terms(self, terms):
        if not terms:
            return terms
        lc = terms[0][1]
        if lc == 1:
            return terms
        inv = Fraction(1) / lc
        return [(v, c * inv) for v, c in terms]
