"""Pure-Python reduction kernel.

Polynomials are lists of (exponent-vector, Fraction) pairs in strictly
descending vector order, where exponent vectors are plain integer tuples
listed from the most significant variable position to the least; tuple
comparison then agrees with the active term order.  The compiled kernel
in ``_kernel_c`` implements exactly the same interface and semantics;
``tests/test_kernel_equivalence.py`` pins the two together.
"""

from __future__ import annotations

import heapq


IMPLEMENTATION = "python"


def vec_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def vec_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def vec_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def vec_deg(a):
    return sum(a)


def _neg(vec):
    return tuple(-x for x in vec)


class Basis:
    """A growing list of monic reducers supporting full reduction."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self._polys = []

    def __len__(self):
        return len(self._polys)

    def add(self, terms):
        self._polys.append(list(terms))

    def replace(self, i: int, terms):
        self._polys[i] = list(terms)

    def poly(self, i: int):
        return self._polys[i]

    def lead(self, i: int):
        return self._polys[i][0][0]

    def find_reducer(self, vec, skip: int = -1) -> int:
        for i, p in enumerate(self._polys):
            if i != skip and vec_divides(p[0][0], vec):
                return i
        return -1

    def reduce(self, terms, skip: int = -1):
        """Fully reduce a term list, always taking the lowest-index reducer."""
        cur = dict(terms)
        heap = [_neg(v) for v in cur]
        heapq.heapify(heap)
        out = []
        while heap:
            vec = _neg(heapq.heappop(heap))
            coeff = cur.get(vec)
            if not coeff:
                continue
            i = self.find_reducer(vec, skip)
            if i < 0:
                del cur[vec]
                out.append((vec, coeff))
                continue
            g = self._polys[i]
            u = vec_div(vec, g[0][0])
            del cur[vec]
            for gvec, gcoeff in g[1:]:
                m = vec_mul(u, gvec)
                s = cur.get(m, 0) - coeff * gcoeff
                if s == 0:
                    cur.pop(m, None)
                else:
                    if m not in cur:
                        heapq.heappush(heap, _neg(m))
                    cur[m] = s
        return out
