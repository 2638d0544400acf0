# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reduction kernel; semantics identical to ``_kernel_py``.

Exponent vectors stay Python integer tuples at the interface, but lead
vectors live in a flat C array so the reducer search and the vector
arithmetic run as native loops.  The pure module is the reference:
observable behavior must match it exactly.
"""

import heapq

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM
from cpython.ref cimport Py_INCREF
from libc.stdlib cimport free, malloc, realloc

IMPLEMENTATION = "c"


cdef inline tuple _combine(tuple a, tuple b, int mode):
    # mode 0: a+b, 1: a-b, 2: max(a, b)
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y, z
    cdef tuple out = PyTuple_New(n)
    cdef object item
    for i in range(n):
        x = <object>PyTuple_GET_ITEM(a, i)
        y = <object>PyTuple_GET_ITEM(b, i)
        if mode == 0:
            z = x + y
        elif mode == 1:
            z = x - y
        else:
            z = x if x >= y else y
        item = z
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, i, item)
    return out


def vec_mul(tuple a, tuple b):
    return _combine(a, b, 0)


def vec_div(tuple a, tuple b):
    return _combine(a, b, 1)


def vec_lcm(tuple a, tuple b):
    return _combine(a, b, 2)


def vec_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    for i in range(n):
        x = <object>PyTuple_GET_ITEM(a, i)
        y = <object>PyTuple_GET_ITEM(b, i)
        if x > y:
            return False
    return True


def vec_coprime(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    for i in range(n):
        x = <object>PyTuple_GET_ITEM(a, i)
        y = <object>PyTuple_GET_ITEM(b, i)
        if x != 0 and y != 0:
            return False
    return True


def vec_deg(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef long total = 0
    for i in range(n):
        total += <long>(<object>PyTuple_GET_ITEM(a, i))
    return total


cdef inline tuple _neg(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef long x
    cdef tuple out = PyTuple_New(n)
    cdef object item
    for i in range(n):
        x = <object>PyTuple_GET_ITEM(a, i)
        item = -x
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, i, item)
    return out


cdef class Basis:
    """A growing list of monic reducers supporting full reduction."""

    cdef public Py_ssize_t nvars
    cdef long* _leads
    cdef long* _query
    cdef Py_ssize_t _count
    cdef Py_ssize_t _capacity
    cdef list _polys

    def __cinit__(self, Py_ssize_t nvars):
        self.nvars = nvars
        self._count = 0
        self._capacity = 16
        cdef Py_ssize_t width = nvars if nvars > 0 else 1
        self._leads = <long*>malloc(self._capacity * width * sizeof(long))
        self._query = <long*>malloc(width * sizeof(long))
        if self._leads == NULL or self._query == NULL:
            raise MemoryError()
        self._polys = []

    def __dealloc__(self):
        if self._leads != NULL:
            free(self._leads)
        if self._query != NULL:
            free(self._query)

    def __len__(self):
        return self._count

    cdef void _store_lead(self, Py_ssize_t row, tuple lead):
        cdef Py_ssize_t j
        cdef Py_ssize_t width = self.nvars if self.nvars > 0 else 1
        cdef long* grown
        if row >= self._capacity:
            while self._capacity <= row:
                self._capacity *= 2
            grown = <long*>realloc(self._leads, self._capacity * width * sizeof(long))
            if grown == NULL:
                raise MemoryError()
            self._leads = grown
        for j in range(self.nvars):
            self._leads[row * self.nvars + j] = <object>PyTuple_GET_ITEM(lead, j)

    def add(self, terms):
        terms = list(terms)
        self._store_lead(self._count, terms[0][0])
        self._polys.append(terms)
        self._count += 1

    def replace(self, Py_ssize_t i, terms):
        terms = list(terms)
        self._store_lead(i, terms[0][0])
        self._polys[i] = terms

    def poly(self, Py_ssize_t i):
        return self._polys[i]

    def lead(self, Py_ssize_t i):
        return (<list>self._polys[i])[0][0]

    cdef Py_ssize_t _find(self, Py_ssize_t skip):
        cdef Py_ssize_t i, j
        cdef long* row
        cdef bint ok
        for i in range(self._count):
            if i == skip:
                continue
            row = self._leads + i * self.nvars
            ok = True
            for j in range(self.nvars):
                if row[j] > self._query[j]:
                    ok = False
                    break
            if ok:
                return i
        return -1

    cdef void _load_query(self, tuple vec):
        cdef Py_ssize_t j
        for j in range(self.nvars):
            self._query[j] = <object>PyTuple_GET_ITEM(vec, j)

    def find_reducer(self, tuple vec, Py_ssize_t skip=-1):
        self._load_query(vec)
        return self._find(skip)

    def reduce(self, terms, Py_ssize_t skip=-1):
        """Fully reduce a term list, always taking the lowest-index reducer."""
        cdef dict cur = dict(terms)
        cdef list heap = [_neg(v) for v in cur]
        heapq.heapify(heap)
        cdef list out = []
        cdef Py_ssize_t i
        cdef tuple vec, u, m
        cdef list g
        cdef object coeff, s
        while heap:
            vec = _neg(<tuple>heapq.heappop(heap))
            coeff = cur.get(vec)
            if coeff is None or coeff == 0:
                continue
            self._load_query(vec)
            i = self._find(skip)
            if i < 0:
                del cur[vec]
                out.append((vec, coeff))
                continue
            g = <list>self._polys[i]
            u = _combine(vec, <tuple>(<tuple>g[0])[0], 1)
            del cur[vec]
            for gterm in g[1:]:
                m = _combine(u, <tuple>(<tuple>gterm)[0], 0)
                s = cur.get(m, 0) - coeff * (<tuple>gterm)[1]
                if s == 0:
                    cur.pop(m, None)
                else:
                    if m not in cur:
                        heapq.heappush(heap, _neg(m))
                    cur[m] = s
        return out
