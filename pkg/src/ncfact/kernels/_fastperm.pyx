# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled permutation kernel; byte-identical drop-in for kernels.pure.

Same serialized-permutation format as the pure backend: one byte per point
for npoints <= 256, else two bytes per point little-endian (the two-byte path
does explicit byte arithmetic, so it is endianness-independent).
"""

from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING


cdef inline void _compose1(const unsigned char* a, const unsigned char* b,
                           unsigned char* out, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t x
    for x in range(n):
        out[x] = a[b[x]]


cdef inline void _compose2(const unsigned char* a, const unsigned char* b,
                           unsigned char* out, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t x, idx, img
    for x in range(n):
        idx = b[2 * x] | (b[2 * x + 1] << 8)
        img = a[2 * idx] | (a[2 * idx + 1] << 8)
        out[2 * x] = img & 0xFF
        out[2 * x + 1] = img >> 8


cdef bytes _compose(bytes a, bytes b, int npoints):
    cdef Py_ssize_t size = len(a)
    cdef bytes out = PyBytes_FromStringAndSize(NULL, size)
    cdef unsigned char* op = <unsigned char*> PyBytes_AS_STRING(out)
    cdef const unsigned char* ap = a
    cdef const unsigned char* bp = b
    if npoints <= 256:
        _compose1(ap, bp, op, npoints)
    else:
        _compose2(ap, bp, op, npoints)
    return out


def identity(int npoints):
    cdef Py_ssize_t width = 1 if npoints <= 256 else 2
    cdef bytes out = PyBytes_FromStringAndSize(NULL, npoints * width)
    cdef unsigned char* op = <unsigned char*> PyBytes_AS_STRING(out)
    cdef Py_ssize_t x
    if width == 1:
        for x in range(npoints):
            op[x] = x
    else:
        for x in range(npoints):
            op[2 * x] = x & 0xFF
            op[2 * x + 1] = x >> 8
    return out


def compose(bytes a, bytes b, int npoints):
    """Product a*b under 'apply b, then a'."""
    return _compose(a, b, npoints)


def inverse(bytes a, int npoints):
    cdef Py_ssize_t size = len(a)
    cdef bytes out = PyBytes_FromStringAndSize(NULL, size)
    cdef unsigned char* op = <unsigned char*> PyBytes_AS_STRING(out)
    cdef const unsigned char* ap = a
    cdef Py_ssize_t i, img
    if npoints <= 256:
        for i in range(npoints):
            op[ap[i]] = i
    else:
        for i in range(npoints):
            img = ap[2 * i] | (ap[2 * i + 1] << 8)
            op[2 * img] = i & 0xFF
            op[2 * img + 1] = i >> 8
    return out


def perm_order(bytes a, int npoints):
    ident = identity(npoints)
    cdef int k = 1
    cur = a
    while cur != ident:
        cur = _compose(cur, a, npoints)
        k += 1
    return k


def bfs_lengths(gens, int npoints):
    """Word length over an inversion-closed generator set; BFS dict order."""
    ident = identity(npoints)
    lengths = {ident: 0}
    frontier = [ident]
    cdef int dist = 0
    while frontier:
        dist += 1
        nxt = []
        for w in frontier:
            for g in gens:
                x = _compose(w, g, npoints)
                if x not in lengths:
                    lengths[x] = dist
                    nxt.append(x)
        frontier = nxt
    return lengths


def conj_orbit(bytes seed, gens, int npoints):
    """Closure of seed under conjugation by gens, in BFS discovery order."""
    invs = [inverse(g, npoints) for g in gens]
    seen = {seed: None}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            for g, ginv in zip(gens, invs):
                y = _compose(_compose(g, x, npoints), ginv, npoints)
                if y not in seen:
                    seen[y] = None
                    nxt.append(y)
        frontier = nxt
    return list(seen)


def leq_rows(perms, ranks, lengths, int npoints):
    """Bit rows of the absolute order; same semantics as pure.leq_rows."""
    cdef Py_ssize_t k = len(perms)
    invs = [inverse(p, npoints) for p in perms]
    rows = [0] * k
    cdef Py_ssize_t i, j
    cdef int ri
    cdef object one = 1  # Python int: rows can exceed machine-word bits
    for i in range(k):
        row = one << i
        ri = ranks[i]
        inv_i = invs[i]
        for j in range(k):
            if ranks[j] > ri:
                if lengths[_compose(inv_i, perms[j], npoints)] == ranks[j] - ri:
                    row = row | (one << j)
        rows[i] = row
    return rows
