"""Pure-Python permutation kernel.

A permutation on npoints points is bytes of length npoints (one byte per
image) when npoints <= 256, else length 2*npoints (uint16 images, explicitly
little-endian so serializations are platform-independent).  compose(a, b)
returns the permutation x -> a[b[x]], i.e. apply b first; this matches the
convention (v*w)(x) = v(w(x)) used for group products throughout.
"""

from __future__ import annotations

import sys
from array import array
from typing import Dict, List, Sequence


def _u16(data: bytes) -> array:
    arr = array("H")
    arr.frombytes(data)
    if sys.byteorder == "big":
        arr.byteswap()
    return arr


def _u16_bytes(arr: array) -> bytes:
    if sys.byteorder == "big":
        arr = array("H", arr)
        arr.byteswap()
    return arr.tobytes()


def identity(npoints: int) -> bytes:
    if npoints <= 256:
        return bytes(range(npoints))
    return _u16_bytes(array("H", range(npoints)))


_PAD = bytes(range(256))


def compose(a: bytes, b: bytes, npoints: int) -> bytes:
    """Product a*b under 'apply b, then a'."""
    if npoints <= 256:
        # translate wants a 256-byte table; the padded tail is never hit
        return b.translate(a + _PAD[len(a):])
    aa, bb = _u16(a), _u16(b)
    return _u16_bytes(array("H", [aa[x] for x in bb]))


def inverse(a: bytes, npoints: int) -> bytes:
    if npoints <= 256:
        out = bytearray(npoints)
        for i, img in enumerate(a):
            out[img] = i
        return bytes(out)
    aa = _u16(a)
    out = array("H", bytes(2 * npoints))
    for i, img in enumerate(aa):
        out[img] = i
    return _u16_bytes(out)


def perm_order(a: bytes, npoints: int) -> int:
    ident = identity(npoints)
    k = 1
    cur = a
    while cur != ident:
        cur = compose(cur, a, npoints)
        k += 1
    return k


def bfs_lengths(gens: Sequence[bytes], npoints: int) -> Dict[bytes, int]:
    """Word length over gens for every element they generate.

    Valid as a length function only when the generator set is closed under
    inversion (true for reflection sets).  Insertion order of the returned
    dict is the deterministic BFS discovery order.
    """
    ident = identity(npoints)
    lengths: Dict[bytes, int] = {ident: 0}
    frontier: List[bytes] = [ident]
    dist = 0
    while frontier:
        dist += 1
        nxt: List[bytes] = []
        for w in frontier:
            for g in gens:
                x = compose(w, g, npoints)
                if x not in lengths:
                    lengths[x] = dist
                    nxt.append(x)
        frontier = nxt
    return lengths


def conj_orbit(seed: bytes, gens: Sequence[bytes], npoints: int) -> List[bytes]:
    """Closure of seed under conjugation by gens, in BFS discovery order."""
    invs = [inverse(g, npoints) for g in gens]
    seen = {seed: None}
    frontier = [seed]
    while frontier:
        nxt: List[bytes] = []
        for x in frontier:
            for g, ginv in zip(gens, invs):
                y = compose(compose(g, x, npoints), ginv, npoints)
                if y not in seen:
                    seen[y] = None
                    nxt.append(y)
        frontier = nxt
    return list(seen)


def leq_rows(perms: Sequence[bytes], ranks: Sequence[int],
             lengths: Dict[bytes, int], npoints: int) -> List[int]:
    """Bit rows of the absolute order: bit j of row i set iff e_i =< e_j.

    e_i =< e_j iff l(e_i) + l(e_i^-1 e_j) = l(e_j); only rank_i < rank_j
    pairs can be related, plus the diagonal.
    """
    k = len(perms)
    invs = [inverse(p, npoints) for p in perms]
    rows = [0] * k
    for i in range(k):
        row = 1 << i
        ri = ranks[i]
        inv_i = invs[i]
        for j in range(k):
            if ranks[j] > ri:
                if lengths[compose(inv_i, perms[j], npoints)] == ranks[j] - ri:
                    row |= 1 << j
        rows[i] = row
    return rows
