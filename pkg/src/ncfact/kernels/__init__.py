"""Hot permutation kernels with backend selection.

Group elements are serialized permutations of a fixed point set: one byte per
point when the carrier has at most 256 points, otherwise two bytes per point,
little-endian.  The compiled backend (_fastperm, Cython) and the pure-Python
backend expose the same six functions and produce identical bytes; set
NCFACT_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os

from ncfact.kernels import pure

if os.environ.get("NCFACT_PURE"):
    _backend = pure
    BACKEND = "pure"
else:
    try:
        from ncfact.kernels import _fastperm as _backend  # type: ignore[no-redef]
        BACKEND = "compiled"
    except ImportError:
        _backend = pure
        BACKEND = "pure"

identity = _backend.identity
compose = _backend.compose
inverse = _backend.inverse
perm_order = _backend.perm_order
bfs_lengths = _backend.bfs_lengths
conj_orbit = _backend.conj_orbit
leq_rows = _backend.leq_rows

__all__ = [
    "BACKEND", "identity", "compose", "inverse", "perm_order",
    "bfs_lengths", "conj_orbit", "leq_rows", "pure",
]
