"""Root systems for the exceptional types, built exactly from shipped Gram data.

Roots are coordinate vectors in the simple-root basis.  The reflection in a
root beta acts by s_beta(x) = x - (2(beta, x)/(beta, beta)) beta; closing the
simple roots under the simple reflections yields the full root system, and
every group element is carried as a permutation of the sorted root list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Sequence, Tuple

from ncfact.exact import GOLDEN_ONE, GOLDEN_ZERO, Golden, Scalar, matrix_rank
from ncfact.kernels import pure as _pure

Vector = Tuple[Scalar, ...]


@dataclass(frozen=True)
class RootSystem:
    name: str
    rank: int
    field: str                              # "Q" or "Q(phi)"
    gram: Tuple[Vector, ...]
    roots: Tuple[Vector, ...]               # sorted, deterministic indexing
    index: Dict[Vector, int]
    reflection_perms: Tuple[bytes, ...]     # one per root pair, sorted
    simple_perms: Tuple[bytes, ...]         # reflections of the simple roots

    @property
    def npoints(self) -> int:
        return len(self.roots)

    def matrix(self, perm: bytes) -> List[List[Scalar]]:
        """Matrix of the element in the simple-root basis (columns = images)."""
        n = self.rank
        cols = [self.roots[perm[self.index[_unit(self, j)]]] for j in range(n)]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def codim(self, perm: bytes) -> int:
        """Codimension of the fixed space, i.e. rank(M - I), exactly."""
        one = GOLDEN_ONE if self.field == "Q(phi)" else Fraction(1)
        m = self.matrix(perm)
        for i in range(self.rank):
            m[i][i] = m[i][i] - one
        return matrix_rank(m)


def _unit(rs: RootSystem, j: int) -> Vector:
    zero = GOLDEN_ZERO if rs.field == "Q(phi)" else Fraction(0)
    one = GOLDEN_ONE if rs.field == "Q(phi)" else Fraction(1)
    return tuple(one if i == j else zero for i in range(rs.rank))


def _sort_key(v: Vector):
    return tuple(x.sort_key() if isinstance(x, Golden) else x for x in v)


def _dot(gram: Sequence[Vector], x: Vector, y: Vector) -> Scalar:
    acc = None
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = gram[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            term = xi * row[j] * yj
            acc = term if acc is None else acc + term
    if acc is None:
        acc = x[0] - x[0]  # typed zero
    return acc


def _reflect(gram: Sequence[Vector], beta: Vector, beta_norm: Scalar,
             x: Vector) -> Vector:
    coef = (_dot(gram, beta, x) + _dot(gram, beta, x)) / beta_norm
    return tuple(xi - coef * bi for xi, bi in zip(x, beta))


@lru_cache(maxsize=None)
def _raw_data() -> dict:
    text = resources.files("ncfact").joinpath("data/groups.json").read_text()
    return json.loads(text)


def exceptional_degrees(name: str) -> Tuple[int, ...]:
    return tuple(_raw_data()[name]["degrees"])


@lru_cache(maxsize=None)
def build_root_system(name: str) -> RootSystem:
    data = _raw_data()[name]
    field = data["field"]
    rank = len(data["gram"])
    if field == "Q(phi)":
        gram = tuple(tuple(Golden.of(a, b) for a, b in row)
                     for row in data["gram"])
        zero, one = GOLDEN_ZERO, GOLDEN_ONE
    else:
        gram = tuple(tuple(Fraction(x) for x in row) for row in data["gram"])
        zero, one = Fraction(0), Fraction(1)

    simples = [tuple(one if i == j else zero for i in range(rank))
               for j in range(rank)]
    norms = [gram[j][j] for j in range(rank)]

    roots = set(simples) | {tuple(-x for x in v) for v in simples}
    frontier = list(roots)
    while frontier:
        nxt = []
        for x in frontier:
            for j in range(rank):
                y = _reflect(gram, simples[j], norms[j], x)
                if y not in roots:
                    roots.add(y)
                    nxt.append(y)
        frontier = nxt
    root_list = tuple(sorted(roots, key=_sort_key))
    if len(root_list) != data["num_roots"]:
        raise AssertionError(
            f"{name}: root closure gave {len(root_list)} roots, "
            f"expected {data['num_roots']}")
    index = {r: i for i, r in enumerate(root_list)}

    npoints = len(root_list)

    def refl_perm(beta: Vector) -> bytes:
        # coefficient of beta in s_beta(x) is the linear form
        # w(x) = 2 (beta, x) / (beta, beta); precompute w per basis vector
        bnorm = _dot(gram, beta, beta)
        form = []
        for i in range(rank):
            gi = _dot(gram, beta, simples[i])
            form.append((gi + gi) / bnorm)
        images = bytearray(npoints)
        for i, r in enumerate(root_list):
            coef = None
            for k, rk in enumerate(r):
                if rk:
                    term = form[k] * rk
                    coef = term if coef is None else coef + term
            if coef is None or not coef:
                images[i] = i
            else:
                img = tuple(xi - coef * bi for xi, bi in zip(r, beta))
                images[i] = index[img]
        return bytes(images)

    perms = sorted({refl_perm(beta) for beta in root_list})
    if len(perms) != npoints // 2:
        raise AssertionError(f"{name}: expected {npoints // 2} reflections, "
                             f"got {len(perms)}")
    simple_perms = tuple(refl_perm(s) for s in simples)

    rs = RootSystem(name=name, rank=rank, field=field, gram=gram,
                    roots=root_list, index=index,
                    reflection_perms=tuple(perms), simple_perms=simple_perms)
    for p in simple_perms:
        if _pure.compose(p, p, npoints) != _pure.identity(npoints):
            raise AssertionError(f"{name}: simple reflection not an involution")
    return rs
