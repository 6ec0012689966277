"""The lattice of noncrossing partitions NC(W, c).

NC(W, c) = {w : w =< c} in absolute order, graded by reflection length.
Elements are sorted by (rank, permutation bytes), so index 0 is the identity
and the last index is the Coxeter element; the order relation is stored as
per-element bit rows.  Multichain and chain counting reduce to transfer
sums over predecessor lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from ncfact import kernels
from ncfact.errors import NonIntegerResult, NotInNC, RankTooSmall
from ncfact.families import GroupSpec
from ncfact.groups import ClassId, Element, Group


@dataclass(frozen=True)
class NcClass:
    """A conjugacy class met by NC, at a fixed rank."""

    class_id: ClassId
    rank: int
    representative: Element
    size_in_nc: int


class NcPoset:
    """Materialized NC(W, c); immutable after construction."""

    def __init__(self, group: Group):
        group.check_enumeration_budget()
        table = group.length_table()
        car_npoints = group.npoints
        n = group.rank
        cperm = group.coxeter.perm
        if table[cperm] != n:
            raise AssertionError(f"{group.name}: Coxeter element has length "
                                 f"{table[cperm]}, expected rank {n}")
        members: List[Tuple[int, bytes]] = []
        for perm, length in table.items():
            inv = kernels.inverse(perm, car_npoints)
            rest = table[kernels.compose(inv, cperm, car_npoints)]
            if length + rest == n:
                members.append((length, perm))
        members.sort()
        self.group = group
        self.perms: Tuple[bytes, ...] = tuple(p for _, p in members)
        self.ranks: Tuple[int, ...] = tuple(r for r, _ in members)
        self.elements: Tuple[Element, ...] = tuple(
            Element(group.name, p) for p in self.perms)
        self.index: Dict[bytes, int] = {p: i for i, p in enumerate(self.perms)}
        self.size = len(self.perms)
        self.leq_rows: Tuple[int, ...] = tuple(kernels.leq_rows(
            list(self.perms), list(self.ranks), table, car_npoints))
        self.class_ids: Tuple[ClassId, ...] = tuple(
            group.conjugacy_class_id(e) for e in self.elements)
        # succs/preds by exact rank jump; preds_all includes the diagonal
        max_rank = n
        preds: List[List[List[int]]] = [
            [[] for _ in range(self.size)] for _ in range(max_rank + 1)]
        preds_all: List[List[int]] = [[] for _ in range(self.size)]
        for i in range(self.size):
            row = self.leq_rows[i]
            ri = self.ranks[i]
            for j in range(self.size):
                if row >> j & 1:
                    preds_all[j].append(i)
                    if i != j:
                        preds[self.ranks[j] - ri][j].append(i)
        self.preds_by_jump: Tuple[Tuple[Tuple[int, ...], ...], ...] = tuple(
            tuple(tuple(lst) for lst in level) for level in preds)
        self.preds_all: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(lst) for lst in preds_all)

    def __repr__(self) -> str:
        return f"NcPoset({self.group.name}, size={self.size})"

    def index_of(self, x: Element) -> int:
        perm = x.perm
        if x.tag != self.group.name or perm not in self.index:
            raise NotInNC(f"element is not in NC({self.group.name})")
        return self.index[perm]

    def rank_of(self, x: Element) -> int:
        return self.ranks[self.index_of(x)]

    def class_of(self, x: Element) -> ClassId:
        return self.class_ids[self.index_of(x)]

    def leq(self, u: Element, v: Element) -> bool:
        return bool(self.leq_rows[self.index_of(u)] >> self.index_of(v) & 1)


def build_nc(group: Group) -> NcPoset:
    return NcPoset(group)


def fuss_catalan(spec: GroupSpec, p: int) -> int:
    """prod_i (d_i + p*h) / d_i, exactly."""
    if p < 0:
        raise ValueError("p must be >= 0")
    value = Fraction(1)
    h = spec.h
    for d in spec.degrees:
        value *= Fraction(d + p * h, d)
    if value.denominator != 1:
        raise NonIntegerResult(f"Fuss-Catalan value {value} for {spec.name}, "
                               f"p={p} is not an integer")
    return value.numerator


def count_multichains(nc: NcPoset, p: int) -> int:
    """Number of multichains w_1 =< ... =< w_p in NC; p = 1 gives |NC|."""
    if p < 1:
        raise ValueError("p must be >= 1")
    counts = [1] * nc.size
    for _ in range(p - 1):
        counts = [sum(counts[i] for i in nc.preds_all[j])
                  for j in range(nc.size)]
    return sum(counts)


def strata_codim2(nc: NcPoset) -> List[NcClass]:
    """Conjugacy classes of the rank-2 NC elements, smallest class first."""
    if nc.group.rank < 2:
        raise RankTooSmall(f"{nc.group.name} has rank {nc.group.rank}; "
                           "codimension-2 strata need rank >= 2")
    buckets: Dict[ClassId, List[int]] = {}
    for i, rk in enumerate(nc.ranks):
        if rk == 2:
            buckets.setdefault(nc.class_ids[i], []).append(i)
    classes = [NcClass(class_id=cid, rank=2,
                       representative=nc.elements[idxs[0]],
                       size_in_nc=len(idxs))
               for cid, idxs in buckets.items()]
    classes.sort(key=lambda c: (c.size_in_nc, c.class_id))
    return classes
