"""Block factorizations of the Coxeter element.

A block factorization of c is a tuple of non-identity elements whose product
is c and whose reflection lengths sum to l(c) = rank.  Factorizations with
composition (l(w_1), ..., l(w_p)) correspond to strict rank-jump chains in
NC(W, c), so all counting is transfer-matrix work over the materialized
poset; explicit enumeration is kept alongside as an independent route and
for the Hurwitz/concatenation checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ncfact import kernels
from ncfact.errors import (BudgetExceeded, IndexOutOfRange, NonIntegerResult,
                           NotLengthTwo, RankTooSmall)
from ncfact.groups import ClassId, Element, Group
from ncfact.ncp import NcPoset, strata_codim2


@dataclass(frozen=True)
class Factorization:
    """Tuple of factors; build validated instances via make_factorization."""

    factors: Tuple[Element, ...]

    def __len__(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class LLRow:
    """Per-conjugacy-class data for submaximal factorizations."""

    class_id: ClassId
    representative: Element
    size_in_nc: int
    count: int                 # submaximal factorizations of this type
    r: int                     # pair count |{(r1, r2) : r1 r2 = w}|
    u: int                     # derived degree: count * |W| / ((n-1)! h^(n-1))
    parabolic: Tuple[int, int]  # invariant degrees (d1', h')


def make_factorization(g: Group, factors: Iterable[Element]) -> Factorization:
    """Validate product, non-identity factors, and length sum."""
    fs = tuple(factors)
    if not fs:
        raise ValueError("a factorization needs at least one factor")
    ident = g.identity
    prod = ident
    total = 0
    for w in fs:
        if w == ident:
            raise ValueError("identity factors are not allowed")
        total += g.reflection_length(w)
        prod = g.multiply(prod, w)
    if prod != g.coxeter:
        raise ValueError("product of factors is not the Coxeter element")
    if total != g.rank:
        raise ValueError(f"factor lengths sum to {total}, expected {g.rank}")
    return Factorization(fs)


def _validate_composition(nc: NcPoset, comp: Sequence[int]) -> Tuple[int, ...]:
    parts = tuple(int(x) for x in comp)
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"composition {parts} must have positive parts")
    if sum(parts) != nc.group.rank:
        raise ValueError(f"composition {parts} must sum to the rank "
                         f"{nc.group.rank}")
    return parts


def count_fact_by_composition(nc: NcPoset, comp: Sequence[int]) -> int:
    """Factorizations with the given length composition, by transfer sums."""
    parts = _validate_composition(nc, comp)
    vec = [0] * nc.size
    vec[0] = 1
    for part in parts:
        preds = nc.preds_by_jump[part]
        vec = [sum(vec[i] for i in preds[j]) for j in range(nc.size)]
    return vec[-1]


def count_fact_k(nc: NcPoset, k: int) -> int:
    """Factorizations into exactly k factors (any composition)."""
    n = nc.group.rank
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > n:
        return 0
    strict = [tuple(i for i in nc.preds_all[j] if i != j)
              for j in range(nc.size)]
    vec = [0] * nc.size
    vec[0] = 1
    for _ in range(k):
        vec = [sum(vec[i] for i in strict[j]) for j in range(nc.size)]
    return vec[-1]


def count_reduced(nc: NcPoset) -> int:
    """|Red(c)|: factorizations into rank many reflections."""
    return count_fact_by_composition(nc, (1,) * nc.group.rank)


def r_lambda(g: Group, w: Element) -> int:
    """Number of ordered reflection pairs (r1, r2) with r1 r2 = w."""
    if g.reflection_length(w) != 2:
        raise NotLengthTwo(f"element has length {g.reflection_length(w)}, "
                           "need 2")
    car_npoints = g.npoints
    perm = w.perm
    refl_set = frozenset(r.perm for r in g.reflections)
    count = 0
    for r in refl_set:
        if kernels.compose(kernels.inverse(r, car_npoints), perm,
                           car_npoints) in refl_set:
            count += 1
    return count


def derived_degree(g: Group, count: int) -> int:
    """u with count = (n-1)! h^(n-1) / |W| * u; exact or NonIntegerResult."""
    n = g.rank
    if n < 2:
        raise RankTooSmall("derived degrees need rank >= 2")
    u = Fraction(count * g.order,
                 math.factorial(n - 1) * g.h ** (n - 1))
    if u.denominator != 1:
        raise NonIntegerResult(f"count {count} gives non-integer derived "
                               f"degree {u} for {g.name}")
    return u.numerator


def submaximal_by_class(nc: NcPoset) -> List[LLRow]:
    """Counts of (rank-1)-factor factorizations, split by the conjugacy
    class of the single length-2 factor; row order matches strata_codim2."""
    g = nc.group
    n = g.rank
    if n < 2:
        raise RankTooSmall("submaximal factorizations need rank >= 2")
    size = nc.size
    covers = nc.preds_by_jump[1]
    forward = [0] * size
    forward[0] = 1
    for j in range(1, size):
        forward[j] = sum(forward[i] for i in covers[j])
    succs: List[List[int]] = [[] for _ in range(size)]
    for j in range(size):
        for i in covers[j]:
            succs[i].append(j)
    backward = [0] * size
    backward[size - 1] = 1
    for i in range(size - 2, -1, -1):
        backward[i] = sum(backward[j] for j in succs[i])
    npts = g.npoints
    per_class: Dict[ClassId, int] = {}
    for j in range(size):
        for i in nc.preds_by_jump[2][j]:
            quot = kernels.compose(
                kernels.inverse(nc.perms[i], npts), nc.perms[j], npts)
            cid = nc.class_ids[nc.index[quot]]
            per_class[cid] = per_class.get(cid, 0) + forward[i] * backward[j]
    rows = []
    for cls in strata_codim2(nc):
        count = per_class.pop(cls.class_id)
        rep = cls.representative
        rows.append(LLRow(class_id=cls.class_id, representative=rep,
                          size_in_nc=cls.size_in_nc, count=count,
                          r=r_lambda(g, rep), u=derived_degree(g, count),
                          parabolic=g.parabolic_degrees(rep)))
    if per_class:
        raise AssertionError("quotient classes not among rank-2 strata")
    return rows


def hurwitz_move(g: Group, f: Factorization, i: int,
                 direction: int = 1) -> Factorization:
    """Braid move at window i (1-based): (a, b) -> (aba^-1, a), or the
    inverse (a, b) -> (b, b^-1 a b) when direction is -1."""
    p = len(f.factors)
    if not 1 <= i <= p - 1:
        raise IndexOutOfRange(f"window {i} not in 1..{p - 1}")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    a, b = f.factors[i - 1], f.factors[i]
    if direction == 1:
        moved = (g.multiply(g.multiply(a, b), g.inverse(a)), a)
    else:
        moved = (b, g.multiply(g.multiply(g.inverse(b), a), b))
    return Factorization(f.factors[:i - 1] + moved + f.factors[i + 1:])


def hurwitz_orbit(g: Group, f: Factorization,
                  cap: Optional[int] = None) -> List[Factorization]:
    """Orbit of f under all braid moves, BFS order; BudgetExceeded past cap."""
    npts = g.npoints
    start = tuple(x.perm for x in f.factors)
    p = len(start)
    seen = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for state in frontier:
            for i in range(p - 1):
                a, b = state[i], state[i + 1]
                conj = kernels.compose(kernels.compose(a, b, npts),
                                       kernels.inverse(a, npts), npts)
                back = kernels.compose(kernels.compose(
                    kernels.inverse(b, npts), a, npts), b, npts)
                for t in (state[:i] + (conj, a) + state[i + 2:],
                          state[:i] + (b, back) + state[i + 2:]):
                    if t not in seen:
                        if cap is not None and len(seen) >= cap:
                            raise BudgetExceeded(
                                f"Hurwitz orbit exceeds cap {cap}")
                        seen[t] = None
                        nxt.append(t)
        frontier = nxt
    return [Factorization(tuple(Element(g.name, q) for q in state))
            for state in seen]


def enumerate_by_composition(nc: NcPoset, comp: Sequence[int],
                             cap: Optional[int] = None) -> List[Factorization]:
    """All factorizations with the given composition, explicitly."""
    parts = _validate_composition(nc, comp)
    if cap is not None:
        total = count_fact_by_composition(nc, parts)
        if total > cap:
            raise BudgetExceeded(f"{total} factorizations exceed cap {cap}")
    g = nc.group
    npts = g.npoints
    succs_by_jump: List[Dict[int, List[int]]] = [dict() for _ in parts]
    # succs_by_jump[t][i] = poset successors of i at jump parts[t]
    for t, part in enumerate(parts):
        preds = nc.preds_by_jump[part]
        table: Dict[int, List[int]] = {}
        for j in range(nc.size):
            for i in preds[j]:
                table.setdefault(i, []).append(j)
        succs_by_jump[t] = table
    out: List[Factorization] = []
    factors: List[Element] = []

    def walk(idx: int, t: int) -> None:
        if t == len(parts):
            out.append(Factorization(tuple(factors)))
            return
        for j in succs_by_jump[t].get(idx, ()):
            quot = kernels.compose(
                kernels.inverse(nc.perms[idx], npts), nc.perms[j], npts)
            factors.append(Element(g.name, quot))
            walk(j, t + 1)
            factors.pop()

    walk(0, 0)
    return out


def enumerate_reduced(nc: NcPoset,
                      cap: Optional[int] = None) -> List[Factorization]:
    """All reduced reflection factorizations of c, explicitly."""
    return enumerate_by_composition(nc, (1,) * nc.group.rank, cap=cap)


def concatenation_fibers(nc: NcPoset,
                         cap: Optional[int] = None
                         ) -> Dict[Factorization, int]:
    """Fiber sizes of Red(c) -> fact(2,1,...,1), merging the first two
    reflections; keys are the image factorizations."""
    if nc.group.rank < 2:
        raise RankTooSmall("concatenation needs rank >= 2")
    g = nc.group
    fibers: Dict[Factorization, int] = {}
    for f in enumerate_reduced(nc, cap=cap):
        merged = g.multiply(f.factors[0], f.factors[1])
        image = Factorization((merged,) + f.factors[2:])
        fibers[image] = fibers.get(image, 0) + 1
    return fibers
