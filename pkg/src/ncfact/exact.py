"""Exact scalar arithmetic for root-system geometry.

Crystallographic types use Fraction.  The H types live over Q(phi) with
phi^2 = phi + 1; Golden stores a + b*phi with Fraction coefficients and is an
exact field element (no floats anywhere).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Union

Scalar = Union[Fraction, "Golden"]


@dataclass(frozen=True, slots=True)
class Golden:
    """a + b*phi with phi the golden ratio, phi^2 = phi + 1."""

    a: Fraction
    b: Fraction

    @staticmethod
    def of(a: int | Fraction, b: int | Fraction = 0) -> "Golden":
        return Golden(Fraction(a), Fraction(b))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __add__(self, other: "Golden") -> "Golden":
        return Golden(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Golden") -> "Golden":
        return Golden(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Golden":
        return Golden(-self.a, -self.b)

    def __mul__(self, other: "Golden") -> "Golden":
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return Golden(a1 * a2 + b1 * b2, a1 * b2 + a2 * b1 + b1 * b2)

    def inverse(self) -> "Golden":
        # (a + b*phi)^-1 = ((a + b) - b*phi) / (a^2 + a*b - b^2)
        norm = self.a * self.a + self.a * self.b - self.b * self.b
        if not norm:
            raise ZeroDivisionError("Golden division by zero")
        return Golden((self.a + self.b) / norm, -self.b / norm)

    def __truediv__(self, other: "Golden") -> "Golden":
        return self * other.inverse()

    def sort_key(self) -> tuple:
        return (self.a, self.b)


GOLDEN_ZERO = Golden.of(0)
GOLDEN_ONE = Golden.of(1)


def matrix_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank by Gaussian elimination over any exact field scalar."""
    work: List[List[Scalar]] = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        lead = work[rank][col]
        for i in range(rank + 1, len(work)):
            if work[i][col]:
                f = work[i][col] / lead
                work[i] = [x - f * y for x, y in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank
