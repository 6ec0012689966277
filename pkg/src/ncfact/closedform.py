"""Closed-form counting identities and the per-class factorization table.

The table rows are stored symbolically in the parameters n and e with
applicability predicates, evaluated exactly (integer literals become
Fractions before eval).  Rows for five rank >= 3 types that have no faithful
carrier here (G24, G27, G29, G33, G34) ship as reference records: they join
the row-level identity checks and the machine-readable export, but no group
construction uses them.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ncfact.errors import NonIntegerResult, NoTableRow, RankTooSmall
from ncfact.families import GroupSpec
from ncfact.ncp import fuss_catalan

__all__ = [
    "ExpectedRow", "ll_number", "submax_total", "deg_discriminant",
    "deg_jacobian", "sum_derived_degrees", "prefactor_of",
    "expected_ll_data", "table_records", "fuss_catalan",
]

_INT_RE = re.compile(r"(?<![\w.])(\d+)")


def _eval_expr(expr: str, n: Optional[int] = None,
               e: Optional[int] = None) -> Fraction:
    """Evaluate a table expression exactly (ints promoted to Fractions)."""
    wrapped = _INT_RE.sub(r"F(\1)", expr)
    names: Dict[str, object] = {"F": Fraction, "__builtins__": {}}
    if n is not None:
        names["n"] = Fraction(n)
    if e is not None:
        names["e"] = Fraction(e)
    value = eval(wrapped, names)  # noqa: S307 - fixed in-package expressions
    return Fraction(value)


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResult(f"{what} = {value} is not an integer")
    return value.numerator


def ll_number(spec: GroupSpec) -> int:
    """n! h^n / |W|: the number of reduced reflection factorizations."""
    n = spec.rank
    return _as_int(Fraction(math.factorial(n) * spec.h ** n, spec.order),
                   f"LL number of {spec.name}")


def submax_total(spec: GroupSpec) -> int:
    """(n-1)! h^(n-1) / |W| * ((n-1)(n-2)/2 * h + d_1 + ... + d_(n-1))."""
    n = spec.rank
    if n < 2:
        raise RankTooSmall("submaximal factorizations need rank >= 2")
    small_degrees = sum(spec.degrees) - spec.h
    inner = Fraction((n - 1) * (n - 2), 2) * spec.h + small_degrees
    value = Fraction(math.factorial(n - 1) * spec.h ** (n - 1),
                     spec.order) * inner
    return _as_int(value, f"submaximal total of {spec.name}")


def deg_discriminant(spec: GroupSpec) -> int:
    """Degree n(n-1)h of the discriminant of the length-n-1 fiber map."""
    n = spec.rank
    return n * (n - 1) * spec.h


def deg_jacobian(spec: GroupSpec) -> int:
    """h * (n(n+1)/2 - 1) - (d_1 + ... + d_(n-1))."""
    n = spec.rank
    small_degrees = sum(spec.degrees) - spec.h
    return spec.h * (n * (n + 1) // 2 - 1) - small_degrees


def sum_derived_degrees(spec: GroupSpec) -> int:
    """Sum of the u entries over all rank-2 classes: deg D - deg J."""
    return deg_discriminant(spec) - deg_jacobian(spec)


def prefactor_of(spec: GroupSpec) -> Fraction:
    """(n-2)! h^(n-1) / |W|, the per-class count divided by (n-1) u."""
    n = spec.rank
    if n < 2:
        raise RankTooSmall("per-class prefactor needs rank >= 2")
    return Fraction(math.factorial(n - 2) * spec.h ** (n - 1), spec.order)


# Symbolic rows.  entries are (r_expr, u_expr) pairs; u evaluating to zero
# means the class is absent at that parameter.  Reference rows carry their
# degrees so row-level identities remain checkable.
_TABLE: Tuple[dict, ...] = (
    dict(row="A", realizable=True, params="n",
         applies="A(n), n >= 2 (also D3 = A3)",
         prefactor="(n+1)**(n-2) / (n*(n-1))",
         entries=(("2", "n*(n-1)*(n-2)/2"), ("3", "n*(n-1)"))),
    dict(row="B", realizable=True, params="n",
         applies="B(n) = G(2,1,n), n >= 2",
         prefactor="n**(n-2) / (2*(n-1))",
         entries=(("2", "(n-1)*(n-2)*(n-3)"), ("2", "2*(n-1)*(n-2)"),
                  ("3", "2*(n-1)*(n-2)"), ("4", "2*(n-1)"))),
    dict(row="I2", realizable=True, params="e",
         applies="I2(e), e >= 2 (e = 2 is D2)",
         prefactor="1/2",
         entries=(("e", "2"),)),
    dict(row="GEEN-large", realizable=True, params="n,e",
         applies="G(e,e,n), n >= 5 (e = 2 is D(n))",
         prefactor="(n-1)**(n-2) / n",
         entries=(("2", "n*(n-2)*(n-3)*e/2"), ("3", "n*(n-2)*e"),
                  ("e", "n"))),
    dict(row="GEEN-3-coprime", realizable=True, params="e",
         applies="G(e,e,3), 3 not dividing e", rank=3,
         prefactor="2/3",
         entries=(("3", "3*e"), ("e", "3"))),
    dict(row="GEEN-3-divisible", realizable=True, params="e",
         applies="G(e,e,3), 3 divides e", rank=3,
         prefactor="2/3",
         entries=(("3", "e"), ("3", "e"), ("3", "e"), ("e", "3"))),
    dict(row="GEEN-4-odd", realizable=True, params="e",
         applies="G(e,e,4), e odd", rank=4,
         prefactor="9/4",
         entries=(("2", "4*e"), ("3", "8*e"), ("e", "4"))),
    dict(row="GEEN-4-even", realizable=True, params="e",
         applies="G(e,e,4), e even (e = 2 is D4)", rank=4,
         prefactor="9/4",
         entries=(("2", "2*e"), ("2", "2*e"), ("3", "8*e"), ("e", "4"))),
    dict(row="H3", realizable=True, params="", applies="H3", rank=3, h=10,
         prefactor="5/6", entries=(("2", "6"), ("3", "6"), ("5", "6"))),
    dict(row="F4", realizable=True, params="", applies="F4", rank=4, h=12,
         prefactor="3",
         entries=(("2", "24"), ("3", "8"), ("3", "8"), ("4", "12"))),
    dict(row="H4", realizable=True, params="", applies="H4", rank=4, h=30,
         prefactor="15/4", entries=(("2", "60"), ("3", "40"), ("5", "24"))),
    dict(row="E6", realizable=True, params="", applies="E6", rank=6, h=12,
         prefactor="576/5", entries=(("2", "90"), ("3", "60"))),
    dict(row="E7", realizable=True, params="", applies="E7", rank=7, h=18,
         prefactor="19683/14", entries=(("2", "210"), ("3", "112"))),
    dict(row="E8", realizable=True, params="", applies="E8", rank=8, h=30,
         prefactor="1265625/56", entries=(("2", "504"), ("3", "224"))),
    dict(row="G24", realizable=False, params="", applies="reference only",
         rank=3, h=14, degrees=(4, 6, 14),
         prefactor="7/12", entries=(("3", "12"), ("4", "12"))),
    dict(row="G27", realizable=False, params="", applies="reference only",
         rank=3, h=30, degrees=(6, 12, 30),
         prefactor="5/12",
         entries=(("3", "12"), ("3", "12"), ("4", "12"), ("5", "12"))),
    dict(row="G29", realizable=False, params="", applies="reference only",
         rank=4, h=20, degrees=(4, 8, 12, 20),
         prefactor="25/12",
         entries=(("2", "24"), ("3", "48"), ("4", "12"))),
    dict(row="G33", realizable=False, params="", applies="reference only",
         rank=5, h=18, degrees=(4, 6, 10, 12, 18),
         prefactor="243/20", entries=(("2", "60"), ("3", "80"))),
    dict(row="G34", realizable=False, params="", applies="reference only",
         rank=6, h=42, degrees=(6, 12, 18, 24, 30, 42),
         prefactor="2401/30", entries=(("2", "270"), ("3", "240"))),
)


def table_records() -> List[dict]:
    """The embedded table, verbatim, as JSON-ready records."""
    records = []
    for row in _TABLE:
        rec = dict(row=row["row"], realizable=row["realizable"],
                   applies=row["applies"], params=row["params"],
                   prefactor=row["prefactor"],
                   entries=[[r, u] for r, u in row["entries"]])
        for key in ("rank", "h", "degrees"):
            if key in row:
                rec[key] = list(row[key]) if key == "degrees" else row[key]
        records.append(rec)
    return records


@dataclass(frozen=True)
class ExpectedRow:
    """A table row instantiated at concrete parameters; zero-u entries
    dropped.  counts[i] = prefactor * (rank - 1) * entries[i].u."""

    label: str
    prefactor: Fraction
    entries: Tuple[Tuple[int, int], ...]
    counts: Tuple[int, ...]


def _row_by_name(name: str) -> dict:
    for row in _TABLE:
        if row["row"] == name:
            return row
    raise KeyError(name)


def _route(spec: GroupSpec) -> Tuple[str, Optional[int], Optional[int]]:
    """Pick (row name, n substitution, e substitution) for a spec."""
    fam = spec.family
    if fam == "A":
        return "A", spec.n, None
    if fam == "B":
        return "B", spec.n, None
    if fam == "I2":
        return "I2", None, spec.d
    if fam in ("D", "GEEN"):
        e = spec.d
        n = spec.n
        if n == 2:
            return "I2", None, e
        if n == 3:
            if e == 2:
                return "A", 3, None
            return ("GEEN-3-divisible" if e % 3 == 0
                    else "GEEN-3-coprime"), None, e
        if n == 4:
            return ("GEEN-4-even" if e % 2 == 0
                    else "GEEN-4-odd"), None, e
        return "GEEN-large", n, e
    if fam in ("H3", "H4", "F4", "E6", "E7", "E8"):
        return fam, None, None
    raise NoTableRow(
        f"no per-class table row covers {spec.name}; rows exist for "
        "A, B = G(2,1,n), D, I2, G(e,e,n), and the exceptional types")


def expected_ll_data(spec: GroupSpec) -> ExpectedRow:
    """Closed-form per-class (r, u, count) data for the group."""
    if spec.rank < 2:
        raise RankTooSmall(f"{spec.name} has rank {spec.rank}; per-class "
                           "data needs rank >= 2")
    row_name, n_sub, e_sub = _route(spec)
    row = _row_by_name(row_name)
    entries: List[Tuple[int, int]] = []
    for r_expr, u_expr in row["entries"]:
        u = _as_int(_eval_expr(u_expr, n=n_sub, e=e_sub),
                    f"table u entry {u_expr!r}")
        if u == 0:
            continue
        r = _as_int(_eval_expr(r_expr, n=n_sub, e=e_sub),
                    f"table r entry {r_expr!r}")
        entries.append((r, u))
    prefactor = _eval_expr(row["prefactor"], n=n_sub, e=e_sub)
    counts = tuple(
        _as_int(prefactor * (spec.rank - 1) * u,
                f"per-class count for {spec.name}")
        for _, u in entries)
    return ExpectedRow(label=row["row"], prefactor=prefactor,
                       entries=tuple(entries), counts=counts)
