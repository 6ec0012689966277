"""Root systems for the exceptional types: closure, counts, exact codim."""

import pytest

from ncfact.exact import Golden
from ncfact.rootdata import build_root_system

# (name, expected root count) — twice the reflection count for these types
CASES = [("H3", 30), ("F4", 48), ("E6", 72), ("E7", 126), ("H4", 120)]


@pytest.mark.parametrize("name,count", CASES)
def test_root_counts(name, count):
    rs = build_root_system(name)
    assert len(rs.roots) == count


def test_roots_closed_under_negation():
    rs = build_root_system("F4")
    for root in rs.roots:
        assert tuple(-x for x in root) in rs.index


def test_reflection_perms_are_involutions_and_halved():
    rs = build_root_system("H3")
    assert len(rs.reflection_perms) == len(rs.roots) // 2
    npoints = len(rs.roots)
    ident = bytes(range(npoints)) if npoints <= 256 else None
    for perm in rs.reflection_perms:
        composed = bytes(perm[perm[i]] for i in range(npoints))
        assert composed == ident


def test_simple_reflections_fix_all_but_two_roots():
    # a reflection fixes every root orthogonal to its own; in a root
    # permutation it moves at least the +/- pair it belongs to
    rs = build_root_system("E6")
    for perm in rs.simple_perms:
        moved = sum(1 for i in range(len(rs.roots)) if perm[i] != i)
        assert moved >= 2 and moved % 2 == 0


def test_codim_matches_moved_space():
    rs = build_root_system("H3")
    ident = bytes(range(len(rs.roots)))
    assert rs.codim(ident) == 0
    for perm in rs.simple_perms:
        assert rs.codim(perm) == 1
    # product of the three simples is a Coxeter element: codim = rank
    c = ident
    for perm in rs.simple_perms:
        c = bytes(perm[c[i]] for i in range(len(c)))
    assert rs.codim(c) == 3


def test_gram_is_symmetric_with_norm_two_diagonal():
    for name in ("H3", "F4", "E6"):
        rs = build_root_system(name)
        n = len(rs.gram)
        for i in range(n):
            for j in range(n):
                assert rs.gram[i][j] == rs.gram[j][i]
    h3 = build_root_system("H3")
    assert all(h3.gram[i][i] == Golden.of(2) for i in range(3))


def test_root_systems_are_cached():
    assert build_root_system("H3") is build_root_system("H3")
