"""Kernel backends: algebra, orders, BFS, order rows — pure vs. compiled.

Every test runs against each available backend, and the cross-backend test
asserts byte-identical results so the compiled path can never drift from
the reference implementation.
"""

import itertools
import random

import pytest

from ncfact.kernels import pure

BACKENDS = [pure]
try:
    from ncfact.kernels import _fastperm
    BACKENDS.append(_fastperm)
except ImportError:  # compiled extension is optional
    pass


@pytest.fixture(params=BACKENDS,
                ids=[m.__name__.rsplit(".", 1)[-1] for m in BACKENDS])
def k(request):
    return request.param


def _perm(images, npoints):
    if npoints <= 256:
        return bytes(images)
    out = bytearray()
    for x in images:
        out += x.to_bytes(2, "little")
    return bytes(out)


def _random_perm(rng, npoints):
    images = list(range(npoints))
    rng.shuffle(images)
    return _perm(images, npoints)


def test_identity(k):
    assert k.identity(5) == bytes(range(5))


def test_compose_applies_right_factor_first(k):
    # out[x] = a[b[x]]: with b the 3-cycle (0 1 2) and a the swap (0 1),
    # point 0 goes b: 0->1 then a: 1->0.
    b = _perm([1, 2, 0], 3)
    a = _perm([1, 0, 2], 3)
    assert k.compose(a, b, 3) == _perm([0, 2, 1], 3)


@pytest.mark.parametrize("npoints", [6, 256, 300])
def test_group_axioms_random(k, npoints):
    rng = random.Random(7)
    ident = k.identity(npoints)
    for _ in range(25):
        a = _random_perm(rng, npoints)
        b = _random_perm(rng, npoints)
        c = _random_perm(rng, npoints)
        assert k.compose(a, k.inverse(a, npoints), npoints) == ident
        assert k.compose(k.inverse(a, npoints), a, npoints) == ident
        left = k.compose(k.compose(a, b, npoints), c, npoints)
        right = k.compose(a, k.compose(b, c, npoints), npoints)
        assert left == right


def test_perm_order(k):
    assert k.perm_order(k.identity(4), 4) == 1
    assert k.perm_order(_perm([1, 0, 2, 3], 4), 4) == 2
    assert k.perm_order(_perm([1, 2, 0, 4, 3], 5), 5) == 6
    wide = _perm(list(range(1, 300)) + [0], 300)
    assert k.perm_order(wide, 300) == 300


def _s4_transpositions(npoints=4):
    perms = []
    for i, j in itertools.combinations(range(npoints), 2):
        images = list(range(npoints))
        images[i], images[j] = images[j], images[i]
        perms.append(_perm(images, npoints))
    return perms


def test_bfs_lengths_vs_brute(k):
    gens = _s4_transpositions()
    lengths = k.bfs_lengths(gens, 4)
    assert len(lengths) == 24
    # brute-force: length = min word length over all products
    brute = {k.identity(4): 0}
    frontier = list(brute)
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for x in frontier:
            for g in gens:
                y = k.compose(x, g, 4)
                if y not in brute:
                    brute[y] = depth
                    nxt.append(y)
        frontier = nxt
    assert dict(lengths) == brute
    # absolute length of a permutation: n minus number of cycles
    assert lengths[_perm([1, 2, 3, 0], 4)] == 3
    assert lengths[_perm([1, 0, 3, 2], 4)] == 2


def test_bfs_insertion_order_is_bfs(k):
    gens = _s4_transpositions()
    lengths = list(k.bfs_lengths(gens, 4).values())
    assert lengths == sorted(lengths)


def test_conj_orbit(k):
    gens = _s4_transpositions()
    orbit = k.conj_orbit(gens[0], gens, 4)
    assert sorted(orbit) == sorted(gens)  # all transpositions conjugate
    four_cycle = _perm([1, 2, 3, 0], 4)
    assert len(k.conj_orbit(four_cycle, gens, 4)) == 6


def test_leq_rows_vs_brute(k):
    gens = _s4_transpositions()
    lengths = k.bfs_lengths(gens, 4)
    members = sorted(lengths, key=lambda p: (lengths[p], p))
    ranks = [lengths[p] for p in members]
    rows = k.leq_rows(members, ranks, dict(lengths), 4)
    for i, u in enumerate(members):
        for j, v in enumerate(members):
            expect = (lengths[u]
                      + lengths[k.compose(k.inverse(u, 4), v, 4)]
                      == lengths[v])
            assert bool(rows[i] >> j & 1) == expect


def test_leq_rows_wide_poset(k):
    # >31 elements exercises word-size boundaries in bit-row builders
    npoints = 5
    perms = []
    for i, j in itertools.combinations(range(npoints), 2):
        images = list(range(npoints))
        images[i], images[j] = images[j], images[i]
        perms.append(_perm(images, npoints))
    lengths = k.bfs_lengths(perms, npoints)
    assert len(lengths) == 120
    members = sorted(lengths, key=lambda p: (lengths[p], p))
    ranks = [lengths[p] for p in members]
    rows = k.leq_rows(members, ranks, dict(lengths), npoints)
    ident_row = rows[0]
    assert ident_row == (1 << 120) - 1  # identity is below everything


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled backend not built")
def test_backends_agree():
    fast = BACKENDS[1]
    rng = random.Random(11)
    for npoints in (5, 300):
        a = _random_perm(rng, npoints)
        b = _random_perm(rng, npoints)
        assert pure.compose(a, b, npoints) == fast.compose(a, b, npoints)
        assert pure.inverse(a, npoints) == fast.inverse(a, npoints)
        assert pure.perm_order(a, npoints) == fast.perm_order(a, npoints)
    gens = _s4_transpositions()
    assert pure.bfs_lengths(gens, 4) == fast.bfs_lengths(gens, 4)
    assert pure.conj_orbit(gens[0], gens, 4) == fast.conj_orbit(gens[0],
                                                                gens, 4)
    lengths = pure.bfs_lengths(gens, 4)
    members = sorted(lengths, key=lambda p: (lengths[p], p))
    ranks = [lengths[p] for p in members]
    assert (pure.leq_rows(members, ranks, lengths, 4)
            == fast.leq_rows(members, ranks, lengths, 4))


def test_env_var_selects_pure_backend():
    import subprocess
    import sys
    out = subprocess.run(
        [sys.executable, "-c",
         "from ncfact import kernels; print(kernels.BACKEND)"],
        env={"NCFACT_PURE": "1", "PATH": "/usr/bin:/bin"},
        capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "pure"
