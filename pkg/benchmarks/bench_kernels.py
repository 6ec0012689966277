"""Benchmark the permutation kernels: pure Python vs compiled backend.

Workloads are taken from real group data (reflection generating sets, NC
poset rows) so the mix of permutation sizes matches actual use.  Run as

    python benchmarks/bench_kernels.py [--repeat N] [--heavy]

The compiled column disappears when the extension is unavailable (e.g.
after installing with NCFACT_PURE=1 environments still build it, but an
interpreter without the extension simply skips it).
"""

from __future__ import annotations

import argparse
import random
import time
from typing import Callable, List, Optional, Tuple

from ncfact import build_group, build_nc
from ncfact.kernels import pure

try:
    from ncfact.kernels import _fastperm
except ImportError:
    _fastperm = None


def _walk_perms(kernel, gens: List[bytes], npoints: int, count: int,
                seed: int = 7) -> List[bytes]:
    rng = random.Random(seed)
    cur = kernel.identity(npoints)
    out = []
    for _ in range(count):
        cur = kernel.compose(cur, rng.choice(gens), npoints)
        out.append(cur)
    return out


def _time(fn: Callable[[], object], repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(heavy: bool) -> List[Tuple[str, Callable[[object], object]]]:
    b4 = build_group("B4")
    h3 = build_group("H3")
    wide = build_group("I2(150)")
    f4 = build_group("F4")
    nc_f4 = build_nc(f4)

    b4_gens = [r.perm for r in b4.reflections]
    h3_gens = [r.perm for r in h3.reflections]
    wide_gens = [r.perm for r in wide.reflections]

    jobs: List[Tuple[str, Callable[[object], object]]] = []

    def compose_job(gens, npoints, label, count=20000):
        def run(kernel):
            perms = _walk_perms(kernel, gens, npoints, 64)
            acc = kernel.identity(npoints)
            for i in range(count):
                acc = kernel.compose(acc, perms[i % len(perms)], npoints)
            return acc
        jobs.append((f"compose x{count} ({label})", run))

    compose_job(b4_gens, b4.npoints, f"{b4.npoints} pts, 1 byte")
    compose_job(wide_gens, wide.npoints, f"{wide.npoints} pts, u16")

    def bfs_job(gens, npoints, label):
        jobs.append((f"bfs_lengths ({label})",
                     lambda kernel: kernel.bfs_lengths(gens, npoints)))

    bfs_job(h3_gens, h3.npoints, "H3, |W|=120")
    bfs_job(b4_gens, b4.npoints, "B4, |W|=384")
    if heavy:
        e6 = build_group("E6")
        bfs_job([r.perm for r in e6.reflections], e6.npoints,
                "E6, |W|=51840")

    jobs.append(("conj_orbit (B4 reflections)",
                 lambda kernel: kernel.conj_orbit(b4_gens[0], b4_gens,
                                                  b4.npoints)))

    lengths = f4.length_table()
    perms = list(nc_f4.perms)
    ranks = list(nc_f4.ranks)
    jobs.append(("leq_rows (NC(F4), 105 elements)",
                 lambda kernel: kernel.leq_rows(perms, ranks, lengths,
                                                f4.npoints)))
    return jobs


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per workload; best time wins")
    parser.add_argument("--heavy", action="store_true",
                        help="include the E6 BFS (tens of seconds in pure)")
    args = parser.parse_args(argv)

    jobs = workloads(args.heavy)
    name_w = max(len(name) for name, _ in jobs)
    if _fastperm is not None:
        print(f"{'workload':<{name_w}}  {'pure':>10}  {'compiled':>10}"
              f"  {'speedup':>8}")
        for name, run in jobs:
            t_pure = _time(lambda: run(pure), args.repeat)
            t_fast = _time(lambda: run(_fastperm), args.repeat)
            ratio = t_pure / t_fast if t_fast > 0 else float("inf")
            print(f"{name:<{name_w}}  {t_pure:>9.4f}s  {t_fast:>9.4f}s"
                  f"  {ratio:>7.1f}x")
    else:
        print(f"{'workload':<{name_w}}  {'pure':>10}   (no compiled backend)")
        for name, run in jobs:
            t_pure = _time(lambda: run(pure), args.repeat)
            print(f"{name:<{name_w}}  {t_pure:>9.4f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
