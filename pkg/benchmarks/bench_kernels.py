"""Compare the numba and numpy kernel backends.

    python benchmarks/bench_kernels.py [--kinds raf,afrad] [--size 60] [--repeat 3]

Reports first-call (compile) time, then steady-state time for the PSM scan
and the subset scan over a slice of the seeded corpus, plus one larger
framework per kind so the scans are long enough to matter.
"""

from __future__ import annotations

import argparse
import time

from arglp import _kernels, direct
from arglp.framework import Framework, Kind
from arglp.generate import GenSpec, corpus, random_framework
from arglp.program import compile_framework
from arglp.psm import enumerate_psms


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workload(kinds, size):
    fs = []
    for kind in kinds:
        fs += corpus(kind, size)
        fs.append(random_framework(GenSpec(kind, 8, 6, 3 if kind.has_supports else 0,
                                           0.3 if kind.recursive else 0.0, seed=99)))
    return fs


def big_scan_framework(pairs=6, cycle=3):
    """Mutually attacking pairs plus an odd cycle: every atom stays free after pruning."""
    args, atts = set(), {}
    for i in range(pairs):
        a, b = f"p{i}a", f"p{i}b"
        args |= {a, b}
        atts[f"x{i}"], atts[f"y{i}"] = (a, b), (b, a)
    for i in range(cycle):
        args.add(f"c{i}")
        atts[f"z{i}"] = (f"c{i}", f"c{(i + 1) % cycle}")
    return Framework(Kind.AF, args, atts)


def run(fs, backend):
    for f in fs:
        enumerate_psms(compile_framework(f), force=True, backend=backend)
        direct.complete_extensions(f, force=True, backend=backend)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kinds", default=",".join(k.value for k in Kind))
    ap.add_argument("--size", type=int, default=60, help="corpus instances per kind")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    kinds = [Kind.parse(k) for k in args.kinds.split(",")]
    fs = workload(kinds, args.size)
    backends = ["numpy"] + (["numba"] if _kernels.numba_available() else [])
    print(f"{len(fs)} frameworks, kinds={args.kinds}")
    results = {}
    for name in backends:
        t0 = time.perf_counter()
        run(fs[:1], name)
        first = time.perf_counter() - t0
        steady = _time(lambda: run(fs, name), args.repeat)
        results[name] = steady
        print(f"{name:6s} first call {first:7.3f} s   steady {steady:7.3f} s")
    if len(results) == 2:
        print(f"speedup numba/numpy: {results['numpy'] / results['numba']:.2f}x")

    big = big_scan_framework()
    p = compile_framework(big)
    print(f"large scan: {len(p.atoms)} free atoms ({3 ** len(p.atoms)} candidates), "
          f"{2 ** len(p.atoms)} subsets")
    scan = {}
    for name in backends:
        scan[name] = _time(lambda: (enumerate_psms(p, force=True, backend=name),
                                    direct.complete_extensions(big, force=True, backend=name)), args.repeat)
        print(f"{name:6s} {scan[name]:7.3f} s")
    if len(scan) == 2:
        print(f"speedup numba/numpy: {scan['numpy'] / scan['numba']:.2f}x")


if __name__ == "__main__":
    main()
