"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--sizes 8 16 32 64]

Prints one row per (kernel, size) with the best-of-repeat time for each backend.
"""

import argparse
import sys
import time

import numpy as np

from circledigons import kernels
from circledigons.arrangement import detect_digons_pairwise
from circledigons.generators import GeneratorParams, random_family, trial_seed
from circledigons.graph import build_colored_graph
from circledigons.sphere import build_doubled_graph, verify_gprime


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def digon_case(n):
    fam = random_family(GeneratorParams(n, seed=n, d_min=0.5 / n))
    cx, cy, r = fam.arrays()
    return lambda name: kernels.get(name).pairwise_digons(cx, cy, r, fam.tol)


def arc_case(m):
    rng = np.random.default_rng(m)
    pts = rng.normal(size=(m, 3))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    ids = np.array([(i, (i + 1 + int(rng.integers(m - 1))) % m) for i in range(m)], dtype=np.int64)
    ends = np.hstack([pts[ids[:, 0]], pts[ids[:, 1]]])
    return lambda name: kernels.get(name).arc_crossings(ends, ids, 1e-9)


def pipeline_case(trials):
    fams = [random_family(GeneratorParams(3 + s % 10, trial_seed(1, s))) for s in range(trials)]

    def run(name):
        for fam in fams:
            g = build_colored_graph(fam, detect_digons_pairwise(fam, backend=name))
            if not g.degenerate:
                verify_gprime(build_doubled_graph(g), backend=name)
    return run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 64])
    args = ap.parse_args(argv)

    names = sorted(kernels.BACKENDS)
    if "cython" not in names:
        print("compiled kernels not built; only the fallback is timed", file=sys.stderr)
    print(f"{'kernel':<18}{'size':>6}" + "".join(f"{n + ' ms':>14}" for n in names) + f"{'speedup':>10}")
    rows = [("pairwise_digons", n, digon_case(n)) for n in args.sizes]
    rows += [("arc_crossings", 4 * n, arc_case(4 * n)) for n in args.sizes]
    rows += [("pipeline x200", 200, pipeline_case(200))]
    for label, size, case in rows:
        ms = {name: 1e3 * best_of(lambda: case(name), args.repeat) for name in names}
        speed = f"{ms['python'] / ms['cython']:.1f}x" if "cython" in ms else "-"
        print(f"{label:<18}{size:>6}" + "".join(f"{ms[n]:>14.3f}" for n in names) + f"{speed:>10}")


if __name__ == "__main__":
    main()
