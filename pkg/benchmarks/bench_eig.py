"""Compare the eigenvalue kernels: pure Python, compiled, and LAPACK (numpy).

    python benchmarks/bench_eig.py [--sizes 5,14,28,70] [--reps 20]
"""
import argparse
import time

import numpy as np

from jonesrep._kernels import eigvals_cy, eigvals_py
from jonesrep.braids import catalog_word
from jonesrep.spectral import matrix_at_x


def bench(fn, mats, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        for m in mats:
            fn(m)
        best = min(best, time.perf_counter() - t0)
    return best / len(mats)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="5,14,28,70")
    ap.add_argument("--reps", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    kernels = [("python", lambda m: eigvals_py(m.tolist()))]
    if eigvals_cy is not None:
        kernels.append(("cython", eigvals_cy))
    kernels.append(("numpy", np.linalg.eigvals))

    print("%-22s" % "case" + "".join("%14s" % k for k, _ in kernels))
    cases = []
    for n in (int(s) for s in args.sizes.split(",")):
        mats = [rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) for _ in range(8)]
        cases.append(("random %dx%d" % (n, n), mats))
    # a realistic workload: one grid row of a spectral scan
    w = catalog_word("brown")
    cases.append(("brown V^{6,0} scan", [np.asarray(matrix_at_x(w, 6, 0, x)) for x in np.linspace(0, 1, 32)]))
    for name, mats in cases:
        times = [bench(fn, mats, args.reps) for _, fn in kernels]
        print("%-22s" % name + "".join("%12.1fus" % (t * 1e6) for t in times))


if __name__ == "__main__":
    main()
