"""Time the Cython kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--sizes 8 32 64] [--repeat 5]

Prints the best-of-``repeat`` wall time per call for each kernel and size,
and the speedup of the compiled core.
"""
import argparse
import timeit

import numpy as np

from conjulin import _pykernels

try:
    from conjulin import _ckernels
except ImportError:
    _ckernels = None


def cases(n, rng):
    X = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    H = np.ascontiguousarray((X + X.conj().T) / 2)
    P = np.ascontiguousarray(X @ X.conj().T + n * np.eye(n))
    B = np.ascontiguousarray(np.hstack([X, X[:, : n // 2] * (1 + 2j)]))
    F = np.ascontiguousarray(rng.standard_normal((2 * n, 2 * n)))
    rhs = np.ascontiguousarray(rng.standard_normal((n, 4)) + 0j)
    L, _ = _pykernels.cholesky(P, 0.0)
    tol = 1e-12 * np.linalg.norm(H)
    return {
        "jacobi_eigvalsh": lambda k: k.jacobi_eigvalsh(H, tol, 100),
        "cholesky": lambda k: k.cholesky(P, 0.0),
        "tri_solve": lambda k: k.tri_solve(L, rhs),
        "mgs": lambda k: k.mgs(B, np.full(B.shape[1], 1e-10)),
        "row_reduce (real 2n)": lambda k: k.row_reduce(F, 1e-10),
    }


def best_time(fn, repeat):
    number = 1
    while timeit.timeit(fn, number=number) < 0.05 and number < 10_000:
        number *= 4
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 32, 64])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("Cython extension not built; run `python3 setup.py build_ext --inplace` first.")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<22}{'n':>5}{'python [ms]':>14}{'cython [ms]':>14}{'speedup':>10}")
    for n in args.sizes:
        for name, call in cases(n, rng).items():
            t_py = best_time(lambda: call(_pykernels), args.repeat)
            if _ckernels is None:
                print(f"{name:<22}{n:>5}{t_py * 1e3:>14.3f}{'-':>14}{'-':>10}")
                continue
            t_c = best_time(lambda: call(_ckernels), args.repeat)
            print(f"{name:<22}{n:>5}{t_py * 1e3:>14.3f}{t_c * 1e3:>14.3f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
