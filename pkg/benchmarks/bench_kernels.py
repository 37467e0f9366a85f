"""Time the compiled and pure-Python tridiagonal kernels on the oracle's matrices.

    python benchmarks/bench_kernels.py [--sizes 500 2000 8000] [--count 5] [--repeat 3]
"""

import argparse
import timeit

from curved_kepler import _kernels_py
from curved_kepler.grid import build_grid
from curved_kepler.model import ManifoldKind, ModelParams
from curved_kepler.oracle import EIG_ATOL, EIG_RTOL, INVIT_MAXIT, INVIT_TOL
from curved_kepler.operators import sturm_liouville_form

try:
    from curved_kepler import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def workload(impl, form, count):
    lams = impl.bisect_eigenvalues(form.diag, form.offdiag, count, EIG_RTOL, EIG_ATOL)
    for lam in lams:
        impl.inverse_iteration(form.diag, form.offdiag, float(lam), INVIT_TOL, INVIT_MAXIT)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[500, 2000, 8000])
    parser.add_argument("--count", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if _kernels_c is None:
        print("compiled extension not built; timing the pure-Python backend only")
    else:
        backends.append(("cython", _kernels_c))

    kind = ManifoldKind.sphere()
    print(f"{'N':>6} " + " ".join(f"{name:>12}" for name, _ in backends) + f" {'speedup':>9}")
    for N in args.sizes:
        form = sturm_liouville_form(kind, ModelParams(), 0, 0, build_grid(kind, N))
        times = [min(timeit.repeat(lambda: workload(impl, form, args.count), number=1, repeat=args.repeat))
                 for _, impl in backends]
        speedup = f"{times[0] / times[1]:9.1f}" if len(times) == 2 else f"{'-':>9}"
        print(f"{N:>6} " + " ".join(f"{t * 1e3:10.1f}ms" for t in times) + f" {speedup}")


if __name__ == "__main__":
    main()
