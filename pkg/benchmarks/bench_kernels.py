"""Timing comparison of the two kernel backends.

Runs the branch-momentum grid and the batched quaternion product through
the pure-numpy kernels and, when numba is importable and not disabled via
QDIRAC_NO_NUMBA=1, through the @njit kernels, then prints per-call times
and the speed ratio for each problem size. Before timing, the script
re-checks that both backends return bit-identical arrays on the benchmark
inputs; a mismatch there is a bug, not a tolerance question, and aborts.

Run from the repository root after installing the package:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 10000,1000000 --repeats 9

The first call into each jit kernel compiles it; one untimed warmup call
per function and size keeps compilation and cache effects out of the
numbers. Reported times are the best of --repeats runs.
"""

from __future__ import annotations

import argparse
import sys
from timeit import default_timer

import numpy as np

from qdirac._kernels import USING_NUMBA, _mom2_grid_numpy, _quat_mul_numpy

if USING_NUMBA:
    from qdirac._kernels import _mom2_grid_jit, _quat_mul_jit

# Fixed step parameters for the grid kernel; any values away from the mass
# shell would do, these keep every energy propagating on both branches.
MASS, V0, W_ABS = 1.0, -0.7, 0.4


def best_time(fn, args, repeats: int) -> float:
    fn(*args)  # warmup: jit compilation on the first call, caches after
    best = float("inf")
    for _ in range(repeats):
        t0 = default_timer()
        fn(*args)
        dt = default_timer() - t0
        if dt < best:
            best = dt
    return best


def check_bitwise(name: str, ref, out) -> None:
    for k, (a, b) in enumerate(zip(ref, out)):
        if not np.array_equal(a, b):
            sys.exit("backends disagree bitwise on %s output %d" % (name, k))


def grid_args(n: int, rng):
    energies = rng.uniform(1.2, 9.0, n)
    return (energies, MASS, V0, W_ABS)


def quat_args(n: int, rng):
    return tuple(rng.standard_normal(n) for _ in range(8))


def run_case(name: str, make_args, sizes, repeats: int, rng) -> None:
    print(name)
    header = "%10s  %12s  %12s  %8s" % ("n", "numpy", "numba", "ratio")
    print(header)
    numpy_fn = _mom2_grid_numpy if name == "branch_mom2_grid" else _quat_mul_numpy
    jit_fn = None
    if USING_NUMBA:
        jit_fn = _mom2_grid_jit if name == "branch_mom2_grid" else _quat_mul_jit
    for n in sizes:
        args = make_args(n, rng)
        t_np = best_time(numpy_fn, args, repeats)
        if jit_fn is None:
            print("%10d  %10.3e s  %12s  %8s" % (n, t_np, "-", "-"))
            continue
        check_bitwise(name, numpy_fn(*args), jit_fn(*args))
        t_jit = best_time(jit_fn, args, repeats)
        print("%10d  %10.3e s  %10.3e s  %7.2fx" % (n, t_np, t_jit, t_np / t_jit))
    print()


def parse_sizes(text: str) -> list:
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        sys.exit("--sizes expects a comma-separated list of integers")
    if not sizes or any(n <= 0 for n in sizes):
        sys.exit("--sizes expects positive integers")
    return sizes


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="10000,100000,1000000",
                        help="comma-separated array lengths (default %(default)s)")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timed runs per case, best is reported (default %(default)s)")
    parser.add_argument("--seed", type=int, default=7,
                        help="rng seed for the benchmark inputs (default %(default)s)")
    opts = parser.parse_args(argv)
    sizes = parse_sizes(opts.sizes)
    rng = np.random.default_rng(opts.seed)

    if USING_NUMBA:
        print("backends: numpy and numba (QDIRAC_NO_NUMBA=1 drops the jit path)")
    else:
        print("backends: numpy only (numba unavailable or disabled)")
    print()
    run_case("branch_mom2_grid", grid_args, sizes, opts.repeats, rng)
    run_case("quat_mul_batch", quat_args, sizes, opts.repeats, rng)


if __name__ == "__main__":
    main()
