"""Compare the compiled modular kernels with their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--scale 1]

Each row reports the best-of-``repeat`` wall time per call for both
backends and the speedup.  Outputs are checked for equality first.
"""

import argparse
import random
import sys
import timeit

from cantorkit import _pykernels

try:
    from cantorkit import _ckernels
except ImportError:
    sys.exit("compiled kernels are not built; reinstall with a C compiler available")


def cases(scale):
    rng = random.Random(0)
    n = 1_000_003
    deg = 400 * scale
    a = [rng.randrange(n) for _ in range(deg)]
    b = [rng.randrange(n) for _ in range(deg)]
    p = 10_007
    size = 60 * scale
    M = [[rng.randrange(p) for _ in range(size)] for _ in range(size)]
    return [
        (f"conv_mod deg {deg}", "conv_mod", (a, b, n)),
        (f"conv_mod_trunc deg {deg}", "conv_mod_trunc", (a, b, n, deg)),
        (f"rref_mod_p {size}x{size}", "rref_mod_p", (M, size, p)),
        ("inverse_table n=4099", "inverse_table", (4099,)),
        ("inverse_scan n=999983", "inverse_scan", (2, 999_983)),
    ]


def best(fn, args, repeat):
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--scale", type=int, default=1, help="multiply problem sizes")
    args = ap.parse_args(argv)
    print(f"{'kernel':<28}{'python':>12}{'cython':>12}{'speedup':>10}")
    for label, name, call_args in cases(args.scale):
        py, cy = getattr(_pykernels, name), getattr(_ckernels, name)
        if py(*call_args) != cy(*call_args):
            sys.exit(f"{name}: backends disagree")
        t_py = best(py, call_args, args.repeat)
        t_cy = best(cy, call_args, args.repeat)
        print(f"{label:<28}{t_py * 1e3:>10.3f}ms{t_cy * 1e3:>10.3f}ms{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
