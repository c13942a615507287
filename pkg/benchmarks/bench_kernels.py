"""Compiled vs pure-Python kernels for dense F_q[T] arithmetic.

    python benchmarks/bench_kernels.py [--repeat N] [--quick]

Times poly_mul, poly_divmod and poly_gcd for both backends on the same
random inputs (and checks that they agree), then runs one end-to-end
parallelogram batch under each backend in a subprocess.
"""

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from drinfeld_heights import _kernels_py
from drinfeld_heights.gf import field_create

try:
    from drinfeld_heights import _kernels
except ImportError:
    _kernels = None


def rand_poly(rng, q, n):
    return tuple(rng.randrange(q) for _ in range(n - 1)) + (rng.randrange(1, q),)


def bench_op(label, fn_c, fn_py, args_c, args_py, repeat):
    t_py = min(timeit.repeat(lambda: fn_py(*args_py), number=1, repeat=repeat))
    if fn_c is None:
        print("%-26s %10s %10.4f %8s" % (label, "-", t_py, "-"))
        return
    assert fn_c(*args_c) == fn_py(*args_py), label
    t_c = min(timeit.repeat(lambda: fn_c(*args_c), number=1, repeat=repeat))
    print("%-26s %10.4f %10.4f %7.1fx" % (label, t_c, t_py, t_py / t_c))


END_TO_END = """
import time
from drinfeld_heights import BACKEND
from drinfeld_heights.sampling import instances
from drinfeld_heights.heights import parallelogram_report
t = time.perf_counter()
for inst in instances({n}, seed=11):
    parallelogram_report(inst.phi, inst.G, inst.H)
print(BACKEND, time.perf_counter() - t)
"""


def end_to_end(n):
    out = {}
    for pure in ("0", "1"):
        env = dict(os.environ, DRINFELD_HEIGHTS_PURE=pure)
        res = subprocess.run(
            [sys.executable, "-c", END_TO_END.format(n=n)],
            env=env, capture_output=True, text=True, check=True,
        )
        name, secs = res.stdout.split()
        out[name] = float(secs)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="small sizes only")
    args = ap.parse_args(argv)

    if _kernels is None:
        print("compiled extension not built; timing the fallback only")
    rng = random.Random(2024)
    sizes = (50, 400) if args.quick else (50, 400, 2000, 8000)
    print("%-26s %10s %10s %8s" % ("operation", "cython s", "python s", "speedup"))
    for p, m in ((3, 1), (2, 3)):
        ctx = field_create(p, m)
        add, mul = ctx._add, ctx._mul
        t_py = _kernels_py.make_tables(p, m, add, mul)
        t_c = _kernels.make_tables(p, m, add, mul) if _kernels else None
        for n in sizes:
            a, b = rand_poly(rng, ctx.q, n), rand_poly(rng, ctx.q, n)
            big = rand_poly(rng, ctx.q, 2 * n)
            for name in ("poly_mul", "poly_divmod", "poly_gcd"):
                x = (big, a) if name == "poly_divmod" else (a, b)
                fc = getattr(_kernels, name) if _kernels else None
                bench_op(
                    "%s q=%d n=%d" % (name, ctx.q, n),
                    fc, getattr(_kernels_py, name),
                    (t_c,) + x, (t_py,) + x, args.repeat,
                )
    n = 20 if args.quick else 100
    t0 = time.perf_counter()
    res = end_to_end(n)
    print("end-to-end parallelogram batch (%d instances): %s  [%.1fs total]" % (
        n, ", ".join("%s %.2fs" % kv for kv in sorted(res.items())), time.perf_counter() - t0))


if __name__ == "__main__":
    main()
