import os
import random
import subprocess
import sys

import pytest

from drinfeld_heights import _kernels_py, kernels
from drinfeld_heights.gf import field_create

_kernels = pytest.importorskip("drinfeld_heights._kernels")

FIELDS = [(2, 1), (3, 1), (5, 1), (2, 3), (3, 2), (7, 2)]


def rand_poly(rng, q, n):
    if n == 0:
        return ()
    return tuple(rng.randrange(q) for _ in range(n - 1)) + (rng.randrange(1, q),)


@pytest.mark.parametrize("pm", FIELDS)
def test_agreement(pm):
    ctx = field_create(*pm)
    tp = _kernels_py.make_tables(pm[0], pm[1], ctx._add, ctx._mul)
    tc = _kernels.make_tables(pm[0], pm[1], ctx._add, ctx._mul)
    rng = random.Random(hash(pm) & 0xFFFF)
    for _ in range(150):
        a = rand_poly(rng, ctx.q, rng.randint(0, 40))
        b = rand_poly(rng, ctx.q, rng.randint(0, 40))
        c = rng.randrange(ctx.q)
        for name in ("poly_add", "poly_sub", "poly_mul", "poly_gcd"):
            assert getattr(_kernels, name)(tc, a, b) == getattr(_kernels_py, name)(tp, a, b), name
        assert _kernels.poly_neg(tc, a) == _kernels_py.poly_neg(tp, a)
        assert _kernels.poly_scale(tc, a, c) == _kernels_py.poly_scale(tp, a, c)
        assert _kernels.poly_monic(tc, a) == _kernels_py.poly_monic(tp, a)
        if b:
            assert _kernels.poly_divmod(tc, a, b) == _kernels_py.poly_divmod(tp, a, b)
            assert _kernels.poly_rem(tc, a, b) == _kernels_py.poly_rem(tp, a, b)


def test_large_multiplication():
    # crosses the switch to big-integer multiplication in both backends
    ctx = field_create(3, 1)
    tp = _kernels_py.make_tables(3, 1)
    tc = _kernels.make_tables(3, 1)
    rng = random.Random(4)
    a, b = rand_poly(rng, 3, 5000), rand_poly(rng, 3, 4500)
    assert _kernels.poly_mul(tc, a, b) == _kernels_py.poly_mul(tp, a, b)


def test_division_by_zero():
    tc = _kernels.make_tables(3, 1)
    with pytest.raises(ZeroDivisionError):
        _kernels.poly_divmod(tc, (1, 2), ())


def test_selected_backend():
    assert kernels.BACKEND in ("cython", "python")


def test_pure_fallback_subprocess():
    code = (
        "from drinfeld_heights import BACKEND\n"
        "from drinfeld_heights.heights import graded_global\n"
        "from drinfeld_heights.drinfeld import DrinfeldModule\n"
        "from drinfeld_heights.funcfield import RatFunc\n"
        "from drinfeld_heights.gf import field_create\n"
        "F = field_create(3, 1); T = RatFunc.T(F)\n"
        "print(BACKEND, graded_global(DrinfeldModule.from_coeffs(F, [T, 1])).global_height)\n"
    )
    env = dict(os.environ, DRINFELD_HEIGHTS_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "1/2"]
