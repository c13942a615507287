import random

import pytest

from drinfeld_heights.errors import BothZero, DependentPoints, DivisionByZero, NotNormalizable, ZeroPoint
from drinfeld_heights.funcfield import RatFunc
from drinfeld_heights.ore import (
    TwistedPoly,
    annihilator_of_span,
    eval_linearized,
    mul,
    right_divides,
    right_divmod,
    right_gcd,
    right_lcm,
    right_xgcd,
)
from drinfeld_heights.sampling import random_ratfunc


def tw(ctx, *cs):
    return TwistedPoly(ctx, cs)


def rand_tw(ctx, rng, deg, separable=True):
    cs = [random_ratfunc(ctx, rng, 2) if rng.random() < 0.6 else 0 for _ in range(deg + 1)]
    cs[-1] = random_ratfunc(ctx, rng, 2)
    if separable:
        cs[0] = random_ratfunc(ctx, rng, 2)
    return TwistedPoly(ctx, cs)


def test_twist_rule(F3, T3):
    tau = TwistedPoly.tau(F3)
    assert mul(tau, tw(F3, T3)) == tw(F3, 0, T3**3)
    c = RatFunc.const(F3, 2)
    assert mul(tau, tw(F3, c)) == tw(F3, 0, c)


def test_mul_example(F3, T3):
    f = mul(tw(F3, 1, 1), tw(F3, 1, T3))
    assert f == tw(F3, 1, T3 + 1, T3**3)
    assert str(f) == "1 + (T + 1)*t + T^3*t^2"
    assert mul(f, TwistedPoly.one(F3)) == f


def test_right_divmod_examples(F3, T3):
    t2 = TwistedPoly.tau(F3, 2)
    g, r = right_divmod(t2, tw(F3, 1, 1))
    assert g == tw(F3, 2, 1) and r == TwistedPoly.one(F3)
    f = tw(F3, T3, 1, T3)
    assert right_divmod(f, f) == (TwistedPoly.one(F3), TwistedPoly(F3))
    assert right_divmod(tw(F3, 1, 1), t2) == (TwistedPoly(F3), tw(F3, 1, 1))
    with pytest.raises(DivisionByZero):
        right_divmod(f, TwistedPoly(F3))


def test_gcd_lcm_examples(F3, T3):
    f, g = tw(F3, 1, 1), tw(F3, 1, T3)
    assert right_gcd(f, g) == TwistedPoly.one(F3)
    lcm = right_lcm(f, g)
    assert lcm.degree == 2 and right_divides(f, lcm) and right_divides(g, lcm)
    h = tw(F3, T3, 2, 1 / T3)
    assert right_gcd(mul(h, g), g) == g.normalize()
    assert right_lcm(g, mul(h, g)) == mul(h, g).normalize()
    assert right_gcd(f, f) == f.normalize() == right_lcm(f, f)
    assert right_xgcd(f, g) == (right_gcd(f, g), lcm)


def test_gcd_errors(F3):
    zero = TwistedPoly(F3)
    with pytest.raises(BothZero):
        right_gcd(zero, zero)
    t = TwistedPoly.tau(F3)
    with pytest.raises(NotNormalizable):
        right_gcd(t, TwistedPoly.tau(F3, 2))


def test_eval(F3, T3):
    assert eval_linearized(tw(F3, 1, 2), RatFunc.const(F3, 1)) == RatFunc.const(F3, 0)
    assert eval_linearized(tw(F3, 1, 2), RatFunc.const(F3, 0)) == RatFunc.const(F3, 0)
    assert eval_linearized(TwistedPoly.tau(F3), T3) == T3**3


def test_annihilator(F3, T3):
    assert annihilator_of_span(F3, [1]) == tw(F3, 1, 2)
    assert annihilator_of_span(F3, []) == TwistedPoly.one(F3)
    with pytest.raises(DependentPoints):
        annihilator_of_span(F3, [1, 1])
    with pytest.raises(DependentPoints):
        annihilator_of_span(F3, [T3, T3 + 1, 1])
    with pytest.raises(ZeroPoint):
        annihilator_of_span(F3, [0])


def test_annihilator_kills_span(F3, T3):
    pts = [T3, 1 / (T3 + 1), T3**2]
    f = annihilator_of_span(F3, pts)
    assert f.degree == 3 and f.is_normalized
    for a in range(3):
        for b in range(3):
            x = pts[0] * a + pts[1] * b + pts[2]
            assert not eval_linearized(f, x)


def test_annihilator_product_oracle(F2):
    # over F_2 the span of {1, T} is {0, 1, T, T+1}; x(x+1)(x+T)(x+T+1) expands to
    # x^4 + (T^2+T+1) x^2 + (T^2+T) x
    T = RatFunc.T(F2)
    f = annihilator_of_span(F2, [1, T])
    c = T * T + T
    assert f == tw(F2, 1, (T * T + T + 1) / c, 1 / c)


def test_linearity(F3):
    rng = random.Random(4)
    for _ in range(30):
        f = rand_tw(F3, rng, 3, separable=False)
        x, y = random_ratfunc(F3, rng), random_ratfunc(F3, rng)
        assert eval_linearized(f, x + y * 2) == eval_linearized(f, x) + eval_linearized(f, y) * 2


def test_mul_matches_composition(F3):
    rng = random.Random(8)
    for _ in range(30):
        f, g = rand_tw(F3, rng, 2), rand_tw(F3, rng, 2)
        x = random_ratfunc(F3, rng)
        assert eval_linearized(mul(f, g), x) == eval_linearized(f, eval_linearized(g, x))
