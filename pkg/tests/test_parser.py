import random

import pytest

from drinfeld_heights.errors import DivisionByZero, ExpressionSyntaxError
from drinfeld_heights.funcfield import Poly, RatFunc
from drinfeld_heights.gf import field_create
from drinfeld_heights.ore import TwistedPoly
from drinfeld_heights.parser import parse_poly, parse_ratfunc, parse_twisted, tokenize
from drinfeld_heights.sampling import random_ratfunc, random_twisted


def test_examples(F3, T3):
    assert parse_ratfunc("T", F3) == T3
    x = parse_ratfunc("(T^2+1)/(T)", F3)
    assert x == (T3**2 + 1) / T3 and str(x) == "(T^2 + 1)/T"
    assert parse_ratfunc("(T^2-1)/(T-1)", F3) == T3 + 1


def test_arithmetic(F3, T3):
    assert parse_ratfunc("2T^2 - T + 4", F3) == 2 * T3**2 - T3 + 1
    assert parse_ratfunc("T^-2", F3) == 1 / T3**2
    assert parse_ratfunc("-(T+1)(T+2)", F3) == -(T3 + 1) * (T3 + 2)
    assert not parse_ratfunc("3", F3)
    assert parse_poly("T^3 + 2", F3) == Poly.T(F3) ** 3 + 2


def test_generator():
    F4 = field_create(2, 2)
    u = parse_ratfunc("u", F4)
    assert u * u + u + 1 == RatFunc.const(F4, 0)


def test_twisted(F3, T3):
    f = parse_twisted("T + T t + t^2", F3)
    assert f == TwistedPoly(F3, [T3, T3, 1])
    # t*T = T^3 t
    assert parse_twisted("t T", F3) == TwistedPoly(F3, [0, T3**3])
    assert parse_twisted("(1 + t)/T", F3) == TwistedPoly(F3, [1 / T3, 1 / T3**3])


@pytest.mark.parametrize(
    "src, line, col",
    [
        ("T +", 1, 4),
        ("T + * 2", 1, 5),
        ("(T + 1", 1, 7),
        ("T\n + x", 2, 4),
        ("T^T", 1, 3),
        ("", 1, 1),
    ],
)
def test_error_positions(F3, src, line, col):
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse_ratfunc(src, F3)
    assert (exc.value.line, exc.value.col) == (line, col)


def test_tau_outside_twisted(F3):
    with pytest.raises(ExpressionSyntaxError):
        parse_ratfunc("1 + t", F3)
    with pytest.raises(ExpressionSyntaxError):
        parse_twisted("1/(1 + t)", F3)


def test_division_by_zero(F3):
    with pytest.raises(DivisionByZero):
        parse_ratfunc("T/(T - T)", F3)
    with pytest.raises(DivisionByZero):
        parse_ratfunc("0^-1", F3)


def test_not_a_poly(F3):
    with pytest.raises(ExpressionSyntaxError):
        parse_poly("1/T", F3)


def test_tokenize_columns():
    toks = tokenize("T^2\n  + 1")
    assert [(t.text, t.line, t.col) for t in toks] == [
        ("T", 1, 1), ("^", 1, 2), ("2", 1, 3), ("+", 2, 3), ("1", 2, 5), ("", 2, 6),
    ]


@pytest.mark.parametrize("pm", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_round_trip(pm):
    ctx = field_create(*pm)
    rng = random.Random(31)
    for _ in range(60):
        x = random_ratfunc(ctx, rng, 4, den_prob=0.5)
        assert parse_ratfunc(str(x), ctx) == x
        f = random_twisted(ctx, rng, rng.randint(0, 3))
        assert parse_twisted(str(f), ctx) == f
