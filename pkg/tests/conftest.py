import sys

import pytest

from drinfeld_heights.funcfield import Place, Poly, RatFunc
from drinfeld_heights.gf import field_create


@pytest.fixture
def F3():
    return field_create(3)


@pytest.fixture
def F2():
    return field_create(2)


@pytest.fixture
def T3(F3):
    return RatFunc.T(F3)


def finite(ctx, *codes):
    return Place.finite(Poly.from_codes(ctx, list(codes)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
