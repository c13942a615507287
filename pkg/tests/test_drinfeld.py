import random

import pytest

from drinfeld_heights.drinfeld import (
    DrinfeldModule,
    conjugate,
    factor_through,
    is_isogeny,
    j_invariant,
    kernel_contains,
    kernel_from_points,
    kernel_intersect,
    kernel_sum,
    phi_of,
    quotient,
    torsion_kernel,
    trivial_kernel,
)
from drinfeld_heights.errors import (
    DifferentModules,
    InvalidModule,
    NotContained,
    NotStable,
    WrongRank,
)
from drinfeld_heights.funcfield import Poly, RatFunc
from drinfeld_heights.ore import TwistedPoly, annihilator_of_span, mul, right_gcd
from drinfeld_heights.sampling import random_module, random_ratfunc


def tw(ctx, *cs):
    return TwistedPoly(ctx, cs)


@pytest.fixture
def carlitz(F3):
    return DrinfeldModule.carlitz(F3)


@pytest.fixture
def rank2(F3, T3):
    """phi_T = T * ann(span(1, T)), so that 1 and T are T-torsion."""
    phiT = mul(tw(F3, T3), annihilator_of_span(F3, [1, T3]))
    return DrinfeldModule(phiT)


def test_validation(F3, T3):
    with pytest.raises(InvalidModule):
        DrinfeldModule(tw(F3, T3))
    with pytest.raises(InvalidModule):
        DrinfeldModule(tw(F3, T3 + 1, 1))


def test_phi_of(F3, T3, carlitz):
    assert phi_of(carlitz, Poly.T(F3)) == tw(F3, T3, 1)
    assert phi_of(carlitz, Poly.T(F3, 2)) == tw(F3, T3**2, T3 + T3**3, 1)
    assert phi_of(carlitz, Poly.const(F3, 2)) == tw(F3, 2)


def test_is_isogeny(F3, carlitz, rank2):
    assert is_isogeny(carlitz.phiT, carlitz, carlitz)
    assert not is_isogeny(TwistedPoly(F3), carlitz, carlitz)
    G = kernel_from_points(rank2, [1])
    psi, f = quotient(rank2, G)
    assert is_isogeny(f.f, rank2, psi)


def test_torsion_kernel(F3, T3, carlitz, rank2):
    assert torsion_kernel(carlitz, Poly.T(F3)).ann == tw(F3, 1, 1 / T3)
    assert torsion_kernel(carlitz, Poly.const(F3, 2)).ann == TwistedPoly.one(F3)
    g, delta = rank2.g
    assert torsion_kernel(rank2, Poly.T(F3)).ann == tw(F3, 1, g / T3, delta / T3)


def test_kernel_from_points(F3, T3, carlitz, rank2):
    G = kernel_from_points(rank2, [1])
    assert G.dim == 1
    assert kernel_from_points(carlitz, []) == trivial_kernel(carlitz)
    with pytest.raises(NotStable):
        kernel_from_points(carlitz, [1])


def test_kernel_lattice_ops(F3, T3, rank2):
    G1 = kernel_from_points(rank2, [1])
    G2 = kernel_from_points(rank2, [T3])
    triv = trivial_kernel(rank2)
    assert kernel_intersect(G1, G1) == G1
    assert kernel_intersect(G1, triv) == triv
    assert kernel_intersect(G1, G2) == triv
    assert kernel_sum(G1, triv) == G1 and kernel_sum(G1, G1) == G1
    assert kernel_sum(G1, G2) == torsion_kernel(rank2, Poly.T(F3))
    assert kernel_contains(kernel_sum(G1, G2), G1)
    assert not kernel_contains(G1, G2)


def test_quotient_t_torsion_law(F3, T3, rank2):
    q = F3.q
    g, delta = rank2.g
    psi, f = quotient(rank2, torsion_kernel(rank2, Poly.T(F3)))
    assert psi.phiT == tw(F3, T3, g * T3 ** (q - 1), delta * T3 ** (q * q - 1))
    assert conjugate(psi, 1 / T3) == rank2


def test_quotient_carlitz(F3, T3, carlitz):
    psi, f = quotient(carlitz, torsion_kernel(carlitz, Poly.T(F3)))
    assert psi.phiT == tw(F3, T3, T3**2)
    assert mul(mul(tw(F3, T3), psi.phiT), tw(F3, 1 / T3)) == carlitz.phiT
    psi, f = quotient(carlitz, trivial_kernel(carlitz))
    assert psi == carlitz and f.f == TwistedPoly.one(F3)


def test_quotient_full_torsion_isomorphic(F3):
    rng = random.Random(12)
    for _ in range(10):
        phi = random_module(F3, rng, rng.randint(1, 2))
        for a in (Poly.T(F3), Poly.T(F3) + 1, Poly.from_codes(F3, [1, 0, 1])):
            psi, _ = quotient(phi, torsion_kernel(phi, a))
            assert conjugate(psi, RatFunc.from_poly(a).inverse()) == phi


def test_factor_through(F3, T3, rank2):
    G1 = kernel_from_points(rank2, [1])
    full = torsion_kernel(rank2, Poly.T(F3))
    g = factor_through(rank2, G1, full)
    assert g.degree == 1 and g.is_normalized
    assert mul(g.f, G1.ann) == full.ann
    assert factor_through(rank2, G1, G1).f == TwistedPoly.one(F3)
    assert factor_through(rank2, trivial_kernel(rank2), full).f == full.ann
    with pytest.raises(NotContained):
        factor_through(rank2, full, G1)


def test_j_invariant(F3, T3, carlitz):
    phi = DrinfeldModule.from_coeffs(F3, [T3, 1])
    assert j_invariant(phi) == T3**4
    assert j_invariant(DrinfeldModule.from_coeffs(F3, [0, T3])) == RatFunc.const(F3, 0)
    with pytest.raises(WrongRank):
        j_invariant(carlitz)
    rng = random.Random(2)
    for _ in range(20):
        c = random_ratfunc(F3, rng)
        assert j_invariant(conjugate(phi, c)) == j_invariant(phi)


def test_different_modules(F3, carlitz, rank2):
    with pytest.raises(DifferentModules):
        kernel_sum(trivial_kernel(carlitz), trivial_kernel(rank2))
    with pytest.raises(DifferentModules):
        quotient(carlitz, trivial_kernel(rank2))


def test_torsion_gcd_law(F3):
    rng = random.Random(21)
    for _ in range(8):
        phi = random_module(F3, rng, 2, maxdeg=1)
        a = Poly.from_codes(F3, [rng.randrange(3), 1]) * Poly.T(F3)
        b = Poly.T(F3) * Poly.from_codes(F3, [2, 1])
        d = right_gcd(phi_of(phi, a), phi_of(phi, b))
        assert d == torsion_kernel(phi, a.gcd(b).monic()).ann
