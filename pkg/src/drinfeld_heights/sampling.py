"""Seeded random instances for property tests, acceptance runs and benchmarks.

Kernels come in three kinds: torsion kernels phi[a] and their gcd/lcm
combinations, rational spans inside phi[T] for modules of the shape
phi_T = h * ann(V), and sums mixing the two.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .drinfeld import (
    DrinfeldModule,
    KernelModule,
    kernel_from_points,
    kernel_intersect,
    kernel_sum,
    torsion_kernel,
)
from .errors import DependentPoints
from .funcfield import Place, Poly, RatFunc, is_irreducible
from .gf import FqContext, field_create
from .ore import TwistedPoly, annihilator_of_span, mul


def random_poly(ctx: FqContext, rng: random.Random, maxdeg: int, monic=False) -> Poly:
    while True:
        d = rng.randint(0, maxdeg)
        cs = [rng.randrange(ctx.q) for _ in range(d)] + [1 if monic else rng.randrange(1, ctx.q)]
        # keep things sparse
        cs = [c if rng.random() < 0.6 or i == d else 0 for i, c in enumerate(cs)]
        f = Poly.from_codes(ctx, cs)
        if f:
            return f


def random_ratfunc(ctx, rng, maxdeg=2, den_prob=0.3) -> RatFunc:
    num = random_poly(ctx, rng, maxdeg)
    if rng.random() < den_prob:
        den = random_poly(ctx, rng, max(1, maxdeg - 1), monic=True)
        if den.degree >= 1:
            return RatFunc(num, den)
    return RatFunc.from_poly(num)


def random_module(ctx, rng, rank: int, maxdeg=2) -> DrinfeldModule:
    coeffs = []
    for i in range(1, rank + 1):
        if i == rank or rng.random() < 0.5:
            coeffs.append(random_ratfunc(ctx, rng, maxdeg))
        else:
            coeffs.append(RatFunc.const(ctx, 0))
    return DrinfeldModule.from_coeffs(ctx, coeffs)


def random_points(ctx, rng, k: int, maxdeg=2) -> list:
    """k F_q-independent elements of K0."""
    while True:
        pts = [random_ratfunc(ctx, rng, maxdeg, den_prob=0.25) for _ in range(k)]
        try:
            annihilator_of_span(ctx, pts)
        except DependentPoints:
            continue
        return pts


def span_module(ctx, rng, rank: int, dim: int, maxdeg=2):
    """phi_T = h * ann(V) with dim V = ``dim``; returns (phi, basis of V)."""
    pts = random_points(ctx, rng, dim, maxdeg)
    hc = [RatFunc.T(ctx)]
    for i in range(1, rank - dim + 1):
        if i == rank - dim or rng.random() < 0.5:
            hc.append(random_ratfunc(ctx, rng, maxdeg))
        else:
            hc.append(RatFunc.const(ctx, 0))
    phiT = mul(TwistedPoly(ctx, hc), annihilator_of_span(ctx, pts))
    return DrinfeldModule(phiT), pts


def _combo(ctx, rng, pts):
    """A random nonzero F_q-combination of pts."""
    while True:
        cs = [rng.randrange(ctx.q) for _ in pts]
        if any(cs):
            acc = RatFunc.const(ctx, 0)
            for c, e in zip(cs, pts):
                acc = acc + e * RatFunc.const(ctx, ctx.element(c))
            return acc


def random_subspan(phi, rng, pts) -> KernelModule:
    ctx = phi.ctx
    k = rng.randint(0, len(pts))
    while True:
        sub = [_combo(ctx, rng, pts) for _ in range(k)]
        try:
            return kernel_from_points(phi, sub)
        except DependentPoints:
            continue


@dataclass
class Instance:
    phi: DrinfeldModule
    G: KernelModule
    H: KernelModule
    kind: str

    def __str__(self):
        return "%s q=%d phi_T=%s dimG=%d dimH=%d" % (
            self.kind, self.phi.ctx.q, self.phi, self.G.dim, self.H.dim
        )


def _small_a(ctx, rng) -> Poly:
    return random_poly(ctx, rng, 1, monic=True) if rng.random() < 0.8 else Poly.const(ctx, 1)


def torsion_instance(ctx, rng, rank) -> Instance:
    phi = random_module(ctx, rng, rank)
    a, b = _small_a(ctx, rng), _small_a(ctx, rng)
    G, H = torsion_kernel(phi, a), torsion_kernel(phi, b)
    r = rng.random()
    if r < 0.25:
        G = kernel_intersect(G, H)
    elif r < 0.5 and rank == 1:
        H = kernel_sum(G, H)
    return Instance(phi, G, H, "torsion")


def span_instance(ctx, rng, rank) -> Instance:
    dim = rng.randint(1, rank)
    phi, pts = span_module(ctx, rng, rank, dim)
    G, H = random_subspan(phi, rng, pts), random_subspan(phi, rng, pts)
    return Instance(phi, G, H, "span")


def mixed_instance(ctx, rng, rank) -> Instance:
    dim = rng.randint(1, rank)
    phi, pts = span_module(ctx, rng, rank, dim)
    G, H = random_subspan(phi, rng, pts), random_subspan(phi, rng, pts)
    if rank == 1:
        tors = torsion_kernel(phi, Poly.T(ctx) + 1)
        if rng.random() < 0.5:
            G = kernel_sum(G, tors)
        else:
            H = kernel_sum(H, tors)
    return Instance(phi, G, H, "mixed")


# (p, m, max rank); the coefficient degrees of the quotients grow like q^dim,
# so large q is paired with small rank
FIELDS = [(2, 1, 3), (3, 1, 3), (2, 2, 2), (5, 1, 2), (7, 1, 1)]


def random_instance(rng: random.Random) -> Instance:
    p, m, max_rank = rng.choice(FIELDS)
    ctx = field_create(p, m)
    rank = rng.randint(1, max_rank)
    maker = rng.choice([torsion_instance, span_instance, span_instance, mixed_instance])
    return maker(ctx, rng, rank)


def instances(n: int, seed: int = 0):
    rng = random.Random(seed)
    for _ in range(n):
        yield random_instance(rng)


def random_place(ctx, rng) -> Place:
    """Infinity, T, or a random monic irreducible of degree <= 2."""
    r = rng.random()
    if r < 0.25:
        return Place.infinity()
    if r < 0.45:
        return Place.finite(Poly.T(ctx))
    while True:
        f = random_poly(ctx, rng, 2, monic=True)
        if f.degree >= 1 and is_irreducible(f):
            return Place.finite(f)


def random_twisted(ctx, rng, deg, separable=True, maxdeg=2) -> TwistedPoly:
    cs = [random_ratfunc(ctx, rng, maxdeg) if rng.random() < 0.6 else RatFunc.const(ctx, 0)
          for _ in range(deg + 1)]
    cs[-1] = random_ratfunc(ctx, rng, maxdeg)
    if separable:
        cs[0] = random_ratfunc(ctx, rng, maxdeg)
    return TwistedPoly(ctx, cs)
