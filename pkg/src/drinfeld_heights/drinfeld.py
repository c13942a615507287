"""Drinfeld F_q[T]-modules over F_q(T), isogenies and finite kernels.

A kernel G (an element of SG(phi)) is represented by its normalized
annihilator f_G, the unique twisted polynomial with constant coefficient 1
whose root set is G.  Intersections and sums of kernels are then right GCDs
and right LCMs, and no splitting field is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DifferentModules,
    InvalidModule,
    NotContained,
    NotStable,
    StabilityViolated,
    WrongRank,
    ZeroArgument,
)
from .funcfield import Poly, RatFunc, as_ratfunc
from .gf import FqContext
from .ore import (
    TwistedPoly,
    annihilator_of_span,
    mul,
    right_divmod,
    right_gcd,
    right_lcm,
)


class DrinfeldModule:
    """phi given by phi_T = T + g_1 tau + ... + g_r tau^r."""

    __slots__ = ("ctx", "phiT")

    def __init__(self, phiT: TwistedPoly):
        if phiT.degree < 1:
            raise InvalidModule("phi_T must have tau-degree at least 1")
        if phiT.constant != RatFunc.T(phiT.ctx):
            raise InvalidModule("constant coefficient of phi_T must be T")
        self.ctx = phiT.ctx
        self.phiT = phiT

    @classmethod
    def from_coeffs(cls, ctx: FqContext, coeffs) -> DrinfeldModule:
        """Build phi from [g_1, ..., g_r]."""
        return cls(TwistedPoly(ctx, [RatFunc.T(ctx)] + list(coeffs)))

    @classmethod
    def carlitz(cls, ctx: FqContext) -> DrinfeldModule:
        return cls.from_coeffs(ctx, [1])

    @property
    def rank(self) -> int:
        return self.phiT.degree

    @property
    def g(self) -> tuple[RatFunc, ...]:
        """(g_1, ..., g_r)."""
        return self.phiT.coeffs[1:]

    def __eq__(self, other):
        return isinstance(other, DrinfeldModule) and self.phiT == other.phiT

    def __hash__(self):
        return hash(self.phiT)

    def __str__(self):
        return str(self.phiT)

    def __repr__(self):
        return "DrinfeldModule(%s)" % self.phiT

    def to_json(self) -> list[str]:
        return ["T"] + [str(c) for c in self.g]


@dataclass(frozen=True, eq=False)
class Isogeny:
    source: DrinfeldModule
    target: DrinfeldModule
    f: TwistedPoly

    def __post_init__(self):
        if not is_isogeny(self.f, self.source, self.target):
            raise StabilityViolated("f does not intertwine source and target")

    @property
    def degree(self) -> int:
        return self.f.degree

    @property
    def is_normalized(self) -> bool:
        return self.f.is_normalized


class KernelModule:
    """A finite phi-stable subspace G, stored as its normalized annihilator."""

    __slots__ = ("phi", "ann", "_quotient_T")

    def __init__(self, phi: DrinfeldModule, ann: TwistedPoly):
        if not ann.is_normalized:
            raise InvalidModule("kernel annihilator must be normalized")
        quo, rem = right_divmod(mul(ann, phi.phiT), ann)
        if rem:
            raise NotStable("the kernel of %s is not stable under phi_T" % ann)
        self.phi = phi
        self.ann = ann
        self._quotient_T = quo

    @property
    def dim(self) -> int:
        return self.ann.degree

    def __eq__(self, other):
        return isinstance(other, KernelModule) and self.phi == other.phi and self.ann == other.ann

    def __hash__(self):
        return hash(self.ann)

    def __repr__(self):
        return "KernelModule(dim=%d, ann=%s)" % (self.dim, self.ann)


def phi_of(phi: DrinfeldModule, a) -> TwistedPoly:
    """phi_a = sum c_i phi_T^i for a = sum c_i T^i (Horner in phi_T)."""
    ctx = phi.ctx
    if not isinstance(a, Poly):
        a = Poly.const(ctx, a)
    acc = TwistedPoly._raw(ctx, [])
    for c in reversed(a.c):
        acc = mul(acc, phi.phiT) + TwistedPoly(ctx, [RatFunc.from_poly(Poly(ctx, (c,), True))])
    return acc


def is_isogeny(f: TwistedPoly, phi: DrinfeldModule, psi: DrinfeldModule) -> bool:
    return bool(f) and mul(f, phi.phiT) == mul(psi.phiT, f)


def conjugate(phi: DrinfeldModule, c) -> DrinfeldModule:
    """The isomorphic module c^{-1} phi c, i.e. g_i -> g_i c^(q^i - 1)."""
    c = as_ratfunc(phi.ctx, c)
    if not c:
        raise ZeroArgument("cannot conjugate by zero")
    q = phi.ctx.q
    coeffs = [RatFunc.T(phi.ctx)]
    for i, gi in enumerate(phi.g, start=1):
        coeffs.append(gi * c ** (q**i - 1) if gi else gi)
    return DrinfeldModule(TwistedPoly(phi.ctx, coeffs))


def trivial_kernel(phi: DrinfeldModule) -> KernelModule:
    return KernelModule(phi, TwistedPoly.one(phi.ctx))


def torsion_kernel(phi: DrinfeldModule, a) -> KernelModule:
    """phi[a], whose annihilator is a^{-1} phi_a."""
    ctx = phi.ctx
    if not isinstance(a, Poly):
        a = Poly.const(ctx, a)
    if not a:
        raise ZeroArgument("the torsion of a = 0 is not finite")
    return KernelModule(phi, phi_of(phi, a).normalize())


def kernel_from_annihilator(phi: DrinfeldModule, f: TwistedPoly) -> KernelModule:
    """Kernel of an arbitrary separable f (normalized first)."""
    return KernelModule(phi, f.normalize())


def kernel_from_points(phi: DrinfeldModule, points) -> KernelModule:
    """F_q-span of K0-rational points, which must be phi_T-stable."""
    return KernelModule(phi, annihilator_of_span(phi.ctx, points))


def _same(G: KernelModule, H: KernelModule):
    if G.phi != H.phi:
        raise DifferentModules("kernels belong to different Drinfeld modules")


def kernel_intersect(G: KernelModule, H: KernelModule) -> KernelModule:
    _same(G, H)
    return KernelModule(G.phi, right_gcd(G.ann, H.ann))


def kernel_sum(G: KernelModule, H: KernelModule) -> KernelModule:
    _same(G, H)
    return KernelModule(G.phi, right_lcm(G.ann, H.ann))


def kernel_contains(H: KernelModule, G: KernelModule) -> bool:
    """True when G is a subspace of H."""
    return not right_divmod(H.ann, G.ann)[1]


def quotient(phi: DrinfeldModule, G: KernelModule) -> tuple[DrinfeldModule, Isogeny]:
    """phi/G together with the normalized isogeny f_G : phi -> phi/G."""
    if G.phi != phi:
        raise DifferentModules("kernel does not belong to this module")
    psiT = G._quotient_T
    # the stored quotient is only trusted if it reproduces ann * phi_T
    if mul(psiT, G.ann) != mul(G.ann, phi.phiT):
        raise StabilityViolated("stored quotient does not satisfy f*phi_T = psi_T*f")
    psi = DrinfeldModule(psiT)
    return psi, Isogeny(phi, psi, G.ann)


def factor_through(phi: DrinfeldModule, G: KernelModule, H: KernelModule) -> Isogeny:
    """Normalized isogeny g : phi/G -> phi/H with f_H = g * f_G (needs G inside H)."""
    _same(G, H)
    g, rem = right_divmod(H.ann, G.ann)
    if rem:
        raise NotContained("G is not contained in H")
    src, _ = quotient(phi, G)
    dst, _ = quotient(phi, H)
    return Isogeny(src, dst, g)


def j_invariant(phi: DrinfeldModule) -> RatFunc:
    """g^(q+1) / Delta for phi_T = T + g tau + Delta tau^2."""
    if phi.rank != 2:
        raise WrongRank("j-invariant is defined for rank 2 only")
    g, delta = phi.g
    return g ** (phi.ctx.q + 1) / delta
