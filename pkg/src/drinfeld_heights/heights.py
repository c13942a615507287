"""Graded, finite-place Taguchi and modular heights of Drinfeld modules over K0.

Local graded height at v: ``-min_i ord_v(g_i) / (q^i - 1)`` over the nonzero
g_i of phi_T = T + g_1 tau + ... + g_r tau^r.  The global graded height is
``sum_v f_v * local`` (here [K : K0] = 1).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .drinfeld import (
    DrinfeldModule,
    Isogeny,
    KernelModule,
    conjugate,
    j_invariant,
    kernel_intersect,
    kernel_sum,
    quotient,
)
from .errors import (
    DifferentModules,
    InfinitePlace,
    NotNormalized,
    NotStable,
    NotStableAt,
    UnsupportedPlace,
    WrongRank,
)
from .funcfield import Place, Poly, RatFunc, ord_at, support, weil_height
from .valpoly import polygon_build, polygon_eval


class Flavor(enum.Enum):
    GR = "gr"
    TAG_FINITE = "tag-finite"


def graded_local(phi: DrinfeldModule, v: Place) -> Fraction:
    q = phi.ctx.q
    vals = [Fraction(ord_at(v, gi), q**i - 1) for i, gi in enumerate(phi.g, start=1) if gi]
    return -min(vals)


def relevant_places(*modules: DrinfeldModule) -> list[Place]:
    """Union of the supports of all g_i, plus infinity, sorted."""
    places = {Place.infinity()}
    for phi in modules:
        for gi in phi.g:
            if gi:
                places |= support(gi)
    return sorted(places)


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass
class HeightReport:
    module: DrinfeldModule
    locals: dict  # Place -> Fraction
    weights: dict  # Place -> int
    global_height: Fraction = field(init=False)

    def __post_init__(self):
        self.global_height = sum(
            (self.weights[v] * h for v, h in self.locals.items()), Fraction(0)
        )

    def to_json(self) -> dict:
        return {
            "phi": self.module.to_json(),
            "locals": [
                {"place": str(v), "fv": self.weights[v], "h": _frac(h)}
                for v, h in self.locals.items()
            ],
            "global": _frac(self.global_height),
        }

    def to_table(self) -> str:
        rows = [("place", "fv", "h_Gr^v")]
        rows += [(str(v), str(self.weights[v]), _frac(h)) for v, h in self.locals.items()]
        widths = [max(len(r[k]) for r in rows) for k in range(3)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        lines.append("global h_Gr = %s" % _frac(self.global_height))
        return "\n".join(lines)


def graded_global(phi: DrinfeldModule, places=None) -> HeightReport:
    if places is None:
        places = relevant_places(phi)
    locs = {v: graded_local(phi, v) for v in places}
    return HeightReport(phi, locs, {v: v.fv for v in places})


def is_stable_at(phi: DrinfeldModule, v: Place) -> bool:
    return graded_local(phi, v).denominator == 1


def stable_model_at(phi: DrinfeldModule, v: Place) -> tuple[DrinfeldModule, RatFunc]:
    """An isomorphic c^{-1} phi c whose coefficients are v-integral with a v-unit."""
    lam = graded_local(phi, v)
    if lam.denominator != 1:
        raise NotStable("phi has no stable model at %s (local height %s)" % (v, lam))
    lam = int(lam)
    ctx = phi.ctx
    if v.is_infinite:
        c = RatFunc.T(ctx, -lam)
    else:
        c = RatFunc.from_poly(v.P) ** lam
    return conjugate(phi, c), c


def taguchi_local_finite(phi: DrinfeldModule, v: Place) -> int:
    if v.is_infinite:
        raise InfinitePlace("the Taguchi component at infinity needs C_inf analytics")
    return math.ceil(graded_local(phi, v))


def modular_height(phi: DrinfeldModule) -> int:
    """Weil height of j(phi); equal to (q^2 - 1) * h_Gr(phi)."""
    if phi.rank != 2:
        raise WrongRank("modular height is defined for rank 2 only")
    hm = weil_height(j_invariant(phi))
    q = phi.ctx.q
    assert hm == (q * q - 1) * graded_global(phi).global_height
    return hm


def isogeny_height_delta(f: Isogeny, v: Place) -> Fraction:
    """h^v(target) - h^v(source), checked against V_f(lambda) - lambda."""
    if not f.is_normalized:
        raise NotNormalized("the isogeny must have constant coefficient 1")
    T = RatFunc.T(f.source.ctx)
    if ord_at(v, T) != 0:
        raise UnsupportedPlace("ord_v(T) must vanish at %s" % v)
    lam = graded_local(f.source, v)
    delta = graded_local(f.target, v) - lam
    assert delta == polygon_eval(polygon_build(f.f, v), lam) - lam
    return delta


# ---------------------------------------------------------------------------
# parallelogram reports

CORNERS = ("cap", "G", "H", "sum")


def local_height(phi: DrinfeldModule, v: Place, flavor: Flavor) -> Fraction:
    if flavor is Flavor.GR:
        return graded_local(phi, v)
    return Fraction(taguchi_local_finite(phi, v))


@dataclass
class ParallelogramReport:
    """Heights of phi/(G cap H), phi/G, phi/H, phi/(G+H) and the slacks.

    slack = h(phi/G) + h(phi/H) - h(phi/(G cap H)) - h(phi/(G+H)), which the
    parallelogram inequality asserts to be non-negative.
    """

    flavor: Flavor
    corners: dict  # name -> DrinfeldModule
    dims: dict  # name -> dim of the kernel
    locals: dict  # Place -> {name: Fraction}
    weights: dict  # Place -> int
    stable_preserved: dict = field(default_factory=dict)  # Place -> bool

    def local_slack(self, v: Place) -> Fraction:
        h = self.locals[v]
        return h["G"] + h["H"] - h["cap"] - h["sum"]

    @property
    def globals(self) -> dict:
        return {
            name: sum((self.weights[v] * h[name] for v, h in self.locals.items()), Fraction(0))
            for name in CORNERS
        }

    @property
    def global_slack(self) -> Fraction:
        g = self.globals
        return g["G"] + g["H"] - g["cap"] - g["sum"]

    @property
    def violations(self) -> list:
        bad = [v for v in self.locals if self.local_slack(v) < 0]
        if self.global_slack < 0:
            bad.append("global")
        return bad

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "flavor": self.flavor.value,
            "corners": {n: self.corners[n].to_json() for n in CORNERS},
            "kernel_dims": {n: self.dims[n] for n in CORNERS},
            "places": [
                {
                    "place": str(v),
                    "fv": self.weights[v],
                    "heights": {n: _frac(h[n]) for n in CORNERS},
                    "slack": _frac(self.local_slack(v)),
                }
                for v, h in self.locals.items()
            ],
            "global": {n: _frac(x) for n, x in self.globals.items()},
            "global_slack": _frac(self.global_slack),
            "ok": self.ok,
        }

    def to_table(self) -> str:
        head = ("place", "fv") + tuple("h(%s)" % n for n in CORNERS) + ("slack",)
        rows = [head]
        for v, h in self.locals.items():
            rows.append(
                (str(v), str(self.weights[v]))
                + tuple(_frac(h[n]) for n in CORNERS)
                + (_frac(self.local_slack(v)),)
            )
        g = self.globals
        label = "global" if self.flavor is Flavor.GR else "finite"
        rows.append((label, "") + tuple(_frac(g[n]) for n in CORNERS) + (_frac(self.global_slack),))
        widths = [max(len(r[k]) for r in rows) for k in range(len(head))]
        out = ["flavor: %s" % self.flavor.value]
        for n in CORNERS:
            out.append("phi/%s (dim %d): %s" % (n, self.dims[n], self.corners[n]))
        out += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        out.append("verdict: %s" % ("ok" if self.ok else "VIOLATION"))
        return "\n".join(out)


def parallelogram_report(
    phi: DrinfeldModule,
    G: KernelModule,
    H: KernelModule,
    flavor: Flavor = Flavor.GR,
    places=None,
) -> ParallelogramReport:
    """Build the four quotients and tabulate heights place by place.

    ``places`` defaults to every place in the supports of the four corners
    (plus infinity for the graded flavor).
    """
    if G.phi != phi or H.phi != phi:
        raise DifferentModules("kernels must belong to phi")
    kernels = {"G": G, "H": H, "cap": kernel_intersect(G, H), "sum": kernel_sum(G, H)}
    corners = {n: quotient(phi, kernels[n])[0] for n in CORNERS}
    if places is None:
        places = relevant_places(phi, *corners.values())
    if flavor is Flavor.TAG_FINITE:
        places = [v for v in places if not v.is_infinite]
        for v in places:
            if not is_stable_at(phi, v):
                raise NotStableAt(v)
            assert all(is_stable_at(c, v) for c in corners.values())
    locs = {}
    preserved = {}
    for v in places:
        locs[v] = {n: local_height(corners[n], v, flavor) for n in CORNERS}
        if is_stable_at(phi, v):
            preserved[v] = all(is_stable_at(corners[n], v) for n in CORNERS)
    return ParallelogramReport(
        flavor,
        corners,
        {n: kernels[n].dim for n in CORNERS},
        locs,
        {v: v.fv for v in places},
        preserved,
    )
