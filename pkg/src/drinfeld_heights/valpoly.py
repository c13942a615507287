"""Valuation polygons V_f(z) = min_i (nu(f_i) + q^i z) of twisted polynomials.

Everything is exact: intercepts and break abscissae are ``Fraction``s and
slopes are Python integers q**i.  The counting function N_f uses the
left-continuous convention: it is constant on (e_k, e_{k+1}].
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstantPolynomial, NotSeparable, ZeroPolynomial
from .funcfield import Place, ord_at
from .ore import TwistedPoly


@dataclass(frozen=True)
class Line:
    intercept: Fraction
    slope: int
    index: int

    def at(self, z) -> Fraction:
        return self.intercept + self.slope * z


@dataclass(frozen=True)
class ValPolygon:
    """Lower envelope of the lines; ``lines[k]`` is active on (breaks[k-1], breaks[k]]."""

    lines: tuple[Line, ...]
    breaks: tuple[Fraction, ...]
    q: int

    def __call__(self, z) -> Fraction:
        return polygon_eval(self, z)

    def active(self, z) -> Line:
        """Line whose slope is the left derivative at z."""
        for k, e in enumerate(self.breaks):
            if z <= e:
                return self.lines[k]
        return self.lines[-1]

    def to_json(self) -> dict:
        return {
            "lines": [
                {"index": ln.index, "intercept": str(ln.intercept), "slope": ln.slope}
                for ln in self.lines
            ],
            "breaks": [str(e) for e in self.breaks],
        }

    def sample_points(self) -> list[Fraction]:
        """Break abscissae plus one point beyond each end (unit margin)."""
        if not self.breaks:
            return [Fraction(-1), Fraction(0), Fraction(1)]
        return [self.breaks[0] - 1, *self.breaks, self.breaks[-1] + 1]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["z", "V"])
        for z in self.sample_points():
            w.writerow([str(z), str(polygon_eval(self, z))])
        return buf.getvalue()


def envelope(points: list[tuple[Fraction, int, int]], q: int) -> ValPolygon:
    """Lower envelope of lines given as (intercept, slope, index).

    Sweeps left to right: as z -> -inf the steepest line is minimal, and at
    each step the next active line is the one crossing the current line
    first (ties broken towards the smallest slope, which stays minimal).
    """
    lines = sorted(points, key=lambda t: -t[1])
    cur = lines[0]
    chosen = [Line(Fraction(cur[0]), cur[1], cur[2])]
    breaks = []
    while True:
        best = None
        for b, s, i in lines:
            if s >= cur[1]:
                continue
            z = Fraction(b - cur[0]) / (cur[1] - s)
            if best is None or z < best[0] or (z == best[0] and s < best[1][1]):
                best = (z, (b, s, i))
        if best is None:
            break
        z, cur = best
        breaks.append(z)
        chosen.append(Line(Fraction(cur[0]), cur[1], cur[2]))
    return ValPolygon(tuple(chosen), tuple(breaks), q)


def polygon_build(f: TwistedPoly, v: Place) -> ValPolygon:
    if not f.coeffs:
        raise ZeroPolynomial("the valuation polygon of 0 is undefined")
    q = f.ctx.q
    pts = [(Fraction(ord_at(v, c)), q**i, i) for i, c in enumerate(f.coeffs) if c]
    return envelope(pts, q)


def polygon_eval(P: ValPolygon, z) -> Fraction:
    z = Fraction(z)
    return min(ln.at(z) for ln in P.lines)


def polygon_inverse(P: ValPolygon, y) -> Fraction:
    """The unique z with V(z) = y (V is an increasing bijection)."""
    y = Fraction(y)
    for k, e in enumerate(P.breaks):
        if y <= P.lines[k].at(e):
            ln = P.lines[k]
            return (y - ln.intercept) / ln.slope
    ln = P.lines[-1]
    return (y - ln.intercept) / ln.slope


def polygon_lambda(f: TwistedPoly, v: Place) -> Fraction:
    """Largest break: -min_{i>=1} (nu(f_i) - nu(f_0)) / (q^i - 1)."""
    if not f.coeffs:
        raise ZeroPolynomial("the zero polynomial has no kernel")
    if not f.coeffs[0]:
        raise NotSeparable("constant coefficient is zero")
    if f.degree < 1:
        raise ConstantPolynomial("a constant has trivial kernel")
    q = f.ctx.q
    nu0 = ord_at(v, f.coeffs[0])
    lam = -min(
        Fraction(ord_at(v, c) - nu0, q**i - 1) for i, c in enumerate(f.coeffs) if i and c
    )
    P = polygon_build(f, v)
    # cross-check: lambda is where the slope-1 line takes over
    assert P.lines[-1].index == 0 and P.breaks[-1] == lam
    return lam


def polygon_count(f: TwistedPoly, v: Place, z) -> int:
    """N_f(z) = number of kernel elements with valuation >= z (a power of q)."""
    if not f.coeffs or not f.coeffs[0]:
        raise NotSeparable("N_f needs a separable polynomial")
    P = polygon_build(f, v)
    return P.active(Fraction(z)).slope


def polygon_breaks(f: TwistedPoly, v: Place) -> tuple[Fraction, ...]:
    return polygon_build(f, v).breaks
