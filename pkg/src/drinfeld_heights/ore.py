"""The twisted polynomial ring K0{tau}, with tau * c = c**q * tau.

Division is on the right: ``right_divmod(f, d)`` returns ``(g, r)`` with
``f = g*d + r``.  GCD and LCM are normalized to constant coefficient 1, the
convention under which kernels correspond to right divisors.
"""

from __future__ import annotations

from .errors import (
    BothZero,
    DependentPoints,
    DivisionByZero,
    NotNormalizable,
    ZeroArgument,
    ZeroPoint,
)
from .funcfield import Poly, RatFunc, as_ratfunc
from .gf import FqContext

# set to False to skip the re-expansion assertion in right_divmod
CHECK_DIVISION = __debug__


class TwistedPoly:
    """f = f_0 + f_1 tau + ... + f_d tau^d with coefficients in F_q(T)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FqContext, coeffs=()):
        cs = [as_ratfunc(ctx, c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, ctx, coeffs):
        # coeffs: list of RatFunc, possibly with trailing zeros
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def one(cls, ctx):
        return cls(ctx, [1])

    @classmethod
    def tau(cls, ctx, k=1):
        return cls(ctx, [0] * k + [1])

    @classmethod
    def scalar(cls, ctx, c):
        return cls(ctx, [c])

    # properties
    @property
    def degree(self) -> int:
        """tau-degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i) -> RatFunc:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RatFunc.const(self.ctx, 0)

    @property
    def constant(self) -> RatFunc:
        return self[0]

    @property
    def lead(self) -> RatFunc:
        return self.coeffs[-1]

    @property
    def is_normalized(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0].is_one()

    @property
    def is_separable(self) -> bool:
        return bool(self.coeffs) and bool(self.coeffs[0])

    def __eq__(self, other):
        if isinstance(other, TwistedPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, RatFunc, Poly)):
            return self == TwistedPoly(self.ctx, [other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # ring operations
    def _coerce(self, other):
        if isinstance(other, TwistedPoly):
            return other
        if isinstance(other, (int, RatFunc, Poly)):
            return TwistedPoly(self.ctx, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return TwistedPoly._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return TwistedPoly._raw(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return mul(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return mul(o, self)

    def __pow__(self, e: int):
        result = TwistedPoly.one(self.ctx)
        for _ in range(e):
            result = mul(result, self)
        return result

    def left_scale(self, c) -> TwistedPoly:
        """c * f for a scalar c (no twist: the scalar sits on the left)."""
        c = as_ratfunc(self.ctx, c)
        return TwistedPoly._raw(self.ctx, [c * a for a in self.coeffs])

    def normalize(self) -> TwistedPoly:
        """f_0^{-1} * f, which has constant coefficient 1 and the same kernel."""
        if not self.is_separable:
            raise NotNormalizable("constant coefficient is zero")
        if self.coeffs[0].is_one():
            return self
        return self.left_scale(self.coeffs[0].inverse())

    def monic(self) -> TwistedPoly:
        if self.lead.is_one():
            return self
        return self.left_scale(self.lead.inverse())

    def __call__(self, x):
        return eval_linearized(self, x)

    def __str__(self):
        return twisted_str(self)

    def __repr__(self):
        return "TwistedPoly(%s)" % twisted_str(self)


def twisted_str(f: TwistedPoly) -> str:
    """Canonical text ``f0 + f1*t + f2*t^2 + ...`` (zero terms omitted)."""
    if not f.coeffs:
        return "0"
    terms = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        s = str(c)
        if i == 0:
            terms.append(s)
            continue
        mono = "t" if i == 1 else "t^%d" % i
        if c.is_one():
            terms.append(mono)
        else:
            if not (c.is_poly() and _single_term(c.num)):
                s = "(%s)" % s
            terms.append("%s*%s" % (s, mono))
    return " + ".join(terms)


def _single_term(f: Poly) -> bool:
    return sum(1 for a in f.c if a) <= 1 and (f.ctx.m == 1 or f.lead < f.ctx.p)


def mul(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    """Coefficient k of f*g is sum over i+j=k of f_i * g_j**(q**i)."""
    ctx = f.ctx
    if not f.coeffs or not g.coeffs:
        return TwistedPoly._raw(ctx, [])
    zero = RatFunc.const(ctx, 0)
    out = [zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, fi in enumerate(f.coeffs):
        if not fi:
            continue
        for j, gj in enumerate(g.coeffs):
            if gj:
                out[i + j] = out[i + j] + fi * gj.frob(i)
    return TwistedPoly._raw(ctx, out)


def right_divmod(f: TwistedPoly, d: TwistedPoly) -> tuple[TwistedPoly, TwistedPoly]:
    """Unique (g, r) with f = g*d + r and deg r < deg d."""
    if not d.coeffs:
        raise DivisionByZero("right division by the zero twisted polynomial")
    ctx = f.ctx
    m = d.degree
    n = f.degree
    if n < m:
        return TwistedPoly._raw(ctx, []), f
    r = list(f.coeffs)
    quo = [RatFunc.const(ctx, 0)] * (n - m + 1)
    lead = d.lead
    monic = lead.is_one()
    for k in range(n - m, -1, -1):
        top = r[k + m]
        if not top:
            continue
        # (c tau^k) * d has leading coefficient c * lead**(q**k)
        c = top if monic else top / lead.frob(k)
        quo[k] = c
        r[k + m] = RatFunc.const(ctx, 0)
        for j in range(m):
            dj = d.coeffs[j]
            if dj:
                r[k + j] = r[k + j] - c * dj.frob(k)
    g = TwistedPoly._raw(ctx, quo)
    rem = TwistedPoly._raw(ctx, r[:m])
    if CHECK_DIVISION:
        assert mul(g, d) + rem == f, "right division re-expansion failed"
    return g, rem


def right_rem(f: TwistedPoly, d: TwistedPoly) -> TwistedPoly:
    return right_divmod(f, d)[1]


def right_divides(d: TwistedPoly, f: TwistedPoly) -> bool:
    return not right_divmod(f, d)[1]


def _euclid(f: TwistedPoly, g: TwistedPoly, cofactors: bool):
    # monic remainders keep coefficient growth in check and make each
    # quotient step division-free
    ctx = f.ctx
    r0, r1 = f.monic(), g.monic()
    s0 = TwistedPoly.scalar(ctx, f.lead.inverse())
    s1 = TwistedPoly._raw(ctx, [])
    while r1.coeffs:
        quo, rem = right_divmod(r0, r1)
        if cofactors:
            s0, s1 = s1, s0 - mul(quo, s1)
        else:
            s0, s1 = s1, None
        r0, r1 = r1, rem
        if r1.coeffs:
            inv = r1.lead.inverse()
            r1 = r1.left_scale(inv)
            if cofactors:
                s1 = s1.left_scale(inv)
    # r0 = gcd (monic); s1 * f is a common left multiple of least degree
    return r0, s1


def right_gcd(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    """Normalized generator of K0{tau} f + K0{tau} g."""
    if not f.coeffs and not g.coeffs:
        raise BothZero("gcd of two zero polynomials")
    if not f.coeffs:
        return g.normalize()
    if not g.coeffs:
        return f.normalize()
    if f.degree < g.degree:
        f, g = g, f
    d, _ = _euclid(f, g, cofactors=False)
    return d.normalize()


def right_xgcd(f: TwistedPoly, g: TwistedPoly):
    """Return (d, lcm) computed in one extended Euclidean pass."""
    if not f.coeffs or not g.coeffs:
        raise ZeroArgument("extended gcd needs two nonzero polynomials")
    d, s = _euclid(f, g, cofactors=True)
    return d.normalize(), mul(s, f).normalize()


def right_lcm(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    """Normalized generator of K0{tau} f intersected with K0{tau} g."""
    if not f.coeffs or not g.coeffs:
        raise ZeroArgument("lcm needs two nonzero polynomials")
    _, s = _euclid(f, g, cofactors=True)
    return mul(s, f).normalize()


def eval_linearized(f: TwistedPoly, x) -> RatFunc:
    """f(x) = f_0 x + f_1 x^q + ... + f_d x^(q^d)."""
    x = as_ratfunc(f.ctx, x)
    acc = RatFunc.const(f.ctx, 0)
    if not x:
        return acc
    for i, c in enumerate(f.coeffs):
        if c:
            acc = acc + c * x.frob(i)
    return acc


def annihilator_of_span(ctx: FqContext, points) -> TwistedPoly:
    """Normalized twisted polynomial whose kernel is the F_q-span of ``points``.

    Built one point at a time: if h kills the span so far and b = h(e) != 0,
    then (tau - b**(q-1)) * h kills the span enlarged by e.
    """
    h = TwistedPoly.one(ctx)
    for e in points:
        e = as_ratfunc(ctx, e)
        if not e:
            raise ZeroPoint("zero cannot be part of an independent family")
        b = eval_linearized(h, e)
        if not b:
            raise DependentPoints("%s lies in the span of the previous points" % e)
        layer = TwistedPoly._raw(ctx, [-(b ** (ctx.q - 1)), RatFunc.const(ctx, 1)])
        h = mul(layer, h)
    return h.normalize()
