"""The rings A = F_q[T] and K0 = F_q(T), places of K0 and the Weil height.

Normalization at infinity: ``ord_inf(a) = -deg(a)`` for ``a`` in A, so the
product formula ``sum_v f_v ord_v(x) = 0`` holds for every nonzero ``x``.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from functools import lru_cache

from . import kernels as K
from .errors import DivisionByZero, NotIrreducible, ZeroArgument, ZeroPolynomial
from .gf import FieldElement, FqContext

INF = math.inf

# Seed of the Cantor-Zassenhaus generator; the output is sorted, so the seed
# only affects running time, never results.
DEFAULT_SEED = 20240601


def set_seed(seed: int) -> None:
    global DEFAULT_SEED
    DEFAULT_SEED = int(seed)


class Poly:
    """Polynomial in F_q[T]; coefficients are field codes, lowest degree first."""

    __slots__ = ("ctx", "c")

    def __init__(self, ctx: FqContext, coeffs=(), _trusted=False):
        self.ctx = ctx
        if _trusted:
            self.c = coeffs
            return
        codes = []
        for a in coeffs:
            if isinstance(a, FieldElement):
                codes.append(a.code)
            else:
                codes.append(int(a) % ctx.p)
        while codes and not codes[-1]:
            codes.pop()
        self.c = tuple(codes)

    # constructors
    @classmethod
    def T(cls, ctx, k=1):
        return cls(ctx, (0,) * k + (1,), True)

    @classmethod
    def from_codes(cls, ctx, codes):
        codes = list(codes)
        while codes and not codes[-1]:
            codes.pop()
        return cls(ctx, tuple(codes), True)

    @classmethod
    def const(cls, ctx, a):
        code = a.code if isinstance(a, FieldElement) else int(a) % ctx.p
        return cls(ctx, (code,) if code else (), True)

    def _new(self, coeffs):
        return Poly(self.ctx, coeffs, True)

    # basic properties
    @property
    def degree(self) -> int:
        """Degree, with -1 as the sentinel for the zero polynomial."""
        return len(self.c) - 1

    def __len__(self):
        return len(self.c)

    def __bool__(self):
        return bool(self.c)

    def is_one(self):
        return self.c == (1,)

    def is_constant(self):
        return len(self.c) <= 1

    @property
    def lead(self) -> int:
        return self.c[-1] if self.c else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c and self.ctx == other.ctx
        if isinstance(other, int):
            return self == Poly.const(self.ctx, other)
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Poly):
            return other.c
        if isinstance(other, (int, FieldElement)):
            return Poly.const(self.ctx, other).c
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._new(K.poly_add(self.ctx.tables, self.c, b))

    __radd__ = __add__

    def __neg__(self):
        return self._new(K.poly_neg(self.ctx.tables, self.c))

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._new(K.poly_sub(self.ctx.tables, self.c, b))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(Poly.const(self.ctx, other).lead)
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._new(K.poly_mul(self.ctx.tables, self.c, b))

    __rmul__ = __mul__

    def scale(self, code: int) -> Poly:
        return self._new(K.poly_scale(self.ctx.tables, self.c, code))

    def __divmod__(self, other):
        b = self._coerce(other)
        if not b:
            raise DivisionByZero("polynomial division by zero")
        qt, r = K.poly_divmod(self.ctx.tables, self.c, b)
        return self._new(qt), self._new(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        b = self._coerce(other)
        if not b:
            raise DivisionByZero("polynomial division by zero")
        return self._new(K.poly_rem(self.ctx.tables, self.c, b))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(self.ctx, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div(self, other: Poly) -> Poly:
        qt, r = divmod(self, other)
        if r:
            raise ValueError("inexact polynomial division")
        return qt

    def monic(self) -> Poly:
        return self._new(K.poly_monic(self.ctx.tables, self.c))

    def gcd(self, other: Poly) -> Poly:
        return self._new(K.poly_gcd(self.ctx.tables, self.c, other.c))

    def derivative(self) -> Poly:
        ctx = self.ctx
        return Poly.from_codes(ctx, [ctx.mul_codes(a, k % ctx.p) for k, a in enumerate(self.c)][1:])

    def frob(self, k: int = 1) -> Poly:
        """Image under x -> x**(q**k), i.e. T -> T**(q**k) with F_q fixed."""
        if k == 0 or len(self.c) <= 1:
            return self
        step = self.ctx.q**k
        out = [0] * ((len(self.c) - 1) * step + 1)
        out[::step] = self.c
        return self._new(tuple(out))

    def __call__(self, x):
        """Horner evaluation at a field element, polynomial or rational function."""
        acc = None
        for a in reversed(self.c):
            term = FieldElement(self.ctx, a)
            acc = term if acc is None else acc * x + term
        return acc if acc is not None else FieldElement(self.ctx, 0)

    def sort_key(self):
        return (len(self.c), tuple(reversed(self.c)))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return "Poly(%s)" % poly_str(self)


def poly_str(f: Poly, var: str = "T") -> str:
    ctx = f.ctx
    if not f.c:
        return "0"
    terms = []
    for k in range(len(f.c) - 1, -1, -1):
        a = f.c[k]
        if not a:
            continue
        cs = ctx.code_str(a)
        if ctx.m > 1 and ("+" in cs):
            cs = "(%s)" % cs
        mono = "" if k == 0 else (var if k == 1 else "%s^%d" % (var, k))
        if not mono:
            terms.append(cs)
        elif a == 1:
            terms.append(mono)
        else:
            terms.append("%s*%s" % (cs, mono))
    return " + ".join(terms)


_ATOM = re.compile(r"^(?:[0-9]+|u|T(?:\^[0-9]+)?)$")


class RatFunc:
    """Element of F_q(T) in canonical form: coprime, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, _canonical=False):
        if den is None:
            den = Poly.const(num.ctx, 1)
        if not _canonical:
            if not den:
                raise DivisionByZero("rational function with zero denominator")
            if not num:
                den = Poly.const(num.ctx, 1)
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num, den = num // g, den // g
                if den.lead != 1:
                    inv = num.ctx.inv_code(den.lead)
                    num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @property
    def ctx(self) -> FqContext:
        return self.num.ctx

    @classmethod
    def from_poly(cls, f: Poly) -> RatFunc:
        return cls(f, Poly.const(f.ctx, 1), True)

    @classmethod
    def const(cls, ctx, a) -> RatFunc:
        return cls.from_poly(Poly.const(ctx, a))

    @classmethod
    def T(cls, ctx, k=1) -> RatFunc:
        if k >= 0:
            return cls.from_poly(Poly.T(ctx, k))
        return cls(Poly.const(ctx, 1), Poly.T(ctx, -k), True)

    def __bool__(self):
        return bool(self.num)

    def is_poly(self):
        return self.den.is_one()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_one()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, FieldElement)):
            return self.den.is_one() and self.num == Poly.const(self.ctx, other)
        if isinstance(other, Poly):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num.c, self.den.c))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, FieldElement)):
            return RatFunc.const(self.ctx, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.is_one() and d.is_one():
            return RatFunc.from_poly(a + c)
        if b == d:
            return RatFunc(a + c, b)
        g = b.gcd(d)
        if g.is_one():
            return RatFunc(a * d + c * b, b * d, True)
        b1, d1 = b // g, d // g
        n = a * d1 + c * b1
        if not n:
            return RatFunc.const(self.ctx, 0)
        h = n.gcd(g)
        if not h.is_one():
            return RatFunc(n // h, (g // h) * b1 * d1, True)
        return RatFunc(n, g * b1 * d1, True)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, True)

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
        a, b, c, d = self.num, self.den, o.num, o.den
        if not a or not c:
            return RatFunc.const(self.ctx, 0)
        if b.is_one() and d.is_one():
            return RatFunc.from_poly(a * c)
        g1 = a.gcd(d) if not d.is_one() else d
        g2 = c.gcd(b) if not b.is_one() else b
        if not g1.is_one():
            a, d = a // g1, d // g1
        if not g2.is_one():
            c, b = c // g2, b // g2
        return RatFunc(a * c, b * d, True)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num:
            raise DivisionByZero("inverse of zero in F_q(T)")
        num, den = self.den, self.num
        if den.lead != 1:
            inv = self.ctx.inv_code(den.lead)
            num, den = num.scale(inv), den.scale(inv)
        return RatFunc(num, den, True)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num**e, self.den**e, True)

    def frob(self, k: int = 1) -> RatFunc:
        """x -> x**(q**k); canonical form is preserved, so no gcd is needed."""
        if k == 0:
            return self
        return RatFunc(self.num.frob(k), self.den.frob(k), True)

    @property
    def height(self) -> int:
        return weil_height(self)

    def __str__(self):
        n, d = poly_str(self.num), poly_str(self.den)
        if self.den.is_one():
            return n
        if not _ATOM.match(n):
            n = "(%s)" % n
        if not _ATOM.match(d):
            d = "(%s)" % d
        return "%s/%s" % (n, d)

    def __repr__(self):
        return "RatFunc(%s)" % self


def as_ratfunc(ctx: FqContext, x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc.from_poly(x)
    return RatFunc.const(ctx, x)


# ---------------------------------------------------------------------------
# factorization


def _powmod(f: Poly, e: int, m: Poly) -> Poly:
    t = f.ctx.tables
    result, base = (1,), K.poly_rem(t, f.c, m.c)
    while e:
        if e & 1:
            result = K.poly_rem(t, K.poly_mul(t, result, base), m.c)
        e >>= 1
        if e:
            base = K.poly_rem(t, K.poly_mul(t, base, base), m.c)
    return Poly(f.ctx, result, True)


def _pth_root(f: Poly) -> Poly:
    ctx = f.ctx
    root_exp = ctx.q // ctx.p  # a**(q/p) is the p-th root of a in F_q
    coeffs = [ctx.pow_code(a, root_exp) for a in f.c[:: ctx.p]]
    return Poly(ctx, tuple(coeffs), True)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree factors of a monic polynomial as ``(g, multiplicity)`` pairs."""
    if f.degree <= 0:
        return []
    p = f.ctx.p
    out: list[tuple[Poly, int]] = []
    df = f.derivative()
    if not df:
        return [(g, e * p) for g, e in squarefree_decomposition(_pth_root(f))]
    c = f.gcd(df)
    w = f // c
    i = 1
    while not w.is_one():
        y = w.gcd(c)
        z = w // y
        if not z.is_one():
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if not c.is_one():
        out.extend((g, e * p) for g, e in squarefree_decomposition(_pth_root(c)))
    return out


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split a squarefree monic polynomial into products of same-degree irreducibles."""
    ctx = f.ctx
    x = Poly.T(ctx)
    h = x
    out = []
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = _powmod(h, ctx.q, f)
        u = f.gcd(h - x)
        if not u.is_one():
            out.append((u, d))
            f = f // u
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    ctx = f.ctx
    if f.degree == d:
        return [f]
    n = f.degree
    while True:
        a = Poly.from_codes(ctx, [rng.randrange(ctx.q) for _ in range(n)])
        if a.degree < 1:
            continue
        if ctx.p == 2:
            # absolute trace F_{2^(md)} -> F_2 composed with a
            b = a % f
            acc = b
            for _ in range(ctx.m * d - 1):
                b = (b * b) % f
                acc = acc + b
        else:
            acc = _powmod(a, (ctx.q**d - 1) // 2, f) - 1
        g = f.gcd(acc)
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


@lru_cache(maxsize=4096)
def _factor_monic(f: Poly, seed: int) -> tuple:
    rng = random.Random(seed)
    factors: dict = {}
    for g, e in squarefree_decomposition(f):
        for u, d in distinct_degree(g):
            for h in equal_degree(u, d, rng):
                factors[h] = factors.get(h, 0) + e
    return tuple(sorted(factors.items(), key=lambda item: item[0].sort_key()))


def factorize(f: Poly, seed: int | None = None) -> tuple[FieldElement, list[tuple[Poly, int]]]:
    """Factor ``f`` as ``unit * prod(P**e)`` with monic irreducible, distinct P.

    Factors are sorted by degree, then by coefficients from the top down.
    """
    if not f:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    unit = FieldElement(f.ctx, f.lead)
    return unit, list(_factor_monic(f.monic(), DEFAULT_SEED if seed is None else seed))


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    _, facs = factorize(f)
    return len(facs) == 1 and facs[0][1] == 1


# ---------------------------------------------------------------------------
# places and valuations


@dataclass(frozen=True)
class Place:
    """A place of K0: a monic irreducible P (finite) or infinity (P is None)."""

    P: Poly | None

    @classmethod
    def finite(cls, P: Poly) -> Place:
        if P.lead != 1 or not is_irreducible(P):
            raise NotIrreducible("%s is not monic irreducible" % P)
        return cls(P)

    @classmethod
    def infinity(cls) -> Place:
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.P is None

    @property
    def fv(self) -> int:
        """Residual degree: deg P for a finite place, 1 at infinity."""
        return 1 if self.P is None else self.P.degree

    def sort_key(self):
        return (1, ()) if self.P is None else (0, self.P.sort_key())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "inf" if self.P is None else str(self.P)

    def __repr__(self):
        return "Place(%s)" % self


def multiplicity(f: Poly, P: Poly) -> int:
    """Largest e with P**e dividing the nonzero polynomial f."""
    if not f:
        raise ZeroArgument("multiplicity in the zero polynomial")
    if P.c == (0, 1):
        e = 0
        while not f.c[e]:
            e += 1
        return e
    t = f.ctx.tables
    count = 0
    powers = [P.c]
    cur = f.c
    # climb with P, P^2, P^4, ... then descend
    while True:
        qt, r = K.poly_divmod(t, cur, powers[-1])
        if r:
            break
        cur = qt
        count += 1 << (len(powers) - 1)
        if 2 * (len(powers[-1]) - 1) > len(cur) - 1:
            break
        powers.append(K.poly_mul(t, powers[-1], powers[-1]))
    for k in range(len(powers) - 1, -1, -1):
        if len(powers[k]) > len(cur):
            continue
        qt, r = K.poly_divmod(t, cur, powers[k])
        if not r:
            cur = qt
            count += 1 << k
    return count


def ord_at(v: Place, x) -> int | float:
    """Normalized valuation of ``x`` at ``v``; ``INF`` for zero."""
    if isinstance(x, Poly):
        x = RatFunc.from_poly(x)
    elif not isinstance(x, RatFunc):
        x = as_ratfunc(v.P.ctx, x) if v.P is not None else x
    if not x:
        return INF
    if v.P is None:
        return x.den.degree - x.num.degree
    return multiplicity(x.num, v.P) - multiplicity(x.den, v.P)


def support(x: RatFunc) -> frozenset:
    """Places where ``ord_at`` is nonzero."""
    if isinstance(x, Poly):
        x = RatFunc.from_poly(x)
    if not x:
        raise ZeroArgument("support of zero is undefined")
    places = set()
    for part in (x.num, x.den):
        if part.degree > 0:
            places.update(Place(P) for P, _ in factorize(part)[1])
    if x.num.degree != x.den.degree:
        places.add(Place(None))
    return frozenset(places)


def weil_height(x) -> int:
    """max(deg num, deg den) for x != 0, and 0 for x = 0."""
    if isinstance(x, Poly):
        return max(x.degree, 0)
    if not x:
        return 0
    return max(x.num.degree, x.den.degree)
