"""Finite fields F_q with q = p^m.

Elements are stored as integer codes in ``range(q)``: the code of
``c_0 + c_1 u + ... + c_{m-1} u^{m-1}`` (``u`` a root of the modulus) is
``sum(c_k * p**k)``.  Full addition and multiplication tables are built once
per context, which is what bounds ``q`` (see :data:`MAX_Q`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from . import kernels
from .errors import DivisionByZero, NonPrime, ReducibleModulus, UnsupportedSize

# Field tables have q*q entries.
MAX_Q = 256

# Default cap on tau-degrees; polygon slopes q**i stay exact Python ints anyway.
MAX_TAU_DEGREE = 64

# First monic irreducible found by enumeration, lowest coefficient first.
BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 0, 2, 1),
    (5, 2): (1, 1, 1),
    (5, 3): (1, 0, 1, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (1, 0, 1, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _fp_rem(p, a, b):
    a = list(a)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        s = len(a) - len(b)
        for i, x in enumerate(b):
            a[s + i] = (a[s + i] - c * x) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _fp_irreducible(p, poly):
    # trial division by every monic polynomial of degree <= m/2
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _fp_rem(p, poly, list(low) + [1]):
                return False
    return True


def _first_irreducible(p, m):
    """Smallest monic irreducible of degree m, low coefficients read as a base-p number."""
    for n in range(p**m):
        low = [(n // p**k) % p for k in range(m)]
        if low[0] and _fp_irreducible(p, low + [1]):
            return tuple(low + [1])
    raise AssertionError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True, eq=False)
class FqContext:
    """The finite field F_q, q = p**m, with an explicit modulus when m > 1."""

    p: int
    m: int
    modulus: tuple | None
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.m)
        add = mul = None
        if self.m > 1:
            add, mul = self._build_tables()
        tables = kernels.make_tables(self.p, self.m, add, mul)
        object.__setattr__(self, "tables", tables)
        object.__setattr__(self, "_add", add)
        object.__setattr__(self, "_mul", mul)
        object.__setattr__(self, "neg", list(tables.neg))
        object.__setattr__(self, "inv", list(tables.inv))

    def _digits(self, code):
        out = []
        for _ in range(self.m):
            code, c = divmod(code, self.p)
            out.append(c)
        return out

    def _code(self, digits):
        code = 0
        for c in reversed(digits):
            code = code * self.p + c
        return code

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        digits = [self._digits(a) for a in range(q)]
        add = [0] * (q * q)
        mul = [0] * (q * q)
        for a in range(q):
            da = digits[a]
            for b in range(q):
                db = digits[b]
                add[a * q + b] = self._code([(x + y) % p for x, y in zip(da, db)])
                prod = [0] * (2 * m - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        prod[i + j] += x * y
                prod = _fp_rem(p, [c % p for c in prod], self.modulus)
                mul[a * q + b] = self._code(prod + [0] * (m - len(prod)))
        return add, mul

    # element construction --------------------------------------------------
    def __call__(self, value) -> FieldElement:
        """Coerce an int (reduced mod p) or a coefficient vector to an element."""
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        digits = [int(c) % self.p for c in value]
        if len(digits) > self.m:
            raise ValueError("too many coefficients for this field")
        return FieldElement(self, self._code(digits + [0] * (self.m - len(digits))))

    def element(self, code: int) -> FieldElement:
        return FieldElement(self, code)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The class of ``u`` (a root of the modulus); equals 1 for prime fields."""
        return FieldElement(self, self.p if self.m > 1 else 1)

    def elements(self):
        return [FieldElement(self, a) for a in range(self.q)]

    # raw code arithmetic (used by the polynomial layers)
    def add_codes(self, a, b):
        return (a + b) % self.p if self.m == 1 else self._add[a * self.q + b]

    def sub_codes(self, a, b):
        return self.add_codes(a, self.neg[b])

    def mul_codes(self, a, b):
        return a * b % self.p if self.m == 1 else self._mul[a * self.q + b]

    def inv_code(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero in F_%d" % self.q)
        return self.inv[a]

    def pow_code(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self.mul_codes(result, a)
            a = self.mul_codes(a, a)
            e >>= 1
        return result

    def code_str(self, code: int) -> str:
        """Render an element as an integer (prime field) or polynomial in ``u``."""
        if self.m == 1:
            return str(code)
        terms = []
        for k, c in reversed(list(enumerate(self._digits(code)))):
            if not c:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else "u^%d" % k)
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append("%d*%s" % (c, mono))
        return " + ".join(terms) if terms else "0"

    def __eq__(self, other):
        return (
            isinstance(other, FqContext)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return "FqContext(F_%d)" % self.p
        return "FqContext(F_%d, modulus=%r)" % (self.q, self.modulus)


@dataclass(frozen=True)
class FieldElement:
    ctx: FqContext
    code: int

    @property
    def coeffs(self) -> list[int]:
        """Coefficient vector of length m in the polynomial basis 1, u, ..., u^(m-1)."""
        return self.ctx._digits(self.code)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise TypeError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return other % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.add_codes(self.code, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg[self.code])

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.sub_codes(self.code, b))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.mul_codes(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.mul_codes(self.code, self.ctx.inv_code(b)))

    def __rtruediv__(self, other):
        return FieldElement(self.ctx, self._other(other)) / self

    def __pow__(self, e: int):
        if e < 0:
            return invert(self) ** (-e)
        return FieldElement(self.ctx, self.ctx.pow_code(self.code, e))

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        return self.ctx.code_str(self.code)


def field_create(p: int, m: int = 1, modulus=None) -> FqContext:
    """Build (and cache) the context for F_{p^m}.

    ``modulus`` is the monic irreducible polynomial over F_p, lowest
    coefficient first; for m > 1 it defaults to :data:`BUILTIN_MODULI`.
    """
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    return _field_create(int(p), int(m), modulus)


@lru_cache(maxsize=None)
def _field_create(p, m, modulus):
    if not is_prime(p):
        raise NonPrime("%d is not prime" % p)
    if m < 1:
        raise UnsupportedSize("extension degree must be positive")
    if p**m > MAX_Q:
        raise UnsupportedSize("q = %d exceeds the supported maximum %d" % (p**m, MAX_Q))
    if m == 1:
        return FqContext(p, 1, None)
    if modulus is None:
        modulus = BUILTIN_MODULI.get((p, m)) or _first_irreducible(p, m)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise ReducibleModulus("modulus must be monic of degree %d" % m)
    if not _fp_irreducible(p, modulus):
        raise ReducibleModulus("modulus %r is reducible over F_%d" % (modulus, p))
    return FqContext(p, m, modulus)


def invert(a: FieldElement) -> FieldElement:
    return FieldElement(a.ctx, a.ctx.inv_code(a.code))


def frobenius(a: FieldElement, k: int = 1, base: int | None = None) -> FieldElement:
    """Return ``a**(base**k)``; ``base`` defaults to q and must be a power of p.

    With the default base the map is the identity on F_q, as it must be.
    """
    ctx = a.ctx
    if base is None:
        base = ctx.q
    b = base
    while b % ctx.p == 0:
        b //= ctx.p
    if b != 1:
        raise ValueError("Frobenius base must be a power of the characteristic")
    # a**(q-1) = 1 on units, so reduce the exponent modulo q - 1
    if a.code == 0:
        return a
    return FieldElement(ctx, ctx.pow_code(a.code, pow(base, k, ctx.q - 1) or (ctx.q - 1)))
