"""Pure-Python dense polynomial kernels over a finite field F_q.

Polynomials are tuples of integer field codes, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.  Field codes are integers in
``range(q)``: for a prime field they are residues, for an extension field
they encode the coefficient vector in base ``p`` and arithmetic goes through
the flat ``q*q`` tables held by :class:`Tables`.

This module is the fallback used when the compiled ``_kernels`` extension is
unavailable; both expose the same functions with the same semantics.
"""

BACKEND = "python"

# below this length schoolbook multiplication beats integer packing
_KRONECKER_MIN = 24


class Tables:
    __slots__ = ("p", "q", "prime", "add", "sub", "mul", "neg", "inv")

    def __init__(self, p, m, add=None, mul=None):
        self.p = p
        self.q = q = p**m
        self.prime = m == 1
        if self.prime:
            self.add = self.sub = self.mul = None
            self.neg = [(-a) % p for a in range(p)]
            self.inv = [0] + [pow(a, -1, p) for a in range(1, p)]
            return
        self.add = list(add)
        self.mul = list(mul)
        self.neg = [0] * q
        self.inv = [0] * q
        for a in range(q):
            row = a * q
            for b in range(q):
                if add[row + b] == 0:
                    self.neg[a] = b
                if mul[row + b] == 1:
                    self.inv[a] = b
        self.sub = [add[a * q + self.neg[b]] for a in range(q) for b in range(q)]


def make_tables(p, m, add=None, mul=None):
    return Tables(p, m, add, mul)


def _trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def poly_add(t, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    if t.prime:
        p = t.p
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
    else:
        add, q = t.add, t.q
        for i, c in enumerate(b):
            out[i] = add[out[i] * q + c]
    return _trim(out)


def poly_neg(t, a):
    neg = t.neg
    return tuple(neg[c] for c in a)


def poly_sub(t, a, b):
    return poly_add(t, a, poly_neg(t, b))


def poly_scale(t, a, c):
    if not c:
        return ()
    if c == 1:
        return tuple(a)
    if t.prime:
        p = t.p
        return tuple(x * c % p for x in a)
    mul, q = t.mul, t.q
    return tuple(mul[x * q + c] for x in a)


def _pack(a, digits):
    fmt = "0%dx" % digits
    return int("".join(format(c, fmt) for c in reversed(a)), 16)


def _mul_kronecker(p, a, b):
    bound = min(len(a), len(b)) * (p - 1) ** 2
    digits = (bound.bit_length() + 3) // 4
    n = len(a) + len(b) - 1
    prod = _pack(a, digits) * _pack(b, digits)
    s = format(prod, "x").rjust(n * digits, "0")
    out = [0] * n
    end = len(s)
    for i in range(n):
        out[i] = int(s[end - (i + 1) * digits:end - i * digits], 16) % p
    return _trim(out)


def poly_mul(t, a, b):
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    if t.prime:
        p = t.p
        if len(b) == 1:
            return poly_scale(t, a, b[0])
        if len(b) >= _KRONECKER_MIN:
            return _mul_kronecker(p, a, b)
        out = [0] * (len(a) + len(b) - 1)
        for j, y in enumerate(b):
            if y:
                for i, x in enumerate(a):
                    out[i + j] += x * y
        return _trim([c % p for c in out])
    add, mul, q = t.add, t.mul, t.q
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                if x:
                    k = i + j
                    out[k] = add[out[k] * q + mul[x * q + y]]
    return _trim(out)


def poly_divmod(t, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), tuple(a)
    r = list(a)
    db = len(b) - 1
    inv_lead = t.inv[b[-1]]
    quo = [0] * (len(a) - db)
    if t.prime:
        p = t.p
        for k in range(len(a) - 1, db - 1, -1):
            c = r[k] % p
            if not c:
                continue
            c = c * inv_lead % p
            s = k - db
            quo[s] = c
            for j in range(db + 1):
                if b[j]:
                    r[s + j] -= c * b[j]
        rem = [x % p for x in r[:db]]
        return _trim(quo), _trim(rem)
    sub, mul, q = t.sub, t.mul, t.q
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        c = mul[c * q + inv_lead]
        s = k - db
        quo[s] = c
        for j in range(db + 1):
            if b[j]:
                r[s + j] = sub[r[s + j] * q + mul[c * q + b[j]]]
    return _trim(quo), _trim(r[:db])


def poly_rem(t, a, b):
    return poly_divmod(t, a, b)[1]


def poly_monic(t, a):
    if not a or a[-1] == 1:
        return tuple(a)
    return poly_scale(t, a, t.inv[a[-1]])


def poly_gcd(t, a, b):
    """Monic greatest common divisor (``()`` when both inputs vanish)."""
    while b:
        a, b = b, poly_rem(t, a, b)
    return poly_monic(t, a)
