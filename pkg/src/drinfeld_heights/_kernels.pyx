# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense polynomial kernels over F_q.

Same contract as ``_kernels_py``: tuples of field codes, lowest degree first,
no trailing zeros.
"""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

from ._kernels_py import _mul_kronecker

cdef Py_ssize_t _KRONECKER_MIN_C = 4000


cdef class Tables:
    cdef public int p, q
    cdef public bint prime
    cdef int *add_t
    cdef int *sub_t
    cdef int *mul_t
    cdef int *neg_t
    cdef int *inv_t
    cdef public list neg, inv

    def __cinit__(self, int p, int m, add=None, mul=None):
        cdef int q = p ** m
        cdef int a, b
        self.p = p
        self.q = q
        self.prime = m == 1
        self.add_t = <int *> malloc(q * q * sizeof(int))
        self.sub_t = <int *> malloc(q * q * sizeof(int))
        self.mul_t = <int *> malloc(q * q * sizeof(int))
        self.neg_t = <int *> malloc(q * sizeof(int))
        self.inv_t = <int *> malloc(q * sizeof(int))
        if self.prime:
            for a in range(q):
                for b in range(q):
                    self.add_t[a * q + b] = (a + b) % p
                    self.mul_t[a * q + b] = (a * b) % p
        else:
            for a in range(q * q):
                self.add_t[a] = add[a]
                self.mul_t[a] = mul[a]
        for a in range(q):
            self.inv_t[a] = 0
            for b in range(q):
                if self.add_t[a * q + b] == 0:
                    self.neg_t[a] = b
                if self.mul_t[a * q + b] == 1:
                    self.inv_t[a] = b
        for a in range(q):
            for b in range(q):
                self.sub_t[a * q + b] = self.add_t[a * q + self.neg_t[b]]
        self.neg = [self.neg_t[a] for a in range(q)]
        self.inv = [self.inv_t[a] for a in range(q)]

    def __dealloc__(self):
        free(self.add_t)
        free(self.sub_t)
        free(self.mul_t)
        free(self.neg_t)
        free(self.inv_t)


def make_tables(p, m, add=None, mul=None):
    return Tables(p, m, add, mul)


cdef int *_load(tuple a, Py_ssize_t n) except NULL:
    cdef int *buf = <int *> malloc((n if n > 0 else 1) * sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(len(a)):
        buf[i] = a[i]
    for i in range(len(a), n):
        buf[i] = 0
    return buf


cdef tuple _store(int *buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return tuple([buf[i] for i in range(n)])


def poly_add(Tables t, tuple a, tuple b):
    cdef Py_ssize_t n = max(len(a), len(b)), i
    cdef int *x = _load(a, n)
    cdef int *y = _load(b, n)
    cdef int q = t.q
    try:
        for i in range(n):
            x[i] = t.add_t[x[i] * q + y[i]]
        return _store(x, n)
    finally:
        free(x)
        free(y)


def poly_sub(Tables t, tuple a, tuple b):
    cdef Py_ssize_t n = max(len(a), len(b)), i
    cdef int *x = _load(a, n)
    cdef int *y = _load(b, n)
    cdef int q = t.q
    try:
        for i in range(n):
            x[i] = t.sub_t[x[i] * q + y[i]]
        return _store(x, n)
    finally:
        free(x)
        free(y)


def poly_neg(Tables t, tuple a):
    return tuple([t.neg_t[<int> c] for c in a])


def poly_scale(Tables t, tuple a, int c):
    if c == 0:
        return ()
    if c == 1:
        return a
    cdef int q = t.q
    return tuple([t.mul_t[(<int> x) * q + c] for x in a])


def poly_mul(Tables t, tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, n
    if na == 0 or nb == 0:
        return ()
    n = na + nb - 1
    cdef int *x = _load(a, na)
    cdef int *y = _load(b, nb)
    cdef int *out
    cdef long long *acc
    cdef int p = t.p, q = t.q, yj
    cdef long long v
    if t.prime and min(na, nb) >= _KRONECKER_MIN_C:
        # big-int multiplication is subquadratic; schoolbook loses past this
        return _mul_kronecker(p, a, b)
    try:
        if t.prime and p < 46000:
            acc = <long long *> malloc(n * sizeof(long long))
            for i in range(n):
                acc[i] = 0
            # reduce periodically so the accumulator never overflows
            for j in range(nb):
                yj = y[j]
                if yj == 0:
                    continue
                for i in range(na):
                    acc[i + j] += <long long> x[i] * yj
                if (j & 1023) == 1023:
                    for i in range(n):
                        acc[i] %= p
            out = <int *> malloc(n * sizeof(int))
            for i in range(n):
                out[i] = <int> (acc[i] % p)
            free(acc)
        else:
            out = <int *> malloc(n * sizeof(int))
            for i in range(n):
                out[i] = 0
            for j in range(nb):
                yj = y[j]
                if yj == 0:
                    continue
                for i in range(na):
                    if x[i]:
                        out[i + j] = t.add_t[out[i + j] * q + t.mul_t[x[i] * q + yj]]
        try:
            return _store(out, n)
        finally:
            free(out)
    finally:
        free(x)
        free(y)


cdef Py_ssize_t _divmod_inplace(Tables t, int *r, Py_ssize_t na, int *y, Py_ssize_t nb, int *quo):
    # r is overwritten with the remainder (first nb-1 entries); returns quotient length
    cdef Py_ssize_t db = nb - 1, k, s, j
    cdef int q = t.q, c, inv_lead = t.inv_t[y[db]]
    for k in range(na - 1, db - 1, -1):
        c = r[k]
        s = k - db
        if c == 0:
            if quo != NULL:
                quo[s] = 0
            continue
        c = t.mul_t[c * q + inv_lead]
        if quo != NULL:
            quo[s] = c
        for j in range(db + 1):
            if y[j]:
                r[s + j] = t.sub_t[r[s + j] * q + t.mul_t[c * q + y[j]]]
    return na - db


def poly_divmod(Tables t, tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), nq
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if na < nb:
        return (), a
    cdef int *r = _load(a, na)
    cdef int *y = _load(b, nb)
    cdef int *quo = <int *> malloc((na - nb + 1) * sizeof(int))
    try:
        nq = _divmod_inplace(t, r, na, y, nb, quo)
        return _store(quo, nq), _store(r, nb - 1)
    finally:
        free(r)
        free(y)
        free(quo)


def poly_rem(Tables t, tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b)
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if na < nb:
        return a
    cdef int *r = _load(a, na)
    cdef int *y = _load(b, nb)
    try:
        _divmod_inplace(t, r, na, y, nb, NULL)
        return _store(r, nb - 1)
    finally:
        free(r)
        free(y)


def poly_monic(Tables t, tuple a):
    cdef Py_ssize_t n = len(a)
    if n == 0 or a[n - 1] == 1:
        return a
    return poly_scale(t, a, t.inv_t[<int> a[n - 1]])


def poly_gcd(Tables t, tuple a, tuple b):
    """Monic greatest common divisor, computed entirely in C buffers."""
    cdef Py_ssize_t na = len(a), nb = len(b), nt
    cdef int *x
    cdef int *y
    cdef int *tmp
    if nb > na:
        a, b = b, a
        na, nb = nb, na
    if nb == 0:
        return poly_monic(t, a)
    x = _load(a, na)
    y = _load(b, nb)
    try:
        while True:
            _divmod_inplace(t, x, na, y, nb, NULL)
            nt = nb - 1
            while nt > 0 and x[nt - 1] == 0:
                nt -= 1
            if nt == 0:
                return poly_monic(t, _store(y, nb))
            tmp = x
            x = y
            y = tmp
            na = nb
            nb = nt
    finally:
        free(x)
        free(y)
