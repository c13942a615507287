"""Full-rank A-lattices in K0^r, A = F_q[T], with index calculus.

A lattice is stored as ``N / d``: a monic denominator d of minimal degree and
an integral r x r matrix N in column Hermite normal form.  Columns of the
basis generate the lattice.  N is upper triangular with monic pivots on the
diagonal, and every entry to the right of a pivot has degree below it.

Indices are returned as exponents: ``index(L, M) = e`` means (M : L) = q^e.
"""

from __future__ import annotations

from .errors import NotContained, RankMismatch, SingularMatrix
from .funcfield import Poly, RatFunc, as_ratfunc
from .gf import FqContext


def _zero(ctx):
    return Poly.const(ctx, 0)


def _one(ctx):
    return Poly.const(ctx, 1)


def _lcm(a: Poly, b: Poly) -> Poly:
    return (a * b).exact_div(a.gcd(b)).monic()


def identity(ctx, r):
    return [[_one(ctx) if i == j else _zero(ctx) for j in range(r)] for i in range(r)]


# ---------------------------------------------------------------------------
# column operations, optionally mirrored on a transform matrix U

def _col_swap(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def _col_addmul(M, dst, src, k: Poly):
    # col_dst -= k * col_src
    for row in M:
        if row[src]:
            row[dst] = row[dst] - k * row[src]


def _col_scale(M, j, code):
    for row in M:
        row[j] = row[j].scale(code)


def hnf(B, transform=False):
    """Column Hermite normal form of an integral r x n matrix of rank r.

    Returns the r x r upper triangular form H (the trailing n - r columns of
    the reduced matrix are zero and dropped).  With ``transform=True`` also
    returns the unimodular n x n U with B * U = [H | 0].
    """
    r, n = len(B), len(B[0])
    ctx = B[0][0].ctx
    M = [list(row) for row in B]
    U = identity(ctx, n) if transform else None
    mats = (M, U) if transform else (M,)
    # the pivot for row i lands in column (n - r) + i
    for i in range(r - 1, -1, -1):
        target = n - r + i
        active = range(0, target + 1)
        while True:
            nz = [j for j in active if M[i][j]]
            if not nz:
                raise SingularMatrix("matrix does not have full row rank")
            # lowest degree, then lowest column index
            p = min(nz, key=lambda j: (M[i][j].degree, j))
            if len(nz) == 1:
                break
            for j in nz:
                if j != p:
                    k = M[i][j] // M[i][p]
                    for X in mats:
                        _col_addmul(X, j, p, k)
        if p != target:
            for X in mats:
                _col_swap(X, p, target)
        lead = M[i][target].lead
        if lead != 1:
            inv = ctx.inv_code(lead)
            for X in mats:
                _col_scale(X, target, inv)
    off = n - r
    for i in range(r - 1, -1, -1):
        piv = M[i][off + i]
        for j in range(off + i + 1, n):
            if M[i][j].degree >= piv.degree:
                k = M[i][j] // piv
                for X in mats:
                    _col_addmul(X, j, off + i, k)
    H = [row[off:] for row in M]
    if transform:
        return H, U
    return H


def smith_invariants(M) -> list[Poly]:
    """Monic invariant factors d_1 | d_2 | ... of a nonsingular square matrix."""
    r = len(M)
    ctx = M[0][0].ctx
    A = [list(row) for row in M]
    out = []
    for k in range(r):
        while True:
            nz = [(i, j) for i in range(k, r) for j in range(k, r) if A[i][j]]
            if not nz:
                raise SingularMatrix("singular matrix has no Smith form")
            pi, pj = min(nz, key=lambda ij: (A[ij[0]][ij[1]].degree, ij))
            A[k], A[pi] = A[pi], A[k]
            for row in A:
                row[k], row[pj] = row[pj], row[k]
            piv = A[k][k]
            dirty = False
            for i in range(k + 1, r):
                if A[i][k]:
                    qt = A[i][k] // piv
                    A[i] = [a - qt * b for a, b in zip(A[i], A[k])]
                    dirty = dirty or bool(A[i][k])
            for j in range(k + 1, r):
                if A[k][j]:
                    qt = A[k][j] // piv
                    for row in A:
                        row[j] = row[j] - qt * row[k]
                    dirty = dirty or bool(A[k][j])
            if dirty:
                continue
            # enforce piv | every remaining entry
            bad = next(
                ((i, j) for i in range(k + 1, r) for j in range(k + 1, r) if A[i][j] % piv),
                None,
            )
            if bad is None:
                break
            A[k] = [a + b for a, b in zip(A[k], A[bad[0]])]
        out.append(A[k][k].monic())
    return out


def _det_upper(N) -> Poly:
    d = _one(N[0][0].ctx)
    for i, row in enumerate(N):
        d = d * row[i]
    return d


class ALattice:
    """The A-module generated by the columns of ``N / d``."""

    __slots__ = ("ctx", "r", "d", "N")

    def __init__(self, ctx: FqContext, d: Poly, N):
        self.ctx = ctx
        self.r = len(N)
        self.d = d
        self.N = N

    @classmethod
    def from_integral(cls, M, d: Poly | None = None) -> ALattice:
        """Lattice spanned by the columns of M / d (M may have extra columns)."""
        ctx = M[0][0].ctx
        d = _one(ctx) if d is None else d
        H = hnf(M)
        g = d
        for row in H:
            for a in row:
                if a:
                    g = g.gcd(a)
        g = g.monic()
        if not g.is_one():
            H = [[a // g for a in row] for row in H]
            d = d // g
        return cls(ctx, d.monic(), H)

    @classmethod
    def from_matrix(cls, ctx: FqContext, rows) -> ALattice:
        """From a square matrix over K0 given row by row; columns are generators."""
        rows = [[as_ratfunc(ctx, x) for x in row] for row in rows]
        r = len(rows)
        if r == 0 or any(len(row) != len(rows[0]) for row in rows) or len(rows[0]) < r:
            raise RankMismatch("lattice matrix must have r rows and at least r columns")
        d = _one(ctx)
        for row in rows:
            for x in row:
                d = _lcm(d, x.den)
        M = [[(x * RatFunc.from_poly(d)).num for x in row] for row in rows]
        return cls.from_integral(M, d)

    @classmethod
    def standard(cls, ctx, r) -> ALattice:
        return cls(ctx, _one(ctx), identity(ctx, r))

    @classmethod
    def diagonal(cls, ctx, entries) -> ALattice:
        r = len(entries)
        return cls.from_matrix(
            ctx, [[entries[i] if i == j else 0 for j in range(r)] for i in range(r)]
        )

    def basis(self) -> list[list[RatFunc]]:
        return [[RatFunc(a, self.d) for a in row] for row in self.N]

    def scaled(self, c) -> ALattice:
        c = as_ratfunc(self.ctx, c)
        M = [[a * c.num for a in row] for row in self.N]
        return ALattice.from_integral(M, self.d * c.den)

    def __eq__(self, other):
        return (
            isinstance(other, ALattice)
            and self.r == other.r
            and self.d == other.d
            and self.N == other.N
        )

    def __hash__(self):
        return hash((self.d, tuple(tuple(row) for row in self.N)))

    def __le__(self, other):
        return contains(other, self)

    def to_json(self) -> dict:
        return {"rank": self.r, "basis": [[str(x) for x in row] for row in self.basis()]}

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.basis()) + "]"

    def __repr__(self):
        return "ALattice(%s)" % self


def _check_rank(L1: ALattice, L2: ALattice):
    if L1.r != L2.r:
        raise RankMismatch("ranks %d and %d differ" % (L1.r, L2.r))


def _common(L1: ALattice, L2: ALattice):
    """Integral bases of D*L1 and D*L2 for D = lcm of the denominators."""
    D = _lcm(L1.d, L2.d)
    a, b = D // L1.d, D // L2.d
    M1 = [[x * a for x in row] for row in L1.N]
    M2 = [[x * b for x in row] for row in L2.N]
    return D, M1, M2


def lattice_sum(L1: ALattice, L2: ALattice) -> ALattice:
    _check_rank(L1, L2)
    D, M1, M2 = _common(L1, L2)
    return ALattice.from_integral([r1 + r2 for r1, r2 in zip(M1, M2)], D)


def lattice_intersect(L1: ALattice, L2: ALattice) -> ALattice:
    """Via the A-kernel of (x, y) -> M1 x - M2 y, read off a unimodular transform."""
    _check_rank(L1, L2)
    D, M1, M2 = _common(L1, L2)
    r = L1.r
    negM2 = [[-x for x in row] for row in M2]
    _, U = hnf([r1 + r2 for r1, r2 in zip(M1, negM2)], transform=True)
    # [M1 | -M2] U = [0 | H]: the first r columns of U span the kernel
    X = [row[:r] for row in U[:r]]
    zero = _zero(L1.ctx)
    image = [
        [sum((M1[i][k] * X[k][j] for k in range(r)), zero) for j in range(r)] for i in range(r)
    ]
    return ALattice.from_integral(image, D)


def transition(Lsub: ALattice, Lsup: ALattice) -> list[list[RatFunc]]:
    """M over K0 with basis(Lsub) = basis(Lsup) * M."""
    _check_rank(Lsub, Lsup)
    r = Lsub.r
    # Nsup * X = Nsub by back substitution; Nsup is upper triangular
    X = [[None] * r for _ in range(r)]
    for j in range(r):
        for i in range(r - 1, -1, -1):
            acc = RatFunc.from_poly(Lsub.N[i][j])
            for k in range(i + 1, r):
                if Lsup.N[i][k]:
                    acc = acc - RatFunc.from_poly(Lsup.N[i][k]) * X[k][j]
            X[i][j] = acc / RatFunc.from_poly(Lsup.N[i][i])
    scale = RatFunc(Lsup.d, Lsub.d)
    return [[x * scale for x in row] for row in X]


def contains(Lsup: ALattice, Lsub: ALattice) -> bool:
    return all(x.is_poly() for row in transition(Lsub, Lsup) for x in row)


def index(Lsub: ALattice, Lsup: ALattice) -> int:
    """e with (Lsup : Lsub) = q^e, from the Smith invariants of the transition matrix."""
    M = transition(Lsub, Lsup)
    if not all(x.is_poly() for row in M for x in row):
        raise NotContained("lattice is not a sublattice")
    e = sum(dv.degree for dv in smith_invariants([[x.num for x in row] for row in M]))
    # cross-check against deg det from the triangular forms
    r = Lsub.r
    det_deg = (
        _det_upper(Lsub.N).degree
        - _det_upper(Lsup.N).degree
        + r * (Lsup.d.degree - Lsub.d.degree)
    )
    assert e == det_deg, (e, det_deg)
    return e


def covolume_identity_check(L1: ALattice, L2: ALattice, Lref: ALattice) -> tuple[int, int, bool]:
    """(lhs, rhs, equal) for the index form of the covolume parallelogram identity."""
    lhs = index(Lref, lattice_sum(L1, L2)) + index(Lref, lattice_intersect(L1, L2))
    rhs = index(Lref, L1) + index(Lref, L2)
    return lhs, rhs, lhs == rhs
