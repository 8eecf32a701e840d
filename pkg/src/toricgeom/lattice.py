"""Exact integer and rational linear algebra.

All matrices here are small and dense.  Integer entries are arbitrary
precision; rational helpers use :class:`fractions.Fraction`.  Every routine is
deterministic: pivots are selected by smallest (|value|, row, column).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ValidationError

Vec = tuple[int, ...]


# ---------------------------------------------------------------------------
# vector helpers


def vec(xs) -> Vec:
    return tuple(int(x) for x in xs)


def dot(a, b):
    if len(a) != len(b):
        raise ValidationError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vscale(c, a):
    return tuple(c * x for x in a)


def content(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitivize(v) -> Vec:
    """Divide an integer vector by the gcd of its entries (zero is unchanged)."""
    g = content(v)
    if g in (0, 1):
        return tuple(v)
    return tuple(x // g for x in v)


# ---------------------------------------------------------------------------
# integer matrices


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix with explicit shape; `data` holds the rows."""

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValidationError("matrix shape does not match data")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "IntMatrix":
        rows = tuple(vec(r) for r in rows)
        if rows:
            cols = len(rows[0])
        elif cols is None:
            raise ValidationError("column count required for a matrix with no rows")
        return cls(len(rows), cols, rows)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major flat view of the entries."""
        return tuple(x for row in self.data for x in row)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.data[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def col(self, j: int) -> Vec:
        return tuple(self.data[i][j] for i in range(self.rows))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValidationError("matrix product shape mismatch")
        ot = other.transpose()
        return IntMatrix(self.rows, other.cols,
                         tuple(tuple(dot(r, c) for c in ot.data) for r in self.data))

    def apply(self, v) -> Vec:
        return tuple(dot(r, v) for r in self.data)


def det_int(A: IntMatrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    if A.rows != A.cols:
        raise ValidationError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    m = [list(r) for r in A.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SNFResult:
    """U @ A @ V == D with U, V unimodular and D diagonal, d1 | d2 | ..."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    def diagonal(self) -> tuple[int, ...]:
        k = min(self.D.rows, self.D.cols)
        return tuple(self.D.data[i][i] for i in range(k))


def smith_normal_form(A: IntMatrix) -> SNFResult:
    m, n = A.rows, A.cols
    D = [list(r) for r in A.data]
    U = [list(r) for r in IntMatrix.identity(m).data]
    V = [list(r) for r in IntMatrix.identity(n).data]

    def row_sub(i, j, q):  # row i -= q * row j
        D[i] = [a - q * b for a, b in zip(D[i], D[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_sub(j, t, q):  # col j -= q * col t
        for r in D:
            r[j] -= q * r[t]
        for r in V:
            r[j] -= q * r[t]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def negate_row(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v != 0 and (best is None or (abs(v), i, j) < best):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(bi, t)
        if bj != t:
            swap_cols(bj, t)
        while True:
            if D[t][t] < 0:
                negate_row(t)
            dirty = False
            for i in range(t + 1, m):
                if D[i][t] != 0:
                    q = D[i][t] // D[t][t]
                    row_sub(i, t, q)
                    if D[i][t] != 0:
                        swap_rows(i, t)
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j] != 0:
                    q = D[t][j] // D[t][t]
                    col_sub(j, t, q)
                    if D[t][j] != 0:
                        swap_cols(j, t)
                        dirty = True
            if dirty:
                continue
            # enforce d_t | (remaining block) before moving on
            viol = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % D[t][t] != 0:
                        viol = i
                        break
                if viol is not None:
                    break
            if viol is None:
                break
            row_sub(t, viol, -1)
        t += 1
    return SNFResult(
        IntMatrix(m, n, tuple(tuple(r) for r in D)),
        IntMatrix(m, m, tuple(tuple(r) for r in U)),
        IntMatrix(n, n, tuple(tuple(r) for r in V)),
    )


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """Basis of the saturated integer kernel {v : A v = 0}, as columns."""
    snf = smith_normal_form(A)
    k = min(A.rows, A.cols)
    free = [j for j in range(A.cols) if j >= k or snf.D.data[j][j] == 0]
    cols = [snf.V.col(j) for j in free]
    return IntMatrix(A.cols, len(cols),
                     tuple(tuple(c[i] for c in cols) for i in range(A.cols)))


def cokernel_grading(A: IntMatrix) -> tuple[int, tuple[int, ...], IntMatrix]:
    """Describe Z^rows / (column span of A).

    Returns (free_rank, torsion invariant factors > 1, projection); the
    projection maps Z^rows onto the free part, so the j-th standard basis
    vector of Z^rows gets the degree given by column j.  Rows of the
    projection are sign-normalised (first nonzero entry positive).
    """
    snf = smith_normal_form(A)
    k = min(A.rows, A.cols)
    diag = snf.diagonal()
    free = [i for i in range(A.rows) if i >= k or diag[i] == 0]
    torsion = tuple(d for d in diag if d > 1)
    rows = []
    for i in free:
        row = snf.U.data[i]
        lead = next((x for x in row if x != 0), 0)
        rows.append(tuple(-x for x in row) if lead < 0 else row)
    proj = IntMatrix(len(free), A.rows, tuple(rows))
    return len(free), torsion, proj


def solve_integer(A: IntMatrix, b) -> Vec | None:
    """One integer solution of A x = b, or None if there is none."""
    snf = smith_normal_form(A)
    ub = snf.U.apply(vec(b))
    k = min(A.rows, A.cols)
    y = [0] * A.cols
    for i in range(A.rows):
        d = snf.D.data[i][i] if i < k else 0
        if d == 0:
            if ub[i] != 0:
                return None
        else:
            if ub[i] % d != 0:
                return None
            y[i] = ub[i] // d
    return snf.V.apply(y)


# ---------------------------------------------------------------------------
# rational elimination


def rational_rank(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / pr[c]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        rank += 1
        if rank == len(m):
            break
    return rank


def solve_rational(a_rows, b) -> list[Fraction] | None:
    """One rational solution of A x = b (free variables set to 0)."""
    m = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a_rows, b)]
    ncols = len(a_rows[0]) if a_rows else 0
    pivots = []
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / pr[c]
                m[i] = [a - f * b_ for a, b_ in zip(m[i], pr)]
        pivots.append(c)
        rank += 1
    for i in range(rank, len(m)):
        if m[i][-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = m[r][-1] / m[r][c]
    return x
