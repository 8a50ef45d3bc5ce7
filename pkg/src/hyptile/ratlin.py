"""Exact rational linear algebra on arbitrary-precision integers.

Scalars are ``fractions.Fraction`` (always stored reduced, positive
denominator), vectors are tuples of Fractions and matrices are row-major
tuples of row tuples.  Everything here is exact; there is no floating
point anywhere in this module.

Determinants go through fraction-free Bareiss elimination on an
integer-scaled copy of the matrix, adjugates through cofactor minors, and
exact solves through adjugate/determinant (Cramer).  ``hnf`` computes a
column-style Hermite normal form over the integers: lower triangular,
positive diagonal, and every entry left of the diagonal reduced modulo
the diagonal entry of its row.  Two integer bases generate the same
lattice exactly when their HNFs coincide.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatchError, RankDeficientError, SingularMatrixError

Scalar = Union[int, Fraction]
Vec = tuple[Fraction, ...]
Mat = tuple[tuple[Fraction, ...], ...]
IntMat = tuple[tuple[int, ...], ...]


def frac(x, den=None) -> Fraction:
    """Coerce ints, strings like ``"2/5"`` or pairs to an exact Fraction."""
    if den is not None:
        return Fraction(x, den)
    return Fraction(x)


def vec(entries: Iterable) -> Vec:
    return tuple(Fraction(e) for e in entries)


def mat(rows: Iterable[Iterable]) -> Mat:
    m = tuple(tuple(Fraction(e) for e in row) for row in rows)
    if any(len(row) != len(m) for row in m):
        raise DimensionMismatchError("matrix must be square")
    return m


def identity(n: int) -> Mat:
    one, zero = Fraction(1), Fraction(0)
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def unit_vector(n: int, i: int, scale: Scalar = 1) -> Vec:
    s = Fraction(scale)
    return tuple(s if j == i else Fraction(0) for j in range(n))


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m))


def columns(m: Mat) -> tuple[Vec, ...]:
    return transpose(m)


def from_columns(cols: Iterable[Iterable]) -> Mat:
    return transpose(mat(cols))


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(u: Vec, s: Scalar) -> Vec:
    return tuple(a * s for a in u)


def mat_vec(m: Mat, v: Vec) -> Vec:
    if len(v) != len(m):
        raise DimensionMismatchError(f"matrix is {len(m)}x{len(m)}, vector has {len(v)} entries")
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    if len(a) != len(b):
        raise DimensionMismatchError("matrix dimensions differ")
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_scale(m: Mat, s: Scalar) -> Mat:
    return tuple(tuple(e * s for e in row) for row in m)


def denominator_lcm(m: Mat | Vec) -> int:
    """lcm of all entry denominators; 1 for integer input."""
    dens = []
    for row in m:
        if isinstance(row, Fraction) or isinstance(row, int):
            dens.append(Fraction(row).denominator)
        else:
            dens.extend(Fraction(e).denominator for e in row)
    return lcm(*dens) if dens else 1


def int_scaled(m: Mat) -> tuple[list[list[int]], int]:
    """Clear denominators: returns (integer rows, scale L) with L*m integral."""
    scale = denominator_lcm(m)
    rows = [[int(e * scale) for e in row] for row in m]
    return rows, scale


def _int_det_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; exact over Z."""
    n = len(rows)
    if n == 0:
        return 1
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det(m: Mat) -> Fraction:
    """Exact determinant of a square rational matrix."""
    rows, scale = int_scaled(m)
    d = _int_det_bareiss(rows)
    return Fraction(d, scale ** len(rows))


def _minor(m: Mat, drop_row: int, drop_col: int) -> Mat:
    return tuple(
        tuple(e for j, e in enumerate(row) if j != drop_col)
        for i, row in enumerate(m)
        if i != drop_row
    )


def adjugate(m: Mat) -> Mat:
    """adj(m) with m @ adj(m) = det(m) * I, defined even for singular m."""
    n = len(m)
    if n == 1:
        return ((Fraction(1),),)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            cof = det(_minor(m, j, i))
            row.append(cof if (i + j) % 2 == 0 else -cof)
        out.append(tuple(row))
    return tuple(out)


def solve_exact(m: Mat, v: Vec) -> Vec:
    """Unique exact solution of m @ x = v; raises SingularMatrixError."""
    d = det(m)
    if d == 0:
        raise SingularMatrixError("matrix has determinant 0")
    adj = adjugate(m)
    return tuple(e / d for e in mat_vec(adj, v))


def is_integral(x: Mat | Vec | Scalar) -> bool:
    """True iff every entry is an integer (denominator 1)."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x).denominator == 1
    for row in x:
        if isinstance(row, (int, Fraction)):
            if Fraction(row).denominator != 1:
                return False
        else:
            if any(Fraction(e).denominator != 1 for e in row):
                return False
    return True


def _as_int_rows(m: Sequence[Sequence]) -> list[list[int]]:
    rows = []
    for row in m:
        out = []
        for e in row:
            f = Fraction(e)
            if f.denominator != 1:
                raise ValueError("hnf requires an integer matrix")
            out.append(f.numerator)
        rows.append(out)
    if any(len(row) != len(rows) for row in rows):
        raise DimensionMismatchError("matrix must be square")
    return rows


def hnf(m: Sequence[Sequence]) -> IntMat:
    """Column-style Hermite normal form of a full-rank integer matrix.

    Convention: lower triangular, positive diagonal, and for i > j
    0 <= h[i][j] < h[i][i].  hnf(M1) == hnf(M2) iff the columns of M1 and
    M2 generate the same integer lattice.
    """
    rows = _as_int_rows(m)
    n = len(rows)
    cols = [[rows[i][j] for i in range(n)] for j in range(n)]
    for i in range(n):
        # gcd-reduce row i across the not-yet-fixed columns
        while True:
            live = [j for j in range(i, n) if cols[j][i] != 0]
            if not live:
                raise RankDeficientError(f"rank < {n}: row {i} unreachable")
            if len(live) == 1:
                pivot_col = live[0]
                break
            jmin = min(live, key=lambda j: abs(cols[j][i]))
            ref = cols[jmin]
            for j in live:
                if j == jmin:
                    continue
                t = cols[j][i] // ref[i]
                if t:
                    cols[j] = [a - t * b for a, b in zip(cols[j], ref)]
        if pivot_col != i:
            cols[i], cols[pivot_col] = cols[pivot_col], cols[i]
        if cols[i][i] < 0:
            cols[i] = [-a for a in cols[i]]
        # normalize entries left of the diagonal in row i
        for j in range(i):
            t = cols[j][i] // cols[i][i]
            if t:
                cols[j] = [a - t * b for a, b in zip(cols[j], cols[i])]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
