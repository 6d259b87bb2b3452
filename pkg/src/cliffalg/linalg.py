"""Small dense-matrix helpers, exact over Fraction / Gaussian rational entries.

Matrices are tuples of row tuples.  Sizes stay tiny (oracle use only), so
plain Gaussian elimination is fine.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple


def from_rows(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int, zero=Fraction(0)) -> Matrix:
    return tuple((zero,) * cols for _ in range(rows))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, s) -> Matrix:
    return tuple(tuple(x * s for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
                 for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def conj_transpose(a: Matrix) -> Matrix:
    return tuple(tuple(_conj(x) for x in col) for col in zip(*a))


def _conj(x):
    return x.conjugate() if hasattr(x, "conjugate") else x


def mat_trace(a: Matrix):
    t = a[0][0]
    for i in range(1, len(a)):
        t = t + a[i][i]
    return t


def kron(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for ra in a:
        for rb in b:
            rows.append(tuple(x * y for x in ra for y in rb))
    return tuple(rows)


def block_diag(a: Matrix, copies: int, zero=None) -> Matrix:
    n = len(a)
    if zero is None:
        zero = a[0][0] - a[0][0]
    rows = []
    for c in range(copies):
        for i in range(n):
            row = [zero] * (n * copies)
            for j in range(n):
                row[c * n + j] = a[i][j]
            rows.append(tuple(row))
    return tuple(rows)


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank by fraction-free-ish elimination (entries support / exactly)."""
    m = [list(row) for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][col]
        for i in range(r + 1, len(m)):
            if m[i][col]:
                factor = m[i][col] / pv
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def mat_inverse(a: Matrix) -> Matrix:
    """Exact Gauss-Jordan inverse; raises ZeroDivisionError if singular."""
    n = len(a)
    one = a[0][0] / a[0][0] if a[0][0] else _find_one(a)
    zero = one - one
    aug = [list(row) + [one if i == j else zero for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col]), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _find_one(a: Matrix):
    for row in a:
        for x in row:
            if x:
                return x / x
    raise ZeroDivisionError("matrix is singular")
