"""Dense exact linear algebra over the coefficient field."""

from __future__ import annotations

from typing import Sequence

from .coeffs import RationalFunction
from .errors import ArgumentError, VerificationError

Matrix = list  # list of lists of RationalFunction


def identity(n: int, names=("r", "s")) -> Matrix:
    one = RationalFunction.lift(1, names)
    zero = RationalFunction.lift(0, names)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    k = len(b)
    zero = a[0][0] * 0 if a[0] else None
    out = []
    for row in a:
        new = []
        for j in range(len(b[0])):
            acc = zero
            for t in range(k):
                if not row[t].is_zero() and not b[t][j].is_zero():
                    acc = acc + row[t] * b[t][j]
            new.append(acc)
        out.append(new)
    return out


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises if the matrix is singular."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ArgumentError("inverse of a non-square matrix")
    if n == 0:
        return []
    names = m[0][0].names
    aug = [list(row) + e for row, e in zip(m, identity(n, names))]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise VerificationError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def is_identity(m: Matrix) -> bool:
    return all((x == 1) if i == j else x.is_zero() for i, row in enumerate(m) for j, x in enumerate(row))


def vec_mat(v: Sequence[RationalFunction], m: Matrix) -> list[RationalFunction]:
    """Row vector times matrix."""
    if not m:
        return []
    out = []
    for j in range(len(m[0])):
        acc = v[0] * 0 if v else RationalFunction.lift(0)
        for i, x in enumerate(v):
            if not x.is_zero() and not m[i][j].is_zero():
                acc = acc + x * m[i][j]
        out.append(acc)
    return out
