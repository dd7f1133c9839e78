"""Small finite fields and exact linear algebra over them.

Elements of ``GF(q)`` are the integers ``0..q-1``.  For a prime ``q`` this is
ordinary residue arithmetic; for ``q = p^k`` an element encodes the polynomial
whose base-``p`` digits are its coefficients, reduced modulo a fixed monic
irreducible polynomial.  Addition and multiplication go through precomputed
tables, which keeps the enumeration code field-agnostic.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .errors import ArgumentError

# fields used for counting and interpolation, in order
PRIME_POWER_LADDER = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32)

Vector = tuple
Matrix = list  # list of row tuples


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q = p^k``; raise if ``q`` is not a prime power."""
    if q < 2:
        raise ArgumentError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise ArgumentError(f"{q} is not a prime power")
    return p, k


def _digits(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(a % p)
        a //= p
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    a = 0
    for d in reversed(ds):
        a = a * p + d
    return a


def _polymulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # reduce by the monic modulus from the top degree down
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for j in range(k + 1):
                prod[d - k + j] = (prod[d - k + j] - c * modulus[j]) % p
    return prod[:k]


def _irreducible(p: int, k: int) -> list[int]:
    """Lexicographically first monic irreducible of degree ``k`` over F_p."""
    for tail in product(range(p), repeat=k):
        modulus = list(tail) + [1]
        if modulus[0] == 0:
            continue
        # a degree-k monic poly is irreducible iff the quotient ring has no zero divisors
        ok = True
        elems = [_digits(a, p, k) for a in range(1, p ** k)]
        for a in elems:
            if not any(_polymulmod(a, b, modulus, p) == [1] + [0] * (k - 1) for b in elems):
                ok = False
                break
        if ok:
            return modulus
    raise ArgumentError(f"no irreducible polynomial of degree {k} over F_{p}")


class GF:
    """Table-driven arithmetic in the field with ``q`` elements."""

    __slots__ = ("q", "p", "k", "add", "sub", "mul", "neg", "inv")

    def __init__(self, q: int):
        p, k = prime_power(q)
        self.q, self.p, self.k = q, p, k
        if k == 1:
            self.add = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        else:
            modulus = _irreducible(p, k)
            digits = [_digits(a, p, k) for a in range(q)]
            self.add = [[_undigits([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q)] for a in range(q)]
            self.mul = [[_undigits(_polymulmod(digits[a], digits[b], modulus, p), p) for b in range(q)] for a in range(q)]
        self.neg = [next(b for b in range(q) if self.add[a][b] == 0) for a in range(q)]
        self.sub = [[self.add[a][self.neg[b]] for b in range(q)] for a in range(q)]
        self.inv = [0] + [next(b for b in range(1, q) if self.mul[a][b] == 1) for a in range(1, q)]

    def __repr__(self) -> str:
        return f"GF({self.q})"

    # vectors and matrices ------------------------------------------------
    def axpy(self, c: int, x: Vector, y: Vector) -> Vector:
        """``c*x + y``."""
        mc = self.mul[c]
        add = self.add
        return tuple(add[mc[a]][b] for a, b in zip(x, y))

    def scale(self, c: int, x: Vector) -> Vector:
        mc = self.mul[c]
        return tuple(mc[a] for a in x)

    def mat_vec(self, m: Matrix, x: Vector) -> Vector:
        """Apply ``m`` (rows = output coordinates) to the column vector ``x``."""
        mul, add = self.mul, self.add
        out = []
        for row in m:
            acc = 0
            for a, b in zip(row, x):
                if a and b:
                    acc = add[acc][mul[a][b]]
            out.append(acc)
        return tuple(out)

    def mat_mul(self, a: Matrix, b: Matrix) -> Matrix:
        cols = list(zip(*b)) if b else []
        return [tuple(self._dot(row, col) for col in cols) for row in a]

    def _dot(self, x, y) -> int:
        mul, add = self.mul, self.add
        acc = 0
        for a, b in zip(x, y):
            if a and b:
                acc = add[acc][mul[a][b]]
        return acc

    def rref(self, rows: Sequence[Vector]) -> tuple[list[Vector], list[int]]:
        """Reduced row echelon form of the span of ``rows``: (basis, pivot columns)."""
        basis: list[list[int]] = []
        pivots: list[int] = []
        mul, add, neg, inv = self.mul, self.add, self.neg, self.inv
        for v in rows:
            w = list(v)
            for b, pc in zip(basis, pivots):
                c = w[pc]
                if c:
                    nc = neg[c]
                    mc = mul[nc]
                    w = [add[x][mc[y]] for x, y in zip(w, b)]
            lead = next((i for i, x in enumerate(w) if x), None)
            if lead is None:
                continue
            ic = inv[w[lead]]
            mi = mul[ic]
            w = [mi[x] for x in w]
            # clear the new pivot column from earlier rows
            for idx, b in enumerate(basis):
                c = b[lead]
                if c:
                    mc = mul[neg[c]]
                    basis[idx] = [add[x][mc[y]] for x, y in zip(b, w)]
            basis.append(w)
            pivots.append(lead)
        order = sorted(range(len(pivots)), key=pivots.__getitem__)
        return [tuple(basis[i]) for i in order], [pivots[i] for i in order]

    def rank(self, rows: Sequence[Vector]) -> int:
        return len(self.rref(rows)[1]) if rows else 0

    def nullity_of_system(self, rows: Sequence[Vector], nvars: int) -> int:
        """Dimension of the solution space of the homogeneous system ``rows``."""
        return nvars - self.rank(rows)

    def nullspace(self, rows: Sequence[Vector], nvars: int) -> list[Vector]:
        """Basis of the solutions ``x`` of ``row . x = 0`` for every row."""
        basis, pivots = self.rref(rows) if rows else ([], [])
        pivot_set = set(pivots)
        out = []
        for f in range(nvars):
            if f in pivot_set:
                continue
            x = [0] * nvars
            x[f] = 1
            for b, pc in zip(basis, pivots):
                if b[f]:
                    x[pc] = self.neg[b[f]]
            out.append(tuple(x))
        return out

    def is_invertible(self, m: Matrix) -> bool:
        return len(m) == len(m[0]) and self.rank(m) == len(m) if m else True

    # subspace enumeration -------------------------------------------------
    def subspaces(self, n: int, k: int) -> Iterator[list[Vector]]:
        """Every ``k``-dimensional subspace of ``F_q^n`` once, as an RREF basis."""
        if k < 0 or k > n:
            return
        if k == 0:
            yield []
            return
        q = self.q
        for pivots in combinations(range(n), k):
            pivot_set = set(pivots)
            free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivot_set]
            for values in product(range(q), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, j), v in zip(free, values):
                    rows[i][j] = v
                yield [tuple(r) for r in rows]

    def superspaces(self, n: int, base: Sequence[Vector], k: int) -> Iterator[list[Vector]]:
        """Every ``k``-dimensional subspace of ``F_q^n`` containing ``span(base)``."""
        basis, pivots = self.rref(base)
        u = len(basis)
        if k < u:
            return
        free_cols = [j for j in range(n) if j not in set(pivots)]
        for sub in self.subspaces(n - u, k - u):
            extra = []
            for row in sub:
                v = [0] * n
                for j, x in zip(free_cols, row):
                    v[j] = x
                extra.append(tuple(v))
            yield list(basis) + extra


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


def ladder(count: int, start: int = 0, q_max: int | None = None) -> list[int]:
    """The first ``count`` prime powers of the ladder after skipping ``start``."""
    qs = list(PRIME_POWER_LADDER[start : start + count])
    if len(qs) < count:
        raise ArgumentError("prime-power ladder exhausted")
    if q_max is not None and qs and max(qs) > q_max:
        from .errors import ResourceLimitError

        raise ResourceLimitError(f"need fields up to q={max(qs)}, budget allows q<={q_max}")
    return qs


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of ``F_q^n``."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def gl_order(n: int, q: int) -> int:
    out = 1
    for j in range(n):
        out *= q ** n - q ** j
    return out
