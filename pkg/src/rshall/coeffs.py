"""Exact coefficient arithmetic.

Three value types live here:

* :class:`LaurentPolynomial` -- sparse integer Laurent polynomials, by default in
  the two parameters ``r`` and ``s`` (other variable tuples such as ``("v",)``
  are supported for specializations).
* :class:`RationalFunction` -- quotients of Laurent polynomials, kept reduced so
  that equality is structural.
* :class:`IntPolynomial` -- integer polynomials in a single variable ``x``; Hall
  polynomials and automorphism-group orders are stored this way.

All values are immutable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import ArgumentError, InterpolationError, PoleError

RS = ("r", "s")
V = ("v",)

Exps = tuple  # exponent tuple, one entry per variable


def _add_exps(a: Exps, b: Exps) -> Exps:
    if len(a) == 2:
        return (a[0] + b[0], a[1] + b[1])
    return tuple(x + y for x, y in zip(a, b))


class LaurentPolynomial:
    """Integer Laurent polynomial stored as ``{exponents: coefficient}``.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are.
    """

    __slots__ = ("terms", "names", "_hash")

    def __init__(self, terms: Mapping[Exps, int] | None = None, names: tuple[str, ...] = RS):
        self.names = names
        if terms:
            self.terms = {tuple(e): int(c) for e, c in terms.items() if c}
            for e in self.terms:
                if len(e) != len(names):
                    raise ArgumentError(f"exponent {e} does not match variables {names}")
        else:
            self.terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, names: tuple[str, ...]) -> "LaurentPolynomial":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.names = names
        obj._hash = None
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def constant(cls, c: int, names: tuple[str, ...] = RS) -> "LaurentPolynomial":
        return cls._raw({(0,) * len(names): int(c)} if c else {}, names)

    @classmethod
    def monomial(cls, exps: Sequence[int], c: int = 1, names: tuple[str, ...] = RS) -> "LaurentPolynomial":
        exps = tuple(exps)
        if len(exps) != len(names):
            raise ArgumentError("exponent length mismatch")
        return cls._raw({exps: int(c)} if c else {}, names)

    @classmethod
    def gen(cls, name: str, names: tuple[str, ...] = RS) -> "LaurentPolynomial":
        i = names.index(name)
        return cls.monomial(tuple(1 if j == i else 0 for j in range(len(names))), 1, names)

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((0,) * len(self.names)) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.names != self.names:
                raise ArgumentError(f"ring mismatch {self.names} vs {other.names}")
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(out, self.names)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return LaurentPolynomial._raw({}, self.names)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exps(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPolynomial._raw(out, self.names)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self.terms.values()))) != 1:
                raise ArgumentError("negative powers only for unit monomials")
            (e, c), = self.terms.items()
            return LaurentPolynomial._raw({tuple(x * n for x in e): c ** (-n)}, self.names)
        result = LaurentPolynomial.constant(1, self.names)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.names)
        if isinstance(other, RationalFunction):
            return other == self
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.names, frozenset(self.terms.items())))
        return self._hash

    # structure ------------------------------------------------------------
    def min_exponents(self) -> Exps:
        if not self.terms:
            return (0,) * len(self.names)
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.names)))

    def shift(self, exps: Exps) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({_add_exps(e, exps): c for e, c in self.terms.items()}, self.names)

    def leading(self) -> tuple[Exps, int]:
        e = max(self.terms)
        return e, self.terms[e]

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def monomial_substitute(self, images: Sequence[Exps], names: tuple[str, ...]) -> "LaurentPolynomial":
        """Substitute each variable by a monomial of another ring.

        ``images[i]`` is the exponent vector (in ``names``) of the image of the
        i-th variable.
        """
        out: dict = {}
        k = len(names)
        for e, c in self.terms.items():
            ne = [0] * k
            for ei, img in zip(e, images):
                if ei:
                    for j in range(k):
                        ne[j] += ei * img[j]
            ne = tuple(ne)
            v = out.get(ne, 0) + c
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
        return LaurentPolynomial._raw(out, names)

    def swap_rs(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({(b, a): c for (a, b), c in self.terms.items()}, self.names)

    def evaluate(self, values: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for x, k in zip(values, e):
                t *= Fraction(x) ** k
            total += t
        return total

    # rendering ------------------------------------------------------------
    def to_text(self) -> str:
        """Canonical text: ``c*r^a*s^b`` monomials in decreasing exponent order."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"{n}^{k}" for n, k in zip(self.names, e))
            parts.append(f"{self.terms[e]}*{mono}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [list(e) + [c] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data: Iterable[Sequence[int]], names: tuple[str, ...] = RS) -> "LaurentPolynomial":
        return cls({tuple(row[:-1]): row[-1] for row in data}, names)

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.pretty()})"

    __str__ = pretty


# ---------------------------------------------------------------------------
# polynomial gcd (delegated to sympy's sparse polynomial rings)


@lru_cache(maxsize=None)
def _sympy_ring(names: tuple[str, ...]):
    from sympy import ZZ
    from sympy.polys.rings import ring

    R, *_ = ring(",".join(names), ZZ)
    return R


def _to_sympy(p: LaurentPolynomial):
    R = _sympy_ring(p.names)
    return R.from_dict(dict(p.terms))


def _from_sympy(f, names) -> LaurentPolynomial:
    return LaurentPolynomial({tuple(e): int(c) for e, c in f.items()}, names)


def _poly_gcd_cofactors(a: LaurentPolynomial, b: LaurentPolynomial):
    """gcd of two genuine polynomials (nonnegative exponents) with cofactors."""
    h, ca, cb = _to_sympy(a).cofactors(_to_sympy(b))
    return _from_sympy(h, a.names), _from_sympy(ca, a.names), _from_sympy(cb, a.names)


class RationalFunction:
    """Element of the fraction field of ``Z[r^{+-1}, s^{+-1}]``.

    Canonical form: the denominator is a polynomial not divisible by any
    variable, shares no factor with the numerator, and has a positive leading
    coefficient.  A Laurent polynomial therefore always has denominator 1, and
    equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        if isinstance(num, int):
            names = den.names if isinstance(den, LaurentPolynomial) else RS
            num = LaurentPolynomial.constant(num, names)
        if den is None:
            den = LaurentPolynomial.constant(1, num.names)
        elif isinstance(den, int):
            den = LaurentPolynomial.constant(den, num.names)
        if den.is_zero():
            raise PoleError("zero denominator")
        if num.names != den.names:
            raise ArgumentError("ring mismatch in fraction")
        if not _reduced:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @property
    def names(self) -> tuple[str, ...]:
        return self.num.names

    @classmethod
    def lift(cls, x, names: tuple[str, ...] = RS) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, LaurentPolynomial):
            return cls(x, LaurentPolynomial.constant(1, x.names), _reduced=True)
        if isinstance(x, int):
            return cls(LaurentPolynomial.constant(x, names), LaurentPolynomial.constant(1, names), _reduced=True)
        if isinstance(x, Fraction):
            return cls(LaurentPolynomial.constant(x.numerator, names), LaurentPolynomial.constant(x.denominator, names))
        raise TypeError(f"cannot lift {type(x).__name__}")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentPolynomial:
        if not self.den.is_one():
            raise ArgumentError(f"{self} is not a Laurent polynomial")
        return self.num

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def _other(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (LaurentPolynomial, int, Fraction)):
            return RationalFunction.lift(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num + other.num, self.den, _reduced=True)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num * other.num, self.den, _reduced=True)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise PoleError("division by zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFunction.lift(other, self.names) * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n, _reduced=self.den.is_one())

    def __eq__(self, other) -> bool:
        other = self._other(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def equals_cross(self, other: "RationalFunction") -> bool:
        """Equality via cross multiplication, independent of reduction."""
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def evaluate(self, values: Sequence) -> Fraction:
        d = self.den.evaluate(values)
        if d == 0:
            raise PoleError("denominator vanishes at evaluation point")
        return self.num.evaluate(values) / d

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data, names: tuple[str, ...] = RS) -> "RationalFunction":
        if isinstance(data, list):
            return cls.lift(LaurentPolynomial.from_json(data, names))
        return cls(LaurentPolynomial.from_json(data["num"], names), LaurentPolynomial.from_json(data["den"], names))

    def to_text(self) -> str:
        if self.den.is_one():
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    def pretty(self) -> str:
        if self.den.is_one():
            return self.num.pretty()
        return f"({self.num.pretty()})/({self.den.pretty()})"

    __str__ = pretty

    def __repr__(self) -> str:
        return f"RationalFunction({self.pretty()})"


def _normalize(num: LaurentPolynomial, den: LaurentPolynomial):
    one = LaurentPolynomial.constant(1, num.names)
    if num.is_zero():
        return num, one
    # move monomial factors of the denominator into the numerator
    dmin = den.min_exponents()
    den = den.shift(tuple(-x for x in dmin))
    num = num.shift(tuple(-x for x in dmin))
    if len(den.terms) == 1:
        c = den.terms[(0,) * len(den.names)]
        if c in (1, -1):
            return (num if c == 1 else -num), one
    nmin = num.min_exponents()
    num0 = num.shift(tuple(-x for x in nmin))
    g, num0, den = _poly_gcd_cofactors(num0, den)
    if den.leading()[1] < 0:
        num0, den = -num0, -den
    return num0.shift(nmin), den


# ---------------------------------------------------------------------------
# convenient constants

def r_(names=RS) -> RationalFunction:
    return RationalFunction.lift(LaurentPolynomial.gen("r", names))


def s_(names=RS) -> RationalFunction:
    return RationalFunction.lift(LaurentPolynomial.gen("s", names))


def rs_monomial(a: int, b: int, c: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial._raw({(a, b): c} if c else {}, RS)


def as_rational(x, names=RS) -> RationalFunction:
    return RationalFunction.lift(x, names)


# ---------------------------------------------------------------------------
# ring homomorphisms


def bar(c):
    """The involution exchanging ``r`` and ``s``."""
    if isinstance(c, LaurentPolynomial):
        return c.swap_rs()
    if isinstance(c, int):
        return c
    return RationalFunction(c.num.swap_rs(), c.den.swap_rs())


def substitute_monomials(c, images: Sequence[Exps], names: tuple[str, ...]):
    """Apply the monomial substitution ``var_i -> images[i]`` to ``c``."""
    if isinstance(c, LaurentPolynomial):
        return c.monomial_substitute(images, names)
    den = c.den.monomial_substitute(images, names)
    if den.is_zero():
        raise PoleError(f"denominator {c.den} vanishes under substitution")
    return RationalFunction(c.num.monomial_substitute(images, names), den)


def specialize_one_param(c):
    """Specialize ``r -> v``, ``s -> v^{-1}``."""
    return substitute_monomials(RationalFunction.lift(c), [(1,), (-1,)], V)


def v_bar(c):
    """The involution ``v -> v^{-1}`` on one-parameter values."""
    return substitute_monomials(RationalFunction.lift(c, V), [(-1,)], V)


def quantum_integer(l: int, eps: int = 1) -> RationalFunction:
    """``(r^{l eps} - s^{l eps}) / (r^{eps} - s^{eps})`` as a reduced element."""
    if l == 0:
        return RationalFunction.lift(0)
    num = rs_monomial(l * eps, 0) - rs_monomial(0, l * eps)
    den = rs_monomial(eps, 0) - rs_monomial(0, eps)
    return RationalFunction(num, den)


def quantum_factorial(t: int, eps: int = 1) -> RationalFunction:
    out = RationalFunction.lift(1)
    for i in range(1, t + 1):
        out = out * quantum_integer(i, eps)
    return out


# ---------------------------------------------------------------------------
# integer polynomials in x


class IntPolynomial:
    """Integer polynomial in one variable ``x``; ``coeffs[k]`` multiplies ``x^k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = IntPolynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Division by a polynomial with leading coefficient +-1."""
        if other.is_zero():
            raise PoleError("division by zero polynomial")
        lead = other.coeffs[-1]
        if lead not in (1, -1):
            raise ArgumentError("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        q = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + len(other.coeffs) - 1] * lead
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return IntPolynomial(q), IntPolynomial(rem)

    def __call__(self, value):
        if isinstance(value, (LaurentPolynomial, RationalFunction)):
            return substitute_x(self, value)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = str(abs(c)) if not mono else (mono if abs(c) == 1 else f"{abs(c)}*{mono}")
            out.append(("-" if c < 0 else "+", body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    __str__ = to_text

    def __repr__(self) -> str:
        return f"IntPolynomial({self.to_text()})"


def substitute_x(p: IntPolynomial, value) -> RationalFunction:
    """Evaluate ``p`` at a Laurent polynomial or rational function, exactly."""
    if isinstance(value, LaurentPolynomial):
        acc = LaurentPolynomial.constant(0, value.names)
        for c in reversed(p.coeffs):
            acc = acc * value + c
        return RationalFunction.lift(acc)
    acc = RationalFunction.lift(0, value.names)
    for c in reversed(p.coeffs):
        acc = acc * value + c
    return acc


def q_bracket(m: int) -> IntPolynomial:
    """``[[m]] = 1 + x + ... + x^{m-1}``."""
    return IntPolynomial([1] * m)


def q_bracket_factorial(m: int) -> IntPolynomial:
    out = IntPolynomial.const(1)
    for k in range(1, m + 1):
        out = out * q_bracket(k)
    return out


def interpolate(samples: Sequence[tuple[int, int]], degree_bound: int) -> IntPolynomial:
    """Integer polynomial of degree <= ``degree_bound`` through ``samples``.

    Uses the first ``degree_bound + 1`` samples (Newton form over exact
    rationals); any further samples must agree.  Raises
    :class:`InterpolationError` when a coefficient is not integral or an extra
    sample disagrees.
    """
    pts = [(int(x), int(y)) for x, y in samples]
    if len({x for x, _ in pts}) != len(pts):
        raise InterpolationError("sample points must be distinct")
    if len(pts) < degree_bound + 1:
        raise InterpolationError(f"need {degree_bound + 1} samples, got {len(pts)}")
    use = pts[: degree_bound + 1]
    xs = [Fraction(x) for x, _ in use]
    table = [Fraction(y) for _, y in use]
    coef = [table[0]]
    for level in range(1, len(use)):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        coef.append(table[0])
    # expand Newton form
    poly = [Fraction(0)]
    for k in range(len(coef) - 1, -1, -1):
        # poly = poly * (x - xs[k]) + coef[k]
        shifted = [Fraction(0)] + poly
        for i, c in enumerate(poly):
            shifted[i] -= xs[k] * c
        shifted[0] += coef[k]
        poly = shifted
    for c in poly:
        if c.denominator != 1:
            raise InterpolationError(f"non-integral coefficient {c} (degree bound {degree_bound} too small?)")
    result = IntPolynomial(int(c) for c in poly)
    for x, y in pts:
        if result(x) != y:
            raise InterpolationError(f"sample ({x}, {y}) inconsistent with {result}")
    return result


# ---------------------------------------------------------------------------
# parsing of coefficient expressions

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\*\*|[-+*/^()]))")


def parse_coefficient(text: str, names: tuple[str, ...] = RS) -> RationalFunction:
    """Parse expressions such as ``(r+s)*s^-1`` or ``r^2 - 3*s``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ArgumentError(f"cannot parse coefficient near {text[pos:]!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            if name not in names:
                raise ArgumentError(f"unknown variable {name!r}")
            tokens.append(("var", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    parser = _ExprParser(tokens, names)
    value = parser.expr()
    if parser.i != len(tokens):
        raise ArgumentError(f"trailing input in coefficient {text!r}")
    return value


class _ExprParser:
    def __init__(self, tokens, names):
        self.t = tokens
        self.i = 0
        self.names = names

    def peek(self):
        return self.t[self.i] if self.i < len(self.t) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ArgumentError(f"unexpected token {tok[1]!r} in coefficient")
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        val = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.power()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.power()
            val = val * rhs if op == "*" else val / rhs
        return val

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            exp = self.take("num")[1] * sign
            return base ** exp
        return base

    def atom(self):
        kind, value = self.peek()
        if kind == "num":
            self.take()
            return RationalFunction.lift(value, self.names)
        if kind == "var":
            self.take()
            return RationalFunction.lift(LaurentPolynomial.gen(value, self.names))
        if (kind, value) == ("op", "("):
            self.take()
            val = self.expr()
            self.take("op", ")")
            return val
        if (kind, value) == ("op", "-"):
            self.take()
            return -self.atom()
        raise ArgumentError(f"unexpected token {value!r} in coefficient")
