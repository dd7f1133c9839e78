"""Bar involution and the bar-invariant canonical basis.

Everything here is expressed in the rescaled basis ``<u_a> = s^{dim - [a,a]} u_a``,
where ``[M,N] = dim Hom(M,N)`` and ``[M,N]^1 = dim Ext^1(M,N)``.  The bar map is the
ring involution fixing the simple generators and exchanging ``r`` and ``s``;
``bar <u_a> = sum_b w^a_b <u_b>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .coeffs import (
    RS,
    V,
    IntPolynomial,
    LaurentPolynomial,
    RationalFunction,
    bar as bar_coeff,
    specialize_one_param,
    substitute_x,
    v_bar,
)
from .errors import ArgumentError, VerificationError
from .genext import DegenerationPoset, distinguished_word, monomial
from .hall import ONE_PARAM, HallElement, hall_polynomial, rescale_exponent
from .linalg import inverse, mat_mul
from .repcat import BUDGET, DimVector, Multisegment, end_dim, enumerate_classes, euler_form, ext_dim, hom_dim

X_VALUE = LaurentPolynomial.monomial((1, -1))


def _s(k: int) -> RationalFunction:
    return RationalFunction.lift(LaurentPolynomial.monomial((0, k)))


def _r(k: int) -> RationalFunction:
    return RationalFunction.lift(LaurentPolynomial.monomial((k, 0)))


def structure_coefficient(x: Multisegment, m: Multisegment, n: Multisegment) -> RationalFunction:
    """``c^X_{M,N}``: coefficient of ``<u_X>`` in ``<u_M><u_N>``."""
    poly = hall_polynomial(m, n, x)
    if poly.is_zero():
        return RationalFunction.lift(0)
    k = end_dim(x) - end_dim(m) - end_dim(n) - euler_form(m.dim, n.dim)
    return _s(k) * substitute_x(poly, X_VALUE)


def top_split(alpha: Multisegment) -> tuple[Multisegment, Multisegment] | None:
    """A decomposition ``alpha = M + N`` with ``M`` isotypic, ``[N,M] = 0 = [M,N]^1``."""
    if alpha.is_isotypic():
        return None
    for seg, mult in alpha.items:
        m = Multisegment([(seg, mult)])
        n = Multisegment([(s, k) for s, k in alpha.items if s != seg])
        if hom_dim(n, m) == 0 and ext_dim(m, n) == 0:
            return m, n
    raise VerificationError(f"no split of {alpha} satisfies the vanishing conditions")


@lru_cache(maxsize=None)
def _order(d: DimVector) -> tuple[tuple[Multisegment, ...], tuple[tuple[bool, ...], ...]]:
    poset = DegenerationPoset(d)
    return tuple(poset.universe), tuple(tuple(row) for row in poset.relation)


def _leq(a: Multisegment, b: Multisegment) -> bool:
    if a.dim != b.dim:
        return False
    universe, rel = _order(a.dim)
    return rel[universe.index(a)][universe.index(b)]


@lru_cache(maxsize=None)
def omega(alpha: Multisegment) -> dict[Multisegment, RationalFunction]:
    """Row ``beta -> w^alpha_beta`` by the split / isotypic-power recursion."""
    if alpha.is_zero():
        return {alpha: RationalFunction.lift(1)}
    BUDGET.check_dim(alpha.total_dim, "bar matrix")
    universe, _ = _order(alpha.dim)
    if alpha.is_isotypic():
        # alpha is the generic class of its component: every class lies below it
        out = {}
        for beta in universe:
            val = _s(ext_dim(beta, beta))
            for gamma in universe:
                if gamma != alpha and _leq(beta, gamma):
                    w = omega(gamma).get(beta)
                    if w is not None:
                        val = val - _r(ext_dim(gamma, gamma)) * w
            if not val.is_zero():
                out[beta] = val
        return out
    m, n = top_split(alpha)
    out: dict[Multisegment, RationalFunction] = {}
    for m2, wm in omega(m).items():
        for n2, wn in omega(n).items():
            c = wm * wn
            for beta in universe:
                coeff = structure_coefficient(beta, m2, n2)
                if coeff.is_zero():
                    continue
                out[beta] = out[beta] + c * coeff if beta in out else c * coeff
    return {b: v for b, v in out.items() if not v.is_zero()}


@dataclass
class BarMatrix:
    d: DimVector
    classes: list[Multisegment]
    entries: dict[tuple[Multisegment, Multisegment], RationalFunction]

    def entry(self, alpha: Multisegment, beta: Multisegment) -> RationalFunction:
        return self.entries.get((alpha, beta), RationalFunction.lift(0))

    def as_matrix(self) -> list[list[RationalFunction]]:
        return [[self.entry(a, b) for b in self.classes] for a in self.classes]

    def unitriangularity_violations(self) -> list[tuple]:
        bad = []
        for a in self.classes:
            if self.entry(a, a) != 1:
                bad.append((a, a, self.entry(a, a)))
            for b in self.classes:
                if b != a and not self.entry(a, b).is_zero() and not _leq(b, a):
                    bad.append((a, b, self.entry(a, b)))
        return bad

    def lattice_violations(self) -> list[tuple]:
        """Entries outside ``s^{[b,b]-[a,a]} Z[r s^{-1}]``."""
        bad = []
        for (a, b), w in self.entries.items():
            if not in_lattice(w, end_dim(b) - end_dim(a)):
                bad.append((a, b, w))
        return bad

    def involution_violations(self) -> list[tuple]:
        """Entries of ``W bar(W) - 1``."""
        bad = []
        for a in self.classes:
            for b in self.classes:
                acc = RationalFunction.lift(0)
                for g in self.classes:
                    x, y = self.entry(a, g), self.entry(g, b)
                    if not x.is_zero() and not y.is_zero():
                        acc = acc + x * bar_coeff(y)
                want = 1 if a == b else 0
                if acc != want:
                    bad.append((a, b, acc))
        return bad

    def to_json(self) -> dict:
        return {
            "dim": self.d.to_json(),
            "classes": [c.to_text() for c in self.classes],
            "entries": [
                {"alpha": a.to_text(), "beta": b.to_text(), "coeff": self.entry(a, b).to_json()}
                for a in self.classes
                for b in self.classes
                if not self.entry(a, b).is_zero()
            ],
        }


def in_lattice(w: RationalFunction, k: int) -> bool:
    """Is ``w`` in ``s^k Z[r s^{-1}]``?"""
    if w.is_zero():
        return True
    if not w.is_laurent():
        return False
    for (a, b), _ in w.as_laurent().terms.items():
        if a < 0 or a + b != k:
            return False
    return True


def _component(d: DimVector) -> list[Multisegment]:
    BUDGET.check_dim(d.total, "component")
    return list(_order(d)[0])


def bar_matrix(d: DimVector) -> BarMatrix:
    classes = _component(d)
    entries = {}
    for a in classes:
        for b, w in omega(a).items():
            entries[(a, b)] = w
    return BarMatrix(d, classes, entries)


def _monomial_matrix(d: DimVector, params=None) -> tuple[list[Multisegment], list[list[RationalFunction]]]:
    """Distinguished monomials written in the rescaled basis; one row per class."""
    classes = _component(d)
    rank = max(len(d), 1)
    rows = []
    for lam in classes:
        w = distinguished_word(lam)
        if params is None:
            x = monomial(w, rank)
            rows.append([x.coeff(b) * _s(-rescale_exponent(b)) for b in classes])
        else:
            x = monomial(w, rank, params)
            vpow = lambda k: RationalFunction.lift(LaurentPolynomial.monomial((k,), 1, V))
            rows.append([x.coeff(b) * vpow(rescale_exponent(b)) for b in classes])
    return classes, rows


def direct_bar_matrix(d: DimVector) -> BarMatrix:
    """``W = bar(A)^{-1} A`` where the rows of ``A`` are bar-fixed monomials."""
    classes, a = _monomial_matrix(d)
    abar = [[bar_coeff(x) for x in row] for row in a]
    w = mat_mul(inverse(abar), a)
    entries = {}
    for i, x in enumerate(classes):
        for j, y in enumerate(classes):
            if not w[i][j].is_zero():
                entries[(x, y)] = w[i][j]
    return BarMatrix(d, classes, entries)


def bar_matrix_discrepancies(d: DimVector) -> list[tuple]:
    rec, direct = bar_matrix(d), direct_bar_matrix(d)
    return [
        (a, b, rec.entry(a, b), direct.entry(a, b))
        for a in rec.classes
        for b in rec.classes
        if rec.entry(a, b) != direct.entry(a, b)
    ]


def bar_element(x: HallElement) -> HallElement:
    """Apply the bar involution to an element written in the ``u`` basis."""
    out: dict[Multisegment, RationalFunction] = {}
    for lam, c in x.terms.items():
        # c u_lam = c s^{-e} <u_lam>  ->  bar(c) r^{-e} sum w <u_b> = ... s^{e_b} u_b
        base = bar_coeff(c) * _r(-rescale_exponent(lam))
        for b, w in omega(lam).items():
            val = base * w * _s(rescale_exponent(b))
            out[b] = out[b] + val if b in out else val
    return HallElement(out, x.rank)


# ---------------------------------------------------------------------------
# canonical basis


@dataclass
class CanonicalBasisElement:
    alpha: Multisegment
    coeffs: dict[Multisegment, RationalFunction] = field(default_factory=dict)

    def as_hall(self, rank: int | None = None) -> HallElement:
        """The element in the unrescaled ``u`` basis."""
        rank = rank if rank is not None else max(self.alpha.max_vertex, 1)
        return HallElement({b: c * _s(rescale_exponent(b)) for b, c in self.coeffs.items()}, rank)

    def sorted_terms(self):
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0] != self.alpha, kv[0].items))

    def to_text(self) -> str:
        from .hall import format_terms

        return format_terms((f"<u({b.to_text()})>", c) for b, c in self.sorted_terms())

    def table_row(self) -> str:
        """Coefficients shown as an ``s`` power times a polynomial in ``x = r s^{-1}``."""
        parts = []
        for b, c in self.sorted_terms():
            k = end_dim(b) - end_dim(self.alpha)
            poly = c * _s(-k)
            terms = poly.as_laurent().terms
            if terms and all(a >= 0 and a + e == 0 for a, e in terms):
                # a polynomial in x = r s^-1
                coeffs = [0] * (max(a for a, _ in terms) + 1)
                for (a, _), coef in terms.items():
                    coeffs[a] = coef
                text = IntPolynomial(coeffs).to_text()
            else:
                text = poly.pretty()
            parts.append(f"{b.to_text()}: s^{k}*({text})")
        return f"C({self.alpha.to_text()}) = " + "; ".join(parts)

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha.to_text(),
            "terms": [{"beta": b.to_text(), "coeff": c.to_json()} for b, c in self.sorted_terms()],
        }


def _laurent_v_terms(c: RationalFunction) -> dict[int, int]:
    if c.is_zero():
        return {}
    if not c.is_laurent():
        raise VerificationError(f"{c} is not a Laurent polynomial in v")
    return {e[0]: k for e, k in c.as_laurent().terms.items()}


def kl_solve(
    classes: list[Multisegment],
    w: Callable[[Multisegment, Multisegment], RationalFunction],
) -> dict[Multisegment, dict[Multisegment, RationalFunction]]:
    """One-parameter triangular recursion: bar-invariant, off-diagonal in ``v^{-1} Z[v^{-1}]``.

    ``classes`` must be a linear extension of the order; ``w(a, b)`` gives the
    bar matrix entry specialized to ``v``.
    """
    out = {}
    for i, alpha in enumerate(classes):
        zeta = {alpha: RationalFunction.lift(1, V)}
        for j in range(i - 1, -1, -1):
            beta = classes[j]
            rhs = RationalFunction.lift(0, V)
            for gamma, z in zeta.items():
                entry = w(gamma, beta)
                if not entry.is_zero():
                    rhs = rhs + v_bar(z) * entry
            terms = _laurent_v_terms(rhs)
            if terms.get(0, 0) != 0 or any(terms.get(-m, 0) != -c for m, c in terms.items()):
                raise VerificationError(f"KL step not antisymmetric at ({alpha}, {beta}): {rhs}")
            neg = {(m,): c for m, c in terms.items() if m < 0}
            if neg:
                zeta[beta] = RationalFunction.lift(LaurentPolynomial(neg, V))
        out[alpha] = zeta
    return out


def inflate(zhat: RationalFunction, k: int) -> RationalFunction:
    """``v^m -> r^{(k+m)/2} s^{(k-m)/2}``; raises if a half-integer power would appear."""
    terms = {}
    for m, c in _laurent_v_terms(zhat).items():
        if (k + m) % 2:
            raise VerificationError(f"parity violation inflating v^{m} with k={k}")
        terms[((k + m) // 2, (k - m) // 2)] = c
    return RationalFunction.lift(LaurentPolynomial(terms, RS))


def _specialized_omega(a: Multisegment, b: Multisegment) -> RationalFunction:
    w = omega(a).get(b)
    return RationalFunction.lift(0, V) if w is None else specialize_one_param(w)


@lru_cache(maxsize=None)
def _canonical(d: DimVector) -> tuple[CanonicalBasisElement, ...]:
    classes = _component(d)
    zhat = kl_solve(classes, _specialized_omega)
    out = []
    for alpha in classes:
        coeffs = {}
        for beta, z in zhat[alpha].items():
            coeffs[beta] = inflate(z, end_dim(beta) - end_dim(alpha))
        out.append(CanonicalBasisElement(alpha, coeffs))
    for elt in out:
        problems = canonical_violations(elt)
        if problems:
            raise VerificationError(f"canonical element for {elt.alpha} fails: {problems}")
    return tuple(out)


def canonical_basis(d: DimVector) -> list[CanonicalBasisElement]:
    return list(_canonical(d))


def canonical_violations(elt: CanonicalBasisElement) -> list[str]:
    """Two-parameter checks: bar invariance, unitriangularity, lattice conditions."""
    problems = []
    alpha = elt.alpha
    if elt.coeffs.get(alpha) != 1:
        problems.append("diagonal coefficient is not 1")
    image: dict[Multisegment, RationalFunction] = {}
    for g, z in elt.coeffs.items():
        for b, w in omega(g).items():
            val = bar_coeff(z) * w
            image[b] = image[b] + val if b in image else val
    for b in set(image) | set(elt.coeffs):
        if image.get(b, RationalFunction.lift(0)) != elt.coeffs.get(b, RationalFunction.lift(0)):
            problems.append(f"not bar-invariant at {b}")
    for b, z in elt.coeffs.items():
        if b != alpha and not _leq(b, alpha):
            problems.append(f"support {b} not below {alpha}")
        if not in_lattice(z, end_dim(b) - end_dim(alpha)):
            problems.append(f"coefficient at {b} outside s^k Z[rs^-1]")
        if b != alpha and not in_literal_lattice(z):
            problems.append(f"coefficient at {b} outside s^-1 Z[rs, (rs)^-1, s]")
    return problems


def in_literal_lattice(z: RationalFunction) -> bool:
    """Membership in ``s^{-1} Z[rs, r^{-1}s^{-1}, s]``: monomials ``r^a s^b`` with ``b - a >= -1``."""
    if z.is_zero():
        return True
    return z.is_laurent() and all(b - a >= -1 for (a, b) in z.as_laurent().terms)


def one_param_canonical_basis(d: DimVector) -> dict[Multisegment, dict[Multisegment, RationalFunction]]:
    """Canonical basis of the one-parameter algebra, built from its own bar matrix."""
    classes, a = _monomial_matrix(d, ONE_PARAM)
    abar = [[v_bar(x) for x in row] for row in a]
    w = mat_mul(inverse(abar), a)
    idx = {c: i for i, c in enumerate(classes)}
    return kl_solve(classes, lambda x, y: w[idx[x]][idx[y]])


def specialization_mismatches(d: DimVector) -> list[tuple]:
    """Compare ``r = v, s = v^{-1}`` of every two-parameter element with the one-parameter basis."""
    ref = one_param_canonical_basis(d)
    bad = []
    for elt in canonical_basis(d):
        special = {b: specialize_one_param(c) for b, c in elt.coeffs.items()}
        special = {b: c for b, c in special.items() if not c.is_zero()}
        if special != ref[elt.alpha]:
            bad.append((elt.alpha, special, ref[elt.alpha]))
    return bad


def perturbation_breaks(elt: CanonicalBasisElement, beta: Multisegment, delta: RationalFunction) -> bool:
    """Adding ``delta <u_beta>`` breaks bar invariance or the ``v^{-1}`` normalization."""
    if beta == elt.alpha:
        raise ArgumentError("perturb an off-diagonal coefficient")
    coeffs = dict(elt.coeffs)
    coeffs[beta] = coeffs.get(beta, RationalFunction.lift(0)) + delta
    new = CanonicalBasisElement(elt.alpha, {b: c for b, c in coeffs.items() if not c.is_zero()})
    if any(p.startswith("not bar-invariant") for p in canonical_violations(new)):
        return True
    special = specialize_one_param(new.coeffs.get(beta, RationalFunction.lift(0)))
    return any(m >= 0 for m in _laurent_v_terms(special))


def bar_report(d: DimVector) -> dict:
    bm = bar_matrix(d)
    out = {
        "dim": d.to_json(),
        "classes": len(bm.classes),
        "unitriangular": not bm.unitriangularity_violations(),
        "lattice": not bm.lattice_violations(),
        "involution": not bm.involution_violations(),
        "matches_direct": not bar_matrix_discrepancies(d),
        "specialization": not specialization_mismatches(d),
    }
    canonical_basis(d)
    out["passed"] = all(v for k, v in out.items() if isinstance(v, bool))
    return out
