"""Verification sweeps shared by the command line and the acceptance tests.

Every sweep returns a report dict with ``name``, ``passed``, ``checked`` and a
(truncated) list of ``failures``; reports contain no timing data so repeated
runs are byte-identical.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Iterable

from .coeffs import LaurentPolynomial, RationalFunction, parse_coefficient
from .errors import RshallError, VerificationError
from .hall import (
    STANDARD,
    SWAPPED,
    TABLE,
    HallElement,
    green_sides,
    hall_polynomial,
    recheck_heldout,
    structure_constants,
)
from .repcat import (
    DimVector,
    Multisegment,
    enumerate_classes,
    euler_form,
    ext_dim,
    hom_dim,
    hom_ext_oracle,
    iter_submodule_bases,
    realize,
    sub_and_quotient_classes,
)

MAX_FAILURES = 20


def _report(name: str, checked: int, failures: list, **extra) -> dict:
    out = {"name": name, "passed": not failures, "checked": checked, "failures": [str(f) for f in failures[:MAX_FAILURES]]}
    out.update(extra)
    return out


def dims_up_to(rank: int, max_dim: int, min_dim: int = 1) -> list[DimVector]:
    """Nonzero dimension vectors supported in ``1..rank`` with total in range."""
    seen = []
    for t in iproduct(range(max_dim + 1), repeat=rank):
        if min_dim <= sum(t) <= max_dim:
            d = DimVector(t)
            if d not in seen:
                seen.append(d)
    return sorted(seen, key=lambda d: (d.total, d.entries))


def classes_up_to(rank: int, max_dim: int, include_zero: bool = False) -> list[Multisegment]:
    out = [Multisegment()] if include_zero else []
    for d in dims_up_to(rank, max_dim):
        out.extend(enumerate_classes(d))
    return out


def _e(text: str) -> HallElement:
    """Small helper for witness formulas written in the element grammar."""
    from .parsing import parse_element

    return parse_element(text, rank=2)


# ---------------------------------------------------------------------------
# 1, 11: defining relations


def serre_suite(max_rank: int = 5) -> dict:
    from .pbw import eta_check

    failures = []
    checked = 0
    for n in range(2, max_rank + 1):
        rep = eta_check(n, STANDARD)
        checked += rep["checked"]
        failures.extend(rep["failures"])
    u1, u2 = HallElement.simple(1, 2), HallElement.simple(2, 2)
    rs = RationalFunction.lift(LaurentPolynomial.monomial((1, 1)))
    plus = parse_coefficient("r+s")
    witnesses = {
        "u1^2 u2": (u1 * u1 * u2, _e("(r+s)*u([1,2]+[1,1]) + (r+s)*u(2[1,1]+[2,2])")),
        "u1 u2 u1": (u1 * u2 * u1, _e("u([1,2]+[1,1]) + (r*s^-1+1)*u(2[1,1]+[2,2])")),
        "rs u2 u1^2": ((u2 * u1 * u1).scale(rs), _e("(r^2*s^-1+r)*u(2[1,1]+[2,2])")),
    }
    for name, (got, want) in witnesses.items():
        checked += 1
        if got != want:
            failures.append({"witness": name, "got": got.to_text(), "want": want.to_text()})
    combo = u1 * u1 * u2 - (u1 * u2 * u1).scale(plus) + (u2 * u1 * u1).scale(rs)
    checked += 1
    if not combo.is_zero():
        failures.append({"witness": "combination", "got": combo.to_text()})
    return _report("serre", checked, failures)


def lower_borel_suite(max_rank: int = 5) -> dict:
    from .pbw import eta_check

    failures = []
    checked = 0
    for n in range(2, max_rank + 1):
        rep = eta_check(n, SWAPPED)
        checked += rep["checked"]
        failures.extend(rep["failures"])
    return _report("lower-borel", checked, failures)


# ---------------------------------------------------------------------------
# 2: Euler form


def euler_suite(max_rank: int = 4, max_dim: int = 6, q: int = 2) -> dict:
    """``<M,N> = hom - ext`` with hom and ext both cross-checked by linear algebra."""
    classes = classes_up_to(max_rank, max_dim)
    failures = []
    checked = 0
    for m in classes:
        for n in classes:
            if m.total_dim + n.total_dim > max_dim:
                continue
            checked += 1
            h, e = hom_dim(m, n), ext_dim(m, n)
            ho, eo = hom_ext_oracle(m, n, q)
            if (h, e) != (ho, eo) or h - e != euler_form(m.dim, n.dim):
                failures.append((m.to_text(), n.to_text(), h, e, ho, eo))
    return _report("euler", checked, failures)


# ---------------------------------------------------------------------------
# 3: Hall polynomials


def hall_polynomial_suite() -> dict:
    """Held-out recount of every memoized polynomial plus two spot values."""
    from .coeffs import IntPolynomial

    x = IntPolynomial.x()
    failures = []
    s1, s2 = Multisegment.simple(1), Multisegment.simple(2)
    spots = [
        (s1, s1, Multisegment.parse("2[1,1]"), x + 1),
        (s1, s2, Multisegment.parse("[1,2]"), IntPolynomial.const(1)),
    ]
    for quo, sub, tot, want in spots:
        got = hall_polynomial(quo, sub, tot)
        if got != want:
            failures.append(("spot", quo.to_text(), sub.to_text(), tot.to_text(), got.to_text()))
    keys = len(TABLE.polys)
    bad = recheck_heldout(TABLE)
    failures.extend(("heldout",) + tuple(str(b) for b in item) for item in bad)
    return _report("hall-polynomials", keys + len(spots), failures, memoized_keys=keys)


# ---------------------------------------------------------------------------
# 4: Green's formula


def green_quadruples(rank: int, max_dim: int) -> Iterable[tuple[Multisegment, ...]]:
    classes = classes_up_to(rank, max_dim, include_zero=True)
    by_dim: dict[DimVector, list[Multisegment]] = {}
    for m in classes:
        by_dim.setdefault(m.dim, []).append(m)
    pairs: dict[DimVector, list[tuple[Multisegment, Multisegment]]] = {}
    for a in classes:
        for b in classes:
            if 0 < a.total_dim + b.total_dim <= max_dim:
                pairs.setdefault(a.dim + b.dim, []).append((a, b))
    for d in sorted(pairs, key=lambda d: (d.total, d.entries)):
        for a, b in pairs[d]:
            for a2, b2 in pairs[d]:
                yield a, b, a2, b2


def green_suite(rank: int = 3, max_dim: int = 4, qs: Iterable[int] = (2, 3)) -> dict:
    failures = []
    checked = 0
    for q in qs:
        for a, b, a2, b2 in green_quadruples(rank, max_dim):
            checked += 1
            lhs, rhs = green_sides(a, b, a2, b2, q)
            if lhs != rhs:
                failures.append((q, a.to_text(), b.to_text(), a2.to_text(), b2.to_text(), str(lhs), str(rhs)))
    return _report("green", checked, failures)


# ---------------------------------------------------------------------------
# 5: associativity, grading, direct limit


def associativity_suite(rank: int = 3, max_dim: int = 5) -> dict:
    classes = classes_up_to(rank, max_dim)
    basis = {m: HallElement.basis(m, rank) for m in classes}
    failures = []
    checked = 0
    for a in classes:
        for b in classes:
            if a.total_dim + b.total_dim > max_dim:
                continue
            ab = basis[a] * basis[b]
            for lam in ab.terms:
                if lam.dim != a.dim + b.dim:
                    failures.append(("grading", a.to_text(), b.to_text(), lam.to_text()))
            for c in classes:
                if a.total_dim + b.total_dim + c.total_dim > max_dim:
                    continue
                checked += 1
                if ab * basis[c] != basis[a] * (basis[b] * basis[c]):
                    failures.append(("associativity", a.to_text(), b.to_text(), c.to_text()))
    return _report("associativity", checked, failures)


def _direct_count(quo: Multisegment, sub: Multisegment, lam: Multisegment, q: int, n: int) -> int:
    mod = realize(lam, q, n)
    count = 0
    for bases in iter_submodule_bases(mod, sub.dim.padded(n)):
        s, qq = sub_and_quotient_classes(mod, bases)
        if s == sub and qq == quo:
            count += 1
    return count


def direct_limit_suite(small: int = 2, large: int = 4, max_dim: int = 4, q: int = 2) -> dict:
    """Rank-``small`` structure constants reappear unchanged, and under translation, in rank ``large``."""
    failures = []
    checked = 0
    classes = classes_up_to(small, max_dim)
    for a in classes:
        for b in classes:
            if a.total_dim + b.total_dim > max_dim:
                continue
            ref = (HallElement.basis(a, small) * HallElement.basis(b, small)).terms
            for n in range(small, large + 1):
                checked += 1
                got = (HallElement.basis(a, n) * HallElement.basis(b, n)).terms
                if got != ref:
                    failures.append(("embedding", n, a.to_text(), b.to_text()))
            for k in range(1, large - small + 1):
                checked += 1
                shifted = structure_constants(a.shift(k), b.shift(k))
                if shifted != {lam.shift(k): c for lam, c in ref.items()}:
                    failures.append(("translation", k, a.to_text(), b.to_text()))
            for lam in enumerate_classes(a.dim + b.dim):
                checked += 1
                want = hall_polynomial(a, b, lam)(q)
                if _direct_count(a, b, lam, q, large) != want:
                    failures.append(("count", a.to_text(), b.to_text(), lam.to_text()))
    return _report("direct-limit", checked, failures)


# ---------------------------------------------------------------------------
# 6: PBW


def pbw_suite(rank: int = 3, max_dim: int = 5, straighten_length: int = 3) -> dict:
    from .linalg import is_identity, mat_mul
    from .pbw import graded_dimension, pbw_component, root_order, straighten, straighten_via_hall

    failures = []
    checked = 0
    for d in dims_up_to(rank, max_dim):
        checked += 1
        try:
            comp = pbw_component(d, rank)
        except RshallError as exc:
            failures.append(("component", d.to_json(), str(exc)))
            continue
        size = graded_dimension(d, rank)
        square = len(comp.matrix) == size and all(len(row) == size for row in comp.matrix)
        if not square or not is_identity(mat_mul(comp.matrix, comp.inverse)):
            failures.append(("change-of-basis", d.to_json()))
    order = root_order(rank)
    weights = [order.module(p).dim.total for p in range(1, len(order) + 1)]
    for k in range(2, straighten_length + 1):
        for word in iproduct(range(1, len(order) + 1), repeat=k):
            if sum(weights[p - 1] for p in word) > max_dim:
                continue
            checked += 1
            left = straighten(word, rank)
            right = straighten(word, rank, strategy="rightmost")
            if left != right or left != straighten_via_hall(word, rank):
                failures.append(("straighten", word))
    return _report("pbw", checked, failures)


# ---------------------------------------------------------------------------
# 7: generic extensions


def genext_suite(rank: int = 4, max_dim: int = 4) -> dict:
    from .genext import DegenerationPoset, degeneration_leq, generic_extension, leq_by_words

    g = generic_extension
    failures = []
    checked = 0
    zero = Multisegment()
    classes = classes_up_to(rank, max_dim)
    S = [None] + [Multisegment.simple(i) for i in range(1, rank + 1)]

    for m in classes:
        checked += 1
        if g(zero, m) != m or g(m, zero) != m:
            failures.append(("identity", m.to_text()))
    for a in classes:
        for b in classes:
            if a.total_dim + b.total_dim > max_dim:
                continue
            ab = g(a, b)
            for c in classes:
                if a.total_dim + b.total_dim + c.total_dim > max_dim:
                    continue
                checked += 1
                if g(ab, c) != g(a, g(b, c)):
                    failures.append(("associativity", a.to_text(), b.to_text(), c.to_text()))
    for i in range(1, rank + 1):
        for j in range(1, rank + 1):
            if abs(i - j) > 1:
                checked += 1
                if g(S[i], S[j]) != g(S[j], S[i]):
                    failures.append(("commute", i, j))
        if i < rank:
            j = i + 1
            checked += 2
            if g(g(S[i], S[j]), S[i]) != g(g(S[i], S[i]), S[j]):
                failures.append(("braid-1", i, j))
            if g(g(S[j], S[i]), S[j]) != g(g(S[i], S[j]), S[j]):
                failures.append(("braid-2", i, j))
    checked += 2
    if g(S[1], S[2]) != Multisegment.of((1, 2)):
        failures.append(("S1*S2", g(S[1], S[2]).to_text()))
    if g(S[2], S[1]) != Multisegment.of((1, 1), (2, 2)):
        failures.append(("S2*S1", g(S[2], S[1]).to_text()))
    # order compatibility, and the extension description of the ideal below M*N
    for m in classes:
        for n in classes:
            if m.total_dim + n.total_dim > max_dim:
                continue
            top = g(m, n)
            below_m = [x for x in enumerate_classes(m.dim) if degeneration_leq(x, m)]
            below_n = [x for x in enumerate_classes(n.dim) if degeneration_leq(x, n)]
            reachable = set()
            for m2 in below_m:
                for n2 in below_n:
                    checked += 1
                    if not degeneration_leq(g(m2, n2), top):
                        failures.append(("monotone", m2.to_text(), n2.to_text(), m.to_text(), n.to_text()))
                    for x in enumerate_classes(m.dim + n.dim):
                        if not hall_polynomial(m2, n2, x).is_zero():
                            reachable.add(x)
            ideal = {x for x in enumerate_classes(m.dim + n.dim) if degeneration_leq(x, top)}
            checked += 1
            if ideal != reachable:
                failures.append(("ideal", m.to_text(), n.to_text()))
    for d in dims_up_to(rank, max_dim):
        checked += 1
        hom_order = DegenerationPoset(d)
        word_order = DegenerationPoset(d, leq=leq_by_words)
        if hom_order.relation != word_order.relation or not hom_order.is_partial_order():
            failures.append(("orders", d.to_json()))
    return _report("generic-extensions", checked, failures)


# ---------------------------------------------------------------------------
# 8: monomial bases


def monomial_suite(max_dim: int = 5, rank: int | None = None) -> dict:
    """Distinguished words for every class supported in ``1..rank`` (default ``max_dim``)."""
    from .genext import distinguished_word, gamma, monomial_basis

    rank = rank if rank is not None else max_dim
    failures = []
    checked = 0
    for d in dims_up_to(rank, max_dim):
        for lam in enumerate_classes(d):
            checked += 1
            try:
                w = distinguished_word(lam)
            except RshallError as exc:
                failures.append(("word", lam.to_text(), str(exc)))
                continue
            if gamma(w, lam) != 1:
                failures.append(("gamma", lam.to_text(), w.to_text()))
        checked += 1
        try:
            monomial_basis(d, distinguished=True, rank=len(d))
        except VerificationError as exc:
            failures.append(("triangular", d.to_json(), str(exc)))
    return _report("monomial-bases", checked, failures)


# ---------------------------------------------------------------------------
# 9: bar involution and canonical basis


def bar_suite(rank: int = 3, max_dim: int = 5) -> dict:
    from .bar import bar_report, canonical_basis

    failures = []
    checked = 0
    for d in dims_up_to(rank, max_dim):
        checked += 1
        try:
            rep = bar_report(d)
        except RshallError as exc:
            failures.append(("component", d.to_json(), str(exc)))
            continue
        if not rep["passed"]:
            failures.append(rep)
    checked += 1
    m12 = Multisegment.of((1, 2))
    elt = next(e for e in canonical_basis(DimVector((1, 1))) if e.alpha == m12)
    want = {m12: RationalFunction.lift(1), Multisegment.of((1, 1), (2, 2)): parse_coefficient("s")}
    if elt.coeffs != want:
        failures.append(("C[1,2]", elt.to_text()))
    return _report("bar", checked, failures)


# ---------------------------------------------------------------------------
# 10: Hopf structure


def hopf_suite(max_rank: int = 3, max_dim: int = 3) -> dict:
    from .hopf import (
        ExtendedElement,
        antipode,
        coproduct_limit_mismatches,
        ext_multiply,
        hopf_axiom_suite,
        pairing_report,
    )

    failures = []
    checked = 0
    for n in range(1, max_rank + 1):
        checked += 1
        failures.extend(hopf_axiom_suite(n, max_dim))
        # torus-free products agree with the Hall product
        for a in classes_up_to(n, max_dim):
            for b in classes_up_to(n, max_dim):
                if a.total_dim + b.total_dim > max_dim:
                    continue
                checked += 1
                got = ext_multiply(ExtendedElement.u(a, n), ExtendedElement.u(b, n)).torus_free_part()
                if got != HallElement.basis(a, n) * HallElement.basis(b, n):
                    failures.append(("embedding", a.to_text(), b.to_text()))
    s1 = Multisegment.simple(1)
    checked += 1
    got = antipode(ExtendedElement.u(s1, 2))
    want = -ExtendedElement.u(s1, 2, (-1, 0))
    if got != want:
        failures.append(("sigma(u_S1)", got.to_text()))
    checked += 1
    if coproduct_limit_mismatches(2, max_rank + 1, max_dim):
        failures.append(("coproduct direct limit",))
    for n in range(2, max_rank + 1):
        checked += 1
        rep = pairing_report(n, 2)
        if not rep["passed"]:
            failures.append(("pairing", rep))
    return _report("hopf", checked, failures)


SUITES = {
    "serre": serre_suite,
    "lower": lower_borel_suite,
    "euler": euler_suite,
    "hall": hall_polynomial_suite,
    "green": green_suite,
    "assoc": associativity_suite,
    "limit": direct_limit_suite,
    "pbw": pbw_suite,
    "genext": genext_suite,
    "monomial": monomial_suite,
    "bar": bar_suite,
    "hopf": hopf_suite,
}
