"""PBW basis of root vectors, straightening, the skew-polynomial tower and
the Serre-relation check.

Positive roots are the segments ``[a,b]`` ordered lexicographically,
``[1,1] < [1,2] < ... < [1,n] < [2,2] < ...``.  The root vector of a root is
the rescaled basis element ``X = <u_[a,b]>``.  PBW monomials are ordered
products ``X_1^{a_1} ... X_m^{a_m}`` in increasing root order; by default
powers are divided, ``X^{(a)} = X^a / [a]!``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .coeffs import (
    LaurentPolynomial,
    RationalFunction,
    quantum_factorial,
    specialize_one_param,
    substitute_monomials,
)
from .errors import ArgumentError, ResourceLimitError, VerificationError
from .hall import (
    ONE_PARAM,
    STANDARD,
    SWAPPED,
    HallElement,
    Parameters,
    rescale,
    structure_constants,
)
from .linalg import inverse, vec_mat
from .repcat import (
    DimVector,
    Multisegment,
    Segment,
    end_dim,
    enumerate_classes,
    euler_form,
    ext_dim,
    hom_dim,
    kostant_partition_count,
    segments_of_rank,
)


class RootOrder:
    """Positive roots of rank ``n`` in the fixed total order."""

    def __init__(self, n: int):
        if n < 1:
            raise ArgumentError("rank must be at least 1")
        self.n = n
        self.roots: list[Segment] = segments_of_rank(n)
        self._pos = {seg: k for k, seg in enumerate(self.roots, start=1)}
        # a nonzero map between root modules always goes from a later root to an earlier one
        for x in self.roots:
            for y in self.roots:
                if x != y and hom_dim(Multisegment.of(x), Multisegment.of(y)) and not self._pos[x] > self._pos[y]:
                    raise VerificationError(f"root order violates the Hom condition at {x}, {y}")

    def __len__(self) -> int:
        return len(self.roots)

    def position(self, seg: tuple[int, int]) -> int:
        return self._pos[Segment(*seg)]

    def root(self, pos: int) -> Segment:
        return self.roots[pos - 1]

    def module(self, pos: int) -> Multisegment:
        return Multisegment.of(self.root(pos))


@lru_cache(maxsize=None)
def root_order(n: int) -> RootOrder:
    return RootOrder(n)


class PBWMonomial:
    """Exponent vector over root positions ``1..N``."""

    __slots__ = ("order", "exps")

    def __init__(self, order: RootOrder, exps: Mapping[int, int] | Sequence[int]):
        self.order = order
        N = len(order)
        if isinstance(exps, Mapping):
            vals = [0] * N
            for p, e in exps.items():
                if not 1 <= p <= N:
                    raise ArgumentError(f"root position {p} out of range 1..{N}")
                vals[p - 1] = int(e)
        else:
            vals = [int(e) for e in exps]
            if len(vals) != N:
                raise ArgumentError("exponent vector has the wrong length")
        if any(e < 0 for e in vals):
            raise ArgumentError("exponents must be nonnegative")
        self.exps = tuple(vals)

    @classmethod
    def from_class(cls, order: RootOrder, m: Multisegment) -> "PBWMonomial":
        return cls(order, {order.position(seg): k for seg, k in m.items})

    @classmethod
    def from_word(cls, order: RootOrder, word: Iterable[int]) -> "PBWMonomial":
        vals = [0] * len(order)
        for p in word:
            vals[p - 1] += 1
        return cls(order, vals)

    def to_class(self) -> Multisegment:
        return Multisegment((self.order.root(p), e) for p, e in enumerate(self.exps, start=1) if e)

    @property
    def weight(self) -> DimVector:
        return self.to_class().dim

    def word(self) -> tuple[int, ...]:
        return tuple(p for p, e in enumerate(self.exps, start=1) for _ in range(e))

    def __eq__(self, other) -> bool:
        return isinstance(other, PBWMonomial) and self.order.n == other.order.n and self.exps == other.exps

    def __hash__(self) -> int:
        return hash((self.order.n, self.exps))

    def __lt__(self, other: "PBWMonomial") -> bool:
        return self.exps < other.exps

    def to_text(self) -> str:
        parts = []
        for p, e in enumerate(self.exps, start=1):
            if e:
                seg = self.order.root(p)
                parts.append(f"X[{seg.a},{seg.b}]" + (f"^{e}" if e > 1 else ""))
        return " ".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {"exponents": [[p, e] for p, e in enumerate(self.exps, start=1) if e]}

    def __repr__(self) -> str:
        return f"PBWMonomial({self.to_text()})"


def pbw_monomials(d: DimVector, order: RootOrder) -> list[PBWMonomial]:
    """Monomials of weight ``d``, one per class, in class order."""
    if len(d) > order.n:
        raise ArgumentError(f"{d} does not fit in rank {order.n}")
    return [PBWMonomial.from_class(order, m) for m in enumerate_classes(d)]


def _factorial_weight(m: PBWMonomial) -> RationalFunction:
    out = RationalFunction.lift(1)
    for e in m.exps:
        if e > 1:
            out = out * quantum_factorial(e, 1)
    return out


def pbw_to_hall(m: PBWMonomial, divided: bool = True) -> HallElement:
    """Ordered product of (divided) powers of root vectors in increasing root order."""
    order = m.order
    out = HallElement.one(order.n)
    for p, e in enumerate(m.exps, start=1):
        if not e:
            continue
        seg = order.module(p)
        if divided:
            factor = rescale(seg * e, order.n)
        else:
            factor = rescale(seg, order.n) ** e
        out = out * factor
    return out


def rescaled_as_product(lam: Multisegment, rank: int | None = None) -> HallElement:
    """``<u_lam>`` as the product of divided powers in decreasing root order."""
    rank = rank if rank is not None else max(lam.max_vertex, 1)
    out = HallElement.one(rank)
    for seg, e in sorted(lam.items, reverse=True):
        out = out * rescale(Multisegment([(seg, e)]), rank)
    return out


class PBWComponent:
    """Change of basis between PBW monomials and the Hall basis in one degree."""

    def __init__(self, d: DimVector, order: RootOrder, divided: bool = True):
        self.d = d
        self.order = order
        self.divided = divided
        self.classes = enumerate_classes(d)
        self.monomials = pbw_monomials(d, order)
        self.images = [pbw_to_hall(m, divided) for m in self.monomials]
        self.matrix = [[img.coeff(c) for c in self.classes] for img in self.images]
        self.inverse = inverse(self.matrix)

    @property
    def size(self) -> int:
        return len(self.classes)

    def coordinates(self, x: HallElement) -> dict[PBWMonomial, RationalFunction]:
        """PBW coordinates of a homogeneous element of this degree."""
        for m in x.terms:
            if m.dim != self.d:
                raise ArgumentError(f"{m} is not of degree {self.d}")
        v = [x.coeff(c) for c in self.classes]
        coords = vec_mat(v, self.inverse)
        return {m: c for m, c in zip(self.monomials, coords) if not c.is_zero()}


_COMPONENTS: dict = {}


def pbw_component(d: DimVector, n: int, divided: bool = True) -> PBWComponent:
    key = (d, n, divided)
    if key not in _COMPONENTS:
        _COMPONENTS[key] = PBWComponent(d, root_order(n), divided)
    return _COMPONENTS[key]


def to_pbw(x: HallElement, divided: bool = True) -> dict[PBWMonomial, RationalFunction]:
    out: dict[PBWMonomial, RationalFunction] = {}
    by_degree: dict[DimVector, dict] = {}
    for m, c in x.terms.items():
        by_degree.setdefault(m.dim, {})[m] = c
    for d, terms in by_degree.items():
        comp = pbw_component(d, x.rank, divided)
        out.update(comp.coordinates(HallElement(terms, x.rank)))
    return out


# ---------------------------------------------------------------------------
# straightening


@lru_cache(maxsize=None)
def _pair_rule(n: int, j: int, i: int) -> tuple[tuple[tuple[int, ...], RationalFunction], ...]:
    """``X_j X_i`` (``i < j``) as ordered plain words."""
    order = root_order(n)
    prod = rescale(order.module(j), n) * rescale(order.module(i), n)
    coords = to_pbw(prod, divided=False)
    rule = tuple(sorted(((m.word(), c) for m, c in coords.items()), key=lambda t: t[0]))
    for word, _ in rule:
        if word == (i, j):
            continue
        if not all(i < p < j for p in word):
            raise VerificationError(f"correction term {word} of X_{j} X_{i} is not between the two roots")
    return rule


def straighten(
    word: Sequence[int], n: int, divided: bool = True, max_steps: int = 100000, strategy: str = "leftmost"
) -> dict[PBWMonomial, RationalFunction]:
    """Normal form of the product ``X_{w_1} ... X_{w_k}`` by rewriting descents.

    ``strategy`` picks the leftmost or rightmost descent at each step; the
    result must not depend on it.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ArgumentError(f"unknown strategy {strategy!r}")
    order = root_order(n)
    N = len(order)
    if any(not 1 <= p <= N for p in word):
        raise ArgumentError(f"root positions must lie in 1..{N}")
    pending: dict[tuple[int, ...], RationalFunction] = {tuple(word): RationalFunction.lift(1)}
    done: dict[tuple[int, ...], RationalFunction] = {}
    steps = 0
    while pending:
        w, c = pending.popitem()
        descents = [t for t in range(len(w) - 1) if w[t] > w[t + 1]]
        k = (descents[0] if strategy == "leftmost" else descents[-1]) if descents else None
        if k is None:
            done[w] = done[w] + c if w in done else c
            continue
        steps += 1
        if steps > max_steps:
            raise VerificationError("straightening exceeded its step budget")
        for repl, rc in _pair_rule(n, w[k], w[k + 1]):
            nw = w[:k] + repl + w[k + 2 :]
            val = c * rc
            pending[nw] = pending[nw] + val if nw in pending else val
    out = {}
    for w, c in done.items():
        if c.is_zero():
            continue
        m = PBWMonomial.from_word(order, w)
        out[m] = c * _factorial_weight(m) if divided else c
    return out


def straighten_via_hall(word: Sequence[int], n: int, divided: bool = True) -> dict[PBWMonomial, RationalFunction]:
    """Multiply in the Hall algebra, then read off PBW coordinates."""
    order = root_order(n)
    x = HallElement.one(n)
    for p in word:
        x = x * rescale(order.module(p), n)
    return to_pbw(x, divided)


def pbw_element_to_hall(coords: Mapping[PBWMonomial, RationalFunction], n: int, divided: bool = True) -> HallElement:
    out = HallElement.zero(n)
    for m, c in coords.items():
        out = out + pbw_to_hall(m, divided).scale(c)
    return out


def format_pbw(coords: Mapping[PBWMonomial, RationalFunction]) -> str:
    from .hall import format_terms

    return format_terms((m.to_text(), c) for m, c in sorted(coords.items(), key=lambda kv: kv[0].exps))


# ---------------------------------------------------------------------------
# skew-polynomial tower


def printed_scalar(order: RootOrder, j: int, i: int) -> RationalFunction:
    """``r^{<dim X_i, dim X_j>} s^{-<dim X_j, dim X_i>}``, the closed form as printed."""
    di, dj = order.root(i).dim, order.root(j).dim
    return RationalFunction.lift(LaurentPolynomial.monomial((euler_form(di, dj), -euler_form(dj, di))))


def derived_scalar_formula(order: RootOrder, j: int, i: int) -> RationalFunction:
    """``r^{-hom(M_j, M_i)} s^{ext(M_j, M_i) - ext(M_i, M_j)}``."""
    mi, mj = order.module(i), order.module(j)
    return RationalFunction.lift(
        LaurentPolynomial.monomial((-hom_dim(mj, mi), ext_dim(mj, mi) - ext_dim(mi, mj)))
    )


def skew_tower_data(n: int) -> dict[int, dict[int, tuple[RationalFunction, dict[PBWMonomial, RationalFunction]]]]:
    """For every ``j`` and ``i < j``: ``l_j(X_i) = c X_i`` and ``delta_j(X_i)``.

    ``delta_j(X_i) = X_j X_i - l_j(X_i) X_j`` is returned in plain-power PBW
    coordinates.
    """
    order = root_order(n)
    N = len(order)
    out: dict = {}
    for j in range(1, N + 1):
        out[j] = {}
        for i in range(1, j):
            rule = _pair_rule(n, j, i)
            scalar = next((c for w, c in rule if w == (i, j)), None)
            if scalar is None:
                raise VerificationError(f"X_{j} X_{i} has no X_{i} X_{j} term")
            delta = {PBWMonomial.from_word(order, w): c for w, c in rule if w != (i, j)}
            out[j][i] = (scalar, delta)
    return out


def tower_report(n: int) -> dict:
    """Derived straightening scalars against the printed closed forms, and the
    scalar ``K`` in ``l_j delta_j = K delta_j l_j`` on each generator."""
    order = root_order(n)
    data = skew_tower_data(n)
    pairs = []
    k_values = set()
    for j, row in data.items():
        for i, (scalar, delta) in row.items():
            entry = {
                "j": str(order.root(j)),
                "i": str(order.root(i)),
                "scalar": scalar.pretty(),
                "printed": printed_scalar(order, j, i).pretty(),
                "formula_matches": scalar == derived_scalar_formula(order, j, i),
                "delta": format_pbw(delta) if delta else "0",
            }
            ks = set()
            for mono, _ in delta.items():
                # l_j scales an ordered monomial by the product of its generator scalars
                lscale = RationalFunction.lift(1)
                for p, e in enumerate(mono.exps, start=1):
                    if e:
                        lscale = lscale * data[j][p][0] ** e
                ks.add(lscale / scalar)
            if ks:
                entry["K"] = sorted(k.pretty() for k in ks)
                k_values |= ks
            pairs.append(entry)
    printed_k = RationalFunction.lift(LaurentPolynomial.monomial((1, -1)))
    return {
        "rank": n,
        "pairs": pairs,
        "K_values": sorted(k.pretty() for k in k_values),
        "printed_K": printed_k.pretty(),
        "printed_K_matches": k_values <= {printed_k},
        "scalars_match_printed": all(p["scalar"] == p["printed"] for p in pairs),
        "scalars_match_formula": all(p["formula_matches"] for p in pairs),
    }


# ---------------------------------------------------------------------------
# Serre relations and graded dimensions


def serre_coefficients(params: Parameters) -> tuple[RationalFunction, RationalFunction]:
    """``(a + b, ab)`` for the parameter pair ``(a, b)`` of the relations.

    The standard algebra uses ``(r, s)``; the swapped one realizes the
    relations with ``(r^{-1}, s^{-1})``.
    """
    if params == STANDARD:
        a, b = (1, 0), (0, 1)
    elif params == SWAPPED:
        a, b = (-1, 0), (0, -1)
    elif params == ONE_PARAM:
        a, b = (1,), (-1,)
    else:
        raise ArgumentError(f"no Serre coefficients for {params.label}")
    ma = RationalFunction.lift(LaurentPolynomial.monomial(a, 1, params.names))
    mb = RationalFunction.lift(LaurentPolynomial.monomial(b, 1, params.names))
    return ma + mb, ma * mb


def serre_residuals(n: int, params: Parameters = STANDARD) -> list[dict]:
    """Every defining relation evaluated on ``u_i = u_{S_i}`` in rank ``n``."""
    u = [None] + [HallElement.simple(i, n, params) for i in range(1, n + 1)]
    plus, prod = serre_coefficients(params)
    out = []
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            res = u[i] * u[j] - u[j] * u[i]
            out.append({"relation": "commute", "i": i, "j": j, "residual": res})
    for i in range(1, n):
        a, b = u[i], u[i + 1]
        first = a * a * b - (a * b * a).scale(plus) + (b * a * a).scale(prod)
        second = a * b * b - (b * a * b).scale(plus) + (b * b * a).scale(prod)
        out.append({"relation": "serre-1", "i": i, "j": i + 1, "residual": first})
        out.append({"relation": "serre-2", "i": i, "j": i + 1, "residual": second})
    return out


def eta_check(n: int, params: Parameters = STANDARD) -> dict:
    """Report on the defining relations; ``passed`` iff every residual is zero."""
    checks = serre_residuals(n, params)
    failures = [
        {"relation": c["relation"], "i": c["i"], "j": c["j"], "residual": c["residual"].to_text()}
        for c in checks
        if not c["residual"].is_zero()
    ]
    return {"rank": n, "algebra": params.label, "checked": len(checks), "passed": not failures, "failures": failures}


def graded_dimension(d: DimVector, n: int | None = None) -> int:
    """Number of classes of dimension ``d``; cross-checked against PBW monomials and partitions."""
    n = n if n is not None else max(len(d), 1)
    k = len(enumerate_classes(d))
    if k != len(pbw_monomials(d, root_order(n))) or k != kostant_partition_count(d):
        raise VerificationError(f"graded dimension counts disagree at {d}")
    return k


# ---------------------------------------------------------------------------
# one-parameter specialization


def specialize_element(x: HallElement) -> HallElement:
    return HallElement({m: specialize_one_param(c) for m, c in x.terms.items()}, x.rank, ONE_PARAM)


def specialization_mismatches(pairs: Iterable[tuple[Multisegment, Multisegment]]) -> list[tuple]:
    """Pairs whose specialized two-parameter structure constants differ from the
    one-parameter ones computed directly."""
    bad = []
    for a, b in pairs:
        two = structure_constants(a, b, STANDARD)
        one = structure_constants(a, b, ONE_PARAM)
        special = {lam: specialize_one_param(c) for lam, c in two.items()}
        special = {lam: c for lam, c in special.items() if not c.is_zero()}
        if special != one:
            bad.append((a, b, special, one))
    return bad
