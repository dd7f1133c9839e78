"""Representations of the linear quiver ``1 -> 2 -> ... -> n``.

Every indecomposable is an interval module ``M[a,b]`` (vertices ``a..b``, one
copy of the field at each, identity arrows); its top is the simple ``S_a`` and
its socle is ``S_b``.  All Hom/Ext formulas below assume this orientation.

Isoclasses are :class:`Multisegment` values.  :class:`FqModule` is a concrete
realization over a finite field, used by the brute-force counting code.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .coeffs import IntPolynomial, interpolate
from .errors import ArgumentError, ResourceLimitError, VerificationError
from .fields import field, gl_order, ladder


# ---------------------------------------------------------------------------
# budget


@dataclass
class Budget:
    """Desk-scale guardrails for enumeration-heavy operations."""

    max_total_dim: int = 8
    q_max: int = 13

    def check_dim(self, total: int, what: str = "module") -> None:
        if total > self.max_total_dim:
            raise ResourceLimitError(f"{what} of total dimension {total} exceeds budget {self.max_total_dim}")

    def check_q(self, q: int) -> None:
        if q > self.q_max:
            raise ResourceLimitError(f"field size {q} exceeds budget {self.q_max}")


BUDGET = Budget()


def set_budget(max_total_dim: int | None = None, q_max: int | None = None) -> Budget:
    if max_total_dim is not None:
        BUDGET.max_total_dim = max_total_dim
    if q_max is not None:
        BUDGET.q_max = q_max
    return BUDGET


# ---------------------------------------------------------------------------
# dimension vectors


class DimVector:
    """Finitely supported vector of nonnegative integers indexed by vertices 1, 2, ...."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[int] | Mapping[int, int] = ()):
        if isinstance(entries, Mapping):
            top = max((i for i, v in entries.items() if v), default=0)
            vals = [int(entries.get(i, 0)) for i in range(1, top + 1)]
        else:
            vals = [int(v) for v in entries]
        if any(v < 0 for v in vals):
            raise ArgumentError("dimension vector entries must be nonnegative")
        while vals and vals[-1] == 0:
            vals.pop()
        self.entries = tuple(vals)

    @classmethod
    def simple(cls, i: int) -> "DimVector":
        return cls([0] * (i - 1) + [1])

    def __getitem__(self, i: int) -> int:
        if i < 1:
            raise IndexError("vertices are 1-based")
        return self.entries[i - 1] if i <= len(self.entries) else 0

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def support(self) -> list[int]:
        return [i + 1 for i, v in enumerate(self.entries) if v]

    @property
    def total(self) -> int:
        return sum(self.entries)

    def padded(self, n: int) -> tuple[int, ...]:
        return self.entries + (0,) * (n - len(self.entries))

    def __add__(self, other: "DimVector") -> "DimVector":
        n = max(len(self), len(other))
        return DimVector(a + b for a, b in zip(self.padded(n), other.padded(n)))

    def __sub__(self, other: "DimVector") -> "DimVector":
        n = max(len(self), len(other))
        return DimVector(a - b for a, b in zip(self.padded(n), other.padded(n)))

    def __neg__(self):
        raise ArgumentError("dimension vectors are nonnegative")

    def leq(self, other: "DimVector") -> bool:
        n = max(len(self), len(other))
        return all(a <= b for a, b in zip(self.padded(n), other.padded(n)))

    def __eq__(self, other) -> bool:
        return isinstance(other, DimVector) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(("DimVector", self.entries))

    def __lt__(self, other: "DimVector") -> bool:
        return self.entries < other.entries

    def to_json(self) -> list:
        return [[i, v] for i, v in enumerate(self.entries, start=1) if v]

    @classmethod
    def from_json(cls, data) -> "DimVector":
        return cls({int(i): int(v) for i, v in data})

    @classmethod
    def parse(cls, text: str) -> "DimVector":
        try:
            return cls(int(x) for x in text.replace(" ", "").split(",") if x != "")
        except ValueError as exc:
            raise ArgumentError(f"bad dimension vector {text!r}") from exc

    def __repr__(self) -> str:
        return f"DimVector({list(self.entries)})"


def euler_form(d: DimVector | Sequence[int], e: DimVector | Sequence[int]) -> int:
    """``<d, e> = sum_i d_i e_i - sum_i d_i e_{i+1}``."""
    d = d.entries if isinstance(d, DimVector) else tuple(d)
    e = e.entries if isinstance(e, DimVector) else tuple(e)
    total = 0
    for i, x in enumerate(d):
        if x:
            if i < len(e):
                total += x * e[i]
            if i + 1 < len(e):
                total -= x * e[i + 1]
    return total


# ---------------------------------------------------------------------------
# segments and multisegments


class Segment(NamedTuple):
    a: int
    b: int

    @classmethod
    def make(cls, a: int, b: int) -> "Segment":
        if not 1 <= a <= b:
            raise ArgumentError(f"invalid segment [{a},{b}]")
        return cls(a, b)

    @property
    def dim(self) -> DimVector:
        return DimVector([0] * (self.a - 1) + [1] * (self.b - self.a + 1))

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


def segments_of_rank(n: int) -> list[Segment]:
    """All ``[a,b]`` with ``1 <= a <= b <= n`` in lexicographic order."""
    return [Segment(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


_MS_TERM = re.compile(r"^(\d*)\s*\*?\s*\[\s*(\d+)\s*,\s*(\d+)\s*\]$")


class Multisegment:
    """Isoclass of a finite-dimensional representation: a multiset of segments."""

    __slots__ = ("items", "_hash", "_dim")

    def __init__(self, mult: Mapping[Segment, int] | Iterable[tuple[Segment, int]] = ()):
        pairs = mult.items() if isinstance(mult, Mapping) else mult
        acc: dict[Segment, int] = {}
        for seg, m in pairs:
            seg = Segment.make(*seg)
            if m < 0:
                raise ArgumentError("multiplicities must be nonnegative")
            if m:
                acc[seg] = acc.get(seg, 0) + int(m)
        self.items: tuple[tuple[Segment, int], ...] = tuple(sorted(acc.items()))
        self._hash = None
        self._dim = None

    @classmethod
    def zero(cls) -> "Multisegment":
        return cls()

    @classmethod
    def of(cls, *segs: tuple[int, int]) -> "Multisegment":
        """Direct sum of the listed segments (repetitions allowed)."""
        return cls((Segment(*s), 1) for s in segs)

    @classmethod
    def simple(cls, i: int) -> "Multisegment":
        return cls.of((i, i))

    @classmethod
    def semisimple(cls, d: DimVector) -> "Multisegment":
        return cls((Segment(i, i), d[i]) for i in d.support)

    @property
    def mult(self) -> dict[Segment, int]:
        return dict(self.items)

    def multiplicity(self, seg: tuple[int, int]) -> int:
        return self.mult.get(Segment(*seg), 0)

    @property
    def segments(self) -> list[Segment]:
        return [s for s, _ in self.items]

    def expanded(self) -> list[Segment]:
        """Segments listed with repetition, in canonical order."""
        return [s for s, m in self.items for _ in range(m)]

    def is_zero(self) -> bool:
        return not self.items

    def is_indecomposable(self) -> bool:
        return len(self.items) == 1 and self.items[0][1] == 1

    def is_isotypic(self) -> bool:
        return len(self.items) == 1

    @property
    def dim(self) -> DimVector:
        if self._dim is None:
            top = max((s.b for s, _ in self.items), default=0)
            vals = [0] * top
            for s, m in self.items:
                for i in range(s.a - 1, s.b):
                    vals[i] += m
            self._dim = DimVector(vals)
        return self._dim

    @property
    def total_dim(self) -> int:
        return sum((s.b - s.a + 1) * m for s, m in self.items)

    @property
    def max_vertex(self) -> int:
        return max((s.b for s, _ in self.items), default=0)

    @property
    def min_vertex(self) -> int:
        return min((s.a for s, _ in self.items), default=1)

    def shift(self, k: int) -> "Multisegment":
        """Translate every segment by ``k`` vertices."""
        return Multisegment((Segment(s.a + k, s.b + k), m) for s, m in self.items)

    def __add__(self, other: "Multisegment") -> "Multisegment":
        return Multisegment(list(self.items) + list(other.items))

    def __mul__(self, t: int) -> "Multisegment":
        return Multisegment((s, m * t) for s, m in self.items)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Multisegment) and self.items == other.items

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.items)
        return self._hash

    def sort_key(self) -> tuple:
        return (self.dim.entries, self.items)

    def __lt__(self, other: "Multisegment") -> bool:
        return self.sort_key() < other.sort_key()

    def to_text(self) -> str:
        if not self.items:
            return "0"
        return "+".join(f"{'' if m == 1 else m}[{s.a},{s.b}]" for s, m in self.items)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Multisegment({self.to_text()})"

    def to_json(self) -> list:
        return [[s.a, s.b, m] for s, m in self.items]

    @classmethod
    def from_json(cls, data) -> "Multisegment":
        return cls((Segment(a, b), m) for a, b, m in data)

    @classmethod
    def parse(cls, text: str) -> "Multisegment":
        """Parse ``"2[1,1]+[2,2]"``; ``"0"`` or the empty string is the zero module."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        pairs = []
        for term in text.split("+"):
            m = _MS_TERM.match(term.strip())
            if not m:
                raise ArgumentError(f"bad multisegment term {term!r}")
            mult = int(m.group(1)) if m.group(1) else 1
            a, b = int(m.group(2)), int(m.group(3))
            if not 1 <= a <= b:
                raise ArgumentError(f"invalid segment [{a},{b}]")
            pairs.append((Segment(a, b), mult))
        return cls(pairs)


def direct_sum(*ms: Multisegment) -> Multisegment:
    out = Multisegment()
    for m in ms:
        out = out + m
    return out


# ---------------------------------------------------------------------------
# Hom and Ext


def segment_hom(x: Segment, y: Segment) -> int:
    """``dim Hom(M[a,b], M[c,d])``: 1 iff ``c <= a <= d <= b``."""
    return 1 if y.a <= x.a <= y.b <= x.b else 0


def hom_dim(m: Multisegment, n: Multisegment) -> int:
    return sum(k * l * segment_hom(x, y) for x, k in m.items for y, l in n.items)


def ext_dim(m: Multisegment, n: Multisegment) -> int:
    e = hom_dim(m, n) - euler_form(m.dim, n.dim)
    if e < 0:
        raise VerificationError(f"negative Ext dimension for ({m}, {n})")
    return e


def end_dim(m: Multisegment) -> int:
    return hom_dim(m, m)


# ---------------------------------------------------------------------------
# enumeration of isoclasses


@lru_cache(maxsize=None)
def _classes(entries: tuple[int, ...]) -> tuple[Multisegment, ...]:
    entries = list(entries)
    while entries and entries[-1] == 0:
        entries.pop()
    if not entries:
        return (Multisegment(),)
    i = next(k for k, v in enumerate(entries) if v)  # 0-based smallest support vertex
    out = []
    # every segment through vertex i starts at i; distribute d_i among end points
    ends = []
    b = i
    while b < len(entries) and entries[b] > 0:
        ends.append(b)
        b += 1

    def distribute(idx: int, remaining: int, chosen: list[int]):
        if idx == len(ends) - 1:
            yield chosen + [remaining]
            return
        for m in range(remaining + 1):
            yield from distribute(idx + 1, remaining - m, chosen + [m])

    for counts in distribute(0, entries[i], []):
        rest = list(entries)
        ok = True
        for e_idx, m in zip(ends, counts):
            if not m:
                continue
            for k in range(i, e_idx + 1):
                rest[k] -= m
                if rest[k] < 0:
                    ok = False
        if not ok:
            continue
        here = Multisegment((Segment(i + 1, e + 1), m) for e, m in zip(ends, counts))
        for tail in _classes(tuple(rest)):
            out.append(here + tail)
    return tuple(sorted(set(out), key=lambda x: x.items))


def enumerate_classes(d: DimVector) -> list[Multisegment]:
    """Every isoclass with dimension vector ``d`` once, in canonical order."""
    return list(_classes(d.entries))


def semisimple_class(d: DimVector) -> Multisegment:
    return Multisegment.semisimple(d)


def generic_class_of(d: DimVector) -> Multisegment:
    """Class with the smallest endomorphism algebra among those of dimension ``d``."""
    return min(enumerate_classes(d), key=lambda m: (end_dim(m), m.items))


# ---------------------------------------------------------------------------
# concrete modules over finite fields


@dataclass(frozen=True)
class FqModule:
    """Representation over ``F_q``: ``dims[i]`` at vertex ``i+1`` and
    ``arrows[i]`` (a ``dims[i+1] x dims[i]`` matrix) for the arrow ``i+1 -> i+2``."""

    q: int
    dims: tuple[int, ...]
    arrows: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if len(self.arrows) != max(len(self.dims) - 1, 0):
            raise ArgumentError("need one arrow matrix per consecutive vertex pair")
        for i, m in enumerate(self.arrows):
            if len(m) != self.dims[i + 1] or any(len(row) != self.dims[i] for row in m):
                raise ArgumentError(f"arrow {i + 1} has the wrong shape")
            if any(not 0 <= x < self.q for row in m for x in row):
                raise ArgumentError("matrix entries must be field elements")

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def dim_vector(self) -> DimVector:
        return DimVector(self.dims)

    @property
    def field(self):
        return field(self.q)

    def apply(self, i: int, vec: tuple) -> tuple:
        """Push a vector at 0-based vertex ``i`` along the arrow to ``i+1``."""
        return self.field.mat_vec(self.arrows[i], vec)

    def composite(self, a: int, b: int) -> list[tuple]:
        """Matrix of the path map from vertex ``a`` to vertex ``b`` (1-based, a <= b)."""
        f = self.field
        cur = [tuple(1 if r == c else 0 for c in range(self.dims[a - 1])) for r in range(self.dims[a - 1])]
        for i in range(a - 1, b - 1):
            cur = f.mat_mul(list(self.arrows[i]), cur)
        return cur


def realize(m: Multisegment, q: int, n: int | None = None) -> FqModule:
    """Block-diagonal realization: one basis vector per segment copy and vertex."""
    field(q)  # validates q
    n = max(n or 0, m.max_vertex)
    copies = m.expanded()
    index = [[k for k, s in enumerate(copies) if s.a <= v <= s.b] for v in range(1, n + 1)]
    arrows = []
    for v in range(n - 1):
        src, dst = index[v], index[v + 1]
        mat = tuple(tuple(1 if (k_dst == k_src and copies[k_src].b >= v + 2) else 0 for k_src in src) for k_dst in dst)
        arrows.append(mat)
    return FqModule(q, tuple(len(ix) for ix in index), tuple(arrows))


def _rank_table(mod: FqModule) -> dict[tuple[int, int], int]:
    f = mod.field
    ranks = {}
    for a in range(1, mod.n + 1):
        cur = [tuple(1 if r == c else 0 for c in range(mod.dims[a - 1])) for r in range(mod.dims[a - 1])]
        ranks[(a, a)] = mod.dims[a - 1]
        # images of the basis vectors of vertex a, pushed forward one arrow at a time
        for b in range(a + 1, mod.n + 1):
            cur = [mod.apply(b - 2, v) for v in cur]
            ranks[(a, b)] = f.rank(cur)
    return ranks


def classes_from_ranks(ranks: Mapping[tuple[int, int], int], n: int) -> Multisegment:
    """Inclusion-exclusion on path-map ranks: multiplicity of every ``[a,b]``."""

    def r(a: int, b: int) -> int:
        if a < 1 or b > n:
            return 0
        return ranks[(a, b)]

    pairs = []
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            m = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1)
            if m < 0:
                raise VerificationError("negative multiplicity from rank data")
            if m:
                pairs.append((Segment(a, b), m))
    return Multisegment(pairs)


def iso_class(mod: FqModule) -> Multisegment:
    return classes_from_ranks(_rank_table(mod), mod.n)


# ---------------------------------------------------------------------------
# submodules


@dataclass(frozen=True)
class Embedding:
    """Arrow-stable tuple of subspaces, one RREF basis per vertex."""

    module: FqModule
    bases: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bases)


def iter_submodule_bases(mod: FqModule, sub_dims: Sequence[int]) -> Iterator[tuple[list, ...]]:
    """Depth-first enumeration of stable subspace tuples with the given dimensions."""
    f = mod.field
    n = mod.n
    sub_dims = tuple(sub_dims) + (0,) * (n - len(sub_dims))
    if len(sub_dims) > n or any(s > t for s, t in zip(sub_dims, mod.dims)):
        raise ArgumentError("sub dimension vector exceeds module dimension vector")

    def rec(i: int, prev_image: list, acc: list):
        if i == n:
            yield tuple(acc)
            return
        for w in f.superspaces(mod.dims[i], prev_image, sub_dims[i]):
            image = [mod.apply(i, v) for v in w] if i + 1 < n else []
            acc.append(w)
            yield from rec(i + 1, image, acc)
            acc.pop()

    yield from rec(0, [], [])


def submodules(mod: FqModule, sub_dim: DimVector) -> list[Embedding]:
    if not sub_dim.leq(mod.dim_vector):
        raise ArgumentError("sub dimension vector exceeds module dimension vector")
    return [Embedding(mod, tuple(tuple(b) for b in bases)) for bases in iter_submodule_bases(mod, sub_dim.padded(mod.n))]


def sub_and_quotient_classes(mod: FqModule, bases: Sequence[Sequence[tuple]]) -> tuple[Multisegment, Multisegment]:
    """Isoclasses of a submodule ``W`` and of ``mod / W`` from path-map ranks."""
    f = mod.field
    n = mod.n
    sub_r: dict = {}
    quo_r: dict = {}
    wdims = [len(b) for b in bases]
    for a in range(1, n + 1):
        w_img = list(bases[a - 1])
        v_img = [tuple(1 if r == c else 0 for c in range(mod.dims[a - 1])) for r in range(mod.dims[a - 1])]
        sub_r[(a, a)] = wdims[a - 1]
        quo_r[(a, a)] = mod.dims[a - 1] - wdims[a - 1]
        for b in range(a + 1, n + 1):
            w_img = [mod.apply(b - 2, v) for v in w_img]
            v_img = [mod.apply(b - 2, v) for v in v_img]
            sub_r[(a, b)] = f.rank(w_img)
            quo_r[(a, b)] = f.rank(v_img + list(bases[b - 1])) - wdims[b - 1]
    return classes_from_ranks(sub_r, n), classes_from_ranks(quo_r, n)


# ---------------------------------------------------------------------------
# Hom spaces by linear algebra (oracle)


def hom_space(m: FqModule, n: FqModule, _system_only: bool = False):
    """Basis of Hom(m, n): families of matrices ``f_i`` with ``f_{i+1} A_i = B_i f_i``."""
    if m.q != n.q:
        raise ArgumentError("modules over different fields")
    f = m.field
    k = max(m.n, n.n)
    md = list(m.dims) + [0] * (k - m.n)
    nd = list(n.dims) + [0] * (k - n.n)
    offsets = []
    total = 0
    for i in range(k):
        offsets.append(total)
        total += nd[i] * md[i]

    def var(i, r, c):  # entry (r, c) of f_i
        return offsets[i] + r * md[i] + c

    def arrow(mod, dims, i, r, c):
        if i >= mod.n - 1 or i + 1 >= len(dims) or not dims[i] or not dims[i + 1]:
            return 0
        return mod.arrows[i][r][c]

    rows = []
    for i in range(k - 1):
        # (f_{i+1} A_i - B_i f_i)[r][c] = 0 for r < nd[i+1], c < md[i]
        for r in range(nd[i + 1]):
            for c in range(md[i]):
                row = [0] * total
                for t in range(md[i + 1]):
                    a = arrow(m, md, i, t, c)
                    if a:
                        idx = var(i + 1, r, t)
                        row[idx] = f.add[row[idx]][a]
                for t in range(nd[i]):
                    b = arrow(n, nd, i, r, t)
                    if b:
                        idx = var(i, t, c)
                        row[idx] = f.sub[row[idx]][b]
                if any(row):
                    rows.append(tuple(row))
    if _system_only:
        target = sum(nd[i + 1] * md[i] for i in range(k - 1))
        return rows, total, target
    basis = f.nullspace(rows, total)
    out = []
    for vec in basis:
        maps = []
        for i in range(k):
            maps.append([tuple(vec[var(i, r, c)] for c in range(md[i])) for r in range(nd[i])])
        out.append(maps)
    return out


def hom_dim_oracle(m: Multisegment, n: Multisegment, q: int = 2) -> int:
    k = max(m.max_vertex, n.max_vertex, 1)
    return len(hom_space(realize(m, q, k), realize(n, q, k)))


def hom_ext_oracle(m: Multisegment, n: Multisegment, q: int = 2) -> tuple[int, int]:
    """``(dim Hom, dim Ext^1)`` as kernel and cokernel of the standard map
    ``sum_i Hom(M_i, N_i) -> sum_arrows Hom(M_i, N_{i+1})`` over ``F_q``."""
    k = max(m.max_vertex, n.max_vertex, 1)
    mm, nn = realize(m, q, k), realize(n, q, k)
    rows, total, target = hom_space(mm, nn, _system_only=True)
    rank = mm.field.rank(rows) if rows else 0
    return total - rank, target - rank


# ---------------------------------------------------------------------------
# automorphism groups


def aut_order(m: Multisegment) -> IntPolynomial:
    """``|Aut M(m)|`` as a polynomial in the field size.

    The radical of End has dimension ``dim End - sum m_i^2`` and the
    semisimple quotient is a product of full matrix algebras, one per
    indecomposable summand type of multiplicity ``m_i``.
    """
    x = IntPolynomial.x()
    out = IntPolynomial.const(1)
    sq = 0
    for _, k in m.items:
        sq += k * k
        for j in range(k):
            out = out * (x ** k - x ** j)
    return out * x ** (end_dim(m) - sq)


def count_automorphisms(m: Multisegment, q: int) -> int:
    """Brute-force ``|Aut|`` over ``F_q``: enumerate End and test invertibility."""
    BUDGET.check_q(q)
    f = field(q)
    mod = realize(m, q)
    basis = hom_space(mod, mod)
    count = 0
    for coeffs in product(range(q), repeat=len(basis)):
        ok = True
        for i in range(mod.n):
            d = mod.dims[i]
            if not d:
                continue
            mat = [[0] * d for _ in range(d)]
            for c, b in zip(coeffs, basis):
                if c:
                    mc = f.mul[c]
                    for r in range(d):
                        for s in range(d):
                            mat[r][s] = f.add[mat[r][s]][mc[b[i][r][s]]]
            if f.rank([tuple(row) for row in mat]) < d:
                ok = False
                break
        count += ok
    return count


def aut_order_by_count(m: Multisegment) -> IntPolynomial:
    """Interpolate ``|Aut|`` from counts over ``dim End + 1`` fields, checked at one more."""
    h = end_dim(m)
    qs = ladder(h + 2)
    samples = [(q, count_automorphisms(m, q)) for q in qs]
    return interpolate(samples, h)


def gl_dims_order(d: DimVector, q: int) -> int:
    out = 1
    for v in d.entries:
        out *= gl_order(v, q)
    return out


def kostant_partition_count(d: DimVector) -> int:
    """Number of ways to write ``d`` as a sum of interval indicator vectors.

    Independent of :func:`enumerate_classes`: peels off segments ordered by
    (length, start) with a multiplicity recursion.
    """
    n = len(d)
    segs = sorted(segments_of_rank(n), key=lambda s: (s.b - s.a, s.a))

    @lru_cache(maxsize=None)
    def count(idx: int, rest: tuple[int, ...]) -> int:
        if idx == len(segs):
            return 1 if not any(rest) else 0
        s = segs[idx]
        total = 0
        cur = list(rest)
        k = 0
        while True:
            total += count(idx + 1, tuple(cur))
            if any(cur[i] == 0 for i in range(s.a - 1, s.b)):
                break
            for i in range(s.a - 1, s.b):
                cur[i] -= 1
            k += 1
        return total

    return count(0, d.entries)
