"""Text and JSON input for algebra elements.

Grammar (whitespace ignored)::

    element := term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := basis | coefficient
    basis   := "u0" | "u[a,b]" | "u(" multisegment ")" | "k[" int ("," int)* "]"

Coefficients use the syntax of :func:`rshall.coeffs.parse_coefficient`, e.g.
``(r+s)*u[1,1]`` or ``-s^-1*u[1,2]``.  Several basis factors in one term are
multiplied in order.  A term containing ``k[...]`` makes the whole element an
extended element.
"""

from __future__ import annotations

import json
import re

from .coeffs import RS, RationalFunction, parse_coefficient
from .errors import ArgumentError
from .hall import STANDARD, HallElement, Parameters
from .repcat import Multisegment, Segment

_U_SEG = re.compile(r"^u\[(\d+),(\d+)\]$")
_U_MS = re.compile(r"^u\((.*)\)$")
_K = re.compile(r"^k\[(-?\d+(?:,-?\d+)*)\]$")


def _split(text: str, seps: str, keep_sign: bool) -> list[tuple[str, str]]:
    """Split at top-level separators; a ``-`` right after ``^`` is an exponent sign."""
    parts: list[tuple[str, str]] = []
    depth = 0
    start = 0
    sign = "+"
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ArgumentError(f"unbalanced brackets in {text!r}")
        elif depth == 0 and ch in seps:
            if keep_sign and i == 0:
                sign = ch
                start = 1
                continue
            if keep_sign and text[i - 1] in "^*/":
                continue
            parts.append((sign, text[start:i]))
            sign = ch
            start = i + 1
    if depth:
        raise ArgumentError(f"unbalanced brackets in {text!r}")
    parts.append((sign, text[start:]))
    return parts


def _basis_factor(tok: str):
    """Return ``("u", Multisegment)``, ``("k", tuple)`` or ``None`` for a coefficient."""
    if tok == "u0":
        return ("u", Multisegment())
    m = _U_SEG.match(tok)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        if not 1 <= a <= b:
            raise ArgumentError(f"invalid segment [{a},{b}]")
        return ("u", Multisegment([(Segment(a, b), 1)]))
    m = _U_MS.match(tok)
    if m:
        return ("u", Multisegment.parse(m.group(1)))
    m = _K.match(tok)
    if m:
        return ("k", tuple(int(x) for x in m.group(1).split(",")))
    if tok.startswith(("u", "k")):
        raise ArgumentError(f"cannot parse basis element {tok!r}")
    return None


def parse_element(text: str, rank: int | None = None, params: Parameters = STANDARD):
    """Parse text or JSON into a :class:`HallElement` or an extended element."""
    from .hopf import ExtendedElement, ext_multiply

    raw = text.strip()
    if raw.startswith("{"):
        return element_from_json(json.loads(raw), params)
    compact = re.sub(r"\s+", "", raw)
    if not compact:
        raise ArgumentError("empty element")
    terms = []
    max_vertex = 1
    has_k = False
    for sign, chunk in _split(compact, "+-", keep_sign=True):
        if not chunk:
            raise ArgumentError(f"empty term in {text!r}")
        coeff = RationalFunction.lift(-1 if sign == "-" else 1, params.names)
        factors = []
        for _, tok in _split(chunk, "*", keep_sign=False):
            if not tok:
                raise ArgumentError(f"empty factor in {chunk!r}")
            basis = _basis_factor(tok)
            if basis is None:
                coeff = coeff * parse_coefficient(tok, params.names)
                continue
            factors.append(basis)
            if basis[0] == "u":
                max_vertex = max(max_vertex, basis[1].max_vertex)
            else:
                has_k = True
                max_vertex = max(max_vertex, len(basis[1]))
        terms.append((coeff, factors))
    n = rank if rank is not None else max_vertex
    if max_vertex > n:
        raise ArgumentError(f"element needs rank {max_vertex}, got {n}")

    if has_k:
        if params.names != RS:
            raise ArgumentError("torus elements need the two-parameter ring")
        total = ExtendedElement({}, n)
        for coeff, factors in terms:
            x = ExtendedElement.one(n)
            for kind, val in factors:
                y = ExtendedElement.k(val, n) if kind == "k" else ExtendedElement.u(val, n)
                x = ext_multiply(x, y)
            total = total + x.scale(coeff)
        return total
    total = HallElement.zero(n, params)
    for coeff, factors in terms:
        x = HallElement.one(n, params)
        for _, val in factors:
            x = x * HallElement.basis(val, n, params)
        total = total + x.scale(coeff)
    return total


def element_from_json(data: dict, params: Parameters = STANDARD):
    from .hopf import ExtendedElement

    if any("k" in t for t in data.get("terms", [])):
        terms = {
            (tuple(t["k"]), Multisegment.from_json(t["module"])): RationalFunction.from_json(t["coeff"], RS)
            for t in data["terms"]
        }
        return ExtendedElement(terms, data["rank"])
    return HallElement.from_json(data, params)
