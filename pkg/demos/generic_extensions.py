"""The generic-extension monoid, degeneration order and monomial bases.

    python3 demos/generic_extensions.py
"""

from __future__ import annotations

from rshall.genext import (
    DegenerationPoset,
    distinguished_word,
    gamma,
    generic_extension,
    monomial_basis,
    orbit_dim,
    word_to_module,
)
from rshall.repcat import DimVector, Multisegment

M = Multisegment.parse


def main() -> None:
    s = {i: M(f"[{i},{i}]") for i in (1, 2, 3)}
    print("S1*S2 =", generic_extension(s[1], s[2]))
    print("S2*S1 =", generic_extension(s[2], s[1]))
    for w in [(1, 2, 3), (3, 2, 1), (2, 1, 3), (1, 1, 2)]:
        m = word_to_module(w)
        print(f"M{w} = {m}   orbit dimension {orbit_dim(m)}")

    d = DimVector((1, 1, 1))
    poset = DegenerationPoset(d)
    print(f"\ndegeneration order on dimension {d.padded(3)}")
    for a, b in poset.covers():
        print(f"  {a}  <  {b}")

    print("\ndistinguished words")
    for lam in poset.linear_extension():
        w = distinguished_word(lam)
        print(f"  {str(lam):<20} {w.tight_text():<10} gamma = {gamma(w, lam).to_text()}")

    print("\nmonomial basis of dimension (2,1)")
    for _, w, x in monomial_basis(DimVector((2, 1)), rank=2):
        print(f"  u_({w.to_text()}) = {x.to_text()}")


if __name__ == "__main__":
    main()
