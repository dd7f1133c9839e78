"""The extended algebra: torus, coproduct, antipode and the pairing.

    python3 demos/hopf_structure.py
"""

from __future__ import annotations

from rshall.hopf import ExtendedElement, antipode, coproduct, hopf_axiom_suite, pairing
from rshall.repcat import Multisegment

M = Multisegment.parse


def main() -> None:
    n = 2
    u1 = ExtendedElement.u(M("[1,1]"), n)
    u2 = ExtendedElement.u(M("[2,2]"), n)
    k1 = ExtendedElement.k((1, 0), n)

    print("k1 u2 =", (k1 * u2).to_text())
    print("u2 k1 =", (u2 * k1).to_text())

    print("\ncoproducts")
    for name, x in [("u1", u1), ("u[1,2]", ExtendedElement.u(M("[1,2]"), n)), ("u1 u2", u1 * u2)]:
        print(f"  D({name}) = {coproduct(x).to_text()}")

    print("\nantipodes")
    for name, x in [("u1", u1), ("u[1,2]", ExtendedElement.u(M("[1,2]"), n))]:
        print(f"  S({name}) = {antipode(x).to_text()}")

    bad = hopf_axiom_suite(n, 3)
    print(f"\nHopf axioms in rank {n} up to dimension 3: {'all hold' if not bad else bad[:3]}")

    print("\npairing between the f and e halves")
    for fw, ew in [((1,), (1,)), ((1, 2), (1, 2)), ((2, 1), (1, 2)), ((1, 1), (1, 1))]:
        print(f"  (f{fw}, e{ew}) = {pairing(fw, ew, n=n).pretty()}")


if __name__ == "__main__":
    main()
