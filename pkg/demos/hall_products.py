"""Products in the two-parameter Hall algebra of A_2 and A_3.

Starts from the two simples, multiplies them both ways, and shows how the
defining relations cancel coefficient by coefficient.

    python3 demos/hall_products.py
"""

from __future__ import annotations

from rshall.coeffs import parse_coefficient
from rshall.hall import HallElement, hall_polynomial
from rshall.repcat import Multisegment, ext_dim, hom_dim

M = Multisegment.parse


def main() -> None:
    s1, s2 = M("[1,1]"), M("[2,2]")
    print("hom / ext between the simples")
    for a, b in [(s1, s2), (s2, s1)]:
        print(f"  Hom({a}, {b}) = {hom_dim(a, b)}   Ext({a}, {b}) = {ext_dim(a, b)}")

    print("\nHall polynomials, interpolated from counts over small fields")
    for quo, sub, tot in [(s1, s1, M("2[1,1]")), (s1, s2, M("[1,2]")), (s1, M("[1,2]"), M("[1,1]+[1,2]"))]:
        print(f"  F^{{{tot}}}_{{{quo},{sub}}} = {hall_polynomial(quo, sub, tot).to_text()}")

    u1, u2 = HallElement.simple(1, 2), HallElement.simple(2, 2)
    print("\nproducts of simples in rank 2")
    print("  u1 u2 =", (u1 * u2).to_text())
    print("  u2 u1 =", (u2 * u1).to_text())
    print("  u1 u1 =", (u1 * u1).to_text())

    # the cubic relation, one word at a time
    plus, prod = parse_coefficient("r+s"), parse_coefficient("r*s")
    words = {"u1 u1 u2": u1 * u1 * u2, "u1 u2 u1": u1 * u2 * u1, "u2 u1 u1": u2 * u1 * u1}
    print("\ncubic words")
    for name, x in words.items():
        print(f"  {name} = {x.to_text()}")
    combo = words["u1 u1 u2"] - words["u1 u2 u1"].scale(plus) + words["u2 u1 u1"].scale(prod)
    print("  u1^2 u2 - (r+s) u1 u2 u1 + rs u2 u1^2 =", combo.to_text() or "0")

    u = [HallElement.simple(i, 3) for i in (1, 2, 3)]
    print("\ndistant simples commute:", (u[0] * u[2] - u[2] * u[0]).is_zero())


if __name__ == "__main__":
    main()
