"""Root vectors, PBW monomials and the straightening rules in rank 3.

    python3 demos/pbw_straightening.py
"""

from __future__ import annotations

from rshall.pbw import (
    format_pbw,
    graded_dimension,
    pbw_component,
    root_order,
    straighten,
    straighten_via_hall,
    tower_report,
)
from rshall.repcat import DimVector


def main() -> None:
    n = 3
    order = root_order(n)
    print("root order:", " < ".join(str(order.root(p)) for p in range(1, len(order) + 1)))

    print("\ncommutation of each out-of-order pair")
    for j in range(1, len(order) + 1):
        for i in range(1, j):
            print(f"  X{order.root(j)} X{order.root(i)} = {format_pbw(straighten((j, i), n))}")

    word = (6, 4, 1)
    left = straighten(word, n)
    right = straighten(word, n, strategy="rightmost")
    print(f"\nthe word {word} straightened from the left and from the right")
    print("  ", format_pbw(left))
    print("   same result:", left == right, "| agrees with the Hall product:", left == straighten_via_hall(word, n))

    d = DimVector((1, 2, 1))
    comp = pbw_component(d, n)
    print(f"\nPBW basis of the component {d.padded(n)}: {comp.size} monomials (graded dimension {graded_dimension(d)})")
    for mono, img in zip(comp.monomials, comp.images):
        print(f"  {mono.to_text():<22} = {img.to_text()}")

    report = tower_report(n)
    print("\nskew-polynomial tower scalars K:", ", ".join(report["K_values"]))


if __name__ == "__main__":
    main()
