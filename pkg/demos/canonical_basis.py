"""Bar involution and the two-parameter canonical basis.

Lists the canonical basis of a few components, their coefficients as
powers of s times polynomials in x = r/s, and the one-parameter
specialization next to an independent computation.

    python3 demos/canonical_basis.py
"""

from __future__ import annotations

from rshall.bar import bar_element, bar_report, canonical_basis, specialization_mismatches
from rshall.hall import HallElement
from rshall.repcat import DimVector, Multisegment


def main() -> None:
    u12 = HallElement.basis(Multisegment.parse("[1,2]"), 2)
    print("bar(u[1,2]) =", bar_element(u12).to_text())

    for d in [(1, 1), (2, 1), (1, 1, 1), (1, 2, 1)]:
        dv = DimVector(d)
        print(f"\ncomponent {d}")
        for elt in canonical_basis(dv):
            print("  " + elt.table_row())
        report = bar_report(dv)
        print(f"  checks: {'pass' if report['passed'] else report}")
        print(f"  one-parameter specialization agrees: {not specialization_mismatches(dv)}")


if __name__ == "__main__":
    main()
