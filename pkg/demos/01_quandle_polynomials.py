"""Finite quandles and their two-variable polynomial.

Run from the repository root:  python3 demos/01_quandle_polynomials.py
"""

import pathlib

from quandlekit import (
    FiniteQuandle,
    alexander_quandle,
    are_isomorphic,
    cr_counts,
    dihedral_quandle,
    quandle_from_text,
    quandle_polynomial,
    trivial_quandle,
    validate_quandle,
)

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

print("A quandle is given by its operation table; row x, column y holds x * y.")
q = quandle_from_text((FIXTURES / "example3.qnd").read_text())
for row in q.table:
    print("   ", *row)

print()
print("The axiom checker reports a witness when a table fails.")
bad = ((2, 1, 1), (2, 2, 2), (3, 3, 3))
report = validate_quandle(bad)
for axiom, witness in report.violations:
    print(f"    broken table violates {axiom} at {witness}")

print()
print("For each element x, c(x) counts the y with y * x = y and r(x)")
print("counts the y with x * y = x.")
for x in q.elements:
    c, r = cr_counts(q, x)
    print(f"    x = {x}: c = {c}, r = {r}")

print()
print("The polynomial sums t^c(x) s^r(x) over all elements:")
print("    phi =", quandle_polynomial(q))

print()
print("Some standard constructions:")
for name, quandle in [
    ("trivial of order 4", trivial_quandle(4)),
    ("dihedral of order 3", dihedral_quandle(3)),
    ("dihedral of order 5", dihedral_quandle(5)),
    ("Alexander on Z_5 with t = 2", alexander_quandle(5, 2)),
]:
    print(f"    {name}: phi = {quandle_polynomial(quandle)}")

print()
print("The polynomial is an isomorphism invariant.  Relabeling the dihedral")
print("quandle of order 3 by the permutation (3, 1, 2) gives a table that")
print("looks different but is certified isomorphic:")
d3 = dihedral_quandle(3)
perm = (3, 1, 2)
relabeled = [[0] * 3 for _ in range(3)]
for x in range(1, 4):
    for y in range(1, 4):
        relabeled[perm[x - 1] - 1][perm[y - 1] - 1] = perm[d3.table[x - 1][y - 1] - 1]
q2 = FiniteQuandle.from_table(relabeled)
print("    phi(original) =", quandle_polynomial(d3))
print("    phi(relabeled) =", quandle_polynomial(q2))
print("    isomorphism found:", are_isomorphic(d3, q2))

print()
print("It does not separate everything: dihedral(5) and Alexander(5, 2)")
print("are non-isomorphic but share the polynomial of any Latin quandle")
print("of order 5.")
print("    phi(dihedral 5) =", quandle_polynomial(dihedral_quandle(5)))
print("    phi(alexander 5,2) =", quandle_polynomial(alexander_quandle(5, 2)))
no_iso = are_isomorphic(dihedral_quandle(5), alexander_quandle(5, 2)) is None
print("    exhaustive search finds no isomorphism:", no_iso)
