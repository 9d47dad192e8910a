"""Enumerating small quandles and classifying them by polynomial.

Run from the repository root:  python3 demos/04_census.py
The order-6 part at the end takes a few seconds.
"""

from quandlekit import (
    are_isomorphic,
    enumerate_quandles,
    polynomial_classification,
)

print("Isomorphism classes of quandles by order, each represented by its")
print("canonical (lexicographically minimal) table:")
for n in range(1, 6):
    entries = enumerate_quandles(n)
    print(f"    order {n}: {len(entries)} classes")

print()
print("All 3 classes of order 3, with their polynomials:")
for i, e in enumerate(enumerate_quandles(3), start=1):
    rows = "  ".join(" ".join(str(v) for v in row) for row in e.quandle.table)
    print(f"    #{i}  [{rows}]  phi = {e.polynomial}")

print()
print("Through order 4 the polynomial separates every pair of classes.")
for n in range(1, 5):
    report = polynomial_classification(n)
    print(f"    order {n}: injective = {report.injective}")

print()
print("At order 5 it does not.  The collisions:")
report = polynomial_classification(5)
entries = enumerate_quandles(5)
for i, j in report.collisions:
    phi = entries[i - 1].polynomial
    iso = are_isomorphic(entries[i - 1].quandle, entries[j - 1].quandle)
    print(f"    #{i} and #{j} share phi = {phi}; isomorphic? {iso}")
print("Entries 20, 21 and 22 are the Latin quandles of order 5 (two")
print("Alexander quandles and the dihedral one); in a Latin quandle every")
print("element fixes exactly one element on each side, forcing phi = 5ts.")

print()
print("Order 6 (this enumerates 73 classes):")
report = polynomial_classification(6)
print(f"    classes: {len(enumerate_quandles(6))}")
print(f"    injective = {report.injective}, "
      f"{len(report.collisions)} colliding pairs, first: {report.collisions[0]}")
