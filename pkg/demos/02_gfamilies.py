"""G-families of quandles and the associated quandle on pairs.

Run from the repository root:  python3 demos/02_gfamilies.py
"""

from quandlekit import (
    FAMILY_NAMES,
    associated_quandle,
    builtin_family,
    dihedral_quandle,
    gfamily_polynomial,
    kei_to_z2_family,
    quandle_polynomial,
    validate_gfamily,
)

print("A G-family assigns one quandle operation per group element, all on")
print("the same set, compatible with the group multiplication.")
print()

f = builtin_family("z2_3")
print("The family z2_3: group Z2 acting on a 3-element set.")
for g in f.group.elements:
    print(f"  operation for group element {g}:")
    for row in f.ops[g - 1].table:
        print("   ", *row)

print()
print("The identity's operation is always trivial, so its polynomial slot")
print("is n t^n s^n.  The whole family polynomial lists one slot per")
print("group element:")
for name in FAMILY_NAMES:
    fam = builtin_family(name)
    print(f"    {name}: {gfamily_polynomial(fam)}")

print()
print("Validation reports a witness per broken axiom.  Assigning the")
print("dihedral operation to the identity of Z2 breaks the identity axiom:")
group = f.group
d3 = dihedral_quandle(3).table
report = validate_gfamily(group, (d3, d3))
for axiom, witness in report.violations:
    print(f"    {axiom} at {witness}")

print()
print("Every involutory quandle (kei) spawns a Z2-family with the trivial")
print("operation at the identity.  The dihedral quandle of order 3 gives")
print("exactly the bundled z2_3:")
print("    kei_to_z2_family(dihedral 3) == builtin z2_3:",
      kei_to_z2_family(dihedral_quandle(3)) == f)

print()
print("The associated quandle lives on pairs (g, x), encoded as")
print("(g - 1) * n + x.  For z2_3 it has 6 elements:")
assoc = associated_quandle(f)
for row in assoc.quandle.table:
    print("   ", *row)
print("    phi =", quandle_polynomial(assoc.quandle))

print()
print("Associated quandle polynomials of all bundled families:")
for name in FAMILY_NAMES:
    fam = builtin_family(name)
    print(f"    {name}: {quandle_polynomial(associated_quandle(fam).quandle)}")
