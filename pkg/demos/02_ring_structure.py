"""The Chen-Ruan ring of P(1,1,2), entry by entry.

The quotient has one genuine twisted sector (the half rotation, a Z/2 point),
and the interesting product is its square: two twist factors merge into the
top class eta^2 of the untwisted sector.  Run:

    python3 demos/02_ring_structure.py
"""

from crring import ChenRuanRing, QuotientDatum, format_rational, validate_datum

vd = validate_datum(QuotientDatum((1, 1, 2)))
ring = ChenRuanRing(vd)
table = ring.structure_constants()

print(f"basis of H*_CR(P{vd.weights}):")
for i, element in enumerate(table.basis):
    print(f"  b{i} = {element}   (degree {format_rational(table.degrees[i])})")

print("\nnonzero products (b_i * b_j for i <= j):")
for (i, j), value in sorted(table.products.items()):
    print(f"  b{i} * b{j} = {value}")

print("\npairing matrix:")
for row in table.pairing:
    print("  [" + "  ".join(f"{format_rational(v):>4}" for v in row) + "]")

# The pairing of the twisted point with itself is 1/2: the orbifold integral
# of 1 over a Z/2 point.  Nondegeneracy and the ring axioms are checked by
# the built-in verifier.
report = ring.verify_ring_axioms()
print(f"\nring axioms: {'all pass' if report.passed else report.first_failure()}")
