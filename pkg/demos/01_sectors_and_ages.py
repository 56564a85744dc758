"""Twisted sectors of a weighted projective space.

Builds the quotient presentation of P(1,2,2,3,3,3), enumerates its twisted
sectors, and prints each sector's fixed coordinates, rotation phases, and
degree shift (age).  Run from the repository root:

    python3 demos/01_sectors_and_ages.py
"""

from fractions import Fraction

from crring import QuotientDatum, format_rational, validate_datum

# A weighted projective space is the positive-chamber quotient of C^n by the
# circle acting with these weights.
vd = validate_datum(QuotientDatum((1, 2, 2, 3, 3, 3)))

print(f"P{vd.weights}: {len(vd.sectors())} twisted sectors\n")
print(f"{'label':<8} {'fixed':<14} {'thetas':<24} {'age':>4}  dim")
for info in vd.sectors():
    thetas = ",".join(format_rational(th) for th in info.thetas)
    fixed = "{" + ",".join(str(j) for j in sorted(info.fixed_set)) + "}"
    print(
        f"{str(info.label):<8} {fixed:<14} {'(' + thetas + ')':<24} "
        f"{format_rational(info.shift):>4}  {info.dim}"
    )

# The sector of the cube root of unity is a copy of P(3,3,3) sitting inside
# the quotient; its age 5/3 shifts the grading of everything it carries.
third = vd.label(Fraction(1, 3))
print()
print(f"age of {third}: {format_rational(vd.degree_shift(third))}")
print(f"age + age of inverse = moved coordinates: "
      f"{format_rational(vd.degree_shift(third) + vd.degree_shift(vd.inverse(third)))}")
