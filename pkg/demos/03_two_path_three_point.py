"""One 3-point function, two independent computations.

The triple of the cube-root sector of P(1,2,2,3,3,3) can be evaluated
(a) inside the quotient, by the twist-factor cup product and the Poincare
pairing, or (b) upstairs on C^6, by restricting equivariant twist factors to
the origin and taking a residue against the equivariant Euler class.  Both
must give the same exact rational.  Run:

    python3 demos/03_two_path_three_point.py
"""

from fractions import Fraction

from crring import (
    BasisElement,
    CRClass,
    ChenRuanRing,
    QuotientDatum,
    collapse,
    equivariant_euler_origin,
    equivariant_twist_restriction,
    format_rational,
    monomial_mul,
    triple_localized,
    validate_datum,
)

vd = validate_datum(QuotientDatum((1, 2, 2, 3, 3, 3)))
third = vd.label(Fraction(1, 3))

# Path (a): cup then pair.
ring = ChenRuanRing(vd)
one_third = CRClass.single(BasisElement(third, 0))
product = ring.cup(one_third, one_third)
direct = ring.pairing(product, one_third)
print(f"direct path:    1_({third}) * 1_({third}) = {product}")
print(f"                paired against 1_({third}): {format_rational(direct)}")

# Path (b): the twist factor of the sector restricts to the origin as
# (u)^(1/3) (2u)^(2/3) (2u)^(2/3); its cube has integer exponents and
# collapses to an honest Laurent term.
restriction = equivariant_twist_restriction(vd, third)
print(f"\nequivariant restriction factors (coordinate -> exponent): "
      f"{{{', '.join(f'{j}: {format_rational(e)}' for j, e in sorted(restriction.factors.items()))}}}")
cube = monomial_mul(monomial_mul(restriction, restriction), restriction)
numerator = collapse(cube, vd.weights)
euler = collapse(equivariant_euler_origin(vd), vd.weights)
print(f"cubed and collapsed: {format_rational(numerator.coeff)} * u^{numerator.power}")
print(f"euler class at the origin: {format_rational(euler.coeff)} * u^{euler.power}")
print(f"quotient term: ({format_rational(Fraction(numerator.coeff, euler.coeff))}) "
      f"* u^{numerator.power - euler.power}")

report = triple_localized(vd, (third, 0), (third, 0), (third, 0))
print(f"residue (coefficient of u^-1): {format_rational(report.value)}")

assert direct == report.value
print(f"\nboth paths agree: {format_rational(direct)}")
