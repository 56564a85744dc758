"""Equivariant side of the computation: lifted classes on C^n, their
restriction to the origin, and wall-crossing residues for 3-point functions.

For a linear circle action with nonzero weights the moment map has a single
wall at 0 whose fixed locus is the origin, so every wall contribution is one
residue.  A 3-point function of lifted classes u^{k_i} on sectors t_i with
t_1 t_2 t_3 = 1 collapses to the Laurent term

    u^{k1+k2+k3} * prod_i restriction(t_i)  /  (|A| * prod_j (w_j u)),

where restriction(t) = prod_{j moved by t} (w_j u)^{theta_t(j)} is the
equivariant twist factor at the origin and the denominator is the
equivariant Euler class of C^n at the orbifold point [0/A].  The
per-coordinate exponents sum to integers whenever the labels compose to the
identity, so the collapse is always legal; the reported value is the
coefficient of u^{-1} of the collapsed term, and ``degree_check`` records
the collapsed power so a vanishing value can be told apart from a
degree-balanced cancellation.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping

from .errors import NonComposable
from .exact import (
    FactoredMonomial,
    LaurentPoly,
    collapse,
    format_rational,
    monomial_mul,
    residue,
)
from .quotient import CHAMBERS, SectorLabel, ValidatedDatum, label_to_doc
from .ring import BasisElement, CRClass

SectorPower = tuple[SectorLabel, int]


@dataclass(frozen=True)
class EquivariantClass:
    """A polynomial class sum_k c_k u^k lifted to the sector of ``sector``."""

    sector: SectorLabel
    u_poly: LaurentPoly

    def __post_init__(self):
        if any(power < 0 for power in self.u_poly.terms):
            raise ValueError("equivariant classes are polynomial in u (powers >= 0)")


@dataclass(frozen=True)
class WallCrossingReport:
    """One localized 3-point evaluation: its exact value, the collapsed
    u-power, and which chambers contain each sector of the triple."""

    triple: tuple[SectorPower, SectorPower, SectorPower]
    value: Fraction
    degree_check: int
    side_existence: Mapping[str, tuple[bool, bool, bool]]
    note: str | None = None


def kirwan(vd: ValidatedDatum, e: EquivariantClass) -> CRClass:
    """Descend a lifted class to the quotient: u^k maps to eta^k 1_(t).

    Powers beyond the sector dimension truncate to zero.  Raises
    ``EmptySector`` when the sector itself is absent from the datum's
    chamber, which is a different statement than truncation to zero.
    """
    info = vd.sector_info(e.sector)
    terms = {
        BasisElement(e.sector, power): coeff
        for power, coeff in e.u_poly.terms.items()
        if power <= info.dim
    }
    return CRClass(terms)


_restrictions: "weakref.WeakKeyDictionary[ValidatedDatum, dict]" = weakref.WeakKeyDictionary()


def equivariant_twist_restriction(vd: ValidatedDatum, t: SectorLabel) -> FactoredMonomial:
    """Restriction of the equivariant twist factor of t to the origin:
    the factored monomial prod_j (w_j u)^{theta_t(j)} over moved coordinates."""
    per_datum = _restrictions.setdefault(vd, {})
    cached = per_datum.get(t)
    if cached is None:
        thetas = vd.thetas(t)
        cached = FactoredMonomial(
            Fraction(1), Fraction(0), {j: th for j, th in enumerate(thetas) if th != 0}
        )
        per_datum[t] = cached
    return cached


def equivariant_euler_origin(vd: ValidatedDatum) -> FactoredMonomial:
    """Equivariant Euler class of C^n at the orbifold point [0/A]:
    |A| * prod_j (w_j u)."""
    return FactoredMonomial(
        Fraction(vd.finite_order), Fraction(0), {j: Fraction(1) for j in range(vd.n)}
    )


def _side_existence(vd: ValidatedDatum, triple) -> dict[str, tuple[bool, bool, bool]]:
    return {
        chamber: tuple(vd.is_sector(t, chamber) for t, _ in triple)
        for chamber in CHAMBERS
    }


_collapsed_triples: "weakref.WeakKeyDictionary[ValidatedDatum, dict]" = weakref.WeakKeyDictionary()
_collapsed_euler: "weakref.WeakKeyDictionary[ValidatedDatum, object]" = weakref.WeakKeyDictionary()


def _collapsed_euler_origin(vd: ValidatedDatum):
    cached = _collapsed_euler.get(vd)
    if cached is None:
        cached = collapse(equivariant_euler_origin(vd), vd.weights)
        _collapsed_euler[vd] = cached
    return cached


def _collapsed_restriction_product(vd: ValidatedDatum, labels: tuple[SectorLabel, ...]):
    """Collapse of prod_i restriction(t_i), memoized per label triple."""
    per_datum = _collapsed_triples.setdefault(vd, {})
    cached = per_datum.get(labels)
    if cached is None:
        monomial = FactoredMonomial.one()
        for t in labels:
            monomial = monomial_mul(monomial, equivariant_twist_restriction(vd, t))
        cached = collapse(monomial, vd.weights)
        per_datum[labels] = cached
    return cached


def triple_localized(
    vd: ValidatedDatum, p1: SectorPower, p2: SectorPower, p3: SectorPower
) -> WallCrossingReport:
    """Localized 3-point function of eta^{k_i} lifts on sectors t_i.

    Requires the labels to compose to the identity; collapses the twist
    factors against the Euler class of the origin and extracts the u^{-1}
    coefficient.
    """
    triple = (p1, p2, p3)
    labels = (p1[0], p2[0], p3[0])
    if vd.compose(labels[0], vd.compose(labels[1], labels[2])) != vd.identity():
        raise NonComposable(f"{labels[0]}, {labels[1]}, {labels[2]} do not multiply to 1")
    restricted = _collapsed_restriction_product(vd, labels)
    euler = _collapsed_euler_origin(vd)
    term_coeff = restricted.coeff / euler.coeff
    term_power = restricted.power + p1[1] + p2[1] + p3[1] - euler.power
    value = residue(LaurentPoly({term_power: term_coeff}))
    return WallCrossingReport(
        triple=triple,
        value=value,
        degree_check=term_power,
        side_existence=_side_existence(vd, triple),
    )


def wall_crossing_delta(
    vd: ValidatedDatum, p1: SectorPower, p2: SectorPower, p3: SectorPower
) -> WallCrossingReport:
    """Change of the 3-point function across the wall at 0.

    Numerically identical to ``triple_localized``; additionally notes when
    one chamber is empty, in which case the delta *is* the other side's
    3-point function.
    """
    report = triple_localized(vd, p1, p2, p3)
    note = None
    if not vd.sectors("negative"):
        note = "negative chamber is empty: the delta equals the positive-side 3-point function"
    elif not vd.sectors("positive"):
        note = "positive chamber is empty: the delta equals the negative-side 3-point function"
    return replace(report, note=note)


# -- wire format -------------------------------------------------------------


def report_to_doc(report: WallCrossingReport) -> dict:
    doc = {
        "triple": [
            {"sector": label_to_doc(t), "eta_power": k} for t, k in report.triple
        ],
        "value": format_rational(report.value),
        "degree_check": report.degree_check,
        "side_existence": {
            chamber: list(flags) for chamber, flags in report.side_existence.items()
        },
    }
    if report.note is not None:
        doc["note"] = report.note
    return doc
