"""Exact Chen-Ruan orbifold cohomology of diagonal abelian quotients.

The package computes the Chen-Ruan cohomology ring of quotients
C^n // (S^1 x A) — weighted projective spaces and finite-abelian quotients
thereof — entirely in exact rational arithmetic.  Every 3-point function can
be evaluated along two independent paths, the twist-factor cup product
(``ChenRuanRing.triple_direct``) and the wall-crossing residue
(``triple_localized``), which must agree; ``run_selftest`` checks that
agreement together with the ring axioms on any datum.
"""

from .cli import PhaseResult, SelfTestReport, run_selftest
from .errors import (
    DatumFormatError,
    DomainError,
    EmptySector,
    IneffectiveAction,
    NonComposable,
    NonIntegralExponent,
    ZeroWeight,
)
from .exact import (
    FactoredMonomial,
    LaurentPoly,
    LaurentTerm,
    Rational,
    collapse,
    format_rational,
    frac_part,
    monomial_mul,
    parse_rational,
    residue,
)
from .localization import (
    EquivariantClass,
    WallCrossingReport,
    equivariant_euler_origin,
    equivariant_twist_restriction,
    kirwan,
    triple_localized,
    wall_crossing_delta,
)
from .quotient import (
    FiniteCyclicFactor,
    QuotientDatum,
    SectorInfo,
    SectorLabel,
    ValidatedDatum,
    datum_from_doc,
    datum_to_doc,
    label_from_doc,
    label_to_doc,
    validate_datum,
)
from .ring import (
    AxiomCheck,
    BasisElement,
    CRClass,
    ChenRuanRing,
    ObstructionSet,
    RingAxiomReport,
    StructureTable,
    cr_class_from_doc,
    cr_class_to_doc,
    obstruction_rank_oracle,
    table_from_doc,
    table_to_doc,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomCheck",
    "BasisElement",
    "CRClass",
    "ChenRuanRing",
    "DatumFormatError",
    "DomainError",
    "EmptySector",
    "EquivariantClass",
    "FactoredMonomial",
    "FiniteCyclicFactor",
    "IneffectiveAction",
    "LaurentPoly",
    "LaurentTerm",
    "NonComposable",
    "NonIntegralExponent",
    "ObstructionSet",
    "PhaseResult",
    "QuotientDatum",
    "Rational",
    "RingAxiomReport",
    "SectorInfo",
    "SectorLabel",
    "SelfTestReport",
    "StructureTable",
    "ValidatedDatum",
    "WallCrossingReport",
    "ZeroWeight",
    "collapse",
    "cr_class_from_doc",
    "cr_class_to_doc",
    "datum_from_doc",
    "datum_to_doc",
    "equivariant_euler_origin",
    "equivariant_twist_restriction",
    "format_rational",
    "frac_part",
    "kirwan",
    "label_from_doc",
    "label_to_doc",
    "monomial_mul",
    "obstruction_rank_oracle",
    "parse_rational",
    "residue",
    "run_selftest",
    "table_from_doc",
    "table_to_doc",
    "triple_localized",
    "validate_datum",
    "wall_crossing_delta",
]
