"""Diagonal abelian quotient presentations C^n // (S^1 x A) and their
twisted sectors.

A ``QuotientDatum`` records the nonzero circle weights w_j, an optional
finite abelian part A (a product of cyclic factors, each acting by roots of
unity with integer phase numerators), and a chamber sign.  The moment map
mu = 1/2 * sum_j w_j |z_j|^2 of the circle action has its only wall at 0;
the quotient is taken at a regular level on the positive or negative side.
``validate_datum`` checks that every weight is nonzero and that the combined
action is effective, returning the ``ValidatedDatum`` that every other
module consumes.

Group elements are ``SectorLabel``s: a rational circle phase c in [0, 1)
plus one component per finite factor.  An element acts on coordinate j with
phase

    theta_j = frac(c * w_j + sum_k a_k * phases_k[j] / order_k)  in [0, 1),

its fixed set is {j : theta_j = 0}, and a label names a twisted sector of
the quotient exactly when the fixed coordinate subspace is nonempty and
meets the chosen moment level (some fixed coordinate with the chamber's
sign).  The degree shift (age) of a sector is the sum of the theta_j over
the unfixed coordinates.  Coordinates are 0-indexed throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable

from .errors import DatumFormatError, EmptySector, IneffectiveAction, ZeroWeight
from .exact import format_rational, frac_part, parse_rational

CHAMBERS = ("positive", "negative")


@dataclass(frozen=True)
class FiniteCyclicFactor:
    """A cyclic factor Z/order acting diagonally; generator phase on
    coordinate j is phases[j]/order in Q/Z."""

    order: int
    phases: tuple[int, ...]

    def __post_init__(self):
        if self.order < 2:
            raise ValueError(f"cyclic factor order must be >= 2, got {self.order}")
        object.__setattr__(self, "phases", tuple(p % self.order for p in self.phases))


@dataclass(frozen=True)
class QuotientDatum:
    """An orbifold presentation: weights, finite phase factors, chamber."""

    weights: tuple[int, ...]
    finite: tuple[FiniteCyclicFactor, ...] = ()
    chamber: str = "positive"

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "finite", tuple(self.finite))
        if len(self.weights) < 1:
            raise ValueError("a quotient datum needs at least one coordinate")
        if self.chamber not in CHAMBERS:
            raise ValueError(f"chamber must be one of {CHAMBERS}, got {self.chamber!r}")
        for factor in self.finite:
            if len(factor.phases) != len(self.weights):
                raise ValueError(
                    f"finite factor has {len(factor.phases)} phases for "
                    f"{len(self.weights)} coordinates"
                )

    @property
    def n(self) -> int:
        return len(self.weights)


@dataclass(frozen=True, order=True)
class SectorLabel:
    """A group element: circle phase c in [0, 1) plus finite components.

    Labels are normalized (c reduced to [0, 1), components reduced modulo
    their orders); build them through ``ValidatedDatum.label`` rather than
    directly when in doubt.
    """

    c: Fraction
    finite: tuple[int, ...] = ()

    def __str__(self) -> str:
        text = f"c={format_rational(self.c)}"
        if self.finite:
            text += ",a=" + ":".join(str(a) for a in self.finite)
        return text


@dataclass(frozen=True)
class SectorInfo:
    """A twisted sector: its label, fixed coordinates, rotation phases,
    degree shift, and complex dimension |I| - 1."""

    label: SectorLabel
    fixed_set: frozenset[int]
    thetas: tuple[Fraction, ...]
    shift: Fraction
    dim: int


class ValidatedDatum:
    """A checked quotient presentation with cached sector data.

    Immutable after construction; all methods are pure.  Obtain instances
    via ``validate_datum``.
    """

    def __init__(self, datum: QuotientDatum):
        self._datum = datum
        self.weights = datum.weights
        self.n = datum.n
        self.finite = datum.finite
        self.chamber = datum.chamber
        self.finite_order = prod((f.order for f in self.finite), start=1)
        self._thetas: dict[SectorLabel, tuple[Fraction, ...]] = {}
        self._fixed: dict[SectorLabel, frozenset[int]] = {}
        self._inverses: dict[SectorLabel, SectorLabel] = {}
        self._composites: dict[tuple[SectorLabel, SectorLabel], SectorLabel] = {}
        self._chamber_ok: dict[tuple[SectorLabel, str], bool] = {}
        self._infos: dict[tuple[SectorLabel, str], SectorInfo] = {}
        self._sectors: dict[str, tuple[SectorInfo, ...]] = {}
        self._identity = SectorLabel(Fraction(0), (0,) * len(self.finite))

    @property
    def datum(self) -> QuotientDatum:
        return self._datum

    # -- group structure ---------------------------------------------------

    def identity(self) -> SectorLabel:
        return self._identity

    def label(self, c: Fraction | int | str, finite: Iterable[int] = ()) -> SectorLabel:
        """Build a normalized label: c mod 1, components mod their orders."""
        if isinstance(c, str):
            c = parse_rational(c)
        components = tuple(finite)
        if not components:
            components = (0,) * len(self.finite)
        if len(components) != len(self.finite):
            raise ValueError(
                f"label has {len(components)} finite components, datum has {len(self.finite)}"
            )
        components = tuple(a % f.order for a, f in zip(components, self.finite))
        return SectorLabel(frac_part(Fraction(c)), components)

    def compose(self, s: SectorLabel, t: SectorLabel) -> SectorLabel:
        cached = self._composites.get((s, t))
        if cached is None:
            cached = self.label(s.c + t.c, tuple(a + b for a, b in zip(s.finite, t.finite)))
            self._composites[(s, t)] = cached
        return cached

    def inverse(self, t: SectorLabel) -> SectorLabel:
        cached = self._inverses.get(t)
        if cached is None:
            cached = self.label(-t.c, tuple(-a for a in t.finite))
            self._inverses[t] = cached
        return cached

    # -- per-element geometry ----------------------------------------------

    def thetas(self, t: SectorLabel) -> tuple[Fraction, ...]:
        """Rotation phases (theta_0, ..., theta_{n-1}) of t, each in [0, 1)."""
        cached = self._thetas.get(t)
        if cached is None:
            cached = tuple(self._theta_raw(t, j) for j in range(self.n))
            self._thetas[t] = cached
        return cached

    def _theta_raw(self, t: SectorLabel, j: int) -> Fraction:
        phase = t.c * self.weights[j]
        for a, factor in zip(t.finite, self.finite):
            phase += Fraction(a * factor.phases[j], factor.order)
        return frac_part(phase)

    def theta(self, t: SectorLabel, j: int) -> Fraction:
        return self.thetas(t)[j]

    def fixed_set(self, t: SectorLabel) -> frozenset[int]:
        cached = self._fixed.get(t)
        if cached is None:
            cached = frozenset(j for j, th in enumerate(self.thetas(t)) if th == 0)
            self._fixed[t] = cached
        return cached

    def degree_shift(self, t: SectorLabel) -> Fraction:
        """Age of t: the sum of theta_j over coordinates t moves."""
        return sum((th for th in self.thetas(t) if th != 0), Fraction(0))

    # -- sector enumeration --------------------------------------------------

    def _meets_level(self, fixed: frozenset[int], chamber: str) -> bool:
        if chamber == "positive":
            return any(self.weights[j] > 0 for j in fixed)
        return any(self.weights[j] < 0 for j in fixed)

    def _info(self, t: SectorLabel, fixed: frozenset[int]) -> SectorInfo:
        thetas = self.thetas(t)
        shift = sum((thetas[j] for j in range(self.n) if j not in fixed), Fraction(0))
        return SectorInfo(t, fixed, thetas, shift, len(fixed) - 1)

    def _candidate_labels(self) -> set[SectorLabel]:
        # Any element fixing coordinate j solves c*w_j + phi_j(a) in Z, so
        # exhausting m in [0, |w_j|) below covers every possible sector.
        labels = {self.identity()}
        for components in itertools.product(*(range(f.order) for f in self.finite)):
            for j, w in enumerate(self.weights):
                phi = sum(
                    (Fraction(a * f.phases[j], f.order) for a, f in zip(components, self.finite)),
                    Fraction(0),
                )
                for m in range(abs(w)):
                    labels.add(SectorLabel(frac_part((m - phi) / w), components))
        return labels

    def sectors(self, chamber: str | None = None) -> tuple[SectorInfo, ...]:
        """All twisted sectors in the given chamber (default: the datum's).

        The identity sector comes first when present; the rest are sorted by
        (c, finite components).  The list is duplicate-free and closed under
        the label inverse.
        """
        chamber = chamber or self.chamber
        if chamber not in CHAMBERS:
            raise ValueError(f"chamber must be one of {CHAMBERS}, got {chamber!r}")
        cached = self._sectors.get(chamber)
        if cached is None:
            infos = []
            for t in self._candidate_labels():
                fixed = self.fixed_set(t)
                if fixed and self._meets_level(fixed, chamber):
                    infos.append(self._info(t, fixed))
            identity = self.identity()
            infos.sort(key=lambda s: (s.label != identity, s.label.c, s.label.finite))
            cached = tuple(infos)
            self._sectors[chamber] = cached
        return cached

    def is_sector(self, t: SectorLabel, chamber: str | None = None) -> bool:
        chamber = chamber or self.chamber
        cached = self._chamber_ok.get((t, chamber))
        if cached is None:
            fixed = self.fixed_set(t)
            cached = bool(fixed) and self._meets_level(fixed, chamber)
            self._chamber_ok[(t, chamber)] = cached
        return cached

    def sector_info(self, t: SectorLabel, chamber: str | None = None) -> SectorInfo:
        """Full sector record for t; EmptySector if t labels no sector here."""
        chamber = chamber or self.chamber
        cached = self._infos.get((t, chamber))
        if cached is None:
            fixed = self.fixed_set(t)
            if not fixed:
                raise EmptySector(f"{t} fixes no coordinate")
            if not self._meets_level(fixed, chamber):
                raise EmptySector(
                    f"{t} has no fixed coordinate on the {chamber} side of the wall"
                )
            cached = self._info(t, fixed)
            self._infos[(t, chamber)] = cached
        return cached


def validate_datum(datum: QuotientDatum) -> ValidatedDatum:
    """Check weights and effectiveness, returning the validated datum.

    Raises ``ZeroWeight`` if some w_j = 0 (the wall fixed locus would be
    noncompact) and ``IneffectiveAction`` if any nontrivial group element
    acts trivially on all coordinates (the orbifold integration convention
    would be ambiguous, so such data are rejected rather than rescaled).
    """
    for j, w in enumerate(datum.weights):
        if w == 0:
            raise ZeroWeight(f"coordinate {j} has weight 0")
    vd = ValidatedDatum(datum)
    identity = vd.identity()
    for components in itertools.product(*(range(f.order) for f in datum.finite)):
        # Solutions with full fixed set must in particular fix coordinate 0.
        phi0 = sum(
            (Fraction(a * f.phases[0], f.order) for a, f in zip(components, datum.finite)),
            Fraction(0),
        )
        for m in range(abs(datum.weights[0])):
            t = SectorLabel(frac_part((m - phi0) / datum.weights[0]), components)
            if t == identity:
                continue
            if all(th == 0 for th in vd.thetas(t)):
                raise IneffectiveAction(f"{t} acts trivially on every coordinate")
    return vd


# -- wire format -----------------------------------------------------------


def datum_to_doc(datum: QuotientDatum) -> dict:
    """Serialize a datum to its document form (n, weights, finite, chamber)."""
    return {
        "n": datum.n,
        "weights": list(datum.weights),
        "finite": [
            {"order": f.order, "phases": list(f.phases)} for f in datum.finite
        ],
        "chamber": datum.chamber,
    }


def datum_from_doc(doc: object) -> QuotientDatum:
    """Parse a datum document, checking the shape of every field."""
    if not isinstance(doc, dict):
        raise DatumFormatError("datum document must be a mapping")
    missing = {"n", "weights", "finite", "chamber"} - set(doc)
    if missing:
        raise DatumFormatError(f"datum document lacks fields: {sorted(missing)}")
    weights = doc["weights"]
    if not isinstance(weights, list) or not all(isinstance(w, int) for w in weights):
        raise DatumFormatError("weights must be a list of integers")
    if doc["n"] != len(weights):
        raise DatumFormatError(f"n={doc['n']} does not match {len(weights)} weights")
    finite = []
    if not isinstance(doc["finite"], list):
        raise DatumFormatError("finite must be a list of {order, phases} records")
    for record in doc["finite"]:
        if (
            not isinstance(record, dict)
            or not isinstance(record.get("order"), int)
            or not isinstance(record.get("phases"), list)
            or not all(isinstance(p, int) for p in record["phases"])
        ):
            raise DatumFormatError("finite factors must be {order: int, phases: [int]}")
        try:
            finite.append(FiniteCyclicFactor(record["order"], tuple(record["phases"])))
        except ValueError as exc:
            raise DatumFormatError(str(exc)) from exc
    if doc["chamber"] not in CHAMBERS:
        raise DatumFormatError(f"chamber must be one of {CHAMBERS}")
    try:
        return QuotientDatum(tuple(weights), tuple(finite), doc["chamber"])
    except ValueError as exc:
        raise DatumFormatError(str(exc)) from exc


def label_to_doc(t: SectorLabel) -> dict:
    return {"c": format_rational(t.c), "finite": list(t.finite)}


def label_from_doc(doc: object, vd: ValidatedDatum | None = None) -> SectorLabel:
    """Parse a sector label document; normalizes against vd when given."""
    if not isinstance(doc, dict) or "c" not in doc:
        raise DatumFormatError("sector label must be a mapping with a 'c' field")
    c = parse_rational(doc["c"])
    finite = tuple(doc.get("finite", ()))
    if not all(isinstance(a, int) for a in finite):
        raise DatumFormatError("finite components must be integers")
    if vd is not None:
        return vd.label(c, finite)
    return SectorLabel(frac_part(c), finite)
