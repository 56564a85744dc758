"""The Chen-Ruan cohomology ring of a validated quotient.

Each twisted sector with fixed set I is a weighted projective subspace whose
cohomology is Q[eta]/eta^|I| for the hyperplane class eta, so the whole ring
has basis {eta^k 1_(t) : t a sector, 0 <= k <= dim(t)} with rational grading
deg(eta^k 1_(t)) = 2*(k + age(t)).

Products follow the twist-factor exponent rule.  For sectors s, t with
h = s*t, the interacting coordinates are

    T = {j : theta_s(j) + theta_t(j) = theta_h(j) + 1},

and eta^k1 1_(s) * eta^k2 1_(t) = (prod_{j in T} w_j) eta^{k1+k2+|T|} 1_(h),
truncated to zero past the dimension of the target sector (and zero outright
when the fixed sets of s and t are disjoint).  Coordinates of T that h fixes
are Thom pushforward directions; the remaining ones span the obstruction
bundle, whose rank on each line is independently confirmed by the index
count in ``obstruction_rank_oracle``.

The Poincare pairing couples eta^k 1_(t) with eta^(dim-k) 1_(t^{-1}) and has
value 1/(|A| * prod_{j in I(t)} w_j), the orbifold integral of the top eta
power over the sector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import DatumFormatError, DomainError, EmptySector
from .exact import format_rational, parse_rational
from .quotient import SectorLabel, ValidatedDatum, label_from_doc, label_to_doc


@dataclass(frozen=True)
class BasisElement:
    """eta^k on the sector labeled by ``sector``."""

    sector: SectorLabel
    k: int

    def __str__(self) -> str:
        return f"eta^{self.k}*1_({self.sector})"

    def sort_key(self):
        return (self.sector.c, self.sector.finite, self.k)


class CRClass:
    """A finite rational combination of basis elements eta^k 1_(t).

    Zero coefficients are never stored; classes are immutable and support
    addition, subtraction, and scalar multiplication.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[BasisElement, Fraction | int] | None = None):
        cleaned: dict[BasisElement, Fraction] = {}
        for element, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                cleaned[element] = coeff
        self._terms = cleaned

    @classmethod
    def zero(cls) -> "CRClass":
        return cls()

    @classmethod
    def single(cls, element: BasisElement, coeff: Fraction | int = 1) -> "CRClass":
        return cls({element: coeff})

    @property
    def terms(self) -> dict[BasisElement, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[BasisElement, Fraction]]:
        """Terms in the canonical (sector, eta power) order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self) -> Iterator[tuple[BasisElement, Fraction]]:
        return iter(self.items())

    def __add__(self, other: "CRClass") -> "CRClass":
        merged = dict(self._terms)
        for element, coeff in other._terms.items():
            merged[element] = merged.get(element, Fraction(0)) + coeff
        return CRClass(merged)

    def __neg__(self) -> "CRClass":
        return CRClass({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "CRClass") -> "CRClass":
        return self + (-other)

    def __mul__(self, scalar) -> "CRClass":
        return CRClass({e: c * Fraction(scalar) for e, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CRClass):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "CRClass(0)"
        body = " + ".join(f"({format_rational(c)})*{e}" for e, c in self.items())
        return f"CRClass({body})"


@dataclass(frozen=True)
class ObstructionSet:
    """The interacting coordinates T of a sector pair, split into Thom
    pushforward directions (fixed by the product label) and obstruction
    directions (moved by it)."""

    indices: frozenset[int]
    pushforward: frozenset[int]
    obstruction: frozenset[int]


def obstruction_rank_oracle(theta1: Fraction, theta2: Fraction, theta3: Fraction) -> int:
    """Invariant H^1 rank of one normal line over the 3-marked sphere.

    For a line where the three group elements act with phases theta_i, the
    equivariant index of the pushed-forward sheaf is chi = 1 - sum(theta_i)
    (the first Chern class of the pushforward of a constant sheaf vanishes),
    so the invariant H^1 has rank max(-chi, 0): 1 exactly when the phase sum
    is 2.  Raises DomainError when the sum is not an integer, since then the
    three elements cannot compose to the identity on this line.
    """
    total = Fraction(theta1) + Fraction(theta2) + Fraction(theta3)
    if total.denominator != 1:
        raise DomainError(f"phase sum {format_rational(total)} is not an integer")
    return max(total.numerator - 1, 0)


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class RingAxiomReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def first_failure(self) -> AxiomCheck | None:
        return next((c for c in self.checks if not c.passed), None)


@dataclass(frozen=True)
class StructureTable:
    """The complete multiplication data of the ring: ordered basis, degrees,
    dense pairing matrix, and the nonzero products for index pairs i <= j."""

    basis: tuple[BasisElement, ...]
    degrees: tuple[Fraction, ...]
    pairing: tuple[tuple[Fraction, ...], ...]
    products: dict[tuple[int, int], CRClass]


class ChenRuanRing:
    """Cup products, pairings, and structure constants for one datum.

    The ring is attached to the datum's chamber by default; pass ``chamber``
    to build the ring on the other side of the wall (used by the self-test
    on mixed-sign weights).
    """

    def __init__(self, vd: ValidatedDatum, chamber: str | None = None):
        self.vd = vd
        self.chamber = chamber or vd.chamber
        self._sectors = vd.sectors(self.chamber)
        self._basis = tuple(
            BasisElement(info.label, k)
            for info in self._sectors
            for k in range(len(info.fixed_set))
        )
        self._index = {element: i for i, element in enumerate(self._basis)}
        self._pair_data: dict[tuple[SectorLabel, SectorLabel], tuple | None] = {}
        self._ob_cache: dict[tuple[SectorLabel, SectorLabel], ObstructionSet] = {}
        self._sector_pair_value: dict[SectorLabel, Fraction] = {}
        self._table: StructureTable | None = None

    def basis(self) -> tuple[BasisElement, ...]:
        """Basis in sector order, eta power ascending within each sector."""
        return self._basis

    def degree(self, element: BasisElement) -> Fraction:
        """Rational grading 2*(k + age) of a basis element."""
        return 2 * (element.k + self.vd.degree_shift(element.sector))

    def unit(self) -> CRClass:
        return CRClass.single(BasisElement(self.vd.identity(), 0))

    # -- products ------------------------------------------------------------

    def obstruction_set(self, s: SectorLabel, t: SectorLabel) -> ObstructionSet:
        """Coordinates where the phases of s and t overshoot those of s*t."""
        cached = self._ob_cache.get((s, t))
        if cached is None:
            vd = self.vd
            h = vd.compose(s, t)
            theta_s, theta_t, theta_h = vd.thetas(s), vd.thetas(t), vd.thetas(h)
            indices = frozenset(
                j for j in range(vd.n) if theta_s[j] + theta_t[j] == theta_h[j] + 1
            )
            pushforward = frozenset(j for j in indices if theta_h[j] == 0)
            cached = ObstructionSet(indices, pushforward, indices - pushforward)
            self._ob_cache[(s, t)] = cached
        return cached

    def _sector_product(self, s: SectorLabel, t: SectorLabel):
        """Sector-level product data (coeff, target label, target dim, |T|),
        or None when the sector product vanishes; cached per ordered pair."""
        key = (s, t)
        if key in self._pair_data:
            return self._pair_data[key]
        vd = self.vd
        data = None
        if vd.fixed_set(s) & vd.fixed_set(t):
            h = vd.compose(s, t)
            try:
                target = vd.sector_info(h, self.chamber)
            except EmptySector:
                target = None
            if target is not None:
                interacting = self.obstruction_set(s, t).indices
                coeff = Fraction(1)
                for j in interacting:
                    coeff *= vd.weights[j]
                data = (coeff, h, target.dim, len(interacting))
        self._pair_data[key] = data
        return data

    def cup_basis(self, a: BasisElement, b: BasisElement) -> tuple[Fraction, BasisElement] | None:
        """Product of two basis elements: a scaled basis element, or None for 0."""
        data = self._sector_product(a.sector, b.sector)
        if data is None:
            return None
        coeff, h, dim, shift = data
        k = a.k + b.k + shift
        if k > dim:
            return None
        return coeff, BasisElement(h, k)

    def cup(self, a: CRClass, b: CRClass) -> CRClass:
        """Bilinear extension of ``cup_basis``."""
        out: dict[BasisElement, Fraction] = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                product = self.cup_basis(ea, eb)
                if product is None:
                    continue
                coeff, element = product
                out[element] = out.get(element, Fraction(0)) + ca * cb * coeff
        return CRClass(out)

    # -- pairing ---------------------------------------------------------------

    def pairing_basis(self, a: BasisElement, b: BasisElement) -> Fraction:
        vd = self.vd
        if b.sector != vd.inverse(a.sector):
            return Fraction(0)
        fixed = vd.fixed_set(a.sector)
        if a.k + b.k != len(fixed) - 1:
            return Fraction(0)
        value = self._sector_pair_value.get(a.sector)
        if value is None:
            denominator = vd.finite_order
            for j in fixed:
                denominator *= vd.weights[j]
            value = Fraction(1, denominator)
            self._sector_pair_value[a.sector] = value
        return value

    def pairing(self, a: CRClass, b: CRClass) -> Fraction:
        value = Fraction(0)
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                value += ca * cb * self.pairing_basis(ea, eb)
        return value

    def triple_direct(self, a: CRClass, b: CRClass, c: CRClass) -> Fraction:
        """3-point function through the ring: <cup(a, b), c>."""
        return self.pairing(self.cup(a, b), c)

    # -- tabulation ------------------------------------------------------------

    def _indexed_products(self) -> list[list[tuple[Fraction, int] | None]]:
        size = len(self._basis)
        table: list[list[tuple[Fraction, int] | None]] = [[None] * size for _ in range(size)]
        for i, a in enumerate(self._basis):
            for j in range(i, size):
                product = self.cup_basis(a, self._basis[j])
                if product is not None:
                    entry = (product[0], self._index[product[1]])
                    table[i][j] = entry
                    table[j][i] = entry
        return table

    def structure_constants(self) -> StructureTable:
        """Deterministic full tables; products are stored sparsely for i <= j."""
        if self._table is None:
            basis = self._basis
            degrees = tuple(self.degree(e) for e in basis)
            pairing = tuple(
                tuple(self.pairing_basis(a, b) for b in basis) for a in basis
            )
            products: dict[tuple[int, int], CRClass] = {}
            for i, a in enumerate(basis):
                for j in range(i, len(basis)):
                    product = self.cup_basis(a, basis[j])
                    if product is not None:
                        products[(i, j)] = CRClass.single(product[1], product[0])
            self._table = StructureTable(basis, degrees, pairing, products)
        return self._table

    # -- axioms ------------------------------------------------------------------

    def verify_ring_axioms(self) -> RingAxiomReport:
        """Check unit, commutativity, associativity, degree additivity,
        pairing nondegeneracy, and the Frobenius identity over the whole
        basis, reporting the first counterexample of each failing check.

        The triple loops compare numerator/denominator products of plain
        integers: exact, but without the gcd reductions a Fraction multiply
        would redo millions of times.
        """
        basis = self._basis
        size = len(basis)
        products = self._indexed_products()
        # integer views of the product table: target index (-1 for zero
        # product) and coefficient numerator/denominator
        pidx = [[-1] * size for _ in range(size)]
        pnum = [[0] * size for _ in range(size)]
        pden = [[1] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                entry = products[i][j]
                if entry is not None:
                    pidx[i][j] = entry[1]
                    pnum[i][j] = entry[0].numerator
                    pden[i][j] = entry[0].denominator
        # pairing as sparse rows of (numerator, denominator)
        pair_rows: list[dict[int, tuple[int, int]]] = []
        for a in basis:
            row = {}
            for j, b in enumerate(basis):
                value = self.pairing_basis(a, b)
                if value != 0:
                    row[j] = (value.numerator, value.denominator)
            pair_rows.append(row)
        checks: list[AxiomCheck] = []

        identity_element = BasisElement(self.vd.identity(), 0)
        unit_bad = None
        if identity_element in self._index:
            e = self._index[identity_element]
            for j in range(size):
                if products[e][j] != (Fraction(1), j):
                    unit_bad = f"1 * {basis[j]} = {products[e][j]}"
                    break
        elif size:
            unit_bad = "no identity sector in this chamber"
        checks.append(AxiomCheck("unit", unit_bad is None, unit_bad))

        comm_bad = None
        # products[i][j] was filled from i <= j only, so re-derive the
        # transposed products independently.
        for i in range(size):
            for j in range(i + 1, size):
                direct = self.cup_basis(basis[j], basis[i])
                flipped = None if direct is None else (direct[0], self._index[direct[1]])
                if flipped != products[i][j]:
                    comm_bad = f"{basis[i]} * {basis[j]} != {basis[j]} * {basis[i]}"
                    break
            if comm_bad:
                break
        checks.append(AxiomCheck("commutativity", comm_bad is None, comm_bad))

        degrees = [self.degree(e) for e in basis]
        degree_bad = None
        for i in range(size):
            for j in range(size):
                target = pidx[i][j]
                if target >= 0 and degrees[i] + degrees[j] != degrees[target]:
                    degree_bad = f"deg({basis[i]}) + deg({basis[j]}) != deg({basis[target]})"
                    break
            if degree_bad:
                break
        checks.append(AxiomCheck("degree_additivity", degree_bad is None, degree_bad))

        assoc_bad = None
        frob_bad = None
        for i in range(size):
            pidx_i, pnum_i, pden_i = pidx[i], pnum[i], pden[i]
            pair_i = pair_rows[i]
            for j in range(size):
                ij = pidx_i[j]
                pidx_j, pnum_j, pden_j = pidx[j], pnum[j], pden[j]
                if ij >= 0:
                    a_n, a_d = pnum_i[j], pden_i[j]
                    pidx_ij, pnum_ij, pden_ij = pidx[ij], pnum[ij], pden[ij]
                    pair_ij = pair_rows[ij]
                for k in range(size):
                    jk = pidx_j[k]
                    lhs = pidx_ij[k] if ij >= 0 else -1
                    rhs = pidx_i[jk] if jk >= 0 else -1
                    if lhs != rhs or (
                        lhs >= 0
                        and a_n * pnum_ij[k] * pden_j[k] * pden_i[jk]
                        != pnum_j[k] * pnum_i[jk] * a_d * pden_ij[k]
                    ):
                        if assoc_bad is None:
                            assoc_bad = (
                                f"({basis[i]} * {basis[j]}) * {basis[k]} != "
                                f"{basis[i]} * ({basis[j]} * {basis[k]})"
                            )
                    left = pair_ij.get(k) if ij >= 0 else None
                    right = pair_i.get(jk) if jk >= 0 else None
                    if (
                        (left is None) != (right is None)
                        or left is not None
                        and a_n * left[0] * pden_j[k] * right[1]
                        != pnum_j[k] * right[0] * a_d * left[1]
                    ):
                        if frob_bad is None:
                            frob_bad = (
                                f"<{basis[i]} * {basis[j]}, {basis[k]}> != "
                                f"<{basis[i]}, {basis[j]} * {basis[k]}>"
                            )
                if assoc_bad and frob_bad:
                    break
            if assoc_bad and frob_bad:
                break
        checks.append(AxiomCheck("associativity", assoc_bad is None, assoc_bad))
        checks.append(AxiomCheck("frobenius", frob_bad is None, frob_bad))

        rank = _matrix_rank(
            [{j: Fraction(n, d) for j, (n, d) in row.items()} for row in pair_rows]
        )
        nondegenerate = rank == size
        checks.append(
            AxiomCheck(
                "pairing_nondegenerate",
                nondegenerate,
                None if nondegenerate else f"pairing rank {rank} < {size}",
            )
        )
        return RingAxiomReport(tuple(checks))


def _matrix_rank(rows: list[dict[int, Fraction]]) -> int:
    """Exact rank by sparse Gaussian elimination over the rationals."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for sparse in rows:
        row = dict(sparse)
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                pivots[col] = row
                break
            factor = row[col] / pivot[col]
            for c, v in pivot.items():
                updated = row.get(c, Fraction(0)) - factor * v
                if updated == 0:
                    row.pop(c, None)
                else:
                    row[c] = updated
    return len(pivots)


# -- wire format -------------------------------------------------------------


def element_to_doc(element: BasisElement) -> dict:
    return {"sector": label_to_doc(element.sector), "eta_power": element.k}


def element_from_doc(doc: object, vd: ValidatedDatum | None = None) -> BasisElement:
    if not isinstance(doc, dict) or "sector" not in doc or "eta_power" not in doc:
        raise DatumFormatError("basis element must have 'sector' and 'eta_power'")
    return BasisElement(label_from_doc(doc["sector"], vd), int(doc["eta_power"]))


def cr_class_to_doc(value: CRClass) -> list[dict]:
    return [
        {
            "sector": label_to_doc(element.sector),
            "eta_power": element.k,
            "coeff": format_rational(coeff),
        }
        for element, coeff in value.items()
    ]


def cr_class_from_doc(doc: object, vd: ValidatedDatum | None = None) -> CRClass:
    if not isinstance(doc, list):
        raise DatumFormatError("a class document must be a list of term records")
    terms: dict[BasisElement, Fraction] = {}
    for record in doc:
        element = element_from_doc(record, vd)
        terms[element] = terms.get(element, Fraction(0)) + parse_rational(record["coeff"])
    return CRClass(terms)


def table_to_doc(table: StructureTable) -> dict:
    return {
        "basis": [element_to_doc(e) for e in table.basis],
        "degrees": [format_rational(d) for d in table.degrees],
        "pairing": [[format_rational(v) for v in row] for row in table.pairing],
        "products": [
            {"i": i, "j": j, "terms": cr_class_to_doc(value)}
            for (i, j), value in sorted(table.products.items())
        ],
    }


def table_from_doc(doc: object, vd: ValidatedDatum | None = None) -> StructureTable:
    if not isinstance(doc, dict):
        raise DatumFormatError("a table document must be a mapping")
    basis = tuple(element_from_doc(e, vd) for e in doc["basis"])
    degrees = tuple(parse_rational(d) for d in doc["degrees"])
    pairing = tuple(tuple(parse_rational(v) for v in row) for row in doc["pairing"])
    products = {
        (record["i"], record["j"]): cr_class_from_doc(record["terms"], vd)
        for record in doc["products"]
    }
    return StructureTable(basis, degrees, pairing, products)
