"""Command line front end and built-in verification suites.

Commands read a single datum file (a JSON document with fields n, weights,
finite, chamber) and write exact results to stdout or ``--out``.  All numbers
are rendered as exact "p/q" strings.  The structured (JSON) format is the
source of truth; ``--format tsv`` is for spreadsheets.

Exit codes: 0 on success, 1 on domain errors (the error class name goes to
stderr) or a failed self-test, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import DatumFormatError, DomainError
from .exact import format_rational, parse_rational
from .localization import report_to_doc, triple_localized, wall_crossing_delta
from .quotient import (
    CHAMBERS,
    SectorInfo,
    ValidatedDatum,
    datum_from_doc,
    label_to_doc,
    validate_datum,
)
from .ring import (
    BasisElement,
    ChenRuanRing,
    CRClass,
    cr_class_to_doc,
    obstruction_rank_oracle,
    table_to_doc,
)

# -- self-test ----------------------------------------------------------------


@dataclass(frozen=True)
class PhaseResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str | None = None


@dataclass(frozen=True)
class SelfTestReport:
    phases: tuple[PhaseResult, ...]

    @property
    def passed(self) -> bool:
        return all(phase.status != "fail" for phase in self.phases)


def _involution_phase(vd: ValidatedDatum, chamber: str, name: str) -> PhaseResult:
    sectors = vd.sectors(chamber)
    for info in sectors:
        inverse = vd.inverse(info.label)
        inv_info = vd.sector_info(inverse, chamber)
        if inv_info.fixed_set != info.fixed_set:
            return PhaseResult(name, "fail", f"fixed sets of {info.label} and its inverse differ")
        if info.shift + inv_info.shift != vd.n - len(info.fixed_set):
            return PhaseResult(
                name, "fail", f"age({info.label}) + age(inverse) != moved coordinate count"
            )
        for j, (th, th_inv) in enumerate(zip(info.thetas, inv_info.thetas)):
            if th + th_inv != (0 if j in info.fixed_set else 1):
                return PhaseResult(
                    name, "fail", f"theta complement fails for {info.label} at coordinate {j}"
                )
    return PhaseResult(name, "pass", f"{len(sectors)} sectors closed under inverse")


def _obstruction_phase(vd: ValidatedDatum, ring: ChenRuanRing, name: str) -> PhaseResult:
    sectors = [info.label for info in vd.sectors(ring.chamber)]
    lines = 0
    for s in sectors:
        for t in sectors:
            r = vd.inverse(vd.compose(s, t))
            split = ring.obstruction_set(s, t)
            outside = (
                set(range(vd.n))
                - vd.fixed_set(s)
                - vd.fixed_set(t)
                - vd.fixed_set(r)
            )
            for j in sorted(outside):
                try:
                    rank = obstruction_rank_oracle(
                        vd.theta(s, j), vd.theta(t, j), vd.theta(r, j)
                    )
                except DomainError as exc:
                    return PhaseResult(name, "fail", f"({s}, {t}) line {j}: {exc}")
                if (rank == 1) != (j in split.obstruction):
                    return PhaseResult(
                        name,
                        "fail",
                        f"({s}, {t}) line {j}: index rank {rank} vs exponent rule",
                    )
                lines += 1
    return PhaseResult(name, "pass", f"{lines} normal lines agree with the index count")


def _agreement_phase(vd: ValidatedDatum) -> PhaseResult:
    name = "path_agreement"
    ring = ChenRuanRing(vd)
    sectors = vd.sectors(ring.chamber)
    triples = 0
    for s_info in sectors:
        for t_info in sectors:
            r = vd.inverse(vd.compose(s_info.label, t_info.label))
            if not vd.is_sector(r, ring.chamber):
                continue
            r_info = vd.sector_info(r, ring.chamber)
            for k1 in range(s_info.dim + 1):
                for k2 in range(t_info.dim + 1):
                    product = ring.cup_basis(
                        BasisElement(s_info.label, k1), BasisElement(t_info.label, k2)
                    )
                    for k3 in range(r_info.dim + 1):
                        if product is None:
                            direct = Fraction(0)
                        else:
                            direct = product[0] * ring.pairing_basis(
                                product[1], BasisElement(r, k3)
                            )
                        localized = triple_localized(
                            vd, (s_info.label, k1), (t_info.label, k2), (r, k3)
                        ).value
                        if direct != localized:
                            return PhaseResult(
                                name,
                                "fail",
                                f"({s_info.label},{k1}) ({t_info.label},{k2}) ({r},{k3}): "
                                f"direct {format_rational(direct)} != "
                                f"localized {format_rational(localized)}",
                            )
                        triples += 1
    return PhaseResult(name, "pass", f"{triples} composable basis triples agree")


def run_selftest(vd: ValidatedDatum) -> SelfTestReport:
    """Ring axioms, sector involution identities, obstruction/index
    agreement, and (for all-positive weights) the two-path 3-point check."""
    phases: list[PhaseResult] = []
    chambers = [chamber for chamber in CHAMBERS if vd.sectors(chamber)]
    tagged = len(chambers) > 1

    def tag(base: str, chamber: str) -> str:
        return f"{base}[{chamber}]" if tagged else base

    for chamber in chambers:
        ring = ChenRuanRing(vd, chamber)
        report = ring.verify_ring_axioms()
        failure = report.first_failure()
        phases.append(
            PhaseResult(
                tag("ring_axioms", chamber),
                "pass" if report.passed else "fail",
                None if failure is None else f"{failure.name}: {failure.counterexample}",
            )
        )
        phases.append(_involution_phase(vd, chamber, tag("sector_involution", chamber)))
        phases.append(_obstruction_phase(vd, ring, tag("obstruction_oracle", chamber)))
    if all(w > 0 for w in vd.weights):
        phases.append(_agreement_phase(vd))
    else:
        phases.append(
            PhaseResult(
                "path_agreement",
                "skipped",
                "mixed-sign weights: one side of the wall is noncompact, so only "
                "the localized delta is available (see the wallcross command)",
            )
        )
    return SelfTestReport(tuple(phases))


def selftest_to_doc(report: SelfTestReport) -> dict:
    return {
        "phases": [
            {"name": p.name, "status": p.status, "detail": p.detail} for p in report.phases
        ],
        "passed": report.passed,
    }


# -- command plumbing ----------------------------------------------------------


class _UsageError(Exception):
    pass


def _sector_flag(text: str) -> tuple[Fraction, tuple[int, ...]]:
    """Parse the flag syntax c=p/q[,a=k1:k2:...] without datum context."""
    parts = text.split(",")
    if not parts[0].startswith("c="):
        raise argparse.ArgumentTypeError(f"expected c=p/q[,a=k1:k2:...], got {text!r}")
    try:
        c = parse_rational(parts[0][2:])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    finite: tuple[int, ...] = ()
    if len(parts) == 2:
        if not parts[1].startswith("a="):
            raise argparse.ArgumentTypeError(f"expected a=k1:k2:..., got {parts[1]!r}")
        try:
            finite = tuple(int(x) for x in parts[1][2:].split(":"))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc
    elif len(parts) > 2:
        raise argparse.ArgumentTypeError(f"too many comma fields in {text!r}")
    return c, finite


def _resolve(vd: ValidatedDatum, flag: tuple[Fraction, tuple[int, ...]]):
    try:
        return vd.label(flag[0], flag[1])
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


def _load(path: str) -> ValidatedDatum:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DatumFormatError(f"cannot read datum file: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatumFormatError(f"datum file is not valid JSON: {exc}") from exc
    return validate_datum(datum_from_doc(doc))


def _structured(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _tsv(rows: list[list[str]]) -> str:
    return "".join("\t".join(row) + "\n" for row in rows)


def _sector_row(info: SectorInfo) -> list[str]:
    return [
        format_rational(info.label.c),
        ":".join(str(a) for a in info.label.finite),
        ",".join(str(j) for j in sorted(info.fixed_set)),
        ",".join(format_rational(th) for th in info.thetas),
        format_rational(info.shift),
        str(info.dim),
    ]


def _sector_doc(info: SectorInfo) -> dict:
    return {
        "label": label_to_doc(info.label),
        "fixed_set": sorted(info.fixed_set),
        "thetas": [format_rational(th) for th in info.thetas],
        "shift": format_rational(info.shift),
        "dim": info.dim,
    }


_SECTOR_HEADER = ["c", "finite", "fixed_set", "thetas", "shift", "dim"]


def _cmd_sectors(args, vd: ValidatedDatum) -> tuple[str, int]:
    sectors = vd.sectors()
    if args.format == "tsv":
        return _tsv([_SECTOR_HEADER] + [_sector_row(s) for s in sectors]), 0
    return _structured({"sectors": [_sector_doc(s) for s in sectors]}), 0


def _cmd_shift(args, vd: ValidatedDatum) -> tuple[str, int]:
    info = vd.sector_info(_resolve(vd, args.t))
    if args.format == "tsv":
        return _tsv([_SECTOR_HEADER, _sector_row(info)]), 0
    return _structured(_sector_doc(info)), 0


def _cmd_basis(args, vd: ValidatedDatum) -> tuple[str, int]:
    ring = ChenRuanRing(vd)
    records = [
        {
            "sector": label_to_doc(e.sector),
            "eta_power": e.k,
            "degree": format_rational(ring.degree(e)),
        }
        for e in ring.basis()
    ]
    if args.format == "tsv":
        rows = [["index", "c", "finite", "eta_power", "degree"]]
        for i, e in enumerate(ring.basis()):
            rows.append(
                [
                    str(i),
                    format_rational(e.sector.c),
                    ":".join(str(a) for a in e.sector.finite),
                    str(e.k),
                    format_rational(ring.degree(e)),
                ]
            )
        return _tsv(rows), 0
    return _structured({"basis": records}), 0


def _basis_class(vd: ValidatedDatum, flag, k: int) -> CRClass:
    label = _resolve(vd, flag)
    vd.sector_info(label)  # EmptySector when absent from this chamber
    return CRClass.single(BasisElement(label, k))


def _cmd_pair(args, vd: ValidatedDatum) -> tuple[str, int]:
    ring = ChenRuanRing(vd)
    value = ring.pairing(
        _basis_class(vd, args.t1, args.k1), _basis_class(vd, args.t2, args.k2)
    )
    return _value_output(args, value), 0


def _cmd_cup(args, vd: ValidatedDatum) -> tuple[str, int]:
    ring = ChenRuanRing(vd)
    product = ring.cup(
        _basis_class(vd, args.t1, args.k1), _basis_class(vd, args.t2, args.k2)
    )
    if args.format == "tsv":
        rows = [["c", "finite", "eta_power", "coeff"]]
        for element, coeff in product.items():
            rows.append(
                [
                    format_rational(element.sector.c),
                    ":".join(str(a) for a in element.sector.finite),
                    str(element.k),
                    format_rational(coeff),
                ]
            )
        return _tsv(rows), 0
    return _structured(cr_class_to_doc(product)), 0


def _value_output(args, value: Fraction) -> str:
    if args.format == "tsv":
        return format_rational(value) + "\n"
    return _structured(format_rational(value))


def _cmd_triple(args, vd: ValidatedDatum) -> tuple[str, int]:
    pairs = [
        (_resolve(vd, args.t1), args.k1),
        (_resolve(vd, args.t2), args.k2),
        (_resolve(vd, args.t3), args.k3),
    ]
    if args.method == "direct":
        ring = ChenRuanRing(vd)
        classes = [_basis_class(vd, t, k) for (t, k) in zip((args.t1, args.t2, args.t3), (args.k1, args.k2, args.k3))]
        value = ring.triple_direct(*classes)
    else:
        value = triple_localized(vd, *pairs).value
    return _value_output(args, value), 0


def _cmd_table(args, vd: ValidatedDatum) -> tuple[str, int]:
    table = ChenRuanRing(vd).structure_constants()
    if args.format == "tsv":
        rows = [["section", "i", "j", "value"]]
        for i, e in enumerate(table.basis):
            rows.append(["basis", str(i), str(e.k), str(e.sector)])
        for i, row in enumerate(table.pairing):
            for j, v in enumerate(row):
                if v != 0:
                    rows.append(["pairing", str(i), str(j), format_rational(v)])
        for (i, j), value in sorted(table.products.items()):
            cell = " + ".join(
                f"{format_rational(c)}*{e}" for e, c in value.items()
            )
            rows.append(["product", str(i), str(j), cell])
        return _tsv(rows), 0
    return _structured(table_to_doc(table)), 0


def _cmd_wallcross(args, vd: ValidatedDatum) -> tuple[str, int]:
    report = wall_crossing_delta(
        vd,
        (_resolve(vd, args.t1), args.k1),
        (_resolve(vd, args.t2), args.k2),
        (_resolve(vd, args.t3), args.k3),
    )
    if args.format == "tsv":
        rows = [
            ["value", format_rational(report.value)],
            ["degree_check", str(report.degree_check)],
        ]
        for chamber, flags in report.side_existence.items():
            rows.append([f"exists_{chamber}"] + [str(flag).lower() for flag in flags])
        if report.note:
            rows.append(["note", report.note])
        return _tsv(rows), 0
    return _structured(report_to_doc(report)), 0


def _cmd_selftest(args, vd: ValidatedDatum) -> tuple[str, int]:
    report = run_selftest(vd)
    code = 0 if report.passed else 1
    if args.format == "tsv":
        rows = [["phase", "status", "detail"]]
        for phase in report.phases:
            rows.append([phase.name, phase.status, phase.detail or ""])
        return _tsv(rows), code
    return _structured(selftest_to_doc(report)), code


_COMMANDS = {
    "sectors": _cmd_sectors,
    "shift": _cmd_shift,
    "basis": _cmd_basis,
    "pair": _cmd_pair,
    "cup": _cmd_cup,
    "triple": _cmd_triple,
    "table": _cmd_table,
    "wallcross": _cmd_wallcross,
    "selftest": _cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crring",
        description="Exact Chen-Ruan cohomology of diagonal abelian quotients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("datum", help="datum file (JSON: n, weights, finite, chamber)")
        p.add_argument("--format", choices=("structured", "tsv"), default="structured")
        p.add_argument("--out", help="write output to this file instead of stdout")
        return p

    def sector_arg(p: argparse.ArgumentParser, flag: str, *, count: bool = True) -> None:
        p.add_argument(
            flag, required=True, type=_sector_flag, metavar="c=p/q[,a=k1:k2:...]"
        )
        if count:
            k_flag = flag.replace("--t", "--k")
            p.add_argument(k_flag, type=int, default=0, metavar="K")

    command("sectors", "list twisted sectors with fixed sets, phases, and degree shifts")
    p = command("shift", "degree shift (age) and fixed set of one sector")
    sector_arg(p, "--t", count=False)
    command("basis", "graded basis of the Chen-Ruan ring")
    p = command("pair", "Poincare pairing of two basis classes")
    sector_arg(p, "--t1")
    sector_arg(p, "--t2")
    p = command("cup", "cup product of two basis classes")
    sector_arg(p, "--t1")
    sector_arg(p, "--t2")
    p = command("triple", "3-point function by either computation path")
    p.add_argument("--method", choices=("direct", "localization"), required=True)
    sector_arg(p, "--t1")
    sector_arg(p, "--t2")
    sector_arg(p, "--t3")
    command("table", "full structure-constant and pairing tables")
    p = command("wallcross", "wall-crossing delta of a 3-point function")
    sector_arg(p, "--t1")
    sector_arg(p, "--t2")
    sector_arg(p, "--t3")
    command("selftest", "run the built-in verification suites on the datum")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        vd = _load(args.datum)
        text, code = _COMMANDS[args.command](args, vd)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
