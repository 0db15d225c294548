"""Computed-versus-observed agreement reports.

Observed values arrive as CSV with the exact header
`name,value,unit,uncertainty,source`; `#` lines and blank lines are
ignored, `uncertainty` and `source` may be empty, and `unit` is one of
MeV, GeV, dimensionless, degree. Computed claims are matched to observed
rows by name, converted to the observed row's unit, and reported with a
relative error (and a within-uncertainty verdict when an uncertainty was
given).

One wrinkle is deliberate: a claim the model states only to a few
significant figures carries that precision with it, and the comparison
rounds the computed value to the stated figures first. Currently that
applies to the gravity-level mass alone, which the boson table states at
two significant figures.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .ladder import BosonLadder, ElectroweakMix
from .quantities import MassValue, Unit

__all__ = [
    "ObservedUnit",
    "ObservedRecord",
    "ObservedFormatError",
    "ComputedClaim",
    "ComparisonRow",
    "ComparisonReport",
    "baryon_fractions",
    "parse_observed",
    "format_observed_csv",
    "default_observed",
    "computed_claims",
    "compare_all",
    "render",
    "round_to_sig",
    "OBSERVED_HEADER",
]

OBSERVED_HEADER = "name,value,unit,uncertainty,source"

RENDER_FORMATS = ("markdown", "csv", "json")

# the ladder states its top entry at two significant figures
_PLANCK_CLAIM_SIGFIGS = 2


class ObservedUnit(Enum):
    MEV = "MeV"
    GEV = "GeV"
    DIMENSIONLESS = "dimensionless"
    DEGREE = "degree"


_MASS_UNITS = {ObservedUnit.MEV: Unit.MEV, ObservedUnit.GEV: Unit.GEV}


def _unit_kind(unit: ObservedUnit) -> str:
    return "mass" if unit in _MASS_UNITS else unit.value


class ObservedFormatError(ValueError):
    """Malformed observed CSV; carries the offending line and column."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ObservedRecord:
    name: str
    value: float
    unit: ObservedUnit
    uncertainty: float | None = None
    source: str = ""

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("observed record needs a name")
        if not math.isfinite(self.value):
            raise ValueError(f"observed value must be finite, got {self.value!r}")
        if not isinstance(self.unit, ObservedUnit):
            raise ValueError(f"unknown observed unit: {self.unit!r}")
        if self.uncertainty is not None:
            if not math.isfinite(self.uncertainty) or self.uncertainty < 0.0:
                raise ValueError(
                    f"uncertainty must be finite and >= 0, got {self.uncertainty!r}"
                )


@dataclass(frozen=True)
class ComputedClaim:
    name: str
    value: float
    unit: ObservedUnit
    printed_sigfigs: int | None = None


@dataclass(frozen=True)
class ComparisonRow:
    name: str
    computed: float          # expressed in the observed row's unit
    observed: float
    unit: ObservedUnit
    rel_error: float
    within_uncertainty: bool | None = None


@dataclass(frozen=True)
class ComparisonReport:
    rows: tuple[ComparisonRow, ...]
    skipped_computed: tuple[str, ...]
    skipped_observed: tuple[str, ...]


def baryon_fractions() -> tuple[Fraction, Fraction]:
    """Baryonic and dark fractions of the mass budget, exactly.

    One of the seven orbital sets carries the baryonic matter, so the
    split is 1/7 against 6/7 and the two sum to exactly 1.
    """
    return Fraction(1, 7), Fraction(6, 7)


def round_to_sig(value: float, figures: int) -> float:
    """Round to the given number of significant figures."""
    if figures < 1:
        raise ValueError(f"need at least one significant figure, got {figures!r}")
    if value == 0.0 or not math.isfinite(value):
        return value
    return float(f"{value:.{figures}g}")


def parse_observed(text: str) -> list[ObservedRecord]:
    """Parse observed CSV text; empty input parses to an empty list."""
    records: list[ObservedRecord] = []
    seen: set[str] = set()
    header_done = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if not header_done:
            if stripped != OBSERVED_HEADER:
                raise ObservedFormatError(
                    lineno, 1, f"expected header {OBSERVED_HEADER!r}, got {stripped!r}"
                )
            header_done = True
            continue
        fields = next(csv.reader([raw]))
        if len(fields) != 5:
            raise ObservedFormatError(
                lineno, len(fields), f"expected 5 fields, got {len(fields)}"
            )
        name = fields[0].strip()
        if not name:
            raise ObservedFormatError(lineno, 1, "empty name")
        if name in seen:
            raise ObservedFormatError(lineno, 1, f"duplicate name {name!r}")
        try:
            value = float(fields[1])
        except ValueError:
            raise ObservedFormatError(
                lineno, 2, f"value is not a number: {fields[1]!r}"
            ) from None
        unit_text = fields[2].strip()
        try:
            unit = ObservedUnit(unit_text)
        except ValueError:
            choices = ", ".join(u.value for u in ObservedUnit)
            raise ObservedFormatError(
                lineno, 3, f"unknown unit {unit_text!r} (expected one of: {choices})"
            ) from None
        unc_text = fields[3].strip()
        uncertainty = None
        if unc_text:
            try:
                uncertainty = float(unc_text)
            except ValueError:
                raise ObservedFormatError(
                    lineno, 4, f"uncertainty is not a number: {unc_text!r}"
                ) from None
        try:
            record = ObservedRecord(name, value, unit, uncertainty, fields[4].strip())
        except ValueError as exc:
            raise ObservedFormatError(lineno, 1, str(exc)) from None
        seen.add(name)
        records.append(record)
    return records


def format_observed_csv(records: Iterable[ObservedRecord]) -> str:
    """Canonical observed CSV; parse(format(parse(x))) is byte stable."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    out.write(OBSERVED_HEADER + "\n")
    for record in records:
        writer.writerow([
            record.name,
            repr(record.value),
            record.unit.value,
            "" if record.uncertainty is None else repr(record.uncertainty),
            record.source,
        ])
    return out.getvalue()


def default_observed() -> list[ObservedRecord]:
    """The four reference values the model is usually held against."""
    return [
        ObservedRecord("top_quark", 176.0, ObservedUnit.GEV, 13.0, "collider top search"),
        ObservedRecord("theta_w", 28.7, ObservedUnit.DEGREE, None, "electroweak fit"),
        ObservedRecord("baryon_fraction", 0.13, ObservedUnit.DIMENSIONLESS, None,
                       "primordial deuterium abundance"),
        ObservedRecord("planck_mass", 1.2e19, ObservedUnit.GEV, None, "reference scale"),
    ]


# composition-table symbol -> comparison claim name
_SPECTRUM_CLAIM_NAMES = {
    "nu_e": "nu_e", "e": "e", "nu_mu": "nu_mu", "nu_tau": "nu_tau",
    "mu": "muon", "tau": "tau",
    "u": "u_quark", "d": "d_quark", "s": "s_quark", "c": "c_quark",
    "b": "b_quark", "t": "top_quark",
}


def computed_claims(
    spectrum: Sequence[tuple[str, MassValue]],
    ladder: BosonLadder,
    mix: ElectroweakMix,
    fractions: tuple[Fraction, Fraction],
) -> list[ComputedClaim]:
    """Everything the model claims, keyed by stable comparison names."""
    claims = [
        ComputedClaim(f"boson_{int(row.orbital)}", row.mass.to(Unit.GEV).magnitude,
                      ObservedUnit.GEV)
        for row in ladder
    ]
    claims.append(ComputedClaim(
        "planck_mass", ladder.mass(11).to(Unit.GEV).magnitude,
        ObservedUnit.GEV, printed_sigfigs=_PLANCK_CLAIM_SIGFIGS,
    ))
    claims.append(ComputedClaim("theta_w", mix.theta_w_deg, ObservedUnit.DEGREE))
    claims.append(ComputedClaim("alpha_w", mix.alpha_w, ObservedUnit.DIMENSIONLESS))
    claims.append(ComputedClaim("sin2_theta_w", mix.sin2_theta_w, ObservedUnit.DIMENSIONLESS))
    baryonic, dark = fractions
    claims.append(ComputedClaim("baryon_fraction", float(baryonic), ObservedUnit.DIMENSIONLESS))
    claims.append(ComputedClaim("dark_fraction", float(dark), ObservedUnit.DIMENSIONLESS))
    for name, mass in spectrum:
        claim_name = _SPECTRUM_CLAIM_NAMES.get(name, name)
        if name == "t":
            claims.append(ComputedClaim(claim_name, mass.to(Unit.GEV).magnitude,
                                        ObservedUnit.GEV))
        else:
            claims.append(ComputedClaim(claim_name, mass.mev, ObservedUnit.MEV))
    return claims


def compare_all(
    spectrum: Sequence[tuple[str, MassValue]],
    ladder: BosonLadder,
    mix: ElectroweakMix,
    fractions: tuple[Fraction, Fraction],
    observed: Sequence[ObservedRecord],
) -> ComparisonReport:
    """Match claims to observed rows by name, in observed input order."""
    claims = computed_claims(spectrum, ladder, mix, fractions)
    by_name = {claim.name: claim for claim in claims}
    rows: list[ComparisonRow] = []
    matched: set[str] = set()
    skipped_observed: list[str] = []
    for record in observed:
        claim = by_name.get(record.name)
        if claim is None:
            skipped_observed.append(record.name)
            continue
        if _unit_kind(claim.unit) != _unit_kind(record.unit):
            raise ValueError(
                f"unit kind mismatch for {record.name!r}: computed in {claim.unit.value}, "
                f"observed in {record.unit.value}"
            )
        computed = claim.value
        if claim.unit in _MASS_UNITS and claim.unit is not record.unit:
            computed = MassValue(computed, _MASS_UNITS[claim.unit]) \
                .to(_MASS_UNITS[record.unit]).magnitude
        if claim.printed_sigfigs is not None:
            computed = round_to_sig(computed, claim.printed_sigfigs)
        if computed == 0.0 and record.value == 0.0:
            rel = 0.0
        elif record.value == 0.0:
            raise ValueError(
                f"undefined relative error for {record.name!r}: observed value is zero"
            )
        else:
            rel = abs(computed - record.value) / abs(record.value)
        within = None
        if record.uncertainty is not None:
            within = abs(computed - record.value) <= record.uncertainty
        rows.append(ComparisonRow(record.name, computed, record.value,
                                  record.unit, rel, within))
        matched.add(record.name)
    skipped_computed = tuple(c.name for c in claims if c.name not in matched)
    return ComparisonReport(tuple(rows), skipped_computed, tuple(skipped_observed))


def _fmt(value: float, sig: int) -> str:
    return f"{value:.{sig}g}"


def _row_iter(report) -> tuple[Sequence[ComparisonRow], "ComparisonReport | None"]:
    if isinstance(report, ComparisonReport):
        return report.rows, report
    return tuple(report), None


def render(report, fmt: str = "markdown", sig: int = 6) -> str:
    """Render comparison rows as markdown, csv, or json text.

    Numbers are shown with `sig` significant digits (default 6). Accepts
    a full ComparisonReport or any iterable of ComparisonRow; skipped
    names are listed only when a full report is given.
    """
    if fmt not in RENDER_FORMATS:
        raise ValueError(f"format must be one of {', '.join(RENDER_FORMATS)}, got {fmt!r}")
    if sig < 1:
        raise ValueError(f"need at least one significant digit, got {sig!r}")
    rows, full = _row_iter(report)
    if fmt == "markdown":
        return _render_markdown(rows, full, sig)
    if fmt == "csv":
        return _render_csv(rows, full, sig)
    return _render_json(rows, sig)


def _within_text(within: bool | None) -> str:
    if within is None:
        return ""
    return "true" if within else "false"


def _render_markdown(rows, full, sig) -> str:
    lines = [
        "| name | computed | observed | unit | rel_error | within_uncertainty |",
        "| --- | --- | --- | --- | --- | --- |",
    ]
    for row in rows:
        lines.append(
            f"| {row.name} | {_fmt(row.computed, sig)} | {_fmt(row.observed, sig)} "
            f"| {row.unit.value} | {_fmt(row.rel_error, sig)} | {_within_text(row.within_uncertainty)} |"
        )
    if full is not None and (full.skipped_computed or full.skipped_observed):
        lines.append("")
        lines.append("Skipped (no matching name):")
        if full.skipped_computed:
            lines.append(f"- computed only: {', '.join(full.skipped_computed)}")
        if full.skipped_observed:
            lines.append(f"- observed only: {', '.join(full.skipped_observed)}")
    return "\n".join(lines) + "\n"


def _render_csv(rows, full, sig) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["name", "computed", "observed", "unit", "rel_error",
                     "within_uncertainty"])
    for row in rows:
        writer.writerow([
            row.name, _fmt(row.computed, sig), _fmt(row.observed, sig),
            row.unit.value, _fmt(row.rel_error, sig),
            _within_text(row.within_uncertainty),
        ])
    if full is not None:
        if full.skipped_computed:
            out.write(f"# skipped computed: {', '.join(full.skipped_computed)}\n")
        if full.skipped_observed:
            out.write(f"# skipped observed: {', '.join(full.skipped_observed)}\n")
    return out.getvalue()


def _render_json(rows, sig) -> str:
    entries = []
    for row in rows:
        entry = {
            "name": row.name,
            "computed": round_to_sig(row.computed, sig),
            "observed": round_to_sig(row.observed, sig),
            "rel_error": round_to_sig(row.rel_error, sig),
        }
        if row.within_uncertainty is not None:
            entry["within_uncertainty"] = row.within_uncertainty
        entries.append(entry)
    return json.dumps(entries, indent=2) + "\n"
