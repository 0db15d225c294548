"""Command line front end.

Exit codes: 0 success, 1 usage or out-of-range constants, 2 unreadable or
malformed data (config, calibration, observed CSV), 3 tolerance breach
under `compare --check`. Data goes to stdout, diagnostics to stderr, and
output is deterministic: same inputs, same bytes.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import replace
from pathlib import Path

from .compare import (
    ObservedFormatError,
    baryon_fractions,
    compare_all,
    default_observed,
    parse_observed,
    render,
    round_to_sig,
)
from .ladder import boson_ladder, closed_form_mass, electroweak_mix
from .quantities import ALPHA_E_DEFAULT, ModelConstants, Unit, gev, mev
from .spectrum import (
    ANCHOR_CHOICES,
    TABLE,
    AuxBaseSet,
    CalibrationError,
    CalibrationFileError,
    UncalibratedBaseError,
    calibrate,
    composition,
    fermion_mass,
    format_calibration,
    full_spectrum,
    load_bases,
)

ENV_CONFIG = "DIMORB_CONFIG"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_TOLERANCE = 3

_CONFIG_KEYS = ("alpha", "m_electron_mev", "m_z_gev", "theta_w_deg", "planck_gev")

_EPILOG = """examples:
  dimorb bosons --closed-form
  dimorb calibrate --out calibration.txt
  dimorb fermions --calibrate --format csv
  dimorb compare --check --tol 0.005
  dimorb sweep alpha --from 0.0073 --to 0.0146 --steps 3
"""


class ConfigError(ValueError):
    """Config file named by the environment could not be used."""


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("model constants (override config and defaults)")
    g.add_argument("--alpha", type=float, metavar="X",
                   help=f"fine structure constant (default {ALPHA_E_DEFAULT})")
    g.add_argument("--m-electron-mev", type=float, metavar="X",
                   help="electron mass in MeV (default 0.510999)")
    g.add_argument("--m-z-gev", type=float, metavar="X",
                   help="Z0 mass in GeV (default 91.177)")
    g.add_argument("--theta-w-deg", type=float, metavar="X",
                   help="mixing angle in degrees (default 29.69)")
    g.add_argument("--planck-gev", type=float, metavar="X",
                   help="Planck-scale reference in GeV (default 1.2e19)")
    p.add_argument("--digits", type=int, default=6, metavar="N",
                   help="significant digits in rendered numbers (default 6)")
    return p


def build_parser() -> _Parser:
    common = _common_flags()
    parser = _Parser(
        prog="dimorb",
        description="Deterministic calculator for the dimensional-orbital mass model.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    b = sub.add_parser("bosons", parents=[common],
                       help="print the seven-level gauge boson mass table")
    b.add_argument("--closed-form", action="store_true",
                   help="add the top-down power-law approximation as an extra column")
    b.add_argument("--format", choices=("table", "csv", "json"), default="table")
    b.set_defaults(handler=_cmd_bosons)

    c = sub.add_parser("calibrate", parents=[common],
                       help="solve the two calibrated bases and write a calibration file")
    c.add_argument("--out", default="calibration.txt", metavar="FILE",
                   help="calibration file to write (default calibration.txt)")
    c.add_argument("--anchors", choices=ANCHOR_CHOICES, default="d", metavar="ROW",
                   help="quark row that anchors the level-7 base (default d; "
                        "one of u, d, s, c, b)")
    c.set_defaults(handler=_cmd_calibrate)

    f = sub.add_parser("fermions", parents=[common],
                       help="print the twelve-row fermion spectrum")
    mode = f.add_mutually_exclusive_group()
    mode.add_argument("--calibration", metavar="FILE",
                      help="read calibrated bases from FILE")
    mode.add_argument("--calibrate", action="store_true",
                      help="calibrate in memory instead of reading a file")
    f.add_argument("--format", choices=("table", "csv", "json"), default="table")
    f.set_defaults(handler=_cmd_fermions)

    m = sub.add_parser("compare", parents=[common],
                       help="compare computed values against observed ones")
    m.add_argument("--observed", metavar="FILE",
                   help="observed CSV file (default: built-in reference set)")
    m.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    m.add_argument("--check", action="store_true",
                   help="exit 3 if any compared row misses the tolerance")
    m.add_argument("--tol", type=float, default=0.005, metavar="X",
                   help="relative tolerance used by --check (default 0.005)")
    m.set_defaults(handler=_cmd_compare)

    s = sub.add_parser("sweep", parents=[common],
                       help="recompute key outputs while one constant sweeps a range")
    s.add_argument("param", choices=_CONFIG_KEYS, help="constant to sweep")
    s.add_argument("--from", dest="start", type=float, required=True, metavar="X",
                   help="first value (inclusive)")
    s.add_argument("--to", dest="stop", type=float, required=True, metavar="Y",
                   help="last value (inclusive)")
    s.add_argument("--steps", type=int, required=True, metavar="N",
                   help="number of evaluation points")
    s.add_argument("--format", choices=("table", "csv", "json"), default="table")
    s.set_defaults(handler=_cmd_sweep)

    return parser


def _read_config(path: str) -> dict[str, float]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from None
    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
        if key not in _CONFIG_KEYS:
            raise ConfigError(
                f"{path}:{lineno}: unknown key {key!r} (expected one of: "
                f"{', '.join(_CONFIG_KEYS)})"
            )
        if key in values:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        try:
            values[key] = float(value.strip())
        except ValueError:
            raise ConfigError(
                f"{path}:{lineno}: value for {key!r} is not a number: {value.strip()!r}"
            ) from None
    return values


_CONSTANT_FIELDS = {
    "alpha": ("alpha_e", float),
    "m_electron_mev": ("m_electron", mev),
    "m_z_gev": ("m_z", gev),
    "theta_w_deg": ("theta_w_deg", float),
    "planck_gev": ("planck_ref", gev),
}


def _resolve_constants(args) -> ModelConstants:
    # precedence: defaults < config file < command line flags
    values: dict[str, float] = {}
    config_path = os.environ.get(ENV_CONFIG)
    if config_path:
        values.update(_read_config(config_path))
    for key in _CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    kwargs = {}
    for key, raw in values.items():
        field, wrap = _CONSTANT_FIELDS[key]
        kwargs[field] = wrap(raw)
    return ModelConstants(**kwargs)


def _cell_text(value, digits: int) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(value)


def _emit(fmt: str, columns: list[str], rows: list[list], digits: int) -> None:
    if fmt == "table":
        texts = [[_cell_text(v, digits) for v in row] for row in rows]
        widths = [
            max(len(columns[i]), *(len(t[i]) for t in texts)) if texts else len(columns[i])
            for i in range(len(columns))
        ]
        print("  ".join(c.ljust(widths[i]) for i, c in enumerate(columns)).rstrip())
        print("  ".join("-" * widths[i] for i in range(len(columns))))
        for t in texts:
            print("  ".join(t[i].ljust(widths[i]) for i in range(len(columns))).rstrip())
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell_text(v, digits) for v in row])
    else:
        entries = []
        for row in rows:
            entry = {}
            for name, value in zip(columns, row):
                entry[name] = round_to_sig(value, digits) if isinstance(value, float) else value
            entries.append(entry)
        print(json.dumps(entries, indent=2))


def _cmd_bosons(args, constants: ModelConstants) -> int:
    ladder = boson_ladder(constants)
    columns = ["d", "gauge", "symmetry", "mass_gev"]
    if args.closed_form:
        columns.append("closed_form_gev")
    rows = []
    for row in ladder:
        cells = [int(row.orbital), row.gauge.value, row.symmetry,
                 row.mass.to(Unit.GEV).magnitude]
        if args.closed_form:
            cells.append(closed_form_mass(int(row.orbital), constants).to(Unit.GEV).magnitude)
        rows.append(cells)
    _emit(args.format, columns, rows, args.digits)
    return EXIT_OK


def _cmd_calibrate(args, constants: ModelConstants) -> int:
    result = calibrate(constants, anchor=args.anchors)
    Path(args.out).write_text(format_calibration(result.bases))
    print(f"wrote {args.out}", file=sys.stderr)
    columns = ["name", "role", "rel_error"]
    rows = []
    for table_row in TABLE:
        if table_row.name in result.residuals:
            rows.append([table_row.name, "anchor", result.residuals[table_row.name]])
        elif table_row.name in result.non_anchor_residuals:
            rows.append([table_row.name, "held-out",
                         result.non_anchor_residuals[table_row.name]])
    _emit("table", columns, rows, args.digits)
    return EXIT_OK


def _cmd_fermions(args, constants: ModelConstants) -> int:
    if args.calibration:
        bases = load_bases(Path(args.calibration).read_text(), constants)
    elif args.calibrate:
        bases = calibrate(constants).bases
    else:
        print("dimorb: error: fermions needs --calibration FILE or --calibrate",
              file=sys.stderr)
        return EXIT_DATA
    spectrum = full_spectrum(constants, bases)
    columns = ["name", "orbitals", "constituents", "mass", "unit", "note"]
    rows = []
    for (name, mass), table_row in zip(spectrum, TABLE):
        shown = mass.to(table_row.display_unit)
        rows.append([name, table_row.orbitals, table_row.constituents,
                     shown.magnitude, table_row.display_unit.value, table_row.note])
    _emit(args.format, columns, rows, args.digits)
    return EXIT_OK


def _cmd_compare(args, constants: ModelConstants) -> int:
    if args.observed:
        records = parse_observed(Path(args.observed).read_text())
    else:
        records = default_observed()
    bases = calibrate(constants).bases
    report = compare_all(
        full_spectrum(constants, bases),
        boson_ladder(constants),
        electroweak_mix(constants),
        baryon_fractions(),
        records,
    )
    sys.stdout.write(render(report, args.format, sig=args.digits))
    if args.format == "json" and (report.skipped_computed or report.skipped_observed):
        # json output is a pure array, so the skip summary goes to stderr
        if report.skipped_computed:
            print(f"skipped computed: {', '.join(report.skipped_computed)}", file=sys.stderr)
        if report.skipped_observed:
            print(f"skipped observed: {', '.join(report.skipped_observed)}", file=sys.stderr)
    if args.check:
        if args.tol <= 0.0:
            print("dimorb: error: --tol must be positive", file=sys.stderr)
            return EXIT_USAGE
        breaches = [row.name for row in report.rows if row.rel_error > args.tol]
        if breaches:
            print(f"tolerance check failed at {args.tol:g}: {', '.join(breaches)}",
                  file=sys.stderr)
            return EXIT_TOLERANCE
    return EXIT_OK


def _cmd_sweep(args, constants: ModelConstants) -> int:
    if args.steps < 1:
        print("dimorb: error: --steps must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if args.steps == 1:
        points = [args.start]
    else:
        step = (args.stop - args.start) / (args.steps - 1)
        points = [args.start + i * step for i in range(args.steps)]
    field, wrap = _CONSTANT_FIELDS[args.param]
    columns = [args.param, "muon_mev", "tau_mev", "boson_6_gev", "boson_11_gev", "alpha_w"]
    rows = []
    for point in points:
        try:
            swept = replace(constants, **{field: wrap(point)})
        except ValueError as exc:
            print(f"dimorb: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        bases = AuxBaseSet.lepton_only(swept)
        ladder = boson_ladder(swept)
        rows.append([
            point,
            fermion_mass(composition("mu"), bases, swept).mev,
            fermion_mass(composition("tau"), bases, swept).mev,
            ladder.mass(6).to(Unit.GEV).magnitude,
            ladder.mass(11).to(Unit.GEV).magnitude,
            electroweak_mix(swept).alpha_w,
        ])
    _emit(args.format, columns, rows, args.digits)
    return EXIT_OK


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "digits", 6) < 1:
        print("dimorb: error: --digits must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        constants = _resolve_constants(args)
    except ConfigError as exc:
        print(f"dimorb: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"dimorb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args, constants)
    except (ObservedFormatError, CalibrationError, CalibrationFileError,
            UncalibratedBaseError) as exc:
        print(f"dimorb: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"dimorb: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"dimorb: error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
