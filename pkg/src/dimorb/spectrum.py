"""Charged lepton and quark masses from composition rules over the levels.

Every massive fermion is a sum of fixed constituents (electrons,
computed muons, or nothing for the massless neutrino slots) plus one
auxiliary-orbital term per level. The auxiliary term at level D with
index a contributes base_D * sum(k**4 for k = 0..a), so the three
generations climb steeply with a.

Three auxiliary bases exist. The lepton base at level 7 is fixed by the
ladder itself, (3/2) * B6, and never calibrated. The quark base at level
7 and the lumped level-8 contribution of the top are the model's only
two calibrated constants: each is solved exactly from one anchor row of
the composition table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .ladder import quartic_sum
from .quantities import MassValue, ModelConstants, Unit, gev, mev, relative_error

__all__ = [
    "Family",
    "BaseTerm",
    "AuxTerm",
    "FermionComposition",
    "SpectrumRow",
    "TABLE",
    "AuxBaseSet",
    "CalibrationResult",
    "UncalibratedBaseError",
    "CalibrationError",
    "CalibrationFileError",
    "lepton_aux_base",
    "fermion_mass",
    "calibrate_quark_base_7",
    "calibrate_top_lump",
    "calibrate",
    "full_spectrum",
    "format_calibration",
    "parse_calibration",
    "load_bases",
    "composition",
    "spectrum_row",
    "ANCHOR_CHOICES",
]


class UncalibratedBaseError(ValueError):
    """A composition needs an auxiliary base that has not been provided."""


class CalibrationError(ValueError):
    """An anchor row produced an unusable calibrated constant."""


class CalibrationFileError(ValueError):
    """A calibration file could not be parsed."""


class Family(Enum):
    LEPTON = "lepton"
    QUARK = "quark"


class BaseTerm(Enum):
    """Fixed constituents occupying the a = 0 slots of a composition."""

    NEUTRINO_ZERO = "nu"        # massless
    ELECTRON = "e"
    THREE_NEUTRINO = "3nu"      # massless triple
    THREE_ELECTRON = "3e"
    THREE_MUON = "3mu"          # three times the computed muon, not a fixed number
    LUMPED_D8 = "lump8"         # the top's combined level-8 contribution


@dataclass(frozen=True)
class AuxTerm:
    """One auxiliary-orbital occupation: level 7 or 8, index a >= 1."""

    orbital: int
    a: int
    family: Family

    def __post_init__(self) -> None:
        if self.orbital not in (7, 8):
            raise ValueError(f"auxiliary terms live at level 7 or 8, got {self.orbital!r}")
        top = 5 if self.orbital == 7 else 2
        if not isinstance(self.a, int) or isinstance(self.a, bool) or not 1 <= self.a <= top:
            raise ValueError(
                f"auxiliary index at level {self.orbital} must be an integer in 1..{top}, got {self.a!r}"
            )
        if not isinstance(self.family, Family):
            raise ValueError(f"family must be a Family, got {self.family!r}")


@dataclass(frozen=True)
class FermionComposition:
    name: str
    family: Family
    base_terms: tuple[BaseTerm, ...]
    aux_terms: tuple[AuxTerm, ...] = ()

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("composition needs a name")
        if not isinstance(self.family, Family):
            raise ValueError(f"family must be a Family, got {self.family!r}")
        if not self.base_terms or not all(isinstance(t, BaseTerm) for t in self.base_terms):
            raise ValueError("base_terms must be a non-empty tuple of BaseTerm")
        orbitals = [t.orbital for t in self.aux_terms]
        if len(set(orbitals)) != len(orbitals):
            raise ValueError("at most one auxiliary term per orbital")
        for term in self.aux_terms:
            if term.family is not self.family:
                raise ValueError(
                    f"auxiliary term family {term.family.value} does not match composition family {self.family.value}"
                )


@dataclass(frozen=True)
class SpectrumRow:
    """One row of the built-in composition table."""

    name: str
    orbitals: str            # occupied level_index slots, e.g. "6_0 + 7_0 + 7_1"
    constituents: str        # the same row spelled as named pieces
    composition: FermionComposition
    table_mass: MassValue    # the mass the table states for this row
    display_unit: Unit
    note: str = ""           # "given" for inputs, "massless" for zero rows


def lepton_aux_base(constants: ModelConstants) -> MassValue:
    """Auxiliary base for charged leptons at level 7: (3/2) * B6.

    B6 = M_e / alpha_e, so this needs no calibration at all.
    """
    return mev(1.5 * constants.m_electron.mev / constants.alpha_e)


@dataclass(frozen=True)
class AuxBaseSet:
    """The three auxiliary bases; the two calibrated ones may be absent."""

    lepton_base_7: MassValue
    quark_base_7: MassValue | None = None
    top_lump_8: MassValue | None = None

    @classmethod
    def lepton_only(cls, constants: ModelConstants) -> "AuxBaseSet":
        return cls(lepton_base_7=lepton_aux_base(constants))

    def base_for(self, orbital: int, family: Family) -> MassValue:
        if orbital == 7 and family is Family.LEPTON:
            return self.lepton_base_7
        if orbital == 7 and family is Family.QUARK:
            if self.quark_base_7 is None:
                raise UncalibratedBaseError(
                    "uncalibrated base: the quark base at level 7 has not been calibrated"
                )
            return self.quark_base_7
        raise UncalibratedBaseError(
            f"uncalibrated base: no auxiliary base for level {orbital} ({family.value})"
        )


_L = Family.LEPTON
_Q = Family.QUARK
_B = BaseTerm


def _comp(name, family, bases, aux=()):
    return FermionComposition(name, family, bases, aux)


def _aux7(a, family):
    return (AuxTerm(7, a, family),)


TABLE: tuple[SpectrumRow, ...] = (
    SpectrumRow("nu_e", "5_0", "nu_e",
                _comp("nu_e", _L, (_B.NEUTRINO_ZERO,)), mev(0.0), Unit.MEV, "massless"),
    SpectrumRow("e", "6_0", "e",
                _comp("e", _L, (_B.ELECTRON,)), mev(0.51), Unit.MEV, "given"),
    SpectrumRow("nu_mu", "7_0", "nu_mu",
                _comp("nu_mu", _L, (_B.NEUTRINO_ZERO,)), mev(0.0), Unit.MEV, "massless"),
    SpectrumRow("nu_tau", "8_0", "nu_tau",
                _comp("nu_tau", _L, (_B.NEUTRINO_ZERO,)), mev(0.0), Unit.MEV, "massless"),
    SpectrumRow("mu", "6_0 + 7_0 + 7_1", "e + nu_mu + mu_7",
                _comp("mu", _L, (_B.ELECTRON, _B.NEUTRINO_ZERO), _aux7(1, _L)),
                mev(105.6), Unit.MEV),
    SpectrumRow("tau", "6_0 + 7_0 + 7_2", "e + nu_mu + tau_7",
                _comp("tau", _L, (_B.ELECTRON, _B.NEUTRINO_ZERO), _aux7(2, _L)),
                mev(1786.0), Unit.MEV),
    SpectrumRow("u", "5_0 + 7_0 + 7_1", "u_5 + q_7 + u_7",
                _comp("u", _Q, (_B.THREE_NEUTRINO, _B.THREE_MUON), _aux7(1, _Q)),
                mev(330.8), Unit.MEV),
    SpectrumRow("d", "6_0 + 7_0 + 7_1", "d_6 + q_7 + d_7",
                _comp("d", _Q, (_B.THREE_ELECTRON, _B.THREE_MUON), _aux7(1, _Q)),
                mev(332.3), Unit.MEV),
    SpectrumRow("s", "6_0 + 7_0 + 7_2", "d_6 + q_7 + s_7",
                _comp("s", _Q, (_B.THREE_ELECTRON, _B.THREE_MUON), _aux7(2, _Q)),
                mev(558.0), Unit.MEV),
    SpectrumRow("c", "5_0 + 7_0 + 7_3", "u_5 + q_7 + c_7",
                _comp("c", _Q, (_B.THREE_NEUTRINO, _B.THREE_MUON), _aux7(3, _Q)),
                mev(1701.0), Unit.MEV),
    SpectrumRow("b", "6_0 + 7_0 + 7_4", "d_6 + q_7 + b_7",
                _comp("b", _Q, (_B.THREE_ELECTRON, _B.THREE_MUON), _aux7(4, _Q)),
                mev(5318.0), Unit.MEV),
    SpectrumRow("t", "5_0 + 7_0 + 7_5 + 8_0 + 8_2", "u_5 + q_7 + t_7 + q_8 + t_8",
                _comp("t", _Q, (_B.THREE_NEUTRINO, _B.THREE_MUON, _B.LUMPED_D8), _aux7(5, _Q)),
                MassValue(176.5, Unit.GEV), Unit.GEV),
)

_BY_NAME = {row.name: row for row in TABLE}

# rows eligible to anchor the quark-base solve; the top is excluded because
# its row also contains the lump
ANCHOR_CHOICES = ("u", "d", "s", "c", "b")


def spectrum_row(name: str) -> SpectrumRow:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"no spectrum row named {name!r}") from None


def composition(name: str) -> FermionComposition:
    return spectrum_row(name).composition


def fermion_mass(comp: FermionComposition, bases: AuxBaseSet,
                 constants: ModelConstants) -> MassValue:
    """Evaluate one composition: fixed constituents plus auxiliary terms."""
    total = _base_total_mev(comp, bases, constants)
    for term in comp.aux_terms:
        total += bases.base_for(term.orbital, term.family).mev * quartic_sum(term.a)
    return mev(total)


def _base_total_mev(comp, bases, constants) -> float:
    me = constants.m_electron.mev
    total = 0.0
    for term in comp.base_terms:
        if term in (_B.NEUTRINO_ZERO, _B.THREE_NEUTRINO):
            continue
        if term is _B.ELECTRON:
            total += me
        elif term is _B.THREE_ELECTRON:
            total += 3.0 * me
        elif term is _B.THREE_MUON:
            # the muon here is the computed one, so a cycle is impossible:
            # the muon row contains no THREE_MUON term
            total += 3.0 * fermion_mass(composition("mu"), bases, constants).mev
        elif term is _B.LUMPED_D8:
            if bases.top_lump_8 is None:
                raise UncalibratedBaseError(
                    "uncalibrated base: the lumped level-8 term has not been calibrated"
                )
            total += bases.top_lump_8.mev
    return total


def calibrate_quark_base_7(constants: ModelConstants, anchor: str = "d") -> MassValue:
    """Solve the level-7 quark base exactly from one anchor row.

    The anchor row is linear in the base with integer weight
    quartic_sum(a), so the solve is a single division.
    """
    if anchor not in ANCHOR_CHOICES:
        raise ValueError(f"anchor must be one of {', '.join(ANCHOR_CHOICES)}, got {anchor!r}")
    row = spectrum_row(anchor)
    bases = AuxBaseSet.lepton_only(constants)
    fixed = _base_total_mev(row.composition, bases, constants)
    weight = quartic_sum(row.composition.aux_terms[0].a)
    base = (row.table_mass.mev - fixed) / weight
    if base <= 0.0:
        raise CalibrationError(
            f"inconsistent calibration: anchor row {anchor!r} gives a non-positive quark base"
        )
    return mev(base)


def calibrate_top_lump(constants: ModelConstants, quark_base_7: MassValue) -> MassValue:
    """Solve the top's lumped level-8 contribution from its table row."""
    row = spectrum_row("t")
    bases = AuxBaseSet.lepton_only(constants)
    non_lump = tuple(t for t in row.composition.base_terms if t is not _B.LUMPED_D8)
    fixed = _base_total_mev(
        _comp(row.name, row.composition.family, non_lump), bases, constants
    )
    fixed += quark_base_7.mev * quartic_sum(row.composition.aux_terms[0].a)
    lump = row.table_mass.mev - fixed
    if lump <= 0.0:
        raise CalibrationError("inconsistent calibration: the solved top lump is not positive")
    return mev(lump)


@dataclass(frozen=True)
class CalibrationResult:
    bases: AuxBaseSet
    residuals: dict[str, float] = field(default_factory=dict)
    non_anchor_residuals: dict[str, float] = field(default_factory=dict)


def calibrate(constants: ModelConstants, anchor: str = "d") -> CalibrationResult:
    """Calibrate both constants, then report how every table row lands.

    `residuals` holds the anchor rows (zero up to rounding);
    `non_anchor_residuals` holds the held-out rows, which is where the
    model's actual predictive claim lives.
    """
    quark_base = calibrate_quark_base_7(constants, anchor)
    lump = calibrate_top_lump(constants, quark_base)
    bases = AuxBaseSet(lepton_aux_base(constants), quark_base, lump)
    residuals: dict[str, float] = {}
    held_out: dict[str, float] = {}
    for row in TABLE:
        if row.table_mass.mev == 0.0 or row.note == "given":
            continue
        computed = fermion_mass(row.composition, bases, constants)
        err = relative_error(computed, row.table_mass)
        if row.name in (anchor, "t"):
            residuals[row.name] = err
        else:
            held_out[row.name] = err
    return CalibrationResult(bases, residuals, held_out)


def full_spectrum(constants: ModelConstants,
                  bases: AuxBaseSet) -> list[tuple[str, MassValue]]:
    """All twelve rows in table order as (name, mass in MeV)."""
    return [(row.name, fermion_mass(row.composition, bases, constants)) for row in TABLE]


# calibration file format: one key=value per line, '#' comments allowed,
# values written with 17 significant digits so a write/read/write round
# trip is byte identical
_CAL_QUARK_KEY = "quark_base_7_mev"
_CAL_LUMP_KEY = "top_lump_8_gev"


def format_calibration(bases: AuxBaseSet) -> str:
    if bases.quark_base_7 is None or bases.top_lump_8 is None:
        raise ValueError("cannot format an AuxBaseSet with missing calibrated bases")
    return (
        "# calibrated auxiliary bases\n"
        f"{_CAL_QUARK_KEY}={bases.quark_base_7.mev:.17g}\n"
        f"{_CAL_LUMP_KEY}={bases.top_lump_8.to(Unit.GEV).magnitude:.17g}\n"
    )


def parse_calibration(text: str) -> dict[str, float]:
    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise CalibrationFileError(f"line {lineno}: expected key=value, got {line!r}")
        if key not in (_CAL_QUARK_KEY, _CAL_LUMP_KEY):
            raise CalibrationFileError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise CalibrationFileError(f"line {lineno}: duplicate key {key!r}")
        try:
            values[key] = float(value.strip())
        except ValueError:
            raise CalibrationFileError(
                f"line {lineno}: value for {key!r} is not a number: {value.strip()!r}"
            ) from None
    for key in (_CAL_QUARK_KEY, _CAL_LUMP_KEY):
        if key not in values:
            raise CalibrationFileError(f"missing key {key!r}")
        if not values[key] > 0.0:
            raise CalibrationFileError(f"{key} must be positive, got {values[key]!r}")
    return values


def load_bases(text: str, constants: ModelConstants) -> AuxBaseSet:
    """Rebuild the full base set from calibration-file text."""
    values = parse_calibration(text)
    return AuxBaseSet(
        lepton_base_7=lepton_aux_base(constants),
        quark_base_7=mev(values[_CAL_QUARK_KEY]),
        top_lump_8=gev(values[_CAL_LUMP_KEY]),
    )
