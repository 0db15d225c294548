"""Gauge-boson mass ladder over the seven main orbitals D = 5..11.

The ladder is anchored in three places: the bottom two levels at the
electron mass (B5 = alpha_e * M_e and B6 = M_e / alpha_e), and the
electroweak level at the observed Z0 mass (B7 = M_Z). Above that each
step multiplies by 1 / alpha_e**2, so the mass climbs geometrically to
the gravity level B11, which lands near the Planck scale.

A closed-form power law (planck_ref * alpha_e**(2 * (11 - D))) describes
the same hierarchy from the top down. It is an approximation only: the
electroweak anchor breaks the uniform ratio, so the two paths agree to
within an order of magnitude but not better. The closed form never feeds
the ladder; `boson_ladder` is the authoritative path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .quantities import MassValue, ModelConstants, OrbitalIndex, Unit, gev

__all__ = [
    "GaugeLabel",
    "BosonRow",
    "BosonLadder",
    "LadderAlphas",
    "ElectroweakMix",
    "quartic_sum",
    "closed_form_mass",
    "electroweak_mix",
    "boson_ladder",
    "dimensional_fermion_mass",
    "ORBITAL_RANGE",
]

ORBITAL_RANGE = range(5, 12)


class GaugeLabel(Enum):
    A = "A"
    PI_HALF = "pi_1/2"
    Z_L = "Z_L^0"
    X_R = "X_R"
    X_L = "X_L"
    Z_R = "Z_R^0"
    G = "G"


# gauge boson and broken-symmetry tag hosted by each main orbital
_ROW_LABELS: dict[int, tuple[GaugeLabel, str]] = {
    5: (GaugeLabel.A, "electromagnetic, U(1)"),
    6: (GaugeLabel.PI_HALF, "strong, SU(3) -> U(1)"),
    7: (GaugeLabel.Z_L, "weak (left), SU(2)_L"),
    8: (GaugeLabel.X_R, "CP (right) nonconservation, U(1)_R"),
    9: (GaugeLabel.X_L, "CP (left) nonconservation, U(1)_L"),
    10: (GaugeLabel.Z_R, "weak (right), SU(2)_R"),
    11: (GaugeLabel.G, "gravity"),
}


def quartic_sum(a: int) -> int:
    """Sum of k**4 for k = 0..a, exactly, via the closed form.

    The closed form a(a+1)(2a+1)(3a^2+3a-1)/30 is an integer for every
    a >= 0, so this stays in exact integer arithmetic.
    """
    n = int(a)
    if n != a or n < 0:
        raise ValueError(f"quartic_sum needs an integer a >= 0, got {a!r}")
    return n * (n + 1) * (2 * n + 1) * (3 * n * n + 3 * n - 1) // 30


@dataclass(frozen=True)
class BosonRow:
    orbital: OrbitalIndex
    gauge: GaugeLabel
    symmetry: str
    mass: MassValue


@dataclass(frozen=True)
class BosonLadder:
    """The seven boson masses, bottom (D=5) to top (D=11)."""

    rows: tuple[BosonRow, ...]

    def row(self, d: int) -> BosonRow:
        return self.rows[int(d) - 5]

    def mass(self, d: int) -> MassValue:
        return self.row(d).mass

    def __iter__(self):
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class ElectroweakMix:
    """Mixing view of the electroweak level.

    alpha_w is defined so that alpha_w**2 * cos(theta_w) * M_Z = B6, i.e.
    it absorbs the anchor mismatch between the strong level and the Z0
    mass into a coupling specific to the weak level.
    """

    alpha_w: float
    theta_w_deg: float
    sin2_theta_w: float


def electroweak_mix(constants: ModelConstants) -> ElectroweakMix:
    theta = math.radians(constants.theta_w_deg)
    b6_gev = constants.m_electron.to(Unit.GEV).magnitude / constants.alpha_e
    alpha_w = math.sqrt(b6_gev / (constants.m_z.to(Unit.GEV).magnitude * math.cos(theta)))
    return ElectroweakMix(
        alpha_w=alpha_w,
        theta_w_deg=constants.theta_w_deg,
        sin2_theta_w=math.sin(theta) ** 2,
    )


@dataclass(frozen=True)
class LadderAlphas:
    """Per-step couplings alpha_D for the recursion B_{D-1} = B_D * alpha_D**2.

    Every step coupling equals alpha_e except the electroweak one, where
    the effective value alpha_w * sqrt(cos(theta_w)) reflects the Z0
    anchor. Indexed by the upper orbital of the step, D = 6..11.
    """

    steps: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.steps) != 6:
            raise ValueError("need one coupling per step, D = 6..11")
        for value in self.steps:
            if not (0.0 < value < 1.0):
                raise ValueError(f"step coupling must lie in (0, 1), got {value!r}")

    def alpha(self, d: int) -> float:
        if not 6 <= int(d) <= 11:
            raise ValueError(f"step coupling is defined for D = 6..11, got {d!r}")
        return self.steps[int(d) - 6]

    @classmethod
    def from_constants(cls, constants: ModelConstants) -> "LadderAlphas":
        mix = electroweak_mix(constants)
        alpha_7 = mix.alpha_w * math.sqrt(math.cos(math.radians(constants.theta_w_deg)))
        steps = tuple(
            alpha_7 if d == 7 else constants.alpha_e for d in range(6, 12)
        )
        return cls(steps)


def boson_ladder(constants: ModelConstants) -> BosonLadder:
    """Build the seven-row boson table from the three anchors."""
    a = constants.alpha_e
    me_gev = constants.m_electron.to(Unit.GEV).magnitude
    masses = {5: a * me_gev, 6: me_gev / a, 7: constants.m_z.to(Unit.GEV).magnitude}
    for d in range(8, 12):
        masses[d] = masses[d - 1] / (a * a)
    rows = []
    for d in ORBITAL_RANGE:
        gauge, symmetry = _ROW_LABELS[d]
        rows.append(BosonRow(OrbitalIndex(d), gauge, symmetry, gev(masses[d])))
    return BosonLadder(tuple(rows))


def closed_form_mass(d: int, constants: ModelConstants) -> MassValue:
    """Power-law approximation of the level-D boson mass.

    Descends from the Planck-scale reference as alpha_e**(2 * (11 - D)).
    Kept separate from `boson_ladder` on purpose: the ladder is exact by
    construction, this is a cross-check that only tracks it to within an
    order of magnitude below the electroweak level.
    """
    n = int(OrbitalIndex(int(d)))
    planck_gev = constants.planck_ref.to(Unit.GEV).magnitude
    return gev(planck_gev * constants.alpha_e ** (2 * (11 - n)))


def dimensional_fermion_mass(d: int, constants: ModelConstants) -> MassValue:
    """Mass of the fermion partner at level D, which is B_D * alpha_e.

    Defined for D = 6..11; the partner at the bottom level would need the
    level below it, which the model does not have.
    """
    n = int(OrbitalIndex(int(d)))
    if n < 6:
        raise ValueError("fermion partner mass is defined for D = 6..11 only")
    return gev(boson_ladder(constants).mass(n).to(Unit.GEV).magnitude * constants.alpha_e)
