"""Mass values with explicit units, index types, and the model's input constants.

Internally the package works in MeV; `MassValue` exists so that any mass
crossing a module boundary carries its unit with it. Adjacent units differ
by exact factors of 10**3, so conversion chains are cheap and stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "Unit",
    "MassValue",
    "OrbitalIndex",
    "AuxIndex",
    "ModelConstants",
    "convert",
    "relative_error",
    "mev",
    "gev",
]

ALPHA_E_DEFAULT = 7.2973525693e-3  # fine structure constant


class Unit(Enum):
    EV = "eV"
    KEV = "keV"
    MEV = "MeV"
    GEV = "GeV"


_TO_MEV = {Unit.EV: 1e-6, Unit.KEV: 1e-3, Unit.MEV: 1.0, Unit.GEV: 1e3}


@dataclass(frozen=True)
class MassValue:
    """A non-negative mass magnitude tagged with its unit."""

    magnitude: float
    unit: Unit

    def __post_init__(self) -> None:
        if not isinstance(self.unit, Unit):
            raise ValueError(f"unknown mass unit: {self.unit!r}")
        m = float(self.magnitude)
        if not math.isfinite(m) or m < 0.0:
            raise ValueError(
                f"mass magnitude must be finite and >= 0, got {self.magnitude!r}"
            )
        object.__setattr__(self, "magnitude", m)

    @property
    def mev(self) -> float:
        """Magnitude expressed in MeV."""
        return self.magnitude * _TO_MEV[self.unit]

    def to(self, target: Unit) -> "MassValue":
        if target is self.unit:
            return self
        return MassValue(self.magnitude * _TO_MEV[self.unit] / _TO_MEV[target], target)

    def __str__(self) -> str:
        return f"{self.magnitude:.6g} {self.unit.value}"


def mev(magnitude: float) -> MassValue:
    return MassValue(magnitude, Unit.MEV)


def gev(magnitude: float) -> MassValue:
    return MassValue(magnitude, Unit.GEV)


def convert(value: MassValue, target: Unit) -> MassValue:
    """Express the same physical mass in another unit."""
    return value.to(target)


def relative_error(computed, reference) -> float:
    """|computed - reference| / |reference|, independent of unit choice.

    Takes either two MassValue (brought to a common unit first) or two
    plain numbers for dimensionless comparisons. A zero reference has no
    relative error; that case raises instead of returning inf.
    """
    if isinstance(computed, MassValue) != isinstance(reference, MassValue):
        raise TypeError("relative_error needs two MassValue or two plain numbers")
    if isinstance(computed, MassValue):
        c, r = computed.mev, reference.mev
    else:
        c, r = float(computed), float(reference)
    if r == 0.0:
        raise ValueError("undefined relative error: reference value is zero")
    return abs(c - r) / abs(r)


@dataclass(frozen=True)
class OrbitalIndex:
    """Main orbital number D; the model's mass levels live at D = 5..11."""

    d: int

    def __post_init__(self) -> None:
        if isinstance(self.d, bool) or not isinstance(self.d, int) or not 5 <= self.d <= 11:
            raise ValueError(f"orbital number must be an integer in 5..11, got {self.d!r}")

    def __int__(self) -> int:
        return self.d

    def __index__(self) -> int:
        return self.d


@dataclass(frozen=True)
class AuxIndex:
    """Auxiliary orbital number a within a level, 0..5."""

    a: int

    def __post_init__(self) -> None:
        if isinstance(self.a, bool) or not isinstance(self.a, int) or not 0 <= self.a <= 5:
            raise ValueError(f"auxiliary number must be an integer in 0..5, got {self.a!r}")

    def __int__(self) -> int:
        return self.a

    def __index__(self) -> int:
        return self.a


@dataclass(frozen=True)
class ModelConstants:
    """Input constants that fix every output of the model.

    alpha_e, the electron mass, the Z0 mass and the orbital count drive the
    mass ladder and the fermion spectrum; theta_w_deg only enters the
    electroweak mixing view, and planck_ref only the closed-form
    approximation and the agreement report.
    """

    alpha_e: float = ALPHA_E_DEFAULT
    m_electron: MassValue = MassValue(0.510999, Unit.MEV)
    m_z: MassValue = MassValue(91.177, Unit.GEV)
    theta_w_deg: float = 29.69
    planck_ref: MassValue = MassValue(1.2e19, Unit.GEV)
    n_orbitals: int = 7

    def __post_init__(self) -> None:
        if not _finite(self.alpha_e) or not 0.0 < float(self.alpha_e) < 1.0:
            raise ValueError(f"alpha_e must lie strictly inside (0, 1), got {self.alpha_e!r}")
        for name in ("m_electron", "m_z", "planck_ref"):
            value = getattr(self, name)
            if not isinstance(value, MassValue):
                raise ValueError(f"{name} must be a MassValue, got {value!r}")
            if value.magnitude <= 0.0:
                raise ValueError(f"{name} must be positive, got {value}")
        if not _finite(self.theta_w_deg) or not 0.0 < float(self.theta_w_deg) < 90.0:
            raise ValueError(
                f"theta_w_deg must lie strictly inside (0, 90), got {self.theta_w_deg!r}"
            )
        if self.n_orbitals != 7:
            raise ValueError(f"the model has exactly 7 orbitals per set, got {self.n_orbitals!r}")


def _finite(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)
