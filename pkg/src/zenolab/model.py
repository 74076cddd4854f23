"""Parameter types and unit conventions shared by all physics modules.

Units: hbar = 1, electron charge e = 1. All rates and energies are quoted
in units of the wide-band decay rate ``gamma`` (canonically gamma = 1), and
times in units of 1/gamma. Every type here is an immutable value object and
every function is pure, so unrestricted concurrent use is safe.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "ModelParams",
    "DetectorParams",
    "Schedule",
    "DerivedQuantities",
    "derived_quantities",
]


def _finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class ModelParams:
    """Rates and energies of the dot + finite-bandwidth reservoir system.

    Attributes
    ----------
    lambda_band : float
        Half-width of the Lorentzian spectral density, > 0.
    gamma : float
        Wide-band decay rate; sets the unit scale. ``gamma = 0`` is accepted
        as the exactly decoupled limit.
    e_r : float
        Center of the Lorentzian.
    e_0 : float
        Dot level (0 by convention; the closed-form amplitudes require it).
    """

    lambda_band: float
    gamma: float = 1.0
    e_r: float = 0.0
    e_0: float = 0.0

    def __post_init__(self) -> None:
        if _finite("gamma", self.gamma) < 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")
        if _finite("lambda_band", self.lambda_band) <= 0:
            raise ValueError(f"lambda_band must be > 0, got {self.lambda_band}")
        _finite("e_r", self.e_r)
        _finite("e_0", self.e_0)

    @property
    def omega_bar(self) -> float:
        """Coupling sqrt(gamma * lambda_band / 2) of the dot to the pseudomode level."""
        return math.sqrt(self.gamma * self.lambda_band / 2.0)


@dataclass(frozen=True)
class DetectorParams:
    """Point-contact currents for occupied and empty dot (units of e = 1)."""

    current_occupied: float
    current_empty: float

    def __post_init__(self) -> None:
        if _finite("current_occupied", self.current_occupied) < 0:
            raise ValueError("current_occupied must be >= 0")
        if _finite("current_empty", self.current_empty) < 0:
            raise ValueError("current_empty must be >= 0")

    @property
    def gamma_d(self) -> float:
        """Dephasing rate (sqrt(I) - sqrt(I'))^2; zero iff the currents coincide."""
        return (math.sqrt(self.current_occupied) - math.sqrt(self.current_empty)) ** 2


@dataclass(frozen=True)
class Schedule:
    """Measurement schedule: ``m`` projections separated by the interval ``tau``.

    Carries the reservoir half-width so the dimensionless product
    x = lambda_band * tau is available exactly as derived data.
    """

    tau: float
    m: int
    lambda_band: float

    def __post_init__(self) -> None:
        if _finite("tau", self.tau) <= 0:
            raise ValueError(f"tau must be > 0, got {self.tau}")
        if not isinstance(self.m, int) or self.m < 0:
            raise ValueError(f"m must be a non-negative integer, got {self.m!r}")
        if _finite("lambda_band", self.lambda_band) <= 0:
            raise ValueError(f"lambda_band must be > 0, got {self.lambda_band}")

    @property
    def x(self) -> float:
        return self.lambda_band * self.tau

    @property
    def total_time(self) -> float:
        return self.m * self.tau


class DerivedQuantities(NamedTuple):
    omega_bar: float
    q: complex
    s: complex


def derived_quantities(params: ModelParams) -> DerivedQuantities:
    """Derived scalars of the two-level reduction.

    omega_bar = sqrt(gamma * lambda_band / 2), q = lambda_band + i e_r, and
    s = sqrt(q^2 - 2 lambda_band gamma) on the principal branch. Downstream
    formulas are even in s, so the branch choice is immaterial.
    """
    q = complex(params.lambda_band, params.e_r)
    s = cmath.sqrt(q * q - 2.0 * params.lambda_band * params.gamma)
    return DerivedQuantities(params.omega_bar, q, s)
