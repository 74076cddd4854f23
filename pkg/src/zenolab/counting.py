"""Counting statistics of the point contact and signal distinguishability.

With the dot frozen, the charge transferred through the contact is Poisson
distributed around I*t with width sqrt(2*I*t). Telling the occupied-dot
current I from the empty-dot current I' requires the two distributions to
separate, which fixes the minimal measurement time 2/gamma_d (or 1/gamma_d
under the unit signal-to-noise convention).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .master import default_n_max
from .model import DetectorParams

__all__ = [
    "CountDistribution",
    "count_distribution",
    "poisson_pn",
    "gaussian_approx_pn",
    "min_discrimination_time",
    "separation_metric",
]

_CONVENTION_FACTORS = {"widths": 2.0, "snr": 1.0}


def poisson_pn(current: float, t: float, n: int) -> float:
    """Probability (It)^n exp(-It) / n! of n transferred electrons at time t.

    Evaluated in log space so it stays finite for n up to ~1e6.
    """
    if current < 0 or t < 0:
        raise ValueError("current and t must be >= 0")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    mean = current * t
    if mean == 0.0:
        return 1.0 if n == 0 else 0.0
    return math.exp(n * math.log(mean) - mean - math.lgamma(n + 1))


def gaussian_approx_pn(current: float, t: float, n: float) -> float:
    """Central-limit approximant (2 pi It)^(-1/2) exp(-(It - n)^2 / (2 It))."""
    mean = current * t
    if mean <= 0:
        raise ValueError(f"current * t must be > 0, got {mean}")
    return math.exp(-((mean - n) ** 2) / (2.0 * mean)) / math.sqrt(2.0 * math.pi * mean)


@dataclass(frozen=True)
class CountDistribution:
    """Truncated Poisson counting distribution of one current at one time."""

    rate: float
    t: float
    pmf: dict[int, float]

    def total(self) -> float:
        return sum(self.pmf.values())

    def mean(self) -> float:
        return sum(n * p for n, p in self.pmf.items())

    def variance(self) -> float:
        mu = self.mean()
        return sum((n - mu) ** 2 * p for n, p in self.pmf.items())


def count_distribution(current: float, t: float, n_max: int | None = None) -> CountDistribution:
    """Poisson pmf truncated to a support carrying all but < 1e-10 of the mass."""
    if n_max is None:
        n_max = default_n_max(current, t)
    pmf = {n: poisson_pn(current, t, n) for n in range(n_max + 1)}
    return CountDistribution(current, t, pmf)


def min_discrimination_time(det: DetectorParams, convention: str = "widths") -> float:
    """Shortest time at which the two current distributions can be told apart.

    convention = "widths": centers separated by the sum of the widths,
    t = 2 / gamma_d; convention = "snr": unit signal-to-noise, t = 1 /
    gamma_d. Equal currents give an infinite time (no finite measurement
    can distinguish them).
    """
    try:
        factor = _CONVENTION_FACTORS[convention]
    except KeyError:
        raise ValueError(
            f"convention must be one of {sorted(_CONVENTION_FACTORS)}, got {convention!r}"
        ) from None
    rate = det.gamma_d
    if rate == 0.0:
        return math.inf
    return factor / rate


def separation_metric(det: DetectorParams, t: float) -> float:
    """Center separation |I' - I| t over the summed widths sqrt(2It) + sqrt(2I't).

    Equals 1 exactly at the "widths" discrimination time and grows like
    sqrt(t) beyond it.
    """
    if t <= 0:
        raise ValueError(f"t must be > 0, got {t}")
    widths = math.sqrt(2.0 * det.current_occupied * t) + math.sqrt(2.0 * det.current_empty * t)
    gap = abs(det.current_empty - det.current_occupied) * t
    if widths == 0.0:
        return 0.0
    return gap / widths
