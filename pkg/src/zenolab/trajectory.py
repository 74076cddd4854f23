"""Repeated non-selective measurement dynamics over the dot/pseudomode pair.

One projective, outcome-discarded measurement per interval tau turns the
coherent interval amplitudes into a classical two-state recurrence over the
occupation probabilities. The recurrence has an exact closed form, and in
the continuous-monitoring limit (tau -> 0 at fixed x = lambda_band * tau)
the survival decays as exp(-alpha(x) * gamma * t).

The closed form and the matrix power both run on extended-precision
internals where the platform provides them: an m-th power amplifies the
rounding of its base by a factor m, so plain doubles could not keep the
two routes within 1e-12 of each other out to m = 1e4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .decay import MeasurementPropagator, propagator
from .model import ModelParams

__all__ = [
    "StepProbabilities",
    "OccupationPair",
    "step_probabilities",
    "survival_matrix_power",
    "survival_closed_form",
    "measured_survival",
    "alpha",
    "continuous_survival",
]

# Relative p0 vs p2 splitting below which kappa is not representable and the
# closed form delegates to the (unconditionally stable) matrix power.
DEGENERACY_RTOL = 1e-12


@dataclass(frozen=True)
class StepProbabilities:
    """Per-interval outcome probabilities of one measurement step.

    p0: stay in the dot, p1: dot <-> pseudomode transfer, p2: stay in the
    pseudomode. kappa = sqrt(1 + 4 p1^2 / (p0 - p2)^2) drives the closed
    form and is None when p0 and p2 are indistinguishable.
    """

    p0: float
    p1: float
    p2: float
    kappa: float | None

    @property
    def is_degenerate(self) -> bool:
        return self.kappa is None


@dataclass(frozen=True)
class OccupationPair:
    """Occupation probabilities after m measurements."""

    p_dot: float
    p_fict: float


def step_probabilities(prop: MeasurementPropagator) -> StepProbabilities:
    """Squared moduli of the interval amplitudes, plus kappa when defined."""
    p0 = abs(prop.b00) ** 2
    p1 = abs(prop.bR0) ** 2
    p2 = abs(prop.bRR) ** 2
    if abs(p0 - p2) <= DEGENERACY_RTOL * max(p0, p2):
        kappa = None
    else:
        kappa = math.sqrt(1.0 + 4.0 * p1 * p1 / (p0 - p2) ** 2)
    return StepProbabilities(p0, p1, p2, kappa)


def _step_matrix(sp: StepProbabilities) -> np.ndarray:
    return np.array([[sp.p0, sp.p1], [sp.p1, sp.p2]], dtype=np.longdouble)


def survival_matrix_power(sp: StepProbabilities, m: int) -> OccupationPair:
    """(step matrix)^m applied to (1, 0), by exponentiation-by-squaring."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    v = np.linalg.matrix_power(_step_matrix(sp), m)[:, 0]
    return OccupationPair(float(v[0]), float(v[1]))


def survival_closed_form(sp: StepProbabilities, m: int) -> float:
    """Dot survival after m measurements from the eigendecomposed recurrence.

    Evaluates the kappa closed form in the algebraically identical shape
    w_pm = (1 +- d/e)/2, eig_pm = mu +- e with mu = (p0+p2)/2, d = (p0-p2)/2
    and e = hypot(d, p1), which stays stable as p0 -> p2. The exactly
    degenerate case delegates to the matrix power.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if sp.is_degenerate:
        return survival_matrix_power(sp, m).p_dot
    p0 = np.longdouble(sp.p0)
    p2 = np.longdouble(sp.p2)
    mu = 0.5 * (p0 + p2)
    d = 0.5 * (p0 - p2)
    e = np.hypot(d, np.longdouble(sp.p1))
    w = 0.5 * d / e
    return float((0.5 + w) * (mu + e) ** m + (0.5 - w) * (mu - e) ** m)


def measured_survival(params: ModelParams, tau: float, m: int) -> float:
    """Dot survival probability after m projections separated by tau."""
    return survival_closed_form(step_probabilities(propagator(params, tau)), m)


def alpha(x: float) -> float:
    """Decay-rate factor 1 - (1 - exp(-x))/x of continuous monitoring.

    Strictly increasing with range (0, 1): x -> 0 freezes the decay (Zeno
    regime), x -> infinity restores the bare Markovian rate.
    """
    if not (x > 0) or math.isinf(x):
        raise ValueError(f"x must be a positive finite number, got {x}")
    if x < 1e-4:
        # Taylor form; the direct expression loses digits to cancellation.
        return x * (0.5 - x / 6.0 + x * x / 24.0)
    return 1.0 + math.expm1(-x) / x


def continuous_survival(gamma: float, x: float, t: float) -> float:
    """Survival exp(-alpha(x) * gamma * t) under continuous monitoring."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return math.exp(-alpha(x) * gamma * t)
