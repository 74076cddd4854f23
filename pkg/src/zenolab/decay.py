"""Closed-form amplitudes for free decay into Markovian and Lorentzian reservoirs.

The Lorentzian reservoir is reduced to a two-level non-Hermitian problem:
the dot level coupled to an auxiliary pseudomode level at the Lorentzian
center, which itself drains into a Markovian background. All amplitudes of
one free-evolution interval follow from that 2x2 generator, either in
closed form (dot level at zero) or through the matrix exponential.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .model import ModelParams, derived_quantities

__all__ = [
    "MeasurementPropagator",
    "effective_hamiltonian",
    "propagator",
    "propagator_expm",
    "survival_amplitude_b0",
    "survival_probability",
    "markovian_survival",
    "markovian_return_amplitude",
    "short_time_loss",
]

# Below this |s t / 2| the sinh(z)/z Taylor series is used, which removes the
# 0/0 of the degenerate s -> 0 case without branching on user input.
_SERIES_CUTOFF = 1e-4


@dataclass(frozen=True)
class MeasurementPropagator:
    """Amplitudes of one free-evolution interval in the dot/pseudomode basis.

    b00: stay in the dot having started in the dot.
    bR0: dot <-> pseudomode transfer (shared off-diagonal amplitude).
    bRR: stay in the pseudomode level.
    Norm lost from this 2x2 block drains into the Markovian background.
    """

    b00: complex
    bR0: complex
    bRR: complex

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.b00, self.bR0], [self.bR0, self.bRR]], dtype=complex)


def effective_hamiltonian(params: ModelParams) -> np.ndarray:
    """Non-Hermitian 2x2 generator [[e_0, w], [w, e_r - i*lambda_band]].

    The interval propagator is exp(-i H t); this matrix-exponential route is
    the independent oracle for the closed-form amplitudes and the only route
    supporting e_0 != 0.
    """
    w = params.omega_bar
    return np.array(
        [[params.e_0, w], [w, complex(params.e_r, -params.lambda_band)]],
        dtype=complex,
    )


def propagator_expm(params: ModelParams, tau: float) -> MeasurementPropagator:
    """Interval propagator via scipy's matrix exponential (any e_0)."""
    if tau < 0:
        raise ValueError(f"tau must be >= 0, got {tau}")
    u = expm(-1j * effective_hamiltonian(params) * tau)
    return MeasurementPropagator(complex(u[0, 0]), complex(u[1, 0]), complex(u[1, 1]))


def _sinhc(z: complex) -> complex:
    """sinh(z)/z, by Taylor series near zero."""
    if abs(z) < _SERIES_CUTOFF:
        z2 = z * z
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0
    return cmath.sinh(z) / z


def _amplitudes(q: complex, s: complex, omega_bar: float, t: float) -> tuple[complex, complex, complex]:
    """All three interval amplitudes from (q, s, omega_bar) at time t.

    Evaluated as a sum of two pure exponentials exp((+-s - q) t / 2), whose
    magnitudes never exceed one, so the result stays finite even when the
    individual cosh/sinh factors would overflow. Even in s by construction.
    """
    z = 0.5 * s * t
    if abs(z) < _SERIES_CUTOFF:
        ew = cmath.exp(-0.5 * q * t)
        ch = cmath.cosh(z)
        half_t_sc = 0.5 * t * _sinhc(z)
        b0 = ew * (ch + q * half_t_sc)
        br = -1j * 2.0 * omega_bar * ew * half_t_sc
        brp = ew * (ch - q * half_t_sc)
        return b0, br, brp
    r = q / s
    ep = cmath.exp(0.5 * (s - q) * t)
    em = cmath.exp(-0.5 * (s + q) * t)
    b0 = 0.5 * ((1.0 + r) * ep + (1.0 - r) * em)
    br = -1j * (omega_bar / s) * (ep - em)
    brp = 0.5 * ((1.0 - r) * ep + (1.0 + r) * em)
    return b0, br, brp


def _require_zero_dot_level(params: ModelParams, what: str) -> None:
    if params.e_0 != 0.0:
        raise ValueError(
            f"{what} is derived for e_0 = 0; route e_0 = {params.e_0} through "
            "effective_hamiltonian / propagator_expm instead"
        )


def survival_amplitude_b0(params: ModelParams, t: float) -> complex:
    """Dot survival amplitude exp(-qt/2)[cosh(st/2) + (q/s) sinh(st/2)].

    Requires e_0 = 0 (the convention under which the closed form holds).
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    _require_zero_dot_level(params, "survival_amplitude_b0")
    _, q, s = derived_quantities(params)
    return _amplitudes(q, s, params.omega_bar, t)[0]


def propagator(params: ModelParams, tau: float) -> MeasurementPropagator:
    """Closed-form interval propagator; requires e_0 = 0."""
    if tau < 0:
        raise ValueError(f"tau must be >= 0, got {tau}")
    _require_zero_dot_level(params, "propagator")
    _, q, s = derived_quantities(params)
    b0, br, brp = _amplitudes(q, s, params.omega_bar, tau)
    return MeasurementPropagator(b0, br, brp)


def survival_probability(params: ModelParams, t: float) -> float:
    """|b0(t)|^2, through the closed form when e_0 = 0, else the matrix exponential."""
    if params.e_0 == 0.0:
        return abs(survival_amplitude_b0(params, t)) ** 2
    return abs(propagator_expm(params, t).b00) ** 2


def markovian_survival(gamma: float, e_0: float, t: float) -> complex:
    """Wide-band survival amplitude exp(-i e_0 t - gamma t / 2)."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return cmath.exp(complex(-0.5 * gamma * t, -e_0 * t))


def markovian_return_amplitude(omega: float, e_rbar: float, e_0: float, gamma: float, t: float) -> complex:
    """Dot amplitude for a particle starting at reservoir level e_rbar.

    Bounded by 2|omega| / sqrt((e_rbar - e_0)^2 + gamma^2/4) and vanishing
    with the single-level coupling omega: in the wide-band limit a detected
    particle never returns to the dot.
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if omega == 0.0:
        return 0.0 + 0.0j
    pref = omega / complex(e_rbar - e_0, 0.5 * gamma)
    return pref * (cmath.exp(-1j * e_rbar * t) - cmath.exp(complex(-0.5 * gamma * t, -e_0 * t)))


def short_time_loss(params: ModelParams, t: float) -> float:
    """Quadratic short-time loss gamma * lambda_band * t^2 / 2 of the survival probability."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return 0.5 * params.gamma * params.lambda_band * t * t
