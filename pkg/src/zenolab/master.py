"""Reduced and counting-resolved master equations with a point-contact detector.

Continuous evolution of the dot/pseudomode density-matrix block while a
point contact monitors the dot: the detector enters only through the
dephasing rate gamma_d = (sqrt(I) - sqrt(I'))^2 damping the coherence. The
counting-resolved (n-resolved) ladder additionally tracks the number of
electrons transferred through the contact, giving the full counting
statistics; tracing it over n reproduces the reduced equations.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .model import DetectorParams, ModelParams
from .ode import integrate_linear

__all__ = [
    "InvariantWarning",
    "TruncationError",
    "ReducedState",
    "NResolvedState",
    "gamma_d",
    "reduced_generator",
    "integrate_reduced",
    "alpha_prime",
    "wide_band_survival",
    "default_n_max",
    "integrate_n_resolved",
]

# Tolerance for the physicality checks (occupations in [0, 1], positivity,
# non-increasing trace); matches the accuracy target of the integrator.
_INVARIANT_TOL = 1e-8
_TRUNCATION_TOL = 1e-10


class InvariantWarning(UserWarning):
    """A physical invariant was violated beyond tolerance; the run continued."""


class TruncationError(RuntimeError):
    """Counting ladder truncated too low to hold the requested evolution."""

    def __init__(self, message: str, suggested_n_max: int):
        super().__init__(message)
        self.suggested_n_max = suggested_n_max


@dataclass(frozen=True)
class ReducedState:
    """Dot/pseudomode density-matrix block (sigmaR0 is the implicit conjugate)."""

    sigma00: float
    sigmaRR: float
    sigma0R: complex

    @property
    def sigmaR0(self) -> complex:
        return self.sigma0R.conjugate()

    def as_matrix(self) -> np.ndarray:
        return np.array(
            [[self.sigma00, self.sigma0R], [self.sigmaR0, self.sigmaRR]], dtype=complex
        )


@dataclass(frozen=True)
class NResolvedState:
    """Density-matrix blocks resolved by the number n of transferred electrons."""

    sigma00: np.ndarray
    sigmaRR: np.ndarray
    sigma0R: np.ndarray

    @property
    def n_max(self) -> int:
        return self.sigma00.size - 1

    def reduced(self) -> ReducedState:
        """Trace over n."""
        return ReducedState(
            float(np.sum(self.sigma00)),
            float(np.sum(self.sigmaRR)),
            complex(np.sum(self.sigma0R)),
        )


def gamma_d(det: DetectorParams) -> float:
    """Detector-induced dephasing rate (sqrt(I) - sqrt(I'))^2."""
    return det.gamma_d


def _coherent_block(params: ModelParams, damping: float) -> np.ndarray:
    """Generator block over (sigma00, sigmaRR, Re sigma0R, Im sigma0R).

    Encodes d(sigma00)/dt = i w (sigma0R - sigmaR0),
    d(sigmaRR)/dt = -2 lambda_band sigmaRR - i w (sigma0R - sigmaR0), and
    d(sigma0R)/dt = i eps sigma0R + i w (sigma00 - sigmaRR) - damping sigma0R
    with w = omega_bar and eps = e_0 - e_r. Occupation relaxation terms of
    the counting ladder are added by the caller.
    """
    w = params.omega_bar
    eps = params.e_0 - params.e_r
    lam = params.lambda_band
    return np.array(
        [
            [0.0, 0.0, 0.0, -2.0 * w],
            [0.0, -2.0 * lam, 0.0, 2.0 * w],
            [0.0, 0.0, -damping, -eps],
            [w, -w, eps, -damping],
        ]
    )


def reduced_generator(params: ModelParams, gamma_d: float) -> np.ndarray:
    """4x4 real generator of the reduced equations over (s00, sRR, Re s0R, Im s0R)."""
    if gamma_d < 0:
        raise ValueError(f"gamma_d must be >= 0, got {gamma_d}")
    return _coherent_block(params, 0.5 * gamma_d + params.lambda_band)


def _states_from_rows(rows: np.ndarray) -> list[ReducedState]:
    return [
        ReducedState(float(r[0]), float(r[1]), complex(r[2], r[3])) for r in rows
    ]


def _check_reduced(states: list[ReducedState], t_grid: np.ndarray) -> None:
    bad: list[str] = []
    prev_trace = math.inf
    for state, t in zip(states, t_grid):
        trace = state.sigma00 + state.sigmaRR
        half_gap = math.hypot(0.5 * (state.sigma00 - state.sigmaRR), abs(state.sigma0R))
        eig_min = 0.5 * trace - half_gap
        if not (-_INVARIANT_TOL <= state.sigma00 <= 1.0 + _INVARIANT_TOL):
            bad.append(f"sigma00 = {state.sigma00:.3e} at t = {t:g}")
        elif not (-_INVARIANT_TOL <= state.sigmaRR <= 1.0 + _INVARIANT_TOL):
            bad.append(f"sigmaRR = {state.sigmaRR:.3e} at t = {t:g}")
        elif eig_min < -_INVARIANT_TOL:
            bad.append(f"negative eigenvalue {eig_min:.3e} at t = {t:g}")
        elif trace > prev_trace + _INVARIANT_TOL:
            bad.append(f"trace grew to {trace:.12f} at t = {t:g}")
        prev_trace = trace
        if bad:
            break
    if bad:
        warnings.warn(
            f"reduced-state invariant violated: {bad[0]}", InvariantWarning, stacklevel=3
        )


def integrate_reduced(
    params: ModelParams, gamma_d: float, t_grid: np.ndarray
) -> list[ReducedState]:
    """Evolve the reduced block from the occupied dot over the given times.

    Parameters
    ----------
    params : ModelParams
        Dot and reservoir parameters.
    gamma_d : float
        Detector dephasing rate (0 recovers the pure-state dynamics).
    t_grid : array_like
        Strictly ascending times starting at 0.

    Returns
    -------
    list of ReducedState, one per grid time. Invariant breaches are reported
    as InvariantWarning; the run still returns its data.
    """
    gen = reduced_generator(params, gamma_d)
    rate = (
        2.0 * params.lambda_band
        + gamma_d
        + abs(params.e_0 - params.e_r)
        + params.omega_bar
    )
    rows = integrate_linear(gen, np.array([1.0, 0.0, 0.0, 0.0]), t_grid, rate)
    states = _states_from_rows(rows)
    _check_reduced(states, np.asarray(t_grid, dtype=float))
    return states


def alpha_prime(lambda_band: float, gamma_d: float) -> float:
    """Wide-band decay-rate factor 2*lambda_band / (2*lambda_band + gamma_d).

    Equals 1 without a detector and vanishes as gamma_d -> infinity (the
    detector freezes the decay).
    """
    if lambda_band <= 0:
        raise ValueError(f"lambda_band must be > 0, got {lambda_band}")
    if gamma_d < 0:
        raise ValueError(f"gamma_d must be >= 0, got {gamma_d}")
    return 2.0 * lambda_band / (2.0 * lambda_band + gamma_d)


def wide_band_survival(gamma: float, lambda_band: float, gamma_d: float, t: float) -> float:
    """Survival exp(-alpha_prime * gamma * t) in the wide-band limit."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return math.exp(-alpha_prime(lambda_band, gamma_d) * gamma * t)


def default_n_max(current_max: float, t_end: float) -> int:
    """Counting-ladder truncation leaving < 1e-10 Poisson tail mass outside."""
    mean = max(current_max, 0.0) * max(t_end, 0.0)
    return math.ceil(mean + 12.0 * math.sqrt(mean) + 20.0)


def n_resolved_generator(params: ModelParams, det: DetectorParams, n_max: int) -> np.ndarray:
    """Real generator of the counting ladder, 4*(n_max+1) square.

    Layout: blocks of (sigma00, sigmaRR, Re sigma0R, Im sigma0R) per n,
    contiguous in n. Block n feeds from block n-1 through the occupied and
    empty currents and the coherence feed sqrt(I I').
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    cur_i = det.current_occupied
    cur_ip = det.current_empty
    diag = _coherent_block(params, 0.5 * (cur_i + cur_ip) + params.lambda_band)
    diag = diag + np.diag([-cur_i, -cur_ip, 0.0, 0.0])
    feed_coh = math.sqrt(cur_i * cur_ip)
    feed = np.diag([cur_i, cur_ip, feed_coh, feed_coh])
    shift = np.eye(n_max + 1, k=-1)
    return np.kron(np.eye(n_max + 1), diag) + np.kron(shift, feed)


def integrate_n_resolved(
    params: ModelParams,
    det: DetectorParams,
    n_max: int,
    t_grid: np.ndarray,
) -> list[NResolvedState]:
    """Evolve the counting-resolved ladder from the occupied dot with n = 0.

    Raises TruncationError (with a suggested n_max) if the top block ever
    accumulates more than 1e-10 occupation weight, since the ladder then no
    longer holds the distribution it is supposed to resolve.
    """
    gen = n_resolved_generator(params, det, n_max)
    rate = (
        2.0 * params.lambda_band
        + det.gamma_d
        + det.current_occupied
        + det.current_empty
        + abs(params.e_0 - params.e_r)
        + params.omega_bar
    )
    y0 = np.zeros(4 * (n_max + 1))
    y0[0] = 1.0
    rows = integrate_linear(gen, y0, t_grid, rate)
    blocks = rows.reshape(rows.shape[0], n_max + 1, 4)

    top_weight = float(np.max(blocks[:, n_max, 0] + blocks[:, n_max, 1]))
    if top_weight > _TRUNCATION_TOL:
        t_end = float(np.asarray(t_grid)[-1])
        suggested = max(
            default_n_max(max(det.current_occupied, det.current_empty), t_end),
            2 * n_max,
        )
        raise TruncationError(
            f"top counting block carries weight {top_weight:.3e} > {_TRUNCATION_TOL:g}; "
            f"rerun with n_max >= {suggested}",
            suggested,
        )

    return [
        NResolvedState(
            sigma00=b[:, 0].copy(),
            sigmaRR=b[:, 1].copy(),
            sigma0R=(b[:, 2] + 1j * b[:, 3]).copy(),
        )
        for b in blocks
    ]
