"""Exact finite-bandwidth reservoir: a tight-binding chain of quantum wells.

The chain's analytically known spectrum gives an exact, unitary reference
evolution against which the Lorentzian approximation of the reservoir is
validated. The Lorentzian half-width matching the band curvature at the
center is lambda_band = 2*sqrt(2)*hop.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .model import ModelParams
from .ode import integrate_linear

__all__ = [
    "ChainModel",
    "ChainSpectrum",
    "ChainTrajectory",
    "chain_spectrum",
    "spectral_function_chain",
    "spectral_function_lorentzian",
    "bandwidth_map",
    "evolve_chain",
]


@dataclass(frozen=True)
class ChainModel:
    """Dot coupled to the end of an N-site chain with nearest-neighbor hopping.

    The end coupling is fixed by the requested band-center decay rate:
    dot_coupling = sqrt(gamma * hop / 2), so that 2 pi times the spectral
    weight at the band center equals gamma.
    """

    n_sites: int
    hop: float
    gamma: float = 1.0
    e_0: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.n_sites, int) or self.n_sites < 1:
            raise ValueError(f"n_sites must be a positive integer, got {self.n_sites!r}")
        if not (self.hop > 0) or math.isinf(self.hop):
            raise ValueError(f"hop must be > 0 and finite, got {self.hop}")
        if self.gamma < 0 or not math.isfinite(self.gamma):
            raise ValueError(f"gamma must be >= 0 and finite, got {self.gamma}")
        if not math.isfinite(self.e_0):
            raise ValueError(f"e_0 must be finite, got {self.e_0}")

    @property
    def dot_coupling(self) -> float:
        return math.sqrt(self.gamma * self.hop / 2.0)

    @property
    def recurrence_time(self) -> float:
        """Time for a wavefront to cross the chain and echo back to the dot."""
        return self.n_sites / (2.0 * self.hop)


class ChainSpectrum(NamedTuple):
    energies: np.ndarray
    site_amplitudes: np.ndarray


def chain_spectrum(model: ChainModel) -> ChainSpectrum:
    """Analytic eigenpairs of the bare chain.

    energies[r-1] = -2 hop cos(r pi / (N+1)) and
    site_amplitudes[r-1, n-1] = sqrt(2/(N+1)) sin(r pi n / (N+1)); the
    eigenvectors are exactly orthonormal, no diagonalization involved.
    """
    n = model.n_sites
    r = np.arange(1, n + 1)
    theta = np.pi * r / (n + 1)
    energies = -2.0 * model.hop * np.cos(theta)
    site_amplitudes = math.sqrt(2.0 / (n + 1)) * np.sin(np.outer(theta, np.arange(1, n + 1)))
    return ChainSpectrum(energies, site_amplitudes)


def spectral_function_chain(e: float, gamma: float, hop: float) -> float:
    """Semicircular chain spectral weight (gamma/2pi) sqrt(1 - e^2/(4 hop^2))."""
    band_edge = 2.0 * hop
    if abs(e) >= band_edge:
        return 0.0
    return gamma / (2.0 * math.pi) * math.sqrt(1.0 - (e / band_edge) ** 2)


def spectral_function_lorentzian(e: float, params: ModelParams) -> float:
    """Lorentzian spectral weight (gamma/2pi) L^2 / ((e - e_r)^2 + L^2)."""
    lam = params.lambda_band
    return params.gamma / (2.0 * math.pi) * lam * lam / ((e - params.e_r) ** 2 + lam * lam)


def bandwidth_map(hop: float) -> float:
    """Lorentzian half-width 2 sqrt(2) hop matching the band-center curvature."""
    if hop <= 0:
        raise ValueError(f"hop must be > 0, got {hop}")
    return 2.0 * math.sqrt(2.0) * hop


@dataclass(frozen=True)
class ChainTrajectory:
    """Dot amplitude along an exact chain evolution.

    past_recurrence marks times beyond the finite-size echo, where the
    chain and the continuum genuinely part ways.
    """

    t: np.ndarray
    b0: np.ndarray
    p0: np.ndarray
    norm: np.ndarray
    past_recurrence: np.ndarray


def evolve_chain(
    model: ChainModel,
    t_grid: np.ndarray,
    initial_eigenstate: int | None = None,
) -> ChainTrajectory:
    """Exact evolution of dot + chain, in the chain eigenbasis.

    The (N+1)-level Hermitian system couples the dot to eigenmode r with
    strength dot_coupling * sqrt(2/(N+1)) * sin(r pi/(N+1)). By default the
    dot starts occupied and the chain empty; passing ``initial_eigenstate``
    (1-based mode index) instead starts from that reservoir eigenmode,
    whose return amplitude shrinks as 1/N.
    """
    n = model.n_sites
    energies, site_amplitudes = chain_spectrum(model)
    couplings = model.dot_coupling * site_amplitudes[:, 0]

    h = np.zeros((n + 1, n + 1), dtype=complex)
    h[0, 0] = model.e_0
    h[0, 1:] = couplings
    h[1:, 0] = couplings
    h[np.arange(1, n + 1), np.arange(1, n + 1)] = energies

    y0 = np.zeros(n + 1, dtype=complex)
    if initial_eigenstate is None:
        y0[0] = 1.0
    else:
        if not 1 <= initial_eigenstate <= n:
            raise ValueError(f"initial_eigenstate must be in 1..{n}, got {initial_eigenstate}")
        y0[initial_eigenstate] = 1.0

    rate = 2.0 * model.hop + abs(model.e_0) + model.dot_coupling
    sol = integrate_linear(-1j * h, y0, t_grid, rate)

    t = np.asarray(t_grid, dtype=float)
    b0 = sol[:, 0]
    return ChainTrajectory(
        t=t,
        b0=b0,
        p0=np.abs(b0) ** 2,
        norm=np.sum(np.abs(sol) ** 2, axis=1),
        past_recurrence=t > model.recurrence_time,
    )
