"""Numerical laboratory for decay into finite-bandwidth reservoirs under monitoring.

Survival probabilities of a discrete level draining into a Lorentzian
(finite-bandwidth) reservoir, computed along three routes and compared:
closed-form free decay, repeated non-selective projective measurements,
and continuous evolution coupled to a point-contact detector. An exact
tight-binding chain reservoir validates the Lorentzian approximation.
"""

__version__ = "0.1.0"

from .chain import (
    ChainModel,
    ChainTrajectory,
    bandwidth_map,
    chain_spectrum,
    evolve_chain,
    spectral_function_chain,
    spectral_function_lorentzian,
)
from .counting import (
    CountDistribution,
    count_distribution,
    gaussian_approx_pn,
    min_discrimination_time,
    poisson_pn,
    separation_metric,
)
from .decay import (
    MeasurementPropagator,
    effective_hamiltonian,
    markovian_return_amplitude,
    markovian_survival,
    propagator,
    propagator_expm,
    short_time_loss,
    survival_amplitude_b0,
    survival_probability,
)
from .master import (
    InvariantWarning,
    NResolvedState,
    ReducedState,
    TruncationError,
    alpha_prime,
    default_n_max,
    gamma_d,
    integrate_n_resolved,
    integrate_reduced,
    wide_band_survival,
)
from .model import DetectorParams, ModelParams, Schedule, derived_quantities
from .trajectory import (
    OccupationPair,
    StepProbabilities,
    alpha,
    continuous_survival,
    measured_survival,
    step_probabilities,
    survival_closed_form,
    survival_matrix_power,
)

__all__ = [
    "__version__",
    "ModelParams",
    "DetectorParams",
    "Schedule",
    "derived_quantities",
    "MeasurementPropagator",
    "effective_hamiltonian",
    "propagator",
    "propagator_expm",
    "survival_amplitude_b0",
    "survival_probability",
    "markovian_survival",
    "markovian_return_amplitude",
    "short_time_loss",
    "StepProbabilities",
    "OccupationPair",
    "step_probabilities",
    "survival_matrix_power",
    "survival_closed_form",
    "measured_survival",
    "alpha",
    "continuous_survival",
    "InvariantWarning",
    "TruncationError",
    "ReducedState",
    "NResolvedState",
    "gamma_d",
    "integrate_reduced",
    "integrate_n_resolved",
    "alpha_prime",
    "wide_band_survival",
    "default_n_max",
    "CountDistribution",
    "count_distribution",
    "poisson_pn",
    "gaussian_approx_pn",
    "min_discrimination_time",
    "separation_metric",
    "ChainModel",
    "ChainTrajectory",
    "chain_spectrum",
    "spectral_function_chain",
    "spectral_function_lorentzian",
    "bandwidth_map",
    "evolve_chain",
]
