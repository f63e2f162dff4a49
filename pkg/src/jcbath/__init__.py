"""Dissipative atom-cavity dynamics with a shared (common) bath.

The library builds the resonant Jaynes-Cummings dressed basis, the
common-bath relaxation tensor whose cross terms encode interference
between the cavity and atomic decay channels, and the machinery around
it: time evolution, steady states, the quasi-dark trapped state at zero
coupling, driven transmission spectra with their asymmetric vacuum Rabi
doublet, and two independent verification engines (exact wavefunction
evolution against an explicitly discretized bath, and a closed-form
iteration solution for the dressed populations).
"""

from .bath import DiscretizedBath, SpectralDensity, discretize, ohmic_j
from .drive import (DriveParams, SpectrumResult, peak_metrics,
                    rotating_frame_hamiltonian, transmission_spectrum)
from .exceptions import (ConfigurationError, DegenerateSteadyStateError,
                         IntegrationError, NoPeakError)
from .jc import (DressedBasis, OscillatorLevels, SystemParams,
                 build_dressed_basis, coupled_oscillator_levels,
                 dressed_energies, product_hamiltonian, product_operators)
from .master import (DarkState, LinearGenerator, RateTensor, Trajectory,
                     build_rate_tensor, check_density_matrix, dark_state,
                     evolve, evolve_generator, evolve_traditional,
                     fit_decay_rate, lambda_zero_generator, liouvillian,
                     steady_expectations_analytic, steady_state,
                     traditional_generator)
from .oracle import (RecurrenceWarning, SingleExcitationState, exact_evolve,
                     iteration_solution)

__version__ = "0.1.0"

__all__ = [
    "ConfigurationError", "DegenerateSteadyStateError", "IntegrationError",
    "NoPeakError",
    "SystemParams", "DressedBasis", "OscillatorLevels", "dressed_energies",
    "build_dressed_basis", "coupled_oscillator_levels", "product_operators",
    "product_hamiltonian",
    "SpectralDensity", "DiscretizedBath", "ohmic_j", "discretize",
    "RateTensor", "LinearGenerator", "Trajectory", "DarkState",
    "build_rate_tensor", "liouvillian", "traditional_generator",
    "lambda_zero_generator", "evolve", "evolve_generator",
    "evolve_traditional", "dark_state", "steady_expectations_analytic",
    "steady_state", "fit_decay_rate", "check_density_matrix",
    "DriveParams", "SpectrumResult", "rotating_frame_hamiltonian",
    "transmission_spectrum", "peak_metrics",
    "SingleExcitationState", "RecurrenceWarning", "exact_evolve",
    "iteration_solution",
    "__version__",
]
