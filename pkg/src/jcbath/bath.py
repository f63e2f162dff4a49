"""Ohmic bath spectral densities and their discretization into explicit modes.

Two spectral functions characterize the shared reservoir: one for the
cavity decay channel and one for the atomic channel. Both are Ohmic
with an exponential cutoff,

    J(omega) = 2 pi alpha omega exp(-omega / omega_cutoff),  omega > 0.

The bath is at zero temperature, so the density is taken to vanish at
non-positive frequencies (no upward transitions).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigurationError


@dataclass(frozen=True)
class SpectralDensity:
    """Ohmic spectral density with dimensionless strength ``alpha`` and cutoff."""

    alpha: float
    omega_cutoff: float

    def __post_init__(self):
        if self.alpha < 0:
            raise ConfigurationError("alpha must be non-negative")
        if self.omega_cutoff <= 0:
            raise ConfigurationError("omega_cutoff must be positive")


def ohmic_j(density: SpectralDensity, omega):
    """Evaluate the Ohmic density; zero for omega <= 0 (zero-temperature bath).

    Accepts scalars or arrays and broadcasts elementwise.
    """
    w = np.asarray(omega, dtype=float)
    out = np.zeros_like(w)
    pos = w > 0
    out[pos] = (2.0 * np.pi * density.alpha * w[pos]
                * np.exp(-w[pos] / density.omega_cutoff))
    if np.ndim(omega) == 0:
        return float(out)
    return out


@dataclass(eq=False)
class DiscretizedBath:
    """Explicit bath modes sampling a pair of spectral densities.

    ``omegas`` are strictly increasing mode frequencies; ``kappas`` and
    ``xis`` are the real non-negative couplings of each mode to the
    cavity and to the atom.
    """

    omegas: np.ndarray
    kappas: np.ndarray
    xis: np.ndarray
    delta_omega: float
    omega_max: float

    def __post_init__(self):
        for arr in (self.omegas, self.kappas, self.xis):
            arr.flags.writeable = False

    @property
    def n_modes(self) -> int:
        return len(self.omegas)

    @property
    def recurrence_time(self) -> float:
        """Time 2 pi / delta_omega beyond which the finite bath echoes back."""
        return 2.0 * np.pi / self.delta_omega


def discretize(j1: SpectralDensity, j2: SpectralDensity,
               delta_omega: float, omega_max: float) -> DiscretizedBath:
    """Sample both spectral densities on a midpoint frequency grid.

    Modes sit at omega_i = (i + 1/2) delta_omega below ``omega_max`` with
    couplings kappa_i = sqrt(J1(omega_i) delta_omega / pi) and
    xi_i = sqrt(J2(omega_i) delta_omega / pi), so that
    pi sum_i kappa_i^2 delta(omega - omega_i) converges to J1(omega) as
    the spacing shrinks. The midpoint grid avoids placing a mode at
    omega = 0, where an Ohmic density vanishes anyway.
    """
    if delta_omega <= 0 or omega_max <= 0:
        raise ConfigurationError("delta_omega and omega_max must be positive")
    if omega_max < delta_omega:
        raise ConfigurationError(
            f"omega_max={omega_max} < delta_omega={delta_omega}: empty grid")
    omegas = np.arange(0.5 * delta_omega, omega_max, delta_omega)
    kappas = np.sqrt(ohmic_j(j1, omegas) * delta_omega / np.pi)
    xis = np.sqrt(ohmic_j(j2, omegas) * delta_omega / np.pi)
    return DiscretizedBath(omegas=omegas, kappas=kappas, xis=xis,
                           delta_omega=delta_omega, omega_max=omega_max)
