"""Shared fixtures: the reference parameter point used across the suite.

Frozen expectation values carry 15+ significant digits and were obtained
by direct evaluation of the defining formulas (energies, Ohmic densities,
rate combinations), independently of the library code under test.
"""

import numpy as np
import pytest

import jcbath as jb

# Reference setup: resonant unit-frequency system, coupling 0.1,
# Ohmic baths (alpha, cutoff) = (0.002, 5) and (0.001, 8).
ALPHA1, CUTOFF1 = 0.002, 5.0
ALPHA2, CUTOFF2 = 0.001, 8.0
COUPLING = 0.1

# Ohmic density 2 pi alpha w exp(-w/cutoff) at the transition frequencies.
J1_RES = 0.010288474076551308      # J1(1.0)
J2_RES = 0.0055448915719510244     # J2(1.0)
J1_UP = 0.01109322350420519        # J1(1.1)
J2_UP = 0.0060236130048649         # J2(1.1)
J1_DOWN = 0.009446683535755365     # J1(0.9)
J2_DOWN = 0.005053173949698194     # J2(0.9)

# Dressed decay rates (sqrt(J1) +- sqrt(J2))^2 at 1 +- coupling.
RATE_PLUS = 0.0334656940062536
RATE_MINUS = 0.0006816470146405107

# Trapped-state observables at zero coupling, per initial arm.
STEADY_1G = (0.12264211562942556, 0.2275608478495056)
STEADY_0E = (0.2275608478495056, 0.42223618867156343)
DARK_WEIGHT_1G = 0.35020296347893115   # |<1;g|D>|^2 = J2 / (J1 + J2)


@pytest.fixture(scope="session")
def params():
    return jb.SystemParams(omega_c=1.0, omega_0=1.0, coupling=COUPLING, n_max=3)


@pytest.fixture(scope="session")
def basis(params):
    return jb.build_dressed_basis(params)


@pytest.fixture(scope="session")
def baths():
    return (jb.SpectralDensity(ALPHA1, CUTOFF1),
            jb.SpectralDensity(ALPHA2, CUTOFF2))


@pytest.fixture(scope="session")
def tensor(basis, baths):
    return jb.build_rate_tensor(basis, *baths, interference=True)


@pytest.fixture(scope="session")
def tensor_off(basis, baths):
    return jb.build_rate_tensor(basis, *baths, interference=False)


@pytest.fixture(scope="session")
def params_uncoupled():
    return jb.SystemParams(omega_c=1.0, omega_0=1.0, coupling=0.0, n_max=3)


@pytest.fixture(scope="session")
def basis_uncoupled(params_uncoupled):
    return jb.build_dressed_basis(params_uncoupled)


@pytest.fixture(scope="session")
def tensor_uncoupled(basis_uncoupled, baths):
    return jb.build_rate_tensor(basis_uncoupled, *baths, interference=True)


def density(ket: np.ndarray) -> np.ndarray:
    return np.outer(ket, ket.conj())


def one_photon_density(basis) -> np.ndarray:
    """|1;g><1;g| in the given eigenbasis."""
    return density(basis.product_ket(1, excited=False))


def excited_atom_density(basis) -> np.ndarray:
    """|0;e><0;e| in the given eigenbasis."""
    return density(basis.product_ket(0, excited=True))
