"""Weakly driven system: rotating frame, steady-state transmission spectrum.

Driving the cavity with a probe of amplitude ``eta`` at frequency
``omega_d`` and moving to the frame rotating at the probe frequency
gives the time-independent Hamiltonian

    H = D1 a'a + (D2/2) sigma_z + coupling (a'sigma- + a sigma+) + eta (a' + a)

with detunings D1 = omega_c - omega_d, D2 = omega_0 - omega_d. The
dissipative part is unchanged by the frame: the bath responds to the
lab-frame transition energies, so the rate tensor is built once from
the undriven eigenbasis and reused across the probe sweep. Sweeping
omega_d and recording the stationary photon number produces the
vacuum Rabi doublet; with channel interference on, the lower peak
(antisymmetric state, long-lived) towers over the upper one.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bath import SpectralDensity
from .exceptions import ConfigurationError, NoPeakError
from .jc import DressedBasis, SystemParams, build_dressed_basis, product_operators
from .master import LinearGenerator, build_rate_tensor, steady_state


@dataclass(frozen=True)
class DriveParams:
    """Probe amplitude and frequency."""

    eta: float
    omega_d: float

    def __post_init__(self):
        if self.eta < 0:
            raise ConfigurationError("eta must be non-negative")

    def detunings(self, params: SystemParams) -> tuple[float, float]:
        """(cavity detuning, atom detuning) relative to the probe."""
        return params.omega_c - self.omega_d, params.omega_0 - self.omega_d

    def is_weak(self, params: SystemParams) -> bool:
        """Perturbative-drive advisory: eta below a tenth of the coupling."""
        return self.eta < 0.1 * params.coupling


def rotating_frame_hamiltonian(params: SystemParams, drive: DriveParams,
                               basis: DressedBasis | None = None) -> np.ndarray:
    """Driven Hamiltonian in the probe frame, expressed in the undriven eigenbasis."""
    if basis is None:
        basis = build_dressed_basis(params)
    d1, d2 = drive.detunings(params)
    a, sm, sz = product_operators(params.n_max)
    h_prod = (d1 * a.conj().T @ a
              + 0.5 * d2 * sz
              + params.coupling * (a.conj().T @ sm + sm.conj().T @ a)
              + drive.eta * (a + a.conj().T))
    v = basis.vectors
    return v.T.conj() @ h_prod @ v


@dataclass(eq=False)
class SpectrumResult:
    """Steady-state photon number along a probe-frequency sweep.

    ``peaks`` lists (position, height) of the interior local maxima;
    ``asymmetry_ratio`` is the height of the lowest-frequency peak over
    the highest-frequency one, or None when fewer than two peaks exist.
    Failed sweep points are recorded as NaN.
    """

    omega_d: np.ndarray
    photon: np.ndarray
    peaks: list[tuple[float, float]]
    asymmetry_ratio: float | None


def peak_metrics(omega_d: np.ndarray,
                 values: np.ndarray) -> tuple[np.ndarray, np.ndarray, float | None]:
    """Locate interior maxima with sub-grid parabolic refinement.

    A point is a peak when it exceeds both neighbours; the vertex of the
    parabola through the three points refines position and height.
    Returns (positions, heights, asymmetry_ratio); the ratio compares
    the lowest-frequency peak against the highest-frequency one and is
    None with fewer than two peaks. Raises NoPeakError when the series
    has no interior maximum at all.
    """
    omega_d = np.asarray(omega_d, dtype=float)
    values = np.asarray(values, dtype=float)
    positions, heights = [], []
    for i in range(1, len(values) - 1):
        y0, y1, y2 = values[i - 1], values[i], values[i + 1]
        if not (y1 > y0 and y1 > y2) or np.isnan(y0) or np.isnan(y2):
            continue
        curv = y0 - 2.0 * y1 + y2
        offset = 0.5 * (y0 - y2) / curv if curv != 0 else 0.0
        positions.append(omega_d[i] + offset * (omega_d[i] - omega_d[i - 1]))
        heights.append(y1 - 0.25 * (y0 - y2) * offset)
    if not positions:
        raise NoPeakError("no interior local maximum in the series")
    order = np.argsort(positions)
    positions = np.asarray(positions)[order]
    heights = np.asarray(heights)[order]
    ratio = heights[0] / heights[-1] if len(positions) >= 2 else None
    return positions, heights, ratio


def transmission_spectrum(params: SystemParams, j1: SpectralDensity,
                          j2: SpectralDensity, eta: float, omega_d_grid,
                          interference: bool = True,
                          workers: int | None = None) -> SpectrumResult:
    """Stationary photon number versus probe frequency.

    Parameters
    ----------
    params : SystemParams
        Undriven system; its eigenbasis also hosts the driven problem.
    j1, j2 : SpectralDensity
        Cavity and atom channel densities (lab frame).
    eta : float
        Probe amplitude; should stay well below the coupling.
    omega_d_grid : array-like
        Probe frequencies, strictly increasing, inside (0, 2 omega_c).
    interference : bool
        Retain or drop the cross-channel terms of the rate tensor.
    workers : int or None
        Thread count for the sweep; every grid point is an independent
        linear solve. None or 1 runs serially; results are gathered in
        grid order either way.

    Notes
    -----
    Points whose steady-state solve fails are recorded as NaN with a
    warning instead of aborting the sweep.
    """
    grid = np.asarray(omega_d_grid, dtype=float)
    if np.any(np.diff(grid) <= 0):
        raise ValueError("omega_d_grid must be strictly increasing")
    if grid[0] <= 0 or grid[-1] >= 2 * params.omega_c:
        raise ConfigurationError("probe grid must lie inside (0, 2 omega_c)")
    if eta >= 0.1 * params.coupling:
        warnings.warn("drive amplitude is not small against the coupling; "
                      "the weak-drive picture may not apply", stacklevel=2)

    basis = build_dressed_basis(params)
    tensor = build_rate_tensor(basis, j1, j2, interference=interference)
    dim = basis.size
    gamma_flat = tensor.gamma.reshape(dim * dim, dim * dim)
    n_op = basis.number_operator()
    eye = np.eye(dim)

    def solve_point(omega_d: float) -> float:
        h = rotating_frame_hamiltonian(params, DriveParams(eta, omega_d), basis)
        matrix = -1j * (np.kron(h, eye) - np.kron(eye, h.T)) + gamma_flat
        gen = LinearGenerator(matrix=matrix, basis=basis, hamiltonian=h)
        try:
            rho = steady_state(gen)
        except Exception as exc:  # noqa: BLE001 - per-point failures are non-fatal
            warnings.warn(f"steady state failed at omega_d={omega_d:g}: {exc}",
                          stacklevel=2)
            return np.nan
        return float(np.real(np.trace(n_op @ rho)))

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            photon = np.array(list(pool.map(solve_point, grid)))
    else:
        photon = np.array([solve_point(w) for w in grid])

    try:
        positions, heights, ratio = peak_metrics(grid, photon)
        peaks = list(zip(positions.tolist(), heights.tolist()))
    except NoPeakError:
        peaks, ratio = [], None
    return SpectrumResult(omega_d=grid, photon=photon, peaks=peaks,
                          asymmetry_ratio=ratio)
