"""Independent verification engines for the master-equation results.

Two cross-checks that share no code path with the relaxation tensor:

* exact unitary evolution of the full system-plus-bath wavefunction in
  the single-excitation sector, with the bath represented by explicit
  discretized modes, and
* the closed-form iteration solution for the two one-excitation dressed
  populations, obtained by freezing the slow populations inside the
  coherence equations and back-substituting.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .bath import DiscretizedBath
from .exceptions import IntegrationError
from .jc import SystemParams
from .master import RateTensor


class RecurrenceWarning(UserWarning):
    """Evolution window exceeds the finite bath's recurrence time."""


@dataclass(eq=False)
class SingleExcitationState:
    """Wavefunction amplitudes in the one-excitation sector.

    ``c_cavity`` multiplies |1;g> with the bath in vacuum, ``c_atom``
    multiplies |0;e>, and ``c_bath[i]`` the state with one photon in
    bath mode i. The total norm must be one.
    """

    c_cavity: complex
    c_atom: complex
    c_bath: np.ndarray

    def __post_init__(self):
        norm = (abs(self.c_cavity) ** 2 + abs(self.c_atom) ** 2
                + float(np.sum(np.abs(self.c_bath) ** 2)))
        if abs(norm - 1.0) > 1e-8:
            raise ValueError(f"state norm {norm:.12g} != 1")

    @classmethod
    def system(cls, c_cavity: complex, c_atom: complex,
               n_modes: int) -> "SingleExcitationState":
        """Excitation shared between cavity and atom, bath in vacuum."""
        return cls(c_cavity=c_cavity, c_atom=c_atom,
                   c_bath=np.zeros(n_modes, dtype=complex))

    @classmethod
    def cavity(cls, n_modes: int) -> "SingleExcitationState":
        return cls.system(1.0, 0.0, n_modes)

    @classmethod
    def atom(cls, n_modes: int) -> "SingleExcitationState":
        return cls.system(0.0, 1.0, n_modes)


def exact_evolve(params: SystemParams, bath: DiscretizedBath,
                 psi0: SingleExcitationState, t_grid,
                 rtol: float = 1e-9, atol: float = 1e-12,
                 max_step: float = np.inf) -> dict[str, np.ndarray]:
    """Exact wavefunction evolution against an explicit discretized bath.

    The one-excitation block of the full Hamiltonian is a bordered
    diagonal matrix: the two system amplitudes couple to every bath mode
    while the modes stay mutually uncoupled, so one derivative costs
    O(n_modes). The matrix is never materialized; an adaptive high-order
    Runge-Kutta steps the amplitudes directly.

    Returns a dict of series on ``t_grid``: ``"t"``, ``"photon"``
    (|c_cavity|^2), ``"excited"`` (|c_atom|^2), ``"norm"``, and for a
    coupled system the dressed doublet populations ``"pop_1+"`` and
    ``"pop_1-"``.

    A window longer than the bath recurrence time 2 pi / delta_omega
    triggers a warning: beyond it the discretization echoes back.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if bath.n_modes and t_grid[-1] > bath.recurrence_time:
        warnings.warn(
            f"t_max={t_grid[-1]:g} exceeds the bath recurrence time "
            f"{bath.recurrence_time:g}; refine delta_omega",
            RecurrenceWarning, stacklevel=2)
    if len(psi0.c_bath) != bath.n_modes:
        raise ValueError("psi0 bath amplitudes do not match the bath size")

    omega_c, omega_0, lam = params.omega_c, params.omega_0, params.coupling
    w, kap, xi = bath.omegas, bath.kappas, bath.xis

    def rhs(t, y):
        out = np.empty_like(y)
        yb = y[2:]
        out[0] = omega_c * y[0] + lam * y[1] + kap @ yb
        out[1] = lam * y[0] + omega_0 * y[1] + xi @ yb
        out[2:] = w * yb + kap * y[0] + xi * y[1]
        return -1j * out

    y0 = np.concatenate(([psi0.c_cavity, psi0.c_atom],
                         psi0.c_bath)).astype(complex)
    # Capping the step keeps the dense-output interpolant as accurate as
    # the steps themselves when very tight norm conservation is needed.
    sol = solve_ivp(rhs, (t_grid[0], t_grid[-1]), y0, t_eval=t_grid,
                    method="DOP853", rtol=rtol, atol=atol, max_step=max_step)
    if not sol.success:
        t_fail = sol.t[-1] if len(sol.t) else t_grid[0]
        raise IntegrationError(f"exact evolution failed: {sol.message}", t_fail)

    c_cav, c_atom = sol.y[0], sol.y[1]
    series = {
        "t": t_grid,
        "photon": np.abs(c_cav) ** 2,
        "excited": np.abs(c_atom) ** 2,
        "norm": np.sum(np.abs(sol.y) ** 2, axis=0),
    }
    if lam > 0:
        # Dressed doublet projections (+|1;g> + |0;e>)/sqrt2, (-|1;g> + |0;e>)/sqrt2.
        series["pop_1+"] = np.abs((c_cav + c_atom) / np.sqrt(2.0)) ** 2
        series["pop_1-"] = np.abs((-c_cav + c_atom) / np.sqrt(2.0)) ** 2
    return series


def iteration_solution(tensor: RateTensor, energies: np.ndarray,
                       rho0: np.ndarray, t_grid) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form one-excitation dressed populations.

    Within the ground plus one-excitation block, the coherence equations
    are first solved with the population feedback dropped, giving pure
    damped oscillations; substituting them back into the population
    equations and integrating yields

        pop(t) = [ g_ab r_ab(0) (exp(d_ab t) - 1)/d_ab   (both coherences)
                   + pop(0) ] exp(g_self t)

    with d_ab the coherence exponent minus the population's own rate.
    The neglected feedback is second order in the relaxation rates.

    ``rho0`` must be supported on the one-excitation manifold; its four
    dressed matrix elements seed the formula. Returns the two real
    population series (symmetric, antisymmetric).
    """
    basis = tensor.basis
    t = np.asarray(t_grid, dtype=float)
    try:
        ip, im = basis.index("1+"), basis.index("1-")
    except KeyError:
        raise ValueError("iteration solution needs a coupled-system basis "
                         "with the 1+/1- doublet") from None

    support = np.zeros(basis.size, dtype=bool)
    support[[ip, im]] = True
    outside = np.abs(rho0[np.ix_(~support, ~support)]).max()
    if outside > 1e-12 or abs(np.trace(rho0) - (rho0[ip, ip] + rho0[im, im])) > 1e-12:
        raise ValueError("rho0 must be supported on the one-excitation manifold")

    g = tensor.gamma
    delta = energies[ip] - energies[im]
    exp_pm = g[ip, im, ip, im] - 1j * delta   # coherence rho_{+-} exponent
    exp_mp = g[im, ip, im, ip] + 1j * delta
    r_pm0, r_mp0 = rho0[ip, im], rho0[im, ip]

    def population(i_self, r_self0):
        g_self = g[i_self, i_self, i_self, i_self]
        g_from_pm = g[i_self, i_self, ip, im]
        g_from_mp = g[i_self, i_self, im, ip]
        d1 = exp_pm - g_self
        d2 = exp_mp - g_self
        bracket = (g_from_pm * r_pm0 * (np.exp(d1 * t) - 1.0) / d1
                   + g_from_mp * r_mp0 * (np.exp(d2 * t) - 1.0) / d2
                   + r_self0)
        return np.real(bracket * np.exp(g_self * t))

    return population(ip, rho0[ip, ip]), population(im, rho0[im, im])
