"""Master equations for the atom-cavity system in a common bath.

The central object is the four-index rate tensor gamma[c, d, k, l]
entering the dressed-basis master equation

    d rho_cd / dt = -i (E_c - E_d) rho_cd + sum_kl gamma[c,d,k,l] rho_kl.

Because both subsystems emit into the same reservoir, the tensor carries
cross terms proportional to sqrt(J1 J2) in which the two decay channels
interfere. Constructive interference pushes the decay rate of the
symmetric dressed state up to (sqrt(J1) + sqrt(J2))^2 while destructive
interference pulls the antisymmetric one down to (sqrt(J1) - sqrt(J2))^2.
With the atom-cavity coupling switched off the same interference traps
part of the excitation in a quasi-dark superposition that the collective
jump operator P = sqrt(J1) a + sqrt(J2) sigma- annihilates.

Also provided: the interference-free equation with independent
dissipators for each subsystem, steady-state solvers, and the analytic
trapped-state expectation values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .bath import SpectralDensity, ohmic_j
from .exceptions import (ConfigurationError, DegenerateSteadyStateError,
                         IntegrationError)
from .jc import DressedBasis, SystemParams, build_dressed_basis

# Redfield-type generators may push eigenvalues slightly negative; below
# -EPS_POSITIVITY it is treated as a real violation.
EPS_POSITIVITY = 1e-8

# Adaptive embedded Runge-Kutta tolerances; tight enough that trace and
# Hermiticity survive to 1e-10 over windows of a few thousand time units.
_RTOL = 1e-10
_ATOL = 1e-13


# ---------------------------------------------------------------------------
# rate tensor


@dataclass(eq=False)
class RateTensor:
    """Relaxation tensor of the common-bath master equation.

    Attributes
    ----------
    gamma : ndarray, shape (dim, dim, dim, dim), complex
        Tensor indexed [c, d, k, l]; the element multiplies rho_kl in
        the equation of motion for rho_cd.
    basis : DressedBasis
        The eigenbasis the indices refer to.
    interference : bool
        Whether the sqrt(J1 J2) cross-channel terms were retained.
    """

    gamma: np.ndarray
    basis: DressedBasis
    interference: bool

    def __post_init__(self):
        self.gamma.flags.writeable = False

    def element(self, c: str, d: str, k: str, l: str) -> complex:
        """Tensor entry addressed by level labels."""
        ix = self.basis.index
        return complex(self.gamma[ix(c), ix(d), ix(k), ix(l)])


def build_rate_tensor(basis: DressedBasis, j1: SpectralDensity,
                      j2: SpectralDensity, interference: bool = True) -> RateTensor:
    """Assemble the four-index relaxation tensor over a dressed basis.

    Every term evaluates the spectral densities at the energy difference
    of the transition it mediates; densities vanish at non-positive
    frequency (zero-temperature bath), which removes all upward flow.
    With ``interference=False`` the cross-channel contributions are
    dropped and the two decay channels act independently.

    The construction preserves Hermiticity and trace exactly:
    gamma[c,d,k,l] = conj(gamma[d,c,l,k]) and sum_c gamma[c,c,k,l] = 0.
    """
    energies = basis.energies
    a = basis.op_a
    sm = basis.op_sm
    ad = a.conj().T
    sp = sm.conj().T
    dim = basis.size
    eye = np.eye(dim)

    # w[i, j] = E_i - E_j; j*_w[i, j] = J(E_i - E_j)
    w = energies[:, None] - energies[None, :]
    j1_w = ohmic_j(j1, w)
    j2_w = ohmic_j(j2, w)
    x_w = np.sqrt(j1_w * j2_w) if interference else np.zeros_like(j1_w)

    # Weighted operators; (j1_w.T * a)[n, k] = J1(w_kn) a_nk etc.
    a_j1 = j1_w.T * a
    sm_j2 = j2_w.T * sm
    sm_x = x_w.T * sm
    a_x = x_w.T * a
    ad_j1 = j1_w * ad
    sp_j2 = j2_w * sp
    ad_x = x_w * ad
    sp_x = x_w * sp

    # Sandwich parts: no index sums, products of two matrix elements.
    g2 = (np.einsum("ck,ld->cdkl", a_j1, ad)
          + np.einsum("ck,ld->cdkl", sm_j2, sp)
          + np.einsum("ck,ld->cdkl", a_x, sp)
          + np.einsum("ck,ld->cdkl", sm_x, ad))
    g4 = (np.einsum("ck,ld->cdkl", a, ad_j1)
          + np.einsum("ck,ld->cdkl", sm, sp_j2)
          + np.einsum("ck,ld->cdkl", a, sp_x)
          + np.einsum("ck,ld->cdkl", sm, ad_x))

    # Anticommutator parts: one internal level sum, one Kronecker delta.
    sum_ck = ad @ a_j1 + sp @ sm_j2 + ad @ sm_x + sp @ a_x
    sum_ld = ad_j1 @ a + sp_j2 @ sm + ad_x @ sm + sp_x @ a
    g1 = -np.einsum("ck,dl->cdkl", sum_ck, eye)
    g3 = -np.einsum("ck,ld->cdkl", eye, sum_ld)

    gamma = (g1 + g2 + g3 + g4).astype(complex)
    return RateTensor(gamma=gamma, basis=basis, interference=interference)


# ---------------------------------------------------------------------------
# generators (vectorized Liouvillians)


@dataclass(eq=False)
class LinearGenerator:
    """Vectorized generator of density-matrix evolution.

    ``matrix`` acts on density matrices flattened row-major over (c, d),
    i.e. vec(rho)[c * dim + d] = rho_cd. ``hamiltonian`` and ``jump_op``
    are kept when the generator was assembled from explicit operators.
    """

    matrix: np.ndarray
    basis: DressedBasis
    hamiltonian: np.ndarray | None = None
    jump_op: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self.basis.size

    def apply(self, rho: np.ndarray) -> np.ndarray:
        """Time derivative of a density matrix under this generator."""
        dim = self.dim
        return (self.matrix @ rho.reshape(dim * dim)).reshape(dim, dim)


def _hamiltonian_part(h: np.ndarray) -> np.ndarray:
    # Row-major vectorization: vec(A rho B) = (A kron B^T) vec(rho).
    dim = h.shape[0]
    eye = np.eye(dim)
    return -1j * (np.kron(h, eye) - np.kron(eye, h.T))


def _dissipator_part(rate: float, q: np.ndarray) -> np.ndarray:
    # Convention with an explicit factor two in the sandwich term:
    # rate * (2 q rho q' - q'q rho - rho q'q).
    dim = q.shape[0]
    eye = np.eye(dim)
    qdq = q.conj().T @ q
    return rate * (2.0 * np.kron(q, q.conj())
                   - np.kron(qdq, eye) - np.kron(eye, qdq.T))


def liouvillian(tensor: RateTensor, energies: np.ndarray | None = None,
                hamiltonian: np.ndarray | None = None) -> LinearGenerator:
    """Combine a rate tensor with a coherent part into one generator.

    By default the coherent part is the diagonal dressed Hamiltonian of
    the tensor's basis; pass ``energies`` to override the level energies
    (same basis), or a full ``hamiltonian`` matrix for driven problems.
    """
    dim = tensor.basis.size
    if hamiltonian is not None:
        h = np.asarray(hamiltonian, dtype=complex)
        unitary = _hamiltonian_part(h)
    else:
        e = tensor.basis.energies if energies is None else np.asarray(energies)
        w = e[:, None] - e[None, :]
        unitary = np.diag((-1j * w).reshape(dim * dim))
        h = np.diag(e).astype(complex)
    matrix = unitary + tensor.gamma.reshape(dim * dim, dim * dim)
    return LinearGenerator(matrix=matrix, basis=tensor.basis, hamiltonian=h)


def traditional_generator(basis: DressedBasis, j1_value: float,
                          j2_value: float) -> LinearGenerator:
    """Interference-free equation with independent cavity and atom dissipators.

    The coherent part is the full system Hamiltonian (including the
    atom-cavity coupling, diagonal in the dressed basis); each subsystem
    relaxes at the single rate its own spectral density takes at the
    bare transition frequency.
    """
    h = np.diag(basis.energies).astype(complex)
    matrix = (_hamiltonian_part(h)
              + _dissipator_part(j1_value, basis.op_a)
              + _dissipator_part(j2_value, basis.op_sm))
    return LinearGenerator(matrix=matrix, basis=basis, hamiltonian=h)


def lambda_zero_generator(basis: DressedBasis, j1_value: float,
                          j2_value: float) -> LinearGenerator:
    """Collective-jump form of the common-bath equation at zero coupling.

    With the atom-cavity coupling off, the full rate tensor collapses to
    a single dissipator built from the collective jump operator

        P = sqrt(J1) a + sqrt(J2) sigma-,

    evolving under the free Hamiltonian. Requires a basis built with
    ``coupling == 0``; anything else violates the reduction and raises.
    """
    if basis.params.coupling != 0:
        raise ConfigurationError(
            "collective-jump reduction requires coupling == 0 "
            f"(basis built with coupling={basis.params.coupling})")
    jump = np.sqrt(j1_value) * basis.op_a + np.sqrt(j2_value) * basis.op_sm
    h = np.diag(basis.energies).astype(complex)
    matrix = _hamiltonian_part(h) + _dissipator_part(1.0, jump)
    return LinearGenerator(matrix=matrix, basis=basis, hamiltonian=h,
                           jump_op=jump)


# ---------------------------------------------------------------------------
# density matrices and trajectories


def check_density_matrix(rho: np.ndarray, eps_pos: float = EPS_POSITIVITY,
                         herm_tol: float = 1e-9, trace_tol: float = 1e-9):
    """Validate Hermiticity, unit trace and positivity up to tolerances.

    Eigenvalues are allowed to dip to ``-eps_pos``; Redfield-type
    generators are not of guaranteed-positive form and tiny negative
    excursions are expected.
    """
    herm = np.abs(rho - rho.conj().T).max()
    if herm > herm_tol:
        raise ValueError(f"density matrix not Hermitian (deviation {herm:.3g})")
    tr = np.trace(rho)
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"density matrix trace {tr:.12g} != 1")
    eigs = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    if eigs.min() < -eps_pos:
        raise ValueError(f"density matrix eigenvalue {eigs.min():.3g} below "
                         f"-{eps_pos:g}")


@dataclass(eq=False)
class Trajectory:
    """Time-stamped density matrices with precomputed observable series.

    ``observables`` maps names to arrays aligned with ``times``:
    ``"photon"`` for <a'a>, ``"excited"`` for the atomic excited
    population, and ``"pop_<label>"`` for every level population.
    """

    times: np.ndarray
    states: np.ndarray
    observables: dict[str, np.ndarray]
    basis: DressedBasis

    def population(self, label: str) -> np.ndarray:
        return self.observables[f"pop_{label}"]

    def final_state(self) -> np.ndarray:
        return self.states[-1]


def _observables(states: np.ndarray, basis: DressedBasis) -> dict[str, np.ndarray]:
    n_op = basis.number_operator()
    e_op = basis.excited_projector()
    obs = {
        "photon": np.einsum("ij,tji->t", n_op, states).real,
        "excited": np.einsum("ij,tji->t", e_op, states).real,
    }
    for i, lab in enumerate(basis.labels):
        obs[f"pop_{lab}"] = states[:, i, i].real
    return obs


def _propagate(matrix: np.ndarray, rho0: np.ndarray, t_grid: np.ndarray,
               rtol: float, atol: float) -> np.ndarray:
    dim = rho0.shape[0]
    y0 = rho0.reshape(dim * dim).astype(complex)
    if len(t_grid) == 1:
        return y0.reshape(1, dim, dim).copy()
    sol = solve_ivp(lambda t, y: matrix @ y, (t_grid[0], t_grid[-1]), y0,
                    t_eval=t_grid, method="DOP853", rtol=rtol, atol=atol)
    if not sol.success:
        t_fail = sol.t[-1] if len(sol.t) else t_grid[0]
        raise IntegrationError(f"integrator failed: {sol.message}", t_fail)
    return np.ascontiguousarray(sol.y.T).reshape(len(t_grid), dim, dim)


def _check_t_grid(t_grid: np.ndarray):
    if t_grid[0] != 0 or (len(t_grid) > 1 and np.any(np.diff(t_grid) <= 0)):
        raise ValueError("t_grid must increase from 0")


def evolve_generator(rho0: np.ndarray, generator: LinearGenerator,
                     t_grid, rtol: float = _RTOL, atol: float = _ATOL) -> Trajectory:
    """Propagate a density matrix under an assembled generator."""
    t_grid = np.asarray(t_grid, dtype=float)
    _check_t_grid(t_grid)
    check_density_matrix(rho0)
    states = _propagate(generator.matrix, rho0, t_grid, rtol, atol)
    check_density_matrix(states[-1])
    return Trajectory(times=t_grid, states=states,
                      observables=_observables(states, generator.basis),
                      basis=generator.basis)


def evolve(rho0: np.ndarray, tensor: RateTensor, energies: np.ndarray,
           t_grid, rtol: float = _RTOL, atol: float = _ATOL) -> Trajectory:
    """Solve the dressed-basis master equation on a time grid.

    Parameters
    ----------
    rho0 : ndarray
        Initial density matrix in the tensor's basis.
    tensor : RateTensor
        Relaxation tensor; its basis fixes dimensions and observables.
    energies : ndarray
        Level energies for the coherent part (normally
        ``tensor.basis.energies``).
    t_grid : array-like
        Output times, increasing from 0.

    Returns
    -------
    Trajectory
        States and observable series on ``t_grid``.
    """
    return evolve_generator(rho0, liouvillian(tensor, energies=energies),
                            t_grid, rtol=rtol, atol=atol)


def evolve_traditional(rho0: np.ndarray, params: SystemParams, j1_value: float,
                       j2_value: float, t_grid, basis: DressedBasis | None = None,
                       rtol: float = _RTOL, atol: float = _ATOL) -> Trajectory:
    """Solve the interference-free master equation (independent dissipators)."""
    if basis is None:
        basis = build_dressed_basis(params)
    gen = traditional_generator(basis, j1_value, j2_value)
    return evolve_generator(rho0, gen, t_grid, rtol=rtol, atol=atol)


# ---------------------------------------------------------------------------
# quasi-dark state and steady states


@dataclass(frozen=True)
class DarkState:
    """One-excitation superposition annihilated by the collective jump operator.

    ``amp_atom`` multiplies |0;e> and ``amp_cavity`` multiplies |1;g>:

        |D> = (sqrt(J1) |0;e> - sqrt(J2) |1;g>) / sqrt(J1 + J2).
    """

    amp_atom: float
    amp_cavity: float

    def as_vector(self, basis: DressedBasis) -> np.ndarray:
        """Coefficients of the dark state over a basis's retained levels."""
        return (self.amp_atom * basis.product_ket(0, excited=True)
                + self.amp_cavity * basis.product_ket(1, excited=False))

    def density_matrix(self, basis: DressedBasis) -> np.ndarray:
        ket = self.as_vector(basis)
        return np.outer(ket, ket.conj())


def dark_state(j1_value: float, j2_value: float) -> DarkState:
    """Quasi-dark state for given channel rates.

    Both rates zero leaves the state undefined and raises.
    """
    if j1_value < 0 or j2_value < 0:
        raise ValueError("rates must be non-negative")
    total = j1_value + j2_value
    if total == 0:
        raise ConfigurationError("dark state undefined when both rates vanish")
    return DarkState(amp_atom=np.sqrt(j1_value / total),
                     amp_cavity=-np.sqrt(j2_value / total))


def steady_expectations_analytic(j1_value: float, j2_value: float,
                                 initial: str) -> tuple[float, float]:
    """Trapped-state observables (photon, excited) reached at long times.

    With the atom-cavity coupling off, an initial single excitation
    decays only through its component on the bright superposition; the
    dark component survives. ``initial`` selects the prepared arm:
    ``"1g"`` for the photon arm |1;g>, ``"0e"`` for the atomic arm |0;e>.
    """
    total = j1_value + j2_value
    if total <= 0:
        raise ValueError("at least one rate must be positive")
    if initial == "1g":
        return (j2_value ** 2 / total ** 2, j1_value * j2_value / total ** 2)
    if initial == "0e":
        return (j1_value * j2_value / total ** 2, j1_value ** 2 / total ** 2)
    raise ValueError(f"initial must be '1g' or '0e', got {initial!r}")


# Singular values below this fraction of the largest count as kernel
# directions; physical relaxation rates sit many orders above it.
_KERNEL_RTOL = 1e-12


def steady_state(generator: LinearGenerator, residual_tol: float = 1e-10) -> np.ndarray:
    """Unique stationary density matrix of a generator.

    The kernel dimension is checked first via singular values; a
    multi-dimensional kernel (several stationary states, e.g. when a
    dark state coexists with the ground state) raises
    DegenerateSteadyStateError carrying the dimension. The unique kernel
    vector is then found by replacing the first redundant row of the
    vectorized generator with the trace constraint.
    """
    mat = generator.matrix
    dim = generator.dim
    sv = np.linalg.svd(mat, compute_uv=False)
    kernel_dim = int(np.count_nonzero(sv < _KERNEL_RTOL * sv[0]))
    if kernel_dim != 1:
        raise DegenerateSteadyStateError(kernel_dim)

    # Trace preservation makes the diagonal-element rows linearly
    # dependent; row (0,0) is sacrificed for the trace-one condition.
    solve_mat = mat.copy()
    solve_mat[0, :] = np.eye(dim).reshape(dim * dim)
    rhs = np.zeros(dim * dim, dtype=complex)
    rhs[0] = 1.0
    x = np.linalg.solve(solve_mat, rhs)
    residual = np.abs(mat @ x).max()
    if residual > residual_tol:
        raise RuntimeError(f"steady-state residual {residual:.3g} exceeds "
                           f"{residual_tol:g}")
    rho = x.reshape(dim, dim)
    return 0.5 * (rho + rho.conj().T)


# ---------------------------------------------------------------------------
# analysis helpers


def fit_decay_rate(times: np.ndarray, values: np.ndarray,
                   t_max: float | None = None) -> float:
    """Exponential decay rate from a linear fit of log(values) against time.

    Restricting to ``t_max`` (typically a few expected lifetimes) keeps
    the fit in the regime where the signal is clean; the regression
    averages out small superimposed oscillations.
    """
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    if t_max is not None:
        keep = times <= t_max
        times, values = times[keep], values[keep]
    if np.any(values <= 0):
        raise ValueError("values must be positive for a log fit")
    slope = np.polyfit(times, np.log(values), 1)[0]
    return -slope
