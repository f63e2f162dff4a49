"""Jaynes-Cummings Hamiltonian, dressed eigenbasis and operator matrix elements.

The atom-cavity system is a single bosonic mode of frequency ``omega_c``
coupled to a two-level atom of splitting ``omega_0`` under the rotating
wave approximation,

    H = omega_c a'a + (omega_0 / 2) sigma_z + coupling (a' sigma- + a sigma+).

All routines work at resonance (``omega_c == omega_0``), where the
excited eigenstates organize into doublets

    |n,+-> = (+-|n;g> + |n-1;e>) / sqrt(2),
    E(n,+-) = (n - 1/2) omega_c +- coupling sqrt(n),

on top of the product ground state |G> = |0;g> with energy -omega_c/2.
The Hilbert space is truncated by excitation number: manifolds 0..n_max
are kept complete, so the basis has 2 n_max + 1 levels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import ConfigurationError

# Relative slack when testing omega_c == omega_0; generous to arithmetic
# noise, still rejects any physical detuning.
_RESONANCE_RTOL = 1e-12


@dataclass(frozen=True)
class SystemParams:
    """Configuration of the atom-cavity system.

    Parameters
    ----------
    omega_c : float
        Cavity mode frequency (sets the unit scale, must be positive).
    omega_0 : float
        Atomic transition frequency (must be positive).
    coupling : float
        Atom-cavity coupling strength, non-negative.
    n_max : int
        Photon-number truncation. Manifolds with up to ``n_max``
        excitations are retained, so at least one doublet exists.
    """

    omega_c: float
    omega_0: float
    coupling: float
    n_max: int = 3

    def __post_init__(self):
        if self.omega_c <= 0 or self.omega_0 <= 0:
            raise ConfigurationError("omega_c and omega_0 must be positive")
        if self.coupling < 0:
            raise ConfigurationError("coupling must be non-negative")
        if not isinstance(self.n_max, (int, np.integer)) or self.n_max < 1:
            raise ConfigurationError("n_max must be an integer >= 1")

    @property
    def is_resonant(self) -> bool:
        scale = max(self.omega_c, self.omega_0)
        return abs(self.omega_c - self.omega_0) <= _RESONANCE_RTOL * scale

    @property
    def dim(self) -> int:
        """Number of retained levels, 2 n_max + 1."""
        return 2 * self.n_max + 1


def _require_resonance(params: SystemParams):
    if not params.is_resonant:
        raise ConfigurationError(
            "only the resonant case omega_c == omega_0 is supported "
            f"(got omega_c={params.omega_c}, omega_0={params.omega_0})"
        )


def dressed_energies(params: SystemParams, n: int) -> tuple[float, float]:
    """Energies (E_plus, E_minus) of the n-excitation doublet.

    Requires resonance and 1 <= n <= n_max.
    """
    _require_resonance(params)
    if not 1 <= n <= params.n_max:
        raise ValueError(f"n={n} outside the retained range 1..{params.n_max}")
    center = (n - 0.5) * params.omega_c
    split = params.coupling * np.sqrt(n)
    return center + split, center - split


def product_operators(n_max: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Annihilation, atomic lowering and sigma_z matrices in the product basis.

    The product basis is ordered Fock-major: index 2n + s with s = 0 for
    |n;g> and s = 1 for |n;e>, n = 0..n_max.
    """
    a_fock = np.diag(np.sqrt(np.arange(1.0, n_max + 1)), 1)
    eye_f = np.eye(n_max + 1)
    a = np.kron(a_fock, np.eye(2))
    sm = np.kron(eye_f, np.array([[0.0, 1.0], [0.0, 0.0]]))
    sz = np.kron(eye_f, np.diag([-1.0, 1.0]))
    return a, sm, sz


def product_hamiltonian(params: SystemParams) -> np.ndarray:
    """Full truncated Hamiltonian in the product basis."""
    a, sm, sz = product_operators(params.n_max)
    return (params.omega_c * a.conj().T @ a
            + 0.5 * params.omega_0 * sz
            + params.coupling * (a.conj().T @ sm + sm.conj().T @ a))


@dataclass(eq=False)
class DressedBasis:
    """Eigenbasis of the resonant Jaynes-Cummings Hamiltonian.

    Attributes
    ----------
    params : SystemParams
        The configuration the basis was built from.
    labels : list of str
        Level names, ordered ground first and then by manifold:
        ``["G", "1-", "1+", "2-", "2+", ...]``. With zero coupling the
        doublets degenerate and the levels are the product states
        themselves, labelled e.g. ``"1g"`` and ``"0e"``.
    energies : ndarray
        Eigenenergies in label order.
    vectors : ndarray, shape (2 (n_max + 1), dim)
        Columns hold the level coefficients over the product basis.
        The sign convention is fixed to |n,-> = (-|n;g> + |n-1;e>)/sqrt(2).
    op_a, op_sm : ndarray, shape (dim, dim)
        Matrix elements <i|a|j> and <i|sigma-|j> between the levels.
    """

    params: SystemParams
    labels: list[str]
    energies: np.ndarray
    vectors: np.ndarray
    op_a: np.ndarray
    op_sm: np.ndarray
    _index: dict = field(repr=False, default=None)

    def __post_init__(self):
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        for arr in (self.energies, self.vectors, self.op_a, self.op_sm):
            arr.flags.writeable = False

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no level {label!r}; have {self.labels}") from None

    def ket(self, label: str) -> np.ndarray:
        """Coefficient vector of a named level (trivially one-hot)."""
        out = np.zeros(self.size, dtype=complex)
        out[self.index(label)] = 1.0
        return out

    def product_ket(self, n: int, excited: bool) -> np.ndarray:
        """Product state |n; g or e> expanded over the retained levels.

        Raises when the state lies outside the retained manifolds (the
        top product state |n_max; e> carries n_max + 1 excitations).
        """
        n_exc = n + (1 if excited else 0)
        if not 0 <= n <= self.params.n_max or n_exc > self.params.n_max:
            raise ValueError(f"product state |{n};{'e' if excited else 'g'}> "
                             "is outside the retained manifolds")
        prod = np.zeros(self.vectors.shape[0])
        prod[2 * n + (1 if excited else 0)] = 1.0
        return self.vectors.T.conj() @ prod

    def number_operator(self) -> np.ndarray:
        """Photon number a'a between the levels."""
        return self.op_a.conj().T @ self.op_a

    def excited_projector(self) -> np.ndarray:
        """Atomic excited-state population |e><e| between the levels."""
        return self.op_sm.conj().T @ self.op_sm


def build_dressed_basis(params: SystemParams) -> DressedBasis:
    """Construct the dressed eigenbasis and exact operator matrix elements.

    The coefficients are written down analytically rather than obtained
    from a numerical eigensolver, which pins the sign convention of the
    antisymmetric states. Matrix elements are exact projections of the
    product-basis operators onto the retained levels; since a and sigma-
    only lower the excitation number, no truncation error enters them.
    """
    _require_resonance(params)
    n_max = params.n_max
    dim = params.dim
    dim_prod = 2 * (n_max + 1)

    vectors = np.zeros((dim_prod, dim))
    energies = np.zeros(dim)
    labels = ["G"]
    vectors[0, 0] = 1.0
    energies[0] = -0.5 * params.omega_c

    s2 = 1.0 / np.sqrt(2.0)
    for n in range(1, n_max + 1):
        lo, hi = 2 * n - 1, 2 * n
        e_plus, e_minus = dressed_energies(params, n)
        energies[lo], energies[hi] = e_minus, e_plus
        ix_g, ix_e = 2 * n, 2 * (n - 1) + 1
        if params.coupling > 0:
            vectors[ix_g, lo], vectors[ix_e, lo] = -s2, s2
            vectors[ix_g, hi], vectors[ix_e, hi] = s2, s2
            labels += [f"{n}-", f"{n}+"]
        else:
            # Degenerate manifold: keep the product states themselves.
            vectors[ix_g, lo] = 1.0
            vectors[ix_e, hi] = 1.0
            labels += [f"{n}g", f"{n - 1}e"]

    a_prod, sm_prod, _ = product_operators(n_max)
    op_a = vectors.T @ a_prod @ vectors
    op_sm = vectors.T @ sm_prod @ vectors
    return DressedBasis(params=params, labels=labels, energies=energies,
                        vectors=vectors, op_a=op_a, op_sm=op_sm)


@dataclass(eq=False)
class OscillatorLevels:
    """Spectrum of two resonant coupled oscillators.

    ``energies[i]`` belongs to the normal-mode occupation ``labels[i] =
    (m1, m2)`` with energy m1 (omega + coupling) + m2 (omega - coupling).
    """

    energies: np.ndarray
    labels: list[tuple[int, int]]

    def __post_init__(self):
        self.energies.flags.writeable = False


def coupled_oscillator_levels(omega: float, coupling: float,
                              m_max: int) -> OscillatorLevels:
    """Energy ladder of two coupled resonant harmonic oscillators.

    Valid below the instability threshold ``coupling < omega``; each
    normal-mode occupation runs over 0..m_max. Levels are returned
    sorted ascending.
    """
    if m_max < 0:
        raise ValueError("m_max must be non-negative")
    if coupling >= omega:
        raise ConfigurationError(
            f"coupling {coupling} >= omega {omega}: the lower normal mode "
            "is unstable")
    pairs = [(m1, m2) for m1 in range(m_max + 1) for m2 in range(m_max + 1)]
    energies = np.array([m1 * (omega + coupling) + m2 * (omega - coupling)
                         for m1, m2 in pairs])
    order = np.argsort(energies, kind="stable")
    return OscillatorLevels(energies=energies[order],
                            labels=[pairs[i] for i in order])
