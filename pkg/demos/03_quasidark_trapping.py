"""Quasi-dark trapping: the uncoupled system refuses to thermalize.

With the direct atom-cavity coupling switched off, the shared bath is
the only thing connecting the two subsystems. Destructive interference
between the two emission paths leaves the superposition

    |D> = (sqrt(J1) |0;e> - sqrt(J2) |1;g>) / sqrt(J1 + J2)

completely decoupled: the collective jump operator annihilates it. Any
initial excitation keeps its overlap with |D> forever, so the late-time
observables depend on the initial state instead of relaxing to vacuum.
"""

import sys
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import jcbath as jb

out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out_dir.mkdir(parents=True, exist_ok=True)

params = jb.SystemParams(omega_c=1.0, omega_0=1.0, coupling=0.0, n_max=3)
j1 = jb.SpectralDensity(alpha=0.002, omega_cutoff=5.0)
j2 = jb.SpectralDensity(alpha=0.001, omega_cutoff=8.0)
j1_value = jb.ohmic_j(j1, params.omega_c)
j2_value = jb.ohmic_j(j2, params.omega_0)

basis = jb.build_dressed_basis(params)
tensor = jb.build_rate_tensor(basis, j1, j2)
t = np.linspace(0.0, 2000.0, 801)

fig, axes = plt.subplots(1, 2, figsize=(9, 3.6), sharey=True)
for ax, (n, excited, name) in zip(
        axes, [(1, False, "photon arm |1;g>"), (0, True, "atom arm |0;e>")]):
    ket = basis.product_ket(n, excited=excited)
    traj = jb.evolve(np.outer(ket, ket.conj()), tensor, basis.energies, t)
    label = "1g" if not excited else "0e"
    photon_ref, excited_ref = jb.steady_expectations_analytic(
        j1_value, j2_value, label)
    ax.plot(t, traj.observables["photon"], label="photon number")
    ax.plot(t, traj.observables["excited"], label="excited population")
    ax.axhline(photon_ref, color="C0", ls=":", lw=1)
    ax.axhline(excited_ref, color="C1", ls=":", lw=1)
    ax.set_title(name)
    ax.set_xlabel("time")
    print(f"{name}: photon -> {traj.observables['photon'][-1]:.5f} "
          f"(analytic {photon_ref:.5f}), excited -> "
          f"{traj.observables['excited'][-1]:.5f} (analytic {excited_ref:.5f})")

axes[0].legend(frameon=False)
fig.tight_layout()
fig.savefig(out_dir / "quasidark_trapping.png", dpi=150)

dark = jb.dark_state(j1_value, j2_value)
print(f"dark-state weights: |<0;e|D>|^2 = {dark.amp_atom**2:.4f}, "
      f"|<1;g|D>|^2 = {dark.amp_cavity**2:.4f}")
print(f"wrote {out_dir / 'quasidark_trapping.png'}")
