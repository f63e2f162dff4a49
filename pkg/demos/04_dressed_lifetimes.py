"""Symmetric vs antisymmetric dressed-state lifetimes.

Starting from one cavity photon (an equal mix of the two doublet
states), the symmetric component rushes into the bath at the
constructively enhanced rate (sqrt(J1) + sqrt(J2))^2 while the
antisymmetric one lingers at (sqrt(J1) - sqrt(J2))^2, a factor ~50
slower here. The closed-form iteration solution for the two populations
overlays the full numerical evolution almost perfectly.
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

params = jb.SystemParams(omega_c=1.0, omega_0=1.0, coupling=0.1, n_max=3)
j1 = jb.SpectralDensity(alpha=0.002, omega_cutoff=5.0)
j2 = jb.SpectralDensity(alpha=0.001, omega_cutoff=8.0)

basis = jb.build_dressed_basis(params)
tensor = jb.build_rate_tensor(basis, j1, j2)
ket = basis.product_ket(1, excited=False)
rho0 = np.outer(ket, ket.conj())

t = np.linspace(0.0, 400.0, 1601)
traj = jb.evolve(rho0, tensor, basis.energies, t)
pp_closed, mm_closed = jb.iteration_solution(tensor, basis.energies, rho0, t)

fig, ax = plt.subplots(figsize=(7, 4.2))
ax.semilogy(t, traj.population("1+"), label="symmetric |1,+>", lw=1.4)
ax.semilogy(t, traj.population("1-"), label="antisymmetric |1,->", lw=1.4)
ax.semilogy(t[::40], pp_closed[::40], "ks", ms=3, label="closed form")
ax.semilogy(t[::40], mm_closed[::40], "ks", ms=3)
ax.set_xlabel("time  (units of 1/omega_c)")
ax.set_ylabel("population")
ax.set_ylim(1e-4, 1)
ax.legend(frameon=False)
fig.tight_layout()
fig.savefig(out_dir / "dressed_lifetimes.png", dpi=150)

# Rates from single-state preparations, fitted over three lifetimes.
expected = {
    "1+": (np.sqrt(jb.ohmic_j(j1, 1.1)) + np.sqrt(jb.ohmic_j(j2, 1.1))) ** 2,
    "1-": (np.sqrt(jb.ohmic_j(j1, 0.9)) - np.sqrt(jb.ohmic_j(j2, 0.9))) ** 2,
}
print("fitted vs interference rates:")
for label, gamma in expected.items():
    window = np.linspace(0.0, 3.0 / gamma, 901)
    start = np.outer(basis.ket(label), basis.ket(label).conj())
    single = jb.evolve(start, tensor, basis.energies, window)
    rate = jb.fit_decay_rate(window, single.population(label))
    print(f"  {label}: fit {rate:.6f}  expected {gamma:.6f}")

print(f"closed-form max deviation: "
      f"{max(np.abs(pp_closed - traj.population('1+')).max(), np.abs(mm_closed - traj.population('1-')).max()):.2e}")
print(f"wrote {out_dir / 'dressed_lifetimes.png'}")
