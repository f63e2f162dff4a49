"""Asymmetric vacuum Rabi splitting in the driven steady state.

A weak probe sweeps across the doublet while the stationary photon
number is recorded. Without channel interference the two resonances at
omega_c +- coupling come out nearly equal. With the shared bath's cross
terms on, the long-lived antisymmetric state piles up population and
its peak dwarfs the symmetric one. A faint extra bump appears between
them: the two-photon resonance into the second antisymmetric level,
observable precisely because that state is also interference-protected.
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

grid = np.linspace(0.8, 1.2, 401)
on = jb.transmission_spectrum(params, j1, j2, eta=0.005, omega_d_grid=grid,
                              interference=True)
off = jb.transmission_spectrum(params, j1, j2, eta=0.005, omega_d_grid=grid,
                               interference=False)

fig, ax = plt.subplots(figsize=(7, 4.2))
ax.semilogy(on.omega_d, on.photon, label="interference on", lw=1.4)
ax.semilogy(off.omega_d, off.photon, label="interference off", lw=1.4)
ax.set_xlabel("probe frequency")
ax.set_ylabel("steady-state photon number")
ax.legend(frameon=False)
fig.tight_layout()
fig.savefig(out_dir / "rabi_asymmetry.png", dpi=150)

for tag, result in (("on", on), ("off", off)):
    peaks = " ".join(f"({p:.4f}, {h:.4g})" for p, h in result.peaks)
    print(f"interference {tag:>3}: peaks {peaks}")
    print(f"                 lower/upper height ratio "
          f"{result.asymmetry_ratio:.3f}")
print(f"wrote {out_dir / 'rabi_asymmetry.png'}")
