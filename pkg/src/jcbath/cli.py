"""Command-line front end: config parsing, run orchestration, CSV output.

Configs are flat ``key = value`` text files with section-prefixed keys
(``system.omega_c = 1.0``); unknown keys are rejected. Every emitted
CSV starts with a comment line echoing the fully resolved configuration
followed by a header row; numbers are written with 15 significant
digits so identical configs reproduce byte-identical files.

Subcommands: ``decay`` (relaxation curves per engine), ``quasidark``
(trapped-state evolution at zero coupling), ``spectrum`` (probe sweep
with and without channel interference), ``oracle-compare`` (master
equation against the exact discretized-bath evolution).
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

import numpy as np

from .bath import SpectralDensity, discretize, ohmic_j
from .drive import transmission_spectrum
from .exceptions import ConfigurationError
from .jc import SystemParams, build_dressed_basis
from .master import (build_rate_tensor, evolve, evolve_traditional,
                     steady_expectations_analytic)
from .oracle import SingleExcitationState, exact_evolve, iteration_solution

# Defaults reproduce the reference parameter point used throughout:
# resonant unit-frequency system, coupling 0.1, Ohmic baths
# (0.002, 5) and (0.001, 8), probe amplitude 0.005.
_DEFAULTS: dict[str, object] = {
    "system.omega_c": 1.0,
    "system.omega_0": 1.0,
    "system.lambda": 0.1,
    "system.n_max": 3,
    "bath1.alpha": 0.002,
    "bath1.omega_cutoff": 5.0,
    "bath2.alpha": 0.001,
    "bath2.omega_cutoff": 8.0,
    "drive.eta": 0.005,
    "drive.omega_d_min": 0.8,
    "drive.omega_d_max": 1.2,
    "drive.points": 401,
    "oracle.delta_omega": 5e-4,
    "oracle.omega_max": 4.0,
    "run.t_max": None,
    "run.t_points": 2001,
    "run.out": "out",
    "run.interference": True,
    "run.engines": "common-bath,traditional,no-interference,exact",
    "run.initial": "1g",
    "run.workers": 1,
}

_INT_KEYS = {"system.n_max", "drive.points", "run.t_points", "run.workers"}
_BOOL_KEYS = {"run.interference"}
_STR_KEYS = {"run.out", "run.engines", "run.initial"}

ENGINES = ("common-bath", "traditional", "no-interference", "exact", "iteration")

# Default evolution windows when run.t_max is left unset.
_T_MAX_DEFAULT = {"decay": 200.0, "quasidark": 2000.0, "spectrum": 200.0,
                  "oracle-compare": 200.0}


def _parse_value(key: str, raw: str):
    raw = raw.strip()
    if key in _STR_KEYS:
        return raw
    if key in _BOOL_KEYS:
        low = raw.lower()
        if low in ("true", "yes", "1", "on"):
            return True
        if low in ("false", "no", "0", "off"):
            return False
        raise ConfigurationError(f"{key}: expected a boolean, got {raw!r}")
    try:
        return int(raw) if key in _INT_KEYS else float(raw)
    except ValueError:
        raise ConfigurationError(f"{key}: cannot parse {raw!r}") from None


class ExperimentConfig:
    """Validated key-value configuration with typed accessors."""

    def __init__(self, values: dict[str, object] | None = None):
        self.values = dict(_DEFAULTS)
        if values:
            for key, val in values.items():
                if key not in _DEFAULTS:
                    raise ConfigurationError(f"unknown config key {key!r}")
                self.values[key] = val

    @classmethod
    def load(cls, path: str | Path) -> "ExperimentConfig":
        values: dict[str, object] = {}
        for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigurationError(f"{path}:{lineno}: expected 'key = value'")
            key, raw = (part.strip() for part in line.split("=", 1))
            if key not in _DEFAULTS:
                raise ConfigurationError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = _parse_value(key, raw)
        return cls(values)

    def system(self) -> SystemParams:
        return SystemParams(omega_c=self.values["system.omega_c"],
                            omega_0=self.values["system.omega_0"],
                            coupling=self.values["system.lambda"],
                            n_max=self.values["system.n_max"])

    def bath1(self) -> SpectralDensity:
        return SpectralDensity(self.values["bath1.alpha"],
                               self.values["bath1.omega_cutoff"])

    def bath2(self) -> SpectralDensity:
        return SpectralDensity(self.values["bath2.alpha"],
                               self.values["bath2.omega_cutoff"])

    def engines(self) -> list[str]:
        names = [e.strip() for e in str(self.values["run.engines"]).split(",")
                 if e.strip()]
        for name in names:
            if name not in ENGINES:
                raise ConfigurationError(
                    f"unknown engine {name!r}; choose from {', '.join(ENGINES)}")
        return names

    def resolve_t_max(self, subcommand: str) -> float:
        t_max = self.values["run.t_max"]
        if t_max is None:
            t_max = _T_MAX_DEFAULT[subcommand]
            self.values["run.t_max"] = t_max
        return float(t_max)

    def t_grid(self) -> np.ndarray:
        t_max = float(self.values["run.t_max"])
        if t_max < 0:
            raise ConfigurationError("run.t_max must be non-negative")
        if t_max == 0:
            return np.array([0.0])
        return np.linspace(0.0, t_max, int(self.values["run.t_points"]))

    def omega_d_grid(self) -> np.ndarray:
        return np.linspace(self.values["drive.omega_d_min"],
                           self.values["drive.omega_d_max"],
                           int(self.values["drive.points"]))

    def out_dir(self) -> Path:
        return Path(str(self.values["run.out"]))

    def echo(self) -> str:
        def fmt(val):
            if isinstance(val, bool):
                return "true" if val else "false"
            return str(val)
        return " ".join(f"{k}={fmt(self.values[k])}" for k in _DEFAULTS
                        if self.values[k] is not None)


def _write_csv(path: Path, columns: dict[str, np.ndarray], echo: str) -> Path:
    names = list(columns)
    arrays = [np.asarray(columns[name], dtype=float) for name in names]
    length = len(arrays[0])
    with open(path, "w") as fh:
        fh.write(f"# config: {echo}\n")
        fh.write(",".join(names) + "\n")
        for i in range(length):
            fh.write(",".join(f"{arr[i]:.14e}" for arr in arrays) + "\n")
    return path


def _initial_density(basis, initial: str) -> np.ndarray:
    if initial == "1g":
        ket = basis.product_ket(1, excited=False)
    elif initial == "0e":
        ket = basis.product_ket(0, excited=True)
    elif initial in basis.labels:
        ket = basis.ket(initial)
    else:
        raise ConfigurationError(f"unknown initial state {initial!r}")
    return np.outer(ket, ket.conj())


def _trajectory_columns(traj) -> dict[str, np.ndarray]:
    cols = {"t": traj.times, "photon": traj.observables["photon"],
            "excited": traj.observables["excited"]}
    if "pop_1+" in traj.observables:
        cols["rho_1p1p"] = traj.observables["pop_1+"]
        cols["rho_1m1m"] = traj.observables["pop_1-"]
    return cols


def _exact_initial(initial: str, n_modes: int) -> SingleExcitationState:
    s2 = 1.0 / np.sqrt(2.0)
    table = {"1g": (1.0, 0.0), "0e": (0.0, 1.0),
             "1+": (s2, s2), "1-": (-s2, s2)}
    if initial not in table:
        raise ConfigurationError(
            f"exact engine cannot prepare initial state {initial!r}")
    c_cav, c_atom = table[initial]
    return SingleExcitationState.system(c_cav, c_atom, n_modes)


def run_decay(config: ExperimentConfig) -> list[Path]:
    """Relaxation curves for every selected engine, one CSV each."""
    config.resolve_t_max("decay")
    params = config.system()
    j1, j2 = config.bath1(), config.bath2()
    basis = build_dressed_basis(params)
    t_grid = config.t_grid()
    initial = str(config.values["run.initial"])
    out = config.out_dir()
    out.mkdir(parents=True, exist_ok=True)
    echo = config.echo()
    interference = bool(config.values["run.interference"])

    files = []
    for engine in config.engines():
        if engine == "common-bath":
            tensor = build_rate_tensor(basis, j1, j2, interference=interference)
            traj = evolve(_initial_density(basis, initial), tensor,
                          basis.energies, t_grid)
            cols = _trajectory_columns(traj)
        elif engine == "no-interference":
            tensor = build_rate_tensor(basis, j1, j2, interference=False)
            traj = evolve(_initial_density(basis, initial), tensor,
                          basis.energies, t_grid)
            cols = _trajectory_columns(traj)
        elif engine == "traditional":
            traj = evolve_traditional(_initial_density(basis, initial), params,
                                      ohmic_j(j1, params.omega_c),
                                      ohmic_j(j2, params.omega_0),
                                      t_grid, basis=basis)
            cols = _trajectory_columns(traj)
        elif engine == "exact":
            bath = discretize(j1, j2, config.values["oracle.delta_omega"],
                              config.values["oracle.omega_max"])
            series = exact_evolve(params, bath,
                                  _exact_initial(initial, bath.n_modes), t_grid)
            cols = {"t": series["t"], "photon": series["photon"],
                    "excited": series["excited"]}
            if "pop_1+" in series:
                cols["rho_1p1p"] = series["pop_1+"]
                cols["rho_1m1m"] = series["pop_1-"]
        elif engine == "iteration":
            tensor = build_rate_tensor(basis, j1, j2, interference=interference)
            rho_pp, rho_mm = iteration_solution(
                tensor, basis.energies, _initial_density(basis, initial), t_grid)
            cols = {"t": t_grid, "rho_1p1p": rho_pp, "rho_1m1m": rho_mm}
        files.append(_write_csv(out / f"decay_{engine.replace('-', '_')}.csv",
                                cols, echo))
    return files


def run_quasidark(config: ExperimentConfig) -> list[Path]:
    """Trapped-state evolution at zero coupling for both initial arms."""
    config.resolve_t_max("quasidark")
    base = config.system()
    # This run probes the uncoupled system regardless of system.lambda.
    params = SystemParams(base.omega_c, base.omega_0, 0.0, base.n_max)
    config.values["system.lambda"] = 0.0
    j1, j2 = config.bath1(), config.bath2()
    j1_value = ohmic_j(j1, params.omega_c)
    j2_value = ohmic_j(j2, params.omega_0)
    basis = build_dressed_basis(params)
    tensor = build_rate_tensor(basis, j1, j2,
                               interference=bool(config.values["run.interference"]))
    t_grid = config.t_grid()
    out = config.out_dir()
    out.mkdir(parents=True, exist_ok=True)
    echo = config.echo()

    files = []
    summary = []
    for initial in ("1g", "0e"):
        traj = evolve(_initial_density(basis, initial), tensor,
                      basis.energies, t_grid)
        files.append(_write_csv(
            out / f"quasidark_{initial}.csv",
            {"t": traj.times, "photon": traj.observables["photon"],
             "excited": traj.observables["excited"]}, echo))
        photon_ref, excited_ref = steady_expectations_analytic(
            j1_value, j2_value, initial)
        for name, final, ref in (("photon", traj.observables["photon"][-1], photon_ref),
                                 ("excited", traj.observables["excited"][-1], excited_ref)):
            summary.append(f"initial={initial} {name}={final:.10e} "
                           f"analytic={ref:.10e} deviation={abs(final - ref):.3e}")
    summary_path = out / "quasidark_summary.txt"
    summary_path.write_text("\n".join(summary) + "\n")
    for line in summary:
        print(line)
    files.append(summary_path)
    return files


def run_spectrum(config: ExperimentConfig) -> list[Path]:
    """Probe-frequency sweep with and without channel interference."""
    params = config.system()
    eta = float(config.values["drive.eta"])
    if eta <= 0:
        raise ConfigurationError("spectrum requires drive.eta > 0")
    grid = config.omega_d_grid()
    workers = int(config.values["run.workers"])
    out = config.out_dir()
    out.mkdir(parents=True, exist_ok=True)
    echo = config.echo()

    files = []
    summary = []
    for flag, tag in ((True, "on"), (False, "off")):
        result = transmission_spectrum(params, config.bath1(), config.bath2(),
                                       eta, grid, interference=flag,
                                       workers=workers if workers > 1 else None)
        files.append(_write_csv(out / f"spectrum_interference_{tag}.csv",
                                {"omega_d": result.omega_d,
                                 "photon": result.photon}, echo))
        if not result.peaks:
            warnings.warn(f"no spectral peaks found (interference {tag})",
                          stacklevel=2)
            summary.append(f"interference={tag} peaks=none")
            continue
        peaks_txt = " ".join(f"({pos:.6f},{height:.6e})"
                             for pos, height in result.peaks)
        ratio_txt = ("none" if result.asymmetry_ratio is None
                     else f"{result.asymmetry_ratio:.6f}")
        summary.append(f"interference={tag} peaks={peaks_txt} "
                       f"asymmetry_ratio={ratio_txt}")
    summary_path = out / "spectrum_summary.txt"
    summary_path.write_text("\n".join(summary) + "\n")
    for line in summary:
        print(line)
    files.append(summary_path)
    return files


def run_oracle_compare(config: ExperimentConfig) -> list[Path]:
    """Master-equation curve against the exact discretized-bath evolution."""
    config.resolve_t_max("oracle-compare")
    params = config.system()
    j1, j2 = config.bath1(), config.bath2()
    basis = build_dressed_basis(params)
    tensor = build_rate_tensor(basis, j1, j2,
                               interference=bool(config.values["run.interference"]))
    t_grid = config.t_grid()
    initial = str(config.values["run.initial"])
    out = config.out_dir()
    out.mkdir(parents=True, exist_ok=True)
    echo = config.echo()

    traj = evolve(_initial_density(basis, initial), tensor, basis.energies, t_grid)
    bath = discretize(j1, j2, config.values["oracle.delta_omega"],
                      config.values["oracle.omega_max"])
    series = exact_evolve(params, bath, _exact_initial(initial, bath.n_modes),
                          t_grid)

    files = [
        _write_csv(out / "oracle_master.csv", _trajectory_columns(traj), echo),
        _write_csv(out / "oracle_exact.csv",
                   {"t": series["t"], "photon": series["photon"],
                    "excited": series["excited"]}, echo),
    ]
    max_dev = float(np.abs(series["photon"] - traj.observables["photon"]).max())
    line = f"max_photon_deviation={max_dev:.6e}"
    summary_path = out / "oracle_summary.txt"
    summary_path.write_text(line + "\n")
    print(line)
    files.append(summary_path)
    return files


_RUNNERS = {"decay": run_decay, "quasidark": run_quasidark,
            "spectrum": run_spectrum, "oracle-compare": run_oracle_compare}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jcbath",
        description="Common-bath atom-cavity dissipation runs")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, runner in _RUNNERS.items():
        p = sub.add_parser(name, help=runner.__doc__.splitlines()[0].lower())
        p.add_argument("--config", help="key = value configuration file")
        p.add_argument("--out", help="output directory (overrides run.out)")
        p.add_argument("--engine", choices=ENGINES,
                       help="restrict decay to a single engine")
        p.add_argument("--no-interference", action="store_true",
                       help="drop the cross-channel terms "
                            "(sets run.interference = false)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = (ExperimentConfig.load(args.config) if args.config
                  else ExperimentConfig())
        if args.out:
            config.values["run.out"] = args.out
        if args.engine:
            config.values["run.engines"] = args.engine
        if args.no_interference:
            config.values["run.interference"] = False
        files = _RUNNERS[args.subcommand](config)
    except Exception as exc:  # noqa: BLE001 - single-line error contract
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    for path in files:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
