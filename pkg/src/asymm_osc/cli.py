"""Command-line front-end: spectra, wavefunction samples, position matrices,
beat signals and density comparisons as CSV or JSON, with optional figures."""

import json
import math
import os
import sys

import click

from . import plotting
from .classical import classical_density, match_energy
from .errors import AsymmOscError
from .observables import beat_signal, x_matrix
from .spectrum import OscillatorConfig, solve_spectrum
from .wavefun import (QuadratureSettings, build_eigenfunction, density_grid)

_CONVENTIONS = {"eq6-scale": "eq6", "sec4-scale": "sec4"}

# config-file / RunConfig keys with their parsers; anything else is rejected
_CONFIG_PARSERS = {
    "s": float,
    "omega_plus": float,
    "convention": str,
    "format": str,
    "rel_tol": float,
    "abs_tol": float,
    "max_subdivisions": int,
    "tail_cut": float,
}

_DEFAULTS = {
    "s": None,
    "omega_plus": 1.0,
    "convention": "eq6-scale",
    "format": "csv",
    "rel_tol": 1e-10,
    "abs_tol": 1e-12,
    "max_subdivisions": 4000,
    "tail_cut": 1e-14,
}


def _load_config_file(path):
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise click.UsageError(
                    f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if key not in _CONFIG_PARSERS:
                raise click.UsageError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                values[key] = _CONFIG_PARSERS[key](value)
            except ValueError:
                raise click.UsageError(
                    f"{path}:{lineno}: bad value {value!r} for {key}")
    return values


def _resolve(command, config_path, flags):
    """Merge defaults < config file < explicit flags into a RunConfig dict."""
    run = dict(_DEFAULTS)
    path = config_path or os.environ.get("ASYMM_OSC_CONFIG")
    if path:
        run.update(_load_config_file(path))
    run.update({k: v for k, v in flags.items() if v is not None})
    run["command"] = command
    if run["s"] is None:
        raise click.UsageError("missing frequency ratio: pass --s (or set "
                               "s= in the config file)")
    if run["s"] < 1.0:
        raise click.UsageError(
            f"s={run['s']} is below 1; swap the two frequencies so that "
            "s = omega_+/omega_- >= 1")
    if run["omega_plus"] <= 0.0:
        raise click.UsageError("omega_plus must be positive")
    if run["convention"] not in _CONVENTIONS:
        raise click.UsageError(
            f"unknown convention {run['convention']!r}; choose from "
            + "/".join(_CONVENTIONS))
    if run["format"] not in ("csv", "json"):
        raise click.UsageError("format must be csv or json")
    return run


def _settings(run):
    return QuadratureSettings(rel_tol=run["rel_tol"], abs_tol=run["abs_tol"],
                              max_subdivisions=run["max_subdivisions"],
                              tail_cut=run["tail_cut"])


def _osc(run):
    return OscillatorConfig(s=run["s"], omega_plus=run["omega_plus"])


def _fmt(value):
    if value is None:
        return ""
    return f"{value:.9g}"


_CONFIG_ORDER = ("command", "s", "omega_plus", "convention", "format",
                 "rel_tol", "abs_tol", "max_subdivisions", "tail_cut")


def _emit(run, columns, rows, meta, output):
    config = {key: run[key] for key in _CONFIG_ORDER}
    if run["format"] == "json":
        payload = {"config": config, "columns": list(columns),
                   "rows": [list(r) for r in rows]}
        if meta:
            payload["meta"] = dict(meta)
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [",".join(columns)]
        # provenance as comment lines after the mandatory header row
        for key, value in config.items():
            lines.append(f"# {key}={value}")
        for key, value in (meta or {}).items():
            lines.append(f"# {key}={_fmt(value) if isinstance(value, float) else value}")
        for row in rows:
            lines.append(",".join(_fmt(v) for v in row))
        text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _common(func):
    for option in (
        click.option("--s", type=float, default=None,
                     help="Frequency ratio omega_+/omega_- (>= 1)."),
        click.option("--omega-plus", "omega_plus", type=float, default=None,
                     help="Right-side frequency (default 1)."),
        click.option("--convention",
                     type=click.Choice(sorted(_CONVENTIONS)), default=None,
                     help="Argument scale of the eigenfunctions."),
        click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
                     default=None, help="Output format (default csv)."),
        click.option("--config", "config_path",
                     type=click.Path(exists=True, dir_okay=False),
                     default=None,
                     help="key=value config file (or $ASYMM_OSC_CONFIG)."),
        click.option("--output", type=click.Path(dir_okay=False), default=None,
                     help="Write the table here instead of stdout."),
        click.option("--plot", "plot_path", type=click.Path(dir_okay=False),
                     default=None, help="Also render a figure to this file."),
    ):
        func = option(func)
    return func


def _run_flags(s, omega_plus, convention, fmt):
    return {"s": s, "omega_plus": omega_plus, "convention": convention,
            "format": fmt}


@click.group()
def main():
    """Asymmetric quantum harmonic oscillator toolkit."""


@main.command()
@_common
@click.option("--count", type=int, required=True,
              help="Number of eigenvalues, lowest first.")
def spectrum(s, omega_plus, convention, fmt, config_path, output, plot_path,
             count):
    """Lowest eigenvalues nu_+, nu_-, E with glued-Hermite flags."""
    if count < 1:
        raise click.UsageError("count must be >= 1")
    run = _resolve("spectrum", config_path,
                   _run_flags(s, omega_plus, convention, fmt))
    try:
        records = solve_spectrum(_osc(run), count)
    except AsymmOscError as exc:
        raise click.ClickException(str(exc))
    rows = [(r.n, r.nu_plus, r.nu_minus, r.energy, int(r.glued_hermite))
            for r in records]
    _emit(run, ("n", "nu_plus", "nu_minus", "energy", "glued"), rows, {},
          output)
    if plot_path:
        plotting.plot_spectrum(records, plot_path)


@main.command()
@_common
@click.option("--n", type=int, required=True, help="State index (0-based).")
@click.option("--xmin", type=float, required=True)
@click.option("--xmax", type=float, required=True)
@click.option("--samples", type=int, required=True)
def wavefunction(s, omega_plus, convention, fmt, config_path, output,
                 plot_path, n, xmin, xmax, samples):
    """Samples (x, psi, density) of the normalized eigenfunction n."""
    if n < 0:
        raise click.UsageError("n must be >= 0")
    if samples < 2:
        raise click.UsageError("samples must be >= 2")
    if not xmin < xmax:
        raise click.UsageError("xmin must be below xmax")
    run = _resolve("wavefunction", config_path,
                   _run_flags(s, omega_plus, convention, fmt))
    try:
        record = solve_spectrum(_osc(run), n + 1)[n]
        psi = build_eigenfunction(_osc(run), record,
                                  _CONVENTIONS[run["convention"]],
                                  _settings(run))
        grid = density_grid(psi, xmin, xmax, samples)
    except AsymmOscError as exc:
        raise click.ClickException(str(exc))
    rows = [(x, psi(x), d) for x, d in grid]
    meta = {"n": n, "nu_plus": record.nu_plus, "nu_minus": record.nu_minus,
            "energy": record.energy, "norm": psi.norm}
    _emit(run, ("x", "psi", "density"), rows, meta, output)
    if plot_path:
        plotting.plot_wavefunction(rows, plot_path)


@main.command()
@_common
@click.option("--size", type=int, required=True,
              help="Dimension of the position matrix.")
def xmatrix(s, omega_plus, convention, fmt, config_path, output, plot_path,
            size):
    """Entries (i, j, value) of the size x size position matrix."""
    if size < 1:
        raise click.UsageError("size must be >= 1")
    run = _resolve("xmatrix", config_path,
                   _run_flags(s, omega_plus, convention, fmt))
    try:
        matrix = x_matrix(_osc(run), size, _CONVENTIONS[run["convention"]],
                          _settings(run))
    except AsymmOscError as exc:
        raise click.ClickException(str(exc))
    rows = [(i, j, matrix[i, j]) for i in range(size) for j in range(size)]
    _emit(run, ("i", "j", "value"), rows, {"size": size}, output)
    if plot_path:
        plotting.plot_xmatrix(matrix, plot_path)


@main.command()
@_common
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--t-max", "t_max", type=float, required=True)
@click.option("--steps", type=int, required=True)
def beats(s, omega_plus, convention, fmt, config_path, output, plot_path,
          n, k, t_max, steps):
    """Mean position of the equal superposition of states n and k."""
    if n < 0 or k < 0:
        raise click.UsageError("n and k must be >= 0")
    if n == k:
        raise click.UsageError("beats need two distinct states (n != k)")
    if t_max <= 0.0:
        raise click.UsageError("t-max must be positive")
    if steps < 2:
        raise click.UsageError("steps must be >= 2")
    run = _resolve("beats", config_path,
                   _run_flags(s, omega_plus, convention, fmt))
    try:
        signal = beat_signal(_osc(run), n, k, t_max, steps, _settings(run),
                             _CONVENTIONS[run["convention"]])
    except AsymmOscError as exc:
        raise click.ClickException(str(exc))
    meta = {"n": n, "k": k, "center": signal.center,
            "amplitude": signal.amplitude, "frequency": signal.frequency}
    _emit(run, ("t", "mean_x"), signal.samples, meta, output)
    if plot_path:
        plotting.plot_beats(signal, plot_path)


@main.command("compare-density")
@_common
@click.option("--n", type=int, required=True)
@click.option("--samples", type=int, required=True)
def compare_density(s, omega_plus, convention, fmt, config_path, output,
                    plot_path, n, samples):
    """Quantum vs classical position density at the same energy."""
    if n < 0:
        raise click.UsageError("n must be >= 0")
    if samples < 2:
        raise click.UsageError("samples must be >= 2")
    run = _resolve("compare-density", config_path,
                   _run_flags(s, omega_plus, convention, fmt))
    try:
        osc = _osc(run)
        record = solve_spectrum(osc, n + 1)[n]
        psi = build_eigenfunction(osc, record,
                                  _CONVENTIONS[run["convention"]],
                                  _settings(run))
        state = match_energy(osc, record.energy)
        # span 1.15x the classical turning points
        x_lo, x_hi = -1.15 * state.amplitude_left, 1.15 * state.amplitude_right
        rows = []
        for x, q in density_grid(psi, x_lo, x_hi, samples):
            inside = -state.amplitude_left < x < state.amplitude_right
            c = classical_density(state, x) if inside else None
            rows.append((x, q, c))
    except AsymmOscError as exc:
        raise click.ClickException(str(exc))
    meta = {"n": n, "energy": record.energy,
            "amplitude_right": state.amplitude_right,
            "amplitude_left": state.amplitude_left, "period": state.period}
    _emit(run, ("x", "quantum_density", "classical_density"), rows, meta,
          output)
    if plot_path:
        plotting.plot_compare_density(rows, plot_path)


if __name__ == "__main__":
    main()
