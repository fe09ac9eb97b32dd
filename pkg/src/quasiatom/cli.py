"""Command-line interface.

    quasiatom [global options] {solve,curve-beta,curve-intersect,table,potential} [options]

Global options may also follow the subcommand.  Values come from, in order
of precedence: command-line flags, the ``--config`` JSON file (same names as
the flags, snake_case), built-in defaults.

Exit status: 0 success, 1 usage or input error, 2 numerical non-convergence.
"""
from __future__ import annotations

import argparse
import io
import json
import math
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .kinematics import yukawa_potential
from .report import (
    DEFAULT_WARN_THRESHOLD,
    compare_with_reference,
    derive_parameters,
    load_references,
    uncertainty_bundle,
)
from .solver import (
    DEFAULT_BRACKET_WIDTH,
    DEFAULT_SAMPLES,
    DEFAULT_TOLERANCE,
    NONRELATIVISTIC,
    RELATIVISTIC,
    ConvergenceError,
    figure1_curve,
    figure2_curves,
    find_bound_states,
)
from .units import make_unit_system

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2
COMMANDS = ("solve", "curve-beta", "curve-intersect", "table", "potential")

# per-command grid defaults: (lo, hi)
GRID_DEFAULTS = {
    "curve-beta": (1e-3, 1e3),
    "curve-intersect": (1e-3, 1e2),
    "potential": (1e-4, 1e-1),
}
FORMAT_DEFAULTS = {
    "solve": "json",
    "curve-beta": "csv",
    "curve-intersect": "csv",
    "table": "json",
    "potential": "csv",
}
FORMATS = {
    "solve": ("json", "csv"),
    "curve-beta": ("csv", "json"),
    "curve-intersect": ("csv", "json"),
    "table": ("json", "text", "csv"),
    "potential": ("csv", "json"),
}

# RunConfig field -> UnitSystem field
CONSTANT_FIELDS = {
    "alpha": "alpha",
    "mass_ratio": "proton_electron_mass_ratio",
    "compton_length_cm": "electron_compton_length_cm",
    "rest_energy_ev": "electron_rest_energy_ev",
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    alpha: Optional[float] = None
    mass_ratio: Optional[float] = None
    compton_length_cm: Optional[float] = None
    rest_energy_ev: Optional[float] = None
    r_min: Optional[float] = None
    r_max: Optional[float] = None
    p_min: Optional[float] = None
    p_max: Optional[float] = None
    samples: int = DEFAULT_SAMPLES
    grid_points: int = 1024
    tolerance: float = DEFAULT_TOLERANCE
    bracket_width: float = DEFAULT_BRACKET_WIDTH
    format: Optional[str] = None
    out: Optional[str] = None
    precision: int = 12
    branch: str = RELATIVISTIC
    refs: Optional[str] = None
    warn_threshold: float = DEFAULT_WARN_THRESHOLD
    photon_mass: Optional[float] = None

    def unit_overrides(self):
        return {
            unit_name: getattr(self, name)
            for name, unit_name in CONSTANT_FIELDS.items()
            if getattr(self, name) is not None
        }


CONFIG_KEYS = tuple(f.name for f in fields(RunConfig) if f.name != "command")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common_options(defaults_suppressed=True):
    parent = _Parser(add_help=False)
    kw = {"default": argparse.SUPPRESS} if defaults_suppressed else {}
    g = parent.add_argument_group("global options")
    g.add_argument("--config", metavar="PATH", help="JSON file with option values", **kw)
    g.add_argument("--alpha", type=float, help="fine-structure constant", **kw)
    g.add_argument("--mass-ratio", type=float, help="proton/electron mass ratio", **kw)
    g.add_argument("--compton-length-cm", type=float, help="hbar/(m_e c) in cm", **kw)
    g.add_argument("--rest-energy-ev", type=float, help="m_e c^2 in eV", **kw)
    g.add_argument("--format", help="output format (csv, json; table also takes text)", **kw)
    g.add_argument("--out", metavar="PATH", help="write output here instead of stdout", **kw)
    g.add_argument("--precision", type=int, help="significant digits, 6-17 (default 12)", **kw)
    g.add_argument("--tolerance", type=float, help="root tolerance on |F| (default 1e-12)", **kw)
    g.add_argument("--bracket-width", type=float, help="root bracket width (default 1e-12)", **kw)
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _Parser(prog="quasiatom", description=__doc__.splitlines()[0], parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    sup = argparse.SUPPRESS

    p = sub.add_parser("solve", parents=[common], help="both self-consistent bound states")
    p.add_argument("--grid-points", type=int, default=sup, help="beta scan points (default 1024)")

    p = sub.add_parser("curve-beta", parents=[common], help="beta versus orbit radius")
    p.add_argument("--r-min", type=float, default=sup, help="smallest radius / r_C (default 1e-3)")
    p.add_argument("--r-max", type=float, default=sup, help="largest radius / r_C (default 1e3)")
    p.add_argument("--samples", type=int, default=sup, help="grid points (default 512)")

    p = sub.add_parser("curve-intersect", parents=[common], help="orbit and uncertainty curves versus momentum")
    p.add_argument("--p-min", type=float, default=sup, help="smallest p / m_e c (default 1e-3)")
    p.add_argument("--p-max", type=float, default=sup, help="largest p / m_e c (default 1e2)")
    p.add_argument("--samples", type=int, default=sup, help="grid points (default 512)")

    p = sub.add_parser("table", parents=[common], help="derived parameters and reference deviations")
    p.add_argument("--branch", choices=(NONRELATIVISTIC, RELATIVISTIC), default=sup)
    p.add_argument("--refs", metavar="PATH", default=sup, help="reference-value JSON file")
    p.add_argument("--warn-threshold", type=float, default=sup, help="flag deviations above this (default 0.1)")
    p.add_argument("--grid-points", type=int, default=sup)

    p = sub.add_parser("potential", parents=[common], help="screened Coulomb potential samples")
    p.add_argument("--r-min", type=float, default=sup, help="smallest separation / r_C (default 1e-4)")
    p.add_argument("--r-max", type=float, default=sup, help="largest separation / r_C (default 1e-1)")
    p.add_argument("--samples", type=int, default=sup, help="grid points (default 512)")
    p.add_argument(
        "--photon-mass", type=float, default=sup,
        help="photon mass / m_e (default: that of the relativistic bound state)",
    )
    return parser


def _read_config_file(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed config file {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError(f"config file {path} must contain a JSON object")
    unknown = sorted(set(data) - set(CONFIG_KEYS))
    if unknown:
        raise UsageError(f"unknown config key(s) in {path}: {', '.join(unknown)}")
    return data


def _coerce(name, value):
    target = {f.name: f for f in fields(RunConfig)}[name]
    kind = target.type
    try:
        if value is None:
            return None
        if "int" in kind:
            if isinstance(value, bool) or (isinstance(value, float) and not value.is_integer()):
                raise ValueError
            return int(value)
        if "float" in kind:
            if isinstance(value, bool):
                raise ValueError
            return float(value)
        return str(value)
    except (TypeError, ValueError):
        raise UsageError(f"invalid value for {name}: {value!r}") from None


def _validate(cfg: RunConfig) -> RunConfig:
    fmt = cfg.format or FORMAT_DEFAULTS[cfg.command]
    if fmt not in FORMATS[cfg.command]:
        raise UsageError(f"format {fmt!r} not available for {cfg.command} (choose from {', '.join(FORMATS[cfg.command])})")
    cfg = replace(cfg, format=fmt)
    if not 6 <= cfg.precision <= 17:
        raise UsageError(f"precision must lie in [6, 17], got {cfg.precision}")
    for name in ("tolerance", "bracket_width"):
        value = getattr(cfg, name)
        if not 0.0 < value <= 1e-3:
            raise UsageError(f"{name} must lie in (0, 1e-3], got {value!r}")
    if cfg.branch not in (NONRELATIVISTIC, RELATIVISTIC):
        raise UsageError(f"branch must be {NONRELATIVISTIC} or {RELATIVISTIC}, got {cfg.branch!r}")
    if cfg.samples < 2:
        raise UsageError(f"samples must be >= 2, got {cfg.samples}")
    if cfg.grid_points < 100:
        raise UsageError(f"grid_points must be >= 100, got {cfg.grid_points}")
    if not cfg.warn_threshold > 0.0:
        raise UsageError(f"warn_threshold must be > 0, got {cfg.warn_threshold!r}")
    if cfg.photon_mass is not None and not (cfg.photon_mass >= 0.0 and math.isfinite(cfg.photon_mass)):
        raise UsageError(f"photon_mass must be finite and >= 0, got {cfg.photon_mass!r}")

    if cfg.command in GRID_DEFAULTS:
        lo_name, hi_name = ("p_min", "p_max") if cfg.command == "curve-intersect" else ("r_min", "r_max")
        lo_default, hi_default = GRID_DEFAULTS[cfg.command]
        lo = getattr(cfg, lo_name)
        hi = getattr(cfg, hi_name)
        lo = lo_default if lo is None else lo
        hi = hi_default if hi is None else hi
        if not (math.isfinite(lo) and math.isfinite(hi) and 0.0 < lo < hi):
            raise UsageError(
                f"grid needs 0 < {lo_name.replace('_', '-')} < {hi_name.replace('_', '-')}, got [{lo!r}, {hi!r}]"
            )
        cfg = replace(cfg, **{lo_name: lo, hi_name: hi})
    try:
        make_unit_system(cfg.unit_overrides())
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    return cfg


def parse_config(arguments: Sequence[str], config_text: Optional[str] = None) -> RunConfig:
    """Build a validated RunConfig from command-line tokens.

    ``config_text`` supplies config-file content directly; otherwise the file
    named by ``--config`` (if any) is read.
    """
    ns = vars(build_parser().parse_args(list(arguments)))
    command = ns.pop("command")
    config_path = ns.pop("config", None)
    values = {}
    if config_text is not None:
        try:
            data = json.loads(config_text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed config: {exc}") from None
        if not isinstance(data, dict):
            raise UsageError("config must be a JSON object")
        unknown = sorted(set(data) - set(CONFIG_KEYS))
        if unknown:
            raise UsageError(f"unknown config key(s): {', '.join(unknown)}")
        values.update(data)
    elif config_path is not None:
        values.update(_read_config_file(config_path))
    values.update(ns)
    values = {k: _coerce(k, v) for k, v in values.items()}
    return _validate(RunConfig(command=command, **values))


# --- emission ---------------------------------------------------------------


def _fmt(x, precision):
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), f".{precision}g")


def _round(x, precision):
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, dict):
        return {k: _round(v, precision) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round(v, precision) for v in x]
    return float(format(float(x), f".{precision}g"))


def _csv(header, rows, precision):
    lines = [",".join(header)]
    lines += [",".join(v if isinstance(v, str) else _fmt(v, precision) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _json(obj, precision):
    return json.dumps(_round(obj, precision), indent=2) + "\n"


def _solution_record(sol, units):
    return {
        "branch_label": sol.branch_label,
        "beta": sol.recoil.beta,
        "gamma": sol.recoil.gamma_at_solution,
        "speed": sol.particle.speed,
        "momentum": sol.particle.momentum,
        "lorentz_factor": sol.particle.lorentz_factor,
        "radius": sol.radius,
        "radius_cm": units.length_to_cm(sol.radius),
        "photon_energy": sol.photon.energy,
        "photon_momentum": sol.photon.momentum,
        "photon_mass": sol.photon.inertial_mass,
        "residual": sol.residual,
        "iterations": sol.iterations,
    }


SOLUTION_COLUMNS = ("branch_label", "beta", "gamma", "speed", "momentum", "lorentz_factor", "radius", "residual", "iterations")


def _pick_branch(solutions, branch):
    for sol in solutions:
        if sol.branch_label == branch:
            return sol
    raise ConvergenceError(f"no {branch} bound state found")


def _render(cfg: RunConfig) -> str:
    units = make_unit_system(cfg.unit_overrides())
    prec = cfg.precision

    if cfg.command == "solve":
        sols = find_bound_states(units, cfg.grid_points, cfg.tolerance, cfg.bracket_width)
        if not sols:
            raise ConvergenceError("no sign change of F(beta) on the scan grid")
        records = [_solution_record(s, units) for s in sols]
        if cfg.format == "csv":
            return _csv(SOLUTION_COLUMNS, [[r[c] for c in SOLUTION_COLUMNS] for r in records], prec)
        return _json({"units": units.as_dict(), "solutions": records}, prec)

    if cfg.command == "curve-beta":
        curve = figure1_curve(cfg.r_min, cfg.r_max, cfg.samples, units, cfg.tolerance, cfg.bracket_width)
        rows = [[s.abscissa, s.values["beta"], s.converged] for s in curve]
        header = ("r_over_rc", "beta", "converged")
        if cfg.format == "json":
            return _json({"samples": [dict(zip(header, r)) for r in rows]}, prec)
        return _csv(header, rows, prec)

    if cfg.command == "curve-intersect":
        curve = figure2_curves(cfg.p_min, cfg.p_max, cfg.samples, units, cfg.tolerance, cfg.bracket_width)
        header = ("p_over_mec", "r_orbit", "dr_beta1", "dr_recoil", "converged")
        rows = [
            [s.abscissa, s.values["r_orbit"], s.values["dr_beta1"], s.values["dr_recoil"], s.converged]
            for s in curve
        ]
        if cfg.format == "json":
            return _json({"samples": [dict(zip(header, r)) for r in rows]}, prec)
        return _csv(header, rows, prec)

    if cfg.command == "table":
        try:
            refs = load_references(cfg.refs)
        except OSError as exc:
            raise UsageError(f"cannot read reference file {cfg.refs}: {exc.strerror}") from None
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        sols = find_bound_states(units, cfg.grid_points, cfg.tolerance, cfg.bracket_width)
        sol = _pick_branch(sols, cfg.branch)
        report = derive_parameters(sol, units, refs)
        table = compare_with_reference(report, refs, cfg.warn_threshold)
        if cfg.format == "csv":
            header = ("name", "quantity", "computed", "reference", "source", "relative_deviation", "flagged")
            rows = [
                [d.name, d.quantity, d.computed, d.reference, d.source, d.relative_deviation, d.flagged]
                for d in table.rows
            ]
            return _csv(header, rows, prec)
        if cfg.format == "text":
            return _text_table(report, table, sol, prec)
        return _json(
            {
                "solution": _solution_record(sol, units),
                "report": report.as_dict(),
                "uncertainty": uncertainty_bundle(sol),
                "deviations": table.as_dict(),
            },
            prec,
        )

    if cfg.command == "potential":
        mass = cfg.photon_mass
        if mass is None:
            sols = find_bound_states(units, cfg.grid_points, cfg.tolerance, cfg.bracket_width)
            mass = _pick_branch(sols, RELATIVISTIC).photon.inertial_mass
        radii = np.geomspace(cfg.r_min, cfg.r_max, cfg.samples)
        rows = [[r, yukawa_potential(r, mass, units)] for r in radii.tolist()]
        header = ("r_over_rc", "phi")
        if cfg.format == "json":
            return _json({"photon_mass": mass, "samples": [dict(zip(header, r)) for r in rows]}, prec)
        return _csv(header, rows, prec)

    raise UsageError(f"unknown command {cfg.command!r}")


def _text_table(report, table, sol, prec):
    buf = io.StringIO()
    buf.write(f"{report.branch_label} bound state (beta = {_fmt(report.beta, prec)})\n\n")
    items = [(k, v) for k, v in report.as_dict().items() if k != "branch_label"]
    width = max(len(k) for k, _ in items)
    for k, v in items:
        buf.write(f"{k:<{width}}  {_fmt(v, prec)}\n")
    buf.write("\nuncertainty products\n")
    for k, v in uncertainty_bundle(sol).items():
        buf.write(f"  {k:<14}{_fmt(v['value'], prec):>22}  expected {_fmt(v['expected'], prec)}\n")
    buf.write(f"\ndeviations (flag above {_fmt(table.warn_threshold * 100, 6)}%)\n")
    rows = table.rows + table.published_vs_reference
    name_w = max([len(d.name) for d in rows] + [4])
    for d in rows:
        flag = "  !" if d.flagged else ""
        buf.write(
            f"  {d.name:<{name_w}}  {_fmt(d.computed, prec):>20}  {_fmt(d.reference, prec):>20}"
            f"  {d.source:<13}{d.relative_deviation * 100:+9.2f}%{flag}\n"
        )
    if table.missing:
        buf.write(f"\nmissing references: {', '.join(table.missing)}\n")
    return buf.getvalue()


def run(config: RunConfig, stdout=None) -> int:
    """Execute a validated config; returns the exit status."""
    stdout = stdout if stdout is not None else sys.stdout
    try:
        text = _render(config)
    except ConvergenceError as exc:
        print(f"quasiatom: numerical failure in {config.command}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except UsageError as exc:
        print(f"quasiatom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"quasiatom: error in {config.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if config.out:
        try:
            with open(config.out, "w", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"quasiatom: error: cannot write {config.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE
    else:
        stdout.write(text)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"quasiatom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
