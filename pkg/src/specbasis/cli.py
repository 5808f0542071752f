"""Command-line driver: configures experiments, runs sweeps and writes the
CSV/JSON artifacts consumed by the tests and by the plotting package.

Verbs: coeffs | errors | tables | aliasing | grids.  A single JSON config
document drives each run; command-line flags override config fields.  Exit
codes: 0 ok, 2 usage/config error, 3 numerical failure.
"""

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import analysis
from . import approximators as apx
from .cheb_core import (CHEBYSHEV, DIFFERENCE, LOBATTO, QUADFACTOR, ROOTS,
                        CoefficientVector, NumericalError, make_grid,
                        roots_angles)
from .singular_functions import eval_u, from_spec

CSV_HEADER = "# specbasis-csv v1"

DEFAULTS = {
    "function": "exemplar",
    "bases": [CHEBYSHEV, DIFFERENCE, QUADFACTOR],
    "methods": ["reference"],
    "N": [100],
    "curve_N": None,          # error-curve sizes; defaults to [max(N)]
    "n_col": 2048,
    "weight": -0.5,
    "interior": 0.8,
    "out": ".",
    "seed": 0,
    "format": "csv",
    "spectrum": None,         # aliasing: {"kind": "power"|"single", ...}
    "grid_kinds": [ROOTS, LOBATTO],
}

_METHODS = ("reference", "truncation", "interpolation", "leastsquares", "lagrangels")


class ConfigError(ValueError):
    pass


def load_config(args):
    cfg = dict(DEFAULTS)
    if args.config:
        try:
            with open(args.config) as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ConfigError("config must be a JSON object")
        cfg.update(loaded)
    if args.preset:
        cfg["function"] = args.preset
    if args.N:
        cfg["N"] = [int(v) for v in args.N.split(",")]
    if args.basis:
        cfg["bases"] = args.basis.split(",")
    if args.method:
        cfg["methods"] = args.method.split(",")
    if args.weight is not None:
        cfg["weight"] = args.weight
    if args.ncol is not None:
        cfg["n_col"] = args.ncol
    if args.interior is not None:
        cfg["interior"] = args.interior
    if args.out:
        cfg["out"] = args.out
    if args.format:
        cfg["format"] = args.format
    return validate_config(cfg)


def validate_config(cfg):
    try:
        cfg["function_obj"] = from_spec(cfg["function"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    n_list = list(cfg["N"])
    if not n_list or any(int(n) != n for n in n_list):
        raise ConfigError("N must be a nonempty list of integers")
    if any(b >= c for b, c in zip(n_list, n_list[1:])):
        raise ConfigError("N list must be strictly increasing")
    cfg["N"] = [int(n) for n in n_list]
    if cfg["curve_N"] is None:
        cfg["curve_N"] = [max(cfg["N"])]
    for b in cfg["bases"]:
        if b not in (CHEBYSHEV, DIFFERENCE, QUADFACTOR):
            raise ConfigError(f"unknown basis {b!r}")
    for m in cfg["methods"]:
        if m not in _METHODS:
            raise ConfigError(f"unknown method {m!r}")
    if cfg["format"] not in ("csv", "json"):
        raise ConfigError("format must be csv or json")
    out = Path(cfg["out"])
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"cannot create output dir {out}: {exc}") from exc
    cfg["out"] = out
    return cfg


def _fmt(v):
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def write_table(path, columns, rows, fmt="csv"):
    """Write rows either as v1 CSV or as a JSON document; bytes are
    deterministic for identical inputs."""
    if fmt == "json":
        doc = {"schema": CSV_HEADER.lstrip("# "),
               "columns": list(columns),
               "rows": [[float(v) for v in row] for row in rows]}
        path = path.with_suffix(".json")
        path.write_text(json.dumps(doc, indent=1) + "\n")
        return path
    lines = [CSV_HEADER, ",".join(columns)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    path.write_text("\n".join(lines) + "\n")
    return path


def _coeff_vector(cfg, basis, method, n):
    f = cfg["function_obj"]
    if method == "reference":
        return apx.reference_coeffs(f, basis, n)
    if method == "truncation":
        return apx.truncate(f, basis, n).coeffs
    if method == "interpolation":
        return apx.interpolate(f, basis, ROOTS, n).coeffs
    if method == "leastsquares":
        return apx.least_squares(f, basis, n, cfg["n_col"], cfg["weight"]).coeffs
    if method == "lagrangels":
        return apx.lagrange_ls(f, n).coeffs
    raise ConfigError(f"unknown method {method!r}")


def cmd_coeffs(cfg):
    n = max(cfg["N"])
    written = []
    for basis in cfg["bases"]:
        for method in cfg["methods"]:
            cv = _coeff_vector(cfg, basis, method, n)
            rows = [(i, v, abs(v)) for i, v in enumerate(cv.values)]
            path = cfg["out"] / f"coeffs_{basis}_{method}.csv"
            written.append(write_table(path, ("n", "value", "abs_value"),
                                       rows, cfg["format"]))
    return written


def _error_curve(cfg, basis, method, n):
    f = cfg["function_obj"]
    xs = analysis.sample_points()
    if method == "truncation":
        approx = apx.truncate(f, basis, n)
    elif method == "interpolation":
        approx = apx.interpolate(f, basis, ROOTS, n)
    elif method == "leastsquares":
        approx = apx.least_squares(f, basis, n, cfg["n_col"], cfg["weight"])
    elif method == "lagrangels":
        approx = apx.lagrange_ls(f, n)
    else:
        raise ConfigError(f"method {method!r} has no error curve")
    err = np.abs(eval_u(f, xs) - approx(xs))
    return list(zip(xs, err))


def _v_error_curve(cfg, n):
    from .singular_functions import eval_v

    f = cfg["function_obj"]
    xs = analysis.sample_points()
    c_i = apx.interpolate(f, QUADFACTOR, ROOTS, n).coeffs
    v_i = np.polynomial.chebyshev.chebval(xs, c_i.values)
    return list(zip(xs, np.abs(eval_v(f, xs) - v_i)))


def cmd_errors(cfg):
    f = cfg["function_obj"]
    methods = [m for m in cfg["methods"] if m != "reference"]
    written = []
    jobs = [(basis, method) for basis in cfg["bases"] for method in methods]

    def sweep(job):
        basis, method = job
        return analysis.error_norm_sweep(f, basis, method, cfg["N"],
                                         n_col=cfg["n_col"], weight=cfg["weight"],
                                         d_interior=cfg["interior"])

    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(sweep, jobs))
    for (basis, method), rows in zip(jobs, results):
        path = cfg["out"] / f"errnorm_{basis}_{method}.csv"
        written.append(write_table(path, ("N", "linf_full", "linf_interior"),
                                   rows, cfg["format"]))
        for n in cfg["curve_N"]:
            curve = _error_curve(cfg, basis, method, n)
            path = cfg["out"] / f"errcurve_{basis}_{method}_N{n}.csv"
            written.append(write_table(path, ("x", "abs_error"), curve,
                                       cfg["format"]))
    if "interpolation" in methods and QUADFACTOR in cfg["bases"]:
        rows = analysis.v_error_norm_sweep(f, cfg["N"], d_interior=cfg["interior"])
        path = cfg["out"] / "errnorm_vcheb_interpolation.csv"
        written.append(write_table(path, ("N", "linf_full", "linf_interior"),
                                   rows, cfg["format"]))
        for n in cfg["curve_N"]:
            path = cfg["out"] / f"errcurve_vcheb_interpolation_N{n}.csv"
            written.append(write_table(path, ("x", "abs_error"),
                                       _v_error_curve(cfg, n), cfg["format"]))
    return written


def cmd_tables(cfg):
    f = cfg["function_obj"]
    written = []
    t1 = analysis.ratio_table(f, n=max(cfg["N"]), n_col_ls=cfg["n_col"])
    rows = [(r["n"], r["interp_ratio"], r["ls_ratio"]) for r in t1]
    written.append(write_table(cfg["out"] / "table1_coeff_ratios.csv",
                               ("n", "interp_ratio", "ls_ratio"), rows,
                               cfg["format"]))
    t2 = analysis.error_ratio_table(f, cfg["N"], n_col_ls=cfg["n_col"])
    rows = [(r["N"], r["interp_ratio"], r["ls_ratio"]) for r in t2]
    written.append(write_table(cfg["out"] / "table2_error_ratios.csv",
                               ("N", "interp_ratio", "ls_ratio"), rows,
                               cfg["format"]))
    return written


def _aliasing_reference(cfg, n):
    spectrum = cfg["spectrum"]
    if spectrum is None:
        f = cfg["function_obj"]
        length = 6 * n
        a = apx.reference_coeffs(f, CHEBYSHEV, length, m_ref=8 * length)
        k = f.kappa
        return a, k, None
    length = int(spectrum.get("length", 6 * n))
    vals = np.zeros(length)
    if spectrum["kind"] == "power":
        k = float(spectrum["k"])
        vals[1:] = np.arange(1, length, dtype=float) ** -k
    elif spectrum["kind"] == "single":
        d = int(spectrum["degree"])
        if d >= length:
            length = d + 1
            vals = np.zeros(length)
        vals[d] = 1.0
        k = float(spectrum.get("k", 4.0))
    else:
        raise ConfigError(f"unknown spectrum kind {spectrum['kind']!r}")
    return CoefficientVector(CHEBYSHEV, vals), k, vals


def cmd_aliasing(cfg):
    n_grid = max(cfg["N"])
    a_ref, k, synth = _aliasing_reference(cfg, n_grid)
    # measured: actually interpolate the represented function on the grid
    t = roots_angles(n_grid)
    if synth is None:
        ux = eval_u(cfg["function_obj"], np.cos(t))
    else:
        ux = np.polynomial.chebyshev.chebval(np.cos(t), a_ref.values)
    a_i = apx._project_cheb(ux, t, n_grid)
    rows = []
    import warnings as _warnings

    for n in range(n_grid):
        with _warnings.catch_warnings():
            _warnings.simplefilter("ignore")
            predicted = analysis.aliasing_error(a_ref, n_grid, n)
        measured = a_i[n] - a_ref.values[n]
        bound = abs(a_ref.values[n]) * (1.0 / 2.0 ** (k - 1)) * (n / n_grid) ** k
        rows.append((n, a_ref.values[n], a_i[n], predicted, measured, bound))
    path = cfg["out"] / f"aliasing_N{n_grid}.csv"
    return [write_table(path, ("n", "a_ref", "a_interp", "predicted",
                               "measured", "power_bound"), rows, cfg["format"])]


def cmd_grids(cfg):
    written = []
    for kind in cfg["grid_kinds"]:
        for n in cfg["N"]:
            grid = make_grid(kind, n)
            path = cfg["out"] / f"grid_{kind}_N{n}"
            if cfg["format"] == "csv":
                written.append(write_table(path.with_suffix(".csv"), ("x",),
                                           [(x,) for x in grid.nodes]))
            else:
                p = path.with_suffix(".json")
                p.write_text(json.dumps([float(x) for x in grid.nodes]) + "\n")
                written.append(p)
    return written


COMMANDS = {
    "coeffs": cmd_coeffs,
    "errors": cmd_errors,
    "tables": cmd_tables,
    "aliasing": cmd_aliasing,
    "grids": cmd_grids,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="specbasis",
        description="Polynomial-basis experiments for endpoint-singular functions")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--preset", help="function preset name (e.g. exemplar)")
    parser.add_argument("--N", help="comma-separated basis/grid sizes")
    parser.add_argument("--basis", help="comma-separated basis list")
    parser.add_argument("--method", help="comma-separated method list")
    parser.add_argument("--weight", type=float, help="inner-product exponent alpha")
    parser.add_argument("--ncol", type=int, help="quadrature points for least squares")
    parser.add_argument("--interior", type=float, help="interior window half-width")
    parser.add_argument("--format", choices=("csv", "json"))
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        written = COMMANDS[args.command](cfg)
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
