"""Figure specifications and the CSV -> image renderer.

The renderer holds no numerics beyond evaluating the dashed reference lines
coef * x**exponent; every plotted number comes from a specbasis CSV.  Output
is a PNG with metadata stripped so identical inputs give identical bytes.
"""

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

CSV_HEADER = "# specbasis-csv v1"


class FigureError(RuntimeError):
    """Missing input file, bad schema or empty series."""


@dataclass(frozen=True)
class Series:
    path: Path
    x_col: str
    y_col: str
    label: str
    style: dict = field(default_factory=dict)
    odd_only_max: int | None = None  # keep odd x <= this (coefficient plots)


@dataclass(frozen=True)
class FigureSpec:
    name: str
    series: tuple
    output: Path
    xscale: str = "log"          # "log" or "linear"
    ref_lines: tuple = ()        # (coefficient, exponent, label) triples
    x_label: str = "N"
    y_label: str = "error"


def read_csv(path):
    path = Path(path)
    if not path.exists():
        raise FigureError(f"input CSV not found: {path}")
    lines = path.read_text().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise FigureError(f"{path} does not carry the '{CSV_HEADER}' header")
    columns = lines[1].split(",")
    rows = [[float(v) for v in ln.split(",")] for ln in lines[2:]]
    if not rows:
        raise FigureError(f"{path} has no data rows")
    data = np.array(rows)
    return {c: data[:, i] for i, c in enumerate(columns)}


def render(spec):
    """Render a FigureSpec to its output path; returns the path."""
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    try:
        x_all = []
        for s in spec.series:
            table = read_csv(s.path)
            if s.x_col not in table or s.y_col not in table:
                raise FigureError(f"{s.path} lacks columns {s.x_col}/{s.y_col}")
            x, y = table[s.x_col], table[s.y_col]
            if s.odd_only_max is not None:
                keep = (np.round(x) % 2 == 1) & (x <= s.odd_only_max)
                x, y = x[keep], y[keep]
            ax.plot(x, y, label=s.label, **s.style)
            x_all.append(x[x > 0] if spec.xscale == "log" else x)
        xs = np.concatenate(x_all)
        lo, hi = np.min(xs), np.max(xs)
        grid = np.geomspace(lo, hi, 64) if spec.xscale == "log" else np.linspace(lo, hi, 64)
        for coef, exponent, label in spec.ref_lines:
            ax.plot(grid, coef * grid ** exponent, "--", linewidth=1.0, label=label)
        ax.set_xscale(spec.xscale)
        ax.set_yscale("log")
        ax.set_xlabel(spec.x_label)
        ax.set_ylabel(spec.y_label)
        ax.grid(True, which="both", alpha=0.3)
        ax.legend(fontsize=8)
        spec.output.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(spec.output, dpi=150, metadata={"Software": None})
    finally:
        plt.close(fig)
    return spec.output


def _coeff_series(in_dir, method):
    styles = {"quadfactor": dict(color="tab:blue"),
              "difference": dict(color="tab:red"),
              "chebyshev": dict(color="black")}
    return tuple(
        Series(in_dir / f"coeffs_{b}_{method}.csv", "n", "abs_value",
               f"|{sym}_n| ({b})", styles[b], odd_only_max=199)
        for b, sym in (("quadfactor", "c"), ("difference", "b"), ("chebyshev", "a")))


def build_figure(name, in_dir, output):
    """FigureSpec for one of the fig2..fig8 analogs, reading from in_dir."""
    in_dir = Path(in_dir)
    output = Path(output)
    if name == "fig2":
        return FigureSpec(
            name=name, output=output, x_label="degree n",
            y_label="|coefficient|",
            series=_coeff_series(in_dir, "reference"))
    if name == "fig3":
        p = in_dir / "errnorm_chebyshev_truncation.csv"
        return FigureSpec(
            name=name, output=output,
            series=(Series(p, "N", "linf_full", "max over [-1,1]",
                           dict(color="black")),
                    Series(p, "N", "linf_interior", "max over [-0.8,0.8]",
                           dict(color="tab:green"))),
            ref_lines=((1.0, -4.0, "1/N^4"), (30.0, -5.0, "30/N^5")))
    if name == "fig4":
        return FigureSpec(
            name=name, output=output, xscale="linear", x_label="x",
            series=(Series(in_dir / "errcurve_chebyshev_truncation_N50.csv",
                           "x", "abs_error", "|u - u_50|",
                           dict(color="black", linewidth=0.8)),))
    if name == "fig5":
        return FigureSpec(
            name=name, output=output,
            series=(Series(in_dir / "errnorm_quadfactor_truncation.csv", "N",
                           "linf_full", "quadratic-factor", dict(color="tab:red")),
                    Series(in_dir / "errnorm_difference_truncation.csv", "N",
                           "linf_full", "difference", dict(color="tab:blue")),
                    Series(in_dir / "errnorm_chebyshev_truncation.csv", "N",
                           "linf_full", "chebyshev", dict(color="black")),
                    Series(in_dir / "errnorm_chebyshev_truncation.csv", "N",
                           "linf_interior", "chebyshev, [-1/2,1/2]",
                           dict(color="tab:green"))),
            ref_lines=((6.0, -3.0, "6/N^3"), (200.0, -4.0, "200/N^4"),
                       (25.0, -4.0, "25/N^4"), (100.0, -5.0, "100/N^5")))
    if name == "fig6":
        return FigureSpec(
            name=name, output=output, xscale="linear", x_label="x",
            series=(Series(in_dir / "errcurve_vcheb_interpolation_N100.csv",
                           "x", "abs_error", "|v - v^I|",
                           dict(color="tab:blue", linewidth=0.6)),
                    Series(in_dir / "errcurve_chebyshev_interpolation_N100.csv",
                           "x", "abs_error", "|u - u^I| chebyshev",
                           dict(color="black", linewidth=0.6)),
                    Series(in_dir / "errcurve_quadfactor_interpolation_N100.csv",
                           "x", "abs_error", "|u - u^I| constrained",
                           dict(color="goldenrod", linewidth=0.6)),))
    if name == "fig7":
        return FigureSpec(
            name=name, output=output, x_label="degree n",
            y_label="|coefficient|",
            series=_coeff_series(in_dir, "interpolation"),
            ref_lines=((1.0, -3.0, "n^-3"), (1.0, -4.0, "n^-4"),
                       (1.0, -5.0, "n^-5")))
    if name == "fig8":
        return FigureSpec(
            name=name, output=output,
            series=(Series(in_dir / "errnorm_vcheb_interpolation.csv", "N",
                           "linf_full", "v interpolant", dict(color="goldenrod")),
                    Series(in_dir / "errnorm_chebyshev_interpolation.csv", "N",
                           "linf_full", "chebyshev", dict(color="black")),
                    Series(in_dir / "errnorm_quadfactor_interpolation.csv", "N",
                           "linf_full", "quadratic-factor",
                           dict(color="tab:blue", marker="s", linestyle="none")),
                    Series(in_dir / "errnorm_difference_interpolation.csv", "N",
                           "linf_full", "difference",
                           dict(color="tab:red", marker=".", linestyle="none"))),
            ref_lines=((5.0, -2.0, "5/N^2"), (30.0, -4.0, "30/N^4")))
    raise FigureError(f"unknown figure name {name!r}")


FIGURE_NAMES = ("fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8")
