"""Error measurement, decay-slope fitting, aliasing prediction and the
coefficient/error ratio tables.

Error curves are sampled on a fixed Chebyshev-distributed grid of 2001
points augmented with 50 geometrically spaced points per endpoint boundary
layer (down to 1e-8 from +-1); a uniform grid misses the boundary-layer
structure that distinguishes the bases.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

from . import approximators as apx
from .cheb_core import (CHEBYSHEV, DIFFERENCE, QUADFACTOR, ROOTS,
                        CoefficientVector, basis_endpoint_slope, clenshaw_eval)
from .singular_functions import eval_u, eval_v

INTERIOR_DEFAULT = 0.8   # the full-interval/interior comparison window
INTERIOR_NARROW = 0.5    # the alternative preset used for truncation sweeps


@dataclass(frozen=True)
class ErrorReport:
    n: int
    linf_full: float
    linf_interior: float
    samples: np.ndarray = field(repr=False)
    slope_fit: float | None = None


def sample_points(layer=0.1, n_cheb=2001, n_layer=50):
    """Chebyshev-distributed points plus geometric boundary-layer points."""
    xs = np.cos(np.linspace(0.0, np.pi, n_cheb))
    d = np.geomspace(1e-8, layer, n_layer)
    return np.unique(np.concatenate([xs, 1.0 - d, d - 1.0]))


def error_report(f, approx, d_interior=INTERIOR_DEFAULT):
    """Pointwise |u - approximant| samples and the two max norms."""
    xs = sample_points()
    err = np.abs(eval_u(f, xs) - approx(xs))
    interior = np.abs(xs) <= d_interior
    return ErrorReport(
        n=int(approx.meta.get("N", len(approx.coeffs))),
        linf_full=float(err.max()),
        linf_interior=float(err[interior].max()),
        samples=np.column_stack([xs, err]),
    )


def fit_slope(values, n_lo, n_hi, ns=None):
    """Least-squares slope of log|value| against log n over [n_lo, n_hi].

    ``ns`` defaults to the positions in ``values``.  Zero entries (e.g. the
    vanishing parity of an even/odd function) are dropped, which realizes
    same-parity subsampling; fewer than 8 usable points is an error.
    """
    values = np.abs(np.asarray(values, dtype=float))
    ns = np.arange(len(values)) if ns is None else np.asarray(ns, dtype=float)
    if n_hi < 2 * n_lo:
        raise ValueError("fit window must span at least a factor of 2")
    keep = (ns >= n_lo) & (ns <= n_hi) & (values > 0) & np.isfinite(values)
    even = keep & (np.round(ns) % 2 == 0)
    odd = keep & (np.round(ns) % 2 == 1)
    if np.any(even) and np.any(odd):
        me, mo = np.median(values[even]), np.median(values[odd])
        # one parity sitting at rounding level means the function has a
        # definite parity; fit only the live half
        if me > 1e4 * mo:
            keep = even
        elif mo > 1e4 * me:
            keep = odd
    if np.count_nonzero(keep) < 8:
        raise ValueError("fewer than 8 usable points in the fit window")
    return float(np.polyfit(np.log(ns[keep]), np.log(values[keep]), 1)[0])


def aliasing_error(a_ref, n_grid, n):
    """Aliasing error E_n of the n-th Chebyshev coefficient under n_grid-point
    roots-grid interpolation: sum_j (-1)^j (a_{2jN-n} + a_{2jN+n}).

    In the plain a_0 convention the j-th pair collapses to the single term
    a_{2jN} when n = 0.  The series is truncated at the end of a_ref or when
    terms drop below 1e-16; a warning is issued if the last included term is
    not negligible against the result.
    """
    if a_ref.basis != CHEBYSHEV:
        raise ValueError("a_ref must be a Chebyshev coefficient vector")
    if not 0 <= n < n_grid:
        raise ValueError("need 0 <= n < n_grid")
    vals = a_ref.values
    total = 0.0
    last = 0.0
    j = 1
    ran_out = False
    while True:
        lo, hi = 2 * j * n_grid - n, 2 * j * n_grid + n
        if lo >= len(vals):
            ran_out = True
            break
        term = vals[lo]
        if n != 0 and hi < len(vals):
            term = term + vals[hi]
        total += (-1) ** j * term
        last = term
        if abs(term) < 1e-16:
            break
        j += 1
    if ran_out and abs(last) > max(1e-12 * abs(total), 1e-16):
        warnings.warn("aliasing series truncated by the end of a_ref before "
                      "converging; extend a_ref", stacklevel=2)
    return float(total)


@dataclass(frozen=True)
class PowerLawAliasing:
    estimate: float        # E_n for n << N (alternating zeta sum form)
    near_limit: float      # interpolant coefficient a^I_{N-m} ~ (A/N^k)(2km/N)
    relative_bound: float  # |E_n|/|a_n| <= (1/2^(k-1)) (n/N)^k


def aliasing_power_law(k, n, n_grid, amp=1.0):
    """Closed-form aliasing estimates for power-law coefficients a_n = A/n^k."""
    if k < 2:
        raise ValueError("need k >= 2")
    if not 0 <= n < n_grid:
        raise ValueError("need 0 <= n < n_grid")
    j = np.arange(1, 200001)
    alt = float(np.sum((-1.0) ** j / j ** float(k)))
    m = n_grid - n
    return PowerLawAliasing(
        estimate=amp / 2.0 ** (k - 1) / n_grid ** float(k) * alt,
        near_limit=amp / n_grid ** float(k) * (2.0 * k * m / n_grid),
        relative_bound=(1.0 / 2.0 ** (k - 1)) * (n / n_grid) ** float(k),
    )


@dataclass(frozen=True)
class TailBounds:
    lower: float
    upper: float
    even_tail_estimate: float


def tail_bounds(k, n):
    """Bracketing of sum_{m>n} m^-k and the even-index tail estimate:

    1/((k-1)(n+1)^(k-1)) < tail < 1/((k-1) n^(k-1)),
    sum_{m>n} (2m)^-k ~ upper / 2^k.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    if n < 1:
        raise ValueError("need n >= 1")
    upper = 1.0 / ((k - 1) * n ** (k - 1.0))
    return TailBounds(
        lower=1.0 / ((k - 1) * (n + 1.0) ** (k - 1.0)),
        upper=upper,
        even_tail_estimate=upper / 2.0 ** k,
    )


def quad_ls_bound(w, phi, n):
    """Error bound 3 W / (2 phi) / N^(2 phi) for quadratic-factor least
    squares with the plain-integral inner product."""
    if w <= 0:
        raise ValueError("need W > 0")
    if phi <= 0.5:
        raise ValueError("need phi > 1/2")
    return 3.0 * w / (2.0 * phi) / n ** (2.0 * phi)


TABLE1_ROWS = (10, 20, 30, 40, 50, 60, 70, 80, 82, 84, 86, 88,
               90, 91, 92, 93, 94, 95, 96, 97, 98, 99)


def ratio_table(f, n=100, n_col_ls=2048, rows=TABLE1_ROWS):
    """Difference-basis coefficient ratios b^I/b and b^LS/b.

    Row labels follow the source table's 1-based coefficient numbering
    (row n is the n-th coefficient, 0-based index n-1); the interpolant
    uses n collocation points and the least squares uses n basis functions
    with the Chebyshev weight and n_col_ls quadrature points.
    """
    b_ref = apx.reference_coeffs(f, DIFFERENCE, n + 1, m_ref=32 * n).values
    b_i = apx.interpolate(f, DIFFERENCE, ROOTS, n).coeffs.values
    b_ls = apx.least_squares(f, DIFFERENCE, n, n_col_ls, -0.5).coeffs.values
    out = []
    for row in (r for r in rows if r <= n):
        i = row - 1
        out.append({"n": row,
                    "interp_ratio": float(b_i[i] / b_ref[i]),
                    "ls_ratio": float(b_ls[i] / b_ref[i])})
    return out


def error_ratio_table(f, n_list=tuple(range(10, 101, 10)), n_col_ls=2048):
    """L-infinity error ratios E^interp/E and E^LS/E in the difference basis.

    For row N the truncation keeps N series terms, the interpolant uses N
    roots-grid points and the least squares uses N basis functions.
    """
    xs = sample_points()
    uxs = eval_u(f, xs)
    n_max = max(n_list)
    b_ref = apx.reference_coeffs(f, DIFFERENCE, n_max, m_ref=16 * n_max)
    out = []
    for n in n_list:
        trunc = CoefficientVector(DIFFERENCE, b_ref.values[:n])
        e_t = np.max(np.abs(uxs - clenshaw_eval(trunc, xs)))
        e_i = np.max(np.abs(uxs - apx.interpolate(f, QUADFACTOR, ROOTS, n)(xs)))
        e_ls = np.max(np.abs(uxs - apx.least_squares(f, DIFFERENCE, n, n_col_ls, -0.5)(xs)))
        out.append({"N": n,
                    "interp_ratio": float(e_i / e_t),
                    "ls_ratio": float(e_ls / e_t)})
    return out


def endpoint_slope_sweep(basis, n_list, f=None):
    """Basis-function endpoint slopes and, if f is given, the derivative at
    x = 1 of the assembled n-point roots-grid interpolant."""
    out = []
    for n in n_list:
        row = {"N": n, "basis_slope": basis_endpoint_slope(basis, n)}
        if f is not None:
            row["approx_deriv"] = apx.interpolate(f, basis, ROOTS, n).endpoint_derivative(1)
        out.append(row)
    return out


def error_norm_sweep(f, basis, method, n_list, n_col=None, weight=-0.5,
                     d_interior=INTERIOR_DEFAULT):
    """(N, linf_full, linf_interior) rows for a truncation/interpolation/LS
    sweep; truncation reuses one long reference projection across N."""
    xs = sample_points()
    uxs = eval_u(f, xs)
    interior = np.abs(xs) <= d_interior
    rows = []
    if method == apx.TRUNCATION:
        n_max = max(n_list)
        a_ref = apx.reference_coeffs(f, CHEBYSHEV, n_max + 1, m_ref=8 * (n_max + 1))
        b_ref = apx.reference_coeffs(f, DIFFERENCE, n_max + 1, m_ref=8 * (n_max + 1))
        c_ref = apx.reference_coeffs(f, QUADFACTOR, n_max + 1, m_ref=8 * (n_max + 1))
        ref = {CHEBYSHEV: a_ref, DIFFERENCE: b_ref, QUADFACTOR: c_ref}[basis]
        for n in n_list:
            keep = n + 1 if basis == CHEBYSHEV else n - 1
            cv = CoefficientVector(basis, ref.values[:keep])
            err = np.abs(uxs - clenshaw_eval(cv, xs))
            rows.append((n, float(err.max()), float(err[interior].max())))
        return rows
    for n in n_list:
        if method == apx.INTERPOLATION:
            approx = apx.interpolate(f, basis, ROOTS, n)
        elif method == apx.LEAST_SQUARES:
            approx = apx.least_squares(f, basis, n, n_col or 2048, weight)
        elif method == apx.LAGRANGE_LS:
            approx = apx.lagrange_ls(f, n)
        else:
            raise ValueError(f"unknown method {method!r}")
        err = np.abs(uxs - approx(xs))
        rows.append((n, float(err.max()), float(err[interior].max())))
    return rows


def v_error_norm_sweep(f, n_list, d_interior=INTERIOR_DEFAULT):
    """Norms of v - v^I for the roots-grid interpolant of v = u/(1-x^2);
    this is the top curve of the interpolation-error comparison."""
    xs = sample_points()
    vxs = eval_v(f, xs)
    interior = np.abs(xs) <= d_interior
    rows = []
    for n in n_list:
        c_i = apx.interpolate(f, QUADFACTOR, ROOTS, n).coeffs
        v_i = clenshaw_eval(CoefficientVector(CHEBYSHEV, c_i.values), xs)
        err = np.abs(vxs - v_i)
        rows.append((n, float(err.max()), float(err[interior].max())))
    return rows
