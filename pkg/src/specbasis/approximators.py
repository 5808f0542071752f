"""Degree-limited approximations: series truncation, interpolation on the
roots/Lobatto grids, and least squares with the four quadrature weights.

Size conventions (the sources mix "degree N" and "N terms"; we pin them):

* ``truncate(f, basis, n)`` and ``lagrange_ls(f, n)`` take the polynomial
  DEGREE n: the Chebyshev form keeps coefficients 0..n, the constrained
  bases keep indices 0..n-2, so every method returns a degree-n polynomial
  and the identity u_n^diff - u_n = b_{n-1} T_{n-1} + b_n T_n holds at the
  coefficient level.
* ``interpolate(f, basis, grid_kind, n)`` takes the NUMBER OF GRID POINTS:
  the Chebyshev interpolant has degree n-1, the constrained interpolants
  have n coefficients and degree n+1.
* ``least_squares(f, basis, n, ...)`` takes the NUMBER OF BASIS FUNCTIONS.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .cheb_core import (CHEBYSHEV, DIFFERENCE, GEGENBAUER, LOBATTO, QUADFACTOR,
                        ROOTS, CoefficientVector, NumericalError, WeightSpec,
                        clenshaw_eval, roots_angles)
from .coeff_transforms import b_from_a, b_from_c, c_from_b, cheb_expand
from .singular_functions import eval_u, eval_v

TRUNCATION = "truncation"
INTERPOLATION = "interpolation"
LEAST_SQUARES = "leastsquares"
LAGRANGE_LS = "lagrangels"

COND_LIMIT = 1e12


@dataclass(frozen=True)
class Approximant:
    basis: str
    method: str
    coeffs: CoefficientVector
    meta: dict = field(default_factory=dict)

    def __call__(self, x):
        return clenshaw_eval(self.coeffs, x)

    def cheb_coeffs(self):
        """The equivalent Chebyshev expansion of this approximant."""
        if self.coeffs.basis == CHEBYSHEV:
            return self.coeffs
        return cheb_expand(self.coeffs)

    def endpoint_derivative(self, sign=1):
        """du/dx at x = +-1, by differentiating the Chebyshev form."""
        d = np.polynomial.chebyshev.chebder(self.cheb_coeffs().values)
        return float(np.polynomial.chebyshev.chebval(float(sign), d))

    def to_json(self):
        return {
            "basis": self.basis,
            "method": self.method,
            "meta": self.meta,
            "coeffs": [float(v) for v in self.coeffs.values],
        }


def _project_cheb(values_at_nodes, t, n_coeffs):
    """Chebyshev coefficients 0..n_coeffs-1 from samples at x = cos(t) for
    midpoint angles t (discrete orthogonality / Gauss-Chebyshev)."""
    m = len(t)
    coeffs = (2.0 / m) * (np.cos(np.outer(np.arange(n_coeffs), t)) @ values_at_nodes)
    coeffs[0] /= 2.0
    return coeffs


def reference_coeffs(f, basis, n, m_ref=None):
    """First n infinite-series coefficients of f in the given basis.

    Chebyshev: Gauss-Chebyshev projection of u with m_ref nodes (default
    8n).  Difference: partial sums of the Chebyshev reference.  Quadfactor:
    projection of v = u/(1-x^2), whose Chebyshev coefficients are the c_n.
    """
    if n < 1:
        raise ValueError("need n >= 1 coefficients")
    m_ref = 8 * n if m_ref is None else m_ref
    if m_ref < n:
        raise ValueError("m_ref must be >= n")
    t = roots_angles(m_ref)
    x = np.cos(t)
    if basis == CHEBYSHEV:
        return CoefficientVector(CHEBYSHEV, _project_cheb(eval_u(f, x), t, n))
    if basis == DIFFERENCE:
        a = CoefficientVector(CHEBYSHEV, _project_cheb(eval_u(f, x), t, n))
        return b_from_a(a, n)
    if basis == QUADFACTOR:
        return CoefficientVector(QUADFACTOR, _project_cheb(eval_v(f, x), t, n))
    raise ValueError(f"no reference coefficients for basis {basis!r}")


def truncate(f, basis, n, m_ref=None):
    """Truncate the infinite series of f to a polynomial of degree n."""
    if basis == CHEBYSHEV:
        coeffs = reference_coeffs(f, basis, n + 1, m_ref)
    elif basis in (DIFFERENCE, QUADFACTOR):
        if n < 2:
            raise ValueError("constrained truncation needs degree n >= 2")
        coeffs = reference_coeffs(f, basis, n - 1, m_ref)
    else:
        raise ValueError(f"cannot truncate in basis {basis!r}")
    meta = {"N": len(coeffs), "degree": n, "m_ref": 8 * len(coeffs) if m_ref is None else m_ref}
    return Approximant(basis, TRUNCATION, coeffs, meta)


def _lobatto_interp_cheb(f, n):
    theta = np.arange(n) * np.pi / (n - 1)
    fx = eval_u(f, np.cos(theta))
    w = np.ones(n)
    w[0] = w[-1] = 0.5
    coeffs = np.empty(n)
    for k in range(n):
        norm = (n - 1) if k in (0, n - 1) else (n - 1) / 2.0
        coeffs[k] = np.sum(w * fx * np.cos(k * theta)) / norm
    return coeffs


def interpolate(f, basis, grid_kind, n):
    """Interpolate f on an n-point grid and return the requested basis form.

    Roots grid: the Chebyshev basis gives the standard (unconstrained)
    interpolant; the difference/quadfactor bases interpolate v = u/(1-x^2)
    at the same nodes, realizing u = (1-x^2) v^I, which vanishes at the
    endpoints by construction.  Lobatto grid: the interpolant is unique, so
    all bases describe one polynomial; it is computed in Chebyshev form and
    converted.
    """
    if n < 3:
        raise ValueError("interpolation needs n >= 3 grid points")
    meta = {"N": n, "grid_kind": grid_kind}
    if grid_kind == ROOTS:
        t = roots_angles(n)
        if basis == CHEBYSHEV:
            coeffs = CoefficientVector(
                CHEBYSHEV, _project_cheb(eval_u(f, np.cos(t)), t, n))
            return Approximant(basis, INTERPOLATION, coeffs, meta)
        if basis in (DIFFERENCE, QUADFACTOR):
            c = CoefficientVector(
                QUADFACTOR, _project_cheb(eval_v(f, np.cos(t)), t, n))
            coeffs = c if basis == QUADFACTOR else b_from_c(c)
            return Approximant(basis, INTERPOLATION, coeffs, meta)
        raise ValueError(f"cannot interpolate in basis {basis!r}")
    if grid_kind == LOBATTO:
        a = _lobatto_interp_cheb(f, n)
        if basis == CHEBYSHEV:
            coeffs = CoefficientVector(CHEBYSHEV, a)
        elif basis in (DIFFERENCE, QUADFACTOR):
            b = b_from_a(CoefficientVector(CHEBYSHEV, a), n - 2)
            coeffs = b if basis == DIFFERENCE else c_from_b(b)
        else:
            raise ValueError(f"cannot interpolate in basis {basis!r}")
        return Approximant(basis, INTERPOLATION, coeffs, meta)
    raise ValueError(f"unknown grid kind {grid_kind!r}")


def _design_matrix(basis, n, t):
    ns = np.arange(n)
    if basis == CHEBYSHEV:
        return np.cos(np.outer(t, ns))
    if basis == DIFFERENCE:
        return np.cos(np.outer(t, ns + 2)) - np.cos(np.outer(t, ns))
    if basis == QUADFACTOR:
        return np.sin(t)[:, None] ** 2 * np.cos(np.outer(t, ns))
    raise ValueError(f"least squares does not support basis {basis!r}")


def _diff_gram_chebweight(n):
    # exact integrals: diag pi (3*pi/2 at index 0), -pi/2 on the +-2 bands
    g = np.pi * np.eye(n)
    g[0, 0] = 1.5 * np.pi
    idx = np.arange(n - 2)
    g[idx, idx + 2] = g[idx + 2, idx] = -np.pi / 2.0
    return g


def least_squares(f, basis, n, n_col, weight):
    """Solve the normal equations G d = f for n basis functions.

    The inner product is the n_col-point quadrature form, so n_col = n
    reproduces roots-grid interpolation exactly.  With the Chebyshev weight
    and n_col >= n + 2 the difference-basis Gram matrix is assembled from
    its exact integrals (parity-tridiagonal); the quadrature values are
    identical there because the rule is exact for those integrands.
    """
    if n < 1:
        raise ValueError("need n >= 1 basis functions")
    if n_col < n:
        raise ValueError("n_col must be >= n")
    w = weight if isinstance(weight, WeightSpec) else WeightSpec(float(weight))
    t = roots_angles(n_col)
    h = _design_matrix(basis, n, t)
    qw = (np.pi / n_col) * np.sin(t) ** (2.0 * w.alpha + 1.0)
    u = eval_u(f, np.cos(t))
    if not np.all(np.isfinite(qw[:, None] * h)):
        raise NumericalError("non-finite weighted design matrix")
    if basis == DIFFERENCE and w.alpha == -0.5 and n_col >= n + 2:
        gram = _diff_gram_chebweight(n)
    else:
        gram = h.T @ (qw[:, None] * h)
    rhs = h.T @ (qw * u)
    cond = float(np.linalg.cond(gram))
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise NumericalError(f"Gram matrix condition estimate {cond:.3e} "
                             f"exceeds {COND_LIMIT:.0e}")
    d = scipy.linalg.cho_solve(scipy.linalg.cho_factor(gram), rhs)
    meta = {"N": n, "N_col": n_col, "weight": w.alpha, "cond": cond}
    return Approximant(basis, LEAST_SQUARES, CoefficientVector(basis, d), meta)


def ls_diff_closed_form(a_ref, n):
    """Even-part difference-basis least squares, Chebyshev weight, by the
    closed-form solution of the parity-tridiagonal normal equations:

        b_{2m} = -(1 - m/n)/(1 + 1/(2n)) * sum_{j<=m} a_{2j}
                 + ((m + 1/2)/(n + 1/2)) * sum_{m<j<=n} a_{2j}

    for m = 0..n-1, using data a_0..a_{2n}.  Returns a difference vector of
    length 2n-1 whose odd entries are zero.  Fixed m with n -> infinity
    recovers the infinite-series b_{2m} = -sum_{j<=m} a_{2j}.
    """
    if a_ref.basis != CHEBYSHEV:
        raise ValueError("a_ref must be Chebyshev reference coefficients")
    if len(a_ref) < 2 * n + 1:
        raise ValueError("a_ref must have length >= 2n + 1")
    s = np.cumsum(a_ref.values[0:2 * n + 1:2])
    m = np.arange(n)
    b_even = (-(1.0 - m / n) / (1.0 + 1.0 / (2 * n)) * s[:n]
              + (m + 0.5) / (n + 0.5) * (s[n] - s[:n]))
    b = np.zeros(2 * n - 1)
    b[0::2] = b_even
    return CoefficientVector(DIFFERENCE, b)


def lagrange_ls(f, n, m_ref=None):
    """Chebyshev least squares of degree n with u(+-1) = 0 enforced by one
    Lagrange multiplier per parity.

    The diagonal (orthogonal-basis) system gives, per parity,
    lambda * (2*k - 1)/pi = sum of the k retained even coefficients and
    mu * 2*k'/pi = sum of the k' retained odd ones; the corrected
    coefficients are a_0 - lambda/pi and a_j - 2*lambda/pi (even j >= 2),
    a_j - 2*mu/pi (odd j).
    """
    if n < 2:
        raise ValueError("need degree n >= 2")
    a = reference_coeffs(f, CHEBYSHEV, n + 1, m_ref).values
    even = a[0::2]
    odd = a[1::2]
    even_sum = float(np.sum(even))
    odd_sum = float(np.sum(odd))
    lam = np.pi * even_sum / (2 * len(even) - 1)
    mu = np.pi * odd_sum / (2 * len(odd)) if len(odd) else 0.0
    out = a.copy()
    out[0] -= lam / np.pi
    out[2::2] -= 2.0 * lam / np.pi
    out[1::2] -= 2.0 * mu / np.pi
    meta = {"N": len(a), "degree": n, "lambda": float(lam), "mu": float(mu),
            "even_sum": even_sum, "odd_sum": odd_sum}
    return Approximant(CHEBYSHEV, LAGRANGE_LS, CoefficientVector(CHEBYSHEV, out), meta)


def parity_split(obj):
    """Split into (symmetric, antisymmetric) parts.

    For a CoefficientVector the opposite-parity entries are zeroed (only
    meaningful for the Chebyshev basis, where T_n has the parity of n).
    For a callable u the closures S(x) = (u(x) + u(-x))/2 and
    A(x) = (u(x) - u(-x))/2 are returned.
    """
    if isinstance(obj, CoefficientVector):
        if obj.basis == GEGENBAUER:
            raise ValueError("parity split is not defined for this basis")
        even = obj.values.copy()
        odd = obj.values.copy()
        even[1::2] = 0.0
        odd[0::2] = 0.0
        return (CoefficientVector(obj.basis, even, obj.order),
                CoefficientVector(obj.basis, odd, obj.order))
    if callable(obj):
        def symmetric(x, _u=obj):
            return (_u(x) + _u(-np.asarray(x, dtype=float))) / 2.0

        def antisymmetric(x, _u=obj):
            return (_u(x) - _u(-np.asarray(x, dtype=float))) / 2.0

        return symmetric, antisymmetric
    raise TypeError("parity_split expects a CoefficientVector or callable")
