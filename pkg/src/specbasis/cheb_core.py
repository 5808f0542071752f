"""Chebyshev/Gegenbauer evaluation, grids and weighted quadrature inner products.

Coefficient convention used throughout the package: a series is
``sum(values[n] * basis_n(x) for n in range(len(values)))`` with NO extra
factor on the n=0 term.  Formulas quoted from sources that use the
``2*a_0 + sum`` convention are rewritten accordingly.
"""

from dataclasses import dataclass, field

import numpy as np

CHEBYSHEV = "chebyshev"
DIFFERENCE = "difference"
QUADFACTOR = "quadfactor"
GEGENBAUER = "gegenbauer"

_BASES = (CHEBYSHEV, DIFFERENCE, QUADFACTOR, GEGENBAUER)

ROOTS = "roots"
LOBATTO = "lobatto"

WEIGHT_ALPHAS = (-2.5, -1.5, -0.5, 0.0)


class NumericalError(RuntimeError):
    """A computation produced non-finite values or an unusable system."""


@dataclass(frozen=True)
class WeightSpec:
    """Inner-product weight (1-x^2)^alpha; alpha in {-5/2, -3/2, -1/2, 0}."""

    alpha: float

    def __post_init__(self):
        if self.alpha not in WEIGHT_ALPHAS:
            raise ValueError(f"unsupported weight exponent {self.alpha}; "
                             f"must be one of {WEIGHT_ALPHAS}")


@dataclass(frozen=True)
class Grid:
    kind: str
    nodes: np.ndarray = field(repr=False)

    @property
    def n_points(self):
        return len(self.nodes)


@dataclass(frozen=True)
class CoefficientVector:
    """Finite coefficient list tagged with its basis.

    ``order`` is the Gegenbauer order m and must be given exactly for the
    Gegenbauer basis.  Indices start at 0; note that difference and
    quadratic-factor functions of index n are polynomials of degree n+2.
    """

    basis: str
    values: np.ndarray = field(repr=False)
    order: int | None = None

    def __post_init__(self):
        if self.basis not in _BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        vals = np.atleast_1d(np.asarray(self.values, dtype=float))
        object.__setattr__(self, "values", vals)
        if vals.ndim != 1 or len(vals) < 1:
            raise ValueError("coefficient vector must be a 1-d sequence of length >= 1")
        if not np.all(np.isfinite(vals)):
            raise ValueError("coefficient vector contains non-finite entries")
        if (self.basis == GEGENBAUER) != (self.order is not None):
            raise ValueError("order is required for the Gegenbauer basis and "
                             "forbidden otherwise")
        if self.order is not None and self.order < 1:
            raise ValueError("Gegenbauer order must be >= 1")

    def __len__(self):
        return len(self.values)


def roots_angles(n):
    """Midpoint angles t_k = (2k-1)pi/(2n), k=1..n, so that cos(t_k) are the
    zeros of T_n in descending order."""
    return (2.0 * np.arange(1, n + 1) - 1.0) * np.pi / (2.0 * n)


def make_grid(kind, n):
    """Build the roots or Lobatto node set on [-1, 1], nodes ascending."""
    if kind == ROOTS:
        if n < 1:
            raise ValueError("roots grid needs n >= 1")
        nodes = -np.cos(roots_angles(n))
    elif kind == LOBATTO:
        if n < 2:
            raise ValueError("Lobatto grid needs n >= 2")
        nodes = -np.cos(np.arange(n) * np.pi / (n - 1))
    else:
        raise ValueError(f"unknown grid kind {kind!r}")
    return Grid(kind, nodes)


def _check_domain(x):
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0):
        raise ValueError("evaluation point outside [-1, 1]")
    return x


def cheb_t(n, x):
    """T_n(x) for scalar or array x.

    Uses cos(n*arccos(x)) away from the endpoints and the three-term
    recurrence for |x| > 0.999 where arccos loses accuracy.
    """
    x = _check_domain(x)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    out = np.empty_like(x)
    near = np.abs(x) > 0.999
    if np.any(~near):
        out[~near] = np.cos(n * np.arccos(x[~near]))
    if np.any(near):
        xe = x[near]
        tkm1 = np.ones_like(xe)
        tk = xe.copy()
        if n == 0:
            out[near] = tkm1
        elif n == 1:
            out[near] = tk
        else:
            for _ in range(n - 1):
                tkm1, tk = tk, 2.0 * xe * tk - tkm1
            out[near] = tk
    return out[0] if scalar else out


def basis_eval(basis, n, x, order=None):
    """Evaluate the n-th basis function at x.

    chebyshev: T_n; difference: T_{n+2} - T_n; quadfactor: (1-x^2) T_n;
    gegenbauer: the order-`order` polynomial normalized to 1 at x = 1.
    """
    if n < 0:
        raise ValueError("basis index must be >= 0")
    if basis == CHEBYSHEV:
        return cheb_t(n, x)
    if basis == DIFFERENCE:
        return cheb_t(n + 2, x) - cheb_t(n, x)
    if basis == QUADFACTOR:
        x = _check_domain(x)
        return (1.0 - x) * (1.0 + x) * cheb_t(n, x)
    if basis == GEGENBAUER:
        if order is None:
            raise ValueError("Gegenbauer basis needs an order")
        return gegenbauer_eval(order, n, x)
    raise ValueError(f"unknown basis {basis!r}")


def _clenshaw(values, x):
    # np.polynomial implements the standard Clenshaw recurrence in binary64
    return np.polynomial.chebyshev.chebval(x, values)


def clenshaw_eval(coeffs, x):
    """Evaluate a coefficient vector at x (scalar or array).

    Difference/quadfactor vectors are first converted to the equivalent
    Chebyshev expansion so every basis shares the same stable kernel.
    """
    x = _check_domain(x)
    if coeffs.basis == CHEBYSHEV:
        return _clenshaw(coeffs.values, x)
    if coeffs.basis in (DIFFERENCE, QUADFACTOR):
        from .coeff_transforms import cheb_expand

        return _clenshaw(cheb_expand(coeffs).values, x)
    raise ValueError("clenshaw_eval supports the chebyshev, difference and "
                     "quadfactor bases")


def inner_product(f, g, weight, n_col):
    """Quadrature inner product <f, g> with weight (1-x^2)^alpha.

    Uses x = cos(t) midpoint nodes: (pi/n_col) * sum f(x_k) g(x_k)
    sin(t_k)^(2*alpha+1).  Exact Gauss-Chebyshev for alpha = -1/2 and
    polynomial integrands of degree <= 2*n_col - 1.  For alpha < -1/2 the
    product f*g must cancel the endpoint growth; sampled non-finite values
    raise NumericalError rather than being regularized.
    """
    if n_col < 1:
        raise ValueError("n_col must be >= 1")
    alpha = weight.alpha if isinstance(weight, WeightSpec) else WeightSpec(float(weight)).alpha
    t = roots_angles(n_col)
    x = np.cos(t)
    fx = np.asarray(f(x), dtype=float)
    gx = np.asarray(g(x), dtype=float)
    vals = fx * gx * np.sin(t) ** (2.0 * alpha + 1.0)
    if not np.all(np.isfinite(vals)):
        raise NumericalError("non-finite integrand sample in inner_product")
    return (np.pi / n_col) * float(np.sum(vals))


def endpoint_deriv(n, k):
    """d^k T_n / dx^k at x = 1, exactly: prod_{j<k} (n^2 - j^2)/(2j+1).

    Returns a Python int (the value is always an integer)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    num, den = 1, 1
    for j in range(k):
        num *= n * n - j * j
        den *= 2 * j + 1
    if num % den:
        raise AssertionError("endpoint derivative is not an integer")
    return num // den


def gegenbauer_eval(m, n, x):
    """Gegenbauer polynomial of order m >= 1 and degree n, scaled to 1 at x=1.

    Computed as the m-th derivative of T_{n+m}, obtained by differentiating
    the Chebyshev coefficient representation, divided by its value at x = 1.
    """
    if m < 1:
        raise ValueError("Gegenbauer order must be >= 1")
    if n < 0:
        raise ValueError("degree must be >= 0")
    x = _check_domain(x)
    unit = np.zeros(n + m + 1)
    unit[n + m] = 1.0
    dcoef = np.polynomial.chebyshev.chebder(unit, m)
    return _clenshaw(dcoef, x) / endpoint_deriv(n + m, m)


def basis_endpoint_slope(basis, n):
    """d(basis_n)/dx at x = +1: n^2, 4n+4 or -2 (exact integers)."""
    if n < 0:
        raise ValueError("basis index must be >= 0")
    if basis == CHEBYSHEV:
        return n * n
    if basis == DIFFERENCE:
        return 4 * n + 4
    if basis == QUADFACTOR:
        # d/dx[(1-x^2) T_n] = -2x T_n + (1-x^2) T_n' -> -2 at x = 1
        return -2
    raise ValueError(f"unknown basis {basis!r}")
