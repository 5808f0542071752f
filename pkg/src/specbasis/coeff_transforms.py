"""Exact linear maps between the a_n (Chebyshev), b_n (difference) and
c_n (quadratic-factor) coefficient systems.

All maps come from the term-by-term difference relations between the three
series; none of them renormalizes or thresholds anything.  The partial-sum
maps (b_from_a, c_from_b) reproduce the infinite-series coefficients only
for functions vanishing at both endpoints, and c_from_b carries a
truncation-induced error of order |b_N| * N in its low-degree output.
"""

import numpy as np

from .cheb_core import CHEBYSHEV, DIFFERENCE, QUADFACTOR, CoefficientVector


def _require(coeffs, *bases):
    if coeffs.basis not in bases:
        raise ValueError(f"expected a vector in {'/'.join(bases)} basis, got "
                         f"{coeffs.basis}")


def cheb_expand(coeffs):
    """Expand a difference or quadratic-factor vector into Chebyshev form.

    Length n input gives length n+2 output (the basis functions have degree
    index+2).  Uses sigma_n = T_{n+2} - T_n and
    rho_0 = (T_0 - T_2)/2, rho_1 = (T_1 - T_3)/4,
    rho_n = -(T_{n+2} + T_{n-2})/4 + T_n/2.
    """
    _require(coeffs, DIFFERENCE, QUADFACTOR)
    vals = coeffs.values
    a = np.zeros(len(vals) + 2)
    if coeffs.basis == DIFFERENCE:
        for n, bn in enumerate(vals):
            a[n] -= bn
            a[n + 2] += bn
    else:
        for n, cn in enumerate(vals):
            if n == 0:
                a[0] += cn / 2.0
                a[2] -= cn / 2.0
            elif n == 1:
                a[1] += cn / 4.0
                a[3] -= cn / 4.0
            else:
                a[n + 2] -= cn / 4.0
                a[n - 2] -= cn / 4.0
                a[n] += cn / 2.0
    return CoefficientVector(CHEBYSHEV, a)


def b_from_a(a, n_out=None):
    """Difference coefficients b_n = -sum_{j<=n, j=n mod 2} a_j.

    Exact for the infinite series only when the even and odd coefficient
    sums of a vanish (u(+-1) = 0); the caller checks those residuals.
    """
    _require(a, CHEBYSHEV)
    vals = a.values
    n_out = len(vals) if n_out is None else n_out
    if n_out > len(vals):
        raise ValueError("n_out exceeds the available Chebyshev coefficients")
    b = np.empty(n_out)
    run = [0.0, 0.0]
    for n in range(n_out):
        run[n % 2] += vals[n]
        b[n] = -run[n % 2]
    return CoefficientVector(DIFFERENCE, b)


def a_from_b(b):
    """Chebyshev expansion of a difference vector (inverse of b_from_a,
    including the two trailing terms a_{N+1} = b_{N-1}, a_{N+2} = b_N)."""
    _require(b, DIFFERENCE)
    return cheb_expand(b)


def c_from_v_cheb(v_coeffs):
    """Relabel the Chebyshev coefficients of v as quadratic-factor
    coefficients of u = (1-x^2) v; identity on the values."""
    _require(v_coeffs, CHEBYSHEV)
    return CoefficientVector(QUADFACTOR, v_coeffs.values.copy())


def a_from_c(c):
    """Chebyshev expansion of a quadratic-factor vector."""
    _require(c, QUADFACTOR)
    return cheb_expand(c)


def c_from_b(b):
    """Solve the c/b difference relation backwards with c_{N+1} = c_{N+2} = 0.

    Seeds c_N = -4 b_N, c_{N-1} = -4 b_{N-1}, then c_{n-2} = c_n - 4 b_{n-2}
    downward; c_0 is halved at the end (its series has factor -2, while the
    odd chain keeps -4 throughout).
    """
    _require(b, DIFFERENCE)
    vals = b.values
    n = len(vals)
    c = np.zeros(n)
    c[n - 1] = -4.0 * vals[n - 1]
    if n >= 2:
        c[n - 2] = -4.0 * vals[n - 2]
    for i in range(n - 3, -1, -1):
        c[i] = c[i + 2] - 4.0 * vals[i]
    c[0] /= 2.0
    return CoefficientVector(QUADFACTOR, c)


def b_from_c(c):
    """b_0 = (c_2 - 2 c_0)/4 and b_n = (c_{n+2} - c_n)/4, out-of-range c = 0.

    Exact inverse of c_from_b in floating point."""
    _require(c, QUADFACTOR)
    vals = c.values
    ext = np.concatenate([vals, [0.0, 0.0]])
    b = (ext[2:] - ext[:-2]) / 4.0
    b[0] = (ext[2] - 2.0 * ext[0]) / 4.0
    return CoefficientVector(DIFFERENCE, b)
