"""The endpoint-singular test family u(x) = g(x) (1-x^2)^phi log^theta(1-x^2).

g is a polynomial given by its Chebyshev coefficients; it must not vanish at
x = +-1 so that the exponents really control the endpoint behavior.  The
companion function v = u/(1-x^2) carries the same analysis shifted by one
power of the quadratic factor.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SingularFunction:
    """Parameters (g, phi, vartheta) of one member of the family.

    ``is_polynomial`` flags the degenerate case vartheta = 0 with integer
    phi, where the function is an ordinary polynomial and nothing is
    singular.  Construction does not reject it (nor small phi in (0, 1]);
    the flag lets callers opt out of asymptotic claims.
    """

    g_cheb: tuple
    phi: float
    vartheta: int

    def __post_init__(self):
        g = tuple(float(c) for c in np.atleast_1d(self.g_cheb))
        object.__setattr__(self, "g_cheb", g)
        if not (self.phi > 0):
            raise ValueError("phi must be > 0")
        if self.vartheta < 0 or int(self.vartheta) != self.vartheta:
            raise ValueError("vartheta must be a nonnegative integer")
        object.__setattr__(self, "vartheta", int(self.vartheta))
        gp = np.polynomial.chebyshev.chebval(1.0, g)
        gm = np.polynomial.chebyshev.chebval(-1.0, g)
        if gp == 0.0 or gm == 0.0:
            raise ValueError("g(+-1) must be nonzero")

    @property
    def is_polynomial(self):
        return self.vartheta == 0 and float(self.phi).is_integer()

    @property
    def kappa(self):
        """Algebraic order of convergence of the Chebyshev coefficients."""
        return 2.0 * self.phi + 1.0

    def g_at(self, x):
        return np.polynomial.chebyshev.chebval(x, self.g_cheb)


def make_exemplar():
    """The running example (1 + x/2) (1-x^2)^2 log(1-x^2); kappa = 5."""
    return SingularFunction(g_cheb=(1.0, 0.5), phi=2.0, vartheta=1)


def from_spec(spec):
    """Build a SingularFunction from a config value.

    Accepts the reserved preset name "exemplar" or a mapping with keys
    g_cheb, phi, vartheta.
    """
    if isinstance(spec, str):
        if spec == "exemplar":
            return make_exemplar()
        raise ValueError(f"unknown function preset {spec!r}")
    if isinstance(spec, SingularFunction):
        return spec
    try:
        return SingularFunction(
            g_cheb=tuple(spec["g_cheb"]),
            phi=float(spec["phi"]),
            vartheta=int(spec.get("vartheta", 0)),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad function spec: {spec!r}") from exc


def _quad_factor(x):
    # (1-x)(1+x) as a product; never 1 - x*x, which cancels near |x| = 1
    return (1.0 - x) * (1.0 + x)


def eval_u(f, x):
    """Evaluate u(x); exactly 0 at x = +-1 (limit value, valid since phi > 0)."""
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0):
        raise ValueError("evaluation point outside [-1, 1]")
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    q = _quad_factor(x)
    interior = q > 0.0
    out = np.zeros_like(x)
    if np.any(interior):
        qi = q[interior]
        val = f.g_at(x[interior]) * qi ** f.phi
        if f.vartheta:
            val = val * np.log(qi) ** f.vartheta
        out[interior] = val
    return out[0] if scalar else out


def eval_v(f, x):
    """Evaluate v(x) = u(x)/(1-x^2).

    Endpoints use the limit: 0 when phi > 1, g(+-1) when phi = 1 and
    vartheta = 0; any other combination is unbounded and raises.
    """
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0):
        raise ValueError("evaluation point outside [-1, 1]")
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    q = _quad_factor(x)
    interior = q > 0.0
    out = np.empty_like(x)
    if not np.all(interior):
        if f.phi > 1.0:
            endpoint = 0.0
        elif f.phi == 1.0 and f.vartheta == 0:
            endpoint = None  # g(+-1), filled below
        else:
            raise ValueError("v(x) is unbounded at x = +-1 for this function")
        ends = ~interior
        out[ends] = f.g_at(x[ends]) if endpoint is None else endpoint
    if np.any(interior):
        qi = q[interior]
        val = f.g_at(x[interior]) * qi ** (f.phi - 1.0)
        if f.vartheta:
            val = val * np.log(qi) ** f.vartheta
        out[interior] = val
    return out[0] if scalar else out
