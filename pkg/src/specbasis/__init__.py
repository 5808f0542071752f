"""Chebyshev, difference and quadratic-factor polynomial bases for
approximating functions with weak endpoint singularities."""

from .cheb_core import (CHEBYSHEV, DIFFERENCE, GEGENBAUER, LOBATTO, QUADFACTOR,
                        ROOTS, CoefficientVector, Grid, NumericalError,
                        WeightSpec, basis_endpoint_slope, basis_eval,
                        clenshaw_eval, endpoint_deriv, gegenbauer_eval,
                        inner_product, make_grid)
from .singular_functions import (SingularFunction, eval_u, eval_v, from_spec,
                                 make_exemplar)
from .coeff_transforms import (a_from_b, a_from_c, b_from_a, b_from_c,
                               c_from_b, c_from_v_cheb, cheb_expand)
from .approximators import (Approximant, INTERPOLATION, LAGRANGE_LS,
                            LEAST_SQUARES, TRUNCATION, interpolate,
                            lagrange_ls, least_squares, ls_diff_closed_form,
                            parity_split, reference_coeffs, truncate)
from .analysis import (ErrorReport, aliasing_error, aliasing_power_law,
                       error_ratio_table, error_report, endpoint_slope_sweep,
                       fit_slope, quad_ls_bound, ratio_table, tail_bounds)

__version__ = "0.1.0"
