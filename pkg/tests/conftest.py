import numpy as np
import pytest

from specbasis import (CHEBYSHEV, DIFFERENCE, QUADFACTOR, SingularFunction,
                       b_from_a, make_exemplar, reference_coeffs)


@pytest.fixture(scope="session")
def exemplar():
    return make_exemplar()


@pytest.fixture(scope="session")
def exemplar_refs(exemplar):
    """Long infinite-series references for the exemplar, shared by tests."""
    a = reference_coeffs(exemplar, CHEBYSHEV, 520, m_ref=4160)
    b = b_from_a(a, 520)
    c = reference_coeffs(exemplar, QUADFACTOR, 520, m_ref=4160)
    return {"a": a, "b": b, "c": c}


@pytest.fixture(scope="session")
def power52():
    """(1 - x^2)^{5/2}: theta = 0, pure power law, kappa = 6."""
    return SingularFunction(g_cheb=(1.0,), phi=2.5, vartheta=0)


@pytest.fixture(scope="session")
def power52_refs(power52):
    a = reference_coeffs(power52, CHEBYSHEV, 600, m_ref=4800)
    b = b_from_a(a, 600)
    c = reference_coeffs(power52, QUADFACTOR, 600, m_ref=4800)
    return {"a": a, "b": b, "c": c}


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260810)
