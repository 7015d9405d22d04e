import math

import numpy as np
import pytest

from zetaline.quadrature import (QuadratureSpec, integrate_halfline,
                                 integrate_interval)


def spec(T=10.0, **kw):
    return QuadratureSpec(truncation_T=T, **kw)


def test_smooth_exponential():
    val, err = integrate_halfline(lambda u: np.exp(-u), spec(T=60.0))
    assert abs(val - 1.0) < 1e-12
    assert err < 1e-9


def test_log_endpoint_singularity():
    val, _ = integrate_halfline(np.log, spec(T=1.0), endpoint_singular=True)
    assert abs(val - (-1.0)) < 1e-9


def test_interior_log_singularity():
    f = lambda u: np.log(np.abs(u - 1.0))
    val, _ = integrate_halfline(f, spec(T=2.0), singularities=[1.0])
    assert abs(val - (-2.0)) < 1e-8


def test_jump_split():
    f = lambda u: np.where(u >= 1.0, 1.0, 0.0) * np.exp(-u)
    val, _ = integrate_halfline(f, spec(T=80.0), jumps=[1.0])
    assert abs(val - math.exp(-1.0)) < 1e-12


def test_algebraic_tail_compactification():
    val, err = integrate_halfline(lambda u: 1.0 / (1.0 + u * u), spec(T=10.0),
                                  algebraic_tail=True)
    assert abs(val - math.pi / 2.0) < 1e-9
    assert abs(val - math.pi / 2.0) <= 1.1 * err  # estimate covers the sliver


def test_oscillatory_splitting():
    L = 4.0
    f = lambda u: np.sin(L * u) * np.exp(-0.1 * u)
    val, _ = integrate_halfline(f, spec(T=400.0), osc_length=L)
    exact = L / (L * L + 0.01)
    assert abs(val - exact) < 1e-9


def test_interval_with_complex_integrand():
    f = lambda u: np.exp(1j * u)
    val, _ = integrate_interval(f, 0.0, math.pi, spec())
    assert abs(val - 2j) < 1e-12


def test_error_estimate_is_honest():
    # a kernel with a sharp peak: estimate must dominate the actual error
    f = lambda u: 1.0 / ((u - 3.0) ** 2 + 1e-4)
    val, err = integrate_halfline(f, spec(T=10.0))
    exact = (math.atan(3.0 / 1e-2) + math.atan(7.0 / 1e-2)) / 1e-2
    assert abs(val - exact) <= max(err, 1e-9) + 1e-6 * exact


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(rel_tol=-1.0)


def test_upper_override():
    val, _ = integrate_halfline(lambda u: np.ones_like(u), spec(T=50.0),
                                upper=2.0)
    assert abs(val - 2.0) < 1e-13
