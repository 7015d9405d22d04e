import math
from dataclasses import replace

import pytest

from zetaline.blaschke import SyntheticZeroSet
from zetaline.errors import DomainError
from zetaline.lineint import (atan_kernel_identity, decomposition_check, f11,
                              f21, gamma_kernel_identity, j1_j2, n1, n2,
                              omega_zeta, theorem34_check, xi_poisson,
                              zeta_B_eval, zeta_C_eval)
from zetaline.primes import f_star
from zetaline.special import EULER_GAMMA
from zetaline.zeta import xi, zeta

ZS = SyntheticZeroSet((0.6 + 14j,))


def test_omega_is_near_zero_and_nonnegative(zeros210, cache210, spec200):
    res = omega_zeta(spec200, cache210)
    assert res.real >= -(res.tail_estimate + res.err_est)
    assert abs(res.real) <= 5e-3 + res.tail_estimate


def test_omega_rerun_consistency(zeros210, cache210, spec200):
    lo = omega_zeta(replace(spec200, truncation_T=100.0), cache210)
    hi = omega_zeta(spec200, cache210)
    assert abs(hi.real - lo.real) <= lo.tail_estimate + lo.err_est + hi.err_est


def test_zeta_B_factorisation(zeros210, cache210, spec200):
    for s in (2.0, 3.0):
        res = zeta_B_eval(s, spec200, cache210)
        target = (s - 1.0) / s * zeta(s)
        assert abs(res.value - target) <= 5e-3 * abs(zeta(s)) + res.tail_estimate
        assert abs(res.value.imag) <= 1e-10


def test_zeta_C_factorisation(zeros210, spec200):
    for s in (2.0, 1.5 + 3j):
        res = zeta_C_eval(s, spec200, zeros210)
        target = (s - 1.0) / s * zeta(s)
        rel = abs(res.value - target) / abs(zeta(s))
        assert rel <= 5e-3 + res.tail_estimate + res.err_est
    real_res = zeta_C_eval(2.0, spec200, zeros210)
    assert abs(complex(real_res.value).imag) <= 1e-10


def test_zeta_C_requires_covered_height(zeros210):
    from zetaline.quadrature import QuadratureSpec
    with pytest.raises(DomainError):
        zeta_C_eval(2.0, QuadratureSpec(truncation_T=5000.0), zeros210)


@pytest.mark.parametrize("s", [2.0, 3.0, 1.5 + 1j])
def test_kernel_identities(s, spec200):
    g = gamma_kernel_identity(s, spec200)
    assert g.passed and g.abs_diff <= 1e-6 + g.tail_estimate
    a = atan_kernel_identity(s, spec200)
    assert a.passed and a.abs_diff <= 1e-6 + a.tail_estimate


def test_kernel_identity_closed_forms(spec200):
    g = gamma_kernel_identity(2.0, spec200)
    assert abs(g.rhs - 1.0 / math.pi) < 1e-12
    a = atan_kernel_identity(2.0, spec200)
    assert abs(a.rhs - 4.0) < 1e-14


def test_xi_poisson(zeros210, spec200):
    res = xi_poisson(2.0, spec200, zeros210)
    assert abs(res.value - xi(2.0)) <= 2e-3 + res.tail_estimate
    res1 = xi_poisson(1.0, spec200, zeros210)
    assert abs(res1.value - 0.5) <= 2e-3 + res1.tail_estimate


def test_xi_poisson_improves_with_T(zeros210, spec200):
    lo = xi_poisson(2.0, replace(spec200, truncation_T=50.0), zeros210)
    hi = xi_poisson(2.0, spec200, zeros210)
    assert abs(hi.value - xi(2.0)) <= abs(lo.value - xi(2.0))


def test_j1_j2(zeros210, cache210, spec200):
    gm1 = EULER_GAMMA - 1.0
    j1, j2 = j1_j2(spec200, cache210, zeros210)
    assert abs(j1.real - gm1) <= 5e-3 + j1.tail_estimate + j1.err_est
    assert abs(j2.real - gm1) <= 5e-3 + j2.tail_estimate + j2.err_est
    assert j1.real <= gm1 + j1.tail_estimate + j1.err_est
    assert j2.real >= gm1 - j2.tail_estimate - j2.err_est
    assert abs(j1.real - j2.real) <= 2.0 * (5e-3 + j1.tail_estimate + j2.tail_estimate)


def test_f11_f21_against_prime_side(zeros210, cache210, spec200, mangoldt1e5):
    for x in (2.0, math.e, 10.0):
        target = f_star(x, mangoldt1e5)
        a = f11(x, spec200, zeros210)
        b = f21(x, spec200, cache210)
        assert abs(a.real - target) <= 0.05 + a.tail_estimate + a.err_est, x
        assert abs(b.real - target) <= 0.05 + b.tail_estimate + b.err_est, x
        assert abs(a.real - b.real) <= 0.02


def test_f11_f21_limits(zeros210, cache210, spec200):
    x0 = 1.0 + 1e-6
    a = f11(x0, spec200, zeros210)
    assert abs(a.real) <= 1e-3
    om = omega_zeta(spec200, cache210)
    b = f21(x0, spec200, cache210)
    assert abs(b.real + 2.0 * om.real) <= 1e-3


def test_f11_domain(zeros210, spec200):
    with pytest.raises(DomainError):
        f11(1.0, spec200, zeros210)


def test_n1_odd():
    for t in (3.0, 20.0):
        assert abs(n1(-t) + n1(t)) < 1e-14


def test_n2_decomposition_at_midgap(zeros210, cache210, spec200):
    from zetaline.zeros import count_N
    for t in (20.0, 30.0):
        res = n2(t, spec200, cache210, zeros=zeros210)
        total = n1(t) + res.real
        assert abs(count_N(t, zeros210) - total) <= 0.1


def test_n2_guards(zeros210, cache210, spec200):
    with pytest.raises(DomainError):
        n2(14.1, spec200, cache210, zeros=zeros210)
    with pytest.raises(DomainError):
        n2(20.0, spec200, cache210, h=0.5, zeros=zeros210)


def test_decomposition_check_records(zeros210, cache210, spec200):
    rec = decomposition_check(20.0, spec200, cache210, zeros210)
    assert rec.passed
    assert abs(rec.lhs - 1.0) < 1e-12


def test_decomposition_check_synthetic(zeros210, cache210, spec200):
    rec = decomposition_check(20.0, spec200, cache210, zeros210, ZS)
    assert rec.passed  # grafted counting terms cancel against N3


def test_theorem34(zeros210, cache210, spec200, mangoldt1e5):
    recs = theorem34_check(10.0, 2.0, mangoldt1e5, spec200, cache210)
    assert recs[0].abs_diff <= 1e-8
    assert recs[1].passed
    recs0 = theorem34_check(10.0, 0.0, mangoldt1e5, spec200, cache210,
                            tolerance=0.05)
    assert recs0[0].abs_diff <= 1e-8
    assert recs0[1].passed


def test_theorem34_synthetic_consistency(zeros210, cache210, spec200, mangoldt1e5):
    # adding a synthetic pair shifts the zero-sum term only; the record
    # reports the imbalance against the unchanged prime side
    plain = theorem34_check(10.0, 2.0, mangoldt1e5, spec200, cache210)[1]
    synth = theorem34_check(10.0, 2.0, mangoldt1e5, spec200, cache210, ZS)[1]
    from zetaline.blaschke import theorem34_zero_sum
    shift = theorem34_zero_sum(10.0, 2.0, ZS)
    assert abs((complex(synth.rhs) + shift) - complex(plain.rhs)) < 1e-10


def test_omega_folding_is_exact_by_evenness(cache210):
    # the full-line integrand is even: both factors are, so the folded
    # half-line form equals half the two-sided sum identically
    import numpy as np
    u = np.array([0.3, 5.0, 40.0])
    k = lambda v: 1.0 / (v * v + 0.25)
    left = k(-u) * cache210.line_log_abs(-u)
    right = k(u) * cache210.line_log_abs(u)
    assert np.array_equal(left, right)


def test_zeta_B_rerun_never_worsens(zeros210, cache210, spec200):
    from zetaline.zeta import zeta
    target = 0.5 * zeta(2.0)
    lo = zeta_B_eval(2.0, replace(spec200, truncation_T=100.0), cache210)
    hi = zeta_B_eval(2.0, spec200, cache210)
    worse = abs(lo.value - target) + lo.tail_estimate + lo.err_est
    assert abs(hi.value - target) <= worse
