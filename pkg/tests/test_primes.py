import math

import numpy as np
import pytest
from scipy.integrate import quad

from zetaline.errors import DomainError
from zetaline.primes import (build_mangoldt, f_star, mellin_checks, pi_star,
                             pi_star_r, pistar_r_log_integral, prime_pi, psi,
                             psi_r)
from zetaline.special import ei0

LOG2, LOG3 = math.log(2.0), math.log(3.0)


def test_table_small_values():
    tab = build_mangoldt(10)
    expected = {2: LOG2, 3: LOG3, 4: LOG2, 5: math.log(5.0),
                7: math.log(7.0), 8: LOG2, 9: LOG3}
    assert set(tab.prime_powers.tolist()) == set(expected)
    for n, v in expected.items():
        assert tab.values[n] == v  # log p stored exactly, all powers alike
    assert tab.values[6] == 0.0


def test_lambda_vanishes_off_prime_powers(mangoldt1e5):
    for n in (12, 100, 2310, 99990):
        assert mangoldt1e5.values[n] == 0.0


def test_psi_ten():
    tab = build_mangoldt(10)
    expected = 3 * LOG2 + 2 * LOG3 + math.log(5.0) + math.log(7.0)
    assert abs(psi(10.0, tab) - expected) < 1e-14
    assert abs(expected - 7.832014180505469) < 1e-12


def test_pi_star_ten(mangoldt1e5):
    assert abs(pi_star(10.0, mangoldt1e5) - 16.0 / 3.0) < 1e-13


def test_pi_star_equals_weighted_prime_counts(mangoldt1e5):
    # pi_*(x) = sum over n of pi(x^(1/n))/n
    for x in (10, 100, 1234, 9999):
        direct = pi_star(float(x), mangoldt1e5)
        other = 0.0
        n = 1
        while x ** (1.0 / n) >= 2.0:
            other += prime_pi(x ** (1.0 / n) + 1e-12, mangoldt1e5) / n
            n += 1
        assert abs(direct - other) < 1e-10, x


def test_weighted_sums_reduce_at_r_zero(mangoldt1e5):
    for x in (10.0, 500.0):
        assert abs(psi_r(x, 0.0, mangoldt1e5) - psi(x, mangoldt1e5)) < 1e-12
        assert abs(pi_star_r(x, 0.0, mangoldt1e5) - pi_star(x, mangoldt1e5)) < 1e-12


def test_psi_2_of_ten():
    tab = build_mangoldt(10)
    expected = (LOG2 * (0.25 + 1.0 / 16 + 1.0 / 64)
                + LOG3 * (1.0 / 9 + 1.0 / 81)
                + math.log(5.0) / 25 + math.log(7.0) / 49)
    assert abs(psi_r(10.0, 2.0, tab) - expected) < 1e-14


def test_step_sums_include_jump_point(mangoldt1e5):
    below = psi(7.0 - 1e-9, mangoldt1e5)
    at = psi(7.0, mangoldt1e5)
    assert abs(at - below - math.log(7.0)) < 1e-12


def test_f_star_limit_at_one(mangoldt1e5):
    assert abs(f_star(1.0 + 1e-8, mangoldt1e5)) <= 1e-6


@pytest.mark.parametrize("x", [2.0, 10.0, 100.0])
def test_f_star_defining_integral_oracle(x, mangoldt1e5):
    tab = mangoldt1e5
    # step part of int_1^x pi_*(y)/y^2 dy, summed exactly over constancy spans
    pts = tab.prime_powers[tab.prime_powers <= x].astype(float)
    heights = np.cumsum(tab.pp_lambda[:pts.size] / tab.pp_log[:pts.size])
    uppers = np.append(pts[1:], x)
    step_int = float(np.sum(heights * (1.0 / pts - 1.0 / uppers)))
    smooth_int, _ = quad(lambda y: complex(ei0(math.log(y))).real / y**2,
                         1.0, x, epsabs=1e-13, limit=400)
    oracle = x * (step_int - smooth_int)
    assert abs(f_star(x, tab) - oracle) < 1e-7


def test_f_star_over_x_decreases(mangoldt1e5):
    vals = [abs(f_star(x, mangoldt1e5)) / x for x in (1e3, 1e4, 1e5)]
    assert vals[0] > vals[1] > vals[2]


@pytest.mark.parametrize("r", [0.0, 2.0, 1 + 1j])
def test_pistar_log_integral_identity(r, mangoldt1e5):
    x = 10.0
    lhs = pi_star_r(x, r, mangoldt1e5) * math.log(x) - psi_r(x, r, mangoldt1e5)
    rhs = pistar_r_log_integral(x, r, mangoldt1e5)
    assert abs(lhs - rhs) < 1e-12


def test_domain_errors(mangoldt1e5):
    with pytest.raises(DomainError):
        build_mangoldt(1)
    with pytest.raises(DomainError):
        psi(10**6, mangoldt1e5)
    with pytest.raises(DomainError):
        f_star(1.0, mangoldt1e5)


@pytest.mark.parametrize("s", [2.0, 3.0, 1.5 + 2j])
def test_mellin_identities(s, mangoldt1e5, spec200):
    recs = mellin_checks(s, mangoldt1e5.limit, mangoldt1e5, spec200)
    assert len(recs) == 7
    for r in recs:
        assert r.passed, f"{r.check_id}: {r.abs_diff} > {r.tolerance}+{r.tail_estimate}"


def test_mellin_checks_domain(mangoldt1e5, spec200):
    with pytest.raises(DomainError):
        mellin_checks(0.9, mangoldt1e5.limit, mangoldt1e5, spec200)
    with pytest.raises(DomainError):
        mellin_checks(2.0, 10**7, mangoldt1e5, spec200)


def test_sieve_cache_roundtrip(tmp_path, mangoldt1e5):
    from zetaline.primes import load_mangoldt, save_mangoldt
    path = tmp_path / "m.npz"
    save_mangoldt(mangoldt1e5, path, "cafe01234567")
    loaded = load_mangoldt(path)
    assert loaded.limit == mangoldt1e5.limit
    assert np.array_equal(loaded.values, mangoldt1e5.values)
    assert np.array_equal(loaded.primes, mangoldt1e5.primes)
    assert psi(10.0, loaded) == psi(10.0, mangoldt1e5)
