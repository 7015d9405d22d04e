"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one pass/fail line (visible with pytest -s or in captured
output).  The module fixture scans zeros to 2100 so the doubled-cutoff
comparisons have data, and sieves to 1e6 for the Mellin identities.
"""

import math
import time
from types import SimpleNamespace

import numpy as np
import pytest

from zetaline import blaschke, checks, lineint, primes
from zetaline.blaschke import SyntheticZeroSet
from zetaline.cli import RunConfig, cmd_build
from zetaline.quadrature import QuadratureSpec
from zetaline.special import EULER_GAMMA, phi_tilde
from zetaline.zeros import scan_zeros
from zetaline.zeta import build_line_cache

RHO = 0.6 + 14j


@pytest.fixture(scope="module")
def env():
    table = scan_zeros(2100.0)
    cache = build_line_cache(table, spacing=0.5)
    tab = primes.build_mangoldt(10**6)
    spec = QuadratureSpec(truncation_T=1000.0)
    ctx = checks.CheckContext(spec=spec, zeros=table, cache=cache, tab=tab)
    return SimpleNamespace(table=table, cache=cache, tab=tab, spec=spec, ctx=ctx)


def _report(name: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def test_criterion_01_quadrature_calibration(env):
    t0 = time.time()
    recs = checks.check_kernels(env.ctx)
    elapsed = time.time() - t0
    worst = max(r.abs_diff for r in recs)
    ok = all(r.abs_diff <= 1e-9 + r.tail_estimate for r in recs) \
        and len(recs) == 20 and elapsed < 10.0
    _report("criterion 1 (closed-form battery)", ok,
            f"20 identities, worst |diff| {worst:.2e}, {elapsed:.2f}s")


def test_criterion_02_kernel_identities(env):
    t0 = time.time()
    worst = 0.0
    ok = True
    for s in (2.0, 3.0, 1.5 + 1j):
        g = lineint.gamma_kernel_identity(s, env.spec)
        a = lineint.atan_kernel_identity(s, env.spec)
        for r in (g, a):
            ok &= r.abs_diff <= 1e-6 + r.tail_estimate
            worst = max(worst, r.abs_diff)
    elapsed = time.time() - t0
    ok &= elapsed < 60.0
    _report("criterion 2 (gamma and square kernel identities)", ok,
            f"worst |diff| {worst:.2e}, {elapsed:.1f}s")


def test_criterion_03_zeta_C_factorisation(env):
    recs = checks.check_thm22(env.ctx)
    fact = [r for r in recs if r.check_id.startswith("zetaC_factorisation")]
    impr = [r for r in recs if "improves" in r.check_id]
    ok = all(r.passed for r in recs) and len(fact) == 2 and len(impr) == 2
    worst = max(r.abs_diff / abs(complex(r.rhs)) for r in fact)
    _report("criterion 3 (zeta_C factorisation + T-doubling)", ok,
            f"worst rel diff {worst:.2e}; doubling improves: "
            f"{[r.passed for r in impr]}")


def test_criterion_04_xi_from_counting_data(env):
    res = lineint.xi_poisson(2.0, env.spec, env.table)
    diff = abs(res.value - math.pi / 6.0)
    ok = diff <= 2e-3 + res.tail_estimate
    _report("criterion 4 (xi reconstruction at s=2)", ok,
            f"|diff| {diff:.2e} <= 2e-3 + tail {res.tail_estimate:.2e}")


def test_criterion_05_boundary_inequalities(env):
    gm1 = EULER_GAMMA - 1.0
    j1, j2 = lineint.j1_j2(env.spec, env.cache, env.table)
    b1 = j1.tail_estimate + j1.err_est
    b2 = j2.tail_estimate + j2.err_est
    ok = (abs(j1.real - gm1) <= 5e-3 + b1 and abs(j2.real - gm1) <= 5e-3 + b2
          and j1.real <= gm1 + b1 and j2.real >= gm1 - b2)
    _report("criterion 5 (J1/J2 against gamma-1)", ok,
            f"J1-(g-1)={j1.real - gm1:+.2e}, J2-(g-1)={j2.real - gm1:+.2e}")


def test_criterion_06_counting_decomposition(env):
    worst = 0.0
    for t in (20.0, 30.0, 50.0):
        rec = lineint.decomposition_check(t, env.spec, env.cache, env.table,
                                          h=1e-3)
        worst = max(worst, rec.abs_diff)
    _report("criterion 6 (N = N1 + N2 at mid-gap t)", worst <= 0.1,
            f"worst |N - N1 - N2| = {worst:.3f} <= 0.1")


def test_criterion_07_mellin_identities(env):
    recs = checks.check_thm31(env.ctx)
    ok = len(recs) == 4 and all(r.abs_diff <= 1e-6 + r.tail_estimate for r in recs)
    worst = max(r.abs_diff for r in recs)
    _report("criterion 7 (exp/Mellin identities at s=2)", ok,
            f"worst |diff| {worst:.2e} within 1e-6 + tail")


def test_criterion_08_prime_transforms(env):
    recs = {r.check_id: r for r in checks.check_thm32(env.ctx)}
    psi_rec = recs["mellin_psi_vs_logderiv"]
    reg_rec = recs["mellin_regularised_zeta"]
    ok = (psi_rec.abs_diff <= 1e-5 + psi_rec.tail_estimate
          and reg_rec.abs_diff <= 1e-4 + reg_rec.tail_estimate)
    _report("criterion 8 (psi Mellin transform, regularised product)", ok,
            f"psi |diff| {psi_rec.abs_diff:.2e}, exp-identity |diff| "
            f"{reg_rec.abs_diff:.2e}")


def test_criterion_09_fourier_side(env):
    recs_a = checks.check_thm33a(env.ctx)
    recs_b = checks.check_thm33b(env.ctx)
    main = [r for r in recs_a + recs_b if r.check_id.startswith("f_star_from")]
    ok = all(r.abs_diff <= 0.05 + r.tail_estimate for r in main)
    ok &= all(r.passed for r in recs_a + recs_b)
    worst = max(r.abs_diff for r in main)
    om = [r for r in recs_b if r.check_id == "omega_near_zero"][0]
    _report("criterion 9 (f11/f21 reproduce f* at T=2000)", ok,
            f"worst |diff| {worst:.2e} <= 0.05 + tail; omega "
            f"{abs(complex(om.lhs)):.2e} <= 5e-3 + tail")


def test_criterion_10_shifted_explicit_formula(env):
    recs = checks.check_thm34(env.ctx)
    exact = [r for r in recs if r.check_id.startswith("prime_side_exact")]
    main = [r for r in recs if r.check_id.startswith("prime_side_boundary")]
    ok = all(r.abs_diff <= 1e-8 for r in exact)
    ok &= main[0].abs_diff <= 5e-3 + main[0].tail_estimate   # r = 2
    ok &= main[1].abs_diff <= 0.05 + main[1].tail_estimate   # r = 0
    _report("criterion 10 (weighted prime formula, r=2 and r=0)", ok,
            f"exact equality {max(r.abs_diff for r in exact):.1e}; "
            f"r=2 |diff| {main[0].abs_diff:.2e}; r=0 |diff| {main[1].abs_diff:.2e}")


def test_criterion_11_synthetic_zero_suite(env):
    zs = SyntheticZeroSet((RHO,))
    checks_ok = []
    b1 = abs(abs(blaschke.blaschke_B(1.0, zs)) - abs((1 - RHO) / RHO) ** 2)
    checks_ok.append(b1 < 1e-12)
    checks_ok.append(blaschke.f_rho_pair(RHO) > 0.0)
    closed = blaschke.c_log_deriv_pair_closed(RHO)
    checks_ok.append(abs(blaschke.c_log_deriv_at_1(zs) - closed) < 1e-10)
    checks_ok.append(closed < 0.0)
    lx = math.log(10.0)
    lead = complex(10.0 ** complex(RHO)) / (RHO * (RHO - 1.0) * lx)
    rem = abs(phi_tilde(RHO, 10.0) - lead)
    checks_ok.append(rem <= 2.0 * 10.0**RHO.real / (RHO.imag**2 * lx * lx))
    mod = max(abs(abs(blaschke.blaschke_B(0.5 + 1j * u, zs)) - 1.0)
              for u in (0.0, 3.0, 14.0, 200.0))
    checks_ok.append(mod < 1e-10)
    _report("criterion 11 (synthetic off-line zero suite)", all(checks_ok),
            f"B(1) closed form {b1:.1e}; |B|-1 on line {mod:.1e}; "
            f"pair derivative {closed:.3e} < 0")


def test_criterion_12_zero_finder_and_build(env, tmp_path):
    n100 = int(np.sum(env.table.ordinates <= 100.0))
    t1 = float(env.table.ordinates[0])
    ok = (n100 == 29 and env.table.count_consistent
          and abs(t1 - 14.134725) <= 1e-5)
    t0 = time.time()
    cfg = RunConfig(max_height=1000.0, truncation_T=1000.0,
                    sieve_limit=10**6, out_dir=tmp_path / "out")
    rc = cmd_build(cfg)
    elapsed = time.time() - t0
    ok &= rc == 0 and elapsed < 1800.0
    _report("criterion 12 (zero finder + full build)", ok,
            f"29 below 100: {n100 == 29}; t1 = {t1:.9f}; "
            f"build(1000) in {elapsed:.0f}s < 1800s")
