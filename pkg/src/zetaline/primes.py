"""Sieve-backed arithmetic functions and their Mellin-transform checks.

The von Mangoldt table stores the nonzero values sparsely (prime powers
only), so the weighted partial sums psi_r and pi_*_r reduce to vectorised
dot products.  Mellin transforms of these step functions are computed
piecewise-exactly by Abel summation: the quadrature error is zero and only
the truncation tail beyond the sieve limit has to be estimated.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass

import numpy as np
from scipy.special import expi

from .errors import DomainError
from .quadrature import QuadratureSpec, _edge_refine, integrate_interval
from .report import CheckRecord
from .special import EULER_GAMMA, ei0

_DEFAULT_ALPHA = 0.6 + 14.0j


@dataclass
class MangoldtTable:
    """Lambda(n) for n <= limit; log p stored exactly once per prime."""

    limit: int
    values: np.ndarray        # dense, index 0..limit
    prime_powers: np.ndarray  # indices with Lambda(n) != 0
    primes: np.ndarray

    @property
    def pp_lambda(self) -> np.ndarray:
        return self.values[self.prime_powers]

    @property
    def pp_log(self) -> np.ndarray:
        return np.log(self.prime_powers.astype(float))


def build_mangoldt(X: int) -> MangoldtTable:
    """Exact von Mangoldt table for 2 <= n <= X (memory ~ 9 bytes/n)."""
    X = int(X)
    if not 2 <= X <= 10**8:
        raise DomainError(f"sieve limit out of range: {X}")
    is_prime = np.ones(X + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, int(math.isqrt(X)) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    primes = np.nonzero(is_prime)[0]
    values = np.zeros(X + 1)
    for p in primes:
        lp = math.log(p)
        pk = int(p)
        while pk <= X:
            values[pk] = lp
            pk *= int(p)
    return MangoldtTable(limit=X, values=values,
                         prime_powers=np.nonzero(values)[0], primes=primes)


def save_mangoldt(tab: MangoldtTable, path, config_hash: str) -> None:
    np.savez_compressed(path, limit=tab.limit, values=tab.values,
                        primes=tab.primes,
                        config=np.bytes_(config_hash.encode()))


def load_mangoldt(path) -> MangoldtTable:
    data = np.load(path)
    values = data["values"]
    return MangoldtTable(limit=int(data["limit"]), values=values,
                         prime_powers=np.nonzero(values)[0],
                         primes=data["primes"])


def _check_x(x: float, tab: MangoldtTable) -> float:
    if not 1.0 <= x <= tab.limit:
        raise DomainError(f"x={x} outside [1, {tab.limit}]")
    return float(x)


def psi(x: float, tab: MangoldtTable) -> float:
    """Chebyshev psi(x), the partial sum of Lambda(n) up to x inclusive."""
    x = _check_x(x, tab)
    k = np.searchsorted(tab.prime_powers, x, side="right")
    return float(tab.pp_lambda[:k].sum())


def pi_star(x: float, tab: MangoldtTable) -> float:
    """Weighted prime-power count, sum of Lambda(n)/log n up to x."""
    x = _check_x(x, tab)
    k = np.searchsorted(tab.prime_powers, x, side="right")
    return float((tab.pp_lambda[:k] / tab.pp_log[:k]).sum())


def psi_r(x: float, r: complex, tab: MangoldtTable) -> complex:
    """Sum of Lambda(n)/n^r up to x; reduces to psi at r = 0."""
    x = _check_x(x, tab)
    k = np.searchsorted(tab.prime_powers, x, side="right")
    return complex((tab.pp_lambda[:k] * np.exp(-complex(r) * tab.pp_log[:k])).sum())


def pi_star_r(x: float, r: complex, tab: MangoldtTable) -> complex:
    """Sum of Lambda(n)/(n^r log n) up to x; reduces to pi_star at r = 0."""
    x = _check_x(x, tab)
    k = np.searchsorted(tab.prime_powers, x, side="right")
    lam, ln = tab.pp_lambda[:k], tab.pp_log[:k]
    return complex((lam / ln * np.exp(-complex(r) * ln)).sum())


def prime_pi(x: float, tab: MangoldtTable) -> int:
    """Number of primes <= x (cross-check helper)."""
    return int(np.searchsorted(tab.primes, x, side="right"))


def f_star(x: float, tab: MangoldtTable) -> float:
    """x (sum Lambda/(n log n) + Ei0(-log x)) - (pi_*(x) - Ei0(log x)).

    Closed form of the scaled integral of (pi_*(y) - Ei0(log y))/y^2;
    continuous between prime powers and -> 0 as x -> 1+.
    """
    x = _check_x(x, tab)
    if x <= 1.0:
        raise DomainError("f_star requires x > 1")
    lx = math.log(x)
    head = pi_star_r(x, 1.0, tab).real + complex(ei0(-lx)).real
    return x * head - (pi_star(x, tab) - complex(ei0(lx)).real)


def pistar_r_log_integral(x: float, r: complex, tab: MangoldtTable) -> complex:
    """integral_1^x pi_{*,r}(y)/y dy, exact piecewise over the step function."""
    x = _check_x(x, tab)
    k = np.searchsorted(tab.prime_powers, x, side="right")
    pts = tab.prime_powers[:k].astype(float)
    if pts.size == 0:
        return 0.0 + 0.0j
    lam, ln = tab.pp_lambda[:k], tab.pp_log[:k]
    heights = np.cumsum(lam / ln * np.exp(-complex(r) * ln))
    lo = np.log(pts)
    hi = np.append(np.log(pts[1:]), math.log(x))
    return complex(np.sum(heights * (hi - lo)))


def mellin_step(s: complex, X: float, tab: MangoldtTable, weights: np.ndarray) -> complex:
    """Exact s * integral_1^X F(x) x^{-s-1} dx for a prime-power step sum F.

    Equals sum w_n n^{-s} - F(X) X^{-s} by Abel summation.
    """
    k = np.searchsorted(tab.prime_powers, X, side="right")
    w, ln = weights[:k], tab.pp_log[:k]
    s = complex(s)
    return complex((w * np.exp(-s * ln)).sum() - w.sum() * X ** (-s))


# ---------------------------------------------------------------------------
# Mellin identity checks
# ---------------------------------------------------------------------------

def _laplace_quad(f, L: float, spec: QuadratureSpec, tol: float = 1e-10,
                  log_endpoint: bool = False, osc_freq: float = 0.0):
    """integral_0^L f(v) dv with optional log endpoint at v = 0.

    osc_freq adds breakpoints at multiples of pi/osc_freq so oscillatory
    entire-part factors never span many periods per panel.
    """
    jumps = ()
    if osc_freq > 0.0:
        jumps = np.arange(0.0, L, math.pi / osc_freq).tolist()
    if not log_endpoint:
        return integrate_interval(f, 0.0, L, spec, jumps=jumps, abs_tol=tol)
    cut = min(1.0, L)
    v1, e1 = _edge_refine(f, 0.0, cut, tol, spec.max_depth)
    v2, e2 = integrate_interval(f, cut, L, spec, jumps=jumps, abs_tol=tol)
    return v1 + v2, e1 + e2


def _record(check_id: str, lhs: complex, rhs: complex, tol: float,
            tail: float, t0: float) -> CheckRecord:
    return CheckRecord(check_id=check_id, lhs=lhs, rhs=rhs,
                       abs_diff=abs(complex(lhs) - complex(rhs)), tolerance=tol,
                       tail_estimate=float(tail),
                       seconds=time.perf_counter() - t0)


def mellin_checks(s: complex, X: int, tab: MangoldtTable,
                  spec: QuadratureSpec | None = None,
                  alpha: complex = _DEFAULT_ALPHA) -> list:
    """Verify the exp/Mellin representation identities at one s.

    Smooth integrands run through quadrature after x = e^v; step-function
    transforms are Abel-summed exactly.  Every record carries the
    analytically estimated truncation tail of its x-integral.
    """
    from .zeta import zeta, zeta_deriv  # deferred: zeta pulls in heavier deps

    s = complex(s)
    alpha = complex(alpha)
    if not s.real > 1.0:
        raise DomainError(f"mellin checks need Re(s) > 1, got {s}")
    if X > tab.limit:
        raise DomainError(f"X={X} beyond sieve limit {tab.limit}")
    if not (s.real > alpha.real and alpha.imag != 0.0):
        raise DomainError("need Re(s) > Re(alpha) and alpha off the real axis")
    spec = spec or QuadratureSpec()
    L = math.log(X)
    sig = s.real
    out = []

    # exp(s * int (gamma + log log x)/x^{s+1} dx) = 1/s
    t0 = time.perf_counter()
    val, err = _laplace_quad(lambda v: (EULER_GAMMA + np.log(v)) * np.exp(-s * v),
                             L, spec, log_endpoint=True)
    tail = (abs(EULER_GAMMA + math.log(L)) + 1.0 / sig) * math.exp(-sig * L) / sig
    out.append(_record("mellin_inv_s", np.exp(s * val), 1.0 / s,
                       1e-6, abs(s) * (tail + err), t0))

    # exp(s * int Li(x)/x^{s+1} dx) = 1/(s-1);  Li(e^v) = Ei(v)
    t0 = time.perf_counter()
    val, err = _laplace_quad(lambda v: expi(v) * np.exp(-s * v),
                             L, spec, log_endpoint=True)
    tail = math.exp((1.0 - sig) * L) / (L * (sig - 1.0))
    out.append(_record("mellin_inv_s_minus_1", np.exp(s * val), 1.0 / (s - 1.0),
                       1e-6, abs(s) * (tail + err), t0))

    # exp(-s * int phi_alpha(x)/x^{s+1} dx) = 1 - s/alpha
    t0 = time.perf_counter()
    log_m_alpha = cmath.log(-alpha)

    def phi_v(v):
        return (EULER_GAMMA + np.log(v) + log_m_alpha
                + np.asarray(ei0(alpha * np.asarray(v)))) * np.exp(-s * np.asarray(v))

    val, err = _laplace_quad(phi_v, L, spec, log_endpoint=True,
                             osc_freq=abs(alpha.imag))
    tail = math.exp((alpha.real - sig) * L) / (abs(alpha) * L * (sig - alpha.real))
    out.append(_record("mellin_one_minus_s_over_alpha", np.exp(-s * val),
                       1.0 - s / alpha, 1e-6, abs(s) * (tail + err), t0))

    # exp(-s(s-1) * int Phi_alpha(x)/x^{s+1} dx) = 1 - s/alpha
    t0 = time.perf_counter()
    branch = cmath.log(-alpha) - cmath.log(-(alpha - 1.0))
    log_m_alpha1 = cmath.log(-(alpha - 1.0))

    def big_phi_v(v):
        v = np.asarray(v)
        x = np.exp(v)
        ph_a = EULER_GAMMA + np.log(v) + log_m_alpha + np.asarray(ei0(alpha * v))
        ph_a1 = EULER_GAMMA + np.log(v) + log_m_alpha1 + np.asarray(ei0((alpha - 1.0) * v))
        return (x * ph_a1 - ph_a + x * branch) * np.exp(-s * v)

    val, err = _laplace_quad(big_phi_v, L, spec, log_endpoint=True,
                             osc_freq=abs(alpha.imag))
    tail = (math.exp((alpha.real - sig) * L) / (abs(alpha * (alpha - 1.0)) * L * (sig - alpha.real))
            + abs(branch) * math.exp((1.0 - sig) * L) / (sig - 1.0))
    out.append(_record("mellin_scaled_big_phi", np.exp(-s * (s - 1.0) * val),
                       1.0 - s / alpha, 1e-6, abs(s * (s - 1.0)) * (tail + err), t0))

    # zeta(s) = exp(s * int pi_*(x)/x^{s+1} dx)
    t0 = time.perf_counter()
    weights = tab.pp_lambda / tab.pp_log
    val = mellin_step(s, X, tab, weights)
    ztarget = zeta(s)
    tail = X ** (1.0 - sig) / ((sig - 1.0) * L)
    out.append(_record("mellin_zeta_from_pistar", np.exp(val), ztarget,
                       1e-5, abs(ztarget) * tail, t0))

    # s * int psi(x)/x^{s+1} dx = -zeta'(s)/zeta(s)
    t0 = time.perf_counter()
    val = mellin_step(s, X, tab, tab.pp_lambda)
    tail = 1.2 * abs(s) * X ** (1.0 - sig) / (sig - 1.0)  # psi(x) <= 1.2 x
    out.append(_record("mellin_psi_vs_logderiv", val, -zeta_deriv(s) / zeta(s),
                       1e-5, tail, t0))

    # (s-1)/s zeta(s) = exp[ s * int (pi_*(x) - Ei0(log x)) / x^{s+1} dx ]
    t0 = time.perf_counter()
    step_part = mellin_step(s, X, tab, weights)
    smooth, err = _laplace_quad(lambda v: np.asarray(ei0(np.asarray(v))) * np.exp(-s * np.asarray(v)),
                                L, spec)
    lhs = np.exp(step_part - s * smooth)
    rhs = (s - 1.0) / s * ztarget
    tail = (X ** (1.0 - sig) / ((sig - 1.0) * L)
            + math.exp((1.0 - sig) * L) / (L * (sig - 1.0)))
    out.append(_record("mellin_regularised_zeta", lhs, rhs,
                       1e-4, abs(rhs) * (tail + abs(s) * err), t0))
    return out
