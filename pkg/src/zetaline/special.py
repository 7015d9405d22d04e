"""Scalar special functions and analytic building blocks.

Everything here is a pure function of its arguments: the exponential
integral family (Ei, its entire part, Li), the phase function of the zeta
functional equation and its asymptotic form, and the phi/Phi/Theta/K
kernel functions used by the Mellin-side identities.  Principal branches
are used throughout; inputs on a branch cut raise DomainError instead of
getting a one-sided value.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy.special import exp1, expi, loggamma

from .errors import DomainError

EULER_GAMMA = float(np.euler_gamma)

# Sum over k of [t/(2k) - t/(2k+1/2)] equals (t/2)*(4 - pi/2 - 3 log 2);
# splitting it off leaves a tail of O(t^3/k^3) terms that can be accelerated.
_PHASE_LINEAR = 4.0 - math.pi / 2.0 - 3.0 * math.log(2.0)

# Power-series radius for the entire part of Ei.  The alternating series
# loses ~e^|z| in cancellation when Re(z) <= 0, so the switch must sit well
# below the ~30 where term count alone would argue for it: at 12 the loss
# stays under ~4e-11 absolute while the E1/Ei continuation is accurate
# everywhere outside.
_EI0_SERIES_RADIUS = 12.0
_DIAG_RADIUS = 1e-8
_EI0_TERMS = 48  # |z|^k/k! below 1e-18 of the sum for |z| <= 12 by k = 48


def euler_gamma() -> float:
    """Euler's constant, the limit of the harmonic sum minus log n."""
    return EULER_GAMMA


def log_gamma(s: complex) -> complex:
    """Principal branch of log Gamma; rejects the poles at 0, -1, -2, ..."""
    s = complex(s)
    if s.imag == 0.0 and s.real <= 0.0 and s.real == round(s.real):
        raise DomainError(f"log_gamma pole at s={s}")
    return complex(loggamma(s))


def _ei0_scalar(z: complex) -> complex:
    if z == 0:
        return 0.0 + 0.0j
    if abs(z) <= _EI0_SERIES_RADIUS:
        term = 1.0 + 0.0j  # z^k / k!
        acc = 0.0 + 0.0j
        for k in range(1, _EI0_TERMS + 1):
            term *= z / k
            acc += term / k
        return acc
    if z.imag == 0.0 and z.real > 0.0:
        return complex(expi(z.real) - EULER_GAMMA - math.log(z.real))
    # off the positive axis: entire part = -gamma - log(-z) - E1(-z)
    return complex(-EULER_GAMMA - cmath.log(-z) - exp1(-z))


def ei0(z: complex):
    """Entire part of the exponential integral, sum of z^k/(k*k!).

    Power series near the origin; elsewhere through E1/Ei with the
    principal logarithm subtracted, which keeps the relative error near
    1e-12 across |z| <= 100 where the raw series would cancel away.
    Accepts scalars or arrays.
    """
    if np.ndim(z) == 0:
        return _ei0_scalar(complex(z))
    zz = np.asarray(z, dtype=complex)
    out = np.empty(zz.shape, dtype=complex)
    flat = zz.ravel()
    res = out.ravel()
    az = np.abs(flat)
    small = az <= _EI0_SERIES_RADIUS
    if small.any():
        zs = flat[small][:, None]
        k = np.arange(1, _EI0_TERMS + 1, dtype=float)
        terms = np.cumprod(zs / k, axis=1)  # z^k / k!
        res[small] = (terms / k).sum(axis=1)
    big = ~small
    if big.any():
        zb = flat[big]
        pos = (zb.imag == 0.0) & (zb.real > 0.0)
        vals = np.empty(zb.shape, dtype=complex)
        if pos.any():
            xr = zb[pos].real
            vals[pos] = expi(xr) - EULER_GAMMA - np.log(xr)
        if (~pos).any():
            w = zb[~pos]
            vals[~pos] = -EULER_GAMMA - np.log(-w) - exp1(-w)
        res[big] = vals
    return out


def ei(x: float) -> float:
    """Real exponential integral for x > 0 (principal value)."""
    if not x > 0.0:
        raise DomainError(f"ei requires x > 0, got {x}")
    return float(expi(x))


def li(x: float) -> float:
    """Logarithmic integral Li(x) = Ei(log x), defined for x > 1."""
    if not x > 1.0:
        raise DomainError(f"li requires x > 1, got {x}")
    return float(expi(math.log(x)))


# ---------------------------------------------------------------------------
# phase function of the functional equation
# ---------------------------------------------------------------------------

def theta_exact(t):
    """Phase function via its accelerated series, odd in t, any finite t.

    The defining series  -arctan 2t - (t/2)(gamma + log pi)
    + sum_k { t/(2k) - arctan(t/(2k + 1/2)) }  converges too slowly to sum
    naively: the k-th term only decays like 1/k^2.  The linear-in-t part of
    each term is summed in closed form (digamma value), the remaining
    y - arctan(y) tail is truncated at K ~ 8|t| and completed with an
    integral-comparison (Euler-Maclaurin) correction.  Absolute accuracy is
    ~1e-11 over |t| <= 5000.
    """
    scalar = np.ndim(t) == 0
    a = np.abs(np.atleast_1d(np.asarray(t, dtype=float)).ravel())
    sgn = np.sign(np.atleast_1d(np.asarray(t, dtype=float)).ravel())
    amax = float(a.max()) if a.size else 0.0
    K = max(128, int(math.ceil(8.0 * amax)))
    k = np.arange(1, K + 1)
    # chunked so the (points x K) intermediate stays modest for big scans
    tail_sum = np.empty_like(a)
    step = max(1, 4_000_000 // (K + 1))
    for i in range(0, a.size, step):
        y = a[i:i + step, None] / (2.0 * k + 0.5)
        tail_sum[i:i + step] = (y - np.arctan(y)).sum(axis=-1)
    X = K + 1.0
    yx = a / (2.0 * X + 0.5)
    with np.errstate(invalid="ignore", divide="ignore"):
        f_anti = np.where(yx > 0, np.arctan(yx) / np.where(yx == 0, 1.0, yx)
                          + 0.5 * np.log1p(yx * yx), 1.0)
        em = (a / 2.0) * (f_anti - 1.0)
        em += 0.5 * (yx - np.arctan(yx))
        em += np.where(a > 0, 2.0 * yx**4 / (12.0 * (a + (a == 0)) * (1.0 + yx * yx)), 0.0)
    th = (-np.arctan(2.0 * a)
          - (a / 2.0) * (EULER_GAMMA + math.log(math.pi))
          + (a / 2.0) * _PHASE_LINEAR
          + tail_sum + em)
    out = sgn * th
    return float(out[0]) if scalar else out.reshape(np.shape(t))


def theta_asymptotic(t: float) -> float:
    """Three-term asymptotic main value (t/2) log(t/2pi) - t/2 - pi/8."""
    if not t > 2.0 * math.pi:
        raise DomainError(f"theta_asymptotic requires t > 2*pi, got {t}")
    return 0.5 * t * math.log(t / (2.0 * math.pi)) - 0.5 * t - math.pi / 8.0


def _theta_asym_refined(a):
    """Asymptotic form plus Stirling corrections, ~1e-13 for t >= 200."""
    return (0.5 * a * np.log(a / (2.0 * math.pi)) - 0.5 * a - math.pi / 8.0
            + 1.0 / (48.0 * a) + 7.0 / (5760.0 * a**3))


def theta_auto(t):
    """Phase function with automatic large-argument switch.

    Same values as theta_exact but O(1) cost for |t| > 200, which keeps
    compactified tail integrands cheap at ordinates up to ~1e12.
    """
    scalar = np.ndim(t) == 0
    tv = np.atleast_1d(np.asarray(t, dtype=float))
    a = np.abs(tv)
    out = np.empty_like(a)
    small = a <= 200.0
    if small.any():
        out[small] = theta_exact(a[small])
    if (~small).any():
        out[~small] = _theta_asym_refined(a[~small])
    out *= np.sign(tv)
    return float(out[0]) if scalar else out.reshape(np.shape(t))


# ---------------------------------------------------------------------------
# phi / Phi / Theta / K building blocks
# ---------------------------------------------------------------------------

def _check_alpha_off_ray(alpha: complex) -> complex:
    alpha = complex(alpha)
    if alpha.imag == 0.0 and alpha.real >= 0.0:
        raise DomainError(f"alpha={alpha} lies on the excluded ray [0, inf)")
    return alpha


def phi_alpha(alpha: complex, x: float) -> complex:
    """gamma + log(log x) + log(-alpha) + Ei0(alpha log x), for x > 1.

    Defined for alpha off the ray [0, inf); conjugate-symmetric in alpha.
    """
    alpha = _check_alpha_off_ray(alpha)
    if not x > 1.0:
        raise DomainError(f"phi_alpha requires x > 1, got {x}")
    lx = math.log(x)
    return EULER_GAMMA + math.log(lx) + cmath.log(-alpha) + _ei0_scalar(alpha * lx)


def _check_alpha_offaxis(alpha: complex) -> complex:
    alpha = complex(alpha)
    if alpha.imag == 0.0:
        raise DomainError(f"requires Im(alpha) != 0, got {alpha}")
    return alpha


def phi_tilde(alpha: complex, x: float) -> complex:
    """x*phi_{alpha-1}(x) - phi_alpha(x); needs Im(alpha) != 0."""
    alpha = _check_alpha_offaxis(alpha)
    return x * phi_alpha(alpha - 1.0, x) - phi_alpha(alpha, x)


def phi_big(alpha: complex, x: float) -> complex:
    """Closed form of x * integral_1^x phi_alpha(y)/y^2 dy; no quadrature.

    Vanishes as x -> 1+.
    """
    alpha = _check_alpha_offaxis(alpha)
    return phi_tilde(alpha, x) + x * (cmath.log(-alpha) - cmath.log(-(alpha - 1.0)))


def theta_big(x: float, alpha: complex) -> complex:
    """-(x^alpha - 1)/alpha + Ei0(alpha log x) * log x, entire in alpha.

    The removable singularity at alpha = 0 (value -log x) is handled by an
    explicit two-term Taylor branch inside |alpha| <= 1e-8.
    """
    if not x > 1.0:
        raise DomainError(f"theta_big requires x > 1, got {x}")
    alpha = complex(alpha)
    lx = math.log(x)
    if abs(alpha) <= _DIAG_RADIUS:
        return lx * (-1.0 + 0.5 * alpha * lx)
    return -(cmath.exp(alpha * lx) - 1.0) / alpha + _ei0_scalar(alpha * lx) * lx


def kernel_K(x: float, r: complex, u):
    """Mellin-side kernel (x^{1/2+iu-r} - 1)/(1/2+iu-r)^2 - log x/(1/2+iu-r), over pi.

    Continuous across the diagonal r = 1/2 + iu, where the value is
    log^2 x / 2pi; a two-term Taylor branch is used within 1e-8 of it.
    Accepts scalar or array u.
    """
    if not x > 1.0:
        raise DomainError(f"kernel_K requires x > 1, got {x}")
    scalar = np.ndim(u) == 0
    uu = np.atleast_1d(np.asarray(u, dtype=float))
    a = 0.5 + 1j * uu - complex(r)
    lx = math.log(x)
    near = np.abs(a) <= _DIAG_RADIUS
    a_safe = np.where(near, 1.0, a)
    full = ((np.exp(a_safe * lx) - 1.0) / (a_safe * a_safe) - lx / a_safe) / math.pi
    taylor = (0.5 * lx * lx + a * lx**3 / 6.0) / math.pi
    out = np.where(near, taylor, full)
    return complex(out[0]) if scalar else out
