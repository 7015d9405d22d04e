"""Zeta evaluation on Re(s) > 0, the Hardy Z rotation, xi, and line samples.

The evaluator is Euler-Maclaurin with adaptive correction depth: cost grows
linearly with |Im s|, which is the right trade at desk-scale heights (a few
thousand).  A vectorised path shares the cutoff N across an array of
nearby ordinates, which is what makes panel quadrature along the critical
line cheap.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import bernoulli

from .errors import DomainError, SingularOrdinate
from .special import log_gamma, theta_auto
from .zeros import ZeroTable, count_N

_BERN = bernoulli(64)
_MAX_CORR = 23


def _em_cutoff(tmax: float) -> int:
    return max(30, int(math.ceil(0.5 * tmax + 20.0)))


def zeta_array(s: np.ndarray) -> np.ndarray:
    """Euler-Maclaurin zeta over an array of points with Re(s) > 0.

    All points share the cutoff chosen for the largest |Im s|; callers
    should batch points of comparable height.
    """
    s = np.asarray(s, dtype=complex)
    N = _em_cutoff(float(np.abs(s.imag).max()) if s.size else 0.0)
    n = np.arange(1, N)
    acc = np.exp(-np.multiply.outer(s, np.log(n))).sum(axis=-1)
    acc += N ** (1.0 - s) / (s - 1.0) + 0.5 * N ** (-s)
    poch = s.copy()
    npow = N ** (-s - 1.0)
    for k in range(1, _MAX_CORR):
        term = _BERN[2 * k] / math.factorial(2 * k) * poch * npow
        acc += term
        if np.max(np.abs(term)) <= 1e-17 * np.max(np.abs(acc)):
            break
        poch = poch * (s + 2 * k - 1) * (s + 2 * k)
        npow = npow / (N * N)
    return acc


def zeta(s: complex) -> complex:
    """zeta(s) for Re(s) > 0, s != 1."""
    s = complex(s)
    if s == 1.0:
        raise DomainError("zeta pole at s=1")
    if s.real <= 0.0:
        raise DomainError(f"zeta evaluation restricted to Re(s) > 0, got {s}")
    return complex(zeta_array(np.array([s]))[0])


def zeta_deriv(s: complex) -> complex:
    """zeta'(s) by term-wise differentiation of the same expansion."""
    s = complex(s)
    if s == 1.0 or s.real <= 0.0:
        raise DomainError(f"zeta_deriv domain violation at {s}")
    N = _em_cutoff(abs(s.imag))
    n = np.arange(2, N)
    ln = np.log(n)
    acc = -np.sum(ln * np.exp(-s * ln))
    lN = math.log(N)
    acc += -lN * N ** (1.0 - s) / (s - 1.0) - N ** (1.0 - s) / (s - 1.0) ** 2
    acc += -0.5 * lN * N ** (-s)
    poch = s
    dpoch_over = 1.0 / s  # sum of 1/(s+j) over factors of the Pochhammer
    npow = N ** (-s - 1.0)
    for k in range(1, _MAX_CORR):
        term = _BERN[2 * k] / math.factorial(2 * k) * poch * npow
        acc += term * (dpoch_over - lN)
        if abs(term) <= 1e-17 * abs(acc):
            break
        poch = poch * (s + 2 * k - 1) * (s + 2 * k)
        dpoch_over += 1.0 / (s + 2 * k - 1) + 1.0 / (s + 2 * k)
        npow = npow / (N * N)
    return complex(acc)


def zeta_half_line(u) -> np.ndarray:
    """zeta(1/2 + iu) for an array of real ordinates."""
    u = np.atleast_1d(np.asarray(u, dtype=float))
    return zeta_array(0.5 + 1j * u)


def hardy_Z(t):
    """Real rotation exp(i*theta(t)) * zeta(1/2 + it); even in t.

    The imaginary residue of the rotated value stays below 1e-8 on the
    heights this package targets; that is asserted on every call.
    """
    scalar = np.ndim(t) == 0
    tv = np.atleast_1d(np.asarray(t, dtype=float))
    rot = np.exp(1j * theta_auto(tv)) * zeta_array(0.5 + 1j * tv)
    assert float(np.max(np.abs(rot.imag))) <= 1e-8, "Z rotation left an imaginary residue"
    return float(rot.real[0]) if scalar else rot.real.reshape(np.shape(t))


def xi(s: complex) -> complex:
    """xi(s) = s(s-1)/2 * pi^(-s/2) * Gamma(s/2) * zeta(s), with xi(1) = 1/2."""
    s = complex(s)
    if s == 1.0:
        return 0.5 + 0.0j
    if s.real <= 0.0:
        raise DomainError(f"xi evaluation restricted to Re(s) > 0, got {s}")
    pref = 0.5 * s * (s - 1.0)
    return pref * np.exp(log_gamma(s / 2.0) - 0.5 * s * math.log(math.pi)) * zeta(s)


def reconstruct_zeta_on_line(t: float, zeros: ZeroTable) -> complex:
    """Rebuild zeta(1/2+it) from |zeta| and the counting-function phase.

    Uses exp[ log|zeta(1/2+it)| + i(pi N(t) - theta(t) - pi sign(t)) ].
    """
    t = float(t)
    if t == 0.0:
        raise DomainError("phase reconstruction undefined at t = 0")
    if zeros.ordinates.size and np.min(np.abs(zeros.ordinates - abs(t))) < 1e-6:
        raise DomainError(f"t={t} coincides with a zero ordinate")
    mod = math.log(abs(complex(zeta_half_line(abs(t))[0])))
    phase = math.pi * count_N(t, zeros) - theta_auto(t) - math.pi * math.copysign(1.0, t)
    return complex(np.exp(mod + 1j * phase))


# ---------------------------------------------------------------------------
# critical-line sample cache
# ---------------------------------------------------------------------------

@dataclass
class CriticalLineCache:
    """Samples of log|zeta(1/2+iu)| plus the excluded zones around zeros.

    The uniform grid is what gets persisted and plotted; point evaluation
    always goes through the zeta engine directly (memoised), so any
    requested tolerance down to ~1e-11 is honoured without interpolation
    error.  Grid ordinates never fall inside an excluded interval.
    """

    grid_u: np.ndarray
    grid_logabs: np.ndarray
    exclusions: list  # (lo, hi, zero ordinate)
    build_tol: float
    height: float
    _memo: dict = field(default_factory=dict, repr=False)

    def excluded_interval(self, u: float):
        au = abs(u)
        for lo, hi, z in self.exclusions:
            if lo < au < hi:
                return (lo, hi, z)
        return None

    def line_log_abs(self, u) -> np.ndarray:
        """Raw log|zeta(1/2+iu)| for quadrature nodes; no exclusion check.

        Finite everywhere except exactly at a zero; quadrature nodes are
        interior points so never land there.
        """
        uu = np.abs(np.atleast_1d(np.asarray(u, dtype=float)))
        out = np.empty_like(uu)
        miss = []
        for i, x in enumerate(uu):
            v = self._memo.get(x)
            if v is None:
                miss.append(i)
            else:
                out[i] = v
        if miss:
            vals = np.log(np.abs(zeta_half_line(uu[miss])))
            for j, i in enumerate(miss):
                self._memo[uu[i]] = vals[j]
                out[i] = vals[j]
        if len(self._memo) > 4_000_000:
            self._memo.clear()
        return out

    def log_abs_zeta_half(self, u: float, cache_tol: float = 1e-10) -> float:
        """log|zeta(1/2+iu)| to within cache_tol, or a singularity signal.

        Raises SingularOrdinate when u falls in an excluded interval, in
        which case the caller must integrate with singular panels.
        """
        hit = self.excluded_interval(u)
        if hit is not None:
            raise SingularOrdinate(u, hit)
        if abs(u) > self.height:
            raise DomainError(f"u={u} beyond cache height {self.height}")
        return float(self.line_log_abs(u)[0])


def build_line_cache(zeros: ZeroTable, spacing: float = 0.01,
                     delta: float = 0.05, build_tol: float = 1e-10,
                     height: float | None = None) -> CriticalLineCache:
    """Sample log|zeta| on a uniform grid, skipping zones around each zero."""
    height = float(zeros.height if height is None else height)
    exclusions = [(float(z - delta), float(z + delta), float(z))
                  for z in zeros.ordinates if z <= height + delta]
    grid = np.arange(spacing, height + 0.5 * spacing, spacing)
    keep = np.ones(grid.shape, dtype=bool)
    for lo, hi, _ in exclusions:
        keep &= ~((grid > lo) & (grid < hi))
    grid = grid[keep]
    vals = np.empty_like(grid)
    for i in range(0, grid.size, 2048):
        vals[i:i + 2048] = np.log(np.abs(zeta_half_line(grid[i:i + 2048])))
    return CriticalLineCache(grid_u=grid, grid_logabs=vals,
                             exclusions=exclusions, build_tol=build_tol,
                             height=height)


def save_line_cache(cache: CriticalLineCache, samples_path, exclusions_path,
                    config_hash: str) -> None:
    with open(samples_path, "w", newline="") as fh:
        fh.write(f"# config={config_hash}\n")
        w = csv.writer(fh)
        w.writerow(["u", "log_abs_zeta"])
        for u, v in zip(cache.grid_u, cache.grid_logabs):
            w.writerow([f"{u:.6f}", f"{v:.12e}"])
    with open(exclusions_path, "w", newline="") as fh:
        fh.write(f"# config={config_hash}\n")
        w = csv.writer(fh)
        w.writerow(["lo", "hi", "zero_ordinate"])
        for lo, hi, z in cache.exclusions:
            w.writerow([f"{lo:.9f}", f"{hi:.9f}", f"{z:.9f}"])


def read_config_hash(path) -> str | None:
    with open(path) as fh:
        first = fh.readline().strip()
    if first.startswith("# config="):
        return first.split("=", 1)[1]
    return None
