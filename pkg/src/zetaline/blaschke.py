"""Products and sums indexed by synthetic off-critical-line zero pairs.

A SyntheticZeroSet holds upper-half-plane representatives rho = sigma+i*tau
with sigma strictly right of the critical line; every formula expands each
entry to the conjugate pair {rho, conj(rho)}, so results that should be
real come out real by pairing.  The empty set is the Riemann-hypothesis
case and collapses every output to its identity value.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import QuadratureSpec, integrate_interval
from .special import phi_tilde, theta_big


@dataclass(frozen=True)
class SyntheticZeroSet:
    zeros: tuple  # upper-half representatives sigma + i*tau, tau > 0

    def __post_init__(self) -> None:
        canon = []
        for z in self.zeros:
            z = complex(z)
            if not 0.5 < z.real <= 1.0:
                raise DomainError(f"synthetic zero {z} needs Re in (1/2, 1]")
            if z.imag == 0.0:
                raise DomainError(f"synthetic zero {z} needs Im != 0")
            canon.append(z if z.imag > 0 else z.conjugate())
        object.__setattr__(self, "zeros", tuple(canon))

    @property
    def empty(self) -> bool:
        return not self.zeros

    def expanded(self):
        """All zeros including the implicit conjugate partners."""
        out = []
        for z in self.zeros:
            out.extend((z, z.conjugate()))
        return out

    @classmethod
    def from_csv(cls, path) -> "SyntheticZeroSet":
        zs = []
        with open(path) as fh:
            rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
        start = 1 if rows and rows[0][0].strip().lower() == "sigma" else 0
        for row in rows[start:]:
            zs.append(complex(float(row[0]), float(row[1])))
        return cls(tuple(zs))


EMPTY_SET = SyntheticZeroSet(())


def blaschke_B(s: complex, zs: SyntheticZeroSet) -> complex:
    """Blaschke product over the set; empty product is 1, |B| = 1 on the line.

    Defined on the closed half-plane Re(s) >= 1/2: the reflected poles sit
    strictly left of the line, so boundary evaluation is regular.
    """
    s = complex(s)
    if not s.real >= 0.5:
        raise DomainError(f"blaschke_B requires Re(s) >= 1/2, got {s}")
    out = 1.0 + 0.0j
    for z in zs.expanded():
        pole = 1.0 - z.conjugate()
        if abs(s - pole) < 1e-14:
            raise DomainError(f"blaschke_B pole at s={s}")
        out *= (1.0 - s / z) / (1.0 - s / pole) * abs(z / (1.0 - z))
    return out


def c_product(s: complex, zs: SyntheticZeroSet) -> complex:
    """Symmetric counterpart of the Blaschke product (double zero projected)."""
    s = complex(s)
    if not s.real > 0.5:
        raise DomainError(f"c_product requires Re(s) > 1/2, got {s}")
    out = 1.0 + 0.0j
    for z in zs.expanded():
        mid = 1.0 - z.conjugate() + z  # = 1 + 2i Im(z)
        if abs(1.0 - 2.0 * s / mid) < 1e-14:
            raise DomainError(f"c_product pole at s={s}")
        out *= (1.0 - s / z) * (1.0 - s / (1.0 - z.conjugate())) / (1.0 - 2.0 * s / mid) ** 2
    return out


def b_log_deriv(s: complex, zs: SyntheticZeroSet) -> complex:
    """B'(s)/B(s) from the analytic closed form of the product."""
    s = complex(s)
    return sum((1.0 / (s - z) - 1.0 / (s - (1.0 - z.conjugate()))
                for z in zs.expanded()), 0.0 + 0.0j)


def c_log_deriv_at_1(zs: SyntheticZeroSet) -> float:
    """C'(1)/C(1), real by conjugate pairing."""
    acc = 0.0 + 0.0j
    for z in zs.expanded():
        mid = 1.0 - z.conjugate() + z
        acc += 1.0 / (1.0 - z) + 1.0 / z.conjugate() + 4.0 / (mid - 2.0)
    return float(acc.real)


def c_log_deriv_pair_closed(rho: complex) -> float:
    """Closed form of the conjugate-pair sum of C'(1)/C(1) contributions.

    Negative whenever |tau| > 1/sqrt(12) and 1/2 < sigma <= 1.
    """
    rho = complex(rho)
    sig, tau = rho.real, rho.imag
    return (-2.0 * (3.0 * tau**2 - sig * (1.0 - sig)) * (sig - 0.5) ** 2
            / (((1.0 - sig) ** 2 + tau**2) * (sig**2 + tau**2) * (0.25 + tau**2)))


def f_rho_pair(rho: complex) -> float:
    """2 log|rho/(1-rho)| + 1/(1-rho) - 1/conj(rho), summed with the conjugate.

    Strictly positive on 1/2 < Re(rho) <= 1, |Im(rho)| > 1.
    """
    rho = complex(rho)
    sig, tau = rho.real, abs(rho.imag)
    if not (0.5 < sig <= 1.0 and tau > 1.0):
        raise DomainError(f"f_rho_pair domain violation at {rho}")
    return (4.0 * math.log(abs(rho / (1.0 - rho)))
            + 2.0 * (1.0 - sig) / abs(1.0 - rho) ** 2
            - 2.0 * sig / abs(rho) ** 2)


def omega_synthetic(zs: SyntheticZeroSet) -> float:
    """-log B(1) = sum over pairs of 2 log|rho/(1-rho)|; nonnegative."""
    return sum(2.0 * math.log(abs(z / (1.0 - z))) for z in zs.zeros)


def f12_sum(x: float, zs: SyntheticZeroSet) -> float:
    """Zero-pair sum paired with the sine-kernel integral; empty set -> 0."""
    if not x > 1.0:
        raise DomainError(f"f12_sum requires x > 1, got {x}")
    acc = 0.0 + 0.0j
    for z in zs.expanded():
        mid = 0.5 * (1.0 + z - z.conjugate())  # = 1/2 + i Im(z)
        acc -= (phi_tilde(z, x) + phi_tilde(1.0 - z.conjugate(), x)
                - 2.0 * phi_tilde(mid, x))
    assert abs(acc.imag) <= 1e-10 * (1.0 + abs(acc)), "pairing should cancel Im"
    return float(acc.real)


def f22_sum(x: float, zs: SyntheticZeroSet) -> float:
    """Zero-pair sum paired with the cosine-kernel integral; empty set -> 0."""
    if not x > 1.0:
        raise DomainError(f"f22_sum requires x > 1, got {x}")
    acc = 0.0 + 0.0j
    for z in zs.expanded():
        acc -= phi_tilde(z, x) - phi_tilde(1.0 - z.conjugate(), x)
    assert abs(acc.imag) <= 1e-10 * (1.0 + abs(acc)), "pairing should cancel Im"
    return float(acc.real)


def theorem34_zero_sum(x: float, r: complex, zs: SyntheticZeroSet) -> complex:
    """Sum of Theta(x, rho-r) - Theta(x, 1-conj(rho)-r) over the set."""
    if not x > 1.0:
        raise DomainError(f"theorem34_zero_sum requires x > 1, got {x}")
    r = complex(r)
    acc = 0.0 + 0.0j
    for z in zs.expanded():
        acc += theta_big(x, z - r) - theta_big(x, 1.0 - z.conjugate() - r)
    return acc


def log_abs_line_factor(u, zs: SyntheticZeroSet) -> np.ndarray:
    """log of the modulus on the line of the polynomial carrying the set.

    The factor Prod (1 - w/z)(1 - w/(1-conj z)) over the expanded set is the
    multiplier that would graft the synthetic zeros (and their reflections)
    onto a line of boundary data; its log-modulus feeds the synthetic
    variants of the inequality and counting checks.
    """
    w = 0.5 + 1j * np.atleast_1d(np.asarray(u, dtype=float))
    acc = np.zeros(w.shape, dtype=float)
    for z in zs.expanded():
        acc += np.log(np.abs((1.0 - w / z) * (1.0 - w / (1.0 - z.conjugate()))))
    return acc


def g_log_deriv_at_1(zs: SyntheticZeroSet) -> float:
    """Logarithmic derivative at s=1 of the grafting polynomial (real)."""
    acc = 0.0 + 0.0j
    for z in zs.expanded():
        acc += 1.0 / (1.0 - z) + 1.0 / z.conjugate()  # zeros at z and 1 - conj(z)
    return float(acc.real)


def delta_j2_closed(zs: SyntheticZeroSet) -> float:
    """Exact step-kernel contribution of the set to the N-side inequality."""
    return sum(2.0 / (z.imag**2 + 0.25) for z in zs.zeros)


def n3_and_nb(t: float, zs: SyntheticZeroSet, spec: QuadratureSpec):
    """Line integral of B'/B over (-t, t)/2pi, and the direct pair count.

    Rejects t on the singular set {|Im rho|}; the empty set gives (0, 0).
    """
    t = float(t)
    if not t > 0.0:
        raise DomainError(f"n3_and_nb requires t > 0, got {t}")
    for z in zs.zeros:
        if abs(abs(z.imag) - t) < 1e-9:
            raise DomainError(f"t={t} hits the singular set at |Im rho|={abs(z.imag)}")
    nb = 2 * sum(1 for z in zs.zeros if abs(z.imag) <= t)
    if zs.empty:
        return 0.0, 0
    peaks = [abs(z.imag) for z in zs.zeros if abs(z.imag) < t]

    def igrand(u):
        w = 0.5 + 1j * np.asarray(u)
        acc = np.zeros(w.shape, dtype=complex)
        for z in zs.expanded():
            acc += 1.0 / (w - z) - 1.0 / (w - (1.0 - z.conjugate()))
        return acc.real  # folded: (1/2pi) int_-t^t == (1/pi) int_0^t Re

    val, _ = integrate_interval(igrand, 0.0, t, spec, jumps=peaks,
                                abs_tol=spec.abs_tol)
    return float(val) / math.pi, nb
