"""Critical-line zero location and the counting function N(t).

Zeros are found as sign changes of the Hardy Z rotation on a uniform scan
grid and refined by simultaneous vectorised bisection, keeping a certified
sign-change bracket per zero.  Completeness is checked against the phase
count round(theta(T)/pi + 1), which is reliable at desk-scale heights where
the argument fluctuation stays small.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .special import theta_exact


@dataclass
class ZeroTable:
    """Ordered positive ordinates with certified sign-change brackets."""

    ordinates: np.ndarray
    brackets: np.ndarray  # shape (n, 2)
    height: float
    count_consistent: bool
    refine_tol: float
    gaps: list = field(default_factory=list)

    def __len__(self) -> int:
        return int(self.ordinates.size)


def expected_count(T: float) -> int:
    """Phase-count completeness estimate round(theta(T)/pi + 1)."""
    return int(round(theta_exact(T) / math.pi + 1.0))


def _hardy(t):
    from .zeta import hardy_Z  # deferred: zeta imports count_N from here
    return hardy_Z(t)


def _scan_once(T: float, step: float, refine_tol: float):
    grid = np.arange(step, T + 0.5 * step, step)
    if grid[-1] > T:
        grid[-1] = T
    Z = np.empty_like(grid)
    for i in range(0, grid.size, 2048):
        Z[i:i + 2048] = _hardy(grid[i:i + 2048])
    sign = np.sign(Z)
    idx = np.where(sign[:-1] * sign[1:] < 0)[0]
    lo = grid[idx].copy()
    hi = grid[idx + 1].copy()
    flo = Z[idx].copy()
    if lo.size:
        iters = max(1, int(math.ceil(math.log2(step / refine_tol))) + 1)
        for _ in range(iters):
            mid = 0.5 * (lo + hi)
            fm = _hardy(mid)
            go_left = np.sign(flo) * np.sign(fm) < 0
            hi = np.where(go_left, mid, hi)
            lo = np.where(go_left, lo, mid)
            flo = np.where(go_left, flo, fm)
            if float(np.max(hi - lo)) <= refine_tol:
                break
    return lo, hi, grid, Z


def scan_zeros(T: float, step: float = 0.05, refine_tol: float = 1e-9) -> ZeroTable:
    """Locate all sign-change zeros of the Hardy rotation in (0, T].

    On a completeness mismatch the scan is retried with a halved step up
    to three times; if the mismatch persists the table is returned with
    count_consistent=False and the suspect gap intervals listed.
    """
    if not T >= 2.0:
        raise DomainError(f"scan ceiling too small: T={T}")
    if not 0.0 < step <= 0.1:
        raise DomainError(f"scan step must be in (0, 0.1], got {step}")
    want = expected_count(T)
    for attempt in range(4):
        lo, hi, grid, Z = _scan_once(T, step, refine_tol)
        if lo.size == want:
            break
        step /= 2.0
    ords = 0.5 * (lo + hi)
    consistent = lo.size == want
    gaps = []
    if not consistent:
        # flag spans whose phase increment implies more zeros than found
        edges = np.concatenate(([0.0], ords, [T]))
        for a, b in zip(edges[:-1], edges[1:]):
            inc = (theta_exact(b) - theta_exact(max(a, 1e-9))) / math.pi
            if round(inc) >= 2:
                gaps.append((float(a), float(b)))
    return ZeroTable(ordinates=ords, brackets=np.column_stack([lo, hi]),
                     height=float(T), count_consistent=consistent,
                     refine_tol=refine_tol, gaps=gaps)


def count_N(t, table: ZeroTable):
    """Number of ordinates <= t, extended to t < 0 as an odd function."""
    scalar = np.ndim(t) == 0
    tv = np.atleast_1d(np.asarray(t, dtype=float))
    if float(np.max(np.abs(tv))) > table.height:
        raise DomainError(f"|t| exceeds table height {table.height}")
    n = np.searchsorted(table.ordinates, np.abs(tv), side="right").astype(float)
    out = np.sign(tv) * n
    return int(out[0]) if scalar else out


def count_N_array(u, table: ZeroTable) -> np.ndarray:
    """Vectorised N(u) for quadrature integrands (no height check)."""
    uu = np.atleast_1d(np.asarray(u, dtype=float))
    return np.sign(uu) * np.searchsorted(table.ordinates, np.abs(uu), side="right")


def tail_bounds(T: float):
    """Leading-term truncation estimates used to annotate half-line integrals.

    Returns (sum of 1/Im^2 over zeros above T, zero count up to T), both as
    the leading asymptotic terms (log T)/(pi T) and theta(T)/pi.
    """
    if not T >= 100.0:
        raise DomainError(f"tail bounds need T >= 100, got {T}")
    return math.log(T) / (math.pi * T), theta_exact(T) / math.pi


def save_zero_table(table: ZeroTable, path, config_hash: str) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(f"# config={config_hash}\n")
        w = csv.writer(fh)
        w.writerow(["index", "t", "bracket_lo", "bracket_hi"])
        for i, (t, (blo, bhi)) in enumerate(zip(table.ordinates, table.brackets), 1):
            w.writerow([i, f"{t:.12f}", f"{blo:.12f}", f"{bhi:.12f}"])


def load_zero_table(path, height: float, refine_tol: float = 1e-9,
                    recertify: bool = True) -> ZeroTable:
    """Reload a persisted table; sign-change brackets are re-certified."""
    ords, los, his = [], [], []
    with open(path) as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    for row in rows[1:]:
        ords.append(float(row[1]))
        los.append(float(row[2]))
        his.append(float(row[3]))
    ords = np.asarray(ords)
    los = np.asarray(los)
    his = np.asarray(his)
    if recertify and ords.size:
        zl = _hardy(los)
        zh = _hardy(his)
        if not bool(np.all(np.sign(zl) * np.sign(zh) < 0)):
            raise DomainError(f"bracket re-certification failed for {path}")
    consistent = ords.size == expected_count(height)
    return ZeroTable(ordinates=ords, brackets=np.column_stack([los, his]),
                     height=float(height), count_consistent=consistent,
                     refine_tol=refine_tol)
