"""Adaptive panel quadrature for the half-line kernel integrals.

Strategy: split the integration range at structure points (jump ordinates,
oscillation nodes, excluded zones around integrable log singularities),
estimate every panel with a Gauss-Legendre pair, then greedily bisect the
worst panel until the global error budget is met.  Log singularities are
approached with geometrically shrinking edge panels, and integrals over
(T, inf) of algebraically decaying kernels are compactified with u = T/w.

Integrand callables must accept a numpy array of abscissas and return an
array (real or complex) of the same shape.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import QuadratureError

_XLO, _WLO = leggauss(15)
_XHI, _WHI = leggauss(31)

_FAIL_FACTOR = 50.0  # err_est above FACTOR * tolerance raises QuadratureError


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and panel policy shared by all half-line integrals.

    truncation_T is the integral cutoff height; it must not exceed the
    zero-table height whenever N(u) or log|zeta| appears in the integrand.
    sing_radius is the half-width of the excluded zone carved around each
    integrable log singularity; max_depth caps both heap bisection depth
    and the number of geometric edge panels.
    """

    abs_tol: float = 1e-9
    rel_tol: float = 1e-8
    truncation_T: float = 1000.0
    max_depth: int = 40
    sing_radius: float = 0.05
    osc_split: bool = True

    def __post_init__(self) -> None:
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")


def _panel(f: Callable, a: float, b: float):
    m = 0.5 * (a + b)
    h = 0.5 * (b - a)
    hi = h * np.sum(_WHI * f(m + h * _XHI))
    lo = h * np.sum(_WLO * f(m + h * _XLO))
    return hi, abs(hi - lo)


def _heap_refine(f: Callable, segments: Sequence[tuple], abs_tol: float,
                 rel_tol: float, max_depth: int, max_panels: int = 60000):
    """Globally adaptive refinement over an initial segment list.

    Splitting stops on tolerance, panel budget, depth cap, or stagnation:
    once refinements stop shrinking the summed estimate (integrand noise
    floor reached) further splitting only inflates it.
    """
    heap = []
    total = 0.0 + 0.0j
    err = 0.0
    count = 0
    for a, b in segments:
        if b <= a:
            continue
        val, e = _panel(f, a, b)
        total = total + val
        err += e
        heapq.heappush(heap, (-e, count, a, b, val, 0))
        count += 1
    checkpoint_err = math.inf
    splits = 0
    while heap and err > max(abs_tol, rel_tol * abs(total)) and count < max_panels:
        ne, _, a, b, val, depth = heapq.heappop(heap)
        e = -ne
        if e <= 1e-17 * abs(total) + 1e-300 or depth >= max_depth:
            heapq.heappush(heap, (ne, count, a, b, val, depth))
            break
        m = 0.5 * (a + b)
        vl, el = _panel(f, a, m)
        vr, er = _panel(f, m, b)
        total = total + (vl + vr - val)
        err += el + er - e
        splits += 1
        if splits % 64 == 0:  # windowed stagnation guard: noise floor reached
            if err > 0.98 * checkpoint_err:
                break
            checkpoint_err = err
        heapq.heappush(heap, (-el, count, a, m, vl, depth + 1))
        count += 1
        heapq.heappush(heap, (-er, count, m, b, vr, depth + 1))
        count += 1
    if abs(total.imag) == 0.0:
        total = total.real
    return total, err


def _edge_refine(f: Callable, point: float, far: float, tol: float, max_depth: int):
    """Integrate from an integrable log singularity at `point` out to `far`.

    Panels shrink geometrically toward the singular point; iteration stops
    once a panel contributes below tolerance, and the magnitude of the last
    panel is charged to the error estimate as a sliver bound.
    """
    width = far - point  # signed
    total = 0.0 + 0.0j
    err = 0.0
    hi = 1.0
    last = 0.0
    for _ in range(max_depth):
        lo = hi / 2.0
        a, b = point + lo * width, point + hi * width
        if b < a:
            a, b = b, a
        val, e = _panel(f, a, b)
        total = total + val
        err += e
        last = abs(val)
        hi = lo
        if last < tol / 8.0 and hi < 2.0 ** -8:
            break
    err += last
    if abs(total.imag) == 0.0:
        total = total.real
    return total, err


def _tail_compactified(f: Callable, T: float, tol: float, max_depth: int):
    """integral_T^inf f(u) du via u = T/w on w in (0, 1], log-safe at w=0."""
    def g(w):
        u = T / w
        return f(u) * T / (w * w)

    segments = [(2.0 ** -(k + 1), 2.0 ** -k) for k in range(min(44, max_depth + 12))]
    total = 0.0 + 0.0j
    err = 0.0
    for a, b in segments:
        val, e = _panel(g, a, b)
        total = total + val
        err += e
        if abs(val) < tol / 16.0 and b < 2.0 ** -6:
            break
    err += abs(val)  # truncated sliver at w -> 0
    if abs(total.imag) == 0.0:
        total = total.real
    return total, err


def _merge_breakpoints(a: float, b: float, pts: Iterable[float]) -> list:
    out = sorted({a, b, *(p for p in pts if a < p < b)})
    return out


def _strip_imag(total):
    if isinstance(total, complex) and total.imag == 0.0:
        return total.real
    return total


def _octaves(a: float, b: float, first: float = 1.0) -> list:
    """Geometric starter grid so huge spans do not begin as one panel."""
    pts = [a]
    w = first
    x = a
    while x + w < b:
        x += w
        pts.append(x)
        w *= 2.0
    pts.append(b)
    return pts


def integrate_halfline(f: Callable, spec: QuadratureSpec,
                       singularities: Sequence[float] = (),
                       jumps: Sequence[float] = (),
                       osc_length: float | None = None,
                       endpoint_singular: bool = False,
                       algebraic_tail: bool = False,
                       upper: float | None = None,
                       abs_tol: float | None = None):
    """Integrate f over (0, T] (T = spec.truncation_T unless `upper` given).

    singularities: interior points with at worst integrable log blowup;
    a zone of half-width spec.sing_radius is carved around each and walked
    with geometric edge panels.  jumps: finite-discontinuity ordinates used
    only as panel boundaries.  osc_length: when spec.osc_split, panels are
    additionally cut at multiples of pi/osc_length.  endpoint_singular
    treats u = 0 as a log endpoint.  algebraic_tail appends the
    compactified integral over (T, inf) for kernels decaying like u^-2 or
    faster (the caller must make f evaluable at arbitrarily large u).

    Returns (value, err_est).  Raises QuadratureError if the estimate ends
    up far above tolerance; the best value is attached to the exception.
    """
    T = float(spec.truncation_T if upper is None else upper)
    tol = float(spec.abs_tol if abs_tol is None else abs_tol)
    sing = sorted(u for u in singularities if 0.0 < u < T)
    delta = spec.sing_radius

    pts: set = set(_octaves(0.0, T))
    pts.update(p for p in jumps if 0.0 < p < T)
    if osc_length is not None and spec.osc_split and osc_length > 0:
        step = math.pi / osc_length
        if T / step < 2e5:
            pts.update(np.arange(step, T, step).tolist())

    # carve exclusion zones around singular points; where neighbours sit
    # closer than 2*sing_radius the radii shrink to keep zones disjoint
    zone_edges = []
    for i, z in enumerate(sing):
        d = delta
        if i > 0:
            d = min(d, 0.45 * (z - sing[i - 1]))
        if i + 1 < len(sing):
            d = min(d, 0.45 * (sing[i + 1] - z))
        zone_edges.append((max(z - d, 0.0), min(z + d, T)))
    total = 0.0 + 0.0j
    err = 0.0
    lo = 0.0
    smooth_segments = []
    for zl, zh in zone_edges:
        if zl > lo:
            bks = _merge_breakpoints(lo, zl, pts)
            smooth_segments.extend(zip(bks[:-1], bks[1:]))
        lo = zh
    if T > lo:
        bks = _merge_breakpoints(lo, T, pts)
        smooth_segments.extend(zip(bks[:-1], bks[1:]))

    if endpoint_singular and smooth_segments:
        a0, b0 = smooth_segments[0]
        if a0 == 0.0:
            cut = min(b0, 0.5)
            val, e = _edge_refine(f, 0.0, cut, tol, spec.max_depth)
            total += val
            err += e
            smooth_segments[0] = (cut, b0)

    val, e = _heap_refine(f, smooth_segments, tol, spec.rel_tol, spec.max_depth)
    total = total + val
    err += e

    edge_tol = tol / max(1, len(sing))
    for z, (zl, zh) in zip(sing, zone_edges):
        if zl < z:
            val, e = _edge_refine(f, z, zl, edge_tol, spec.max_depth)
            total = total + val
            err += e
        if zh > z:
            val, e = _edge_refine(f, z, zh, edge_tol, spec.max_depth)
            total = total + val
            err += e

    if algebraic_tail:
        val, e = _tail_compactified(f, T, tol, spec.max_depth)
        total = total + val
        err += e

    total = _strip_imag(total)
    bound = max(tol, spec.rel_tol * abs(total))
    if err > _FAIL_FACTOR * bound:
        raise QuadratureError("half-line quadrature did not reach tolerance",
                              total, err)
    return total, err


def integrate_interval(f: Callable, a: float, b: float, spec: QuadratureSpec,
                       singularities: Sequence[float] = (),
                       jumps: Sequence[float] = (),
                       abs_tol: float | None = None):
    """Same machinery over a finite interval [a, b] (used off the half-line)."""
    if b <= a:
        return 0.0, 0.0
    tol = float(spec.abs_tol if abs_tol is None else abs_tol)
    sing = sorted(u for u in singularities if a < u < b)
    delta = spec.sing_radius
    pts = set(np.linspace(a, b, 9).tolist())
    pts.update(p for p in jumps if a < p < b)
    total = 0.0 + 0.0j
    err = 0.0
    lo = a
    smooth = []
    zone_edges = []
    for i, z in enumerate(sing):
        d = delta
        if i > 0:
            d = min(d, 0.45 * (z - sing[i - 1]))
        if i + 1 < len(sing):
            d = min(d, 0.45 * (sing[i + 1] - z))
        zone_edges.append((max(z - d, a), min(z + d, b)))
    for zl, zh in zone_edges:
        if zl > lo:
            bks = _merge_breakpoints(lo, zl, pts)
            smooth.extend(zip(bks[:-1], bks[1:]))
        lo = zh
    if b > lo:
        bks = _merge_breakpoints(lo, b, pts)
        smooth.extend(zip(bks[:-1], bks[1:]))
    val, e = _heap_refine(f, smooth, tol, spec.rel_tol, spec.max_depth)
    total += val
    err += e
    edge_tol = tol / max(1, len(sing))
    for z, (zl, zh) in zip(sing, zone_edges):
        if zl < z:
            val, e = _edge_refine(f, z, zl, edge_tol, spec.max_depth)
            total += val
            err += e
        if zh > z:
            val, e = _edge_refine(f, z, zh, edge_tol, spec.max_depth)
            total += val
            err += e
    total = _strip_imag(total)
    bound = max(tol, spec.rel_tol * abs(total))
    if err > _FAIL_FACTOR * bound:
        raise QuadratureError("interval quadrature did not reach tolerance",
                              total, err)
    return total, err
