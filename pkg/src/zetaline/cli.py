"""Command-line orchestration: cache builds, check suites, data series.

Caches are versioned with a header line carrying a hash of the generating
configuration; on mismatch they are rebuilt, never silently reused.  All
outputs are deterministic for a fixed configuration (no randomness
anywhere in the pipeline).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import checks, lineint, primes
from .blaschke import SyntheticZeroSet
from .errors import DomainError
from .quadrature import QuadratureSpec
from .special import theta_exact
from .zeros import load_zero_table, save_zero_table, scan_zeros
from .zeta import (build_line_cache, read_config_hash, save_line_cache)

MIN_SCAN_HEIGHT = 15.0


@dataclass
class RunConfig:
    max_height: float = 1000.0
    truncation_T: float = 1000.0
    sieve_limit: int = 1_000_000
    abs_tol: float = 1e-9
    rel_tol: float = 1e-8
    grid_spacing: float = 0.01
    sing_radius: float = 0.05
    scan_step: float = 0.05
    refine_tol: float = 1e-9
    synthetic_zeros: str | None = None
    out_dir: Path = field(default_factory=lambda: Path("out"))

    def __post_init__(self) -> None:
        self.out_dir = Path(self.out_dir)
        if self.truncation_T > self.max_height:
            raise DomainError("truncation_T must not exceed max_height")

    def cache_hash(self) -> str:
        key = {
            "max_height": repr(self.max_height),
            "scan_step": repr(self.scan_step),
            "refine_tol": repr(self.refine_tol),
            "grid_spacing": repr(self.grid_spacing),
            "sing_radius": repr(self.sing_radius),
        }
        blob = json.dumps(key, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:12]

    def spec(self) -> QuadratureSpec:
        return QuadratureSpec(abs_tol=self.abs_tol, rel_tol=self.rel_tol,
                              truncation_T=self.truncation_T,
                              sing_radius=self.sing_radius)

    @property
    def zeros_path(self) -> Path:
        return self.out_dir / "zeros.csv"

    @property
    def samples_path(self) -> Path:
        return self.out_dir / "line_samples.csv"

    @property
    def exclusions_path(self) -> Path:
        return self.out_dir / "line_exclusions.csv"

    @property
    def sieve_path(self) -> Path:
        return self.out_dir / f"mangoldt_{self.sieve_limit}.npz"


def _build_caches(cfg: RunConfig, force: bool = False):
    """Load caches whose config hash matches, rebuild anything else."""
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    h = cfg.cache_hash()
    table = None
    if not force and cfg.zeros_path.exists() \
            and read_config_hash(cfg.zeros_path) == h:
        table = load_zero_table(cfg.zeros_path, cfg.max_height, cfg.refine_tol)
    if table is None:
        table = scan_zeros(cfg.max_height, cfg.scan_step, cfg.refine_tol)
        save_zero_table(table, cfg.zeros_path, h)
    # the in-memory cache is always rebuilt from the table (cheaper than
    # parsing the dense CSV); the sample files are rewritten only when stale
    cache = build_line_cache(table, cfg.grid_spacing, cfg.sing_radius)
    if force or not cfg.samples_path.exists() \
            or read_config_hash(cfg.samples_path) != h:
        save_line_cache(cache, cfg.samples_path, cfg.exclusions_path, h)
    if not force and cfg.sieve_path.exists():
        tab = primes.load_mangoldt(cfg.sieve_path)
    else:
        tab = primes.build_mangoldt(cfg.sieve_limit)
        primes.save_mangoldt(tab, cfg.sieve_path, h)
    return table, cache, tab


def cmd_build(cfg: RunConfig) -> int:
    if cfg.max_height < MIN_SCAN_HEIGHT:
        raise DomainError(f"max_height below minimum scan height {MIN_SCAN_HEIGHT}")
    table, cache, tab = _build_caches(cfg, force=True)
    print(f"zeros scanned up to {cfg.max_height:g}: {len(table)} ordinates "
          f"(count_consistent={table.count_consistent})")
    print(f"line samples: {cache.grid_u.size} points, "
          f"{len(cache.exclusions)} excluded intervals")
    print(f"von Mangoldt table up to {tab.limit}: {tab.prime_powers.size} prime powers")
    print(f"caches written to {cfg.out_dir}")
    return 0 if table.count_consistent else 1


def cmd_verify(cfg: RunConfig, names, make_plot: bool = True,
               x=None, s=None, r=None, t=None) -> int:
    unknown = [n for n in names if n not in checks.CHECK_NAMES]
    if unknown:
        print(f"unknown check name(s): {', '.join(unknown)}", file=sys.stderr)
        print(f"known: {', '.join(checks.CHECK_NAMES)}", file=sys.stderr)
        return 2
    table, cache, tab = _build_caches(cfg)
    zs = (SyntheticZeroSet.from_csv(cfg.synthetic_zeros)
          if cfg.synthetic_zeros else SyntheticZeroSet(()))
    ctx = checks.CheckContext(spec=cfg.spec(), zeros=table, cache=cache,
                              tab=tab, zs=zs, x=x, s=s, r=r, t=t)
    report = checks.run_checks(names, ctx)
    report.write_csv(cfg.out_dir / "report.csv")
    report.write_json(cfg.out_dir / "report.json")
    for line in report.summary_lines():
        print(line)
    if make_plot:
        from .plotting import render_report
        render_report(report, cfg.out_dir / "report.png")
    print(f"report written to {cfg.out_dir / 'report.csv'}")
    return 0 if report.passed else 1


def _series_rows(cfg: RunConfig, what: str, lo: float, hi: float, step: float):
    table, cache, tab = _build_caches(cfg)
    spec = cfg.spec()
    grid = np.arange(lo, hi + 0.5 * step, step)
    rows = []
    if what == "theta":
        for t in grid:
            rows.append((t, theta_exact(float(t)), 0.0))
        return rows
    if what == "fstar":
        if hi > tab.limit:
            raise DomainError(f"range end {hi} beyond sieve limit {tab.limit}")
        for x in grid:
            if x > 1.0:
                rows.append((x, primes.f_star(float(x), tab), 0.0))
        return rows
    if what == "f11":
        for x in grid:
            if x > 1.0:
                res = lineint.f11(float(x), spec, table)
                rows.append((x, res.real, res.err_est + res.tail_estimate))
        return rows
    if what == "f21":
        for x in grid:
            if x > 1.0:
                res = lineint.f21(float(x), spec, cache)
                rows.append((x, res.real, res.err_est + res.tail_estimate))
        return rows
    if what == "n_decomp":
        if hi > table.height:
            raise DomainError(f"range end {hi} beyond zero table height")
        for t in grid:
            if t <= 0:
                continue
            if table.ordinates.size and float(np.min(np.abs(table.ordinates - t))) < 0.2:
                continue  # mid-gap only; the derivative step needs clearance
            res = lineint.n2(float(t), spec, cache)
            rows.append((t, lineint.n1(float(t)) + res.real,
                         res.err_est + res.tail_estimate))
        return rows
    raise DomainError(f"unknown series '{what}'")


def cmd_series(cfg: RunConfig, what: str, rng: str, step: float,
               make_plot: bool = True) -> int:
    lo, hi = (float(v) for v in rng.split(":"))
    if hi <= lo or step <= 0:
        raise DomainError(f"bad range/step: {rng} step {step}")
    rows = _series_rows(cfg, what, lo, hi, step)
    out = cfg.out_dir / f"series_{what}.csv"
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    with open(out, "w") as fh:
        fh.write("arg,value,err_est\n")
        for a, v, e in rows:
            fh.write(f"{a:.6f},{v:.12e},{e:.3e}\n")
    if make_plot and rows:
        from .plotting import render_series
        render_series(what, [r[0] for r in rows], [r[1] for r in rows],
                      [r[2] for r in rows], cfg.out_dir / f"series_{what}.png")
    print(f"{len(rows)} rows written to {out}")
    return 0


def _parse_complex(text: str) -> complex:
    return complex(text.replace("i", "j").replace(" ", ""))


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-height", type=float, default=1000.0,
                   help="zero scan and cache ceiling")
    p.add_argument("--truncation-T", type=float, default=None,
                   help="integral cutoff height (default: max-height)")
    p.add_argument("--sieve-limit", type=int, default=1_000_000)
    p.add_argument("--abs-tol", type=float, default=1e-9)
    p.add_argument("--rel-tol", type=float, default=1e-8)
    p.add_argument("--synthetic-zeros", type=str, default=None,
                   help="CSV of sigma,tau rows for a synthetic off-line zero set")
    p.add_argument("--out", type=str, default="out", help="output directory")
    p.add_argument("--no-plot", action="store_true",
                   help="skip figure rendering next to the delimited output")


def _cfg_from(args) -> RunConfig:
    T = args.truncation_T if args.truncation_T is not None else args.max_height
    return RunConfig(max_height=args.max_height, truncation_T=T,
                     sieve_limit=args.sieve_limit, abs_tol=args.abs_tol,
                     rel_tol=args.rel_tol, synthetic_zeros=args.synthetic_zeros,
                     out_dir=Path(args.out))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="zetaline",
        description="critical-line integral identities for the zeta function: "
                    "build caches, verify identities, emit data series")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="scan zeros, sample the line, sieve")
    _add_common(p_build)

    p_verify = sub.add_parser("verify", help="run verification suites")
    _add_common(p_verify)
    p_verify.add_argument("--checks", type=str, default="",
                          help=f"comma list from: {', '.join(checks.CHECK_NAMES)} "
                               "(empty = all)")
    p_verify.add_argument("--x", type=float, default=None)
    p_verify.add_argument("--s", type=str, default=None,
                          help="complex like 1.5+3i")
    p_verify.add_argument("--r", type=str, default=None)
    p_verify.add_argument("--t", type=float, default=None)

    p_series = sub.add_parser("series", help="emit plot-ready data series")
    _add_common(p_series)
    p_series.add_argument("--what", required=True,
                          choices=("fstar", "f11", "f21", "n_decomp", "theta"))
    p_series.add_argument("--range", required=True, help="lo:hi")
    p_series.add_argument("--step", type=float, default=1.0)

    args = parser.parse_args(argv)
    try:
        cfg = _cfg_from(args)
        if args.command == "build":
            return cmd_build(cfg)
        if args.command == "verify":
            names = [n.strip() for n in args.checks.split(",") if n.strip()]
            s = _parse_complex(args.s) if args.s else None
            r = _parse_complex(args.r) if args.r else None
            return cmd_verify(cfg, names, make_plot=not args.no_plot,
                              x=args.x, s=s, r=r, t=args.t)
        if args.command == "series":
            return cmd_series(cfg, args.what, args.range, args.step,
                              make_plot=not args.no_plot)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
