"""Verification records and their CSV/JSON serialisation."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field


def _fmt(z) -> str:
    z = complex(z)
    if z.imag == 0.0:
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}j"


@dataclass
class CheckRecord:
    """One verified identity: both sides, difference, budget, outcome.

    A record passes when abs_diff <= tolerance + tail_estimate; the tail is
    the analytically estimated contribution of whatever was truncated
    (integral beyond T, sum beyond the sieve limit) and is always printed,
    never silently absorbed.
    """

    check_id: str
    lhs: complex
    rhs: complex
    abs_diff: float
    tolerance: float
    tail_estimate: float
    seconds: float = 0.0

    def __post_init__(self) -> None:
        # numpy scalars sneak in from vectorised paths; pin plain types so
        # serialisation and comparisons stay ecosystem-neutral
        self.lhs = complex(self.lhs)
        self.rhs = complex(self.rhs)
        self.abs_diff = float(self.abs_diff)
        self.tolerance = float(self.tolerance)
        self.tail_estimate = float(self.tail_estimate)
        self.seconds = float(self.seconds)

    @property
    def passed(self) -> bool:
        return bool(self.abs_diff <= self.tolerance + self.tail_estimate)

    def row(self) -> list:
        return [self.check_id, _fmt(self.lhs), _fmt(self.rhs),
                f"{self.abs_diff:.6e}", f"{self.tolerance:.3e}",
                f"{self.tail_estimate:.3e}", str(self.passed).lower(),
                f"{self.seconds:.3f}"]

    def as_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "lhs": _fmt(self.lhs),
            "rhs": _fmt(self.rhs),
            "abs_diff": self.abs_diff,
            "tolerance": self.tolerance,
            "tail_estimate": self.tail_estimate,
            "pass": self.passed,
            "seconds": round(self.seconds, 3),
        }


@dataclass
class VerificationReport:
    entries: list = field(default_factory=list)

    def extend(self, records) -> None:
        self.entries.extend(records)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.entries)

    def summary_lines(self):
        for r in self.entries:
            status = "PASS" if r.passed else "FAIL"
            yield (f"[{status}] {r.check_id}: |diff|={r.abs_diff:.3e} "
                   f"<= tol {r.tolerance:.1e} + tail {r.tail_estimate:.1e} "
                   f"({r.seconds:.2f}s)")

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["check_id", "lhs", "rhs", "abs_diff", "tolerance",
                        "tail", "pass", "seconds"])
            for r in self.entries:
                w.writerow(r.row())

    def write_json(self, path) -> None:
        with open(path, "w") as fh:
            json.dump([r.as_dict() for r in self.entries], fh, indent=2)
            fh.write("\n")
