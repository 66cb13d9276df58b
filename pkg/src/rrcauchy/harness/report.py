"""Verdict records shared by every check."""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from ..qseries import QSeries


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


def coeff_str(c: int | Fraction) -> str:
    return str(c)


@dataclass
class IdentityReport:
    identity: str
    params: dict[str, int]
    order: int
    status: Status
    first_mismatch: tuple[int, Any, Any] | None = None
    solution: dict | None = None
    details: list[str] = field(default_factory=list)
    elapsed_ms: int = 0

    def __post_init__(self):
        if (self.status is Status.FAIL) != (self.first_mismatch is not None):
            raise ValueError("a report fails exactly when it carries a mismatch")

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self) -> dict:
        mm = None
        if self.first_mismatch is not None:
            e, lhs, rhs = self.first_mismatch
            mm = {"exponent": e, "lhs": coeff_str(lhs), "rhs": coeff_str(rhs)}
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "order": self.order,
            "status": self.status.value,
            "first_mismatch": mm,
            "solution": self.solution,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def summary_line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"[{self.status.value.upper():12s}] {self.identity} {params} order={self.order}"
        if self.first_mismatch is not None:
            e, lhs, rhs = self.first_mismatch
            line += f"  first mismatch at q^{e}: lhs={lhs} rhs={rhs}"
        return line


@contextmanager
def stopwatch():
    box = {"ms": 0}
    start = time.perf_counter()
    try:
        yield box
    finally:
        box["ms"] = int(round((time.perf_counter() - start) * 1000))


def compare_series(
    identity: str,
    params: dict[str, int],
    lhs: QSeries,
    rhs: QSeries,
    details: list[str] | None = None,
) -> IdentityReport:
    """Pass/fail report for lhs == rhs up to their common order."""
    mm = lhs.first_mismatch(rhs)
    return IdentityReport(
        identity,
        params,
        min(lhs.order, rhs.order),
        Status.PASS if mm is None else Status.FAIL,
        mm,
        details=details or [],
    )


def first_of(mismatches: list[tuple[int, Any, Any]]) -> tuple[int, Any, Any] | None:
    """Mismatch with the smallest exponent (stable on ties)."""
    best = None
    for mm in mismatches:
        if mm is not None and (best is None or mm[0] < best[0]):
            best = mm
    return best
