"""Check records and suite reports shared by every verification routine."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

__all__ = ["CheckRecord", "SuiteReport", "compare_numeric", "compare_series", "passed", "rel_error"]

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckRecord:
    """Outcome of one identity check.

    ``metric`` is the max residual (numeric checks) or the first mismatching
    exponent/index (exact checks, None when everything matched).  ``precision``
    is the achieved u-precision or the tolerance used.
    """

    name: str
    status: str
    metric: float | int | None = None
    precision: float | int | None = None
    details: dict = field(default_factory=dict)
    reason: str | None = None
    elapsed: float | None = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "name": self.name,
            "status": self.status,
            "metric": _clean(self.metric),
            "precision": _clean(self.precision),
        }
        if self.reason is not None:
            d["reason"] = self.reason
        if self.details:
            d["details"] = _clean(self.details)
        if timing and self.elapsed is not None:
            d["elapsed"] = round(self.elapsed, 6)
        return d


def _clean(x):
    """Make values JSON-stable (floats rounded to repr, infinities as strings)."""
    if isinstance(x, float):
        if math.isnan(x) or math.isinf(x):
            return str(x)
        return float(f"{x:.12g}")
    if isinstance(x, complex):
        return [_clean(x.real), _clean(x.imag)]
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if hasattr(x, "item") and callable(x.item):
        return _clean(x.item())
    return x


@dataclass
class SuiteReport:
    suite: str
    params: dict
    records: list = field(default_factory=list)
    elapsed: float | None = None
    error: str | None = None

    def add(self, rec: CheckRecord) -> CheckRecord:
        self.records.append(rec)
        return rec

    def extend(self, recs):
        for r in recs:
            self.add(r)

    @property
    def ok(self) -> bool:
        return self.error is None and all(r.ok for r in self.records)

    @property
    def status(self) -> str:
        return PASS if self.ok else FAIL

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "suite": self.suite,
            "status": self.status,
            "params": _clean(self.params),
            "checks": [r.to_dict(timing) for r in self.records],
        }
        if self.error:
            d["error"] = self.error
        if timing and self.elapsed is not None:
            d["elapsed"] = round(self.elapsed, 6)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2)


def passed(records) -> bool:
    return all(r.ok for r in records)


def rel_error(lhs, rhs) -> float:
    """|L - R| / (|L| + |R| + 1)."""
    return abs(lhs - rhs) / (abs(lhs) + abs(rhs) + 1.0)


def compare_numeric(name, lhs, rhs, tol, **details) -> CheckRecord:
    """Relative comparison; NaN or infinity is a failure, never a pass."""
    vals = [lhs, rhs]
    bad = any(not math.isfinite(abs(v)) for v in vals)
    err = float("nan") if bad else rel_error(lhs, rhs)
    status = FAIL if bad or err > tol else PASS
    details = dict(details)
    details.setdefault("lhs", lhs)
    details.setdefault("rhs", rhs)
    return CheckRecord(name, status, err, tol, details)


def compare_series(name, agreement, required_prec=None, **details) -> CheckRecord:
    """Record for an exact/truncated series comparison (an ``Agreement``)."""
    prec = agreement.prec
    ok = agreement.ok
    if ok and required_prec is not None and prec is not None and prec < required_prec:
        ok = False
        details["shortfall"] = f"achieved precision {prec} < required {required_prec}"
    return CheckRecord(
        name,
        PASS if ok else FAIL,
        agreement.first_mismatch,
        "exact" if prec is None else prec,
        details,
    )
