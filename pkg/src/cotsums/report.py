"""Verification reports: one record per identity instance."""

from __future__ import annotations

import json
from dataclasses import dataclass

import mpmath
from mpmath import mpf, workprec

from .hp import fmt, to_number


@dataclass
class IdentityReport:
    """One verification instance: lhs vs rhs at a tolerance.

    `passed` is exactly `residual < tolerance`, where tolerance is the
    effective one for the instance (the configured tolerance, or the
    identity's own computed bound for truncated-series checks).
    """

    id: str
    params: dict
    lhs: str
    rhs: str
    residual: str
    tolerance: str
    passed: bool
    note: str = ""
    anchor: str = ""
    micros: int = 0
    lhs_micros: int | None = None
    rhs_micros: int | None = None

    def to_dict(self) -> dict:
        out = {"id": self.id, "params": self.params, "lhs": self.lhs,
               "rhs": self.rhs, "residual": self.residual,
               "tolerance": self.tolerance, "pass": self.passed,
               "note": self.note, "anchor": self.anchor,
               "micros": self.micros}
        if self.lhs_micros is not None:
            out["lhs_micros"] = self.lhs_micros
            out["rhs_micros"] = self.rhs_micros
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "IdentityReport":
        return cls(id=d["id"], params=d["params"], lhs=d["lhs"], rhs=d["rhs"],
                   residual=d["residual"], tolerance=d["tolerance"],
                   passed=d["pass"], note=d.get("note", ""),
                   anchor=d.get("anchor", ""), micros=d.get("micros", 0),
                   lhs_micros=d.get("lhs_micros"),
                   rhs_micros=d.get("rhs_micros"))


def build_report(identity_id: str, anchor: str, params: dict, lhs, rhs,
                 bits: int, tolerance, note: str = "",
                 residual=None) -> IdentityReport:
    """Assemble a report, computing |lhs - rhs| at working precision unless
    a residual (e.g. a max over map indices) is supplied."""
    with workprec(bits + 16):
        if residual is None:
            residual = abs(to_number(lhs) - to_number(rhs))
        residual = abs(to_number(residual))
        passed = bool(residual < tolerance)
    return IdentityReport(
        id=identity_id, params=params, lhs=fmt(lhs, bits), rhs=fmt(rhs, bits),
        residual=mpmath.nstr(residual, 10), tolerance=mpmath.nstr(mpf(tolerance), 10),
        passed=passed, note=note, anchor=anchor)


def csv_header(param_names) -> list[str]:
    return (["id"] + list(param_names)
            + ["lhs", "rhs", "residual", "pass", "micros"])


def csv_row(report: IdentityReport, param_names) -> list:
    row = [report.id]
    for name in param_names:
        v = report.params.get(name, "")
        if isinstance(v, (list, tuple)):
            v = ",".join(str(x) for x in v)
        row.append(v)
    row += [report.lhs, report.rhs, report.residual,
            int(report.passed), report.micros]
    return row
