"""Consistency checks every emitted report must pass.

N <= N# <= MCC <= MC; MCC <= #R when n != 2; MCC <= 1 for selfcoincidences.
Unknown values make no claim and therefore never violate anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .invariants import InvariantReport, Unknown, interval
from .quotients import Finite


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[tuple[str, str], ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_chain(report: InvariantReport, n: int, selfcoincidence: bool = False) -> ValidationResult:
    violations = []
    chain = report.chain()
    for i, (left, lv) in enumerate(chain):
        li = interval(lv)
        if li is None:
            continue
        for right, rv in chain[i + 1:]:
            ri = interval(rv)
            if ri is not None and li[0] > ri[1]:
                violations.append(
                    (f"{left}<={right}", f"{left} ≥ {li[0]} but {right} ≤ {ri[1]}: {left} ≤ {right} fails")
                )

    mcc = interval(report.mcc)
    if n != 2 and mcc is not None and not isinstance(report.reidemeister, Unknown):
        if mcc[0] > report.reidemeister:
            violations.append(
                ("MCC<=R", f"MCC ≥ {mcc[0]} exceeds the Reidemeister count {report.reidemeister}")
            )

    if selfcoincidence and mcc is not None and mcc[1] > Finite(1):
        violations.append(("selfcoincidence", f"selfcoincidence MCC must be ≤ 1, report allows {mcc[1]}"))

    return ValidationResult(tuple(violations))
