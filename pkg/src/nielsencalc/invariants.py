"""Value types for the coincidence invariants N, N#, MCC and MC."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .quotients import INF, ExtendedNat, Finite


def _ext(x) -> ExtendedNat:
    return x if isinstance(x, ExtendedNat) else Finite(x)


@dataclass(frozen=True)
class Known:
    value: ExtendedNat

    def __post_init__(self):
        object.__setattr__(self, "value", _ext(self.value))

    @property
    def lo(self) -> ExtendedNat:
        return self.value

    @property
    def hi(self) -> ExtendedNat:
        return self.value


@dataclass(frozen=True)
class Bounded:
    """The invariant lies in the closed interval [lo, hi]."""

    lo: ExtendedNat
    hi: ExtendedNat
    reason: str = ""

    def __post_init__(self):
        object.__setattr__(self, "lo", _ext(self.lo))
        object.__setattr__(self, "hi", _ext(self.hi))
        if self.hi < self.lo:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class Unknown:
    reason: str = ""


InvariantValue = Union[Known, Bounded, Unknown]


def interval(v: InvariantValue) -> tuple[ExtendedNat, ExtendedNat] | None:
    """(lo, hi) for Known and Bounded values, None for Unknown."""
    if isinstance(v, Unknown):
        return None
    return v.lo, v.hi


ZERO = Known(Finite(0))
ONE = Known(Finite(1))


@dataclass(frozen=True)
class InvariantReport:
    n_num: InvariantValue
    n_sharp: InvariantValue
    mcc: InvariantValue
    mc: InvariantValue
    reidemeister: ExtendedNat | Unknown
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "notes", tuple(self.notes))

    def chain(self) -> list[tuple[str, InvariantValue]]:
        """The invariants in the order N <= N# <= MCC <= MC."""
        return [("N", self.n_num), ("N#", self.n_sharp), ("MCC", self.mcc), ("MC", self.mc)]


def uniform_report(value: InvariantValue, reidemeister, notes=()) -> InvariantReport:
    return InvariantReport(value, value, value, value, reidemeister, tuple(notes))


__all__ = [
    "Known", "Bounded", "Unknown", "InvariantValue", "InvariantReport",
    "interval", "uniform_report", "ZERO", "ONE", "INF", "Finite",
]
