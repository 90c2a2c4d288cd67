"""Cokernels of maps between free abelian groups and their cardinalities."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from math import prod

from .lattice import IntMatrix, smith_normal_form


@total_ordering
@dataclass(frozen=True)
class ExtendedNat:
    """A natural number or infinity. ``value is None`` encodes infinity."""

    value: int | None

    def __post_init__(self):
        if self.value is not None and (isinstance(self.value, bool) or self.value < 0):
            raise ValueError(f"not a natural number: {self.value!r}")

    @classmethod
    def finite(cls, n: int) -> ExtendedNat:
        return cls(int(n))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def _key(self):
        return (1, 0) if self.value is None else (0, self.value)

    def __lt__(self, other):
        if isinstance(other, int):
            other = ExtendedNat(other)
        if not isinstance(other, ExtendedNat):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self):
        return "inf" if self.value is None else str(self.value)

    def __repr__(self):
        return "INF" if self.value is None else f"Finite({self.value})"


INF = ExtendedNat(None)
Finite = ExtendedNat.finite


@dataclass(frozen=True)
class CokernelStructure:
    """Z^free_rank + Z/t1 + ... + Z/tk with t1 | t2 | ... and every ti > 1."""

    free_rank: int
    torsion_factors: tuple[int, ...] = ()

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion_factors]
        return " + ".join(parts) if parts else "0"


def cokernel(a: IntMatrix) -> CokernelStructure:
    """Structure of Z^rows / a(Z^cols)."""
    factors = smith_normal_form(a).factors
    return CokernelStructure(
        free_rank=a.rows - len(factors),
        torsion_factors=tuple(f for f in factors if f > 1),
    )


def cardinality(c: CokernelStructure) -> ExtendedNat:
    if c.free_rank > 0:
        return INF
    return Finite(prod(c.torsion_factors))


def reidemeister_count(d: IntMatrix) -> ExtendedNat:
    """Number of Reidemeister classes for maps into a torus.

    ``d`` is the matrix of f1_* - f2_* on first homology; with an abelian
    fundamental group the Reidemeister set is exactly coker(d).
    """
    return cardinality(cokernel(d))
