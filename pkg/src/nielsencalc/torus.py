"""Coincidence invariants for maps into the torus (S^1)^n and the circle.

Everything is decided by d = f1_* - f2_* on first homology, given as an
n x b integer matrix (b = rank of H_1 of the domain).
"""

from __future__ import annotations

from dataclasses import dataclass

from .invariants import ZERO, Bounded, InvariantReport, Known, Unknown, uniform_report
from .lattice import IntMatrix, LatticeError, gcd_entries, nonzero_minor_exists, rank
from .quotients import INF, Finite, cardinality, cokernel


@dataclass(frozen=True)
class TorusInstance:
    m: int
    n: int
    d: IntMatrix
    domain_is_torus: bool = True

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise LatticeError(f"dimensions must be positive, got m={self.m}, n={self.n}")
        if self.d.rows != self.n:
            raise LatticeError(f"matrix has {self.d.rows} rows but the target torus has dimension {self.n}")
        if self.domain_is_torus and self.d.cols != self.m:
            raise LatticeError(
                f"a torus domain T^{self.m} has H_1 of rank {self.m}, matrix has {self.d.cols} columns"
            )


def cup_product_nonzero_torus(d: IntMatrix, m: int, n: int) -> bool:
    """Whether prod_j (f1^* - f2^*)(iota_j) is nonzero in H^n(T^m).

    In the exterior algebra H^*(T^m) the coefficients of that product are
    the n x n minors of d.
    """
    if n > m:
        return False
    if d.shape != (n, m):
        raise LatticeError(f"expected a {n}x{m} matrix, got {d.rows}x{d.cols}")
    return nonzero_minor_exists(d, n)


def torus_invariants(inst: TorusInstance) -> InvariantReport:
    d, m, n = inst.d, inst.m, inst.n
    if rank(d) < n:
        return uniform_report(
            ZERO, INF,
            ["coker(f1_* - f2_*) is infinite: the maps can be deformed apart, all invariants vanish"],
        )

    count = cardinality(cokernel(d))
    if not inst.domain_is_torus:
        unk = "cup product criterion needs H^*(M), which is only modelled for torus domains"
        return InvariantReport(
            n_num=Bounded(Finite(0), count, "bounded by the number of Reidemeister classes"),
            n_sharp=Bounded(Finite(0), count, "bounded by the number of Reidemeister classes"),
            mcc=Unknown(unk),
            mc=Unknown(unk),
            reidemeister=count,
            notes=(f"#coker(f1_* - f2_*) = {count}", unk),
        )

    notes = [
        f"#coker(f1_* - f2_*) = {count}",
        "cup product nonzero: some maximal minor of f1_* - f2_* is nonzero",
        "N = N# = #coker: every Reidemeister class is essential",
    ]
    if n != 2:
        mcc = Known(count)
        notes.append("MCC = #coker (target dimension n != 2)")
    else:
        mcc = Bounded(count, INF, "MCC = #coker is only asserted for n != 2")
        notes.append("n = 2: MCC is only bounded below by N#")
    if m > n:
        mc = Known(INF)
        notes.append("MC = inf since m > n")
    else:
        mc = Bounded(mcc.lo, INF, "MC is only determined for m > n")
        notes.append("m = n: MC is only bounded below by MCC")
    return InvariantReport(Known(count), Known(count), mcc, mc, count, tuple(notes))


def circle_invariants(row: IntMatrix, m: int) -> InvariantReport:
    """Invariants for f1, f2 : M -> S^1, ``row`` = f1_* - f2_* (1 x b)."""
    if row.rows != 1:
        raise LatticeError(f"circle target needs a 1-row matrix, got {row.rows} rows")
    if m < 1:
        raise LatticeError(f"domain dimension must be positive, got m={m}")
    if row.is_zero():
        return uniform_report(ZERO, INF, ["f1_* = f2_*: f1 is homotopic to f2, all invariants vanish"])
    g = Finite(gcd_entries(row))
    notes = [f"MCC = N = N# = #coker(f1_* - f2_*) = gcd of entries = {g}"]
    if m > 1:
        mc = Known(INF)
        notes.append("MC = inf since m > 1")
    else:
        mc = Bounded(g, INF, "MC = inf is only asserted for m > 1")
        notes.append("m = 1: MC is only bounded below by MCC")
    return InvariantReport(Known(g), Known(g), Known(g), mc, g, tuple(notes))
