"""Closed-form cases: circle bundles over CP(q), roots of sphere maps, S^3 -> S^2."""

from __future__ import annotations

from dataclasses import dataclass

from .invariants import ONE, ZERO, Bounded, InvariantReport, Known, uniform_report
from .quotients import INF, Finite

_EXCEPTIONAL = frozenset({(8, 4), (9, 4), (9, 3), (10, 4), (16, 8), (17, 8), (24, 6)})


@dataclass(frozen=True)
class ProjectiveBundleInstance:
    """Fiber projection S(lambda^{⊗r}) -> CP(q) of the r-th tensor power of the canonical line bundle."""

    q: int
    r: int

    def __post_init__(self):
        if self.q <= 1:
            raise ValueError(f"need q > 1, got q={self.q}")


def projective_bundle_invariants(inst: ProjectiveBundleInstance) -> InvariantReport:
    q, r = inst.q, abs(inst.r)
    notes = []
    if inst.r < 0:
        notes.append(f"r = {inst.r} folded to |r| = {r} for the congruence")
    # q ≡ -1 (mod 0) would mean q = -1, impossible for q > 1
    minus_one = r != 0 and (q + 1) % r == 0
    # CP(q) is simply connected: a single Reidemeister class
    reid = Finite(1)
    if minus_one and q % 2 == 1:
        notes.append(f"q ≡ -1 (mod {r}) and q odd: f deforms off itself")
        return uniform_report(ZERO, reid, notes)
    if minus_one:
        notes.append(f"q ≡ -1 (mod {r}) and q even: one essential component, one point suffices")
        return uniform_report(ONE, reid, notes)
    notes.append(f"q ≢ -1 (mod {r}): MCC = 1, MC = inf")
    notes.append("N and N# are set equal to MCC in this branch")
    return InvariantReport(ONE, ONE, ONE, Known(INF), reid, tuple(notes))


def exceptional_sphere_pair(m: int, n: int) -> bool:
    """Whether some f : S^m -> S^n has 0 = N(f, *) < N#(f, *) = 1."""
    if (m, n) in _EXCEPTIONAL:
        return True
    if 3 <= n <= 11 and m == 10 + n:
        return True
    return n % 2 == 1 and n not in (1, 3, 7) and m == 2 * n - 1


def sphere_root_invariants(m: int, n: int, nullhomotopic: bool) -> InvariantReport:
    """Root invariants of f : S^m -> S^n against a constant map."""
    if n < 2:
        raise ValueError("sphere roots need n ≥ 2; use the circle calculator for n = 1")
    if m < 1:
        raise ValueError(f"domain dimension must be positive, got m={m}")
    if m < n and not nullhomotopic:
        raise ValueError(f"every map S^{m} -> S^{n} with m < n is nulhomotopic")
    reid = Finite(1)  # pi_1(S^n) = 0
    if nullhomotopic:
        return uniform_report(ZERO, reid, ["f nulhomotopic: f deforms off the point"])
    notes = ["f essential: N# = MCC = 1", "MC is only bounded below by MCC"]
    if exceptional_sphere_pair(m, n):
        reason = "a gap map may exist at this (m,n)"
        n_num = Bounded(Finite(0), Finite(1), reason)
        notes.append(f"(m, n) = ({m}, {n}): {reason}, N is only bounded")
    else:
        n_num = ONE
    return InvariantReport(n_num, ONE, ONE, Bounded(Finite(1), INF, "MC ≥ MCC"), reid, tuple(notes))


@dataclass(frozen=True)
class HopfDegreeReport:
    """Degrees of the class with Hopf invariant ``hopf`` in pi_3(S^2) = Z.

    ``omega_tilde`` lives in Z/2 + Z as (suspension, Hopf invariant);
    ``omega`` in Z/2 keeps only the suspension.
    """

    hopf: int
    omega_tilde: tuple[int, int]
    omega: int
    homological: int = 0


def hopf_degrees(h: int) -> HopfDegreeReport:
    suspension = h % 2
    return HopfDegreeReport(hopf=h, omega_tilde=(suspension, h), omega=suspension)
