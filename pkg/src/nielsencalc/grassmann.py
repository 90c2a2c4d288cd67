"""Selfcoincidences of the projection V_{r,k} -> G_{r,k} (frame -> spanned plane)."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .invariants import ONE, ZERO, Bounded, InvariantReport, Unknown, uniform_report
from .quotients import Finite

PRECONDITION = "Assume r ≥ 2k ≥ 2"

# group orders of the stable stems pi^S_0, pi^S_1, pi^S_3 (0 stands for Z)
_STEM_ORDER = {1: 0, 2: 2, 3: 24}


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class GrassmannInstance:
    r: int
    k: int

    def __post_init__(self):
        if not self.r >= 2 * self.k >= 2:
            raise PreconditionError(f"{PRECONDITION} (got r={self.r}, k={self.k})")


@dataclass(frozen=True)
class StableObstruction:
    """The class 2*chi(G_{r,k}) * [SO(k)] in the stable stem of index k(k-1)/2.

    ``group_order`` is 0 for the infinite cyclic stem; both it and
    ``residue`` are None when the class is only known symbolically (k >= 4).
    """

    stem_index: int
    chi: int
    group_order: int | None = None
    residue: int | None = None
    k: int | None = None

    @property
    def evaluated(self) -> bool:
        return self.residue is not None

    def __str__(self):
        if not self.evaluated:
            return f"{2 * self.chi}·[SO({self.k or 'k'})] in pi^S_{self.stem_index} (symbolic)"
        group = "Z" if self.group_order == 0 else f"Z/{self.group_order}"
        return f"{self.residue} in pi^S_{self.stem_index} = {group}"


def _check_k_r(r, k):
    if not 1 <= k < r:
        raise PreconditionError(f"need 1 ≤ k < r, got r={r}, k={k}")


def euler_char_grassmannian(r: int, k: int) -> int:
    _check_k_r(r, k)
    if r % 2 == 0 and k % 2 == 1:
        return 0
    return comb(r // 2, k // 2)


def grassmann_dims(r: int, k: int) -> tuple[int, int]:
    """(dim V_{r,k}, dim G_{r,k})."""
    _check_k_r(r, k)
    return r * k - k * (k + 1) // 2, k * (r - k)


def top_obstruction(inst: GrassmannInstance) -> StableObstruction:
    r, k = inst.r, inst.k
    chi = euler_char_grassmannian(r, k)
    stem = k * (k - 1) // 2
    order = _STEM_ORDER.get(k)
    if order is None:
        return StableObstruction(stem, chi, k=k)
    # [SO(1)] = 1 in Z, [SO(2)] = eta, [SO(3)] a generator of Z/24
    residue = 2 * chi if order == 0 else (2 * chi) % order
    return StableObstruction(stem, chi, order, residue, k)


def _vanishes(r, k, chi):
    return k % 2 == 0 or k in (7, 9) or chi % 12 == 0


def _essential(r, k):
    return (
        (k == 1 and r % 2 == 1)
        or (k == 3 and r % 2 == 1 and r % 12 != 1)
        or (k == 5 and r % 6 == 5)
    )


def grassmann_selfcoincidence(inst: GrassmannInstance) -> InvariantReport:
    r, k = inst.r, inst.k
    chi = euler_char_grassmannian(r, k)
    obstruction = top_obstruction(inst)
    notes = [f"chi(G_{{{r},{k}}}) = {chi}", f"top obstruction 2chi·[SO({k})] = {obstruction}"]
    if k == 3:
        notes.append("assumes [SO(3)] generates pi^S_3 = Z/24")
    reid = Unknown("Reidemeister set of the Grassmannian is not computed")

    if _vanishes(r, k, chi):
        if k % 2 == 0:
            notes.append("k even: f can be deformed off itself")
        elif k in (7, 9):
            notes.append(f"k = {k}: the obstruction vanishes")
        else:
            notes.append("chi ≡ 0 (mod 12): the obstruction vanishes")
        return uniform_report(ZERO, reid, notes)
    if _essential(r, k):
        notes.append("obstruction nonzero: MCC = MC = 1")
        return uniform_report(ONE, reid, notes)

    open_case = "this (r, k) is not decided; selfcoincidence gives MCC ≤ 1"
    notes.append(open_case)
    b = Bounded(Finite(0), Finite(1), open_case)
    return InvariantReport(b, b, b, Unknown("MC is not decided for this (r, k)"), reid, tuple(notes))
