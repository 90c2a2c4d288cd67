import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import coset_count, wedge
from nielsencalc.invariants import Bounded, Known, Unknown
from nielsencalc.lattice import IntMatrix, LatticeError, rank
from nielsencalc.quotients import INF, Finite, cardinality, cokernel
from nielsencalc.torus import TorusInstance, circle_invariants, cup_product_nonzero_torus, torus_invariants
from nielsencalc.validation import validate_chain

M = IntMatrix.from_rows
K0 = Known(Finite(0))


def all_values(report):
    return [report.n_num, report.n_sharp, report.mcc, report.mc]


def wedge_nonzero(d):
    return bool(wedge(d.to_rows()))


class TestCupProduct:
    def test_identity(self):
        assert cup_product_nonzero_torus(IntMatrix.identity(3), 3, 3)

    def test_singular(self):
        d = M([[1, 2], [2, 4]])
        assert not wedge_nonzero(d)
        assert not cup_product_nonzero_torus(d, 2, 2)

    def test_rank_three_wide(self):
        d = M([[1, 0, 0, 2], [0, 1, 0, 3], [0, 0, 2, 1]])
        assert wedge_nonzero(d)
        assert cup_product_nonzero_torus(d, 4, 3)

    def test_more_factors_than_domain_dimension(self):
        assert not cup_product_nonzero_torus(IntMatrix.zeros(3, 2), 2, 3)

    def test_shape_mismatch(self):
        with pytest.raises(LatticeError):
            cup_product_nonzero_torus(IntMatrix.identity(2), 3, 2)

    @given(st.integers(1, 3), st.integers(0, 2), st.randoms(use_true_random=False))
    def test_minors_are_wedge_coefficients(self, n, extra, rnd):
        m = n + extra
        d = M([[rnd.randint(-3, 3) for _ in range(m)] for _ in range(n)])
        assert cup_product_nonzero_torus(d, m, n) == wedge_nonzero(d)


class TestTorusInvariants:
    def test_rank_deficient(self):
        d = M([[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]])
        assert rank(d) == 2
        report = torus_invariants(TorusInstance(4, 3, d))
        assert all_values(report) == [K0] * 4
        assert report.reidemeister == INF

    def test_wide_with_torsion(self):
        d = M([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0]])
        assert coset_count(d.to_rows()) == 2
        report = torus_invariants(TorusInstance(4, 3, d))
        assert all_values(report) == [Known(2), Known(2), Known(2), Known(INF)]

    def test_square_diagonal(self):
        d = IntMatrix.diagonal([1, 2, 3])
        report = torus_invariants(TorusInstance(3, 3, d))
        assert report.n_num == report.n_sharp == report.mcc == Known(6)
        assert isinstance(report.mc, Bounded)
        assert (report.mc.lo, report.mc.hi) == (Finite(6), INF)

    def test_two_dimensional_target(self):
        report = torus_invariants(TorusInstance(2, 2, IntMatrix.diagonal([2, 2])))
        assert report.n_num == report.n_sharp == Known(4)
        assert isinstance(report.mcc, Bounded)
        assert (report.mcc.lo, report.mcc.hi) == (Finite(4), INF)

    def test_non_torus_domain(self):
        d = M([[3, 0, 3], [0, 1, 1]])
        report = torus_invariants(TorusInstance(5, 2, d, domain_is_torus=False))
        assert report.n_num == Bounded(Finite(0), Finite(3), report.n_num.reason)
        assert isinstance(report.mcc, Unknown) and isinstance(report.mc, Unknown)

    def test_non_torus_simply_connected_domain(self):
        report = torus_invariants(TorusInstance(4, 2, IntMatrix.zeros(2, 0), domain_is_torus=False))
        assert all_values(report) == [K0] * 4

    @pytest.mark.parametrize("m, n, shape", [(3, 3, (2, 3)), (3, 2, (2, 2)), (0, 1, (1, 0))])
    def test_shape_errors(self, m, n, shape):
        with pytest.raises(LatticeError):
            TorusInstance(m, n, IntMatrix.zeros(*shape))


@st.composite
def torus_instances(draw):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(n, n + 2))
    entries = draw(st.lists(st.integers(-4, 4), min_size=n * m, max_size=n * m))
    return TorusInstance(m, n, IntMatrix(n, m, tuple(entries)))


@settings(max_examples=200)
@given(torus_instances())
def test_criteria_agree(inst):
    d = inst.d
    by_rank = rank(d) == inst.n
    by_cup = cup_product_nonzero_torus(d, inst.m, inst.n)
    by_coker = not cardinality(cokernel(d)).is_infinite
    assert by_rank == by_cup == by_coker


@given(torus_instances())
def test_vanishing_and_validity(inst):
    report = torus_invariants(inst)
    if rank(inst.d) < inst.n:
        assert all_values(report) == [K0] * 4
    assert validate_chain(report, inst.n).ok


@given(torus_instances())
def test_symmetric_in_the_two_maps(inst):
    swapped = TorusInstance(inst.m, inst.n, -inst.d, inst.domain_is_torus)
    assert torus_invariants(swapped) == torus_invariants(inst)


@given(torus_instances())
def test_mcc_bounded_by_reidemeister(inst):
    report = torus_invariants(inst)
    if inst.n != 2 and isinstance(report.mcc, Known):
        assert report.mcc.value <= report.reidemeister


class TestCircle:
    def test_row(self):
        report = circle_invariants(M([[4, 6]]), 2)
        assert report.mcc == report.n_num == report.n_sharp == Known(2)
        assert report.mc == Known(INF)

    @pytest.mark.parametrize("m", [1, 2, 5])
    def test_homotopic(self, m):
        report = circle_invariants(IntMatrix.zeros(1, 2), m)
        assert all_values(report) == [K0] * 4

    def test_circle_domain(self):
        report = circle_invariants(M([[1]]), 1)
        assert report.mcc == Known(1)
        assert (report.mc.lo, report.mc.hi) == (Finite(1), INF)

    def test_matches_torus_with_one_row(self):
        d = M([[6, -4, 10]])
        c = circle_invariants(d, 3)
        t = torus_invariants(TorusInstance(3, 1, d))
        assert all_values(c) == all_values(t)

    def test_rejects_multi_row(self):
        with pytest.raises(LatticeError):
            circle_invariants(IntMatrix.identity(2), 2)
