import pytest
from hypothesis import strategies as st

from nielsencalc.lattice import IntMatrix


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5, lo=-20, hi=20, min_rows=1, min_cols=1):
    rows = draw(st.integers(min_rows, max_rows))
    cols = draw(st.integers(min_cols, max_cols))
    entries = draw(st.lists(st.integers(lo, hi), min_size=rows * cols, max_size=rows * cols))
    return IntMatrix(rows, cols, tuple(entries))


@st.composite
def unimodular(draw, size, steps=6):
    """Product of random elementary matrices."""
    m = IntMatrix.identity(size).to_rows()
    for _ in range(draw(st.integers(0, steps))):
        if size < 2:
            break
        i = draw(st.integers(0, size - 1))
        j = draw(st.integers(0, size - 1).filter(lambda j: j != i))
        q = draw(st.integers(-3, 3))
        m[i] = [a + q * b for a, b in zip(m[i], m[j])]
    if draw(st.booleans()):
        m[0] = [-x for x in m[0]]
    return IntMatrix.from_rows(m, size)


# per-criterion verdict lines collected by test_acceptance
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
