from fractions import Fraction

import pytest
from hypothesis import strategies as st

from ginv.matrix import Matrix
from ginv.scalar import GaussianRational

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=1, max_value=6),
)

gaussians = st.builds(GaussianRational, small_rationals, small_rationals)

# Sparse-ish entries make rank deficiency and nontrivial index common.
entries = st.one_of(st.just(GaussianRational(0)), gaussians, st.builds(GaussianRational, small_rationals))


@st.composite
def matrices(draw, rows=None, cols=None, max_dim=4):
    r = rows if rows is not None else draw(st.integers(1, max_dim))
    c = cols if cols is not None else draw(st.integers(1, max_dim))
    return Matrix([[draw(entries) for _ in range(c)] for _ in range(r)])


@st.composite
def square_matrices(draw, max_dim=4):
    n = draw(st.integers(1, max_dim))
    return draw(matrices(rows=n, cols=n))


def jordan(n: int) -> Matrix:
    """Nilpotent upper shift of size n."""
    return Matrix([[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)])


@pytest.fixture
def idem():
    return Matrix([[1, 1], [0, 0]])


# Acceptance tests append "PASS/FAIL criterion ..." lines here; they are
# echoed in the terminal summary so a plain `pytest` run shows them.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
