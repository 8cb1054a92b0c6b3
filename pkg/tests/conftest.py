from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cdpoly.corpus import SplitMix64, exhaustive, gnp
from cdpoly.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@pytest.fixture(scope="session")
def small_graphs():
    """Every graph on at most 6 vertices, up to isomorphism."""
    return exhaustive(6)


@pytest.fixture(scope="session")
def graphs_upto7():
    return exhaustive(7)


def random_graphs(count, n_lo, n_hi, seed, ps=(Fraction(1, 5), Fraction(1, 2), Fraction(4, 5))):
    rng = SplitMix64(seed)
    out = []
    for i in range(count):
        n = n_lo + rng.below(n_hi - n_lo + 1)
        out.append(gnp(rng, n, ps[i % len(ps)]))
    return out


# One line per acceptance criterion, printed after the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
