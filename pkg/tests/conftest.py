import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from fuzztop import Carrier, EndoFunction, FuzzySet

GRID = [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1)]


def fs(*grades):
    return FuzzySet.of(len(grades), [Fraction(g) if not isinstance(g, str) else g for g in grades])


def all_maps(max_size):
    for n in range(1, max_size + 1):
        for m in itertools.product(range(n), repeat=n):
            yield EndoFunction.of(m)


def all_bijections(max_size):
    for n in range(1, max_size + 1):
        for m in itertools.permutations(range(n)):
            yield EndoFunction.of(m)


grades = st.fractions(min_value=0, max_value=1, max_denominator=12)


@st.composite
def fuzzy_sets(draw, size=None):
    n = size if size is not None else draw(st.integers(1, 4))
    return FuzzySet(Carrier(n), tuple(draw(grades) for _ in range(n)))


@st.composite
def fuzzy_pairs(draw):
    n = draw(st.integers(1, 4))
    return draw(fuzzy_sets(n)), draw(fuzzy_sets(n))


@st.composite
def fuzzy_triples(draw):
    n = draw(st.integers(1, 4))
    return draw(fuzzy_sets(n)), draw(fuzzy_sets(n)), draw(fuzzy_sets(n))


@st.composite
def endofunctions(draw, max_size=5):
    n = draw(st.integers(1, max_size))
    return EndoFunction.of(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))


@pytest.fixture
def example_map():
    return EndoFunction.of([0, 3, 4, 0, 0])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
