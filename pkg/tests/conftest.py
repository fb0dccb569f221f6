import pytest

from antimatroid import (
    GroundSet,
    Poset,
    SetFamily,
    poset_min_operator,
    table_operator,
    weight_minus_size,
)
from antimatroid.sets import mask_of


def s(*xs):
    return mask_of(xs)


P3_SETS = [[], [1], [1, 2], [1, 3], [1, 2, 3]]


@pytest.fixture
def p3_op():
    return poset_min_operator(Poset(GroundSet(3), frozenset({(1, 2), (1, 3)})))


@pytest.fixture
def p3_family():
    return SetFamily.of(3, P3_SETS)


@pytest.fixture
def n3_op():
    return table_operator(
        3,
        [([], [1, 2]), ([1], [2, 3]), ([2], [3]), ([1, 2], [3]), ([1, 3], [2]), ([2, 3], [1])],
    )


@pytest.fixture
def w136():
    return weight_minus_size([1, 6, 3])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
