from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antimatroid import (
    DomainError,
    NotAntimatroidError,
    SetFamily,
    VerificationError,
    basis_of,
    close_under_union,
    feasible_continuations,
    has_interval_property,
    is_accessible,
    is_antimatroid,
    is_union_closed,
    max_feasible,
    rank,
    satisfies_exchange,
    truncate,
    verification,
)
from antimatroid.oracle import random_accessible_family, random_antimatroid
from antimatroid.sets import axiom_violation, canonical_order, elements, fmt_set

from conftest import P3_SETS, s


def fam(n, sets):
    return SetFamily.of(n, sets)


def test_canonical_order_and_dedup():
    f = fam(3, [[1, 3], [], [1], [1], [1, 2, 3], [1, 2]])
    assert f.as_lists() == P3_SETS
    assert [fmt_set(X) for X in canonical_order(2)] == ["{}", "{1}", "{2}", "{1,2}"]


def test_subset_out_of_ground_rejected():
    with pytest.raises(DomainError):
        fam(2, [[3]])


@pytest.mark.parametrize(
    "n, sets, expected",
    [
        (2, [[], [1], [1, 2]], True),
        (2, [[], [1, 2]], False),
        (3, P3_SETS, True),
        (2, [], False),
        (2, [[1]], False),
    ],
)
def test_is_accessible(n, sets, expected):
    assert is_accessible(fam(n, sets)) is expected


@pytest.mark.parametrize(
    "n, sets, expected",
    [(2, [[], [1], [2]], False), (2, [[], [1], [2], [1, 2]], True), (3, P3_SETS, True)],
)
def test_satisfies_exchange(n, sets, expected):
    assert satisfies_exchange(fam(n, sets)) is expected


@pytest.mark.parametrize(
    "n, sets, expected",
    [(2, [[], [1], [2]], False), (2, [[]], True), (3, P3_SETS, True)],
)
def test_is_union_closed(n, sets, expected):
    assert is_union_closed(fam(n, sets)) is expected


@pytest.mark.parametrize(
    "n, sets, expected",
    [(2, [[], [1], [2]], False), (2, [[], [1], [2], [1, 2]], True), (3, P3_SETS, True)],
)
def test_has_interval_property(n, sets, expected):
    assert has_interval_property(fam(n, sets)) is expected


@pytest.mark.parametrize(
    "n, sets, expected",
    [(3, P3_SETS, True), (2, [[], [1], [2]], False), (2, [[], [1, 2]], False)],
)
def test_is_antimatroid(n, sets, expected):
    with verification():
        assert is_antimatroid(fam(n, sets)) is expected


def test_verification_mode_flags_disagreement(monkeypatch):
    from antimatroid import sets as core

    f = fam(3, P3_SETS)
    monkeypatch.setattr(core, "has_interval_property", lambda _: False)
    with verification(), pytest.raises(VerificationError):
        is_antimatroid(f)


def test_feasible_continuations(p3_family):
    assert feasible_continuations(p3_family, s()) == s(1)
    assert feasible_continuations(p3_family, s(1)) == s(2, 3)
    assert feasible_continuations(p3_family, s(1, 2, 3)) == 0
    with pytest.raises(DomainError):
        feasible_continuations(p3_family, s(2))


def test_basis_of(p3_family):
    assert basis_of(p3_family, s(2, 3)) == 0
    assert basis_of(p3_family, s(1, 2)) == s(1, 2)
    assert basis_of(p3_family, s(2)) == 0
    with pytest.raises(NotAntimatroidError):
        basis_of(fam(2, [[], [1], [2]]), s(1, 2))


def test_rank(p3_family):
    assert rank(p3_family, s(2, 3)) == 0
    assert rank(p3_family) == 3
    assert rank(truncate(p3_family, 2)) == 2


def test_max_feasible(p3_family):
    assert max_feasible(p3_family) == s(1, 2, 3)
    assert max_feasible(fam(3, [[], [1], [1, 3]])) == s(1, 3)
    assert max_feasible(fam(3, [[]])) == 0
    with pytest.raises(NotAntimatroidError):
        max_feasible(fam(2, [[], [1], [2]]))


def test_truncate(p3_family):
    assert truncate(p3_family, 2).as_lists() == [[], [1], [1, 2], [1, 3]]
    assert truncate(p3_family, 0).as_lists() == [[]]
    assert truncate(p3_family, 3) == p3_family
    with pytest.raises(DomainError):
        truncate(p3_family, -1)


def test_close_under_union(p3_family):
    with verification():
        assert close_under_union(fam(3, [[], [1], [1, 2], [1, 3]])) == p3_family
        assert close_under_union(p3_family) == p3_family
        assert close_under_union(fam(2, [[], [1], [2]])).as_lists() == [[], [1], [2], [1, 2]]


def test_axiom_violation_messages():
    f = fam(2, [[], [1], [2]])
    assert axiom_violation(f, "accessible") is None
    assert axiom_violation(f, "union_closed") == "X={1} Y={2} union missing"
    assert axiom_violation(f, "interval") == "X={} Y={1} x=2"
    assert axiom_violation(fam(2, [[], [1, 2]]), "accessible") == "X={1,2} has no feasible parent"


# -- properties ----------------------------------------------------------------

families = st.builds(
    lambda seed, n, closed: (random_antimatroid if closed else random_accessible_family)(seed, n),
    st.integers(0, 10**6),
    st.integers(1, 5),
    st.booleans(),
)


@settings(max_examples=150, deadline=None)
@given(families)
def test_three_criteria_agree_on_accessible(f):
    assert f.accessible
    assert is_union_closed(f) == satisfies_exchange(f) == has_interval_property(f)


def _subsets(mask):
    xs = elements(mask)
    for r in range(len(xs) + 1):
        for c in combinations(xs, r):
            yield sum(1 << (x - 1) for x in c)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 5), st.data())
def test_basis_contains_every_feasible_subset(seed, n, data):
    f = random_antimatroid(seed, n)
    X = data.draw(st.integers(0, (1 << n) - 1))
    B = basis_of(f, X)
    assert B in f and not B & ~X
    assert all(Y & ~B == 0 for Y in _subsets(X) if Y in f)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 5))
def test_gamma_isotone_on_antimatroids(seed, n):
    f = random_antimatroid(seed, n)
    for X in f:
        for Y in f:
            if X & ~Y == 0:
                full = f.ground.full
                assert feasible_continuations(f, X) & (full & ~Y) & ~feasible_continuations(f, Y) == 0


@settings(max_examples=100, deadline=None)
@given(families, st.integers(0, 5))
def test_truncate_and_closure_laws(f, k):
    t = truncate(f, k)
    assert t.members <= f.members
    c = close_under_union(f)
    assert c.members >= f.members
    assert close_under_union(c) == c
    assert rank(f) == max(len(elements(X)) for X in f)
    with verification():
        assert close_under_union(t).accessible
