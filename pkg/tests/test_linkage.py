import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antimatroid import (
    DomainError,
    EmptyContinuationError,
    check_isotone,
    check_monotone,
    failure_linkage,
    full_operator,
    generate_family,
    linkage_value,
    objective_F,
    objective_F_psi,
    single_linkage,
    table_linkage,
    weight_minus_size,
)
from antimatroid.linkage import MonotoneWitness, materialize
from antimatroid.operators import IsotoneWitness
from antimatroid.oracle import random_isotone_operator, random_monotone_linkage, random_nonisotone_operator
from antimatroid.sets import elements

from conftest import s

D3 = [[0, 1, 4], [1, 0, 2], [4, 2, 0]]


def test_linkage_values(w136):
    assert linkage_value(w136, 3, s(1)) == 2
    sl = single_linkage(D3)
    assert linkage_value(sl, 3, s(1, 2)) == 2
    assert linkage_value(sl, 3, s()) == sl.empty_value == 9
    assert linkage_value(single_linkage(D3, empty_value=7), 1, s()) == 7


def test_linkage_domain_errors(w136):
    with pytest.raises(DomainError):
        linkage_value(w136, 1, s(1))
    with pytest.raises(DomainError):
        table_linkage(1, [])
    with pytest.raises(DomainError):
        single_linkage(D3, empty_value=3)
    with pytest.raises(DomainError):
        single_linkage([[0, 1], [2, 0]])


def test_check_monotone(w136):
    assert check_monotone(w136) is None
    bad = table_linkage(2, [(1, [], 0), (1, [2], 5), (2, [], 1), (2, [1], 0)])
    assert check_monotone(bad) == MonotoneWitness(1, 0, s(2))
    assert check_monotone(bad, sampled=True) is not None
    assert check_monotone(single_linkage(D3)) is None
    # sentinel below the largest singleton distance breaks monotonicity
    assert check_monotone(single_linkage(D3, empty_value=4.0)) is None
    assert check_monotone(single_linkage([[0, 3], [3, 0]], empty_value=3)) is None


def test_check_monotone_size_limit():
    big = weight_minus_size(range(17))
    with pytest.raises(DomainError):
        check_monotone(big)
    assert check_monotone(big, sampled=True, samples=50) is None


def test_objective_F(w136):
    assert objective_F(w136, s()) == (1, 1)
    assert objective_F(w136, s(1, 3)) == (4, 2)
    assert objective_F(table_linkage(1, [(1, [], 2.5)]), s()) == (2.5, 1)
    with pytest.raises(DomainError):
        objective_F(w136, s(1, 2, 3))


def test_objective_F_psi(p3_op, w136):
    assert objective_F_psi(w136, p3_op, s()) == (1, 1)
    assert objective_F_psi(w136, p3_op, s(1)) == (2, 3)
    assert objective_F_psi(w136, p3_op, s(1, 3)) == (4, 2)
    with pytest.raises(EmptyContinuationError) as err:
        objective_F_psi(w136, p3_op, s(1, 2, 3))
    assert err.value.stuck == s(1, 2, 3)


def test_failure_linkage_on_n3(n3_op):
    fam, trace = generate_family(n3_op)
    w = check_isotone(n3_op, "feasible_only")
    pi = failure_linkage(n3_op, w, trace)
    for X in range(8):
        if not X & 1:
            assert linkage_value(pi, 1, X) == 1
        for x in (2, 3):
            if not X >> (x - 1) & 1:
                assert linkage_value(pi, x, X) == (1 if X & 1 else 2)
    assert objective_F_psi(pi, n3_op, s(2)) == (2, 3)
    assert check_monotone(pi) is None


def test_failure_linkage_rejects_bad_witness(n3_op):
    _, trace = generate_family(n3_op)
    with pytest.raises(DomainError):
        failure_linkage(n3_op, IsotoneWitness(0, s(1), 2), trace)
    with pytest.raises(DomainError):
        failure_linkage(n3_op, IsotoneWitness(0, s(1), 1), trace)


# -- properties ----------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-5, 20), min_size=1, max_size=6))
def test_weight_minus_size_monotone(ws):
    pi = weight_minus_size(ws)
    assert check_monotone(pi) is None
    t = materialize(pi)
    assert all(v == ws[x - 1] - len(elements(X)) for x, X, v in t.table)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 6), st.integers(1, 4))
def test_random_linkage_monotone_pairs(seed, n, levels):
    pi = random_monotone_linkage(seed, n, levels)
    assert check_monotone(pi) is None
    full = (1 << n) - 1
    for x in range(1, n + 1):
        bx = 1 << (x - 1)
        rest = full & ~bx
        for X in range(1 << n):
            if X & ~rest:
                continue
            # every superset Y of X avoiding x
            Y = X
            while True:
                assert linkage_value(pi, x, X) >= linkage_value(pi, x, Y)
                if Y == rest:
                    break
                Y = ((Y | ~rest) + 1) & rest | X


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 6))
def test_F_psi_dominates_F(seed, n):
    op = random_isotone_operator(seed, n)
    pi = random_monotone_linkage(seed, n)
    for X in range(1 << n):
        if evaluate_nonempty(op, X) and X != (1 << n) - 1:
            assert objective_F_psi(pi, op, X).value >= objective_F(pi, X).value


def evaluate_nonempty(op, X):
    from antimatroid import evaluate

    return evaluate(op, X) != 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 5))
def test_failure_linkage_two_valued_and_monotone(seed, n):
    op = random_nonisotone_operator(seed, n)
    w = check_isotone(op, "feasible_only")
    pi = failure_linkage(op, w, generate_family(op)[1])
    assert {v for _, _, v in materialize(pi).table} <= {1.0, 2.0}
    assert check_monotone(pi) is None


def test_nonisotone_generator_needs_three_elements():
    with pytest.raises(DomainError):
        random_nonisotone_operator(0, 2)


def test_full_operator_F_psi_equals_F(w136):
    op = full_operator(3)
    for X in range(7):
        assert objective_F_psi(w136, op, X) == objective_F(w136, X)
