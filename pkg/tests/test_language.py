import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antimatroid import DomainError, NotAntimatroidError, SetFamily
from antimatroid.correspondence import bridge_f_from_pi
from antimatroid.language import (
    NestingFunction,
    SimpleLanguage,
    family_from_language,
    fmt_word,
    greedy_minimax,
    in_language,
    is_antimatroid_language,
    language_axiom_failure,
    language_from_family,
    nesting_W,
    prefix_values,
    words_of,
)
from antimatroid.oracle import brute_minimax_W, random_antimatroid
from antimatroid.errors import EmptyContinuationError

from conftest import P3_SETS, s

P3_WORDS = [(), (1,), (1, 2), (1, 3), (1, 2, 3), (1, 3, 2)]


def test_language_examples():
    assert is_antimatroid_language(SimpleLanguage.of(3, P3_WORDS))
    assert language_axiom_failure(SimpleLanguage.of(2, [(), (1, 2)])).startswith("prefix")
    assert language_axiom_failure(SimpleLanguage.of(2, [(), (1,), (2,)])) == "exchange: alpha=1 beta=2"


def test_language_validation():
    with pytest.raises(DomainError):
        SimpleLanguage.of(2, [(1,)])
    with pytest.raises(DomainError):
        SimpleLanguage.of(2, [(), (1, 1)])
    with pytest.raises(DomainError):
        SimpleLanguage.of(2, [(), (3,)])


def test_family_language_round_trip(p3_family):
    lang = language_from_family(p3_family)
    assert sorted(lang.words) == sorted(P3_WORDS)
    assert family_from_language(lang) == p3_family
    assert family_from_language(SimpleLanguage.of(3, P3_WORDS)).as_lists() == P3_SETS


def test_family_from_bad_language():
    with pytest.raises(NotAntimatroidError):
        family_from_language(SimpleLanguage.of(2, [(), (1,), (2,)]))
    with pytest.raises(NotAntimatroidError):
        language_from_family(SetFamily.of(2, [[], [1], [2]]))


def test_in_language(p3_family):
    assert in_language(p3_family, (1, 3, 2))
    assert in_language(p3_family, ())
    assert not in_language(p3_family, (2,))
    assert not in_language(p3_family, (1, 1))


def test_words_of_respects_length(p3_family):
    assert list(words_of(p3_family, max_length=1)) == [(), (1,)]


def test_nesting_W(w136):
    f = bridge_f_from_pi(w136)
    assert nesting_W(f, (1, 3)) == 2
    assert nesting_W(f, (1, 3, 2)) == 4
    assert prefix_values(f, (1, 3, 2)) == [1, 2, 4]
    with pytest.raises(DomainError):
        nesting_W(f, ())
    with pytest.raises(DomainError):
        f(2, s(1))


def test_nesting_function_wrapper():
    f = NestingFunction(lambda x, A: x)
    assert f(2, s(2)) == 2
    with pytest.raises(DomainError):
        f(1, s(2))


def test_greedy_minimax(p3_op, w136):
    f = bridge_f_from_pi(w136)
    assert greedy_minimax(p3_op, f, 2) == (1, 3)
    assert greedy_minimax(p3_op, f, 3) == (1, 3, 2)
    assert greedy_minimax(p3_op, f, 0) == ()
    with pytest.raises(EmptyContinuationError):
        greedy_minimax(p3_op, f, 4)


def test_fmt_word():
    assert fmt_word(()) == "-"
    assert fmt_word((1, 3, 2)) == "1 3 2"


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 5))
def test_round_trips_random(seed, n):
    fam = random_antimatroid(seed, n)
    lang = language_from_family(fam)
    assert is_antimatroid_language(lang)
    assert family_from_language(lang) == fam
    assert language_from_family(family_from_language(lang)) == lang
    assert all(in_language(fam, w) for w in lang.words)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 5))
def test_greedy_is_minimax(seed, n):
    from antimatroid.oracle import random_isotone_operator, random_monotone_linkage
    from antimatroid import generate_family, rank

    op = random_isotone_operator(seed, n)
    f = bridge_f_from_pi(random_monotone_linkage(seed, n))
    r = rank(generate_family(op)[0])
    for k in range(1, r + 1):
        best, _ = brute_minimax_W(op, f, k)
        assert nesting_W(f, greedy_minimax(op, f, k)) == best
