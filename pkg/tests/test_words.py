import pytest
from hypothesis import given
from hypothesis import strategies as st

from plactic import InvalidWordError, Word
from plactic.words import (
    concat,
    decreasing,
    format_word,
    is_packed,
    multiplicity,
    parse_word,
    power,
    restrict,
    standardize,
)

words = st.lists(st.integers(1, 6), max_size=10).map(Word)


def test_concat():
    assert concat(Word.parse("12"), Word.parse("21")) == Word.parse("1221")
    assert concat((), (3, 1)) == (3, 1)
    assert concat((1,), (1,)) == (1, 1)


def test_power():
    assert power((2, 1), 2) == (2, 1, 2, 1)
    assert power((1, 2), 0) == ()
    assert format_word(power((1, 2, 3, 4), 3)) == "123412341234"
    with pytest.raises(ValueError):
        power((1,), -1)


def test_multiplicity():
    assert multiplicity(parse_word("1221"), 2) == 2
    assert multiplicity((), 1) == 0
    assert multiplicity(parse_word("3122413321"), 1) == 3


def test_restrict():
    assert format_word(restrict(parse_word("3122413321"), 2)) == "122121"
    w = parse_word("3122413321")
    assert restrict(w, max(w)) == w
    assert restrict(parse_word("333"), 2) == ()


def test_standardize():
    assert format_word(standardize(parse_word("3152"))) == "3142"
    assert format_word(standardize(parse_word("111"))) == "111"
    assert format_word(standardize(parse_word("3122413321"))) == "3122413321"
    with pytest.raises(ValueError):
        standardize(())


def test_is_packed():
    assert is_packed((1, 2, 3, 4), 4)
    assert not is_packed((1, 2, 2, 4), 4)
    assert is_packed(parse_word("122121"), 2)
    assert not is_packed((1, 2), 3)


def test_parse_and_format():
    assert parse_word("10,3,11") == (10, 3, 11)
    assert format_word((10, 3, 11)) == "10,3,11"
    assert parse_word("3122413321") == (3, 1, 2, 2, 4, 1, 3, 3, 2, 1)
    assert parse_word("") == ()
    assert format_word(()) == ""
    for bad in ("102", "1,0", "1a", "-1"):
        with pytest.raises(InvalidWordError):
            parse_word(bad)
    with pytest.raises(InvalidWordError):
        Word((0,))


def test_decreasing():
    assert decreasing(3) == (3, 2, 1)
    assert decreasing(0) == ()


@given(words)
def test_format_round_trip(w):
    assert parse_word(format_word(w)) == w


@given(words, st.integers(1, 6), st.integers(1, 6))
def test_restrict_composes(w, m, mm):
    assert restrict(restrict(w, m), mm) == restrict(w, min(m, mm))


@given(words.filter(len))
def test_standardize_idempotent_and_order_preserving(w):
    s = standardize(w)
    assert standardize(s) == s
    assert is_packed(s, len(set(w)))
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            assert (w[i] <= w[j]) == (s[i] <= s[j])


@given(words, st.integers(0, 4), st.integers(1, 6))
def test_power_multiplicity(u, k, a):
    assert multiplicity(power(u, k), a) == k * multiplicity(u, a)
