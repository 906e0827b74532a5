import itertools
from collections import Counter
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import naive_p, words_upto
from plactic import InvalidTableauError, ResourceGuardError
from plactic.tableaux import (
    Partition,
    SkewConfiguration,
    Tableau,
    enumerate_ssyt,
    greene_invariant,
    hook_count,
    insert,
    jdt_rectify,
    lwi_bruteforce,
    lwi_ending_at,
    p_tableau,
    partitions,
    row,
    rsk,
    singleton_count,
    ssyt_count,
)
from plactic.words import decreasing, parse_word

words = st.lists(st.integers(1, 5), max_size=12)


def T(*rows):
    return Tableau(tuple(tuple(r) for r in rows))


def test_tableau_validation():
    T([1, 1, 3], [2])
    for bad in ([[2, 1]], [[1, 2], [1]], [[1], [2, 3]], [[0]], [[1], []]):
        with pytest.raises(InvalidTableauError):
            T(*bad)


def test_tableau_json_round_trip():
    t = T([1, 1, 3], [2])
    assert t.to_json() == {"rows": [[1, 1, 3], [2]]}
    assert Tableau.from_json(t.to_json()) == t
    assert t.shape == (3, 1)
    assert t.columns() == [(1, 2), (1,), (3,)]


def test_insert_examples():
    t, trace = insert(T([1, 2]), 1)
    assert t == T([1, 1], [2])
    assert trace.path == ((1, 2, 2), (2, 1, None))
    assert insert(Tableau(), 4)[0] == T([4])
    assert insert(T([1, 1], [2]), 3)[0] == T([1, 1, 3], [2])


def test_p_tableau_examples():
    assert p_tableau(parse_word("321")) == T([1], [2], [3])
    assert p_tableau(parse_word("2112")) == T([1, 1, 2], [2])
    assert p_tableau(()) == Tableau()


def test_rsk_examples():
    assert rsk(parse_word("1213")) == (T([1, 1, 3], [2]), T([1, 2, 4], [3]))
    assert rsk((1,)) == (T([1]), T([1]))
    assert rsk((2, 1)) == (T([1], [2]), T([1], [2]))


def test_jdt_examples():
    cfg = SkewConfiguration.southwest(p_tableau(parse_word("321")), p_tableau(parse_word("12")))
    assert jdt_rectify(cfg) == p_tableau(parse_word("32112"))
    t = T([1, 2, 2], [3])
    assert jdt_rectify(SkewConfiguration((0, 0), t.rows)) == t
    cfg = SkewConfiguration.southwest(p_tableau((1, 2)), p_tableau((2, 1)))
    assert jdt_rectify(cfg) == T([1, 1, 2], [2]) == Tableau(naive_p((1, 2, 2, 1)))


def test_skew_validation():
    with pytest.raises(InvalidTableauError):
        SkewConfiguration((0, 1), ((1,), (2,)))
    with pytest.raises(InvalidTableauError):
        SkewConfiguration((1, 0), ((2,), (1, 2)))


def test_row_and_singletons():
    t = T([1, 1, 3], [2])
    assert row(t, 2) == (2,)
    assert row(t, 5) == ()
    assert row(p_tableau(parse_word("2112")), 1) == (1, 1, 2)
    assert singleton_count(p_tableau((1, 2)), 1) == 1
    assert singleton_count(p_tableau((1, 2)), 2) == 1
    assert singleton_count(p_tableau((2, 1)), 1) == 0
    assert singleton_count(p_tableau((1, 1)), 1) == 2


def test_greene_and_lwi_examples():
    assert greene_invariant(parse_word("3142"), 2) == 4
    assert greene_invariant((), 3) == 0
    assert greene_invariant((1, 1, 1, 1), 1) == 4
    assert lwi_bruteforce(parse_word("3142"), 1) == 2
    assert lwi_bruteforce(parse_word("321"), 3) == 3
    assert lwi_bruteforce(parse_word("2121"), 2) == 4
    assert lwi_ending_at(parse_word("121"), 1) == 2
    assert lwi_ending_at(parse_word("22"), 1) == 0
    assert lwi_ending_at(parse_word("112"), 2) == 3
    with pytest.raises(ResourceGuardError):
        lwi_bruteforce((1,) * 11, 1)


def test_hook_count():
    assert hook_count((5,)) == 1
    assert hook_count((2, 1)) == 2
    for n in range(1, 9):
        for k in range(n):
            assert hook_count((n - k,) + (1,) * k) == comb(n - 1, k)


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert Partition((3, 2, 2)).conjugate() == (3, 3, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_enumerate_ssyt_examples():
    assert set(enumerate_ssyt(1, 2)) == {T([1]), T([2])}
    assert list(enumerate_ssyt(2, 1)) == [T([1, 1])]
    assert set(enumerate_ssyt(2, 2)) == {T([1, 1]), T([1, 2]), T([2, 2]), T([1], [2])}


def test_enumerate_ssyt_matches_insertion_images():
    for n in range(6):
        for m in range(1, 4):
            listed = list(enumerate_ssyt(n, m))
            assert len(listed) == len(set(listed)) == ssyt_count(n, m)
            images = {Tableau(naive_p(w)) for w in itertools.product(range(1, m + 1), repeat=n)}
            assert set(listed) == images


def test_enumerate_ssyt_prefix_partition():
    full = list(enumerate_ssyt(5, 3))
    parts = []
    for t in range(0, 6):
        chunk = [x for x in enumerate_ssyt(5, 3, (1,) * t) if x.rows[0][:t + 1].count(1) == t]
        parts.extend(chunk)
    assert sorted(parts) == sorted(full)


def test_rsk_bijectivity():
    for n in range(7):
        for m in range(1, 4):
            pairs = Counter()
            seen = set()
            for w in itertools.product(range(1, m + 1), repeat=n):
                p, q = rsk(w)
                assert (p, q) not in seen
                seen.add((p, q))
                pairs[p] += 1
                assert q.shape == p.shape
                assert sorted(x for r in q.rows for x in r) == list(range(1, n + 1))
            for p, c in pairs.items():
                assert c == hook_count(p.shape)


def test_decreasing_prefix_prepends_row_labels():
    for m in range(1, 5):
        d = decreasing(m)
        for v in words_upto(6, m):
            pv, pdv = p_tableau(v), p_tableau(d + v)
            for i in range(1, m + 1):
                assert row(pdv, i) == (i,) + row(pv, i)


def test_jdt_insertion_agreement():
    for n in range(9):
        for w in itertools.product(range(1, 4), repeat=n):
            for cut in range(n + 1):
                u, v = w[:cut], w[cut:]
                cfg = SkewConfiguration.southwest(p_tableau(u), p_tableau(v))
                assert jdt_rectify(cfg).rows == naive_p(w)


@given(words)
def test_p_tableau_matches_naive_and_preserves_content(w):
    t = p_tableau(w)
    assert t.rows == naive_p(w)
    assert t.entries() == sorted(w)
    assert Tableau(t.rows) == t


@given(words)
def test_semistandard_after_each_insert(w):
    t = Tableau()
    for a in w:
        t, trace = insert(t, a)
        Tableau(t.rows)
        rows_on_path = [r for r, _, _ in trace.path]
        assert rows_on_path == sorted(set(rows_on_path))
        assert trace.path[-1][2] is None


@given(st.lists(st.integers(1, 4), max_size=8), st.integers(1, 4))
def test_greene_matches_bruteforce(w, i):
    assert greene_invariant(w, i) == lwi_bruteforce(w, i)


@given(words)
def test_reading_word_reinserts(w):
    t = p_tableau(w)
    assert p_tableau(t.reading_word()) == t
