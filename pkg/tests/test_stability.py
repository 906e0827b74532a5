import itertools
import json

import pytest

from conftest import naive_commutes, words_upto
from plactic import AlphabetError, ResourceGuardError
from plactic.characterize import staircase_membership
from plactic.stability import (
    FingerprintCache,
    SCHEMA,
    fingerprint,
    m_stability_check_permutation,
    packed_conjecture_sweep,
    packed_words,
    stability_probe,
    strong_stability_check_two_letter,
    truncated_centralizer,
)
from plactic.tableaux import p_tableau
from plactic.words import decreasing, parse_word, power

W = parse_word


def brute_truncation(u, L, M):
    return {tuple(w) for w in words_upto(L, M) if naive_commutes(u, w)}


def test_truncated_centralizer_examples():
    tc = truncated_centralizer((1,), 2, 2)
    assert set(tc.words()) == {(), (1,), (1, 1), (2, 1)}
    assert set(truncated_centralizer(W("312"), 0, 4).words()) == {()}
    tc = truncated_centralizer(W("21"), 3, 3)
    assert set(tc.words()) == brute_truncation((2, 1), 3, 3)
    assert all(staircase_membership(w, 2) for w in tc.words())


@pytest.mark.parametrize("u", ["1", "21", "122", "1234", "231", "2131"])
def test_engines_agree_with_bruteforce(u):
    u = W(u)
    for L, M in ((4, 3), (5, 2), (3, 4)):
        a = truncated_centralizer(u, L, M)
        b = truncated_centralizer(u, L, M, engine="word")
        assert a == b
        assert a.fingerprint == b.fingerprint
        assert set(a.words()) == brute_truncation(u, L, M)
        assert a.word_count == len(a.words())


def test_fingerprint_order_independent():
    tc = truncated_centralizer(W("2131"), 5, 3)
    classes = list(tc.classes)
    assert fingerprint(classes) == fingerprint(list(reversed(classes)))
    assert fingerprint(classes) == fingerprint(sorted(classes, key=lambda t: t.reading_word()))
    assert fingerprint(classes[1:]) != fingerprint(classes)


def test_truncation_consistency():
    for u in (W("21"), W("1234"), W("2131")):
        big = truncated_centralizer(u, 5, 4)
        for L in range(6):
            assert big.restricted(L) == truncated_centralizer(u, L, 4)


def test_centralizer_contained_in_powers_at_truncation():
    for u in words_upto(3, 3, start=1):
        base = set(truncated_centralizer(u, 4, 3).classes)
        for k in (2, 3):
            assert base <= set(truncated_centralizer(power(u, k), 4, 3).classes)


def test_guard():
    with pytest.raises(ResourceGuardError):
        truncated_centralizer((1,), 10, 9, guard=10**4)
    with pytest.raises(ResourceGuardError):
        truncated_centralizer((1,), 6, 5, engine="word", guard=10**4)


def test_probe_1234_counterexample():
    rep = stability_probe(W("1234"), 5, 4, 4)
    assert rep.observed_index == 3
    step = [t for t in rep.transitions if t["from_k"] == 2][0]
    assert "4123" in step["gained"]
    assert naive_commutes(power((1, 2, 3, 4), 3), (4, 1, 2, 3))
    assert not naive_commutes(power((1, 2, 3, 4), 2), (4, 1, 2, 3))
    assert [p.stabilized for p in rep.powers] == [False, False, True, True, True]


def test_probe_single_letter_and_two_letter():
    for a in (1, 2, 3):
        assert stability_probe((a,), 4, 4).observed_index == 1
    assert stability_probe(W("122"), 4, 5, 4).observed_index == 1


def test_probe_default_alphabet():
    assert stability_probe(W("21"), 2, 3).M == 3


def test_report_serialization():
    rep = stability_probe(W("1234"), 4, 4, 4)
    data = rep.to_json()
    assert json.loads(json.dumps(data, sort_keys=True)) == data
    assert data["observed_stabilization_index"] == 3
    assert "evidence" in data["note"]
    rows = rep.csv_rows()
    assert [r["k"] for r in rows] == [1, 2, 3, 4]
    assert set(rows[0]) == {"u", "k", "fingerprint", "classes", "words", "stabilized"}


def test_strong_stability_two_letter_examples():
    assert strong_stability_check_two_letter(W("12"), 4, 5, 3)
    assert strong_stability_check_two_letter(W("1122"), 3, 5, 3)
    assert strong_stability_check_two_letter(W("21"), 4, 5, 3)
    with pytest.raises(AlphabetError):
        strong_stability_check_two_letter(W("123"), 2, 3, 3)


def test_m_stability_examples():
    assert m_stability_check_permutation(W("1234"), 6, 4, 4)
    assert m_stability_check_permutation(W("231"), 6, 5, 4)
    for m in (1, 2, 3):
        rep = stability_probe(decreasing(m), 4, 5, m + 2)
        assert rep.observed_index == 1
    with pytest.raises(AlphabetError):
        m_stability_check_permutation(W("122"), 4, 4, 3)


def test_packed_sweep_examples():
    rep = packed_conjecture_sweep(2, 4, 5, 5)
    assert rep.passed
    assert rep.words == sum(1 for n in range(2, 5) for w in itertools.product((1, 2), repeat=n) if len(set(w)) == 2)
    assert packed_conjecture_sweep(1, 4, 3, 4).passed
    rep = packed_conjecture_sweep(3, 5, 6, 6)
    assert rep.passed
    assert rep.classes == len({p_tableau(w) for w in packed_words(3, 5)})


def test_cache_round_trip(tmp_path):
    cache = FingerprintCache(tmp_path)
    first = stability_probe(W("1234"), 4, 4, 4, cache=cache)
    files = sorted(tmp_path.iterdir())
    assert len(files) == 4
    data = json.loads(files[0].read_text())
    assert data["schema"] == SCHEMA
    again = stability_probe(W("1234"), 4, 4, 4, cache=cache)
    assert again.to_json() == first.to_json()
    assert not list(tmp_path.glob("*.tmp"))


def test_cache_ignores_stale_schema(tmp_path):
    cache = FingerprintCache(tmp_path)
    cache.put((1, 2), 1, 3, 3, {"fingerprint": "00", "classes": 0, "words": 0})
    path = next(tmp_path.iterdir())
    data = json.loads(path.read_text())
    data["schema"] = "old"
    path.write_text(json.dumps(data))
    assert cache.get((1, 2), 1, 3, 3) is None


def test_workers_give_identical_reports():
    a = stability_probe(W("2131"), 4, 5, 4, workers=1).to_json()
    b = stability_probe(W("2131"), 4, 5, 4, workers=2).to_json()
    assert a == b
    assert packed_conjecture_sweep(3, 4, 5, 5, workers=1).to_json() == packed_conjecture_sweep(3, 4, 5, 5, workers=2).to_json()
