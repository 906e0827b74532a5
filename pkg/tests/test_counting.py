import itertools
from math import comb

import pytest

from conftest import naive_commutes
from plactic import InconsistentValuesError
from plactic.counting import (
    CoeffVector,
    LabeledPoset,
    b_count,
    b_witness,
    c_via_schur_formula,
    coefficient_report,
    count_c,
    count_c_refined,
    descent_count,
    expand_in_binomial_basis,
    g_poly,
    gbinom,
    linear_extensions,
    log_concavity,
    poset_from_partition,
)
from plactic.plactic import in_centralizer
from plactic.words import is_packed, parse_word


def brute_c(n, m, u=(1,)):
    return sum(1 for w in itertools.product(range(1, m + 1), repeat=n) if naive_commutes(u, w))


def test_count_c_examples():
    assert count_c(2, 2) == 2
    for n in range(6):
        assert count_c(n, 1) == 1
    assert count_c(4, 2) == 6
    assert count_c(0, 0) == 1 and count_c(3, 0) == 0


def test_count_c_matches_bruteforce():
    for u in ((1,), (2, 1), (1, 3, 2)):
        for n in range(6):
            for m in range(1, 5):
                assert count_c(n, m, u) == brute_c(n, m, u)


def test_refined_examples():
    assert count_c_refined(2, 2, 1) == 1
    assert count_c_refined(2, 2, 2) == 1
    assert count_c_refined(3, 3, 2) == b_count(3, 2) * comb(2, 1)
    with pytest.raises(ValueError):
        count_c_refined(2, 2, 3)


def test_refinement_and_product_identities():
    for n in range(1, 7):
        for m in range(1, 7):
            ks = range(1, min(m, n) + 1)
            refined = [count_c_refined(n, m, k) for k in ks]
            assert sum(refined) == count_c(n, m)
            for k, r in zip(ks, refined):
                assert r == b_count(n, k) * comb(m - 1, k - 1)


def test_b_count_examples_and_bruteforce():
    for n in range(1, 8):
        assert b_count(n, 1) == 1
        assert b_count(n, n) == 1
    assert b_count(4, 2) == comb(4, 2) - 1 == 5
    for n in range(1, 7):
        for k in range(1, n + 1):
            brute = sum(
                1 for w in itertools.product(range(1, k + 1), repeat=n)
                if is_packed(w, k) and naive_commutes((1,), w)
            )
            assert b_count(n, k) == brute


def test_b_witness():
    assert b_witness(5, 3) == parse_word("32111")
    for n in range(1, 9):
        for k in range(1, n + 1):
            w = b_witness(n, k)
            assert len(w) == n and is_packed(w, k) and in_centralizer((1,), w)


def test_gbinom():
    assert gbinom(5, 2) == 10
    assert gbinom(1, 2) == 0
    assert gbinom(-1, 2) == 1
    assert gbinom(-1, 3) == -1
    assert gbinom(4, -1) == 0


def test_expand_examples():
    assert expand_in_binomial_basis([0, 1], 0).coeffs == (0, 1)
    assert expand_in_binomial_basis([7, 7, 7, 7], 0).coeffs == (7, 0, 0, 0)
    values = [count_c(3, m) for m in range(3)]
    assert values == [0, 1, 3]
    assert expand_in_binomial_basis(values, 0).coeffs == (0, 1, 1)
    with pytest.raises(InconsistentValuesError):
        expand_in_binomial_basis([1, 2, 4, 8], 0, degree=2)
    with pytest.raises(ValueError):
        expand_in_binomial_basis([1], 2)


def test_coeff_vector_evaluates():
    v = CoeffVector(1, (1, 5, 5, 1))
    assert [v.evaluate(m) for m in range(1, 5)] == [count_c(4, m) for m in range(1, 5)]
    assert v.degree == 3


def test_basis_consistency():
    for n in range(2, 8):
        values = [count_c(n, m) for m in range(0, n + 4)]
        a = expand_in_binomial_basis(values, 0, degree=n - 1)
        b = expand_in_binomial_basis(values[1:], 1, degree=n - 1)
        for m, v in enumerate(values):
            assert a.evaluate(m) == v
            if m >= 1:
                assert b.evaluate(m) == v


def test_length_one_is_not_polynomial_through_zero():
    # c_{1,m}(1) is 0 at m = 0 and 1 for every m >= 1
    values = [count_c(1, m) for m in range(0, 4)]
    assert values == [0, 1, 1, 1]
    with pytest.raises(InconsistentValuesError):
        expand_in_binomial_basis(values, 0, degree=0)
    assert expand_in_binomial_basis(values[1:], 1, degree=0).coeffs == (1,)


def test_poset_examples():
    chain = poset_from_partition((1, 1, 1, 1))
    assert chain.is_partial_order()
    assert chain.covers() == {(4, 3), (3, 2), (2, 1)}
    assert list(linear_extensions(chain)) == [parse_word("4321")]
    row3 = poset_from_partition((3,))
    assert row3.covers() == {(1, 2), (2, 3)}
    assert list(linear_extensions(poset_from_partition((1,)))) == [(1,)]
    antichain = LabeledPoset(2, frozenset({(1, 1), (2, 2)}))
    assert len(list(linear_extensions(antichain))) == 2


def test_poset_322_cover_relations():
    p = poset_from_partition((3, 2, 2))
    assert p.is_partial_order()
    assert p.covers() == {(1, 2), (2, 3), (4, 2), (4, 5), (5, 3), (6, 4), (6, 7), (7, 5)}


def test_descent_count():
    assert descent_count(parse_word("4321")) == 3
    assert descent_count(parse_word("1234")) == 0
    assert descent_count(parse_word("132")) == 1
    with pytest.raises(ValueError):
        descent_count((1, 1))


def test_g_poly_examples():
    for m in range(2, 8):
        assert g_poly((5,), m) == 1
        assert g_poly((4, 1), m) == m - 1
        for nn in range(0, 5):
            assert g_poly((5,) + (1,) * nn, m) == comb(m - 1, nn)
    with pytest.raises(ValueError):
        g_poly((2,), 1)


def test_dual_pipeline():
    assert c_via_schur_formula(2, 2) == 2
    for m in range(2, 7):
        assert c_via_schur_formula(1, m) == brute_c(1, m)
    for n in range(1, 7):
        for m in range(2, 7):
            assert c_via_schur_formula(n, m) == count_c(n, m)


def test_log_concavity():
    assert log_concavity([1, 5, 5, 1]) == []
    assert log_concavity([1, 1, 5, 1]) == [2]


def test_coefficient_report_examples():
    r2 = coefficient_report(2)
    assert r2.a.coeffs == (0, 1) and r2.b.coeffs == (1, 1) and r2.passed
    r4 = coefficient_report(4)
    assert r4.a.coeffs[2] == comb(4, 2) - 2 == 4
    assert r4.b.coeffs[1] == 5
    assert r4.passed
    assert r4.b_direct == [b_count(4, k) for k in range(1, 5)]
    with pytest.raises(ValueError):
        coefficient_report(1)


def test_b_expansion_below_n():
    for n in range(2, 7):
        assert coefficient_report(n).b_expansion_mismatch == []


def test_report_json_shape():
    data = coefficient_report(3).to_json()
    assert data["a"] == [0, 1, 1]
    assert data["passed"] is True
    assert all(isinstance(v, bool) for v in data["clauses"].values())
