"""Closed-form membership tests and structural row lemmas.

Every closed form here has a brute-force counterpart (``in_centralizer`` or
an explicit tableau computation); the test suite checks them against each
other exhaustively on bounded word spaces.
"""

from __future__ import annotations

from typing import Sequence

from .errors import AlphabetError, SingleLetterCase
from .plactic import in_centralizer
from .tableaux import greene_invariant, lwi_ending_at, p_tableau, row, singleton_count
from .words import Word, concat, decreasing, multiplicity, power

__all__ = [
    "c_one_membership",
    "staircase_membership",
    "descent_run",
    "row_bound_check",
    "r2_product_length",
    "two_letter_membership",
    "c1c2_power_invariance",
    "row_shift_check",
    "lwi_growth_check",
    "is_permutation",
]


def _rows_bounded(t, k: int, bound: int) -> bool:
    return all(x <= bound for i in range(1, k + 1) for x in row(t, i))


def c_one_membership(w: Sequence[int]) -> tuple[bool, bool, bool]:
    """Three equivalent descriptions of ``w in C(1)``.

    Returns ``(direct, first_row_all_ones, lwi_equals_lwi_ending_at_1)``.
    """
    t = p_tableau(w)
    direct = in_centralizer((1,), w)
    first_row = all(x == 1 for x in row(t, 1))
    lwi = greene_invariant(w, 1) == lwi_ending_at(w, 1)
    return direct, first_row, lwi


def staircase_membership(w: Sequence[int], m: int) -> bool:
    """Every entry in rows ``1..m`` of ``P(w)`` is at most ``m``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return _rows_bounded(p_tableau(w), m, m)


def descent_run(u: Sequence[int]) -> int:
    """Largest ``k`` such that ``m, m-1, ..., m-k+1`` is a subsequence of ``u`` (``m = max u``)."""
    if not u:
        return 0
    target = max(u)
    k = 0
    for x in u:
        if x == target - k:
            k += 1
            if target - k < 1:
                break
    return k


def row_bound_check(w: Sequence[int], u: Sequence[int]) -> bool:
    """Rows ``1..k`` of ``P(w)`` are bounded by ``max u``, ``k = descent_run(u)``.

    Necessary for ``w in C(u)``.
    """
    if not u:
        return True
    return _rows_bounded(p_tableau(w), descent_run(u), max(u))


def _require_binary(*words: Sequence[int]) -> None:
    for v in words:
        if any(x > 2 for x in v):
            raise AlphabetError(f"word {Word(v)} has letters greater than 2")


def r2_product_length(w: Sequence[int], u: Sequence[int]) -> int:
    """Predicted length of row 2 of ``P(wu)`` for ``u, w`` over ``{1, 2}``.

    ``#R2(w) + #R2(u) + min(c1(u), c2(w))`` where ``c_a`` counts singleton
    ``a``-columns.
    """
    _require_binary(w, u)
    pw, pu = p_tableau(w), p_tableau(u)
    return len(row(pw, 2)) + len(row(pu, 2)) + min(singleton_count(pu, 1), singleton_count(pw, 2))


def two_letter_membership(u: Sequence[int], w: Sequence[int]) -> bool:
    """Decide ``w in C(u)`` for ``u`` over ``{1, 2}`` containing both letters.

    Conditions are evaluated on ``P(w)`` only: the singleton column counts
    ``c1(w), c2(w)`` against ``c1(u)`` or ``c2(u)`` (which case applies
    depends on the sign of ``m1(u) - m2(u)``), and rows 1 and 2 of ``P(w)``
    must have no entry above 2.

    Raises :class:`SingleLetterCase` when ``u`` lacks a 1 or a 2.
    """
    _require_binary(u)
    m1, m2 = multiplicity(u, 1), multiplicity(u, 2)
    if m1 == 0 or m2 == 0:
        raise SingleLetterCase(f"u={Word(u)} is a power of one letter; use the a^n characterization")
    pw, pu = p_tableau(w), p_tableau(u)
    if not _rows_bounded(pw, 2, 2):
        return False
    c1w, c2w = singleton_count(pw, 1), singleton_count(pw, 2)
    c1u, c2u = singleton_count(pu, 1), singleton_count(pu, 2)
    if m1 < m2:
        return (c1w == c1u <= c2w) or (c1w == c2w < c1u)
    if m1 == m2:
        return min(c1w, c2w) >= c1u or (c1w == c2w < c1u)
    return (c2w == c2u <= c1w) or (c1w == c2w < c2u)


def c1c2_power_invariance(u: Sequence[int], k_max: int) -> bool:
    """Singleton column counts of ``P(u^k)`` stay fixed for ``k <= k_max``.

    ``c1`` is checked when ``m1(u) <= m2(u)`` and ``c2`` when ``m2(u) <= m1(u)``.
    """
    _require_binary(u)
    m1, m2 = multiplicity(u, 1), multiplicity(u, 2)
    if m1 == 0 or m2 == 0:
        raise AlphabetError("u must contain both 1 and 2")
    pu = p_tableau(u)
    for k in range(1, k_max + 1):
        pk = p_tableau(power(u, k))
        if m1 <= m2 and singleton_count(pk, 1) != singleton_count(pu, 1):
            return False
        if m2 <= m1 and singleton_count(pk, 2) != singleton_count(pu, 2):
            return False
    return True


def is_permutation(u: Sequence[int]) -> bool:
    return sorted(u) == list(range(1, len(u) + 1))


def row_shift_check(u: Sequence[int], k: int) -> bool:
    """Rows of ``P(u^(k+1))`` are those of ``P(u^k)`` with ``i`` prepended to row ``i``.

    Also requires ``P(u^(k+1)) == P(delta_m u^k)``.  ``u`` must be a
    permutation of ``[m]`` and ``k >= m``.
    """
    if not u or not is_permutation(u):
        raise AlphabetError(f"{Word(u)} is not a permutation")
    m = len(u)
    if k < m:
        raise ValueError(f"row shift needs k >= m (k={k}, m={m})")
    pk, pk1 = p_tableau(power(u, k)), p_tableau(power(u, k + 1))
    rows_ok = all(row(pk1, i) == (i,) + row(pk, i) for i in range(1, m + 1))
    return rows_ok and pk1 == p_tableau(concat(decreasing(m), power(u, k)))


def lwi_growth_check(u: Sequence[int], i: int, k: int) -> bool:
    """``lwi_i(u^(k+1)) >= lwi_i(u^k) + i`` for a permutation ``u`` of ``[m]``, ``i <= m``."""
    if not u or not is_permutation(u):
        raise AlphabetError(f"{Word(u)} is not a permutation")
    if not 1 <= i <= len(u):
        raise ValueError(f"i must lie in [1, {len(u)}]")
    if k < 1:
        raise ValueError("k must be >= 1")
    return greene_invariant(power(u, k + 1), i) >= greene_invariant(power(u, k), i) + i
