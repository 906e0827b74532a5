"""Pure-Python implementation of the hot kernels.

Mirrors the compiled ``_kernel`` module function for function; the backend
selector in :mod:`plactic._backend` picks whichever is available.

Tableaux here are plain ``list[list[int]]`` in row-major order.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Sequence

NAME = "python"


def _insert(rows: list[list[int]], x: int) -> None:
    for row in rows:
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return
        row[j], x = x, row[j]
    rows.append([x])


def p_rows(word: Sequence[int]) -> list[list[int]]:
    rows: list[list[int]] = []
    for x in word:
        _insert(rows, x)
    return rows


def commutes(u: Sequence[int], w: Sequence[int]) -> bool:
    """``P(uw) == P(wu)``."""
    left = p_rows(u)
    for x in w:
        _insert(left, x)
    right = p_rows(w)
    for x in u:
        _insert(right, x)
    return left == right


def _reading(rows: list[list[int]]) -> list[int]:
    out: list[int] = []
    for row in reversed(rows):
        out.extend(row)
    return out


def _is_member(rows: list[list[int]], u: Sequence[int], pu: list[list[int]]) -> bool:
    a = [r[:] for r in rows if r]
    for x in u:
        _insert(a, x)
    b = [r[:] for r in pu]
    for x in _reading([r for r in rows if r]):
        _insert(b, x)
    return a == b


def scan_slice(u, n, m, packed=False, ones=-1, collect=False):
    """Scan every SSYT with ``n`` cells and entries in ``[m]`` for membership in C(u).

    Tableaux are built letter by letter, each letter adding a horizontal
    strip.  ``packed`` keeps only tableaux using every letter of ``[m]``;
    ``ones >= 0`` fixes the number of 1s (the first-row prefix ``1^ones``),
    which is how work is partitioned.

    Returns ``(counts, members)`` where ``counts`` maps
    ``(shape, distinct_letters)`` to the number of member tableaux and
    ``members`` is the list of member tableaux (row tuples) when ``collect``.
    """
    u = list(u)
    pu = p_rows(u)
    counts: dict[tuple[tuple[int, ...], int], int] = {}
    members: list | None = [] if collect else None
    rows: list[list[int]] = [[] for _ in range(m + 1)]

    def leaf(distinct: int) -> None:
        if _is_member(rows, u, pu):
            shape = tuple(len(r) for r in rows if r)
            key = (shape, distinct)
            counts[key] = counts.get(key, 0) + 1
            if members is not None:
                members.append(tuple(tuple(r) for r in rows if r))

    def letter(i: int, remaining: int, distinct: int) -> None:
        if i > m:
            if remaining == 0:
                leaf(distinct)
            return
        if remaining == 0 and not packed:
            leaf(distinct)
            return
        if packed and m - i + 1 > remaining:
            return
        mu = [len(r) for r in rows]
        nrows = sum(1 for x in mu if x)

        def strip(r: int, added: int) -> None:
            if r > nrows:
                if packed and added == 0:
                    return
                if i == 1 and ones >= 0 and added != ones:
                    return
                if i == m and added != remaining:
                    return
                letter(i + 1, remaining - added, distinct + (added > 0))
                return
            cap = remaining - added
            if r > 0:
                cap = min(cap, mu[r - 1] - mu[r])
            if i == 1 and ones >= 0:
                cap = min(cap, ones - added)
            row = rows[r]
            strip(r + 1, added)
            for t in range(1, cap + 1):
                row.append(i)
                strip(r + 1, added + t)
            del row[mu[r]:]

        strip(0, 0)

    if n == 0:
        if not packed:
            leaf(0)
        return counts, members
    letter(1, n, 0)
    return counts, members


def scan_words(u, n, m, first=0, collect=False):
    """Scan ``[m]^n`` (optionally only words starting with ``first``) for C(u) members.

    Returns ``(count, members)``; members are tuples in lexicographic order.
    """
    u = list(u)
    members: list | None = [] if collect else None
    count = 0
    word: list[int] = []
    # stacks of P(prefix) and P(u . prefix)
    pw_stack = [[]]
    puw_stack = [p_rows(u)]

    def dfs(depth: int) -> None:
        nonlocal count
        if depth == n:
            right = [r[:] for r in pw_stack[-1]]
            for x in u:
                _insert(right, x)
            if right == puw_stack[-1]:
                count += 1
                if members is not None:
                    members.append(tuple(word))
            return
        letters = range(1, m + 1) if depth > 0 or first == 0 else (first,)
        for a in letters:
            pw = [r[:] for r in pw_stack[-1]]
            _insert(pw, a)
            puw = [r[:] for r in puw_stack[-1]]
            _insert(puw, a)
            pw_stack.append(pw)
            puw_stack.append(puw)
            word.append(a)
            dfs(depth + 1)
            word.pop()
            pw_stack.pop()
            puw_stack.pop()

    dfs(0)
    return count, members
