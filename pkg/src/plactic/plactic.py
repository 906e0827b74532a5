"""Knuth equivalence, centralizer membership and finite centralizer slices.

A slice is ``{w in C(u) : |w| = n, max w <= m}``.  Membership of ``w``
depends only on ``P(w)``, so the slice engine walks SSYT with ``n`` cells
and entries in ``[m]``, tests one reading word per tableau and weights each
member class by the number of words inserting to it (``hook_count`` of the
shape).  ``centralizer_words`` is the word-level oracle.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from ._backend import kernel
from ._parallel import DEFAULT_GUARD, run_tasks
from .errors import ResourceGuardError
from .tableaux import Tableau, hook_count, p_tableau, ssyt_count
from .words import Word, format_word

__all__ = [
    "knuth_equivalent",
    "knuth_neighbors",
    "knuth_class",
    "in_centralizer",
    "CentralizerSlice",
    "centralizer_slice",
    "centralizer_words",
    "slice_counts",
    "packed_ssyt_count",
]

KNUTH_CLASS_LIMIT = 9


def knuth_equivalent(v: Sequence[int], w: Sequence[int]) -> bool:
    return kernel.p_rows(v) == kernel.p_rows(w)


def knuth_neighbors(w: Sequence[int]) -> set[Word]:
    """Words one elementary Knuth transposition away from ``w``.

    The moves act on three consecutive letters:
    ``x z y <-> z x y`` for ``x <= y < z`` and ``y x z <-> y z x`` for ``x < y <= z``.
    """
    w = tuple(w)
    out: set[Word] = set()
    for p in range(len(w) - 2):
        a, b, c = w[p : p + 3]
        swapped_front = w[:p] + (b, a, c) + w[p + 3 :]
        swapped_back = w[:p] + (a, c, b) + w[p + 3 :]
        # x z y <-> z x y with x <= y < z: swap the first two letters
        if a <= c < b or b <= c < a:
            out.add(Word(swapped_front))
        # y x z <-> y z x with x < y <= z: swap the last two letters
        if b < a <= c or c < a <= b:
            out.add(Word(swapped_back))
    return out


def knuth_class(w: Sequence[int], limit: int = KNUTH_CLASS_LIMIT) -> set[Word]:
    """Closure of ``w`` under Knuth moves."""
    if len(w) > limit:
        raise ResourceGuardError("knuth_class word length", len(w), limit)
    start = Word(w)
    seen = {start}
    queue = deque([start])
    while queue:
        for v in knuth_neighbors(queue.popleft()):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def in_centralizer(u: Sequence[int], w: Sequence[int]) -> bool:
    """``w`` in C(u), i.e. ``P(uw) == P(wu)``."""
    return kernel.commutes(u, w)


@dataclass(frozen=True)
class CentralizerSlice:
    """Member classes of ``{w in C(u) : |w| = n, max w <= m}``.

    ``classes`` pairs each member P-tableau with the number of words
    inserting to it; ``total`` is c_{n,m}(u).
    """

    base_word: Word
    n: int
    m: int
    classes: tuple[tuple[Tableau, int], ...]

    @property
    def total(self) -> int:
        return sum(weight for _, weight in self.classes)

    def to_json(self) -> dict:
        return {
            "base_word": format_word(self.base_word),
            "n": self.n,
            "m": self.m,
            "classes": [{"tableau": t.to_json()["rows"], "weight": wt} for t, wt in self.classes],
            "total": self.total,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CentralizerSlice":
        return cls(
            Word.parse(data["base_word"]),
            data["n"],
            data["m"],
            tuple((Tableau(tuple(map(tuple, c["tableau"]))), c["weight"]) for c in data["classes"]),
        )


def packed_ssyt_count(n: int, m: int) -> int:
    """Number of SSYT with ``n`` cells whose entries are exactly ``[m]``."""
    from math import comb

    return sum((-1) ** (m - j) * comb(m, j) * ssyt_count(n, j) for j in range(1, m + 1))


def _check_guard(n: int, m: int, packed: bool, guard: int) -> None:
    needed = packed_ssyt_count(n, m) if packed else ssyt_count(n, m)
    if needed > guard:
        raise ResourceGuardError(f"SSYT scan n={n} m={m}", needed, guard)


def _slice_task(args):
    u, n, m, packed, ones, collect = args
    return kernel.scan_slice(u, n, m, packed, ones, collect)


def _slice_partitions(u, n, m, packed, collect):
    # one task per number of 1s, i.e. per first-row prefix 1^t
    lo = 1 if packed else 0
    return [(tuple(u), n, m, packed, t, collect) for t in range(lo, n + 1)]


def slice_counts(
    u: Sequence[int],
    n: int,
    m: int,
    *,
    packed: bool = False,
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
) -> dict[tuple[tuple[int, ...], int], int]:
    """Member class counts keyed by ``(shape, number of distinct letters)``.

    With ``packed`` only tableaux whose content is exactly ``[m]`` are scanned.
    """
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    _check_guard(n, m, packed, guard)
    if n == 0:
        counts, _ = kernel.scan_slice(tuple(u), 0, m, packed, -1, False)
        return counts
    merged: dict = {}
    for counts, _ in run_tasks(_slice_task, _slice_partitions(u, n, m, packed, False), workers):
        for key, c in counts.items():
            merged[key] = merged.get(key, 0) + c
    return dict(sorted(merged.items()))


def slice_classes(
    u: Sequence[int],
    n: int,
    m: int,
    *,
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
) -> list[Tableau]:
    """Member P-tableaux of the slice, sorted."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    _check_guard(n, m, False, guard)
    if n == 0:
        _, members = kernel.scan_slice(tuple(u), 0, m, False, -1, True)
    else:
        members = []
        for _, part in run_tasks(_slice_task, _slice_partitions(u, n, m, False, True), workers):
            members.extend(part)
    return sorted(Tableau._trusted(rows) for rows in members)


def centralizer_slice(
    u: Sequence[int],
    n: int,
    m: int,
    *,
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
) -> CentralizerSlice:
    """The slice as member classes weighted by ``hook_count`` of their shape."""
    classes = slice_classes(u, n, m, guard=guard, workers=workers)
    return CentralizerSlice(
        Word(u), n, m, tuple((t, hook_count(t.shape)) for t in classes)
    )


def _word_task(args):
    u, n, m, first, collect = args
    return kernel.scan_words(u, n, m, first, collect)


def centralizer_words(
    u: Sequence[int],
    n: int,
    m: int,
    *,
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
) -> Iterator[Word]:
    """Every ``w`` in ``[m]^n`` lying in C(u), in lexicographic order."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    if m**n > guard:
        raise ResourceGuardError(f"word scan n={n} m={m}", m**n, guard)
    if n == 0:
        yield Word()
        return
    tasks = [(tuple(u), n, m, a, True) for a in range(1, m + 1)]
    for _, members in run_tasks(_word_task, tasks, workers):
        for w in members:
            yield Word(w)


def count_words(u: Sequence[int], n: int, m: int, *, guard: int = DEFAULT_GUARD, workers: int = 1) -> int:
    """Size of the slice by direct word enumeration."""
    if m**n > guard:
        raise ResourceGuardError(f"word scan n={n} m={m}", m**n, guard)
    if n == 0:
        return 1
    tasks = [(tuple(u), n, m, a, False) for a in range(1, m + 1)]
    return sum(c for c, _ in run_tasks(_word_task, tasks, workers))


def all_words(n: int, m: int) -> Iterator[Word]:
    """All words of length ``n`` over ``[m]`` in lexicographic order."""
    for w in itertools.product(range(1, m + 1), repeat=n):
        yield Word(w)


def class_words(t: Tableau, limit: int = 12) -> set[Word]:
    """All words whose insertion tableau is ``t``."""
    if t.size == 0:
        return {Word()}
    return knuth_class(t.reading_word(), limit=limit)


def plactic_rep(w: Sequence[int]) -> Word:
    """Canonical representative of the class of ``w``: the reading word of ``P(w)``."""
    return p_tableau(w).reading_word()
