"""Semistandard tableaux, row insertion, jeu de taquin and shape statistics."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from ._backend import kernel
from .errors import InvalidTableauError, ResourceGuardError
from .words import Word

__all__ = [
    "Partition",
    "partitions",
    "Tableau",
    "SkewConfiguration",
    "BumpTrace",
    "insert",
    "p_tableau",
    "rsk",
    "jdt_rectify",
    "row",
    "singleton_count",
    "greene_invariant",
    "lwi_bruteforce",
    "lwi_ending_at",
    "hook_count",
    "ssyt_count",
    "enumerate_ssyt",
]

LWI_LIMIT = 10


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Sequence[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def hooks(self) -> list[list[int]]:
        conj = self.conjugate()
        return [[(p - j - 1) + (conj[j] - i - 1) + 1 for j in range(p)] for i, p in enumerate(self)]


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order: (n), (n-1,1), ..."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            yield Partition((p,) + tuple(rest))


@dataclass(frozen=True, order=True)
class Tableau:
    """A semistandard Young tableau stored as ragged rows.

    Rows weakly increase, columns strictly increase, row lengths weakly
    decrease.  The empty tableau has no rows.
    """

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for i, r in enumerate(rows):
            if not r:
                raise InvalidTableauError("rows must be nonempty")
            if any(x < 1 for x in r):
                raise InvalidTableauError("entries must be positive")
            if any(a > b for a, b in zip(r, r[1:])):
                raise InvalidTableauError(f"row {i + 1} is not weakly increasing: {r}")
            if i > 0:
                above = rows[i - 1]
                if len(r) > len(above):
                    raise InvalidTableauError("row lengths must weakly decrease")
                if any(above[j] >= r[j] for j in range(len(r))):
                    raise InvalidTableauError(f"column strictness fails in row {i + 1}")

    @classmethod
    def _trusted(cls, rows) -> "Tableau":
        t = object.__new__(cls)
        object.__setattr__(t, "rows", tuple(tuple(r) for r in rows))
        return t

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __len__(self) -> int:
        return self.size

    def entries(self) -> list[int]:
        return sorted(x for r in self.rows for x in r)

    def columns(self) -> list[tuple[int, ...]]:
        if not self.rows:
            return []
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))]

    def reading_word(self) -> Word:
        """Row reading word, bottom row first; it inserts back to this tableau."""
        return Word(x for r in reversed(self.rows) for x in r)

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        return cls(tuple(tuple(r) for r in data["rows"]))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


@dataclass(frozen=True)
class BumpTrace:
    """Insertion path: ``(row, column, displaced letter or None)`` per step, 1-indexed."""

    path: tuple[tuple[int, int, int | None], ...] = field(default_factory=tuple)


def insert(t: Tableau, a: int) -> tuple[Tableau, BumpTrace]:
    """Row-insert ``a`` into ``t``.

    ``a`` displaces the leftmost entry strictly greater than it, and the
    displaced entry is inserted into the next row.
    """
    if a < 1:
        raise ValueError("letters must be positive")
    rows = [list(r) for r in t.rows]
    path = []
    x = a
    for i, r in enumerate(rows):
        j = bisect_right(r, x)
        if j == len(r):
            r.append(x)
            path.append((i + 1, j + 1, None))
            break
        path.append((i + 1, j + 1, r[j]))
        r[j], x = x, r[j]
    else:
        rows.append([x])
        path.append((len(rows), 1, None))
    return Tableau._trusted(rows), BumpTrace(tuple(path))


def p_tableau(w: Sequence[int]) -> Tableau:
    """Insertion tableau ``P(w)``."""
    return Tableau._trusted(kernel.p_rows(w))


def rsk(w: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Insertion tableau and standard recording tableau of ``w``."""
    p = Tableau()
    q: list[list[int]] = []
    for step, a in enumerate(w, start=1):
        p, trace = insert(p, a)
        r, _, _ = trace.path[-1]
        if r > len(q):
            q.append([])
        q[r - 1].append(step)
    return p, Tableau._trusted(q)


@dataclass(frozen=True)
class SkewConfiguration:
    """A skew tableau: row ``i`` has ``inner_offset[i]`` empty cells then ``rows[i]``."""

    inner_offset: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        off = tuple(int(x) for x in self.inner_offset)
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "inner_offset", off)
        object.__setattr__(self, "rows", rows)
        if len(off) != len(rows):
            raise InvalidTableauError("one offset per row required")
        outer = [o + len(r) for o, r in zip(off, rows)]
        for i in range(1, len(rows)):
            if off[i] > off[i - 1] or outer[i] > outer[i - 1]:
                raise InvalidTableauError("inner and outer shapes must be partitions")
        for i, r in enumerate(rows):
            if any(a > b for a, b in zip(r, r[1:])):
                raise InvalidTableauError(f"skew row {i + 1} is not weakly increasing")
            if i > 0:
                for j in range(off[i], outer[i]):
                    if off[i - 1] <= j < outer[i - 1]:
                        if rows[i - 1][j - off[i - 1]] >= r[j - off[i]]:
                            raise InvalidTableauError("skew column strictness fails")

    @classmethod
    def southwest(cls, lower: Tableau, upper: Tableau) -> "SkewConfiguration":
        """``lower`` placed southwest of ``upper``; rectifies to ``P(reading(lower) reading(upper))``."""
        width = len(lower.rows[0]) if lower.rows else 0
        off = (width,) * len(upper.rows) + (0,) * len(lower.rows)
        return cls(off, upper.rows + lower.rows)

    def reading_word(self) -> Word:
        return Word(x for r in reversed(self.rows) for x in r)


def jdt_rectify(cfg: SkewConfiguration) -> Tableau:
    """Rectify by jeu-de-taquin slides.

    Empty cells are filled row by row starting from the bottom row of the
    inner shape, right to left within each row.
    """
    grid: list[list[int | None]] = [[None] * o + list(r) for o, r in zip(cfg.inner_offset, cfg.rows)]
    for i0 in range(len(grid) - 1, -1, -1):
        for j0 in range(cfg.inner_offset[i0] - 1, -1, -1):
            i, j = i0, j0
            while True:
                right = grid[i][j + 1] if j + 1 < len(grid[i]) else None
                below = grid[i + 1][j] if i + 1 < len(grid) and j < len(grid[i + 1]) else None
                if right is None and below is None:
                    break
                if below is not None and (right is None or below <= right):
                    grid[i][j] = below
                    grid[i + 1][j] = None
                    i += 1
                else:
                    grid[i][j] = right
                    grid[i][j + 1] = None
                    j += 1
            # the hole ends at an outer corner
            grid[i].pop()
    return Tableau(tuple(tuple(r) for r in grid if r))


def row(t: Tableau, i: int) -> tuple[int, ...]:
    """Row ``i`` (1-indexed); empty past the last row."""
    if i < 1:
        raise ValueError("row index must be >= 1")
    return t.rows[i - 1] if i <= len(t.rows) else ()


def singleton_count(t: Tableau, a: int) -> int:
    """Number of height-1 columns whose sole entry is ``a``."""
    if not t.rows:
        return 0
    second = len(t.rows[1]) if len(t.rows) > 1 else 0
    return sum(1 for x in t.rows[0][second:] if x == a)


def greene_invariant(w: Sequence[int], i: int) -> int:
    """``lambda_1 + ... + lambda_i`` for the shape of ``P(w)``."""
    if i < 1:
        raise ValueError("i must be >= 1")
    return sum(p_tableau(w).shape[:i])


def lwi_bruteforce(w: Sequence[int], i: int, limit: int = LWI_LIMIT) -> int:
    """Longest subsequence that splits into ``i`` weakly increasing chains.

    Exhaustive search over placing each letter on one of the chains or
    skipping it; states with the same multiset of chain tails are merged.
    Independent of insertion, so it serves as the oracle for Greene's
    theorem.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    if len(w) > limit:
        raise ResourceGuardError("lwi_bruteforce word length", len(w), limit)
    # state: sorted tuple of chain tails (0 = chain still empty) -> best length
    states: dict[tuple[int, ...], int] = {(0,) * i: 0}
    for x in w:
        nxt = dict(states)
        for tails, length in states.items():
            seen = set()
            for c, tail in enumerate(tails):
                if tail <= x and tail not in seen:
                    seen.add(tail)
                    key = tuple(sorted(tails[:c] + (x,) + tails[c + 1:]))
                    if nxt.get(key, -1) < length + 1:
                        nxt[key] = length + 1
        states = nxt
    return max(states.values())


def lwi_ending_at(w: Sequence[int], a: int) -> int:
    """Longest weakly increasing subsequence whose last letter is ``a``; 0 if absent."""
    best: list[int] = []
    result = 0
    for j, x in enumerate(w):
        b = 1 + max((best[k] for k in range(j) if w[k] <= x), default=0)
        best.append(b)
        if x == a:
            result = max(result, b)
    return result


def hook_count(shape: Sequence[int]) -> int:
    """Number of standard Young tableaux of ``shape`` (hook length formula)."""
    lam = Partition(shape)
    prod = 1
    for hrow in lam.hooks():
        for h in hrow:
            prod *= h
    return factorial(lam.size) // prod


@lru_cache(maxsize=None)
def _schur_ones(shape: tuple[int, ...], m: int) -> int:
    lam = Partition(shape)
    value = Fraction(1)
    hooks = lam.hooks()
    for i, p in enumerate(lam):
        for j in range(p):
            value *= Fraction(m + j - i, hooks[i][j])
    return int(value)


def ssyt_count(n: int, m: int, shape: Sequence[int] | None = None) -> int:
    """Number of SSYT with ``n`` cells and entries in ``[m]`` (hook-content formula).

    Used to size enumerations against resource guards before running them.
    """
    if shape is not None:
        return _schur_ones(tuple(shape), m)
    return sum(_schur_ones(tuple(lam), m) for lam in partitions(n) if len(lam) <= m)


def enumerate_ssyt(n: int, m: int, first_row_prefix: Sequence[int] = ()) -> Iterator[Tableau]:
    """Every SSYT with ``n`` cells and entries in ``[m]``, each once.

    Shapes come in reverse lexicographic order; within a shape cells are
    filled in row-major order and tableaux appear in lexicographic order of
    that filling.  ``first_row_prefix`` restricts to tableaux whose first
    row starts with it, so disjoint prefixes split the stream.
    """
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    prefix = tuple(first_row_prefix)
    for lam in partitions(n):
        if len(lam) > m or (lam and len(prefix) > lam[0]):
            continue
        cells = [(i, j) for i, p in enumerate(lam) for j in range(p)]
        heights = lam.conjugate()
        rows = [[0] * p for p in lam]

        def fill(k: int) -> Iterator[Tableau]:
            if k == len(cells):
                yield Tableau._trusted(rows)
                return
            i, j = cells[k]
            lo = 1
            if j > 0:
                lo = rows[i][j - 1]
            if i > 0:
                lo = max(lo, rows[i - 1][j] + 1)
            # cells below need room for strictly larger entries
            hi = m - (heights[j] - 1 - i)
            if i == 0 and j < len(prefix):
                lo = hi = prefix[j] if lo <= prefix[j] <= hi else 0
                if lo == 0:
                    return
            for v in range(lo, hi + 1):
                rows[i][j] = v
                yield from fill(k + 1)

        yield from fill(0)
