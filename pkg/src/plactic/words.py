"""Words over the positive integers.

A word is stored as a :class:`Word`, an immutable tuple of letters that are
all at least 1.  Serialization uses a compact digit string when every letter
is a single digit ("3122413321") and comma-separated integers otherwise
("10,3,11").
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InvalidWordError

__all__ = [
    "Word",
    "parse_word",
    "format_word",
    "concat",
    "power",
    "multiplicity",
    "restrict",
    "standardize",
    "is_packed",
    "decreasing",
]


class Word(tuple):
    """An immutable word over the positive integers."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()) -> "Word":
        letters = tuple(int(a) for a in letters)
        for a in letters:
            if a < 1:
                raise InvalidWordError(f"letters must be positive integers, got {a}")
        return super().__new__(cls, letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        return parse_word(text)

    def __add__(self, other: Sequence[int]) -> "Word":  # type: ignore[override]
        return Word(tuple(self) + tuple(other))

    def __mul__(self, k: int) -> "Word":  # type: ignore[override]
        return power(self, k)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    @property
    def max(self) -> int:
        """Largest letter, 0 for the empty word."""
        return max(self, default=0)


def parse_word(text: str) -> Word:
    """Parse either the digit-string or the comma-separated form.

    The empty string (or ``"e"``/``"ε"``) is the empty word.
    """
    text = text.strip()
    if text in ("", "e", "ε", "eps"):
        return Word()
    try:
        if "," in text:
            letters = [int(tok) for tok in text.split(",") if tok.strip()]
        else:
            if not text.isdigit():
                raise ValueError(text)
            letters = [int(ch) for ch in text]
    except ValueError:
        raise InvalidWordError(f"cannot parse word {text!r}") from None
    return Word(letters)


def format_word(w: Sequence[int]) -> str:
    if all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def concat(u: Sequence[int], v: Sequence[int]) -> Word:
    return Word(tuple(u) + tuple(v))


def power(u: Sequence[int], k: int) -> Word:
    if k < 0:
        raise ValueError("power must be nonnegative")
    return Word(tuple(u) * k)


def multiplicity(u: Sequence[int], a: int) -> int:
    return sum(1 for x in u if x == a)


def restrict(w: Sequence[int], m: int) -> Word:
    """Subsequence of letters ``<= m``, order preserved."""
    if m < 1:
        raise ValueError("restriction bound must be >= 1")
    return Word(a for a in w if a <= m)


def standardize(w: Sequence[int]) -> Word:
    """Replace each letter by its rank among the distinct letters of ``w``."""
    if not w:
        raise InvalidWordError("cannot standardize the empty word")
    rank = {a: j for j, a in enumerate(sorted(set(w)), start=1)}
    return Word(rank[a] for a in w)


def is_packed(w: Sequence[int], m: int) -> bool:
    """True iff ``max w == m`` and every letter of ``[m]`` occurs in ``w``."""
    return bool(w) and max(w) == m and set(w) == set(range(1, m + 1))


def decreasing(m: int) -> Word:
    """The decreasing permutation ``m (m-1) ... 1``."""
    return Word(range(m, 0, -1))
