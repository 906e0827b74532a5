"""Truncated-centralizer probes for powers ``u^k``.

``C'(v) = {w in C(v) : |w| <= L, max w <= M}`` is a union of plactic
classes, so it is stored as its sorted list of member P-tableaux.  Two
truncations are compared through an order-independent fingerprint: the sum,
modulo a Mersenne prime, of a per-class hash.  Equal truncated sets are
evidence for ``C(u^k) = C(u^(k+1))``, never a proof.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from ._parallel import DEFAULT_GUARD, run_tasks
from .characterize import is_permutation
from .errors import AlphabetError, ResourceGuardError
from .plactic import centralizer_words, class_words, slice_classes
from .tableaux import Tableau, hook_count, p_tableau, ssyt_count
from .words import Word, format_word, is_packed, power

__all__ = [
    "TruncatedCentralizer",
    "truncated_centralizer",
    "FingerprintCache",
    "PowerRecord",
    "StabilityReport",
    "stability_probe",
    "strong_stability_check_two_letter",
    "m_stability_check_permutation",
    "packed_conjecture_sweep",
    "PackedSweepReport",
]

SCHEMA = "plactic-fingerprint-v1"
PRIME = (1 << 61) - 1
EVIDENCE_NOTE = "equality of truncated centralizers is evidence, not proof, of equality of centralizers"
WITNESS_LIMIT = 100


def _class_hash(t: Tableau) -> int:
    key = ",".join(str(x) for x in t.reading_word()).encode()
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "big") % PRIME


def fingerprint(classes: Sequence[Tableau]) -> str:
    total = 0
    for t in classes:
        total = (total + _class_hash(t)) % PRIME
    return f"{total:016x}"


@dataclass(frozen=True)
class TruncatedCentralizer:
    base_word: Word
    L: int
    M: int
    classes: tuple[Tableau, ...]

    @property
    def fingerprint(self) -> str:
        return fingerprint(self.classes)

    @property
    def word_count(self) -> int:
        return sum(hook_count(t.shape) for t in self.classes)

    def words(self) -> list[Word]:
        """Member words sorted by length, then lexicographically."""
        out: set[Word] = set()
        for t in self.classes:
            out |= class_words(t, limit=max(self.L, 1))
        return sorted(out, key=lambda w: (len(w), tuple(w)))

    def restricted(self, L: int) -> "TruncatedCentralizer":
        return TruncatedCentralizer(self.base_word, L, self.M, tuple(t for t in self.classes if t.size <= L))


def _guard_truncation(L: int, M: int, engine: str, guard: int) -> None:
    if engine == "word":
        needed = sum(M**n for n in range(L + 1))
    else:
        needed = sum(ssyt_count(n, M) for n in range(L + 1))
    if needed > guard:
        raise ResourceGuardError(f"truncation L={L} M={M}", needed, guard)


def truncated_centralizer(
    u: Sequence[int],
    L: int,
    M: int,
    *,
    engine: str = "class",
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
) -> TruncatedCentralizer:
    """``{w in C(u) : |w| <= L, w over [M]}``.

    ``engine="class"`` scans SSYT; ``engine="word"`` scans every word and
    groups members by insertion tableau.  Both give identical results.
    """
    if L < 0 or M < 1:
        raise ValueError("need L >= 0 and M >= 1")
    if engine not in ("class", "word"):
        raise ValueError(f"unknown engine {engine!r}")
    _guard_truncation(L, M, engine, guard)
    classes: set[Tableau] = set()
    for n in range(L + 1):
        if engine == "class":
            classes.update(slice_classes(u, n, M, guard=guard, workers=workers))
        else:
            classes.update(p_tableau(w) for w in centralizer_words(u, n, M, guard=guard, workers=workers))
    return TruncatedCentralizer(Word(u), L, M, tuple(sorted(classes, key=lambda t: (t.size, t.rows))))


class FingerprintCache:
    """Fingerprints on disk keyed by ``(u, k, L, M)`` and the schema tag."""

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, u: Sequence[int], k: int, L: int, M: int) -> Path:
        key = f"{SCHEMA}|{','.join(map(str, u))}|{k}|{L}|{M}"
        return self.directory / (hashlib.sha256(key.encode()).hexdigest() + ".json")

    def get(self, u: Sequence[int], k: int, L: int, M: int) -> dict | None:
        path = self._path(u, k, L, M)
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if data.get("schema") != SCHEMA:
            return None
        return data

    def put(self, u: Sequence[int], k: int, L: int, M: int, record: dict) -> None:
        data = {"schema": SCHEMA, "u": format_word(u), "k": k, "L": L, "M": M, **record}
        path = self._path(u, k, L, M)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh, sort_keys=True)
        os.replace(tmp, path)


@dataclass(frozen=True)
class PowerRecord:
    k: int
    fingerprint: str
    classes: int
    words: int
    stabilized: bool = False


@dataclass
class StabilityReport:
    base_word: Word
    K: int
    L: int
    M: int
    powers: list[PowerRecord]
    observed_index: int | None
    transitions: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "base_word": format_word(self.base_word),
            "K": self.K,
            "L": self.L,
            "M": self.M,
            "powers": [
                {
                    "k": p.k,
                    "fingerprint": p.fingerprint,
                    "classes": p.classes,
                    "words": p.words,
                    "stabilized": p.stabilized,
                }
                for p in self.powers
            ],
            "observed_stabilization_index": self.observed_index,
            "transitions": self.transitions,
            "note": EVIDENCE_NOTE,
        }

    def csv_rows(self) -> list[dict]:
        return [
            {
                "u": format_word(self.base_word),
                "k": p.k,
                "fingerprint": p.fingerprint,
                "classes": p.classes,
                "words": p.words,
                "stabilized": int(p.stabilized),
            }
            for p in self.powers
        ]


def _power_task(args) -> dict:
    u, k, L, M, guard = args
    tc = truncated_centralizer(power(u, k), L, M, guard=guard)
    return {"fingerprint": tc.fingerprint, "classes": len(tc.classes), "words": tc.word_count}


def _power_records(
    u: Sequence[int], ks: Sequence[int], L: int, M: int, guard: int, workers: int, cache: FingerprintCache | None
) -> dict[int, dict]:
    out: dict[int, dict] = {}
    todo = []
    for k in ks:
        hit = cache.get(u, k, L, M) if cache else None
        if hit is not None:
            out[k] = {key: hit[key] for key in ("fingerprint", "classes", "words")}
        else:
            todo.append(k)
    results = run_tasks(_power_task, [(tuple(u), k, L, M, guard) for k in todo], workers)
    for k, rec in zip(todo, results):
        out[k] = rec
        if cache:
            cache.put(u, k, L, M, rec)
    return out


def _word_list(classes, limit: int) -> list[str]:
    words: set[Word] = set()
    for t in classes:
        words |= class_words(t, limit=max(t.size, 1))
    return [format_word(w) for w in sorted(words, key=lambda w: (len(w), tuple(w)))[:WITNESS_LIMIT]]


def stability_probe(
    u: Sequence[int],
    K: int,
    L: int,
    M: int | None = None,
    *,
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
    cache: FingerprintCache | None = None,
) -> StabilityReport:
    """Fingerprint ``C'(u^k)`` for ``k = 1..K`` over one truncation domain.

    The observed stabilization index is the smallest ``k`` whose fingerprint
    agrees with every later power up to ``K``.  For each ``k`` where
    ``C'(u^k)`` and ``C'(u^(k+1))`` differ the report lists the words gained
    and lost.  ``M`` defaults to ``max u + 1``.
    """
    if not u:
        raise ValueError("u must be nonempty")
    if K < 1:
        raise ValueError("K must be >= 1")
    if M is None:
        M = max(u) + 1
    records = _power_records(u, range(1, K + 1), L, M, guard, workers, cache)
    fps = [records[k]["fingerprint"] for k in range(1, K + 1)]
    index = K
    while index > 1 and fps[index - 2] == fps[K - 1]:
        index -= 1
    powers = [
        PowerRecord(k, fps[k - 1], records[k]["classes"], records[k]["words"], k >= index)
        for k in range(1, K + 1)
    ]
    transitions = []
    for k in range(1, K):
        if fps[k - 1] != fps[k]:
            a = set(truncated_centralizer(power(u, k), L, M, guard=guard).classes)
            b = set(truncated_centralizer(power(u, k + 1), L, M, guard=guard).classes)
            transitions.append(
                {
                    "from_k": k,
                    "to_k": k + 1,
                    "gained": _word_list(b - a, L),
                    "lost": _word_list(a - b, L),
                }
            )
    return StabilityReport(Word(u), K, L, M, powers, index, transitions)


def strong_stability_check_two_letter(
    u: Sequence[int], K: int, L: int, M: int, *, guard: int = DEFAULT_GUARD, workers: int = 1,
    cache: FingerprintCache | None = None,
) -> bool:
    """``C'(u^k) == C'(u)`` for every ``k <= K``, ``u`` over ``{1, 2}``."""
    if not u or any(x > 2 for x in u):
        raise AlphabetError(f"{Word(u)} is not a nonempty word over {{1, 2}}")
    recs = _power_records(u, range(1, K + 1), L, M, guard, workers, cache)
    return all(recs[k]["fingerprint"] == recs[1]["fingerprint"] for k in range(1, K + 1))


def m_stability_check_permutation(
    u: Sequence[int], K: int, L: int, M: int, *, guard: int = DEFAULT_GUARD, workers: int = 1,
    cache: FingerprintCache | None = None,
) -> bool:
    """``C'(u^k) == C'(u^(k+1))`` for ``m <= k < K``, ``u`` a permutation of ``[m]``."""
    if not u or not is_permutation(u):
        raise AlphabetError(f"{Word(u)} is not a permutation")
    m = len(u)
    ks = range(m, K + 1)
    recs = _power_records(u, ks, L, M, guard, workers, cache)
    return all(recs[k]["fingerprint"] == recs[k + 1]["fingerprint"] for k in range(m, K))


@dataclass
class PackedSweepReport:
    m: int
    max_len: int
    K: int
    L: int
    M: int
    words: int
    classes: int
    failures: list[dict]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "max_len": self.max_len,
            "K": self.K,
            "L": self.L,
            "M": self.M,
            "packed_words": self.words,
            "plactic_classes": self.classes,
            "failures": self.failures,
            "passed": self.passed,
            "note": EVIDENCE_NOTE,
        }


def packed_words(m: int, max_len: int):
    """All ``m``-packed words of length at most ``max_len``, shortest first."""
    for n in range(m, max_len + 1):
        for w in itertools.product(range(1, m + 1), repeat=n):
            if is_packed(w, m):
                yield Word(w)


def packed_conjecture_sweep(
    m: int,
    max_len: int,
    K: int,
    L: int,
    M: int | None = None,
    *,
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
    cache: FingerprintCache | None = None,
) -> PackedSweepReport:
    """Check ``C'(u^k) == C'(u^(k+1))`` for ``m <= k < K`` over all ``m``-packed ``u``.

    Base words are grouped by plactic class (``u`` and ``u'`` with the same
    insertion tableau have the same powers up to Knuth equivalence), and one
    representative per class is probed.  ``M`` defaults to ``m``.
    """
    if M is None:
        M = m
    reps: dict[Tableau, Word] = {}
    total = 0
    for w in packed_words(m, max_len):
        total += 1
        reps.setdefault(p_tableau(w), w)
    bases = sorted(reps.values(), key=lambda w: (len(w), tuple(w)))
    tasks = [(tuple(u), k, L, M, guard) for u in bases for k in range(m, K + 1)]
    cached: dict[tuple, dict] = {}
    todo = []
    for t in tasks:
        hit = cache.get(t[0], t[1], L, M) if cache else None
        if hit is not None:
            cached[t[:2]] = hit
        else:
            todo.append(t)
    for t, rec in zip(todo, run_tasks(_power_task, todo, workers)):
        cached[t[:2]] = rec
        if cache:
            cache.put(t[0], t[1], L, M, rec)
    failures = []
    for u in bases:
        for k in range(m, K):
            if cached[(tuple(u), k)]["fingerprint"] != cached[(tuple(u), k + 1)]["fingerprint"]:
                failures.append({"u": format_word(u), "k": k})
    return PackedSweepReport(m, max_len, K, L, M, total, len(bases), failures)
