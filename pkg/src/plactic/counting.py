"""Counting centralizer slices of C(1) and the binomial-basis coefficients.

Two independent routes give ``c_{n,m}(1)``: the slice scan
(:func:`count_c`) and the sum over partitions ``f^lambda * g_m^lambda``
where ``g`` comes from descents of linear extensions of a poset built from
the rows of ``lambda`` below the first (:func:`c_via_schur_formula`).

Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from typing import Iterator, Sequence

from ._parallel import DEFAULT_GUARD
from .errors import InconsistentValuesError, ResourceGuardError
from .plactic import slice_counts
from .tableaux import Partition, hook_count, partitions
from .words import Word

__all__ = [
    "LabeledPoset",
    "CoeffVector",
    "count_c",
    "count_c_refined",
    "b_count",
    "b_witness",
    "gbinom",
    "expand_in_binomial_basis",
    "poset_from_partition",
    "linear_extensions",
    "descent_count",
    "g_poly",
    "c_via_schur_formula",
    "log_concavity",
    "CoefficientReport",
    "coefficient_report",
]

EXTENSION_LIMIT = 12


def _weighted(counts: dict) -> int:
    return sum(c * hook_count(shape) for (shape, _), c in counts.items())


def count_c(n: int, m: int, u: Sequence[int] = (1,), *, guard: int = DEFAULT_GUARD, workers: int = 1) -> int:
    """``c_{n,m}(u)``: words of length ``n``, max at most ``m``, in C(u).

    ``m = 0`` is accepted (only the empty word qualifies).
    """
    if n < 0 or m < 0:
        raise ValueError("need n >= 0 and m >= 0")
    if m == 0:
        return 1 if n == 0 else 0
    return _weighted(slice_counts(u, n, m, guard=guard, workers=workers))


def count_c_refined(
    n: int, m: int, k: int, u: Sequence[int] = (1,), *, guard: int = DEFAULT_GUARD, workers: int = 1
) -> int:
    """Slice members using exactly ``k`` distinct letters."""
    if not 1 <= k <= min(m, n):
        raise ValueError(f"need 1 <= k <= min(m, n), got k={k}, m={m}, n={n}")
    counts = slice_counts(u, n, m, guard=guard, workers=workers)
    return sum(c * hook_count(shape) for (shape, d), c in counts.items() if d == k)


def b_count(n: int, k: int, *, guard: int = DEFAULT_GUARD, workers: int = 1) -> int:
    """``b_{n,k}``: ``k``-packed words of length ``n`` in C(1)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return _weighted(slice_counts((1,), n, k, packed=True, guard=guard, workers=workers))


def b_witness(n: int, k: int) -> Word:
    """The word ``k (k-1) ... 2 1^(n-k+1)``, a ``k``-packed member of C(1)."""
    return Word(tuple(range(k, 1, -1)) + (1,) * (n - k + 1))


def gbinom(x: int, k: int) -> int:
    """Binomial coefficient ``x choose k`` as a polynomial in ``x`` (any integer ``x``)."""
    if k < 0:
        return 0
    num = 1
    for j in range(k):
        num *= x - j
    return num // factorial(k)


@dataclass(frozen=True)
class CoeffVector:
    """Coefficients in the basis ``binom(m - basis_shift, j)``, ``j = 0, 1, ...``."""

    basis_shift: int
    coeffs: tuple[int, ...]

    def evaluate(self, m: int) -> int:
        return sum(c * gbinom(m - self.basis_shift, j) for j, c in enumerate(self.coeffs))

    @property
    def degree(self) -> int:
        nz = [j for j, c in enumerate(self.coeffs) if c]
        return nz[-1] if nz else -1


def expand_in_binomial_basis(
    values: Sequence[int], shift: int = 0, degree: int | None = None
) -> CoeffVector:
    """Coefficients of the polynomial taking ``values[j]`` at ``m = shift + j``.

    Forward differences give the coefficients.  When ``degree`` is given,
    the first ``degree + 1`` values determine the polynomial and the rest
    are residual checks.
    """
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    values = [int(v) for v in values]
    if degree is None:
        degree = len(values) - 1
    if degree + 1 > len(values):
        raise ValueError("not enough values for the requested degree")
    coeffs = []
    for k in range(degree + 1):
        coeffs.append(sum((-1) ** (k - j) * comb(k, j) * values[j] for j in range(k + 1)))
    vec = CoeffVector(shift, tuple(coeffs))
    for j, v in enumerate(values):
        if vec.evaluate(shift + j) != v:
            raise InconsistentValuesError(
                f"value at m={shift + j} is {v}, degree-{degree} interpolant gives {vec.evaluate(shift + j)}"
            )
    return vec


@dataclass(frozen=True)
class LabeledPoset:
    """Partial order on ``1..size``; ``relation`` holds every pair ``(a, b)`` with ``a <= b``."""

    size: int
    relation: frozenset[tuple[int, int]]

    def leq(self, a: int, b: int) -> bool:
        return (a, b) in self.relation

    def is_partial_order(self) -> bool:
        elems = range(1, self.size + 1)
        if any((a, a) not in self.relation for a in elems):
            return False
        if any((b, a) in self.relation for a, b in self.relation if a != b):
            return False
        return all(
            (a, c) in self.relation
            for a, b in self.relation
            for c in elems
            if (b, c) in self.relation
        )

    def covers(self) -> set[tuple[int, int]]:
        """Pairs ``(a, b)`` with ``a < b`` and nothing strictly between."""
        strict = {(a, b) for a, b in self.relation if a != b}
        return {
            (a, b)
            for a, b in strict
            if not any((a, c) in strict and (c, b) in strict for c in range(1, self.size + 1))
        }


def poset_from_partition(shape: Sequence[int]) -> LabeledPoset:
    """Poset on the cells of ``shape``.

    Cells are labeled ``1, 2, ...`` along the first row from right to left,
    then the second row from right to left, and so on.  A cell lies below
    every cell weakly north-west of it, so the top-left cell is the maximum,
    a single row is the chain ``1 < 2 < ...`` and a single column is the
    chain ``n < n-1 < ... < 1``.
    """
    lam = Partition(shape)
    coords: dict[int, tuple[int, int]] = {}
    label = 0
    for i, p in enumerate(lam):
        for j in range(p - 1, -1, -1):
            label += 1
            coords[label] = (i, j)
    rel = frozenset(
        (k, kk)
        for k, (i, j) in coords.items()
        for kk, (ii, jj) in coords.items()
        if ii <= i and jj <= j
    )
    return LabeledPoset(lam.size, rel)


def linear_extensions(p: LabeledPoset, limit: int = EXTENSION_LIMIT) -> Iterator[Word]:
    """Linear extensions as label sequences, smaller elements first.

    Backtracks over minimal remaining elements in increasing label order.
    """
    if p.size > limit:
        raise ResourceGuardError("linear_extensions poset size", p.size, limit)
    below = {b: {a for a, bb in p.relation if bb == b and a != b} for b in range(1, p.size + 1)}
    seq: list[int] = []
    used: set[int] = set()

    def rec() -> Iterator[Word]:
        if len(seq) == p.size:
            yield Word(seq)
            return
        for x in range(1, p.size + 1):
            if x not in used and below[x] <= used:
                used.add(x)
                seq.append(x)
                yield from rec()
                seq.pop()
                used.remove(x)

    yield from rec()


def descent_count(pi: Sequence[int]) -> int:
    """Positions ``i`` with ``pi_i > pi_(i+1)`` in a permutation."""
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError(f"{pi} is not a permutation")
    return sum(1 for a, b in zip(pi, pi[1:]) if a > b)


def g_poly(shape: Sequence[int], m: int, limit: int = EXTENSION_LIMIT) -> int:
    """``sum over linear extensions pi of P(lambda'') of binom(m + n'' - des(pi) - 2, n'')``.

    ``lambda''`` is ``shape`` without its first row and ``n''`` its size.
    """
    if m < 2:
        raise ValueError("g is defined for m >= 2")
    lam = Partition(shape)
    rest = lam[1:]
    nn = sum(rest)
    poset = poset_from_partition(rest)
    return sum(comb(m + nn - descent_count(pi) - 2, nn) for pi in linear_extensions(poset, limit))


def c_via_schur_formula(n: int, m: int, limit: int = EXTENSION_LIMIT) -> int:
    """``sum over lambda |- n of f^lambda * g_m^lambda``."""
    if n < 1 or m < 2:
        raise ValueError("need n >= 1 and m >= 2")
    return sum(hook_count(lam) * g_poly(lam, m, limit) for lam in partitions(n))


def log_concavity(b: Sequence[int]) -> list[int]:
    """Interior indices ``k`` (1-based) where ``b_k^2 < b_(k-1) b_(k+1)``."""
    return [k for k in range(2, len(b)) if b[k - 1] ** 2 < b[k - 2] * b[k]]


@dataclass
class CoefficientReport:
    n: int
    values: dict[int, int]
    a: CoeffVector
    b: CoeffVector
    b_direct: list[int]
    clauses: dict[str, bool] = field(default_factory=dict)
    b_expansion_mismatch: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.clauses.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "values": {str(m): v for m, v in sorted(self.values.items())},
            "a": list(self.a.coeffs),
            "b": list(self.b.coeffs),
            "b_direct": list(self.b_direct),
            "clauses": dict(sorted(self.clauses.items())),
            "b_expansion_mismatch_m": list(self.b_expansion_mismatch),
            "passed": self.passed,
        }

    def rows(self) -> list[dict]:
        """One record per ``k``: ``a_k`` (``k = 0..n-1``) and ``b_k`` (``k = 1..n``)."""
        out = []
        for k in range(0, self.n + 1):
            out.append(
                {
                    "n": self.n,
                    "k": k,
                    "a_k": self.a.coeffs[k] if k < len(self.a.coeffs) else 0,
                    "b_k": self.b.coeffs[k - 1] if k >= 1 else 0,
                    "b_nk": self.b_direct[k - 1] if k >= 1 else 0,
                }
            )
        return out


def coefficient_report(n: int, *, guard: int = DEFAULT_GUARD, workers: int = 1) -> CoefficientReport:
    """Expand ``c_{n,m}(1)`` in both binomial bases and check the coefficient theorems.

    The degree ``n - 1`` interpolants use ``m = 0..n-1`` (basis ``binom(m, k)``)
    and ``m = 1..n`` (basis ``binom(m-1, k-1)``); two further values of
    ``m`` are residual checks in each case.
    """
    if n < 2:
        raise ValueError("coefficient theorems need n >= 2")
    values = {m: count_c(n, m, guard=guard, workers=workers) for m in range(0, n + 3)}
    a = expand_in_binomial_basis([values[m] for m in range(0, n + 2)], 0, degree=n - 1)
    b = expand_in_binomial_basis([values[m] for m in range(1, n + 3)], 1, degree=n - 1)
    b_direct = [b_count(n, k, guard=guard, workers=workers) for k in range(1, n + 1)]
    central = comb(n, n // 2)
    ac, bc = a.coeffs, b.coeffs
    clauses = {
        "a0_zero": ac[0] == 0,
        "a1_one": ac[1] == 1,
        "a2_central_minus_2": (ac[2] if n > 2 else 0) == central - 2,
        "a_top_one": ac[n - 1] == 1,
        "a_positive": all(x >= 1 for x in ac[1:n]),
        "b_positive": all(x >= 1 for x in bc),
        "b1_one": bc[0] == 1,
        "b2_central_minus_1": bc[1] == central - 1,
        "b_top_one": bc[n - 1] == 1,
        "b_matches_packed_count": list(bc) == b_direct,
        "leading_coefficient": ac[n - 1] == 1 and bc[n - 1] == 1 and a.degree == n - 1,
        "b_log_concave": not log_concavity(b_direct),
    }
    # the b expansion is asserted for m >= n; record any m < n where it fails
    mismatch = [m for m in range(0, n) if b.evaluate(m) != values[m]]
    return CoefficientReport(n, values, a, b, b_direct, clauses, mismatch)
