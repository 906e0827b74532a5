import itertools

import pytest


def naive_p(w):
    """Row insertion written out with plain lists, independent of the package."""
    rows = []
    for x in w:
        for r in rows:
            bigger = [j for j, y in enumerate(r) if y > x]
            if not bigger:
                r.append(x)
                break
            j = bigger[0]
            r[j], x = x, r[j]
        else:
            rows.append([x])
    return tuple(tuple(r) for r in rows)


def naive_commutes(u, w):
    return naive_p(tuple(u) + tuple(w)) == naive_p(tuple(w) + tuple(u))


def words_upto(n, m, start=0):
    for k in range(start, n + 1):
        yield from itertools.product(range(1, m + 1), repeat=k)


@pytest.fixture
def oracle_p():
    return naive_p
