# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: row insertion, commutation tests, slice and word scans.

Same API and results as ``_kernel_py``.  Tableaux are flat ``int`` buffers
of ``R`` rows by ``C`` columns plus a row-length vector.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memcmp, memset

NAME = "cython"


cdef inline void tab_insert(int *cell, int *rlen, int *nrows, int C, int x) noexcept nogil:
    cdef int r = 0
    cdef int lo, hi, mid, L, y
    cdef int *row
    while True:
        if r == nrows[0]:
            rlen[r] = 0
            nrows[0] += 1
        row = cell + r * C
        L = rlen[r]
        lo = 0
        hi = L
        while lo < hi:
            mid = (lo + hi) >> 1
            if row[mid] <= x:
                lo = mid + 1
            else:
                hi = mid
        if lo == L:
            row[L] = x
            rlen[r] = L + 1
            return
        y = row[lo]
        row[lo] = x
        x = y
        r += 1


cdef inline bint tab_equal(int *ca, int *la, int na, int *cb, int *lb, int nb, int C) noexcept nogil:
    cdef int r
    if na != nb:
        return False
    for r in range(na):
        if la[r] != lb[r]:
            return False
    for r in range(na):
        if memcmp(ca + r * C, cb + r * C, la[r] * sizeof(int)) != 0:
            return False
    return True


cdef class _Tab:
    """Scratch tableau with fixed capacity."""
    cdef int R, C, nrows
    cdef int *cell
    cdef int *rlen

    def __cinit__(self, int R, int C):
        self.R = R
        self.C = C
        self.nrows = 0
        self.cell = <int *> malloc(R * C * sizeof(int))
        self.rlen = <int *> malloc(R * sizeof(int))
        if self.cell == NULL or self.rlen == NULL:
            raise MemoryError()
        memset(self.rlen, 0, R * sizeof(int))

    def __dealloc__(self):
        free(self.cell)
        free(self.rlen)

    cdef inline void clear(self) noexcept nogil:
        self.nrows = 0

    cdef inline void insert(self, int x) noexcept nogil:
        tab_insert(self.cell, self.rlen, &self.nrows, self.C, x)

    cdef inline void copy_from(self, _Tab other) noexcept:
        cdef int r
        self.nrows = other.nrows
        for r in range(other.nrows):
            self.rlen[r] = other.rlen[r]
            memcpy(self.cell + r * self.C, other.cell + r * other.C, other.rlen[r] * sizeof(int))

    cdef inline bint equals(self, _Tab other) noexcept:
        return tab_equal(self.cell, self.rlen, self.nrows, other.cell, other.rlen, other.nrows, self.C)

    cdef list to_list(self):
        cdef int r, j
        out = []
        for r in range(self.nrows):
            out.append([self.cell[r * self.C + j] for j in range(self.rlen[r])])
        return out

    cdef tuple to_tuple(self):
        cdef int r, j
        return tuple(tuple(self.cell[r * self.C + j] for j in range(self.rlen[r])) for r in range(self.nrows))


cdef int _max_letter(object word) except -1:
    cdef int mx = 0
    for a in word:
        if a > mx:
            mx = a
    return mx


def p_rows(word):
    word = list(word)
    cdef int n = len(word)
    cdef _Tab t = _Tab(_max_letter(word) + 1, n + 1)
    for a in word:
        t.insert(a)
    return t.to_list()


def commutes(u, w):
    """``P(uw) == P(wu)``."""
    u = list(u)
    w = list(w)
    cdef int R = max(_max_letter(u), _max_letter(w)) + 1
    cdef int C = len(u) + len(w) + 1
    cdef _Tab a = _Tab(R, C)
    cdef _Tab b = _Tab(R, C)
    for x in u:
        a.insert(x)
    for x in w:
        a.insert(x)
    for x in w:
        b.insert(x)
    for x in u:
        b.insert(x)
    return a.equals(b)


cdef class _SliceScanner:
    cdef int n, m, packed, ones, ulen, R, C
    cdef int *u
    cdef int *rows      # current tableau, R x C
    cdef int *rlen
    cdef int *mu        # saved row lengths per letter, (m + 2) x R
    cdef int *reading
    cdef _Tab pu, a, b
    cdef dict counts
    cdef list members

    def __cinit__(self, u, int n, int m, bint packed, int ones, bint collect):
        cdef int i
        self.n = n
        self.m = m
        self.packed = packed
        self.ones = ones
        self.ulen = len(u)
        self.R = max(m, _max_letter(u)) + 2
        self.C = n + self.ulen + 1
        self.u = <int *> malloc((self.ulen + 1) * sizeof(int))
        self.rows = <int *> malloc(self.R * self.C * sizeof(int))
        self.rlen = <int *> malloc(self.R * sizeof(int))
        self.mu = <int *> malloc((m + 2) * self.R * sizeof(int))
        self.reading = <int *> malloc((n + 1) * sizeof(int))
        if not (self.u and self.rows and self.rlen and self.mu and self.reading):
            raise MemoryError()
        memset(self.rlen, 0, self.R * sizeof(int))
        for i in range(self.ulen):
            self.u[i] = u[i]
        self.pu = _Tab(self.R, self.C)
        self.a = _Tab(self.R, self.C)
        self.b = _Tab(self.R, self.C)
        for i in range(self.ulen):
            self.pu.insert(self.u[i])
        self.counts = {}
        self.members = [] if collect else None

    def __dealloc__(self):
        free(self.u)
        free(self.rows)
        free(self.rlen)
        free(self.mu)
        free(self.reading)

    cdef void leaf(self, int distinct):
        cdef int r, j, nr = 0, k = 0
        while nr < self.R and self.rlen[nr] > 0:
            nr += 1
        # P(w u): the tableau itself, then u
        self.a.nrows = nr
        for r in range(nr):
            self.a.rlen[r] = self.rlen[r]
            memcpy(self.a.cell + r * self.C, self.rows + r * self.C, self.rlen[r] * sizeof(int))
        for j in range(self.ulen):
            self.a.insert(self.u[j])
        # P(u w): P(u), then the row reading word (bottom row first)
        self.b.copy_from(self.pu)
        for r in range(nr - 1, -1, -1):
            for j in range(self.rlen[r]):
                self.b.insert(self.rows[r * self.C + j])
        if not self.a.equals(self.b):
            return
        shape = tuple(self.rlen[r] for r in range(nr))
        key = (shape, distinct)
        self.counts[key] = self.counts.get(key, 0) + 1
        if self.members is not None:
            self.members.append(tuple(
                tuple(self.rows[r * self.C + j] for j in range(self.rlen[r])) for r in range(nr)))

    cdef void letter(self, int i, int remaining, int distinct):
        cdef int r, nrows
        if i > self.m:
            if remaining == 0:
                self.leaf(distinct)
            return
        if remaining == 0 and not self.packed:
            self.leaf(distinct)
            return
        if self.packed and self.m - i + 1 > remaining:
            return
        nrows = 0
        for r in range(self.R):
            self.mu[i * self.R + r] = self.rlen[r]
            if self.rlen[r] > 0:
                nrows += 1
        self.strip(i, 0, nrows, remaining, 0, distinct)

    cdef void strip(self, int i, int r, int nrows, int remaining, int added, int distinct):
        cdef int cap, t, base
        cdef int *mu = self.mu + i * self.R
        if r > nrows:
            if self.packed and added == 0:
                return
            if i == 1 and self.ones >= 0 and added != self.ones:
                return
            if i == self.m and added != remaining:
                return
            self.letter(i + 1, remaining - added, distinct + (1 if added > 0 else 0))
            return
        cap = remaining - added
        if r > 0 and mu[r - 1] - mu[r] < cap:
            cap = mu[r - 1] - mu[r]
        if i == 1 and self.ones >= 0 and self.ones - added < cap:
            cap = self.ones - added
        base = r * self.C + mu[r]
        self.strip(i, r + 1, nrows, remaining, added, distinct)
        for t in range(1, cap + 1):
            self.rows[base + t - 1] = i
            self.rlen[r] = mu[r] + t
            self.strip(i, r + 1, nrows, remaining, added + t, distinct)
        self.rlen[r] = mu[r]


def scan_slice(u, int n, int m, packed=False, int ones=-1, collect=False):
    """See ``_kernel_py.scan_slice``."""
    u = list(u)
    cdef _SliceScanner s = _SliceScanner(u, n, m, bool(packed), ones, bool(collect))
    if n == 0:
        if not packed:
            s.leaf(0)
    else:
        s.letter(1, n, 0)
    return s.counts, s.members


cdef class _WordScanner:
    cdef int n, m, first, ulen, R, C
    cdef int *u
    cdef int *word
    cdef list pw      # per-depth P(prefix)
    cdef list puw     # per-depth P(u . prefix)
    cdef _Tab scratch
    cdef long long count
    cdef list members

    def __cinit__(self, u, int n, int m, int first, bint collect):
        cdef int i
        self.n = n
        self.m = m
        self.first = first
        self.ulen = len(u)
        self.R = max(m, _max_letter(u)) + 2
        self.C = n + self.ulen + 1
        self.u = <int *> malloc((self.ulen + 1) * sizeof(int))
        self.word = <int *> malloc((n + 1) * sizeof(int))
        if not (self.u and self.word):
            raise MemoryError()
        for i in range(self.ulen):
            self.u[i] = u[i]
        self.pw = [_Tab(self.R, self.C) for i in range(n + 1)]
        self.puw = [_Tab(self.R, self.C) for i in range(n + 1)]
        for i in range(self.ulen):
            (<_Tab> self.puw[0]).insert(self.u[i])
        self.scratch = _Tab(self.R, self.C)
        self.count = 0
        self.members = [] if collect else None

    def __dealloc__(self):
        free(self.u)
        free(self.word)

    cdef void dfs(self, int depth):
        cdef int a, lo, hi, j
        cdef _Tab pw, puw, npw, npuw
        pw = <_Tab> self.pw[depth]
        puw = <_Tab> self.puw[depth]
        if depth == self.n:
            self.scratch.copy_from(pw)
            for j in range(self.ulen):
                self.scratch.insert(self.u[j])
            if self.scratch.equals(puw):
                self.count += 1
                if self.members is not None:
                    self.members.append(tuple(self.word[j] for j in range(self.n)))
            return
        lo = 1
        hi = self.m
        if depth == 0 and self.first > 0:
            lo = self.first
            hi = self.first
        npw = <_Tab> self.pw[depth + 1]
        npuw = <_Tab> self.puw[depth + 1]
        for a in range(lo, hi + 1):
            npw.copy_from(pw)
            npw.insert(a)
            npuw.copy_from(puw)
            npuw.insert(a)
            self.word[depth] = a
            self.dfs(depth + 1)


def scan_words(u, int n, int m, int first=0, collect=False):
    """See ``_kernel_py.scan_words``."""
    u = list(u)
    cdef _WordScanner s = _WordScanner(u, n, m, first, bool(collect))
    s.dfs(0)
    return int(s.count), s.members
