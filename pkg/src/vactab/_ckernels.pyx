# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; API mirrors ``vactab._pykernels``."""

from libc.stdlib cimport malloc, free

DEF MAXN = 64

PIN_NONE = 0
PIN_MAX = 1
PIN_MIN = 2


cdef inline Py_ssize_t _bisect_right(list row, long x):
    cdef Py_ssize_t lo = 0, hi = len(row), mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if x < <long>row[mid]:
            hi = mid
        else:
            lo = mid + 1
    return lo


cdef inline Py_ssize_t _bisect_left(list row, long x):
    cdef Py_ssize_t lo = 0, hi = len(row), mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if <long>row[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def row_insert(rows, long x):
    cdef list new = [list(r) for r in rows]
    cdef Py_ssize_t i = 0, pos
    cdef list row
    cdef long y
    while i < len(new):
        row = new[i]
        pos = _bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            return tuple([tuple(r) for r in new]), i
        y = row[pos]
        row[pos] = x
        x = y
        i += 1
    new.append([x])
    return tuple([tuple(r) for r in new]), i


def row_uninsert(rows, Py_ssize_t i):
    cdef list new = [list(r) for r in rows]
    cdef list row = new[i]
    cdef long x = row.pop()
    cdef long y
    cdef Py_ssize_t ri, pos
    if not row:
        new.pop()
    for ri in range(i - 1, -1, -1):
        row = new[ri]
        pos = _bisect_left(row, x) - 1
        y = row[pos]
        row[pos] = x
        x = y
    return tuple([tuple(r) for r in new]), x


def jdt_delete(rows, long x):
    cdef list new = [list(r) for r in rows]
    cdef Py_ssize_t i = -1, j = -1, t
    cdef list row
    cdef bint has_below, has_right
    cdef long below = 0, right = 0
    for t in range(len(new)):
        row = new[t]
        if x in row:
            i = t
            j = row.index(x)
            break
    if i < 0:
        return None
    while True:
        has_below = i + 1 < len(new) and j < len(<list>new[i + 1])
        has_right = j + 1 < len(<list>new[i])
        if not has_below and not has_right:
            break
        if has_below:
            below = new[i + 1][j]
        if has_right:
            right = new[i][j + 1]
        if not has_right or (has_below and below < right):
            new[i][j] = below
            i += 1
        else:
            new[i][j] = right
            j += 1
    (<list>new[i]).pop()
    if not new[i]:
        new.pop()
    return tuple([tuple(r) for r in new])


cdef inline bint _next_rgs(int *a, int *m, int n):
    cdef int i = n - 1, t
    while i > 0 and a[i] > m[i - 1]:
        i -= 1
    if i == 0:
        return False
    a[i] += 1
    m[i] = m[i - 1] if m[i - 1] > a[i] else a[i]
    for t in range(i + 1, n):
        a[t] = 0
        m[t] = m[i]
    return True


def count_constrained(int n, int min_le, int max_ge, int pin, int pin_role):
    if n == 0:
        return 1
    if n > MAXN:
        raise ValueError("ground set too large")
    cdef int a[MAXN]
    cdef int m[MAXN]
    cdef int lo[MAXN]
    cdef int hi[MAXN]
    cdef int idx, b, blocks
    cdef bint ok
    cdef long long count = 0
    for idx in range(n):
        a[idx] = 0
        m[idx] = 0
    while True:
        blocks = m[n - 1] + 1
        for b in range(blocks):
            lo[b] = 0
        for idx in range(n):
            b = a[idx]
            if lo[b] == 0:
                lo[b] = idx + 1
            hi[b] = idx + 1
        ok = True
        for b in range(blocks):
            if lo[b] > min_le or hi[b] < max_ge:
                ok = False
                break
        if ok and pin_role == PIN_MAX and hi[a[pin - 1]] != pin:
            ok = False
        if ok and pin_role == PIN_MIN and lo[a[pin - 1]] != pin:
            ok = False
        if ok:
            count += 1
        if not _next_rgs(a, m, n):
            break
    return count


def block_count_histogram(int n):
    if n == 0:
        return [1]
    if n > MAXN:
        raise ValueError("ground set too large")
    cdef int a[MAXN]
    cdef int m[MAXN]
    cdef int idx
    hist = [0] * (n + 1)
    cdef long long *counts = <long long *>malloc((n + 1) * sizeof(long long))
    try:
        for idx in range(n + 1):
            counts[idx] = 0
        for idx in range(n):
            a[idx] = 0
            m[idx] = 0
        while True:
            counts[m[n - 1] + 1] += 1
            if not _next_rgs(a, m, n):
                break
        for idx in range(n + 1):
            hist[idx] = counts[idx]
    finally:
        free(counts)
    return hist


def restricted_growth_strings(int n):
    if n == 0:
        return [()]
    cdef int a[MAXN]
    cdef int m[MAXN]
    cdef int idx
    out = []
    for idx in range(n):
        a[idx] = 0
        m[idx] = 0
    while True:
        out.append(tuple([a[idx] for idx in range(n)]))
        if not _next_rgs(a, m, n):
            break
    return out
