"""Pure-Python implementations of the hot kernels.

Same API as the compiled ``_ckernels`` module; chosen automatically when the
extension is unavailable or ``VACTAB_PURE_PYTHON`` is set.

Tableaux are passed as sequences of rows and returned as tuples of tuples.
Row indices are 0-based at this layer.
"""

from bisect import bisect_left, bisect_right

PIN_NONE = 0
PIN_MAX = 1
PIN_MIN = 2


def row_insert(rows, x):
    """Row-insert ``x``; return ``(new_rows, row_index)`` of the new box."""
    new = [list(r) for r in rows]
    i = 0
    while i < len(new):
        row = new[i]
        pos = bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            return tuple(map(tuple, new)), i
        row[pos], x = x, row[pos]
        i += 1
    new.append([x])
    return tuple(map(tuple, new)), i


def row_uninsert(rows, i):
    """Reverse bump out of the last box of row ``i``; return ``(new_rows, x)``."""
    new = [list(r) for r in rows]
    x = new[i].pop()
    if not new[i]:
        new.pop()
    for r in range(i - 1, -1, -1):
        row = new[r]
        pos = bisect_left(row, x) - 1
        row[pos], x = x, row[pos]
    return tuple(map(tuple, new)), x


def jdt_delete(rows, x):
    """Delete entry ``x`` from a partial tableau by jeu de taquin.

    Returns ``None`` when ``x`` is absent.
    """
    new = [list(r) for r in rows]
    for i, row in enumerate(new):
        if x in row:
            j = row.index(x)
            break
    else:
        return None
    while True:
        below = new[i + 1][j] if i + 1 < len(new) and j < len(new[i + 1]) else None
        right = new[i][j + 1] if j + 1 < len(new[i]) else None
        if below is None and right is None:
            break
        if right is None or (below is not None and below < right):
            new[i][j] = below
            i += 1
        else:
            new[i][j] = right
            j += 1
    new[i].pop()
    if not new[i]:
        new.pop()
    return tuple(map(tuple, new))


def _rgs(n):
    """Restricted growth strings of length ``n`` (lexicographic)."""
    if n == 0:
        yield []
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[0..i])
    while True:
        yield a
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for t in range(i + 1, n):
            a[t] = 0
            m[t] = m[i]


def count_constrained(n, min_le, max_ge, pin, pin_role):
    """Count set partitions of ``[n]`` with every block ``X`` satisfying
    ``min(X) <= min_le`` and ``max(X) >= max_ge``; if ``pin_role`` is
    ``PIN_MAX``/``PIN_MIN``, element ``pin`` must also be the max/min of its
    block.
    """
    count = 0
    for a in _rgs(n):
        blocks = (max(a) + 1) if n else 0
        lo = [0] * blocks
        hi = [0] * blocks
        seen = [False] * blocks
        for idx in range(n):
            b = a[idx]
            if not seen[b]:
                seen[b] = True
                lo[b] = idx + 1
            hi[b] = idx + 1
        if any(lo[b] > min_le or hi[b] < max_ge for b in range(blocks)):
            continue
        if pin_role == PIN_MAX and hi[a[pin - 1]] != pin:
            continue
        if pin_role == PIN_MIN and lo[a[pin - 1]] != pin:
            continue
        count += 1
    return count


def block_count_histogram(n):
    """``hist[r]`` = number of set partitions of ``[n]`` with ``r`` blocks."""
    hist = [0] * (n + 1)
    for a in _rgs(n):
        hist[(max(a) + 1) if n else 0] += 1
    return hist


def restricted_growth_strings(n):
    """All restricted growth strings of length ``n`` as tuples."""
    return [tuple(a) for a in _rgs(n)]
