"""Young tableaux, RSK row insertion, jeu de taquin deletion and Knuth's RSK.

A tableau is a tuple of rows, each a tuple of ints (English notation); the
empty tableau is ``()``. All operations return new tableaux.
"""

from __future__ import annotations

from itertools import chain
from typing import Iterator, Sequence

from . import kernels
from .errors import (
    EntryNotPresent,
    InvalidRecordingTableau,
    NotACorner,
    ShapeMismatch,
)
from .partitions import Cell, Partition, removable_cells

Tableau = tuple[tuple[int, ...], ...]
TwoLineArray = tuple[tuple[int, int], ...]


def make_tableau(rows: Sequence[Sequence[int]]) -> Tableau:
    t = tuple(tuple(int(x) for x in row) for row in rows if len(row))
    shape_of(t)
    return t


def shape_of(t: Tableau) -> Partition:
    lens = tuple(len(r) for r in t)
    if any(lens[i] < lens[i + 1] for i in range(len(lens) - 1)) or 0 in lens:
        raise ValueError(f"row lengths {lens} do not form a partition")
    return lens


def entries(t: Tableau) -> list[int]:
    return list(chain.from_iterable(t))


def cell_of(t: Tableau, x: int) -> Cell | None:
    for i, row in enumerate(t, start=1):
        if x in row:
            return (i, row.index(x) + 1)
    return None


def is_semistandard(t: Tableau) -> bool:
    for i, row in enumerate(t):
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if i and any(t[i - 1][j] >= row[j] for j in range(len(row))):
            return False
    return True


def is_partial(t: Tableau) -> bool:
    ent = entries(t)
    return is_semistandard(t) and len(set(ent)) == len(ent)


def is_standard(t: Tableau) -> bool:
    return is_partial(t) and sorted(entries(t)) == list(range(1, len(entries(t)) + 1))


def standardize(t: Tableau) -> Tableau:
    """Relabel distinct entries by ``1..N`` preserving their order."""
    rank = {x: r for r, x in enumerate(sorted(entries(t)), start=1)}
    return tuple(tuple(rank[x] for x in row) for row in t)


def relabel(t: Tableau, mapping) -> Tableau:
    return tuple(tuple(mapping[x] for x in row) for row in t)


def add_entry(t: Tableau, cell: Cell, x: int) -> Tableau:
    """Place ``x`` in the addable ``cell`` (no validation of order)."""
    i, _ = cell
    rows = list(t)
    if i == len(rows) + 1:
        rows.append((x,))
    else:
        rows[i - 1] = rows[i - 1] + (x,)
    return tuple(rows)


def remove_corner(t: Tableau, cell: Cell) -> Tableau:
    i, _ = cell
    rows = list(t)
    rows[i - 1] = rows[i - 1][:-1]
    if not rows[i - 1]:
        rows.pop()
    return tuple(rows)


def row_insert(t: Tableau, x: int) -> tuple[Tableau, Cell]:
    """``x -> T``: returns the new tableau and the cell it created."""
    new, i = kernels.row_insert(t, x)
    return new, (i + 1, len(new[i]))


def row_uninsert(t: Tableau, cell: Cell) -> tuple[Tableau, int]:
    """Inverse of :func:`row_insert` from the corner ``cell``."""
    if cell not in removable_cells(shape_of(t)):
        raise NotACorner(f"{cell} is not a removable corner of shape {shape_of(t)}")
    return kernels.row_uninsert(t, cell[0] - 1)


def jdt_delete(t: Tableau, x: int) -> Tableau:
    """Remove ``x`` from a partial tableau by sliding the hole to a corner."""
    out = kernels.jdt_delete(t, x)
    if out is None:
        raise EntryNotPresent(f"{x} is not an entry of {t}")
    return out


def jdt_undelete(t: Tableau, cell: Cell, x: int) -> Tableau:
    """Reverse slide: open the outer corner ``cell`` and slide the hole
    up/left (larger neighbour first) until ``x`` fits; inverse of
    :func:`jdt_delete`.
    """
    rows = [list(r) for r in t]
    i, j = cell[0] - 1, cell[1] - 1
    if i == len(rows):
        rows.append([])
    rows[i].append(None)
    while True:
        up = rows[i - 1][j] if i > 0 else None
        left = rows[i][j - 1] if j > 0 else None
        cand = max((v for v in (up, left) if v is not None), default=None)
        if cand is None or cand < x:
            break
        if cand == up:
            rows[i][j] = up
            i -= 1
        else:
            rows[i][j] = left
            j -= 1
    rows[i][j] = x
    return tuple(tuple(r) for r in rows)


def rsk(arr: Sequence[tuple[int, int]]) -> tuple[Tableau, Tableau]:
    """Knuth's correspondence; returns ``(P, Q)``."""
    arr = [tuple(p) for p in arr]
    if any(arr[i] > arr[i + 1] for i in range(len(arr) - 1)):
        raise ValueError("two-line array is not in lexicographic order")
    p: Tableau = ()
    q: Tableau = ()
    for u, v in arr:
        p, cell = row_insert(p, v)
        q = add_entry(q, cell, u)
    return p, q


def inverse_rsk(p: Tableau, q: Tableau) -> TwoLineArray:
    if shape_of(p) != shape_of(q):
        raise ShapeMismatch(f"shapes {shape_of(p)} and {shape_of(q)} differ")
    if not is_semistandard(p):
        raise ValueError("insertion tableau is not semistandard")
    if not is_semistandard(q):
        raise InvalidRecordingTableau("recording tableau is not semistandard")
    pairs = []
    while q:
        top = max(entries(q))
        # rightmost occurrence of the largest entry
        cell = max(((i, r.index(top) + r.count(top)) for i, r in enumerate(q, start=1) if top in r),
                   key=lambda c: c[1])
        p, v = row_uninsert(p, cell)
        q = remove_corner(q, cell)
        pairs.append((top, v))
    return tuple(reversed(pairs))


def permutation_from_pair(t1: Tableau, t2: Tableau) -> tuple[int, ...]:
    """One-line permutation whose insertion tableau is ``t1`` and recording
    tableau is ``t2``."""
    if shape_of(t1) != shape_of(t2):
        raise ShapeMismatch(f"shapes {shape_of(t1)} and {shape_of(t2)} differ")
    return tuple(v for _, v in inverse_rsk(t1, t2))


def rsk_permutation(perm: Sequence[int]) -> tuple[Tableau, Tableau]:
    return rsk([(i, v) for i, v in enumerate(perm, start=1)])


def standard_tableaux(shape: Partition) -> Iterator[Tableau]:
    """All SYT of ``shape``, by placing the largest entry in each corner."""
    n = sum(shape)
    if n == 0:
        yield ()
        return
    for cell in removable_cells(shape):
        i = cell[0]
        smaller = list(shape)
        smaller[i - 1] -= 1
        if smaller[-1] == 0:
            smaller.pop()
        for t in standard_tableaux(tuple(smaller)):
            yield add_entry(t, cell, n)


def semistandard_tableaux(shape: Partition, m: int) -> Iterator[Tableau]:
    """All SSYT of ``shape`` with entries in ``1..m`` (row-by-row backtracking)."""
    if len(shape) > m:
        return
    rows: list[list[int]] = []

    def fill_row(i: int, row: list[int]) -> Iterator[Tableau]:
        if len(row) == shape[i]:
            rows.append(row)
            if i + 1 == len(shape):
                yield tuple(tuple(r) for r in rows)
            else:
                yield from fill_row(i + 1, [])
            rows.pop()
            return
        j = len(row)
        lo = row[-1] if row else 1
        if i:
            lo = max(lo, rows[i - 1][j] + 1)
        for x in range(lo, m + 1):
            yield from fill_row(i, row + [x])

    if not shape:
        yield ()
        return
    yield from fill_row(0, [])
