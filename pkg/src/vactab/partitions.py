"""Integer partitions, Young-diagram geometry and standard-tableau counts.

Partitions are plain tuples of positive ints in weakly decreasing order; the
empty tuple is the empty partition. Cells are ``(row, col)`` pairs, 1-based,
English notation.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import CellOutsideShape
from .qpoly import QPoly, q_factorial, q_int

Partition = tuple[int, ...]
Cell = tuple[int, int]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and canonicalize (drop trailing zeros)."""
    parts = [int(p) for p in parts]
    while parts and parts[-1] == 0:
        parts.pop()
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return tuple(parts)


def is_partition(parts: Sequence[int]) -> bool:
    try:
        return make_partition(parts) == tuple(parts)
    except (ValueError, TypeError):
        return False


def size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def strip_first_part(lam: Partition) -> Partition:
    return tuple(lam[1:])


def cells(lam: Partition) -> Iterator[Cell]:
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            yield (i, j)


def contains_cell(lam: Partition, cell: Cell) -> bool:
    i, j = cell
    return 1 <= i <= len(lam) and 1 <= j <= lam[i - 1]


def addable_cells(lam: Partition) -> list[Cell]:
    out = []
    for i in range(len(lam) + 1):
        row_len = lam[i] if i < len(lam) else 0
        above = lam[i - 1] if i > 0 else None
        if above is None or row_len < above:
            out.append((i + 1, row_len + 1))
    return out


def removable_cells(lam: Partition) -> list[Cell]:
    out = []
    for i, part in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if part > below:
            out.append((i + 1, part))
    return out


def add_cell(lam: Partition, cell: Cell) -> Partition:
    i, _ = cell
    parts = list(lam)
    if i == len(parts) + 1:
        parts.append(1)
    else:
        parts[i - 1] += 1
    return tuple(parts)


def remove_cell(lam: Partition, cell: Cell) -> Partition:
    i, _ = cell
    parts = list(lam)
    parts[i - 1] -= 1
    if parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def contains(big: Partition, small: Partition) -> bool:
    """Diagram containment ``small ⊆ big``."""
    if len(small) > len(big):
        return False
    return all(s <= b for s, b in zip(small, big))


def skew_cells(big: Partition, small: Partition) -> list[Cell]:
    """Cells of ``big / small``; assumes containment."""
    out = []
    for i, part in enumerate(big, start=1):
        start = small[i - 1] if i <= len(small) else 0
        out.extend((i, j) for j in range(start + 1, part + 1))
    return out


def hook_length(lam: Partition, cell: Cell) -> int:
    if not contains_cell(lam, cell):
        raise CellOutsideShape(f"cell {cell} is not in {lam}")
    i, j = cell
    return lam[i - 1] + conjugate(lam)[j - 1] - i - j + 1


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [[part + conj[j] - i - j - 1 for j in range(part)] for i, part in enumerate(lam)]


def content(cell: Cell) -> int:
    i, j = cell
    return j - i


def b_stat(lam: Partition) -> int:
    """``sum((i - 1) * lam_i)``."""
    return sum(i * part for i, part in enumerate(lam))


@lru_cache(maxsize=None)
def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula)."""
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return factorial(size(lam)) // prod


@lru_cache(maxsize=None)
def syt_count_q(lam: Partition) -> QPoly:
    """``q^b(lam) [n]_q! / prod_u [h(u)]_q``."""
    denom = QPoly.const(1)
    for row in hook_lengths(lam):
        for h in row:
            denom = denom * q_int(h)
    return QPoly.monomial(b_stat(lam)) * q_factorial(size(lam)).exact_div(denom)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def lambda_set(n: int, k: int) -> list[Partition]:
    """Partitions of ``n`` whose first part is at least ``n - k``."""
    return [lam for lam in partitions_of(n) if (lam[0] if lam else 0) >= n - k]


def partitions_up_to(k: int) -> list[Partition]:
    """All partitions of size ``0..k``, graded then lex-decreasing."""
    return [lam for s in range(k + 1) for lam in partitions_of(s)]


def canonical_key(lam: Partition) -> tuple:
    """Sort key realizing the graded lexicographic order."""
    return (size(lam), tuple(-p for p in lam))


def hook_partition(n: int, j: int) -> Partition:
    """The shape ``(n - j, 1^j)`` with a zero first part dropped."""
    return make_partition([n - j] + [1] * j) if n - j > 0 else (1,) * j
