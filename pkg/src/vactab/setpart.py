"""Set partitions over arbitrary integer ground sets, marked blocks, arc
diagrams, the signed and ordered families, and their counting numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from . import kernels
from .config import ground_bound
from .errors import BoundExceeded, OutOfDomain

Block = tuple[int, ...]


@dataclass(frozen=True)
class SetPartition:
    """Canonical form: each block ascending, blocks ordered by minimum."""

    ground: tuple[int, ...]
    blocks: tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        if any(not b for b in blocks):
            raise ValueError("blocks must be non-empty")
        elems = [x for b in blocks for x in b]
        if len(elems) != len(set(elems)):
            raise ValueError("blocks must be pairwise disjoint")
        ground = tuple(sorted(set(self.ground)))
        if sorted(elems) != list(ground):
            raise ValueError("blocks must cover the ground set exactly")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "ground", ground)

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], ground: Iterable[int] | None = None) -> "SetPartition":
        blocks = [tuple(b) for b in blocks]
        if ground is None:
            ground = [x for b in blocks for x in b]
        return cls(tuple(ground), tuple(blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return "{" + " | ".join(",".join(map(str, b)) for b in self.blocks) + "}"

    def block_of(self, x: int) -> Block:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def by_max(self) -> list[Block]:
        """Blocks ordered by their maximal elements."""
        return sorted(self.blocks, key=lambda b: b[-1])

    def maxima(self) -> list[int]:
        return sorted(b[-1] for b in self.blocks)

    def relabel(self, f) -> "SetPartition":
        return SetPartition.of(([f(x) for x in b] for b in self.blocks), [f(x) for x in self.ground])


@dataclass(frozen=True)
class MarkedSetPartition:
    """A set partition with some blocks marked.

    ``marked`` holds indices into ``partition.blocks``, ordered by block maxima.
    """

    partition: SetPartition
    marked: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.marked)) != len(self.marked):
            raise ValueError("marked blocks must be distinct")
        if any(not 0 <= i < len(self.partition.blocks) for i in self.marked):
            raise ValueError("marked index out of range")
        order = tuple(sorted(self.marked, key=lambda i: self.partition.blocks[i][-1]))
        object.__setattr__(self, "marked", order)

    @classmethod
    def of(cls, blocks, marked_blocks, ground=None) -> "MarkedSetPartition":
        p = SetPartition.of(blocks, ground)
        want = {tuple(sorted(b)) for b in marked_blocks}
        idx = tuple(i for i, b in enumerate(p.blocks) if b in want)
        if len(idx) != len(want):
            raise ValueError("marked blocks must be blocks of the partition")
        return cls(p, idx)

    @property
    def marked_blocks(self) -> list[Block]:
        return [self.partition.blocks[i] for i in self.marked]

    @property
    def unmarked_blocks(self) -> list[Block]:
        m = set(self.marked)
        return [b for i, b in enumerate(self.partition.blocks) if i not in m]

    def __str__(self) -> str:
        m = set(self.marked)
        parts = []
        for i, b in enumerate(self.partition.blocks):
            s = ",".join(map(str, b))
            parts.append(s + "*" if i in m else s)
        return "{" + " | ".join(parts) + "}"


# counting numbers


@lru_cache(maxsize=None)
def stirling2(k: int, r: int) -> int:
    """Stirling numbers of the second kind, with ``S(0,0) = 1``."""
    if k < 0 or r < 0:
        return 0
    if k == 0:
        return 1 if r == 0 else 0
    if r == 0 or r > k:
        return 0
    return r * stirling2(k - 1, r) + stirling2(k - 1, r - 1)


def bell(k: int) -> int:
    return sum(stirling2(k, r) for r in range(k + 1))


def marked_count(k: int, j: int) -> int:
    """Partitions of ``[k]`` with ``j`` marked blocks."""
    if j < 0:
        return 0
    return sum(comb(r, j) * stirling2(k, r) for r in range(k + 1))


def tilde_marked_count(k: int, j: int) -> int:
    """Partitions of ``[k]`` with ``j`` marked blocks, none holding ``k``."""
    if k < 1:
        raise OutOfDomain("the tilde count needs k >= 1")
    if j < 0:
        return 0
    return sum(comb(r, j) * stirling2(k, r + 1) for r in range(k))


def fubini(k: int) -> int:
    return sum(factorial(j) * stirling2(k, j) for j in range(k + 1))


@lru_cache(maxsize=None)
def involutions(j: int) -> int:
    """Number of involutions in the symmetric group on ``j`` letters."""
    if j < 2:
        return 1
    return involutions(j - 1) + (j - 1) * involutions(j - 2)


def binomial_transform(seq: Sequence[int]) -> list[int]:
    return [sum(comb(k, i) * seq[i] for i in range(k + 1)) for k in range(len(seq))]


def binomial_convolution(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """``c_k = sum_j C(k,j) a_j b_{k-j}``: the product of the two EGFs."""
    n = min(len(a), len(b))
    return [sum(comb(k, j) * a[j] * b[k - j] for j in range(k + 1)) for k in range(n)]


# enumeration


def _check_bound(n: int, bound: int | None) -> None:
    bound = ground_bound() if bound is None else bound
    if n > bound:
        raise BoundExceeded(f"ground set of size {n} exceeds the enumeration bound {bound}")


def _assign(elems: Sequence[int]) -> Iterator[list[list[int]]]:
    blocks: list[list[int]] = []

    def go(i: int):
        if i == len(elems):
            yield blocks
            return
        x = elems[i]
        for b in blocks:
            b.append(x)
            yield from go(i + 1)
            b.pop()
        blocks.append([x])
        yield from go(i + 1)
        blocks.pop()

    yield from go(0)


def set_partitions(ground: Iterable[int], bound: int | None = None) -> Iterator[SetPartition]:
    """All partitions of ``ground``; elements are placed in ascending order."""
    elems = sorted(set(ground))
    _check_bound(len(elems), bound)
    for blocks in _assign(elems):
        yield SetPartition(tuple(elems), tuple(tuple(b) for b in blocks))


def enumerate_partitions(ground: Iterable[int], bound: int | None = None) -> list[SetPartition]:
    return list(set_partitions(ground, bound))


def enumerate_marked(k: int, j: int) -> list[MarkedSetPartition]:
    out = []
    for p in set_partitions(range(1, k + 1)):
        for idx in combinations(range(len(p)), j):
            out.append(MarkedSetPartition(p, idx))
    return out


def enumerate_tilde_marked(k: int, j: int) -> list[MarkedSetPartition]:
    out = []
    for p in set_partitions(range(1, k + 1)):
        free = [i for i, b in enumerate(p.blocks) if k not in b]
        for idx in combinations(free, j):
            out.append(MarkedSetPartition(p, idx))
    return out


def standard_diagram(p: SetPartition) -> list[tuple[int, int]]:
    """Arcs joining consecutive elements of each block."""
    return sorted((b[i], b[i + 1]) for b in p.blocks for i in range(len(b) - 1))


def components(ground: Iterable[int], arcs: Iterable[tuple[int, int]]) -> SetPartition:
    """Connected components of the graph on ``ground`` with edge set ``arcs``."""
    parent = {x: x for x in ground}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in arcs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for x in parent:
        groups.setdefault(find(x), []).append(x)
    return SetPartition.of(groups.values(), parent)


def is_symmetric(p: SetPartition) -> bool:
    blocks = set(p.blocks)
    return all(tuple(sorted(-x for x in b)) in blocks for b in p.blocks)


def zero_blocks(p: SetPartition) -> list[Block]:
    return [b for b in p.blocks if tuple(sorted(-x for x in b)) == b]


def is_type_b(p: SetPartition) -> bool:
    return is_symmetric(p) and len(zero_blocks(p)) <= 1


def signed_ground(k: int, with_zero: bool = False) -> list[int]:
    return [x for x in range(-k, k + 1) if with_zero or x != 0]


def enumerate_symmetric(k: int, with_zero: bool = False) -> list[SetPartition]:
    """Negation-closed partitions of ``[-k]∪[k]`` or ``[-k,k]``."""
    return [p for p in set_partitions(signed_ground(k, with_zero)) if is_symmetric(p)]


def enumerate_type_b(k: int) -> list[SetPartition]:
    return [p for p in set_partitions(signed_ground(k)) if is_type_b(p)]


def enumerate_connecting(k1: int, k2: int) -> list[SetPartition]:
    """Partitions of ``[k1+k2]`` where every block meets both sides of the cut."""
    return [p for p in set_partitions(range(1, k1 + k2 + 1)) if all(b[0] <= k1 < b[-1] for b in p.blocks)]


def enumerate_ell_connecting(k: int, ell: int) -> list[SetPartition]:
    """Partitions of ``[k]`` where every block has ``min <= ell <= max``."""
    return [p for p in set_partitions(range(1, k + 1)) if all(b[0] <= ell <= b[-1] for b in p.blocks)]


def enumerate_symmetric_connecting(k: int) -> list[SetPartition]:
    """(k,k)-connecting partitions of ``[2k]`` invariant under ``i -> 2k+1-i``."""
    flip = 2 * k + 1
    out = []
    for p in enumerate_connecting(k, k):
        if p.relabel(lambda x: flip - x) == p:
            out.append(p)
    return out


def count_constrained(
    n: int, min_le: int | None = None, max_ge: int | None = None, pin: int = 0, pin_role: str | None = None
) -> int:
    """Partitions of ``[n]`` where each block has ``min <= min_le`` and
    ``max >= max_ge``; optionally ``pin`` must be the max or min of its block.
    """
    _check_bound(n, None)
    role = {None: kernels.PIN_NONE, "max": kernels.PIN_MAX, "min": kernels.PIN_MIN}[pin_role]
    lo = n if min_le is None else min_le
    hi = 1 if max_ge is None else max_ge
    return kernels.count_constrained(n, lo, hi, pin, role)


# ordered families, counted structure by structure


def count_partly_ordered(k: int, exclude_top: bool = False) -> int:
    """Partitions of ``[k]`` with a linear order on a chosen subset of blocks.

    With ``exclude_top`` the block holding ``k`` may not be chosen.
    """
    total = 0
    for p in set_partitions(range(1, k + 1)):
        free = [b for b in p.blocks if not (exclude_top and k in b)]
        for r in range(len(free) + 1):
            for chosen in combinations(free, r):
                total += sum(1 for _ in permutations(chosen))
    return total


def count_ordered(k: int) -> int:
    """Ordered set partitions of ``[k]``."""
    return sum(sum(1 for _ in permutations(p.blocks)) for p in set_partitions(range(1, k + 1)))


def count_cyclically_ordered(n: int) -> int:
    """Set partitions of ``[n]`` with a cyclic order on the blocks."""
    total = 0
    for p in set_partitions(range(1, n + 1)):
        seen = set()
        for perm in permutations(range(len(p))):
            if not perm:
                seen.add(())
                continue
            r = perm.index(0)
            seen.add(perm[r:] + perm[:r])
        total += len(seen)
    return total


def count_ordered_except_top(n: int) -> int:
    """Partitions of ``[n]`` with a linear order on all blocks but the one holding ``n``."""
    total = 0
    for p in set_partitions(range(1, n + 1)):
        rest = [b for b in p.blocks if n not in b]
        total += sum(1 for _ in permutations(rest))
    return total


def count_bicolored(k: int) -> int:
    """Partitions of ``[k]`` with each element red or blue and every block minimum red."""
    total = 0
    for p in set_partitions(range(1, k + 1)):
        mins = {b[0] for b in p.blocks}
        for colors in product((0, 1), repeat=k):
            if all(colors[x - 1] == 0 for x in mins):
                total += 1
    return total


def is_involution(perm: Sequence[int]) -> bool:
    """One-line notation, values ``1..len(perm)``."""
    return sorted(perm) == list(range(1, len(perm) + 1)) and all(perm[perm[i] - 1] == i + 1 for i in range(len(perm)))


def count_block_involutions(k: int) -> int:
    """Pairs of a partition of ``[k]`` and an involution on its blocks."""
    total = 0
    for p in set_partitions(range(1, k + 1)):
        total += sum(1 for perm in permutations(range(1, len(p) + 1)) if is_involution(perm))
    return total


def count_block_involutions_top_fixed(n: int) -> int:
    """Pairs of a partition of ``[n]`` and an involution on its blocks
    fixing the block that holds ``n``."""
    total = 0
    for p in set_partitions(range(1, n + 1)):
        top = p.by_max().index(p.block_of(n)) + 1
        total += sum(
            1 for perm in permutations(range(1, len(p) + 1)) if is_involution(perm) and perm[top - 1] == top
        )
    return total
