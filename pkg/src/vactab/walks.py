"""Vacillating tableaux as walks on Young's lattice.

Three variants share one data type. Position ``i`` of ``shapes`` is step
``i/2``: odd positions follow a removal step, even positions an addition
step. A walk of length ``2k`` has ``2k+1`` shapes; length ``2k+1`` ends
right after a removal step.

``nvac``
    starts at the one-row shape ``(n)``; every step moves exactly one box.
``simplified``
    starts at the empty shape; every step moves at most one box.
``limiting``
    like ``simplified`` but addition steps must add exactly one box.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .config import walk_bound
from .errors import BoundExceeded, InvalidWalk, UnsupportedVariant
from .partitions import (
    Partition,
    add_cell,
    addable_cells,
    canonical_key,
    contains,
    is_partition,
    remove_cell,
    removable_cells,
    size,
    syt_count,
)
from .setpart import stirling2, marked_count, tilde_marked_count

VARIANTS = ("nvac", "simplified", "limiting")
ALIASES = {"svt": "simplified", "lvt": "limiting", "nvac": "nvac"}


def normalize_variant(name: str) -> str:
    v = ALIASES.get(name, name)
    if v not in VARIANTS:
        raise UnsupportedVariant(f"unknown variant {name!r}")
    return v


@dataclass(frozen=True)
class VacillatingTableau:
    variant: str
    shapes: tuple[Partition, ...]
    n: int | None = None

    @property
    def length(self) -> int:
        return len(self.shapes) - 1

    @property
    def k(self) -> int:
        return self.length // 2

    @property
    def half(self) -> bool:
        return self.length % 2 == 1

    @property
    def final_shape(self) -> Partition:
        return self.shapes[-1]

    def validate(self) -> tuple[bool, str]:
        return validate(self)

    def render(self) -> str:
        return " → ".join("∅" if not s else "(" + ",".join(map(str, s)) + ")" for s in self.shapes)


def _step_ok(prev: Partition, cur: Partition, removing: bool, exact: bool) -> bool:
    if cur == prev:
        return not exact
    if removing:
        return contains(prev, cur) and size(prev) == size(cur) + 1
    return contains(cur, prev) and size(cur) == size(prev) + 1


def validate(w: VacillatingTableau) -> tuple[bool, str]:
    """Check the variant's rules; the diagnostic names the first bad step."""
    if w.variant not in VARIANTS:
        return False, f"unknown variant {w.variant!r}"
    if not w.shapes:
        return False, "a walk needs at least one shape"
    for i, s in enumerate(w.shapes):
        if not is_partition(s):
            return False, f"position {i}: {s!r} is not a partition"
    if w.variant == "nvac":
        if w.n is None or w.n < 1:
            return False, "nvac walks need n >= 1"
        start: Partition = (w.n,)
    else:
        start = ()
    if w.shapes[0] != start:
        return False, f"position 0: walk must start at {start}"
    for i in range(1, len(w.shapes)):
        removing = i % 2 == 1
        exact = w.variant == "nvac" or (w.variant == "limiting" and not removing)
        if not _step_ok(w.shapes[i - 1], w.shapes[i], removing, exact):
            kind = "remove" if removing else "add"
            amount = "exactly one box" if exact else "at most one box"
            return False, f"step {i / 2:g}: must {kind} {amount}"
    return True, "ok"


def make_walk(variant: str, shapes, n: int | None = None) -> VacillatingTableau:
    variant = normalize_variant(variant)
    w = VacillatingTableau(variant, tuple(tuple(s) for s in shapes), n if variant == "nvac" else None)
    ok, why = validate(w)
    if not ok:
        raise InvalidWalk(why)
    return w


def _moves(shape: Partition, removing: bool, variant: str) -> list[Partition]:
    """Successor shapes in a fixed order: stay first, then by row."""
    out = []
    exact = variant == "nvac" or (variant == "limiting" and not removing)
    if not exact:
        out.append(shape)
    if removing:
        out.extend(remove_cell(shape, c) for c in removable_cells(shape))
    else:
        out.extend(add_cell(shape, c) for c in addable_cells(shape))
    return out


def _start(variant: str, n: int | None) -> Partition:
    if variant == "nvac":
        if n is None or n < 1:
            raise ValueError("nvac walks need n >= 1")
        return (n,)
    return ()


def _steps(k: int, half: bool) -> int:
    return 2 * k + (1 if half else 0)


def enumerate_walks(
    variant: str,
    k: int,
    half: bool = False,
    final_shape: Partition | None = None,
    n: int | None = None,
    bound: int | None = None,
) -> list[VacillatingTableau]:
    """All walks of length ``2k`` (or ``2k+1``) ending at ``final_shape``."""
    variant = normalize_variant(variant)
    bound = walk_bound() if bound is None else bound
    if k > bound:
        raise BoundExceeded(f"k={k} exceeds the enumeration bound {bound}")
    total = _steps(k, half)
    start = _start(variant, n)
    target = None if final_shape is None else tuple(final_shape)
    # prune with backward reachability so only walks that hit the target are built
    reach = _backward_reachable(variant, total, start, target)
    out: list[VacillatingTableau] = []
    path = [start]

    def go(i: int) -> None:
        if i == total:
            out.append(VacillatingTableau(variant, tuple(path), n if variant == "nvac" else None))
            return
        for nxt in _moves(path[-1], (i + 1) % 2 == 1, variant):
            if reach is not None and nxt not in reach[i + 1]:
                continue
            path.append(nxt)
            go(i + 1)
            path.pop()

    go(0)
    return out


def _backward_reachable(variant, total, start, target):
    if target is None:
        return None
    layers = [dict.fromkeys([start])]
    for i in range(total):
        nxt: dict = {}
        for s in layers[-1]:
            for t in _moves(s, (i + 1) % 2 == 1, variant):
                nxt[t] = None
        layers.append(nxt)
    good = [set() for _ in range(total + 1)]
    if target in layers[total]:
        good[total].add(target)
    for i in range(total - 1, -1, -1):
        for s in layers[i]:
            if any(t in good[i + 1] for t in _moves(s, (i + 1) % 2 == 1, variant)):
                good[i].add(s)
    return good


def count_dp(variant: str, k: int, half: bool = False, n: int | None = None) -> dict[Partition, int]:
    """Number of walks ending at each reachable shape (layered transfer)."""
    variant = normalize_variant(variant)
    layer: dict[Partition, int] = {_start(variant, n): 1}
    for i in range(_steps(k, half)):
        removing = (i + 1) % 2 == 1
        nxt: dict[Partition, int] = defaultdict(int)
        for shape, c in layer.items():
            for t in _moves(shape, removing, variant):
                nxt[t] += c
        layer = nxt
    return {s: layer[s] for s in sorted(layer, key=canonical_key)}


def count_formula(variant: str, k: int, half: bool, shape: Partition) -> int:
    """Closed form for the simplified and limiting variants."""
    variant = normalize_variant(variant)
    shape = tuple(shape)
    j = size(shape)
    f = syt_count(shape)
    if variant == "simplified":
        return (tilde_marked_count(k + 1, j) if half else marked_count(k, j)) * f
    if variant == "limiting":
        return (stirling2(k + 1, j + 1) if half else stirling2(k, j)) * f
    raise UnsupportedVariant("n-vacillating walks have no closed form here; use count_dp")


def m_special(n: int, k: int) -> tuple[int, int]:
    """Walk counts to the one-row and one-column shapes of size ``n``."""
    one_row = sum(stirling2(k, j) for j in range(1, n + 1))
    one_col = stirling2(k, n) + stirling2(k, n - 1)
    return one_row, one_col

