"""The delete-insert bijection, the map from simplified walks to marked set
partitions with a standard tableau, and the gluing constructions that
combine such images into signed, connecting and type-B partitions.

Permutations and involutions on blocks are in one-line notation over the
blocks ordered by their maxima (1-based). A pair of tableaux ``(P, Q)``
always means insertion tableau first, recording tableau second.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    EntryOutOfRange,
    InconsistentImage,
    InvalidInvolution,
    InvalidWalk,
    ShapeMismatch,
    VacTabError,
)
from .partitions import skew_cells
from .setpart import MarkedSetPartition, SetPartition, components, is_involution, standard_diagram
from .tableaux import (
    Tableau,
    add_entry,
    cell_of,
    entries,
    is_standard,
    jdt_delete,
    jdt_undelete,
    permutation_from_pair,
    relabel,
    remove_corner,
    row_insert,
    row_uninsert,
    shape_of,
    standardize,
)
from .walks import VacillatingTableau, validate


@dataclass(frozen=True)
class PsiImage:
    marked: MarkedSetPartition
    tableau: Tableau

    def __str__(self) -> str:
        return f"({self.marked}, {[list(r) for r in self.tableau]})"


@dataclass(frozen=True)
class DiImage:
    tableau: Tableau
    walk: VacillatingTableau


# delete-insert


def di_tableaux(n: int, seq: Sequence[int]) -> list[Tableau]:
    """Every intermediate tableau, one per walk position."""
    t: Tableau = (tuple(range(1, n + 1)),)
    out = [t]
    for i in seq:
        if not 1 <= i <= n:
            raise EntryOutOfRange(f"{i} is not in 1..{n}")
        t = jdt_delete(t, i)
        out.append(t)
        t, _ = row_insert(t, i)
        out.append(t)
    return out


def di_forward(n: int, seq: Sequence[int]) -> DiImage:
    tabs = di_tableaux(n, seq)
    walk = VacillatingTableau("nvac", tuple(shape_of(t) for t in tabs), n)
    return DiImage(tabs[-1], walk)


def di_backward(n: int, img: DiImage) -> list[int]:
    w = img.walk
    ok, why = validate(w)
    if not ok or w.variant != "nvac" or w.n != n or w.half:
        raise InconsistentImage(f"not an even-length {n}-vacillating walk: {why}")
    t = img.tableau
    if not t or shape_of(t) != w.final_shape or not is_standard(t) or len(entries(t)) != n:
        raise InconsistentImage("tableau must be standard of the walk's final shape")
    seq = []
    shapes = w.shapes
    for j in range(w.k, 0, -1):
        full, mid, prev = shapes[2 * j], shapes[2 * j - 1], shapes[2 * j - 2]
        (added,) = skew_cells(full, mid)
        t, x = row_uninsert(t, added)
        (removed,) = skew_cells(prev, mid)
        t = jdt_undelete(t, removed, x)
        seq.append(x)
    seq.reverse()
    if t != (tuple(range(1, n + 1)),) or di_forward(n, seq) != img:
        raise InconsistentImage("image is not in the range of the delete-insert map")
    return seq


# the walk <-> (marked partition, tableau) map


def psi_forward(w: VacillatingTableau, trace: list | None = None) -> PsiImage:
    """Map a simplified or limiting walk to its marked partition and SYT.

    When ``trace`` is a list, one ``{step, E, T, edge}`` record is appended
    per walk position (``step`` is the position index, i.e. twice the step).
    """
    ok, why = validate(w)
    if not ok:
        raise InvalidWalk(why)
    if w.variant not in ("simplified", "limiting"):
        raise InvalidWalk("psi applies to simplified and limiting walks only")
    t: Tableau = ()
    edges: list[tuple[int, int]] = []
    if trace is not None:
        trace.append({"step": 0, "E": [], "T": [], "edge": None})
    for p in range(1, len(w.shapes)):
        prev, cur = w.shapes[p - 1], w.shapes[p]
        j = (p + 1) // 2
        edge = None
        if p % 2 == 1 and cur != prev:
            (cell,) = skew_cells(prev, cur)
            t, m = row_uninsert(t, cell)
            edge = (m, j)
            edges.append(edge)
        elif p % 2 == 0 and cur != prev:
            (cell,) = skew_cells(cur, prev)
            t = add_entry(t, cell, j)
        if trace is not None:
            trace.append({"step": p, "E": [list(e) for e in edges], "T": [list(r) for r in t], "edge": edge})
    top = w.k + 1 if w.half else w.k
    part = components(range(1, top + 1), edges)
    in_t = set(entries(t))
    marked = tuple(i for i, b in enumerate(part.blocks) if b[-1] in in_t)
    return PsiImage(MarkedSetPartition(part, marked), standardize(t))


def check_psi_image(k: int, img: PsiImage, variant: str, half: bool) -> None:
    top = k + 1 if half else k
    part = img.marked.partition
    if part.ground != tuple(range(1, top + 1)):
        raise InconsistentImage(f"partition must be of 1..{top}")
    nmarked = len(img.marked.marked)
    if not is_standard(img.tableau) or len(entries(img.tableau)) != nmarked:
        raise InconsistentImage("tableau must be standard with one box per marked block")
    top_block = part.blocks.index(part.block_of(top)) if top else None
    if half and top_block in img.marked.marked:
        raise InconsistentImage("the block holding the top element must be unmarked")
    if variant == "limiting":
        need = len(part) - (1 if half else 0)
        if nmarked != need:
            raise InconsistentImage("limiting images mark every block (except the top one at odd length)")


def psi_backward(k: int, img: PsiImage, variant: str = "simplified", half: bool = False) -> VacillatingTableau:
    check_psi_image(k, img, variant, half)
    maxima = sorted(b[-1] for b in img.marked.marked_blocks)
    t = relabel(img.tableau, {i + 1: a for i, a in enumerate(maxima)})
    pred = {b: a for a, b in standard_diagram(img.marked.partition)}
    shapes = [shape_of(t)]

    def insert_pred(t: Tableau, j: int) -> Tableau:
        if j in pred:
            if cell_of(t, pred[j]) is not None:
                raise InconsistentImage(f"{pred[j]} is inserted twice")
            t, _ = row_insert(t, pred[j])
        return t

    try:
        if half:
            t = insert_pred(t, k + 1)
            shapes.append(shape_of(t))
        for j in range(k, 0, -1):
            c = cell_of(t, j)
            if c is not None:
                if not _is_corner(t, c):
                    raise InconsistentImage(f"entry {j} does not sit in a corner")
                t = remove_corner(t, c)
            shapes.append(shape_of(t))
            t = insert_pred(t, j)
            shapes.append(shape_of(t))
    except VacTabError as exc:
        raise InconsistentImage(str(exc)) from exc
    if t:
        raise InconsistentImage("reconstruction did not return to the empty tableau")
    w = VacillatingTableau(variant, tuple(reversed(shapes)))
    ok, why = validate(w)
    if not ok or psi_forward(w) != img:
        raise InconsistentImage(f"image does not come from a {variant} walk: {why}")
    return w


def _is_corner(t: Tableau, c) -> bool:
    i, j = c
    return j == len(t[i - 1]) and (i == len(t) or len(t[i]) < j)


# gluing constructions


def _sigma(t1: Tableau, t2: Tableau) -> tuple[int, ...]:
    if shape_of(t1) != shape_of(t2):
        raise ShapeMismatch(f"shapes {shape_of(t1)} and {shape_of(t2)} differ")
    return permutation_from_pair(t1, t2)


def glue_symmetric_even(img: PsiImage) -> SetPartition:
    """Symmetric partition of ``[-k]∪[k]`` built from an even-length image.

    Each marked block is joined with the negative of its partner under the
    involution read off ``(T, T)``.
    """
    sigma = _sigma(img.tableau, img.tableau)
    xs = img.marked.marked_blocks
    blocks = []
    for b in img.marked.unmarked_blocks:
        blocks += [b, [-x for x in b]]
    for i, b in enumerate(xs):
        blocks.append(list(b) + [-x for x in xs[sigma[i] - 1]])
    ground = [x for b in img.marked.partition.blocks for x in (b + tuple(-y for y in b))]
    return SetPartition.of(blocks, ground)


def glue_symmetric_odd(img: PsiImage) -> SetPartition:
    """Symmetric partition of ``[-k,k]`` from an image over ``[k+1]`` whose top block is unmarked."""
    part = img.marked.partition
    top = part.ground[-1] if part.ground else 0
    if top == 0:
        raise InconsistentImage("ground set must be 1..k+1 with k >= 0")
    if part.block_of(top) in img.marked.marked_blocks:
        raise InconsistentImage("the block holding the top element must be unmarked")
    sigma = _sigma(img.tableau, img.tableau)

    def left(x):
        return x - top

    def right(x):
        return top - x

    xs = img.marked.marked_blocks
    blocks = []
    for b in img.marked.unmarked_blocks:
        if top in b:
            blocks.append({left(x) for x in b} | {right(x) for x in b})
        else:
            blocks += [[left(x) for x in b], [right(x) for x in b]]
    for i, b in enumerate(xs):
        blocks.append([left(x) for x in b] + [right(y) for y in xs[sigma[i] - 1]])
    return SetPartition.of(blocks, range(1 - top, top))


def glue_odd_pair(img1: PsiImage, img2: PsiImage) -> SetPartition:
    """Partition of ``[k1+k2+1]`` from two images over ``[k1+1]`` and ``[k2+1]``."""
    p1, p2 = img1.marked.partition, img2.marked.partition
    top1, top2 = p1.ground[-1], p2.ground[-1]
    if len(img1.marked.marked) != len(img2.marked.marked):
        raise ShapeMismatch("images need equally many marked blocks")
    sigma = _sigma(img1.tableau, img2.tableau)
    total = top1 + top2 - 1

    def bar(y):
        return total + 1 - y

    xs, ys = img1.marked.marked_blocks, img2.marked.marked_blocks
    blocks = []
    for b in img1.marked.unmarked_blocks:
        if top1 in b:
            b = set(b) | {bar(y) for y in p2.block_of(top2)}
        blocks.append(list(b))
    for b in img2.marked.unmarked_blocks:
        if top2 not in b:
            blocks.append([bar(y) for y in b])
    for i, b in enumerate(xs):
        blocks.append(list(b) + [bar(y) for y in ys[sigma[i] - 1]])
    return SetPartition.of(blocks, range(1, total + 1))


def glue_connecting(b1: SetPartition, t1: Tableau, b2: SetPartition, t2: Tableau) -> SetPartition:
    """(k1,k2)-connecting partition of ``[k1+k2]``: block ``t`` of the first
    partition is joined with block ``sigma(t)`` of the reversed second one."""
    if len(b1) != len(b2) or len(entries(t1)) != len(b1):
        raise ShapeMismatch("both partitions need as many blocks as the tableaux have boxes")
    sigma = _sigma(t1, t2)
    k1, k2 = len(b1.ground), len(b2.ground)
    xs, ys = b1.by_max(), b2.by_max()
    blocks = [list(x) + [k1 + k2 + 1 - y for y in ys[sigma[i] - 1]] for i, x in enumerate(xs)]
    return SetPartition.of(blocks, range(1, k1 + k2 + 1))


def type_b_from(bp: SetPartition, sigma: Sequence[int]) -> SetPartition:
    """Type-B partition of ``[-k]∪[k]`` from a partition of ``[k+1]`` and an
    involution on all blocks but the one holding ``k+1``."""
    top = bp.ground[-1]
    if bp.ground != tuple(range(1, top + 1)):
        raise InvalidInvolution("ground set must be 1..k+1")
    xs = bp.by_max()
    j = len(xs) - 1
    sigma = tuple(sigma)
    if len(sigma) != j or not is_involution(sigma):
        raise InvalidInvolution(f"need an involution on {j} blocks, got {sigma}")
    blocks = []
    for a in range(1, j + 1):
        b = sigma[a - 1]
        xa = list(xs[a - 1])
        if a == b:
            blocks += [xa, [-x for x in xa]]
        else:
            blocks.append(xa + [-x for x in xs[b - 1]])
    zero = [x for x in xs[j] if x != top]
    if zero:
        blocks.append(zero + [-x for x in zero])
    return SetPartition.of(blocks, [s * x for x in range(1, top) for s in (1, -1)])


def collapse_block(b: SetPartition, sigma: Sequence[int]) -> tuple[SetPartition, tuple[int, ...], int]:
    """Drop the block holding the top element and add a new element ``star``.

    Returns ``(B', sigma', star)`` with ``star = max(ground) + 1``. Blocks
    of ``B'`` keep the indices they had in ``b``; a lone ``{star}`` block
    takes the last index. The block holding ``star`` is fixed by ``sigma'``.
    """
    xs = b.by_max()
    t = len(xs)
    sigma = tuple(sigma)
    if len(sigma) != t or not is_involution(sigma):
        raise InvalidInvolution(f"need an involution on {t} blocks, got {sigma}")
    star = b.ground[-1] + 1
    blocks = [list(x) for x in xs[:-1]]
    new_sigma = list(sigma[:-1])
    r = sigma[t - 1]
    if r == t:
        blocks.append([star])
        new_sigma.append(t)
    else:
        blocks[r - 1].append(star)
        new_sigma[r - 1] = r
    ground = [x for blk in blocks for x in blk]
    return SetPartition.of(blocks, ground), tuple(new_sigma), star


def star_order(bp: SetPartition, star: int) -> list[tuple[int, ...]]:
    """Blocks of a collapsed partition in the index order used by ``collapse_block``."""
    plain = sorted((blk for blk in bp.blocks if blk != (star,)), key=lambda blk: max(x for x in blk if x != star))
    return plain + ([(star,)] if (star,) in bp.blocks else [])
