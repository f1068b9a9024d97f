"""JSON encoding for every public type.

Integers that may grow large (counts, polynomial coefficients) are written
as decimal strings; rationals as ``"p/q"``. ``canonical_dumps`` gives the
byte form used for round-trip comparisons.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .bijections import DiImage, PsiImage
from .errors import VacTabError
from .partitions import is_partition
from .qpoly import QPoly
from .setpart import MarkedSetPartition, SetPartition
from .tableaux import Tableau, make_tableau
from .walks import VacillatingTableau, make_walk


class ParseError(VacTabError):
    """Input JSON does not match the expected schema."""


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


# partitions and tableaux


def partition_to_json(lam) -> list[int]:
    return [int(x) for x in lam]


def partition_from_json(data) -> tuple[int, ...]:
    if not isinstance(data, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in data):
        raise ParseError("a partition is an array of integers")
    lam = tuple(data)
    if not is_partition(lam):
        raise ParseError(f"{data} is not a weakly decreasing list of positive integers")
    return lam


def tableau_to_json(t: Tableau) -> list[list[int]]:
    return [list(r) for r in t]


def tableau_from_json(data) -> Tableau:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ParseError("a tableau is an array of rows")
    try:
        return make_tableau(data)
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from exc


def two_line_to_json(arr) -> list[list[int]]:
    return [[int(u), int(v)] for u, v in arr]


def two_line_from_json(data) -> tuple[tuple[int, int], ...]:
    try:
        return tuple((int(u), int(v)) for u, v in data)
    except (ValueError, TypeError) as exc:
        raise ParseError("a two-line array is an array of [u, v] pairs") from exc


# walks


def walk_to_json(w: VacillatingTableau) -> dict:
    out = {"variant": w.variant, "shapes": [partition_to_json(s) for s in w.shapes]}
    if w.n is not None:
        out["n"] = w.n
    return out


def walk_from_json(data) -> VacillatingTableau:
    if not isinstance(data, dict) or "variant" not in data or "shapes" not in data:
        raise ParseError("a walk is an object with 'variant' and 'shapes'")
    shapes = [partition_from_json(s) for s in data["shapes"]]
    return make_walk(data["variant"], shapes, data.get("n"))


# set partitions


def setpart_to_json(p: SetPartition) -> dict:
    return {"ground": list(p.ground), "blocks": [list(b) for b in p.blocks]}


def setpart_from_json(data) -> SetPartition:
    if not isinstance(data, dict) or "blocks" not in data:
        raise ParseError("a set partition is an object with 'blocks'")
    try:
        return SetPartition.of(data["blocks"], data.get("ground"))
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from exc


def marked_to_json(m: MarkedSetPartition) -> dict:
    out = setpart_to_json(m.partition)
    out["marked"] = list(m.marked)
    return out


def marked_from_json(data) -> MarkedSetPartition:
    p = setpart_from_json(data)
    try:
        return MarkedSetPartition(p, tuple(int(i) for i in data.get("marked", [])))
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from exc


def arcs_to_json(arcs) -> list[list[int]]:
    return [[a, b] for a, b in arcs]


# bijection images


def psi_to_json(img: PsiImage) -> dict:
    return {"partition": marked_to_json(img.marked), "tableau": tableau_to_json(img.tableau)}


def psi_from_json(data) -> PsiImage:
    if not isinstance(data, dict) or "partition" not in data or "tableau" not in data:
        raise ParseError("a psi image is an object with 'partition' and 'tableau'")
    return PsiImage(marked_from_json(data["partition"]), tableau_from_json(data["tableau"]))


def di_to_json(img: DiImage) -> dict:
    return {"tableau": tableau_to_json(img.tableau), "walk": walk_to_json(img.walk)}


def di_from_json(data) -> DiImage:
    if not isinstance(data, dict) or "tableau" not in data or "walk" not in data:
        raise ParseError("a delete-insert image is an object with 'tableau' and 'walk'")
    return DiImage(tableau_from_json(data["tableau"]), walk_from_json(data["walk"]))


# numbers


def qpoly_to_json(p: QPoly) -> list[str]:
    return p.to_json()


def qpoly_from_json(data) -> QPoly:
    try:
        return QPoly.from_json(data)
    except (ValueError, TypeError) as exc:
        raise ParseError("a q-polynomial is an array of decimal strings") from exc


def fraction_to_json(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def point_to_json(pt) -> list[str]:
    return [fraction_to_json(x) for x in pt]


def point_from_json(data) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(s) for s in data)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParseError("an evaluation point is an array of 'p/q' strings") from exc


def shape_key(mu) -> str:
    return ",".join(map(str, mu)) if mu else "0"


def value_to_json(v: Any) -> Any:
    """Generic encoder for report values."""
    if v is None or isinstance(v, (bool, str)):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return fraction_to_json(v)
    if isinstance(v, QPoly):
        return qpoly_to_json(v)
    if isinstance(v, dict):
        return {shape_key(k) if isinstance(k, tuple) else str(k): value_to_json(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [value_to_json(x) for x in v]
    if isinstance(v, SetPartition):
        return setpart_to_json(v)
    raise TypeError(f"cannot encode {type(v).__name__}")
