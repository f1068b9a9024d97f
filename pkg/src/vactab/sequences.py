"""The eight named walk-count sequences, the relations between them, and
checks against brute-force counts of the matching set-partition families.

Names: ``g``, ``g_half``, ``a``, ``a_half`` count walks (simplified and
limiting, even and odd length); ``u``, ``u_half``, ``v``, ``v_half`` count
the same walks paired with a standard tableau of their final shape.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable

from .errors import BoundExceeded, OutOfDomain, UnknownIdentity
from .config import ground_bound
from . import setpart
from .setpart import (
    bell,
    binomial_convolution,
    binomial_transform,
    fubini,
    involutions,
    marked_count,
    stirling2,
    tilde_marked_count,
)

NAMES = ("g", "g_half", "a", "a_half", "u", "u_half", "v", "v_half")
MAX_TERMS = 30

# informational only; nothing is looked up
OEIS = {
    "g": "A002872",
    "g_half": "A080337",
    "a": "A004211",
    "a_half": "A007405",
    "u": "A059099",
    "u_half": "not in OEIS",
    "v": "A000670",
    "v_half": "A000629",
}


def normalize_name(name: str) -> str:
    n = name.replace("-", "_")
    if n not in NAMES:
        raise UnknownIdentity(f"unknown sequence {name!r}; expected one of {', '.join(NAMES)}")
    return n


def _term(name: str, k: int) -> int:
    if name == "g":
        return sum(marked_count(k, j) * involutions(j) for j in range(k + 1))
    if name == "g_half":
        return sum(tilde_marked_count(k + 1, j) * involutions(j) for j in range(k + 1))
    if name == "a":
        return sum(stirling2(k, j) * involutions(j) for j in range(k + 1))
    if name == "a_half":
        return sum(stirling2(k + 1, j + 1) * involutions(j) for j in range(k + 1))
    if name == "u":
        return sum(factorial(j) * marked_count(k, j) for j in range(k + 1))
    if name == "u_half":
        return sum(factorial(j) * tilde_marked_count(k + 1, j) for j in range(k + 1))
    if name == "v":
        return fubini(k)
    return sum(factorial(j) * stirling2(k + 1, j + 1) for j in range(k + 1))


@dataclass(frozen=True)
class SequenceTable:
    name: str
    terms: tuple[int, ...]

    @property
    def oeis(self) -> str:
        return OEIS[self.name]


def generate(name: str, count: int) -> SequenceTable:
    """Terms ``k = 0 .. count-1`` from the closed sums over ``j``."""
    name = normalize_name(name)
    if not 0 <= count <= MAX_TERMS:
        raise OutOfDomain(f"count must be between 0 and {MAX_TERMS}")
    return SequenceTable(name, tuple(_term(name, k) for k in range(count)))


def terms(name: str, count: int) -> list[int]:
    return list(generate(name, count).terms)


@dataclass
class RelationReport:
    relation_id: str
    max_k: int
    passed: bool
    lhs: list[int]
    rhs: list[int]
    counterexample: int | None = None
    failures: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "relation_id": self.relation_id,
            "max_k": self.max_k,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "lhs": [str(x) for x in self.lhs],
            "rhs": [str(x) for x in self.rhs],
        }


def _bells(n: int) -> list[int]:
    return [bell(k) for k in range(n)]


def _conv(left: str, right: str):
    """``left = Bell ⊛ right``."""

    def pair(n):
        return terms(left, n), binomial_convolution(_bells(n), terms(right, n))

    return pair


def _binom(source: str, target: str):
    def pair(n):
        return terms(target, n), binomial_transform(terms(source, n))

    return pair


def _thm65(n):
    a, ah = terms("a", n + 1), terms("a_half", n)
    return a[1 : n + 1], [sum(comb(k, j) * ah[j] for j in range(k + 1)) for k in range(n)]


def _rec2k(n):
    a = terms("a", n + 1)
    return a[1 : n + 1], [sum(comb(k, j) * 2 ** (k - j) * a[j] for j in range(k + 1)) for k in range(n)]


# each maps a term count n to two lists of length n
RELATIONS: dict[str, tuple[str, Callable[[int], tuple[list[int], list[int]]]]] = {
    "thm7.1": ("g_k = sum_j C(k,j) Bell(j) a_(k-j)", _conv("g", "a")),
    "binom-g": ("g_half is the binomial transform of g", _binom("g", "g_half")),
    "binom-a": ("a_half is the binomial transform of a", _binom("a", "a_half")),
    "binom-u": ("u_half is the binomial transform of u", _binom("u", "u_half")),
    "binom-v": ("v_half is the binomial transform of v", _binom("v", "v_half")),
    "thm6.4": ("a_half is the binomial transform of a", _binom("a", "a_half")),
    "thm6.5": ("a_(k+1) = sum_j C(k,j) a_half_j", _thm65),
    "rec-2k": ("a_(k+1) = sum_j C(k,j) 2^(k-j) a_j", _rec2k),
    "conv-g-a": ("g = Bell ⊛ a", _conv("g", "a")),
    "conv-g_half-a_half": ("g_half = Bell ⊛ a_half", _conv("g_half", "a_half")),
    "conv-u-v": ("u = Bell ⊛ v", _conv("u", "v")),
    "conv-u_half-v_half": ("u_half = Bell ⊛ v_half", _conv("u_half", "v_half")),
}

BINOMIAL_PAIRS = ("binom-g", "binom-a", "binom-u", "binom-v")
CONVOLUTION_PAIRS = ("conv-g-a", "conv-g_half-a_half", "conv-u-v", "conv-u_half-v_half")


def check_relation(relation_id: str, max_k: int) -> RelationReport:
    """Compare both sides for ``k = 0 .. max_k``."""
    if relation_id not in RELATIONS:
        raise UnknownIdentity(f"unknown relation {relation_id!r}")
    if not 0 <= max_k < MAX_TERMS:
        raise OutOfDomain(f"max_k must be between 0 and {MAX_TERMS - 1}")
    lhs, rhs = RELATIONS[relation_id][1](max_k + 1)
    bad = [k for k in range(max_k + 1) if lhs[k] != rhs[k]]
    return RelationReport(relation_id, max_k, not bad, lhs, rhs, bad[0] if bad else None, bad)


# brute-force families, with the ground-set size each needs at index k
FAMILIES: dict[str, tuple[str, Callable[[int], int], Callable[[int], int]]] = {
    "g": ("symmetric partitions of [-k]∪[k]", lambda k: len(setpart.enumerate_symmetric(k)), lambda k: 2 * k),
    "g_half": (
        "symmetric partitions of [-k,k]",
        lambda k: len(setpart.enumerate_symmetric(k, with_zero=True)),
        lambda k: 2 * k + 1,
    ),
    "a": (
        "symmetric (k,k)-connecting partitions of [2k]",
        lambda k: len(setpart.enumerate_symmetric_connecting(k)),
        lambda k: 2 * k,
    ),
    "a_half": ("type-B partitions of [-k]∪[k]", lambda k: len(setpart.enumerate_type_b(k)), lambda k: 2 * k),
    "u": ("partitions of [k] with some blocks linearly ordered", setpart.count_partly_ordered, lambda k: k),
    "u_half": (
        "partitions of [k+1] with some blocks, not the top one, linearly ordered",
        lambda k: setpart.count_partly_ordered(k + 1, exclude_top=True),
        lambda k: k + 1,
    ),
    "v": ("ordered set partitions of [k]", setpart.count_ordered, lambda k: k),
    "v_half": (
        "cyclically ordered set partitions of [k+1]",
        lambda k: setpart.count_cyclically_ordered(k + 1),
        lambda k: k + 1,
    ),
}


def check_against_enumeration(name: str, max_k: int) -> RelationReport:
    """Formula terms against brute-force family sizes for ``k = 0 .. max_k``."""
    name = normalize_name(name)
    desc, count, ground = FAMILIES[name]
    if ground(max_k) > ground_bound():
        raise BoundExceeded(f"{desc} at k={max_k} needs a ground set of {ground(max_k)} > {ground_bound()}")
    lhs = terms(name, max_k + 1)
    rhs = [count(k) for k in range(max_k + 1)]
    bad = [k for k in range(max_k + 1) if lhs[k] != rhs[k]]
    return RelationReport(f"enum-{name}", max_k, not bad, lhs, rhs, bad[0] if bad else None, bad)
