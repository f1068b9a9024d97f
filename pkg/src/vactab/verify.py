"""Catalog of identities with a uniform runner.

Every entry evaluates a left side and a right side exactly. The right side
may be a single value or a dict of independent evaluations (closed sum,
brute force, bijective count); the entry passes when every one of them
equals the left side.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial
from typing import Callable

from . import sequences, setpart, symfunc
from .bijections import collapse_block
from .config import ground_bound, walk_bound
from .errors import OutOfDomain, UnknownIdentity, VacTabError
from .partitions import partitions_up_to, syt_count
from .setpart import bell, marked_count, stirling2, tilde_marked_count
from .walks import count_dp, count_formula, enumerate_walks, m_special


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    statement: str
    domain: str
    params: tuple[str, ...]
    fixtures: tuple[dict, ...]
    evaluate: Callable[[dict], tuple[object, object]] = field(repr=False)
    check: Callable[[dict], None] = field(repr=False, default=lambda p: None)


@dataclass
class VerificationReport:
    id: str
    params: dict
    status: str
    lhs: object
    rhs: object
    elapsed_ms: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        from .serialize import value_to_json

        return {
            "id": self.id,
            "params": {k: value_to_json(v) for k, v in self.params.items()},
            "status": self.status,
            "lhs": value_to_json(self.lhs),
            "rhs": value_to_json(self.rhs),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


# helpers


def _nonneg(*names):
    def check(p):
        for n in names:
            if p.get(n) is None:
                raise OutOfDomain(f"missing parameter {n}")
            if int(p[n]) < 0:
                raise OutOfDomain(f"{n} must be nonnegative")

    return check


def _positive(first: tuple, rest: tuple = ()):
    base = _nonneg(*first, *rest)

    def check(p):
        base(p)
        for n in first:
            if int(p[n]) < 1:
                raise OutOfDomain(f"{n} must be positive")

    return check


def _all(*checks):
    def check(p):
        for c in checks:
            c(p)

    return check


def _bounded(name: str, limit_fn: Callable[[], int]):
    def check(p):
        if int(p[name]) > limit_fn():
            raise OutOfDomain(f"{name}={p[name]} exceeds the bound {limit_fn()}")

    return check


def _shape_sum(a: dict, b: dict) -> int:
    return sum(c * b.get(mu, 0) for mu, c in a.items())


def _weighted(counts: dict) -> int:
    return sum(c * syt_count(mu) for mu, c in counts.items())


def _total(counts: dict) -> int:
    return sum(counts.values())


def _jsum(n, f1, f2, weight=factorial):
    return sum(weight(j) * f1(j) * f2(j) for j in range(n + 1))


# walk tables; ``half`` shifts length by one step


def _g(k, half=False):
    return count_dp("simplified", k, half=half)


def _a(k, half=False):
    return count_dp("limiting", k, half=half)


# Schur-Weyl counts


def _eq21(p):
    n, k = int(p["n"]), int(p["k"])
    return _weighted(count_dp("nvac", k, n=n)), n**k


def _cor23(p):
    n, k = int(p["n"]), int(p["k"])
    return _weighted(count_dp("nvac", k, half=True, n=n)), n**k


def _eq27(p):
    n, k = int(p["n"]), int(p["k"])
    dp = count_dp("nvac", k, n=n)
    return (dp.get((n,), 0), dp.get((1,) * n, 0)), m_special(n, k)


# per-shape formulas


def _shape_formula(variant: str, half: bool):
    def ev(p):
        k = int(p["k"])
        shapes = [tuple(p["shape"])] if p.get("shape") is not None else partitions_up_to(k + 1)
        walks = {}
        if k <= walk_bound():
            for w in enumerate_walks(variant, k, half=half):
                walks[w.final_shape] = walks.get(w.final_shape, 0) + 1
        else:
            walks = count_dp(variant, k, half=half)
        lhs = {mu: walks.get(mu, 0) for mu in shapes}
        rhs = {mu: count_formula(variant, k, half, mu) for mu in shapes}
        if len(shapes) == 1:
            return lhs[shapes[0]], rhs[shapes[0]]
        return lhs, rhs

    return ev


# product sums over final shapes


def _bt(k, j):
    return tilde_marked_count(k, j)


def _products(kind: str):
    """Shape-sum, j-sum and brute-force count for one product formula."""

    def ev(p):
        k1, k2 = int(p["k1"]), int(p["k2"])
        cc = setpart.count_constrained
        if kind == "eq3.4":
            lhs = _shape_sum(_g(k1), _g(k2))
            j = _jsum(min(k1, k2), lambda j: marked_count(k1, j), lambda j: marked_count(k2, j))
            brute = cc(k1 + k2)
            return lhs, {"j-sum": j, "brute": brute, "bell": bell(k1 + k2)}
        if kind == "thm4.1":
            lhs = _shape_sum(_g(k1, True), _g(k2, True))
            j = _jsum(min(k1, k2), lambda j: _bt(k1 + 1, j), lambda j: _bt(k2 + 1, j))
            return lhs, {"j-sum": j, "brute": cc(k1 + k2 + 1), "bell": bell(k1 + k2 + 1)}
        if kind == "thm4.2":
            lhs = _shape_sum(_g(k1, True), _g(k2))
            j = _jsum(min(k1, k2), lambda j: _bt(k1 + 1, j), lambda j: marked_count(k2, j))
            return lhs, {"j-sum": j, "brute": cc(k1 + k2 + 1, pin=k1 + 1, pin_role="max")}
        if kind == "thm5.1":
            lhs = _shape_sum(_a(k1), _a(k2))
            j = _jsum(min(k1, k2), lambda j: stirling2(k1, j), lambda j: stirling2(k2, j))
            return lhs, {"j-sum": j, "brute": cc(k1 + k2, min_le=k1, max_ge=k1 + 1)}
        if kind == "thm6.1":
            lhs = _shape_sum(_a(k1, True), _a(k2, True))
            j = _jsum(min(k1, k2), lambda j: stirling2(k1 + 1, j + 1), lambda j: stirling2(k2 + 1, j + 1))
            return lhs, {"j-sum": j, "brute": cc(k1 + k2 + 1, min_le=k1 + 1, max_ge=k1 + 1)}
        if kind == "cor6.2.i":
            lhs = _shape_sum(_a(k1, True), _a(k2))
            j = _jsum(min(k1, k2), lambda j: stirling2(k1 + 1, j + 1), lambda j: stirling2(k2, j))
            brute = cc(k1 + k2 + 1, min_le=k1 + 1, max_ge=k1 + 1, pin=k1 + 1, pin_role="max")
            return lhs, {"j-sum": j, "brute": brute}
        if kind == "cor6.2.ii":
            lhs = _shape_sum(_g(k1), _a(k2))
            other = _shape_sum(_g(k1 - 1, True), _a(k2, True))
            j1 = _jsum(min(k1, k2), lambda j: marked_count(k1, j), lambda j: stirling2(k2, j))
            j2 = _jsum(min(k1, k2), lambda j: _bt(k1, j), lambda j: stirling2(k2 + 1, j + 1))
            brute = cc(k1 + k2, min_le=k1)
            return lhs, {"odd-shape-sum": other, "j-sum": j1, "odd-j-sum": j2, "brute": brute}
        if kind == "cor6.2.iii":
            lhs = _shape_sum(_g(k1, True), _a(k2))
            j = _jsum(min(k1, k2), lambda j: _bt(k1 + 1, j), lambda j: stirling2(k2, j))
            return lhs, {"j-sum": j, "brute": cc(k1 + k2 + 1, min_le=k1 + 1, pin=k1 + 1, pin_role="max")}
        if kind == "cor6.2.iv":
            lhs = _shape_sum(_g(k1), _a(k2, True))
            j = _jsum(min(k1, k2), lambda j: marked_count(k1, j), lambda j: stirling2(k2 + 1, j + 1))
            return lhs, {"j-sum": j, "brute": cc(k1 + k2 + 1, min_le=k1 + 1, pin=k1 + 1, pin_role="min")}
        raise AssertionError(kind)

    return ev


# totals against brute-force families


def _thm32(p):
    k = int(p["k"])
    return _total(_g(k)), len(setpart.enumerate_symmetric(k))


def _thm33(p):
    k = int(p["k"])
    formula = sum(factorial(j) * marked_count(k, j) for j in range(k + 1))
    return _weighted(_g(k)), {"j-sum": formula, "brute": setpart.count_partly_ordered(k)}


def _thm43(p):
    k = int(p["k"])
    return _total(_g(k, True)), len(setpart.enumerate_symmetric(k, with_zero=True))


def _uhalf_a(p):
    k = int(p["k"])
    formula = sum(factorial(j) * _bt(k + 1, j) for j in range(k + 1))
    return _weighted(_g(k, True)), {
        "j-sum": formula,
        "brute": setpart.count_partly_ordered(k + 1, exclude_top=True),
    }


def _relation(rel_ids):
    def ev(p):
        max_k = int(p["max_k"])
        lhs, rhs = {}, {}
        for r in rel_ids:
            rep = sequences.check_relation(r, max_k)
            lhs[r], rhs[r] = rep.lhs, rep.rhs
        return lhs, rhs

    return ev


def _thm52(p):
    k = int(p["k"])
    formula = sum(stirling2(k, j) * setpart.involutions(j) for j in range(k + 1))
    return _total(_a(k)), {
        "j-sum": formula,
        "bicolored": setpart.count_bicolored(k),
        "block-involutions": setpart.count_block_involutions(k),
    }


def _cor53(p):
    k = int(p["k"])
    return _total(_a(k)), len(setpart.enumerate_symmetric_connecting(k))


def _thm54(p):
    k = int(p["k"])
    return _weighted(_a(k)), {"fubini": setpart.fubini(k), "brute": setpart.count_ordered(k)}


def _thm63(p):
    k = int(p["k"])
    formula = sum(stirling2(k + 1, j + 1) * setpart.involutions(j) for j in range(k + 1))
    return _total(_a(k, True)), {
        "j-sum": formula,
        "block-involutions": setpart.count_block_involutions_top_fixed(k + 1),
    }


def _thm65(p):
    """Collapsing the top block is injective and hits every odd structure once."""
    k = int(p["k"])
    inputs, images = 0, set()
    for b in setpart.set_partitions(range(1, k + 2)):
        for sigma in permutations(range(1, len(b) + 1)):
            if not setpart.is_involution(sigma):
                continue
            inputs += 1
            top = b.block_of(k + 1)
            images.add((top, collapse_block(b, sigma)))
    ah = sequences.terms("a_half", k + 1)
    formula = sum(comb(k, j) * ah[j] for j in range(k + 1))
    return inputs, {"j-sum": formula, "collapse-images": len(images)}


def _thm67(p):
    k = int(p["k"])
    return _total(_a(k, True)), len(setpart.enumerate_type_b(k))


def _thm68(p):
    k = int(p["k"])
    formula = sum(factorial(j) * stirling2(k + 1, j + 1) for j in range(k + 1))
    return _weighted(_a(k, True)), {
        "j-sum": formula,
        "cyclic": setpart.count_cyclically_ordered(k + 1),
        "ordered-except-top": setpart.count_ordered_except_top(k + 1),
    }


# symmetric-function identities


def _points(identity_id: str, p: dict) -> list[tuple[Fraction, ...]]:
    m = int(p["m"])
    d = max(int(p["k"]), symfunc.degree_bound(identity_id, p))
    if m <= 2:
        return [tuple(Fraction(x) for x in pt) for pt in product(range(d + 1), repeat=m)]
    rng = random.Random(f"{identity_id}:{sorted(p.items())}")
    count = int(p.get("points", 5))
    return [tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(m)) for _ in range(count)]


def _pointwise(identity_id: str):
    def ev(p):
        pts = _points(identity_id, p)
        lhs = [symfunc.identity_side(identity_id, "LHS", p, pt) for pt in pts]
        rhs = [symfunc.identity_side(identity_id, "RHS", p, pt) for pt in pts]
        return lhs, rhs

    return ev


def _qmode(identity_id: str):
    def ev(p):
        return symfunc.identity_side(identity_id, "LHS", p), symfunc.identity_side(identity_id, "RHS", p)

    return ev


_K = _nonneg("k")
_K12 = _nonneg("k1", "k2")
_NK = _all(_positive(("n",), ("k",)))
_NK1 = _all(_positive(("n",)), _positive(("k",)))
_MAXK = _all(_nonneg("max_k"), _bounded("max_k", lambda: sequences.MAX_TERMS - 1))


def _ground(limit: Callable[[dict], int]):
    def check(p):
        if limit(p) > ground_bound():
            raise OutOfDomain(f"brute force needs a ground set of {limit(p)} > {ground_bound()}")

    return check


def _grid(ks=range(6), ns=None, extra=None):
    out = []
    for k in ks:
        for n in ns or [None]:
            d = {"k": k}
            if n is not None:
                d["n"] = n
            if extra:
                d.update(extra)
            out.append(d)
    return tuple(out)


def _pairs(limit: int, lo1: int = 0):
    return tuple({"k1": a, "k2": b} for a in range(lo1, limit + 1) for b in range(limit + 1) if a + b <= limit)


def _entries() -> list[IdentityEntry]:
    E = IdentityEntry
    nk = tuple({"n": n, "k": k} for n in range(1, 7) for k in range(6))
    nk1 = tuple({"n": n, "k": k} for n in range(1, 6) for k in range(1, 6))
    pw = lambda ks, ms=(1, 2, 3, 4): tuple({"k": k, "m": m} for k in ks for m in ms)  # noqa: E731
    pwn = lambda ns, ks, ms=(1, 2, 3, 4): tuple(  # noqa: E731
        {"n": n, "k": k, "m": m} for n in ns for k in ks for m in ms
    )
    prod_check = _all(_K12, _ground(lambda p: int(p["k1"]) + int(p["k2"]) + 1))
    shape_check = _all(_K, _bounded("k", lambda: 9))
    return [
        E("eq2.1", "sum over shapes of f^λ times the n-vacillating count equals n^k", "n >= 1, k >= 0",
          ("n", "k"), nk, _eq21, _NK),
        E("cor2.3", "the odd-length version of the same sum also equals n^k", "n >= 1, k >= 0",
          ("n", "k"), nk, _cor23, _NK),
        E("eq2.7", "walks to the one-row shape number sum_{j<=n} S(k,j); to the one-column shape "
          "S(k,n)+S(k,n-1)", "n >= 1, k >= 1", ("n", "k"), nk1, _eq27, _NK1),
        E("thm3.1", "simplified walks of length 2k to μ number B(k,|μ|) f^μ", "k >= 0, optional shape",
          ("k", "shape"), _grid(range(6)) + ({"k": 3, "shape": (2, 1)},), _shape_formula("simplified", False),
          shape_check),
        E("eq3.4", "sum_μ g_k1(μ) g_k2(μ) is the Bell number of k1+k2", "k1, k2 >= 0", ("k1", "k2"),
          _pairs(8), _products("eq3.4"), prod_check),
        E("thm3.2", "g_k counts symmetric partitions of [-k]∪[k]", "0 <= k <= 6", ("k",), _grid(range(6)),
          _thm32, _all(_K, _ground(lambda p: 2 * int(p["k"])))),
        E("thm3.3", "u_k = sum_j j! B(k,j) counts partitions with some blocks linearly ordered", "k >= 0",
          ("k",), _grid(range(7)), _thm33, _all(_K, _ground(lambda p: int(p["k"])))),
        E("thm3.4", "sum_μ g_k(μ) s_μ = sum_j B(k,j) h_1^j", "k >= 0, m >= 1 variables", ("k", "m"),
          pw(range(5)), _pointwise("thm3.4"), _positive(("m",), ("k",))),
        E("eq3.6", "principal specialization of the previous identity", "k >= 0, m >= 1", ("k", "m"),
          pw(range(5), (1, 2, 3)), _qmode("eq3.6"), _positive(("m",), ("k",))),
        E("thm3.5", "sum_λ m_{n,k}^λ s_λ = sum_j S(k,j) h_(n-j,1^j)", "n >= 1, k >= 0, m >= 1",
          ("n", "k", "m"), pwn(range(1, 5), range(5)) + ({"n": 6, "k": 3, "m": 4},), _pointwise("thm3.5"),
          _positive(("n", "m"), ("k",))),
        E("eq3.9", "principal specialization of the previous identity", "n >= 1, k >= 0, m >= 1",
          ("n", "k", "m"), pwn(range(1, 5), range(5), (1, 2, 3)), _qmode("eq3.9"),
          _positive(("n", "m"), ("k",))),
        E("eq4.1", "simplified walks of length 2k+1 to μ number B~(k+1,|μ|) f^μ", "k >= 0, optional shape",
          ("k", "shape"), _grid(range(6)), _shape_formula("simplified", True), shape_check),
        E("thm4.1", "sum_μ g_{k1+1/2}(μ) g_{k2+1/2}(μ) is the Bell number of k1+k2+1", "k1, k2 >= 0",
          ("k1", "k2"), _pairs(8), _products("thm4.1"), prod_check),
        E("thm4.2", "sum_μ g_{k1+1/2}(μ) g_k2(μ) counts partitions of [k1+k2+1] with k1+1 a block maximum",
          "k1, k2 >= 0", ("k1", "k2"), _pairs(8), _products("thm4.2"), prod_check),
        E("thm4.3", "g_{k+1/2} counts symmetric partitions of [-k,k]", "0 <= k <= 5", ("k",), _grid(range(5)),
          _thm43, _all(_K, _ground(lambda p: 2 * int(p["k"]) + 1))),
        E("u-half-a", "u_{k+1/2} = sum_j j! B~(k+1,j) counts partly ordered partitions avoiding the top block",
          "k >= 0", ("k",), _grid(range(6)), _uhalf_a, _all(_K, _ground(lambda p: int(p["k"]) + 1))),
        E("u-half-b", "u_{k+1/2} is the binomial transform of u_k", "max_k <= 29", ("max_k",),
          ({"max_k": 8},), _relation(["binom-u"]), _MAXK),
        E("thm4.5", "sum_μ g_{k+1/2}(μ) s_μ = sum_j B~(k+1,j) h_1^j", "k >= 0, m >= 1", ("k", "m"),
          pw(range(5)), _pointwise("thm4.5"), _positive(("m",), ("k",))),
        E("thm4.6", "sum_λ m_{n,k-1/2}^λ s_λ = sum_{j>=1} S(k,j) h_(n-j,1^(j-1))", "n >= 1, k >= 1, m >= 1",
          ("n", "k", "m"), pwn(range(1, 5), range(1, 5)), _pointwise("thm4.6"), _positive(("n", "k", "m"))),
        E("eq5.1", "limiting walks of length 2k to μ number S(k,|μ|) f^μ", "k >= 0, optional shape",
          ("k", "shape"), _grid(range(6)) + ({"k": 4, "shape": (2, 1)},), _shape_formula("limiting", False),
          shape_check),
        E("thm5.1", "sum_μ a_k1(μ) a_k2(μ) counts (k1,k2)-connecting partitions", "k1, k2 >= 0",
          ("k1", "k2"), _pairs(8), _products("thm5.1"), prod_check),
        E("thm5.2", "a_k = sum_j S(k,j) I_j, also bicolored partitions and block involutions", "k >= 0",
          ("k",), _grid(range(7)), _thm52, _all(_K, _ground(lambda p: int(p["k"])))),
        E("cor5.3", "a_k counts symmetric (k,k)-connecting partitions of [2k]", "0 <= k <= 6", ("k",),
          _grid(range(6)), _cor53, _all(_K, _ground(lambda p: 2 * int(p["k"])))),
        E("thm5.4", "v_k is the Fubini number", "k >= 0", ("k",), _grid(range(7)), _thm54,
          _all(_K, _ground(lambda p: int(p["k"])))),
        E("thm5.5", "sum_μ a_k(μ) s_μ = sum_j S(k,j) h_1^j", "k >= 0, m >= 1", ("k", "m"), pw(range(5)),
          _pointwise("thm5.5"), _positive(("m",), ("k",))),
        E("eq5.4", "principal specialization of the previous identity", "k >= 0, m >= 1", ("k", "m"),
          pw(range(5), (1, 2, 3)), _qmode("eq5.4"), _positive(("m",), ("k",))),
        E("eq5.5", "sum_μ a_k(μ) s_μ(1^n) = sum_j S(k,j) n^j", "n >= 0, k >= 0", ("n", "k"),
          tuple({"n": n, "k": k} for n in range(6) for k in range(6)), _qmode("eq5.5"), _nonneg("n", "k")),
        E("eq5.6", "sum_λ f^λ(q) m_{n,k}^λ = sum_j S(k,j) [n]_q [n-1]_q ... [n-j+1]_q", "n >= 1, k >= 0",
          ("n", "k"), tuple({"n": n, "k": k} for n in range(1, 5) for k in range(5)), _qmode("eq5.6"), _NK),
        E("eq6.1", "limiting walks of length 2k+1 to μ number S(k+1,|μ|+1) f^μ", "k >= 0, optional shape",
          ("k", "shape"), _grid(range(6)), _shape_formula("limiting", True), shape_check),
        E("thm6.1", "sum_μ a_{k1+1/2}(μ) a_{k2+1/2}(μ) counts (k1+1)-connecting partitions of [k1+k2+1]",
          "k1, k2 >= 0", ("k1", "k2"), _pairs(8), _products("thm6.1"), prod_check),
        E("cor6.2.i", "sum_μ a_{k1+1/2}(μ) a_k2(μ): blocks straddle k1+1, which is a block maximum",
          "k1, k2 >= 0", ("k1", "k2"), _pairs(8), _products("cor6.2.i"), prod_check),
        E("cor6.2.ii", "sum_μ g_k1(μ) a_k2(μ) = sum_μ g_{k1-1/2}(μ) a_{k2+1/2}(μ): every block meets [k1]",
          "k1 >= 1, k2 >= 0", ("k1", "k2"), _pairs(8, 1), _products("cor6.2.ii"),
          _all(_positive(("k1",), ("k2",)), prod_check)),
        E("cor6.2.iii", "sum_μ g_{k1+1/2}(μ) a_k2(μ): every block meets [k1+1], k1+1 a block maximum",
          "k1, k2 >= 0", ("k1", "k2"), _pairs(8), _products("cor6.2.iii"), prod_check),
        E("cor6.2.iv", "sum_μ g_k1(μ) a_{k2+1/2}(μ): every block meets [k1+1], k1+1 a block minimum",
          "k1, k2 >= 0", ("k1", "k2"), _pairs(8), _products("cor6.2.iv"), prod_check),
        E("thm6.3", "a_{k+1/2} = sum_j S(k+1,j+1) I_j", "k >= 0", ("k",), _grid(range(6)), _thm63,
          _all(_K, _ground(lambda p: int(p["k"]) + 1))),
        E("thm6.4", "a_{k+1/2} is the binomial transform of a_k", "max_k <= 29", ("max_k",),
          ({"max_k": 8},), _relation(["thm6.4"]), _MAXK),
        E("thm6.5", "a_{k+1} = sum_j C(k,j) a_{j+1/2}, by collapsing the top block", "0 <= k <= 6", ("k",),
          _grid(range(6)), _thm65, _all(_K, _ground(lambda p: int(p["k"]) + 1))),
        E("rec-2k", "a_{k+1} = sum_j C(k,j) 2^(k-j) a_j", "max_k <= 28", ("max_k",), ({"max_k": 8},),
          _relation(["rec-2k"]), _MAXK),
        E("thm6.7", "a_{k+1/2} counts type-B partitions of [-k]∪[k]", "0 <= k <= 6", ("k",),
          _grid(range(6)), _thm67, _all(_K, _ground(lambda p: 2 * int(p["k"])))),
        E("thm6.8", "v_{k+1/2} counts cyclically ordered partitions of [k+1]", "k >= 0", ("k",),
          _grid(range(6)), _thm68, _all(_K, _ground(lambda p: int(p["k"]) + 1))),
        E("thm6.9", "sum_μ a_{k+1/2}(μ) s_μ = sum_j S(k+1,j+1) h_1^j", "k >= 0, m >= 1", ("k", "m"),
          pw(range(5)), _pointwise("thm6.9"), _positive(("m",), ("k",))),
        E("thm7.1", "g_k = sum_j C(k,j) B(j) a_{k-j}", "max_k <= 29", ("max_k",), ({"max_k": 8},),
          _relation(["thm7.1"]), _MAXK),
        E("tbl3-convolutions", "the generating-function products: four Bell convolutions and four binomial "
          "transforms", "max_k <= 29", ("max_k",), ({"max_k": 8},),
          _relation(list(sequences.CONVOLUTION_PAIRS + sequences.BINOMIAL_PAIRS)), _MAXK),
    ]


CATALOG: dict[str, IdentityEntry] = {e.id: e for e in _entries()}
IDS = tuple(CATALOG)


def get(identity_id: str) -> IdentityEntry:
    try:
        return CATALOG[identity_id]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {identity_id!r}") from None


def _agree(lhs, rhs) -> bool:
    if isinstance(rhs, dict) and not isinstance(lhs, dict):
        return all(v == lhs for v in rhs.values())
    return lhs == rhs


def _normalize(entry: IdentityEntry, params: dict) -> dict:
    p = {k: v for k, v in params.items() if v is not None}
    unknown = set(p) - set(entry.params) - {"points"}
    if unknown:
        raise OutOfDomain(f"{entry.id} takes {', '.join(entry.params)}; got {', '.join(sorted(unknown))}")
    if "shape" in p:
        p["shape"] = tuple(p["shape"])
    return p


def run(identity_id: str, params: dict | None = None) -> VerificationReport:
    """Evaluate one catalog entry at ``params`` (default: its first fixture)."""
    entry = get(identity_id)
    p = _normalize(entry, dict(entry.fixtures[0]) if params is None else params)
    entry.check(p)
    t0 = time.perf_counter()
    lhs, rhs = entry.evaluate(p)
    elapsed = (time.perf_counter() - t0) * 1000
    status = "pass" if _agree(lhs, rhs) else "fail"
    return VerificationReport(identity_id, p, status, lhs, rhs, elapsed)


@dataclass
class Summary:
    reports: list[VerificationReport]
    skipped: dict[str, int]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failures(self) -> list[VerificationReport]:
        return [r for r in self.reports if not r.passed]

    def ids(self) -> set[str]:
        return {r.id for r in self.reports}


def run_entry(identity_id: str, budget_ms: float) -> tuple[list[VerificationReport], int]:
    """All fixtures of one entry, stopping once its time budget is spent.

    The first fixture always runs. Returns the reports and the number of
    fixtures skipped.
    """
    entry = get(identity_id)
    reports = []
    spent = 0.0
    for i, fx in enumerate(entry.fixtures):
        if i and spent >= budget_ms:
            return reports, len(entry.fixtures) - i
        try:
            rep = run(identity_id, dict(fx))
        except VacTabError as exc:
            rep = VerificationReport(identity_id, dict(fx), "error", None, None, 0.0, str(exc))
        spent += rep.elapsed_ms
        reports.append(rep)
    return reports, 0


def run_all(budget_ms: float = 10_000, ids=None) -> Summary:
    """Every entry (or ``ids``) with a per-entry time budget; reports ordered by id."""
    reports, skipped = [], {}
    for iid in sorted(ids or IDS):
        reps, skip = run_entry(iid, budget_ms)
        reports += reps
        if skip:
            skipped[iid] = skip
    return Summary(reports, skipped)

