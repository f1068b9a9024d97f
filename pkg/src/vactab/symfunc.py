"""Exact evaluation of Schur and complete homogeneous symmetric polynomials,
principal specializations, and both sides of the symmetric-function
identities relating walk counts to Stirling-type expansions.

Evaluation at a point uses ``Fraction`` throughout. Principal
specializations ``x_i = q^(i-1)`` (``i <= m``) are ``QPoly`` values.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import prod
from typing import Callable, Sequence, Union

from .errors import OutOfDomain, UnknownIdentity
from .partitions import Partition, b_stat, cells, content, hook_length, hook_partition, syt_count_q
from .qpoly import ONE, ZERO, QPoly, q_binomial, q_factorial, q_int  # noqa: F401
from .setpart import marked_count, stirling2, tilde_marked_count
from .tableaux import semistandard_tableaux
from .walks import count_dp

__all__ = [
    "q_int",
    "q_factorial",
    "q_binomial",
    "schur_eval",
    "h_eval",
    "schur_principal",
    "h_principal",
    "schur_at_ones",
    "identity_side",
    "IDENTITY_IDS",
]

Value = Union[Fraction, QPoly]


def _point(pt: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in pt)


@lru_cache(maxsize=None)
def _ssyt_contents(mu: Partition, m: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Content vectors of all SSYT of shape ``mu`` with entries ``<= m``, with multiplicity."""
    counts: Counter = Counter()
    for t in semistandard_tableaux(mu, m):
        vec = [0] * m
        for row in t:
            for x in row:
                vec[x - 1] += 1
        counts[tuple(vec)] += 1
    return tuple(sorted(counts.items()))


def _monomial(pt: tuple[Fraction, ...], vec: tuple[int, ...]) -> Fraction:
    return prod((x**e for x, e in zip(pt, vec) if e), start=Fraction(1))


def schur_eval(mu: Partition, pt: Sequence) -> Fraction:
    """``s_mu(x_1..x_m)`` as a sum over semistandard tableaux."""
    pt = _point(pt)
    return sum((c * _monomial(pt, v) for v, c in _ssyt_contents(tuple(mu), len(pt))), Fraction(0))


@lru_cache(maxsize=None)
def _h_contents(n: int, m: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    counts: Counter = Counter()
    for combo in combinations_with_replacement(range(m), n):
        vec = [0] * m
        for i in combo:
            vec[i] += 1
        counts[tuple(vec)] += 1
    return tuple(sorted(counts.items()))


def h_eval(lam: Partition, pt: Sequence) -> Fraction:
    """``h_lam = prod h_{lam_i}`` evaluated at ``pt``."""
    pt = _point(pt)
    out = Fraction(1)
    for part in lam:
        out *= sum((c * _monomial(pt, v) for v, c in _h_contents(part, len(pt))), Fraction(0))
    return out


@lru_cache(maxsize=None)
def schur_principal(mu: Partition, m: int) -> QPoly:
    """``s_mu(1, q, ..., q^(m-1))`` by the hook-content product."""
    mu = tuple(mu)
    if len(mu) > m:
        return ZERO
    num, den = ONE, ONE
    for c in cells(mu):
        num = num * q_int(m + content(c))
        den = den * q_int(hook_length(mu, c))
    return QPoly.monomial(b_stat(mu)) * num.exact_div(den)


def h_principal(lam: Partition, m: int) -> QPoly:
    out = ONE
    for part in lam:
        out = out * q_binomial(m + part - 1, part)
    return out


def schur_at_ones(mu: Partition, n: int) -> Fraction:
    """``s_mu(1^n)`` as ``prod (n + c(u)) / h(u)``."""
    out = Fraction(1)
    for c in cells(tuple(mu)):
        out *= Fraction(n + content(c), hook_length(tuple(mu), c))
    return out


class _AtPoint:
    def __init__(self, pt):
        self.pt = _point(pt)
        self.zero = Fraction(0)

    def s(self, mu):
        return schur_eval(mu, self.pt)

    def h(self, lam):
        return h_eval(lam, self.pt)


class _Principal:
    def __init__(self, m: int):
        if m < 1:
            raise OutOfDomain("principal specialization needs m >= 1")
        self.m = m
        self.zero = ZERO

    def s(self, mu):
        return schur_principal(tuple(mu), self.m)

    def h(self, lam):
        return h_principal(lam, self.m)


def _schur_sum(counts, sp) -> Value:
    return sum((c * sp.s(mu) for mu, c in counts.items()), sp.zero)


def _h1_sum(coeffs, sp) -> Value:
    h1 = sp.h((1,))
    return sum((c * h1**j for j, c in enumerate(coeffs)), sp.zero)


def _need(params, *names):
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise OutOfDomain(f"missing parameters: {', '.join(missing)}")
    vals = [int(params[n]) for n in names]
    if any(v < 0 for v in vals):
        raise OutOfDomain("parameters must be nonnegative")
    return vals


# Each entry maps params and a specialization to a value.
Side = Callable[[dict, object], Value]


def _g_lhs(p, sp):
    (k,) = _need(p, "k")
    return _schur_sum(count_dp("simplified", k), sp)


def _g_rhs(p, sp):
    (k,) = _need(p, "k")
    return _h1_sum([marked_count(k, j) for j in range(k + 1)], sp)


def _m_lhs(p, sp):
    n, k = _need(p, "n", "k")
    if n < 1:
        raise OutOfDomain("n must be positive")
    return _schur_sum(count_dp("nvac", k, n=n), sp)


def _m_rhs(p, sp):
    n, k = _need(p, "n", "k")
    return sum((stirling2(k, j) * sp.h(hook_partition(n, j)) for j in range(min(n, k) + 1)), sp.zero)


def _gh_lhs(p, sp):
    (k,) = _need(p, "k")
    return _schur_sum(count_dp("simplified", k, half=True), sp)


def _gh_rhs(p, sp):
    (k,) = _need(p, "k")
    return _h1_sum([tilde_marked_count(k + 1, j) for j in range(k + 1)], sp)


def _mh_lhs(p, sp):
    n, k = _need(p, "n", "k")
    if n < 1 or k < 1:
        raise OutOfDomain("n and k must be positive")
    return _schur_sum(count_dp("nvac", k - 1, half=True, n=n), sp)


def _mh_rhs(p, sp):
    n, k = _need(p, "n", "k")
    return sum((stirling2(k, j) * sp.h(hook_partition(n - 1, j - 1)) for j in range(1, min(n, k) + 1)), sp.zero)


def _a_lhs(p, sp):
    (k,) = _need(p, "k")
    return _schur_sum(count_dp("limiting", k), sp)


def _a_rhs(p, sp):
    (k,) = _need(p, "k")
    return _h1_sum([stirling2(k, j) for j in range(k + 1)], sp)


def _ah_lhs(p, sp):
    (k,) = _need(p, "k")
    return _schur_sum(count_dp("limiting", k, half=True), sp)


def _ah_rhs(p, sp):
    (k,) = _need(p, "k")
    return _h1_sum([stirling2(k + 1, j + 1) for j in range(k + 1)], sp)


POINT_IDENTITIES: dict[str, tuple[Side, Side]] = {
    "thm3.4": (_g_lhs, _g_rhs),
    "thm3.5": (_m_lhs, _m_rhs),
    "thm4.5": (_gh_lhs, _gh_rhs),
    "thm4.6": (_mh_lhs, _mh_rhs),
    "thm5.5": (_a_lhs, _a_rhs),
    "thm6.9": (_ah_lhs, _ah_rhs),
}

# principal specializations of the identities above
Q_ALIASES = {"eq3.6": "thm3.4", "eq3.9": "thm3.5", "eq5.4": "thm5.5"}


def _ones_lhs(p):
    n, k = _need(p, "n", "k")
    return sum((c * schur_at_ones(mu, n) for mu, c in count_dp("limiting", k).items()), Fraction(0))


def _ones_rhs(p):
    n, k = _need(p, "n", "k")
    return Fraction(sum(stirling2(k, j) * n**j for j in range(k + 1)))


def _qcount_lhs(p):
    n, k = _need(p, "n", "k")
    if n < 1:
        raise OutOfDomain("n must be positive")
    return sum((c * syt_count_q(lam) for lam, c in count_dp("nvac", k, n=n).items()), ZERO)


def _qcount_rhs(p):
    n, k = _need(p, "n", "k")
    out = ZERO
    # terms with j > n carry a factor [0]_q
    for j in range(min(n, k) + 1):
        out = out + stirling2(k, j) * prod((q_int(n - i) for i in range(j)), start=ONE)
    return out


SCALAR_IDENTITIES = {"eq5.5": (_ones_lhs, _ones_rhs), "eq5.6": (_qcount_lhs, _qcount_rhs)}

IDENTITY_IDS = tuple(sorted(set(POINT_IDENTITIES) | set(Q_ALIASES) | set(SCALAR_IDENTITIES)))


def degree_bound(identity_id: str, params: dict) -> int:
    """Upper bound on the total degree of either side as a polynomial in ``x``."""
    base = Q_ALIASES.get(identity_id, identity_id)
    if base in ("thm3.5",):
        return int(params["n"])
    if base == "thm4.6":
        return int(params["n"]) - 1
    return int(params["k"])


def identity_side(identity_id: str, side: str, params: dict, point: Sequence | None = None) -> Value:
    """Evaluate one side of a catalogued identity.

    Identities with an ``x`` argument need ``point`` (pointwise mode) or an
    ``m`` parameter (principal specialization in ``m`` variables). The
    principal-specialization entries always use ``params["m"]``.
    """
    if side not in ("LHS", "RHS"):
        raise ValueError("side must be 'LHS' or 'RHS'")
    idx = 0 if side == "LHS" else 1
    if identity_id in SCALAR_IDENTITIES:
        return SCALAR_IDENTITIES[identity_id][idx](params)
    if identity_id in Q_ALIASES:
        (m,) = _need(params, "m")
        return POINT_IDENTITIES[Q_ALIASES[identity_id]][idx](params, _Principal(m))
    if identity_id in POINT_IDENTITIES:
        if point is not None:
            sp = _AtPoint(point)
        else:
            (m,) = _need(params, "m")
            sp = _Principal(m)
        return POINT_IDENTITIES[identity_id][idx](params, sp)
    raise UnknownIdentity(f"no symmetric-function identity named {identity_id!r}")


def h_expansion(n: int, k: int) -> dict[Partition, int]:
    """Nonzero coefficients of the complete-homogeneous expansion of the
    ``n``-vacillating Schur sum."""
    out = {}
    for j in range(min(n, k) + 1):
        c = stirling2(k, j)
        if c:
            out[hook_partition(n, j)] = c
    return out

