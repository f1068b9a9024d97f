"""Dense univariate polynomials in ``q`` with arbitrary-precision integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .errors import InexactDivision

Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class QPoly:
    """Immutable polynomial ``sum(coeffs[d] * q**d)``.

    Trailing zeros are trimmed, so the zero polynomial has ``coeffs == ()``
    and equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = _trim(int(c) for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "QPoly":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __repr__(self):
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
                continue
            mono = "q" if d == 1 else f"q^{d}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def _coerce(self, other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly.const(other)
        raise TypeError(f"cannot combine QPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = QPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Long division over the integers; the divisor must be monic up to sign
        or divide every step evenly."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        for shift in range(len(rem) - dq - 1, -1, -1):
            c = rem[shift + dq]
            if c == 0:
                continue
            if c % lead:
                raise InexactDivision(f"{self} is not divisible by {other} over Z")
            f = c // lead
            quot[shift] = f
            for i, b in enumerate(other.coeffs):
                rem[shift + i] -= f * b
        return QPoly(quot), QPoly(rem)

    def exact_div(self, other) -> "QPoly":
        quot, rem = self.divmod(self._coerce(other))
        if not rem.is_zero():
            raise InexactDivision(f"{self} is not divisible by {other}")
        return quot

    __floordiv__ = exact_div

    def __call__(self, q: Scalar):
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "QPoly":
        return cls(int(c) for c in data)


ONE = QPoly.const(1)
ZERO = QPoly()
Q = QPoly.monomial(1)


@lru_cache(maxsize=None)
def q_int(m: int) -> QPoly:
    """``[m]_q = 1 + q + ... + q^(m-1)``; ``[0]_q = 0``."""
    if m < 0:
        raise ValueError("q-integer of a negative number")
    return QPoly([1] * m)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("q-factorial of a negative number")
    out = ONE
    for i in range(2, n + 1):
        out = out * q_int(i)
    return out


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> QPoly:
    """Gaussian binomial coefficient, by exact division of q-factorials."""
    if b < 0 or b > a:
        return ZERO
    return q_factorial(a).exact_div(q_factorial(b) * q_factorial(a - b))
