"""Exact arithmetic and sign determination in the real quadratic field Q(√D).

All cone coefficients live in Q(√D) with D = a₁²a₂² − 4a₁a₂, which is positive
and never a perfect square once a₁a₂ > 4.  Values are kept in the canonical
form (a + b√D)/den with den > 0 and gcd(a, b, den) = 1, so structural equality
is mathematical equality and no floating point is needed anywhere.
"""

from __future__ import annotations

import re
from functools import total_ordering
from math import gcd, isqrt

_checked_radicands: set[int] = set()


def _check_radicand(D: int) -> None:
    if D in _checked_radicands:
        return
    if D <= 0:
        raise ValueError(f"radicand must be positive, got {D}")
    if isqrt(D) ** 2 == D:
        raise ValueError(f"radicand {D} is a perfect square")
    _checked_radicands.add(D)


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


@total_ordering
class QuadNum:
    """Exact element (a + b√D)/den of Q(√D)."""

    __slots__ = ("a", "b", "den", "D")

    def __init__(self, a: int, b: int, den: int, D: int) -> None:
        _check_radicand(D)
        if den == 0:
            raise ZeroDivisionError("denominator is zero")
        if den < 0:
            a, b, den = -a, -b, -den
        g = gcd(gcd(a, b), den)
        if g > 1:
            a //= g
            b //= g
            den //= g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "D", D)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QuadNum is immutable")

    @classmethod
    def from_int(cls, n: int, D: int) -> QuadNum:
        return cls(n, 0, 1, D)

    def _coerce(self, other: int | QuadNum) -> QuadNum:
        if isinstance(other, int):
            return QuadNum(other, 0, 1, self.D)
        if isinstance(other, QuadNum):
            if other.D != self.D:
                raise ValueError(f"mismatched radicands: √{self.D} vs √{other.D}")
            return other
        return NotImplemented

    def __add__(self, other: int | QuadNum) -> QuadNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadNum(
            self.a * other.den + other.a * self.den,
            self.b * other.den + other.b * self.den,
            self.den * other.den,
            self.D,
        )

    __radd__ = __add__

    def __sub__(self, other: int | QuadNum) -> QuadNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadNum(
            self.a * other.den - other.a * self.den,
            self.b * other.den - other.b * self.den,
            self.den * other.den,
            self.D,
        )

    def __rsub__(self, other: int | QuadNum) -> QuadNum:
        return (-self) + other

    def __neg__(self) -> QuadNum:
        return QuadNum(-self.a, -self.b, self.den, self.D)

    def __mul__(self, other: int | QuadNum) -> QuadNum:
        if isinstance(other, int):
            return QuadNum(self.a * other, self.b * other, self.den, self.D)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadNum(
            self.a * other.a + self.b * other.b * self.D,
            self.a * other.b + self.b * other.a,
            self.den * other.den,
            self.D,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadNum:
        norm = self.a * self.a - self.b * self.b * self.D
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(√D)")
        return QuadNum(self.den * self.a, -self.den * self.b, norm, self.D)

    def __truediv__(self, other: int | QuadNum) -> QuadNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: int | QuadNum) -> QuadNum:
        return self.inverse() * other

    def sign(self) -> int:
        """Exact sign of (a + b√D)/den via integer comparison of a² and b²D."""
        a, b = self.a, self.b
        if b == 0:
            return _sign(a)
        if a == 0:
            return _sign(b)
        if (a > 0) == (b > 0):
            return _sign(a)
        # a and b of opposite sign: |a| vs |b|√D decides
        if a * a > b * b * self.D:
            return _sign(a)
        return _sign(b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.den == 1 and self.a == other
        if isinstance(other, QuadNum):
            return (
                self.D == other.D
                and self.a == other.a
                and self.b == other.b
                and self.den == other.den
            )
        return False

    def __lt__(self, other: int | QuadNum) -> bool:
        diff = self - other
        if diff is NotImplemented:
            return NotImplemented
        return diff.sign() < 0

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.den, self.D))

    def __repr__(self) -> str:
        return f"QuadNum({self.a}, {self.b}, {self.den}, D={self.D})"

    def __str__(self) -> str:
        return f"({self.a}{self.b:+d}√{self.D})/{self.den}"

    _PATTERN = re.compile(r"^\((-?\d+)([+-]\d+)√(\d+)\)/(\d+)$")

    @classmethod
    def from_str(cls, text: str) -> QuadNum:
        m = cls._PATTERN.match(text)
        if m is None:
            raise ValueError(f"not a quadratic number literal: {text!r}")
        a, b, D, den = (int(m.group(i)) for i in range(1, 5))
        return cls(a, b, den, D)


def hyperbolic_radicand(a1: int, a2: int) -> int:
    """D = a₁²a₂² − 4a₁a₂ for the rank-2 Cartan matrix [[2,−a₁],[−a₂,2]]."""
    return (a1 * a2) ** 2 - 4 * a1 * a2


def make_alpha_beta(a1: int, a2: int) -> tuple[QuadNum, QuadNum]:
    """The positive irrationals α = (a₁a₂+√D)/(2a₂) and β = (a₁a₂+√D)/(2a₁).

    They satisfy 1/α + β = a₂ and 1/β + α = a₁, the two-term continued
    fraction identities behind every cone-generator recursion.
    """
    if a1 < 1 or a2 < 1 or a1 * a2 <= 4:
        raise ValueError(f"need a1, a2 ≥ 1 with a1·a2 > 4, got ({a1}, {a2})")
    D = hyperbolic_radicand(a1, a2)
    alpha = QuadNum(a1 * a2, 1, 2 * a2, D)
    beta = QuadNum(a1 * a2, 1, 2 * a1, D)
    return alpha, beta


def sign_by_interval(x: QuadNum, bits: int = 128) -> int | None:
    """Sign via an integer-scaled interval enclosure of √D.

    Returns None when the enclosure straddles zero.  This is a cross-check
    oracle only; QuadNum.sign is the authoritative exact path.
    """
    scale = 1 << bits
    root_lo = isqrt(x.D * scale * scale)
    root_hi = root_lo + 1
    if x.b >= 0:
        lo = x.a * scale + x.b * root_lo
        hi = x.a * scale + x.b * root_hi
    else:
        lo = x.a * scale + x.b * root_hi
        hi = x.a * scale + x.b * root_lo
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    return None
