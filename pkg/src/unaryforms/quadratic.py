"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

Elements are pairs x1 + x2*sqrt(d) of rationals.  Every order and sign
decision is made by exact integer comparison; no floating point enters
this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

Rat = Fraction
RatLike = Union[int, Fraction]


def is_squarefree(d: int) -> bool:
    """True iff no prime square divides d.  Trial division up to sqrt(d)."""
    if d < 1:
        raise ValueError(f"expected a positive integer, got {d}")
    if d % 4 == 0:
        return False
    f = 3
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class QuadField:
    """The real quadratic field Q(sqrt(d)) for square-free d >= 2."""

    d: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"d must be >= 2, got {self.d}")
        if not is_squarefree(self.d):
            raise ValueError(f"d must be square-free, got {self.d}")

    @property
    def omega_is_half(self) -> bool:
        return self.d % 4 == 1

    @property
    def disc(self) -> int:
        return self.d if self.omega_is_half else 4 * self.d

    def omega(self) -> "QuadElem":
        """Second basis element of the ring of integers: sqrt(d), or (1+sqrt(d))/2."""
        if self.omega_is_half:
            return QuadElem(self, Fraction(1, 2), Fraction(1, 2))
        return QuadElem(self, 0, 1)

    def one(self) -> "QuadElem":
        return QuadElem(self, 1, 0)

    def sqrt_d(self) -> "QuadElem":
        return QuadElem(self, 0, 1)

    def from_integral_coords(self, x1: int, x2: int) -> "QuadElem":
        """Element x1*1 + x2*omega of the ring of integers."""
        return QuadElem(self, x1, 0) + QuadElem(self, x2, 0) * self.omega()

    def __repr__(self):
        return f"QuadField({self.d})"


@dataclass(frozen=True)
class QuadElem:
    """x1 + x2*sqrt(d), with exact rational coordinates."""

    F: QuadField
    x1: Rat
    x2: Rat

    def __post_init__(self):
        object.__setattr__(self, "x1", Fraction(self.x1))
        object.__setattr__(self, "x2", Fraction(self.x2))

    def _coerce(self, other) -> Optional["QuadElem"]:
        if isinstance(other, QuadElem):
            if other.F != self.F:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(self.F, other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.F, self.x1 + o.x1, self.x2 + o.x2)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.F, self.x1 - o.x1, self.x2 - o.x2)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return QuadElem(self.F, -self.x1, -self.x2)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.F.d
        return QuadElem(
            self.F,
            self.x1 * o.x1 + d * self.x2 * o.x2,
            self.x1 * o.x2 + self.x2 * o.x1,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, k: int) -> "QuadElem":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = QuadElem(self.F, 1, 0)
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inversion of 0")
        return QuadElem(self.F, self.x1 / n, -self.x2 / n)

    def conj(self) -> "QuadElem":
        """The nontrivial embedding x1 - x2*sqrt(d)."""
        return QuadElem(self.F, self.x1, -self.x2)

    def trace(self) -> Rat:
        return 2 * self.x1

    def norm(self) -> Rat:
        return self.x1 * self.x1 - self.F.d * self.x2 * self.x2

    def sign(self) -> int:
        """Exact sign of the real value x1 + x2*sqrt(d)."""
        s1 = (self.x1 > 0) - (self.x1 < 0)
        s2 = (self.x2 > 0) - (self.x2 < 0)
        if s2 == 0:
            return s1
        if s1 == 0 or s1 == s2:
            return s2
        # opposite signs: |x1| vs |x2|*sqrt(d), squared comparison
        c = self.x1 * self.x1 - self.F.d * self.x2 * self.x2
        if c == 0:
            raise ArithmeticError("sqrt(d) cannot be rational for square-free d >= 2")
        return s1 * ((c > 0) - (c < 0))

    def is_zero(self) -> bool:
        return self.x1 == 0 and self.x2 == 0

    def is_rational(self) -> bool:
        return self.x2 == 0

    def is_totally_positive(self) -> bool:
        """Both embeddings positive: trace > 0 and norm > 0."""
        return self.trace() > 0 and self.norm() > 0

    def is_integral(self) -> bool:
        """Membership in Z[omega]."""
        if self.F.omega_is_half:
            y1, y2 = 2 * self.x1, 2 * self.x2
            return (
                y1.denominator == 1
                and y2.denominator == 1
                and (y1.numerator - y2.numerator) % 2 == 0
            )
        return self.x1.denominator == 1 and self.x2.denominator == 1

    def is_unit(self) -> bool:
        return self.is_integral() and abs(self.norm()) == 1

    def integral_coords(self) -> tuple[int, int]:
        """Coordinates over the basis (1, omega); raises if not integral."""
        if not self.is_integral():
            raise ValueError(f"{self} is not integral")
        if self.F.omega_is_half:
            c2 = 2 * self.x2
            c1 = self.x1 - self.x2
            return int(c1), int(c2)
        return int(self.x1), int(self.x2)

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.x2 == 0 and self.x1 == other
        if isinstance(other, QuadElem):
            return self.F == other.F and self.x1 == other.x1 and self.x2 == other.x2
        return NotImplemented

    def __hash__(self):
        return hash((self.F.d, self.x1, self.x2))

    def cert_str(self) -> str:
        """Exact serialization 'x1n/x1d+x2n/x2d*sqrt(d)'."""
        return (
            f"{self.x1.numerator}/{self.x1.denominator}"
            f"+{self.x2.numerator}/{self.x2.denominator}*sqrt({self.F.d})"
        )

    def __repr__(self):
        return f"({self.x1}+{self.x2}*sqrt({self.F.d}))"


def parse_cert_str(s: str, F: QuadField) -> QuadElem:
    """Inverse of QuadElem.cert_str."""
    body, tail = s.split("*sqrt(")
    if int(tail.rstrip(")")) != F.d:
        raise ValueError("field mismatch in serialized element")
    x1s, x2s = body.rsplit("+", 1)
    return QuadElem(F, Fraction(x1s), Fraction(x2s))


@dataclass(frozen=True)
class FieldType:
    """Family tag T1..T4 with its parameter m, or tag None outside all families."""

    tag: Optional[str]
    m: Optional[int] = None


def classify_type(d: int) -> FieldType:
    """Scan the families d = m^2+1 (m odd), m^2-1 (m even), m^2+4 (m odd),
    m^2-4 (m odd > 3), in that fixed order."""
    if d < 2 or not is_squarefree(d):
        raise ValueError(f"d must be square-free and >= 2, got {d}")
    m = math.isqrt(d - 1)
    if m * m + 1 == d and m % 2 == 1:
        return FieldType("T1", m)
    m = math.isqrt(d + 1)
    if m * m - 1 == d and m % 2 == 0:
        return FieldType("T2", m)
    if d > 4:
        m = math.isqrt(d - 4)
        if m * m + 4 == d and m % 2 == 1:
            return FieldType("T3", m)
    m = math.isqrt(d + 4)
    if m * m - 4 == d and m % 2 == 1 and m > 3:
        return FieldType("T4", m)
    return FieldType(None)


def type_unit(F: QuadField, ft: FieldType) -> QuadElem:
    """Closed form of the fundamental unit on the four families:
    T1/T2 give m + sqrt(d); T3/T4 with m = 2p+1 give p + (1+sqrt(d))/2."""
    if ft.tag in ("T1", "T2"):
        return QuadElem(F, ft.m, 1)
    if ft.tag in ("T3", "T4"):
        p = (ft.m - 1) // 2
        return QuadElem(F, p, 0) + F.omega()
    raise ValueError("no closed-form unit outside the four families")


def rd_parameters(d: int) -> Optional[tuple[int, int]]:
    """Richaud-Degert parameters (m, r) with d = m^2 + r, m = round(sqrt(d)),
    -m < r <= m and 4m divisible by r; None when d is not of R-D type."""
    if d < 2 or not is_squarefree(d):
        raise ValueError(f"d must be square-free and >= 2, got {d}")
    s = math.isqrt(d)
    m = s if d - s * s <= s else s + 1
    r = d - m * m
    if r == 0 or not (-m < r <= m):
        return None
    if (4 * m) % abs(r) != 0:
        return None
    return m, r


@lru_cache(maxsize=None)
def fundamental_unit(F: QuadField) -> QuadElem:
    """Fundamental unit u > 1 of the maximal order, by the continued fraction
    of the reduced quadratic irrational (b + sqrt(disc))/2.

    b is the largest integer with b <= sqrt(disc) and b = disc (mod 2); the
    expansion of (b+sqrt(disc))/2 is purely periodic and one full period of
    convergent denominators q gives u = q[-1]*alpha + q[-2].
    """
    D = F.disc
    s = math.isqrt(D)
    b = s if (s - D) % 2 == 0 else s - 1
    P, Q = b, 2
    k2, k1 = 1, 0  # q_{-2}, q_{-1}
    Pi, Qi = P, Q
    period = 0
    while True:
        a = (Pi + s) // Qi
        k2, k1 = k1, a * k1 + k2
        period += 1
        Pi = a * Qi - Pi
        Qi = (D - Pi * Pi) // Qi
        if (Pi, Qi) == (P, Q):
            break
    if F.omega_is_half:
        alpha = QuadElem(F, Fraction(b, 2), Fraction(1, 2))
    else:
        alpha = QuadElem(F, b // 2, 1)
    u = alpha * k1 + k2
    assert u.is_integral() and abs(u.norm()) == 1 and u > 1
    assert u.norm() == (1 if period % 2 == 0 else -1)
    return u


@lru_cache(maxsize=None)
def unit_square(F: QuadField) -> QuadElem:
    """u^2 for the fundamental unit u; always has norm +1."""
    u = fundamental_unit(F)
    return u * u
