"""Rational binary quadratic forms: trace forms, Gauss reduction, exact minima.

A form (f11, f12, f22) stands for f11*x1^2 + f12*x1*x2 + f22*x2^2.  All
minima are computed over the exact rational field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .quadratic import QuadElem, QuadField, Rat


def floor_sqrt(x) -> int:
    """Largest integer n with n^2 <= x, for rational x >= 0."""
    if x < 0:
        raise ValueError("negative argument")
    return math.isqrt(int(x))


@dataclass(frozen=True)
class UniTransform:
    """2x2 integer matrix of determinant +-1, acting on column vectors."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if abs(self.det) != 1:
            raise ValueError("transform must be unimodular")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @staticmethod
    def identity() -> "UniTransform":
        return UniTransform(1, 0, 0, 1)

    @staticmethod
    def shift(k: int) -> "UniTransform":
        """x1 -> x1 - k*x2."""
        return UniTransform(1, -k, 0, 1)

    @staticmethod
    def swap() -> "UniTransform":
        return UniTransform(0, 1, 1, 0)

    def __mul__(self, other: "UniTransform") -> "UniTransform":
        return UniTransform(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])


@dataclass(frozen=True)
class BinaryForm:
    f11: Rat
    f12: Rat
    f22: Rat

    def __post_init__(self):
        object.__setattr__(self, "f11", Fraction(self.f11))
        object.__setattr__(self, "f12", Fraction(self.f12))
        object.__setattr__(self, "f22", Fraction(self.f22))

    def value(self, x1, x2) -> Rat:
        return self.f11 * x1 * x1 + self.f12 * x1 * x2 + self.f22 * x2 * x2

    @property
    def disc(self) -> Rat:
        """4*f11*f22 - f12^2; positive for positive definite forms."""
        return 4 * self.f11 * self.f22 - self.f12 * self.f12

    def is_positive_definite(self) -> bool:
        return self.f11 > 0 and self.disc > 0

    def is_reduced(self) -> bool:
        return abs(self.f12) <= min(self.f11, self.f22)

    def apply(self, U: UniTransform) -> "BinaryForm":
        """The form x -> f(Ux)."""
        a, b, c, d = U.a, U.b, U.c, U.d
        return BinaryForm(
            self.value(a, c),
            2 * (self.f11 * a * b + self.f22 * c * d) + self.f12 * (a * d + b * c),
            self.value(b, d),
        )


def trace_form(a: QuadElem) -> BinaryForm:
    """Halved trace form g with Tr(a*(x1 + x2*omega)^2) = 2*g(x1, x2).

    For d = 2,3 mod 4: g = (a1, 2d*a2, d*a1); for d = 1 mod 4:
    g = (a1, a1 + d*a2, (1+d)/4*a1 + d/2*a2).  Positive definite exactly
    when a is totally positive.
    """
    if not a.is_totally_positive():
        raise ValueError(f"{a} is not totally positive")
    d = a.F.d
    a1, a2 = a.x1, a.x2
    if a.F.omega_is_half:
        g = BinaryForm(a1, a1 + d * a2, Fraction(1 + d, 4) * a1 + Fraction(d, 2) * a2)
    else:
        g = BinaryForm(a1, 2 * d * a2, d * a1)
    assert g.is_positive_definite()
    return g


def gauss_reduce(f: BinaryForm) -> tuple[BinaryForm, UniTransform]:
    """Reduce to |f12| <= min(f11, f22), returning (f', U) with f' = f o U.

    Alternates the shift x1 -> x1 - k*x2 with k the nearest integer to
    f12/(2*f11) (ties to even) and the swap of variables.
    """
    if not f.is_positive_definite():
        raise ValueError("form is not positive definite")
    U = UniTransform.identity()
    while True:
        k = round(f.f12 / (2 * f.f11))
        if k != 0:
            S = UniTransform.shift(k)
            f, U = f.apply(S), U * S
        if f.f22 < f.f11:
            S = UniTransform.swap()
            f, U = f.apply(S), U * S
            continue
        if f.is_reduced():
            return f, U


def enumerate_below(f: BinaryForm, bound: Rat) -> list[tuple[tuple[int, int], Rat]]:
    """All nonzero integer pairs with f(x) <= bound, one per +-pair.

    Representatives have x2 > 0, or x2 = 0 and x1 > 0.  Uses the exact
    ellipse bounds |x2| <= sqrt(4*f11*bound/disc) and
    (f11*x1 + f12*x2/2)^2 <= f11*bound - disc*x2^2/4.
    """
    A, B, C = f.f11, f.f12, f.f22
    disc = f.disc
    if disc <= 0 or A <= 0:
        raise ValueError("form is not positive definite")
    if bound < 0:
        return []
    out = []
    y_max = floor_sqrt(4 * A * bound / disc)
    for y in range(y_max + 1):
        # (A*x + B*y/2)^2 <= R
        R = A * bound - disc * y * y / Fraction(4)
        if R < 0:
            continue
        s = floor_sqrt(R)
        lo = math.ceil((-Fraction(B * y, 2) - (s + 1)) / A)
        hi = math.floor((-Fraction(B * y, 2) + (s + 1)) / A)
        for x in range(lo, hi + 1):
            if y == 0 and x <= 0:
                continue
            v = f.value(x, y)
            if v <= bound:
                out.append(((x, y), v))
    return out


def min_and_vectors(f: BinaryForm) -> tuple[Rat, list[tuple[int, int]]]:
    """Exact minimum of f over nonzero integer pairs and all attaining pairs.

    Both signs are reported, in lexicographic order.  The search runs on the
    Gauss-reduced equivalent and transports vectors back.
    """
    fr, U = gauss_reduce(f)
    items = enumerate_below(fr, fr.f11)  # reduced form attains its minimum at (1,0)
    m = min(v for _, v in items)
    vecs = [U.apply(x) for x, v in items if v == m]
    full = sorted(vecs + [(-x1, -x2) for x1, x2 in vecs])
    return m, full
