"""Simplest cubic fields Q(theta), theta a root of x^3 - t x^2 - (t+3)x - 1.

Exact arithmetic in the display basis (1, theta, s(theta)) where s is the
generating Galois automorphism, the six-inequality reduction domain, the
boundary rays r1..r3, s1..s3, exact ternary trace-form minima, facet
vectors, and the full Voronoi walk over perfect unary forms.

The lattice of reference is Z[theta] throughout; it equals the maximal
order exactly when the field is monogenic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .binary import floor_sqrt
from .quadratic import Rat

Gram = tuple[tuple[Rat, ...], ...]


@dataclass(frozen=True)
class SimplestCubicField:
    """Defining polynomial P(x) = x^3 - t x^2 - (t+3) x - 1, t >= 0."""

    t: int

    def __post_init__(self):
        if self.t < 0:
            raise ValueError(f"t must be >= 0, got {self.t}")

    @property
    def delta_root(self) -> int:
        """t^2 + 3t + 9; its square is the discriminant of P."""
        return self.t * self.t + 3 * self.t + 9

    def elem(self, c0, c1, c2) -> "CubicElem":
        return CubicElem(self, Fraction(c0), Fraction(c1), Fraction(c2))

    def one(self) -> "CubicElem":
        return self.elem(1, 0, 0)

    def theta(self) -> "CubicElem":
        return self.elem(0, 1, 0)

    def sigma_theta(self) -> "CubicElem":
        return self.elem(0, 0, 1)

    def basis(self) -> tuple["CubicElem", ...]:
        return (self.one(), self.theta(), self.sigma_theta())

    def __repr__(self):
        return f"SimplestCubicField(t={self.t})"


@dataclass(frozen=True)
class CubicElem:
    """c0 + c1*theta + c2*s(theta) with rational coordinates."""

    F: SimplestCubicField
    c0: Rat
    c1: Rat
    c2: Rat

    def __post_init__(self):
        object.__setattr__(self, "c0", Fraction(self.c0))
        object.__setattr__(self, "c1", Fraction(self.c1))
        object.__setattr__(self, "c2", Fraction(self.c2))

    def coords(self) -> tuple[Rat, Rat, Rat]:
        return (self.c0, self.c1, self.c2)

    def _coerce(self, other) -> Optional["CubicElem"]:
        if isinstance(other, CubicElem):
            if other.F != self.F:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return CubicElem(self.F, other, 0, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CubicElem(self.F, self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CubicElem(self.F, self.c0 - o.c0, self.c1 - o.c1, self.c2 - o.c2)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return CubicElem(self.F, -self.c0, -self.c1, -self.c2)

    def _to_power(self) -> tuple[Rat, Rat, Rat]:
        """Coordinates over (1, theta, theta^2), via s(theta) = (t+2) + t*theta - theta^2."""
        t = self.F.t
        return (self.c0 + (t + 2) * self.c2, self.c1 + t * self.c2, -self.c2)

    @staticmethod
    def _from_power(F: "SimplestCubicField", b) -> "CubicElem":
        t = F.t
        return CubicElem(F, b[0] + (t + 2) * b[2], b[1] + t * b[2], -b[2])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = self.F.t
        a0, a1, a2 = self._to_power()
        b0, b1, b2 = o._to_power()
        # convolution, then theta^3 = t theta^2 + (t+3) theta + 1 and
        # theta^4 = (t^2+t+3) theta^2 + (t^2+3t+1) theta + t
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a0 * b2 + a1 * b1 + a2 * b0
        c3 = a1 * b2 + a2 * b1
        c4 = a2 * b2
        r0 = c0 + c3 + t * c4
        r1 = c1 + (t + 3) * c3 + (t * t + 3 * t + 1) * c4
        r2 = c2 + t * c3 + (t * t + t + 3) * c4
        return CubicElem._from_power(self.F, (r0, r1, r2))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, k: int) -> "CubicElem":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = self.F.one()
        for _ in range(abs(k)):
            result = result * base
        return result

    def galois(self) -> "CubicElem":
        """The automorphism theta -> s(theta) -> s^2(theta) = t - theta - s(theta)."""
        t = self.F.t
        return CubicElem(self.F, self.c0 + t * self.c2, -self.c2, self.c1 - self.c2)

    def trace(self) -> Rat:
        """Tr(1) = 3 and Tr(theta) = Tr(s(theta)) = t, extended linearly."""
        return 3 * self.c0 + self.F.t * (self.c1 + self.c2)

    def norm(self) -> Rat:
        p = self * self.galois() * self.galois().galois()
        assert p.c1 == 0 and p.c2 == 0
        return p.c0

    def inverse(self) -> "CubicElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inversion of 0")
        return self.galois() * self.galois().galois() * Fraction(1, n)

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0 and self.c2 == 0

    def is_integral(self) -> bool:
        """Membership in Z[theta]; the display basis is unimodular over it."""
        return all(c.denominator == 1 for c in self.coords())

    def is_unit(self) -> bool:
        return self.is_integral() and abs(self.norm()) == 1

    def is_totally_positive(self) -> bool:
        """All elementary symmetric functions of the embeddings positive."""
        e1 = self.trace()
        if e1 <= 0:
            return False
        p2 = (self * self).trace()
        if e1 * e1 - p2 <= 0:
            return False
        return self.norm() > 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.c1 == 0 and self.c2 == 0 and self.c0 == other
        if isinstance(other, CubicElem):
            return self.F == other.F and self.coords() == other.coords()
        return NotImplemented

    def __hash__(self):
        return hash((self.F.t, self.coords()))

    def __repr__(self):
        return f"({self.c0}+{self.c1}*th+{self.c2}*s(th))"


@lru_cache(maxsize=None)
def reduction_units(F: SimplestCubicField) -> tuple[CubicElem, ...]:
    """theta, its two conjugates, and their inverses; these six bound the
    reduction domain."""
    t = F.t
    th = F.theta()
    sth = F.sigma_theta()
    s2th = F.elem(t, -1, -1)
    units = (th, sth, s2th, F.elem(-1, 0, -1), F.elem(-(t + 1), 1, 1), F.elem(-1, -1, 0))
    for i in range(3):
        assert (units[i] * units[i + 3]) == 1
    return units


def in_reduction_domain_cubic(a: CubicElem, F: SimplestCubicField) -> bool:
    """Tr(a w^2) >= Tr(a) for the six bounding units w; six exact linear
    inequalities in the coordinates of a."""
    if not a.is_totally_positive():
        raise ValueError("element must be totally positive")
    ta = a.trace()
    return all((a * w * w).trace() >= ta for w in reduction_units(F))


def domain_inequality_rows(F: SimplestCubicField) -> list[tuple[Rat, Rat, Rat]]:
    """Coefficient rows of the six domain inequalities, as linear forms
    row . (a0, a1, a2) >= 0."""
    rows = []
    for w in reduction_units(F):
        w2 = w * w
        row = tuple((b * w2).trace() - b.trace() for b in F.basis())
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def rays(F: SimplestCubicField) -> tuple[CubicElem, ...]:
    """The six extreme rays (r1, r2, r3, s1, s2, s3) of the reduction domain.

    The two Galois orbits {r1, r2, r3} and {s1, s2, s3} are related by
    r2 = r1 s(theta)^-2, r3 = r1 theta^2, s2 = s1 theta^2,
    s3 = s1 theta^2 s(theta)^2; all asserted exactly.
    """
    t = F.t
    r1 = F.elem(3, 1, t + 2)
    r2 = F.elem(t * t + 2 * t + 3, -(t + 2), -(t + 1))
    r3 = F.elem(t + 3, t + 1, -1)
    s1 = F.elem(t * t + t + 6, -t, 3)
    s2 = F.elem(t * t + 4 * t + 6, -3, -(t + 3))
    s3 = F.elem(t + 6, t + 3, t)
    th, sth = F.theta(), F.sigma_theta()
    assert r2 == r1 * (sth ** -2)
    assert r3 == r1 * th * th
    assert s2 == s1 * th * th
    assert s3 == s1 * th * th * sth * sth
    assert {r1.galois(), r2.galois(), r3.galois()} == {r1, r2, r3}
    assert {s1.galois(), s2.galois(), s3.galois()} == {s1, s2, s3}
    return r1, r2, r3, s1, s2, s3


def ternary_trace_form(a: CubicElem, F: SimplestCubicField) -> Gram:
    """Gram matrix G with x.G.x = Tr(a (x0 + x1 theta + x2 s(theta))^2)."""
    if not a.is_totally_positive():
        raise ValueError("element must be totally positive")
    b = F.basis()
    return tuple(
        tuple((a * b[i] * b[j]).trace() for j in range(3)) for i in range(3)
    )


def gram_value(G: Gram, x: Sequence[int]) -> Rat:
    return sum(G[i][j] * x[i] * x[j] for i in range(3) for j in range(3))


def _ldl(G: Gram):
    """Exact LDL^T data of a positive definite 3x3 Gram matrix."""
    d1 = G[0][0]
    if d1 <= 0:
        raise ValueError("matrix is not positive definite")
    l01 = G[0][1] / d1
    l02 = G[0][2] / d1
    d2 = G[1][1] - d1 * l01 * l01
    if d2 <= 0:
        raise ValueError("matrix is not positive definite")
    l12 = (G[1][2] - d1 * l01 * l02) / d2
    d3 = G[2][2] - d1 * l02 * l02 - d2 * l12 * l12
    if d3 <= 0:
        raise ValueError("matrix is not positive definite")
    return (d1, d2, d3), (l01, l02, l12)


def _int_range(center: Rat, radius_sq: Rat, scale: Rat):
    """Integers x with scale*(x + center)^2 <= radius_sq, padded then exact."""
    s = floor_sqrt(radius_sq / scale) + 1
    lo = math.ceil(-center - s)
    hi = math.floor(-center + s)
    return lo, hi


def ternary_below(G: Gram, bound: Rat) -> list[tuple[tuple[int, int, int], Rat]]:
    """Nonzero integer triples with x.G.x <= bound, one per +- pair.

    Fincke-Pohst style descent on the exact LDL decomposition; canonical
    representatives have last nonzero coordinate positive.
    """
    (d1, d2, d3), (l01, l02, l12) = _ldl(G)
    out = []
    lo2, hi2 = _int_range(Fraction(0), bound, d3)
    for x2 in range(max(lo2, 0), hi2 + 1):
        rem2 = bound - d3 * x2 * x2
        if rem2 < 0:
            continue
        lo1, hi1 = _int_range(l12 * x2, rem2, d2)
        for x1 in range(lo1, hi1 + 1):
            if x2 == 0 and x1 < 0:
                continue
            q1 = x1 + l12 * x2
            rem1 = rem2 - d2 * q1 * q1
            if rem1 < 0:
                continue
            lo0, hi0 = _int_range(l01 * x1 + l02 * x2, rem1, d1)
            for x0 in range(lo0, hi0 + 1):
                if x2 == 0 and x1 == 0 and x0 <= 0:
                    continue
                v = gram_value(G, (x0, x1, x2))
                if v <= bound:
                    out.append(((x0, x1, x2), v))
    return out


def _canon_triple(p: tuple[int, int, int]) -> tuple[int, int, int]:
    for c in p:
        if c != 0:
            return p if c > 0 else (-p[0], -p[1], -p[2])
    return p


def ternary_min(
    a: CubicElem, F: SimplestCubicField
) -> tuple[Rat, list[tuple[int, int, int]]]:
    """Exact minimum of Tr(a x^2) over nonzero x in Z[theta], with all
    attaining coordinate triples (both signs, lexicographic order)."""
    G = ternary_trace_form(a, F)
    b0 = min(G[0][0], G[1][1], G[2][2])
    items = ternary_below(G, b0)
    m = min(v for _, v in items)
    vecs = {_canon_triple(x) for x, v in items if v == m}
    full = sorted(list(vecs) + [(-x0, -x1, -x2) for x0, x1, x2 in vecs])
    return m, full


def _primitive3(coords) -> tuple[int, int, int]:
    L = math.lcm(*(Fraction(c).denominator for c in coords))
    ints = [int(Fraction(c) * L) for c in coords]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(n // g for n in ints)


def _trace_row(v: CubicElem) -> tuple[Rat, Rat, Rat]:
    """Row of the linear condition Tr(psi v^2) = 0 in the coordinates of psi."""
    w = v * v
    F = v.F
    return tuple((w * b).trace() for b in F.basis())


def facet_vector(
    a: CubicElem, kept: Sequence[CubicElem], dropped: CubicElem, F: SimplestCubicField
) -> CubicElem:
    """Primitive integral psi with Tr(psi v^2) = 0 for both kept minimal
    vectors and Tr(psi dropped^2) > 0."""
    if len(kept) != 2:
        raise ValueError("a facet keeps exactly two minimal vectors")
    r1, r2 = (_trace_row(v) for v in kept)
    cross = (
        r1[1] * r2[2] - r1[2] * r2[1],
        r1[2] * r2[0] - r1[0] * r2[2],
        r1[0] * r2[1] - r1[1] * r2[0],
    )
    if all(c == 0 for c in cross):
        raise ValueError("kept conditions do not have rank 2")
    p = _primitive3(cross)
    psi = F.elem(*p)
    s = (psi * dropped * dropped).trace()
    if s == 0:
        raise ValueError("dropped vector lies on the facet")
    return psi if s > 0 else -psi


# ---------------------------------------------------------------------------
# monogenicity: Dedekind's criterion at every prime dividing t^2 + 3t + 9
# ---------------------------------------------------------------------------


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mul(f, g, p):
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return _poly_trim(out)


def _poly_divmod(f, g, p):
    f = f[:]
    ginv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - len(g) + 1, 0)
    while len(f) >= len(g) and f:
        c = f[-1] * ginv % p
        k = len(f) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] = (f[k + i] - c * b) % p
        _poly_trim(f)
    return _poly_trim(q), f


def _poly_gcd(f, g, p):
    f, g = [c % p for c in f], [c % p for c in g]
    f, g = _poly_trim(f), _poly_trim(g)
    while g:
        f, g = g, _poly_divmod(f, g, p)[1]
    if f:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    return f

def _factor_mod_p(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Factor a monic cubic (or lower) into irreducibles over F_p by root
    scanning; p is small since p divides t^2 + 3t + 9."""
    f = [c % p for c in f]
    factors: dict[tuple[int, ...], int] = {}
    rem = f[:]
    for r in range(p):
        while len(rem) > 1 and sum(c * pow(r, i, p) for i, c in enumerate(rem)) % p == 0:
            rem, z = _poly_divmod(rem, [-r % p, 1], p)
            key = (-r % p, 1)
            factors[key] = factors.get(key, 0) + 1
        if len(rem) == 1:
            break
    if len(rem) > 1:  # rootless quadratic or cubic remainder is irreducible
        factors[tuple(rem)] = factors.get(tuple(rem), 0) + 1
    return [(list(k), e) for k, e in factors.items()]


def _poly_coeffs(t: int) -> list[int]:
    """x^3 - t x^2 - (t+3) x - 1, little-endian."""
    return [-1, -(t + 3), -t, 1]


def _dedekind_ok(t: int, p: int) -> bool:
    """True iff p does not divide the index [O_K : Z[theta]]."""
    f = _poly_coeffs(t)
    factors = _factor_mod_p(f, p)
    gbar = [1]
    hbar = [1]
    for poly, e in factors:
        gbar = _poly_mul(gbar, poly, p)
        for _ in range(e - 1):
            hbar = _poly_mul(hbar, poly, p)
    gh = [0] * 4
    lift_prod: list[int] = [1]
    for poly in (gbar, hbar):
        lift_prod = _poly_trim(
            [
                sum(lift_prod[i] * poly[j] for i in range(len(lift_prod)) for j in range(len(poly)) if i + j == k)
                for k in range(len(lift_prod) + len(poly) - 1)
            ]
        )
    diff = [(lift_prod[i] if i < len(lift_prod) else 0) - (f[i] if i < len(f) else 0) for i in range(4)]
    assert all(c % p == 0 for c in diff)
    T = [c // p for c in diff]
    g = _poly_gcd(T, gbar, p)
    g = _poly_gcd(g, hbar, p)
    return len(g) <= 1


def is_monogenic(F: SimplestCubicField) -> bool:
    """Z[theta] is the maximal order iff Dedekind's criterion passes at every
    prime dividing t^2 + 3t + 9 (the criterion is vacuous at all others
    because disc P = (t^2+3t+9)^2)."""
    return all(_dedekind_ok(F.t, p) for p in _prime_factors(F.delta_root))


# ---------------------------------------------------------------------------
# reduction, equivalence, and the Voronoi walk in the 3-dimensional form space
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _descent_steps(F: SimplestCubicField) -> tuple[CubicElem, ...]:
    """Unit squares used by the greedy trace descent: the six bounding units
    plus the two mixed directions theta/s(theta) and its inverse."""
    th, sth = F.theta(), F.sigma_theta()
    extra = (th * sth.inverse(), sth * th.inverse())
    return tuple(w * w for w in reduction_units(F) + extra)


def reduce_cubic(a: CubicElem, F: SimplestCubicField) -> CubicElem:
    """Unit-square multiple of a with minimal trace; lies in the reduction
    domain.  Greedy descent with a small window rescue for flat steps."""
    if not a.is_totally_positive():
        raise ValueError("element must be totally positive")
    th2 = F.theta() ** 2
    sth2 = F.sigma_theta() ** 2
    while True:
        improved = False
        for w2 in _descent_steps(F):
            an = a * w2
            if an.trace() < a.trace():
                a, improved = an, True
        if improved:
            continue
        for k in range(-2, 3):
            for l in range(-2, 3):
                an = a * th2**k * sth2**l
                if an.trace() < a.trace():
                    a, improved = an, True
        if not improved:
            return a


def _normalized_coords(a: CubicElem) -> tuple[int, int, int]:
    return _primitive3(a.coords())


def equivalent_cubic(a: CubicElem, b: CubicElem, F: SimplestCubicField, orbit: int = 3) -> bool:
    """b = lambda * a * u^2 for a positive rational lambda and unit u,
    decided on reduced representatives against a bounded unit orbit."""
    ar = _normalized_coords(reduce_cubic(a, F))
    br = reduce_cubic(b, F)
    th2 = F.theta() ** 2
    sth2 = F.sigma_theta() ** 2
    for k in range(-orbit, orbit + 1):
        row = br * th2**k * sth2 ** (-orbit)
        for _ in range(2 * orbit + 1):
            if _normalized_coords(row) == ar:
                return True
            row = row * sth2
    return False


def _min_data(a: CubicElem, F: SimplestCubicField):
    m, vecs = ternary_min(a, F)
    canon = sorted({_canon_triple(v) for v in vecs})
    elems = [F.elem(*p) for p in canon]
    return m, elems


def _neighbor_across_cubic(
    a: CubicElem,
    kept: list[CubicElem],
    psi: CubicElem,
    mu: Rat,
    F: SimplestCubicField,
) -> CubicElem:
    """Least rho > 0 giving a + rho*psi a minimal vector outside the kept
    facet; same exact probe scheme as the quadratic walk."""
    kept_triples = frozenset(_canon_triple(tuple(int(c) for c in v.coords())) for v in kept)
    lo = hi = None
    rho = Fraction(1)
    for _ in range(20000):
        b = a + psi * rho
        if not b.is_totally_positive():
            hi = rho
        else:
            G = ternary_trace_form(b, F)
            items = ternary_below(G, mu)
            m = min((v for _, v in items), default=None)
            if m == mu:
                if any(_canon_triple(x) not in kept_triples for x, v in items if v == mu):
                    return b
                lo = rho
            else:
                assert m is not None and m < mu
                best = None
                for x, _ in items:
                    e = F.elem(*x)
                    tpsi = (psi * e * e).trace()
                    if tpsi < 0:
                        r = ((a * e * e).trace() - mu) / (-tpsi)
                        if best is None or r < best:
                            best = r
                assert best is not None and 0 < best <= rho
                bstar = a + psi * best
                Gs = ternary_trace_form(bstar, F)
                its = ternary_below(Gs, mu)
                assert min(v for _, v in its) == mu
                assert any(_canon_triple(x) not in kept_triples for x, v in its if v == mu)
                return bstar
        if hi is None:
            rho = 2 * rho if lo is None else 2 * lo
        elif lo is None:
            rho = hi / 2
        else:
            rho = (lo + hi) / 2
    raise RuntimeError("critical step search failed to converge")


def _facets3(vecs: list[CubicElem]):
    """Partition minimal vectors into exactly three square-rays; each facet
    keeps two rays and drops the third."""
    groups: dict[tuple[int, int, int], list[CubicElem]] = {}
    for v in vecs:
        w = v * v
        groups.setdefault(_primitive3(w.coords()), []).append(v)
    if len(groups) != 3:
        raise RuntimeError(f"expected 3 minimal-vector rays, got {len(groups)}")
    keys = sorted(groups)
    facets = []
    for i in range(3):
        kept_keys = [keys[j] for j in range(3) if j != i]
        facets.append((groups[kept_keys[0]][0], groups[kept_keys[1]][0], groups[keys[i]][0],
                       frozenset(kept_keys)))
    return facets


def enumerate_cubic_classes(
    F: SimplestCubicField, node_budget: int = 64
) -> tuple[int, list[CubicElem]]:
    """Voronoi walk over perfect unary forms of Z[theta], starting from the
    ray r1; returns the class count and reduced representatives."""
    r1 = rays(F)[0]
    reps = [reduce_cubic(r1, F)]
    queue = [reps[0]]
    while queue:
        a = queue.pop(0)
        mu, vecs = _min_data(a, F)
        for v_keep1, v_keep2, v_drop, _kept in _facets3(vecs):
            psi = facet_vector(a, [v_keep1, v_keep2], v_drop, F)
            kept = [v for v in vecs if (psi * v * v).trace() == 0]
            nb = _neighbor_across_cubic(a, kept, psi, mu, F)
            if not any(equivalent_cubic(nb, r, F) for r in reps):
                if len(reps) >= node_budget:
                    raise RuntimeError("cubic class walk exceeded node budget")
                nbr = reduce_cubic(nb, F)
                reps.append(nbr)
                queue.append(nbr)
    return len(reps), reps


def nonequivalence_check(F: SimplestCubicField) -> bool:
    """The forms r1 x^2 and (s1/2) x^2 share the minimum t^2+3t+9 yet are
    inequivalent: s1/2 is not integral while every unit-square multiple of
    r1 is, and scale is pinned by the equal minima."""
    r1 = rays(F)[0]
    s1 = rays(F)[3]
    half_s1 = s1 * Fraction(1, 2)
    if half_s1.is_integral():
        return False
    if ternary_min(r1, F)[0] != F.delta_root:
        return False
    if ternary_min(s1, F)[0] != 2 * F.delta_root:
        return False
    th2 = F.theta() ** 2
    sth2 = F.sigma_theta() ** 2
    for k in range(-2, 3):
        for l in range(-2, 3):
            if not (r1 * th2**k * sth2**l).is_integral():
                return False
    return not equivalent_cubic(r1, s1, F)


def _minimal_vector_constants(F: SimplestCubicField):
    """The minimal vectors of r1 and s1: v1 = -(t+1)+theta+s(theta),
    v2 = 1, v3 = theta, v4 = 1+theta."""
    t = F.t
    v1 = F.elem(-(t + 1), 1, 1)
    v2 = F.one()
    v3 = F.theta()
    v4 = F.elem(1, 1, 0)
    return v1, v2, v3, v4


def verify_cubic_walk(t: int) -> dict:
    """Exact verification of the whole facet-walk computation at parameter t.

    Checks the ray relations, the minima and minimal vectors of r1 and s1,
    the closed forms of the five facet vectors, their positivity traces, the
    five neighbor identities, the walk's recovery of each neighbor, and the
    two-class closure.  Returns a structured pass/fail report.
    """
    F = SimplestCubicField(t)
    D0 = F.delta_root
    th, sth = F.theta(), F.sigma_theta()
    r1, r2, r3, s1, s2, s3 = rays(F)
    v1, v2, v3, v4 = _minimal_vector_constants(F)
    report: dict = {"t": t, "monogenic": is_monogenic(F), "delta_root": D0}
    identities: list[dict] = []

    def check(name: str, ok: bool, detail: str = ""):
        row = {"name": name, "pass": bool(ok)}
        if detail:
            row["detail"] = detail
        identities.append(row)

    check("ray_r2", r2 == r1 * sth**-2)
    check("ray_r3", r3 == r1 * th**2)
    check("ray_s2", s2 == s1 * th**2)
    check("ray_s3", s3 == s1 * th**2 * sth**2)

    def canon_set(elems):
        return {_canon_triple(tuple(int(c) for c in e.coords())) for e in elems}

    mu_r1, vec_r1 = _min_data(r1, F)
    mu_s1, vec_s1 = _min_data(s1, F)
    check("r1_minimum", mu_r1 == D0 and canon_set(vec_r1) == canon_set([v1, v2, v3]))
    check("s1_minimum", mu_s1 == 2 * D0 and canon_set(vec_s1) == canon_set([v2, v3, v4]))

    psi = {
        1: F.elem(2 * t * t + 7 * t + 9, t * t + 3 * t + 4, t**3 + 5 * t * t + 12 * t + 11),
        2: F.elem(t, t + 1, -(t + 4)),
        3: F.elem(t * t + t, -(t + 2), -(2 * t + 1)),
        4: F.elem(t * t + 3 * t, -(t + 4), -(2 * t + 5)),
        5: F.elem(t * t - t + 6, -t + 2, 7),
    }
    facet_data = {
        1: (r1, [v1, v3], v2),
        2: (r1, [v1, v2], v3),
        3: (r1, [v2, v3], v1),
        4: (s1, [v2, v4], v3),
        5: (s1, [v3, v4], v2),
    }
    for k, (base, kept, dropped) in facet_data.items():
        computed = facet_vector(base, kept, dropped, F)
        disp = psi[k]
        check(
            f"psi{k}_closed_form",
            computed == F.elem(*_primitive3(disp.coords()))
            and all((disp * v * v).trace() == 0 for v in kept),
        )

    quartic = t**4 + 6 * t**3 + 21 * t * t + 36 * t + 27
    check("psi1_positivity", (psi[1] * v2 * v2).trace() == quartic)
    check("psi2_positivity", (psi[2] * v3 * v3).trace() == quartic)
    check("psi3_positivity", (psi[3] * v1 * v1).trace() == quartic)
    check("psi4_positivity", (psi[4] * v3 * v3).trace() == 2 * D0)
    check("psi5_positivity", (psi[5] * v2 * v2).trace() == 2 * D0)

    half = Fraction(1, 2)
    n_forms = {
        1: (r1 + psi[1] * half, s1 * sth**2 * half),
        2: (r1 + psi[2] * half, s3 * half),
        3: (r1 + psi[3] * half, s1 * half),
        4: (s1 + psi[4], r1 * sth**-2 * 2),
        5: (s1 + psi[5], r1 * th**-2 * sth**-2 * 2),
    }
    for k, (lhs, rhs) in n_forms.items():
        check(f"neighbor_n{k}", lhs == rhs)

    for k, (base, kept, dropped) in facet_data.items():
        fv = facet_vector(base, kept, dropped, F)
        mu = D0 if base == r1 else 2 * D0
        nb = _neighbor_across_cubic(base, kept, fv, mu, F)
        check(f"walk_n{k}", nb == n_forms[k][0])

    shared = _neighbor_across_cubic(
        s1, [v2, v3], facet_vector(s1, [v2, v3], v4, F), 2 * D0, F
    )
    check("walk_shared_facet", shared == r1 * 2)

    n_K, reps = enumerate_cubic_classes(F)
    check(
        "classes_two",
        n_K == 2
        and any(equivalent_cubic(r, r1, F) for r in reps)
        and any(equivalent_cubic(r, s1, F) for r in reps),
    )
    check("half_s1_obstruction", nonequivalence_check(F))

    report["identities"] = identities
    report["n_K"] = n_K
    report["all_pass"] = all(row["pass"] for row in identities)
    return report
