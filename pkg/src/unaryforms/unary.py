"""Unary forms a*x^2 over real quadratic fields.

Reduction domain membership, exact minima over the ring of integers,
perfection, the Voronoi neighboring-form walk, homothety-class
enumeration, and the non-reducibility predicates.

A form is the pair (field, totally positive generator a).  The form space
is two-dimensional: a is identified with its coordinate pair (a1, a2) over
(1, sqrt(d)), and a minimal vector v enters linear conditions through the
coordinates of v^2 in the same basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .binary import BinaryForm, enumerate_below, gauss_reduce, min_and_vectors, trace_form
from .quadratic import (
    QuadElem,
    QuadField,
    Rat,
    fundamental_unit,
    unit_square,
)


@dataclass(frozen=True)
class UnaryForm:
    F: QuadField
    a: QuadElem

    def __post_init__(self):
        if self.a.F != self.F:
            raise ValueError("generator belongs to a different field")

    def trace(self) -> Rat:
        return self.a.trace()


@dataclass(frozen=True)
class MinData:
    """Minimum mu of Tr(a x^2) over nonzero integers of the field, with the
    canonical-sign minimal vectors (both signs counted in M(a))."""

    mu: Rat
    vectors: tuple[QuadElem, ...]
    all_units: bool


@dataclass
class PerfectClass:
    representative: UnaryForm
    min_data: MinData
    neighbors: list[int] = field(default_factory=list)


def _canon_pair(p: tuple[int, int]) -> tuple[int, int]:
    """Sign-normalized pair: first nonzero coordinate positive."""
    if p[0] < 0 or (p[0] == 0 and p[1] < 0):
        return (-p[0], -p[1])
    return p


def _half_trace(c: QuadElem, w: QuadElem) -> Rat:
    """Tr(c*w)/2 as a bilinear expression in coordinates."""
    return c.x1 * w.x1 + c.F.d * c.x2 * w.x2


def _primitive(coords: tuple[Rat, ...]) -> tuple[int, ...]:
    """Scale a rational tuple by a positive rational into primitive integers."""
    L = math.lcm(*(c.denominator for c in coords))
    ints = [int(c * L) for c in coords]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(n // g for n in ints)


def normalize_scale(f: UnaryForm) -> UnaryForm:
    """Homothety representative with primitive integer coordinates."""
    p = _primitive((f.a.x1, f.a.x2))
    return UnaryForm(f.F, QuadElem(f.F, p[0], p[1]))


def in_reduction_domain(f: UnaryForm) -> bool:
    """|a2| * d * u2 <= a1 * (u1 - 1) for u^2 = u1 + u2*sqrt(d), equivalent to
    Tr(a) <= Tr(a u^2) and Tr(a) <= Tr(a u^-2)."""
    if not f.a.is_totally_positive():
        raise ValueError("generator must be totally positive")
    u2 = unit_square(f.F)
    return abs(f.a.x2) * f.F.d * u2.x2 <= f.a.x1 * (u2.x1 - 1)


def reduce_unary(f: UnaryForm) -> tuple[UnaryForm, QuadElem]:
    """Trace-minimal point (a*u^2k, u^k) of the orbit a*u^2Z; lands in the
    reduction domain since the trace is strictly convex along the orbit."""
    a = f.a
    if not a.is_totally_positive():
        raise ValueError("generator must be totally positive")
    u2 = unit_square(f.F)
    k = 0
    while True:
        an = a * u2
        if an.trace() < a.trace():
            a, k = an, k + 1
        else:
            break
    while True:
        an = a * u2.inverse()
        if an.trace() < a.trace():
            a, k = an, k - 1
        else:
            break
    return UnaryForm(f.F, a), fundamental_unit(f.F) ** k


def mu_and_minvecs(f: UnaryForm) -> MinData:
    """Exact minimum of the trace form and its minimal vectors in O_K."""
    g = trace_form(f.a)
    m, vecs = min_and_vectors(g)
    canon = sorted({_canon_pair(v) for v in vecs})
    elems = tuple(f.F.from_integral_coords(*p) for p in canon)
    return MinData(2 * m, elems, all(abs(e.norm()) == 1 for e in elems))


def _square_rays(md: MinData) -> dict[tuple[int, int], list[QuadElem]]:
    """Group minimal vectors by the primitive direction of v^2 in (1, sqrt d)."""
    rays: dict[tuple[int, int], list[QuadElem]] = {}
    for v in md.vectors:
        w = v * v
        rays.setdefault(_primitive((w.x1, w.x2)), []).append(v)
    return rays


def is_perfect(f: UnaryForm) -> bool:
    """Rank-2 test on {v^2 : v in M(a)}: the linear conditions
    z*s1(v^2) + w*s2(v^2) = mu determine (z, w) uniquely."""
    return len(_square_rays(mu_and_minvecs(f))) >= 2


def _facet_psi(F: QuadField, kept_ray: tuple[int, int], drop_sq: QuadElem) -> QuadElem:
    """Primitive integer solution of Tr(psi * v^2) = 0 on the kept ray, signed
    so that Tr(psi * drop^2) > 0."""
    w1, w2 = kept_ray
    p = _primitive((Fraction(-F.d * w2), Fraction(w1)))
    psi = QuadElem(F, p[0], p[1])
    s = _half_trace(psi, drop_sq)
    if s == 0:
        raise ValueError("dropped vector lies on the kept facet")
    return psi if s > 0 else -psi


def _pairs_below(a: QuadElem, bound_g: Rat) -> list[tuple[int, int]]:
    """Canonical integer pairs x with Tr(a x^2)/2 <= bound_g."""
    g = trace_form(a)
    gr, U = gauss_reduce(g)
    return [_canon_pair(U.apply(p)) for p, _ in enumerate_below(gr, bound_g)]


def _neighbor_across(
    f: UnaryForm, kept_pairs: frozenset, psi: QuadElem, mu_g: Rat
) -> UnaryForm:
    """Least rho > 0 with a new minimal vector for a + rho*psi.

    Probes the ray exactly: a probe with the original minimum and no new
    vector is below the critical rho, a probe leaving the positive cone is
    above it, and a probe with a smaller minimum yields the finite candidate
    set {x : Tr(b x^2) <= mu} from which the critical rho is read off as
    min (Tr(a x^2) - mu) / (-Tr(psi x^2)) over candidates with
    Tr(psi x^2) < 0.
    """
    F, a = f.F, f.a
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    rho = Fraction(1)
    for _ in range(20000):
        b = a + psi * rho
        if not b.is_totally_positive():
            hi = rho
        else:
            m, vecs = min_and_vectors(trace_form(b))
            if m == mu_g:
                new = [v for v in vecs if _canon_pair(v) not in kept_pairs]
                if new:
                    return UnaryForm(F, b)
                lo = rho
            else:
                best: Optional[Fraction] = None
                for p in _pairs_below(b, mu_g):
                    x = F.from_integral_coords(*p)
                    w = x * x
                    gpsi = _half_trace(psi, w)
                    if gpsi < 0:
                        r = (_half_trace(a, w) - mu_g) / (-gpsi)
                        if best is None or r < best:
                            best = r
                assert best is not None and 0 < best <= rho
                bstar = a + psi * best
                mstar, vstar = min_and_vectors(trace_form(bstar))
                assert mstar == mu_g
                assert any(_canon_pair(v) not in kept_pairs for v in vstar)
                return UnaryForm(F, bstar)
        if lo is None and hi is None:
            rho = 2 * rho
        elif hi is None:
            rho = 2 * lo
        elif lo is None:
            rho = hi / 2
        else:
            rho = (lo + hi) / 2
    raise RuntimeError("critical step search failed to converge")


def voronoi_neighbor(f: UnaryForm, drop: QuadElem) -> UnaryForm:
    """Perfect neighbor across the facet obtained by dropping one minimal
    vector; the remaining vectors must span a single ray."""
    md = mu_and_minvecs(f)
    if len(_square_rays(md)) < 2:
        raise ValueError("form is not perfect")
    dc = _canon_pair(drop.integral_coords())
    reps = {_canon_pair(v.integral_coords()): v for v in md.vectors}
    if dc not in reps:
        raise ValueError("dropped vector is not minimal")
    kept = [v for p, v in reps.items() if p != dc]
    rays = {_primitive(((v * v).x1, (v * v).x2)) for v in kept}
    if len(rays) != 1:
        raise ValueError("dropping this vector does not leave a rank-1 facet")
    psi = _facet_psi(f.F, next(iter(rays)), reps[dc] * reps[dc])
    kept_pairs = frozenset(_canon_pair(v.integral_coords()) for v in kept)
    return _neighbor_across(f, kept_pairs, psi, Fraction(md.mu, 2))


def _initial_perfect_form(F: QuadField) -> UnaryForm:
    """Walk from x^2 (minimal vectors {+-1}, rank 1) along the unique
    trace-orthogonal direction until a second minimal-vector ray appears."""
    f = UnaryForm(F, F.one())
    md = mu_and_minvecs(f)
    start = _neighbor_across(
        f, frozenset({(1, 0)}), QuadElem(F, 0, 1), Fraction(md.mu, 2)
    )
    assert is_perfect(start)
    return start


def _canonical_rep(f: UnaryForm) -> UnaryForm:
    """Class-canonical representative: reduce, then take the coordinate-least
    normalized form over the trace-tie set on the orbit boundary."""
    fr, _ = reduce_unary(f)
    u2 = unit_square(f.F)
    ties = [fr.a]
    for cand in (fr.a * u2, fr.a * u2.inverse()):
        if cand.trace() == fr.a.trace():
            ties.append(cand)
    best = min(_primitive((c.x1, c.x2)) for c in ties)
    return UnaryForm(f.F, QuadElem(f.F, best[0], best[1]))


def _class_key(f: UnaryForm) -> tuple:
    r = _canonical_rep(f)
    return (f.F.d, r.a.x1, r.a.x2)


def equivalent(f: UnaryForm, g: UnaryForm) -> bool:
    """Equality of homothety-and-unit classes: g.a = lambda * f.a * u^2 for
    some positive rational lambda and unit u."""
    return _class_key(f) == _class_key(g)


def _facets(md: MinData) -> list[tuple[tuple[int, int], QuadElem]]:
    """The two extreme square-rays of the perfect cone, each with one dropped
    vector fixing the outward orientation."""
    rays = _square_rays(md)
    ordered = sorted(rays, key=lambda r: Fraction(r[1], r[0]))
    lo_ray, hi_ray = ordered[0], ordered[-1]
    out = []
    for ray, other in ((lo_ray, hi_ray), (hi_ray, lo_ray)):
        drop = rays[other][0]
        out.append((ray, drop))
    return out


def enumerate_perfect_classes(
    F: QuadField, node_budget: int = 4096
) -> tuple[int, list[PerfectClass]]:
    """Breadth-first Voronoi walk over perfect forms modulo equivalence.

    Starts from the perfect form nearest x^2, crosses both facets of every
    class representative, and merges nodes with equivalent().  Returns the
    class count n_K and the class graph.
    """
    start = _canonical_rep(_initial_perfect_form(F))
    ids = {_class_key(start): 0}
    classes = [PerfectClass(start, mu_and_minvecs(start))]
    i = 0
    while i < len(classes):
        node = classes[i]
        md = node.min_data
        mu_g = Fraction(md.mu, 2)
        for ray, drop in _facets(md):
            psi = _facet_psi(F, ray, drop * drop)
            kept_pairs = frozenset(
                _canon_pair(v.integral_coords())
                for v in _square_rays(md)[ray]
            )
            nb = _neighbor_across(node.representative, kept_pairs, psi, mu_g)
            key = _class_key(nb)
            if key not in ids:
                if len(classes) >= node_budget:
                    raise RuntimeError("perfect-class walk exceeded node budget")
                ids[key] = len(classes)
                rep = _canonical_rep(nb)
                classes.append(PerfectClass(rep, mu_and_minvecs(rep)))
            node.neighbors.append(ids[key])
        i += 1
    return len(classes), classes


def _rd_construction_parameters(F: QuadField) -> list[tuple[int, int]]:
    """Candidate (m, r) with d = m^2 + r for the explicit perfect-form
    construction: m = round(sqrt d) when -m < r <= m, plus the d = m^2 + 4
    fallback for d = 1 mod 4 (divisibility of 4m by r is not needed)."""
    d = F.d
    cands = []
    s = math.isqrt(d)
    m = s if d - s * s <= s else s + 1
    r = d - m * m
    if r != 0 and -m < r <= m:
        cands.append((m, r))
    if F.omega_is_half and d > 4:
        k = math.isqrt(d - 4)
        if k * k + 4 == d and k % 2 == 1 and (k, 4) not in cands:
            cands.append((k, 4))
    return cands


def rd_perfect_form(F: QuadField) -> UnaryForm:
    """Explicit perfect form 2md + (m^2+d-1)sqrt(d) for d = 2,3 mod 4, or
    2md + (m^2+d-4)sqrt(d) for d = 1 mod 4 with m odd; m the R-D parameter."""
    for m, _ in _rd_construction_parameters(F):
        if F.omega_is_half:
            if m % 2 == 0:
                continue
            a = QuadElem(F, 2 * m * F.d, m * m + F.d - 4)
        else:
            a = QuadElem(F, 2 * m * F.d, m * m + F.d - 1)
        form = UnaryForm(F, a)
        assert a.is_totally_positive()
        assert is_perfect(form)
        return form
    raise ValueError(f"d={F.d} does not meet the construction hypotheses")


_PI_BOUNDS = [
    (Fraction(333, 106), Fraction(355, 113)),
    (
        Fraction(314159265358979323846, 10**20),
        Fraction(314159265358979323847, 10**20),
    ),
]


def _lt_pi_over_4(expr: Rat) -> bool:
    """Exact truth of expr < pi/4 for rational expr."""
    for pi_lo, pi_hi in _PI_BOUNDS:
        if expr < pi_lo / 4:
            return True
        if expr >= pi_hi / 4:
            return False
    raise ArithmeticError("pi bounds insufficient")


def _sqrtd_over_lt_pi_over_4(d: int, denom: Rat) -> bool:
    """Exact truth of sqrt(d)/denom < pi/4 for rational denom > 0."""
    lhs = 16 * d
    for pi_lo, pi_hi in _PI_BOUNDS:
        if lhs < pi_lo * pi_lo * denom * denom:
            return True
        if lhs >= pi_hi * pi_hi * denom * denom:
            return False
    raise ArithmeticError("pi bounds insufficient")


def minkowski_quadratic_predicate(F: QuadField) -> bool:
    """Sufficient condition for non-reducibility: sqrt(disc)/(2 cosh R) < pi/4,
    evaluated exactly through the norm/congruence case split on the
    fundamental unit.  True implies some reduced form beats every unit."""
    u = fundamental_unit(F)
    if F.omega_is_half:
        if u.norm() == 1:
            return _sqrtd_over_lt_pi_over_4(F.d, 2 * u.x1)
        return _lt_pi_over_4(1 / (2 * u.x2))
    if u.norm() == 1:
        return _sqrtd_over_lt_pi_over_4(F.d, u.x1)
    return _lt_pi_over_4(1 / u.x2)


def general_criterion(
    n: int, abs_disc: float, regulator: float, eps: float = 1e-9
) -> Optional[bool]:
    """Degree-n non-reducibility test
    |disc| / (1 + e^((2/sqrt n) R^(1/(n-1))) / 2) <= (n pi/4)^n / Gamma(n/2+1)^2,
    in floating point with a relative guard band; None when indeterminate."""
    if n < 2 or abs_disc <= 0 or regulator <= 0:
        raise ValueError("need n >= 2, abs_disc > 0, regulator > 0")
    lhs = abs_disc / (1 + 0.5 * math.exp((2 / math.sqrt(n)) * regulator ** (1 / (n - 1))))
    rhs = (n * math.pi / 4) ** n / math.gamma(n / 2 + 1) ** 2
    if lhs <= rhs * (1 - eps):
        return True
    if lhs >= rhs * (1 + eps):
        return False
    return None


def find_nonunit_witness(
    F: QuadField, grid: int = 64
) -> Optional[tuple[QuadElem, QuadElem]]:
    """Reduced a and non-unit integral x with Tr(a x^2) < Tr(a), searched on a
    grid of slope ratios inside the reduction domain; None if the budget is
    exhausted (expected exactly for the unit reducible families)."""
    u2 = unit_square(F)
    bound = (u2.x1 - 1) / (F.d * u2.x2)
    for j in range(grid):
        q = 1 - Fraction(j, grid)
        a = QuadElem(F, 1, q * bound)
        md = mu_and_minvecs(UnaryForm(F, a))
        if md.mu < a.trace():
            for v in md.vectors:
                if abs(v.norm()) != 1:
                    return a, v
    return None
