"""Constructive lift of g0 to the data (gbar, k, kbar, g1, h, h1) and the surface equation.

Given g0 in k[x,y,z], WT-homogeneous of weight 3m and monic in z^m, and a
shift a >= 0, the construction produces g1, h, h1 in k[x,y,w] with

    (g_inf + t h)(x - t y (g1 + t h1)) == x g_inf - t y w^(a+d-1)  mod (x, y)^d

for every t.  :func:`construct_lift` builds the data step by step and
:func:`verify_congruence` re-checks the identity independently, treating t as
a formal parameter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .basis import PreconditionError
from .fields import TPoly, TPolyRing
from .poly import (WT, XYZ, ParamSet, Poly, PolyRing,
                   dehomogenize_at_z, from_w_coefficients, homogenize,
                   mul_mod_xy_power, w_coefficients)


class ConstructionError(RuntimeError):
    """A step of the construction produced something that cannot occur for valid input."""


@dataclass
class LiftWitness:
    a: int
    g_inf: Poly
    gbar: Poly
    k: Poly
    kbar: Poly
    g1: Poly
    h: Poly
    h1: Poly
    p: List[Poly] = field(default_factory=list)
    q: List[Poly] = field(default_factory=list)
    c: List[Poly] = field(default_factory=list)
    e: List[Poly] = field(default_factory=list)
    b: List[Poly] = field(default_factory=list)

    def polynomials(self) -> Dict[str, Poly]:
        return {"g_inf": self.g_inf, "gbar": self.gbar, "k": self.k, "kbar": self.kbar,
                "g1": self.g1, "h": self.h, "h1": self.h1}


def check_g0(g0: Poly, params: ParamSet):
    m, ell = params.m, params.ell
    if g0.ring.names != XYZ:
        raise PreconditionError("g0 must live in k[x,y,z]")
    if not g0.is_homogeneous(WT, 3 * m):
        raise PreconditionError(f"g0 is not WT-homogeneous of weight {3 * m}")
    if g0.coeff((0, 0, m)) != g0.ring.domain.one:
        raise PreconditionError("g0 is not monic in z^m")
    if any(a + b >= ell for a, b, _ in g0.terms):
        raise PreconditionError(f"g0 has a term in (x, y)^{ell}")
    if g0.ring.domain.is_zero(g0.coeff((3 * (m - 1), 0, 1))):
        raise PreconditionError(f"x^{3 * (m - 1)}*z does not appear in g0")


def g_infinity(g0: Poly, params: ParamSet) -> Poly:
    return dehomogenize_at_z(homogenize(g0, params.d))


def _w_power(ring: PolyRing, e: int) -> Poly:
    return ring.monomial((0, 0, e))


def construct_lift(g0: Poly, params: ParamSet) -> LiftWitness:
    check_g0(g0, params)
    m, d = params.m, params.d
    a = params.a or 0
    r = d - 1
    g_inf = g_infinity(g0, params)
    ring = g_inf.ring
    D = ring.domain

    # g_inf = sum_j p_j w^(2(m-1) - j)
    p = w_coefficients(g_inf)
    if len(p) != 2 * (m - 1) + 1:
        raise ConstructionError(f"g_inf has w-degree {len(p) - 1}, expected {2 * (m - 1)}")

    # gbar = sum_j q_j w^(m - j), q_0 = 1, q_r = -sum_{j<r} p_{r-j} q_j
    q = [ring.one]
    for s in range(1, m + 1):
        acc = ring.zero
        for j in range(s):
            acc = acc + p[s - j] * q[j]
        q.append(-acc)
    gbar = from_w_coefficients(q, m, ring)

    # g_inf * gbar - w^(3m-2) is divisible by x modulo y^(d+4)
    diff = g_inf * gbar - _w_power(ring, 3 * m - 2)
    diff = diff.filter(lambda mono: mono[1] < d + 4)
    k_full = {}
    for (ex, ey, ew), v in diff.terms.items():
        if ex == 0:
            raise ConstructionError(
                f"term y^{ey}*w^{ew} of g_inf*gbar - w^{3 * m - 2} is not divisible by x")
        k_full[(ex - 1, ey, ew)] = v
    k = Poly(ring, k_full).truncate_xy(r)
    c = _pad_coefficients(k, 2 * m - 3, ring)

    # f = -gbar * k mod (x, y)^(d-1); kbar solves g_inf * kbar == f
    f = -mul_mod_xy_power(gbar, k, r)
    e = _pad_coefficients(f, 3 * m - 3, ring)
    b: List[Poly] = []
    for i in range(max(m - 2, 0)):
        acc = e[i]
        for j in range(i):
            acc = acc - mul_mod_xy_power(b[j], p[i - j], r)
        b.append(acc.truncate_xy(r))
    kbar = from_w_coefficients(b, m - 1, ring) if b else ring.zero

    wa = _w_power(ring, a)
    y = ring.gen("y")
    g1 = wa * gbar
    h = y * wa * k
    # t^2 coefficient is -y (h g1 + g_inf h1); h g1 carries w^(2a), so h1 must too
    h1 = y * _w_power(ring, 2 * a) * kbar
    return LiftWitness(a, g_inf, gbar, k, kbar, g1, h, h1, p, q, c, e, b)


def _pad_coefficients(f: Poly, top: int, ring: PolyRing) -> List[Poly]:
    """Coefficients of w^top, w^(top-1), ..., w^0 (zero polys where absent)."""
    buckets = [dict() for _ in range(top + 1)]
    for (ex, ey, ew), v in f.terms.items():
        if ew > top:
            raise ConstructionError(f"w-exponent {ew} exceeds {top}")
        buckets[top - ew][(ex, ey, 0)] = v
    return [Poly(ring, t) for t in buckets]


def _lift_t(f: Poly, tring: TPolyRing, power: int = 0) -> Poly:
    """View f in k[t][x,y,w], multiplied by t^power."""
    F = tring.field
    ring = f.ring.with_domain(tring)
    coeffs = [0] * power
    return Poly(ring, {mono: TPoly(coeffs + [c], F) for mono, c in f.terms.items()})


def t_coefficient(f: Poly, k: int, ring: PolyRing) -> Poly:
    """Coefficient of t^k of a polynomial over k[t], as a polynomial over k."""
    return ring.from_terms((mono, c[k]) for mono, c in f.terms.items())


@dataclass
class CongruenceReport:
    holds: bool
    per_power: Dict[int, bool]


def check_congruence(wit: LiftWitness, g0: Poly, params: ParamSet) -> CongruenceReport:
    """Expand (g_inf + t h)(x - t y (g1 + t h1)) - (x g_inf - t y w^(a+d-1)) mod (x, y)^d."""
    d = params.d
    a = wit.a
    g_inf = g_infinity(g0, params)
    ring = g_inf.ring
    F = ring.domain
    tring = TPolyRing(F)
    x, y = ring.gen("x"), ring.gen("y")

    left = _lift_t(g_inf, tring) + _lift_t(wit.h, tring, 1)
    right = _lift_t(x, tring) - _lift_t(y * wit.g1, tring, 1) - _lift_t(y * wit.h1, tring, 2)
    lhs = mul_mod_xy_power(left, right, d)
    rhs = (_lift_t(x * g_inf, tring)
           - _lift_t(y * _w_power(ring, a + d - 1), tring, 1)).truncate_xy(d)
    delta = lhs - rhs
    per_power = {k: not t_coefficient(delta, k, ring).terms for k in range(4)}
    higher = any(c.degree > 3 for c in delta.terms.values())
    return CongruenceReport(all(per_power.values()) and not higher, per_power)


def verify_congruence(wit: LiftWitness, g0: Poly, params: ParamSet) -> bool:
    return check_congruence(wit, g0, params).holds


def verify_congruence_at(wit: LiftWitness, g0: Poly, params: ParamSet, t) -> bool:
    """Numeric spot check of the identity at a single field value of t."""
    d = params.d
    g_inf = g_infinity(g0, params)
    ring = g_inf.ring
    x, y = ring.gen("x"), ring.gen("y")
    lhs = mul_mod_xy_power(g_inf + wit.h.scale(t),
                           x - (y * (wit.g1 + wit.h1.scale(t))).scale(t), d)
    rhs = (x * g_inf - (y * _w_power(ring, wit.a + d - 1)).scale(t)).truncate_xy(d)
    return lhs == rhs


@dataclass
class SurfaceData:
    G: Poly
    main: Poly          # X * G * Z^a
    tail: Poly          # Y * W^(a+d-1); the equation is main - t * tail
    t: Optional[object]
    degree: int
    type_e: int
    line: str = "X=Y=0"

    def equation(self) -> Poly:
        """The surface equation; over k[t] when t is symbolic."""
        if self.t is None:
            tring = TPolyRing(self.G.ring.domain)
            return _lift_t(self.main, tring) - _lift_t(self.tail, tring, 1)
        return self.main - self.tail.scale(self.t)

    def text(self) -> str:
        if self.t is None:
            return f"{self.main} - t*{self.tail}"
        return str(self.equation())


def surface_equation(g0: Poly, params: ParamSet, t=None) -> SurfaceData:
    """Data of the surface X G Z^a - t Y W^(a+d-1) = 0 (``t=None`` keeps t symbolic)."""
    check_g0(g0, params)
    a = params.a or 0
    d = params.d
    G = homogenize(g0, d)
    ring = G.ring
    if t is not None:
        t = ring.domain(t)
        if ring.domain.is_zero(t):
            raise PreconditionError("t must be nonzero")
    main = ring.gen("X") * G * ring.monomial((0, 0, a, 0))
    tail = ring.monomial((0, 1, 0, a + d - 1))
    return SurfaceData(G, main, tail, t, a + d, a + params.m - 1)
