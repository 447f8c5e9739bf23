"""Weight-truncated Buchberger algorithm for WT-homogeneous ideals.

Only what the initial-ideal criterion needs: two degree-compatible term
orders, full reduction, Buchberger with the Gebauer-Moeller pair update and
the normal selection strategy (smallest WT-weight of the lcm first), and a
reduced basis at the end.  S-pairs whose lcm has WT-weight above the cap are
never formed; since S-polynomials and reductions of WT-homogeneous input stay
homogeneous, the result is a Groebner basis in every weight up to the cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence

from .basis import PreconditionError
from .poly import WT, XYZ, Monomial, ParamSet, Poly, PolyRing, weight


class TermOrder:
    """Degree-compatible monomial order; larger key means larger monomial.

    Variables are ranked in ring position order (x > y > z).
    """

    KINDS = ("grlex", "grevlex")

    def __init__(self, kind: str = "grlex"):
        if kind not in self.KINDS:
            raise ValueError(f"unknown term order {kind!r}")
        self.kind = kind
        if kind == "grlex":
            self.key = lambda mono: (sum(mono), mono)
        else:
            self.key = lambda mono: (sum(mono), tuple(-e for e in reversed(mono)))

    def __repr__(self):
        return f"TermOrder({self.kind!r})"

    def __eq__(self, other):
        return isinstance(other, TermOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(self.kind)

    def lead(self, f: Poly) -> Monomial:
        return max(f.terms, key=self.key)


GRLEX = TermOrder("grlex")
GREVLEX = TermOrder("grevlex")


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_monos(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monic(f: Poly, order: TermOrder) -> Poly:
    D = f.ring.domain
    return f.scale(D.inv(f.terms[order.lead(f)]))


def normal_form(f: Poly, basis: Sequence[Poly], order: TermOrder) -> Poly:
    """Fully reduce ``f`` by ``basis``: no monomial of the result is divisible by a lead."""
    D = f.ring.domain
    key = order.key
    reducers = []
    for b in basis:
        if not b.terms:
            continue
        lm = order.lead(b)
        inv = D.inv(b.terms[lm])
        tail = [(mono, D.mul(c, inv)) for mono, c in b.terms.items() if mono != lm]
        reducers.append((lm, tail))
    p = dict(f.terms)
    rem = {}
    while p:
        lm = max(p, key=key)
        c = p.pop(lm)
        for rlm, tail in reducers:
            if _divides(rlm, lm):
                q = _sub_monos(lm, rlm)
                for mono, v in tail:
                    mm = tuple(a + b for a, b in zip(mono, q))
                    nv = D.sub(p.get(mm, D.zero), D.mul(c, v))
                    if D.is_zero(nv):
                        p.pop(mm, None)
                    else:
                        p[mm] = nv
                break
        else:
            rem[lm] = c
    return Poly(f.ring, rem)


def spoly(f: Poly, g: Poly, order: TermOrder) -> Poly:
    """S-polynomial of two monic polynomials."""
    lf, lg = order.lead(f), order.lead(g)
    L = _lcm(lf, lg)
    return f.mul_monomial(_sub_monos(L, lf)) - g.mul_monomial(_sub_monos(L, lg))


@dataclass
class GroebnerBasis:
    generators: List[Poly]
    order: TermOrder
    weight_cap: int
    weights: tuple = WT

    def leads(self) -> List[Monomial]:
        return [self.order.lead(g) for g in self.generators]


def _update(G, leads, pairs, f_lead, weights, cap):
    """Gebauer-Moeller update for a new basis element with lead ``f_lead``."""
    n = len(G)
    kept = set()
    for (i, j) in pairs:
        L = _lcm(leads[i], leads[j])
        if (_divides(f_lead, L) and L != _lcm(leads[i], f_lead)
                and L != _lcm(leads[j], f_lead)):
            continue
        kept.add((i, j))
    by_lcm = {}
    for i in range(n):
        by_lcm.setdefault(_lcm(leads[i], f_lead), []).append(i)
    minimal = []
    for L in sorted(by_lcm, key=lambda mono: (weight(mono, weights), sum(mono), mono)):
        if not any(_divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        if weight(L, weights) > cap:
            continue
        idx = by_lcm[L]
        # product criterion: coprime leads reduce to zero
        if any(_lcm(leads[i], f_lead) == tuple(a + b for a, b in zip(leads[i], f_lead))
               for i in idx):
            continue
        kept.add((min(idx), n))
    return kept


def buchberger_truncated(gens: Sequence[Poly], order: TermOrder = GRLEX,
                         weight_cap: int = 10**9, weights=WT) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal of ``gens`` in all weights <= ``weight_cap``."""
    for g in gens:
        if not g.is_homogeneous(weights):
            raise PreconditionError(f"generator {g} is not weighted homogeneous")
    G: List[Poly] = []
    leads: List[Monomial] = []
    pairs = set()
    for g in gens:
        if not g.terms or weight(next(iter(g.terms)), weights) > weight_cap:
            continue
        g = normal_form(g, G, order)
        if not g.terms:
            continue
        g = monic(g, order)
        lm = order.lead(g)
        pairs = _update(G, leads, pairs, lm, weights, weight_cap)
        G.append(g)
        leads.append(lm)

    def pair_key(p):
        L = _lcm(leads[p[0]], leads[p[1]])
        return (weight(L, weights), order.key(L), p)

    while pairs:
        p = min(pairs, key=pair_key)
        pairs.discard(p)
        s = spoly(G[p[0]], G[p[1]], order)
        r = normal_form(s, G, order)
        if r.terms:
            r = monic(r, order)
            lm = order.lead(r)
            pairs = _update(G, leads, pairs, lm, weights, weight_cap)
            G.append(r)
            leads.append(lm)
    return GroebnerBasis(_interreduce(_minimalize(G, order), order), order, weight_cap, weights)


def _minimalize(G: List[Poly], order: TermOrder) -> List[Poly]:
    out = []
    for f in sorted(G, key=lambda h: order.key(order.lead(h))):
        lf = order.lead(f)
        if not any(_divides(order.lead(h), lf) for h in out):
            out.append(f)
    return out


def _interreduce(G: List[Poly], order: TermOrder) -> List[Poly]:
    out = []
    for i, g in enumerate(G):
        r = normal_form(g, G[:i] + G[i + 1:], order)
        out.append(monic(r, order))
    return sorted(out, key=lambda h: order.key(order.lead(h)))


def xy_power_generators(ring: PolyRing, r: int) -> List[Poly]:
    """The r + 1 monomial generators x^i y^(r-i) of (x, y)^r."""
    return [ring.monomial((i, r - i) + (0,) * (ring.nvars - 2)) for i in range(r, -1, -1)]


@dataclass
class InitialIdealVerdict:
    good: bool
    low_degree_leads: List[Monomial]
    leads: List[Monomial] = field(default_factory=list)
    basis: GroebnerBasis = None

    def summary(self) -> dict:
        by_degree = {}
        for mono in self.leads:
            by_degree[sum(mono)] = by_degree.get(sum(mono), 0) + 1
        return {"good": self.good, "low_degree_leads": [list(m) for m in self.low_degree_leads],
                "lead_count_by_degree": dict(sorted(by_degree.items()))}


def ideal_basis(g: Poly, params: ParamSet, order: TermOrder = GRLEX,
                weight_cap: int | None = None) -> GroebnerBasis:
    """Truncated Groebner basis of (x, y)^ell + (g), cap 3(ell - 1) by default."""
    ell = params.ell
    cap = 3 * (ell - 1) if weight_cap is None else weight_cap
    return buchberger_truncated(xy_power_generators(g.ring, ell) + [g], order, cap)


def initial_ideal_verdict(g: Poly, params: ParamSet,
                          order: TermOrder = GRLEX) -> InitialIdealVerdict:
    """Is in((x, y)^ell + (g)) = (x, y, z)^ell?

    Any member of the ideal of degree <= ell - 1 has WT-weight <= 3(ell - 1),
    so it shows up as a lead monomial of degree <= ell - 1 in the basis
    truncated at that weight; together with the equality of Hilbert functions
    of the two quotients, the absence of such leads is equivalent to the
    initial ideal being (x, y, z)^ell.
    """
    if g.ring.names != XYZ:
        raise PreconditionError("g must live in k[x,y,z]")
    if not g.is_homogeneous(WT, 3 * params.m):
        raise PreconditionError(f"g is not WT-homogeneous of weight {3 * params.m}")
    gb = ideal_basis(g, params, order)
    leads = gb.leads()
    low = [mono for mono in leads if sum(mono) <= params.ell - 1]
    return InitialIdealVerdict(not low, low, leads, gb)
