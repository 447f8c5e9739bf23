"""Brute-force search for a member of (x, y)^ell + (g) of standard degree <= ell - 1.

Works one WT-weight at a time.  The weight-n part of the ideal is spanned by
the weight-n monomials of (x, y)^ell and by g times every monomial of weight
n - 3m.  Ordering coordinates high degree first and row-reducing the spanning
vectors, any reduced vector whose pivot is a low-degree monomial is an ideal
member supported on low-degree monomials only.  That is the same as
comparing the rank of the spanning matrix with the rank of its high-degree
rows, and the reduced vector doubles as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .basis import PreconditionError, monomials_of_weight
from .poly import WT, XYZ, ParamSet, Poly


@dataclass
class WeightSlice:
    weight: int
    columns: List[Poly]
    rows: list           # all weight-n monomials, high degree first
    low_start: int       # rows[low_start:] have degree <= ell - 1


@dataclass
class DirectVerdict:
    bad: bool
    weights_checked: List[int]
    witness: Optional[Poly] = None
    witness_weight: Optional[int] = None
    ranks: Dict[int, tuple] = field(default_factory=dict)  # weight -> (rank, rank_high)


def build_slice(g: Poly, params: ParamSet, n: int) -> WeightSlice:
    ell, m = params.ell, params.m
    ring = g.ring
    monos = monomials_of_weight(n)
    high = [mono for mono in monos if sum(mono) >= ell]
    low = [mono for mono in monos if sum(mono) < ell]
    cols = [ring.monomial(mono) for mono in monos if mono[0] + mono[1] >= ell]
    cols += [g.mul_monomial(mu) for mu in monomials_of_weight(n - 3 * m)]
    return WeightSlice(n, cols, high + low, len(high))


def _reduce_slice(sl: WeightSlice, field_):
    """Row-reduce the column vectors; returns (rank, rank_high, low-pivot vectors)."""
    D = field_
    pos = {mono: i for i, mono in enumerate(sl.rows)}
    echelon = {}  # pivot index -> normalized vector (dict index -> value)
    for col in sl.columns:
        vec = {pos[mono]: c for mono, c in col.terms.items()}
        while vec:
            piv = min(vec)
            if piv not in echelon:
                inv = D.inv(vec[piv])
                echelon[piv] = {i: D.mul(v, inv) for i, v in vec.items()}
                break
            c = vec[piv]
            for i, v in echelon[piv].items():
                nv = D.sub(vec.get(i, D.zero), D.mul(c, v))
                if D.is_zero(nv):
                    vec.pop(i, None)
                else:
                    vec[i] = nv
    rank = len(echelon)
    rank_high = sum(1 for piv in echelon if piv < sl.low_start)
    low_vectors = [echelon[piv] for piv in sorted(echelon) if piv >= sl.low_start]
    return rank, rank_high, low_vectors


def low_degree_member_verdict(g: Poly, params: ParamSet, early_exit: bool = False) -> DirectVerdict:
    """True (``bad``) iff the ideal contains a nonzero polynomial of degree <= ell - 1.

    Scans weights 3m..9(m-1): below 3m the ideal is (x, y)^ell, whose members
    have degree >= ell, and a member of degree <= ell - 1 has weight at most
    3(ell - 1) = 9(m - 1).  When the answer is yes a witness is returned.
    """
    m = params.m
    if g.ring.names != XYZ:
        raise PreconditionError("g must live in k[x,y,z]")
    if not g.is_homogeneous(WT, 3 * m):
        raise PreconditionError(f"g is not WT-homogeneous of weight {3 * m}")
    if g.ring.domain.is_zero(g.coeff((0, 0, m))):
        raise PreconditionError("coefficient of z^m in g is zero")
    D = g.ring.domain
    verdict = DirectVerdict(bad=False, weights_checked=[])
    for n in params.weight_range:
        sl = build_slice(g, params, n)
        rank, rank_high, low_vectors = _reduce_slice(sl, D)
        verdict.weights_checked.append(n)
        verdict.ranks[n] = (rank, rank_high)
        if rank > rank_high and not verdict.bad:
            verdict.bad = True
            verdict.witness = g.ring.from_terms(
                (sl.rows[i], v) for i, v in low_vectors[0].items())
            verdict.witness_weight = n
            if early_exit:
                break
    return verdict
