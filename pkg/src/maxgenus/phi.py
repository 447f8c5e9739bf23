"""Blocks of the multiplication map phi_g : R[-3m] -> M, h |-> [g h].

Block convention: columns are indexed by the source basis ``R[-3m]_n`` and
rows by the target basis ``M_n``, so column ``nu`` holds the coordinates of
``[g * nu]``.  Matrices written for a row-vector action are the transpose;
determinants agree up to sign.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional

import numpy as np

from .basis import GradedBasis, PreconditionError, basis_M, basis_R_shifted
from .linalg import bareiss_rank_det, rank_det_mod_p
from .poly import XYZ, ParamSet, Poly


class InvariantViolation(RuntimeError):
    """An internal invariant that the mathematics guarantees has failed."""


@dataclass
class GradedBlockMatrix:
    weight: int
    rows: GradedBasis
    cols: GradedBasis
    matrix: list
    rank: int
    det: Optional[object] = None  # recorded over GF(p) only

    @property
    def size(self) -> int:
        return len(self.cols)

    @property
    def invertible(self) -> bool:
        return self.rank == self.size


@dataclass
class PhiVerdict:
    good: bool
    singular_weights: List[int]
    block_dims: Dict[int, int] = field(default_factory=dict)
    ranks: Dict[int, int] = field(default_factory=dict)
    dets: Dict[int, object] = field(default_factory=dict)


@lru_cache(maxsize=512)
def _bases(m: int, n: int):
    params = ParamSet(m)
    return basis_R_shifted(params, n), basis_M(params, n)


def _check_g(g: Poly, params: ParamSet):
    if g.ring.names != XYZ:
        raise PreconditionError("g must live in k[x,y,z]")
    if not g.is_homogeneous((1, 2, 3), 3 * params.m):
        raise PreconditionError(f"g is not WT-homogeneous of weight {3 * params.m}")


def block_entries(g: Poly, params: ParamSet, rows: GradedBasis, cols: GradedBasis) -> list:
    """Dense matrix with entry (mu, nu) = coefficient of mu / nu in g (0 if not a monomial)."""
    m = params.m
    D = g.ring.domain
    if not rows.monomials or not cols.monomials:
        return [[D.zero] * len(cols) for _ in rows]
    coeffs = [D.zero]
    K = 3 * m + 1
    lookup = np.zeros((K, K, m + 1), dtype=np.int64)
    for (a, b, c), v in g.terms.items():
        coeffs.append(v)
        lookup[a, b, c] = len(coeffs) - 1
    R = np.array(rows.monomials, dtype=np.int32)
    C = np.array(cols.monomials, dtype=np.int32)
    diff = R[:, None, :] - C[None, :, :]
    # the weight of diff is 3m, which bounds each exponent
    ok = (diff >= 0).all(axis=2) & (diff[:, :, 2] <= m)
    diff = np.where(ok[:, :, None], diff, 0)
    idx = np.where(ok, lookup[diff[:, :, 0], diff[:, :, 1], diff[:, :, 2]], 0)
    if D.characteristic and D.characteristic < (1 << 31):
        vals = np.array(coeffs, dtype=np.int64)
        return vals[idx]
    vals = np.empty(len(coeffs), dtype=object)
    vals[:] = coeffs
    return vals[idx].tolist()


def build_phi_block(g: Poly, params: ParamSet, n: int) -> GradedBlockMatrix:
    """The block (phi_g)_n : R[-3m]_n -> M_n, with its rank and (over GF(p)) determinant."""
    _check_g(g, params)
    cols, rows = _bases(params.m, n)
    if len(rows) != len(cols):
        raise InvariantViolation(
            f"non-square block at weight {n}: {len(rows)} x {len(cols)}")
    mat = block_entries(g, params, rows, cols)
    D = g.ring.domain
    if D.characteristic:
        rank, det = rank_det_mod_p(mat, D.characteristic)
        return GradedBlockMatrix(n, rows, cols, mat, rank, det)
    rank, _ = bareiss_rank_det(mat) if len(rows) else (0, None)
    return GradedBlockMatrix(n, rows, cols, mat, rank, None)


def _block_summary(args):
    g, m, n = args
    blk = build_phi_block(g, ParamSet(m), n)
    return n, blk.size, blk.rank, blk.det


def phi_iso_verdict(g: Poly, params: ParamSet, extra_weights: int = 0,
                    allow_degenerate: bool = False, jobs: int = 1) -> PhiVerdict:
    """Decide whether phi_g is an isomorphism by checking weights 3m..9(m-1).

    The finite range is only conclusive when z^m appears in g.  With
    ``allow_degenerate`` a g without z^m is still scanned: a singular block
    proves g bad, but an all-invertible scan raises because it proves nothing.
    """
    _check_g(g, params)
    m = params.m
    degenerate = g.ring.domain.is_zero(g.coeff((0, 0, m)))
    if degenerate and not allow_degenerate:
        raise PreconditionError("coefficient of z^m in g is zero")
    weights = list(range(3 * m, 9 * (m - 1) + 1 + extra_weights))
    tasks = [(g, m, n) for n in weights]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_block_summary, tasks))
    else:
        results = [_block_summary(t) for t in tasks]
    verdict = PhiVerdict(good=True, singular_weights=[])
    for n, size, rank, det in sorted(results, key=lambda r: r[0]):
        verdict.block_dims[n] = size
        verdict.ranks[n] = rank
        if det is not None:
            verdict.dets[n] = det
        if rank < size:
            verdict.singular_weights.append(n)
    verdict.good = not verdict.singular_weights
    if degenerate and verdict.good:
        raise PreconditionError(
            "coefficient of z^m in g is zero; the finite weight scan cannot certify g")
    return verdict
