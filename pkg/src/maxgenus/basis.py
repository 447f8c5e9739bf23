"""Graded monomial bases of R = k[x,y,z]/(x,y)^ell and of its quotient M.

``M`` is ``R`` modulo the span of monomials of standard degree < ell.  The
map ``psi`` identifies ``R[-3m]`` with ``M`` monomial by monomial, which is
why every block of the multiplication map built in :mod:`maxgenus.phi` is
square.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import List, Tuple

from .poly import Monomial, ParamSet, Poly, format_monomial, grlex_key, XYZ


class DomainError(ValueError):
    """Monomial outside the domain of psi or psi^-1."""


class PreconditionError(ValueError):
    """Input polynomial violates an operation's hypotheses."""


@dataclass(frozen=True)
class GradedBasis:
    weight: int
    monomials: Tuple[Monomial, ...]
    space: str  # "R_shifted" or "M"

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def index(self) -> dict:
        return {mono: i for i, mono in enumerate(self.monomials)}

    def labels(self) -> List[str]:
        return [format_monomial(mono, XYZ) or "1" for mono in self.monomials]


def monomials_of_weight(n: int) -> List[Monomial]:
    """All monomials x^i y^j z^k with i + 2j + 3k = n, in decreasing grlex order."""
    if n < 0:
        return []
    out = []
    for k in range(n // 3 + 1):
        rest = n - 3 * k
        for j in range(rest // 2 + 1):
            out.append((rest - 2 * j, j, k))
    out.sort(key=grlex_key, reverse=True)
    return out


def basis_R_shifted(params: ParamSet, n: int) -> GradedBasis:
    """Basis of R[-3m]_n: monomials of weight n - 3m with i + j < ell."""
    ell = params.ell
    monos = [mono for mono in monomials_of_weight(n - 3 * params.m) if mono[0] + mono[1] < ell]
    return GradedBasis(n, tuple(monos), "R_shifted")


def basis_M(params: ParamSet, n: int) -> GradedBasis:
    """Basis of M_n: monomials of weight n with a + b < ell <= a + b + c."""
    ell = params.ell
    monos = [mono for mono in monomials_of_weight(n)
             if mono[0] + mono[1] < ell <= sum(mono)]
    return GradedBasis(n, tuple(monos), "M")


def psi(mono: Monomial, params: ParamSet) -> Monomial:
    i, j, k = mono
    ell = params.ell
    if min(mono) < 0 or i + j >= ell:
        raise DomainError(f"{mono} is zero in R (i + j >= {ell})")
    return (ell - i - j - 1, i, 1 + j + k)


def psi_inverse(mono: Monomial, params: ParamSet) -> Monomial:
    a, b, c = mono
    ell = params.ell
    if min(mono) < 0 or not (a + b < ell <= a + b + c):
        raise DomainError(f"{mono} is not a basis monomial of M")
    return (b, ell - 1 - a - b, a + b + c - ell)


def hilbert_table(params: ParamSet, g: Poly, max_weight: int | None = None):
    """Per-weight dimensions of S = k[x,y,z]/((x,y)^ell + (g)) and T = k[x,y,z]/(x,y,z)^ell.

    Both columns come from monomial bases: ``x^a y^b z^c`` with ``a + b < ell``
    and ``c < m`` for S, and total degree ``< ell`` for T.  Returns a list of
    ``(weight, dim_S, dim_T)`` rows for weights ``0..max_weight`` (default
    ``9(m-1) + 3``, a few weights past the last nonzero one).
    """
    m, ell = params.m, params.ell
    if g.ring.names != XYZ:
        raise PreconditionError("g must live in k[x,y,z]")
    if not g.is_homogeneous((1, 2, 3), 3 * m):
        raise PreconditionError(f"g is not WT-homogeneous of weight {3 * m}")
    if g.coeff((0, 0, m)) != g.ring.domain.one:
        raise PreconditionError("g is not monic in z^m")
    if max_weight is None:
        max_weight = 9 * (m - 1) + 3
    rows = []
    for n in range(max_weight + 1):
        dim_s = dim_t = 0
        for a, b, c in monomials_of_weight(n):
            if a + b < ell and c < m:
                dim_s += 1
            if a + b + c < ell:
                dim_t += 1
        rows.append((n, dim_s, dim_t))
    return rows


def hilbert_table_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["weight", "dim_S", "dim_T"])
    writer.writerows(rows)
    return buf.getvalue()
