"""Closed-form genus numerology for curves in P^3.

Everything here is exact integer (or rational) arithmetic; curves are
represented only by their degree, type and arithmetic genus.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import List


def binom(n: int, r: int) -> int:
    """Binomial coefficient, 0 when n < r (or r < 0)."""
    if r < 0 or n < r:
        return 0
    return comb(n, r)


def max_genus_bound(d: int, s: int) -> int:
    """The bound P(d, s) on the genus of a curve of degree d on no surface of degree < s."""
    if s < 1 or d < s:
        raise ValueError(f"P(d, s) needs d >= s >= 1, got d={d}, s={s}")
    if d <= 2 * s:
        return (s - 1) * d + 1 - binom(s + 2, 3)
    return binom(d - s, 2) - binom(s - 1, 3)


def primitive_genus(d: int, e: int) -> int:
    """Arithmetic genus -sum_{i=1}^{d-1} (i e + 1) of a primitive d-line of type e."""
    if d < 2:
        raise ValueError("a primitive multiple line has degree >= 2")
    return -(e * d * (d - 1) // 2 + (d - 1))


def hilbert_poly_F(d: int, e: int, n) -> Fraction:
    """Hilbert polynomial (n - e - (2d - 1)/3) * C(d, 2) of the ideal sheaf of C in L_d."""
    return (Fraction(n) - e - Fraction(2 * d - 1, 3)) * binom(d, 2)


def n0(d: int, a: int) -> int:
    """Root of the Hilbert polynomial for d = 3m - 1 and type e = a + m - 1; equals a + d - 1."""
    if d % 3 != 2 or d < 5:
        raise ValueError(f"n0 needs d = 2 mod 3 and d >= 5, got {d}")
    m = (d + 1) // 3
    root = (a + m - 1) + Fraction(2 * d - 1, 3)
    assert root.denominator == 1 and root == a + d - 1
    return int(root)


def union_genus(pX: int, pY: int, meet_length: int) -> int:
    """Genus of X u Y when X and Y meet in a scheme of the given length."""
    if meet_length < 0:
        raise ValueError("meet length must be >= 0")
    return pX + pY + meet_length - 1


def biliaison_genus(gY: int, degY: int, t: int) -> int:
    """Genus of a curve linearly equivalent to Y + H on a surface of degree t."""
    if t < 1:
        raise ValueError("surface degree t must be >= 1")
    return gY + (t - 1) * (t - 2) // 2 + degY - 1


def plane_curve_genus(k: int) -> int:
    return (k - 1) * (k - 2) // 2


@dataclass
class Component:
    kind: str        # "line", "double line" or "primitive"
    degree: int
    type_e: int | None
    genus: int

    def describe(self) -> str:
        if self.kind == "line":
            return f"line (degree 1, genus {self.genus})"
        return f"{self.kind} (degree {self.degree}, type {self.type_e}, genus {self.genus})"


@dataclass
class Assembly:
    d: int
    components: List[Component] = field(default_factory=list)
    total_genus: int = 0
    bound: int = 0

    @property
    def holds(self) -> bool:
        return self.total_genus == self.bound and sum(c.degree for c in self.components) == self.d


def conjectureA_assembly(d: int) -> Assembly:
    """Disjoint-union curve of degree d and genus P(d, d) built from primitive lines."""
    if d < 5:
        raise ValueError(f"assembly needs d >= 5, got {d}")
    r = d % 3
    if r == 2:
        e = (d - 2) // 3
        comps = [Component("primitive", d, e, primitive_genus(d, e))]
    elif r == 0:
        e = d // 3
        comps = [Component("line", 1, None, 0),
                 Component("primitive", d - 1, e, primitive_genus(d - 1, e))]
    else:
        e = (d + 2) // 3
        comps = [Component("double line", 2, d - 2, primitive_genus(2, d - 2)),
                 Component("primitive", d - 2, e, primitive_genus(d - 2, e))]
    total = comps[0].genus
    for c in comps[1:]:
        total = union_genus(total, c.genus, 0)
    return Assembly(d, comps, total, max_genus_bound(d, d))


# -- identities from the sharpness discussion ------------------------------

def line_addition_identity(d: int, s: int) -> bool:
    """Curve of genus P(d-1, s) plus a line meeting it in length s has genus P(d, s)."""
    return union_genus(max_genus_bound(d - 1, s), 0, s) == max_genus_bound(d, s)


def plane_curve_addition_identity(d: int, s: int) -> bool:
    """Y of genus P(s, s) plus a plane curve of degree k = d - s meeting Y in ks - k(k-1)/2."""
    k = d - s
    length = k * s - k * (k - 1) // 2
    return union_genus(max_genus_bound(s, s), plane_curve_genus(k), length) == max_genus_bound(d, s)


def required_meet_plane_curve(s: int, k: int) -> int:
    """Length P . Y making Y (genus P(s-1, s-1)) u P (plane curve of degree k+1) reach P(s+k, s)."""
    return (max_genus_bound(s + k, s) - plane_curve_genus(k + 1)
            - max_genus_bound(s - 1, s - 1) + 1)


def displayed_meet_plane_curve(s: int, k: int) -> int:
    return (s - 1) - (k - s) * (k - s + 1) // 2


def plane_curve_meet_identity(s: int, k: int) -> bool:
    """Check the displayed length (s-1) - (k-s)(k-s+1)/2 against the required one."""
    return displayed_meet_plane_curve(s, k) == required_meet_plane_curve(s, k)


def bounds_table(d_max: int, s_max: int) -> List[tuple]:
    return [(d, s, max_genus_bound(d, s))
            for s in range(1, s_max + 1) for d in range(s, d_max + 1)]


def bounds_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["d", "s", "P"])
    writer.writerows(rows)
    return buf.getvalue()
