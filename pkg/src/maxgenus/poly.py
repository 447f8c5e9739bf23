"""Sparse polynomials in three or four variables with weight gradings.

A polynomial is a mapping from exponent tuples to nonzero coefficients of a
coefficient domain (see :mod:`maxgenus.fields`).  Variable names are a ring
tag only: ``k[x,y,z]``, ``k[x,y,w]`` and ``k[X,Y,Z,W]`` share all machinery.

Two weight functions matter here:

* ``WT`` on ``k[x,y,z]`` with weights ``(1, 2, 3)``;
* ``WT_INF`` on ``k[x,y,w]`` with weights ``(2, 1, 3)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .fields import FieldMismatchError

Monomial = Tuple[int, ...]

XYZ = ("x", "y", "z")
XYW = ("x", "y", "w")
PROJ = ("X", "Y", "Z", "W")

WT = (1, 2, 3)
WT_INF = (2, 1, 3)


class RingMismatchError(ValueError):
    """Operands belong to different ambient rings."""


class DegreeOverflowError(ValueError):
    """A monomial has standard degree too large for the requested operation."""


class ParseError(ValueError):
    pass


def std_degree(mono: Monomial) -> int:
    return sum(mono)


def weight(mono: Monomial, weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(mono, weights))


def wt_weight(mono: Monomial) -> int:
    """WT-weight of a monomial of k[x,y,z]."""
    return mono[0] + 2 * mono[1] + 3 * mono[2]


def wtinf_weight(mono: Monomial) -> int:
    """WT_INF-weight of a monomial of k[x,y,w]."""
    return 2 * mono[0] + mono[1] + 3 * mono[2]


def xy_degree(mono: Monomial) -> int:
    return mono[0] + mono[1]


def grlex_key(mono: Monomial):
    return (sum(mono), mono)


def format_monomial(mono: Monomial, names: Sequence[str]) -> str:
    parts = []
    for e, v in zip(mono, names):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


@dataclass(frozen=True)
class ParamSet:
    """Integer frame: m >= 2, d = 3m - 1, ell = d - 1, and optionally a, e."""

    m: int
    a: Optional[int] = None

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")
        if self.a is not None and self.a < 0:
            raise ValueError(f"a must be >= 0, got {self.a}")

    @property
    def d(self) -> int:
        return 3 * self.m - 1

    @property
    def ell(self) -> int:
        return 3 * self.m - 2

    @property
    def e(self) -> int:
        if self.a is None:
            raise ValueError("type e needs the shift a")
        return self.a + self.m - 1

    @property
    def weight_range(self) -> range:
        """Weights 3m..9(m-1) where the phi blocks have to be checked."""
        return range(3 * self.m, 9 * (self.m - 1) + 1)


class PolyRing:
    """Polynomial ring over ``domain`` with positional variables ``names``."""

    def __init__(self, names: Sequence[str], domain):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.domain = domain

    def __repr__(self):
        return f"{self.domain!r}[{','.join(self.names)}]"

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.domain == other.domain)

    def __hash__(self):
        return hash((self.names, self.domain))

    def with_names(self, names: Sequence[str]) -> "PolyRing":
        return PolyRing(names, self.domain)

    def with_domain(self, domain) -> "PolyRing":
        return PolyRing(self.names, domain)

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return self.constant(self.domain.one)

    def constant(self, c) -> "Poly":
        c = self.domain(c)
        if self.domain.is_zero(c):
            return self.zero
        return Poly(self, {(0,) * self.nvars: c})

    def monomial(self, exps: Iterable[int], coeff=None) -> "Poly":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {exps}")
        c = self.domain.one if coeff is None else self.domain(coeff)
        if self.domain.is_zero(c):
            return self.zero
        return Poly(self, {exps: c})

    def gen(self, name: str) -> "Poly":
        i = self.names.index(name)
        return self.monomial(tuple(int(j == i) for j in range(self.nvars)))

    @property
    def gens(self):
        return tuple(self.gen(v) for v in self.names)

    def from_terms(self, terms) -> "Poly":
        """Build a polynomial from ``(monomial, coeff)`` pairs, summing repeats."""
        D = self.domain
        out: Dict[Monomial, object] = {}
        for mono, c in terms:
            c = D(c)
            if mono in out:
                c = D.add(out[mono], c)
            if D.is_zero(c):
                out.pop(mono, None)
            else:
                out[tuple(mono)] = c
        return Poly(self, out)

    def parse(self, text: str) -> "Poly":
        return parse_poly(text, self.domain, self.names)


class Poly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, object]):
        self.ring = ring
        self.terms = terms

    # -- basic protocol -------------------------------------------------
    def __repr__(self):
        return f"Poly({str(self)!r}, {self.ring!r})"

    def __str__(self):
        return format_poly(self)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def coeff(self, mono: Monomial):
        return self.terms.get(tuple(mono), self.ring.domain.zero)

    def monomials(self):
        return sorted(self.terms, key=grlex_key, reverse=True)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                if other.ring.names == self.ring.names:
                    raise FieldMismatchError(f"{self.ring!r} vs {other.ring!r}")
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other
        return self.ring.constant(other)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        D = self.ring.domain
        out = dict(self.terms)
        for mono, c in other.terms.items():
            if mono in out:
                s = D.add(out[mono], c)
                if D.is_zero(s):
                    del out[mono]
                else:
                    out[mono] = s
            else:
                out[mono] = c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        D = self.ring.domain
        return Poly(self.ring, {m: D.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return _mul(self, other, None)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        D = self.ring.domain
        c = D(c)
        if D.is_zero(c):
            return self.ring.zero
        out = {}
        for m, v in self.terms.items():
            p = D.mul(v, c)
            if not D.is_zero(p):
                out[m] = p
        return Poly(self.ring, out)

    def mul_monomial(self, mono: Monomial, coeff=None) -> "Poly":
        D = self.ring.domain
        if coeff is None:
            return Poly(self.ring, {tuple(a + b for a, b in zip(m, mono)): c
                                    for m, c in self.terms.items()})
        return self.scale(coeff).mul_monomial(mono)

    # -- gradings -------------------------------------------------------
    def degree(self) -> int:
        """Standard (total) degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def weights(self, weights: Sequence[int]) -> set:
        return {weight(m, weights) for m in self.terms}

    def is_homogeneous(self, weights: Sequence[int], w: Optional[int] = None) -> bool:
        ws = self.weights(weights)
        if not ws:
            return True
        if len(ws) != 1:
            return False
        return w is None or ws == {w}

    def truncate_xy(self, r: int) -> "Poly":
        """Drop every monomial lying in (x, y)^r (first two variables)."""
        return Poly(self.ring, {m: c for m, c in self.terms.items() if m[0] + m[1] < r})

    def filter(self, pred) -> "Poly":
        return Poly(self.ring, {m: c for m, c in self.terms.items() if pred(m)})

    def map_domain(self, domain) -> "Poly":
        ring = self.ring.with_domain(domain)
        return ring.from_terms((m, c) for m, c in self.terms.items())


def _mul(f: Poly, g: Poly, r: Optional[int]) -> Poly:
    D = f.ring.domain
    add, mul, is_zero = D.add, D.mul, D.is_zero
    if len(f.terms) > len(g.terms):
        f, g = g, f
    out: Dict[Monomial, object] = {}
    gterms = list(g.terms.items())
    if r is not None:
        gterms = [(m, c) for m, c in gterms if m[0] + m[1] < r]
    for m1, c1 in f.terms.items():
        s1 = m1[0] + m1[1]
        if r is not None and s1 >= r:
            continue
        for m2, c2 in gterms:
            if r is not None and s1 + m2[0] + m2[1] >= r:
                continue
            m = tuple(a + b for a, b in zip(m1, m2))
            p = mul(c1, c2)
            if m in out:
                out[m] = add(out[m], p)
            else:
                out[m] = p
    return Poly(f.ring, {m: c for m, c in out.items() if not is_zero(c)})


def mul_mod_xy_power(f: Poly, g: Poly, r: int) -> Poly:
    """Product f*g with every monomial of (x, y)^r deleted."""
    if f.ring != g.ring:
        raise RingMismatchError(f"{f.ring!r} vs {g.ring!r}")
    return _mul(f, g, r)


def homogenize(g0: Poly, d: int) -> Poly:
    """G(X,Y,Z,W) = W^(d-1) g0(X/W, Y/W, Z/W), homogeneous of degree d - 1."""
    if g0.ring.names != XYZ:
        raise RingMismatchError(f"homogenize expects k[x,y,z], got {g0.ring!r}")
    ring = g0.ring.with_names(PROJ)
    out = {}
    for (a, b, c), v in g0.terms.items():
        e = d - 1 - a - b - c
        if e < 0:
            raise DegreeOverflowError(
                f"monomial {format_monomial((a, b, c), XYZ)} has degree > {d - 1}")
        out[(a, b, c, e)] = v
    return Poly(ring, out)


def dehomogenize_at_z(G: Poly) -> Poly:
    """g_inf(x, y, w) = G(x, y, 1, w)."""
    if G.ring.names != PROJ:
        raise RingMismatchError(f"dehomogenize_at_z expects k[X,Y,Z,W], got {G.ring!r}")
    ring = G.ring.with_names(XYW)
    return ring.from_terms(((a, b, e), v) for (a, b, _c, e), v in G.terms.items())


def w_coefficients(f: Poly) -> list:
    """Coefficients c_0..c_D with f = sum c_j(x, y) w^(D - j), D the top w-exponent."""
    if f.ring.names != XYW:
        raise RingMismatchError(f"w_coefficients expects k[x,y,w], got {f.ring!r}")
    if not f.terms:
        return []
    D = max(m[2] for m in f.terms)
    buckets = [dict() for _ in range(D + 1)]
    for (a, b, e), c in f.terms.items():
        buckets[D - e][(a, b, 0)] = c
    return [Poly(f.ring, t) for t in buckets]


def from_w_coefficients(coeffs: Sequence[Poly], top: int, ring: PolyRing) -> Poly:
    """Inverse of :func:`w_coefficients`: sum coeffs[j] * w^(top - j)."""
    out = {}
    for j, c in enumerate(coeffs):
        e = top - j
        for (a, b, _), v in c.terms.items():
            out[(a, b, e)] = v
    return Poly(ring, out)


# -- text grammar ---------------------------------------------------------

def format_poly(f: Poly) -> str:
    """Deterministic text form, terms in decreasing graded-lex order."""
    if not f.terms:
        return "0"
    D = f.ring.domain
    names = f.ring.names
    pieces = []
    for mono in f.monomials():
        c = f.terms[mono]
        mtxt = format_monomial(mono, names)
        negative = D.signed and c < 0
        if negative:
            c = -c
        if mtxt and c == 1:
            body = mtxt
        elif mtxt:
            body = f"{D.format(c)}*{mtxt}"
        else:
            body = D.format(c)
        pieces.append(("-" if negative else "+", body))
    sign, body = pieces[0]
    out = ("-" + body) if sign == "-" else body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_NUMBER = re.compile(r"^\d+(/\d+)?$")
_FACTOR = re.compile(r"^([A-Za-z])(?:\^(\d+))?$")


def parse_poly(text: str, domain, names: Optional[Sequence[str]] = None) -> Poly:
    """Parse the text grammar; ``names`` defaults to the ring implied by the variables."""
    src = text.replace(" ", "")
    if not src:
        raise ParseError("empty polynomial")
    if names is None:
        letters = set(re.findall(r"[A-Za-z]", src))
        if letters & set(PROJ):
            names = PROJ
        elif "w" in letters:
            names = XYW
        else:
            names = XYZ
    names = tuple(names)
    ring = PolyRing(names, domain)
    terms = []
    for sign, body in _split_terms(src):
        coeff = domain.one
        mono = [0] * len(names)
        for factor in body.split("*"):
            if _NUMBER.match(factor):
                coeff = domain.mul(coeff, domain(factor))
                continue
            mt = _FACTOR.match(factor)
            if not mt or mt.group(1) not in names:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            mono[names.index(mt.group(1))] += int(mt.group(2) or 1)
        if sign == "-":
            coeff = domain.neg(coeff)
        terms.append((tuple(mono), coeff))
    return ring.from_terms(terms)


def _split_terms(src: str):
    out = []
    pos = 0
    sign = "+"
    if src[0] in "+-":
        sign = src[0]
        pos = 1
    start = pos
    while pos <= len(src):
        if pos == len(src) or src[pos] in "+-":
            body = src[start:pos]
            if not body:
                raise ParseError(f"empty term in {src!r}")
            out.append((sign, body))
            if pos < len(src):
                sign = src[pos]
            start = pos + 1
        pos += 1
    return out
