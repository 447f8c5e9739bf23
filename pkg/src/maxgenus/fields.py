"""Exact coefficient domains.

Two fields are supported: the prime field ``GF(p)`` whose elements are plain
Python ints in ``[0, p)``, and the rationals ``QQ`` whose elements are
:class:`fractions.Fraction`.  Both expose the same small set of methods
(``add``, ``mul``, ``inv`` ...) so polynomial code never branches on the
field.  :class:`TPolyRing` gives the same interface for polynomials in a
formal parameter ``t`` over either field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class FieldError(ValueError):
    """Invalid field descriptor (for instance a composite modulus)."""


class FieldMismatchError(ValueError):
    """Operands live over different coefficient domains."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field Z/pZ with canonical representatives in [0, p)."""

    zero = 0
    one = 1
    signed = False

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"modulus {p!r} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        if isinstance(value, str):
            return self(parse_rational(value))
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a) -> bool:
        return a == 0

    def format(self, a) -> str:
        return str(a)

    def random_element(self, rng, nonzero: bool = False) -> int:
        lo = 1 if nonzero else 0
        return int(rng.integers(lo, self.p))


class RationalField:
    """The rationals, backed by :class:`fractions.Fraction`."""

    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0
    signed = True

    # sampling range for random coefficients
    sample_bound = 1000

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __call__(self, value) -> Fraction:
        if isinstance(value, str):
            return parse_rational(value)
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) * self.inv(b)

    def is_zero(self, a) -> bool:
        return a == 0

    def format(self, a) -> str:
        return str(a)

    def random_element(self, rng, nonzero: bool = False) -> Fraction:
        b = self.sample_bound
        while True:
            v = int(rng.integers(-b, b + 1))
            if v or not nonzero:
                return Fraction(v)


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def field_inverse(x, field):
    """Multiplicative inverse of ``x`` in ``field``."""
    return field.inv(field(x))


class TPoly:
    """Univariate polynomial in a formal parameter ``t`` over a field.

    Coefficients are stored lowest power first with trailing zeros stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable = (), field=QQ):
        cs = [field(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    @classmethod
    def t(cls, field) -> "TPoly":
        return cls((0, 1), field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def _check(self, other):
        if not isinstance(other, TPoly):
            other = TPoly((other,), self.field)
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly((F.add(self[i], other[i]) for i in range(n)), F)

    __radd__ = __add__

    def __neg__(self):
        return TPoly((self.field.neg(c) for c in self.coeffs), self.field)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) + (-self)

    def __mul__(self, other):
        return tpoly_mul(self, self._check(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            try:
                other = self._check(other)
            except (FieldMismatchError, TypeError, ValueError):
                return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.field))

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, value):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, value), c)
        return acc

    def __repr__(self):
        return f"TPoly({list(self.coeffs)!r}, {self.field!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if self.field.is_zero(c):
                continue
            if k == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append("t" if k == 1 else f"t^{k}")
            else:
                parts.append(f"{c}*t" if k == 1 else f"{c}*t^{k}")
        return " + ".join(parts)


def tpoly_mul(f: TPoly, g: TPoly) -> TPoly:
    """Convolution product of two t-polynomials over the same field."""
    if f.field != g.field:
        raise FieldMismatchError(f"{f.field!r} vs {g.field!r}")
    F = f.field
    if not f.coeffs or not g.coeffs:
        return TPoly((), F)
    out = [F.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return TPoly(out, F)


class TPolyRing:
    """Coefficient domain k[t]; mirrors the field interface for polynomials."""

    signed = False

    def __init__(self, field):
        self.field = field
        self.zero = TPoly((), field)
        self.one = TPoly((1,), field)
        self.t = TPoly.t(field)

    @property
    def characteristic(self):
        return self.field.characteristic

    def __repr__(self):
        return f"{self.field!r}[t]"

    def __eq__(self, other):
        return isinstance(other, TPolyRing) and other.field == self.field

    def __hash__(self):
        return hash(("t", self.field))

    def __call__(self, value) -> TPoly:
        if isinstance(value, TPoly):
            if value.field != self.field:
                raise FieldMismatchError(f"{value.field!r} vs {self.field!r}")
            return value
        return TPoly((value,), self.field)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return tpoly_mul(a, b)

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return not a.coeffs

    def format(self, a) -> str:
        return f"({a})"
