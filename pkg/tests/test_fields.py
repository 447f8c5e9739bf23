from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from maxgenus.fields import (GF, QQ, FieldError, FieldMismatchError, TPoly, TPolyRing,
                             field_inverse, is_prime, parse_rational, tpoly_mul)

PRIMES = [2, 3, 5, 7, 101, 32003, 2**31 - 1]


def test_inverse_examples():
    assert field_inverse(1, GF(7)) == 1
    assert field_inverse(1, QQ) == 1
    assert field_inverse(2, GF(5)) == 3
    assert field_inverse(3, GF(7)) == 5
    assert field_inverse(Fraction(2, 3), QQ) == Fraction(3, 2)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        field_inverse(0, GF(5))
    with pytest.raises(ZeroDivisionError):
        field_inverse(0, QQ)


@pytest.mark.parametrize("p", [1, 4, 15, 32001, -7])
def test_composite_modulus_rejected(p):
    with pytest.raises(FieldError):
        GF(p)


def test_is_prime_matches_trial_division():
    def slow(n):
        return n >= 2 and all(n % q for q in range(2, int(n**0.5) + 1))
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if slow(n)]


@given(st.sampled_from(PRIMES), st.integers())
def test_inverse_property(p, x):
    F = GF(p)
    x = F(x)
    if x:
        assert F.mul(x, F.inv(x)) == 1


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_prime_field_ring_axioms(p, a, b, c):
    F = GF(p)
    a, b, c = F(a), F(b), F(c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert 0 <= F.sub(a, b) < p


def test_parse_rational_and_coercion():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert GF(7)("1/3") == 5
    assert GF(7)(Fraction(-1, 2)) == 3
    assert QQ("-4/6") == Fraction(-2, 3)


def test_tpoly_examples():
    F = GF(5)
    t = TPoly.t(F)
    assert (1 + t) * (1 - t) == TPoly([1, 0, -1], F)
    assert TPoly([1, 2, 3], F) * TPoly([], F) == TPoly([], F)
    assert tpoly_mul(TPoly([2, 1], F), TPoly([3, 1], F)) == TPoly([1, 0, 1], F)
    assert TPoly([1, 0, 1], F).degree == 2
    assert TPoly([0, 0, 0], F).coeffs == ()


def test_tpoly_mixed_fields_raise():
    with pytest.raises(FieldMismatchError):
        tpoly_mul(TPoly([1], GF(5)), TPoly([1], GF(7)))
    with pytest.raises(FieldMismatchError):
        TPoly([1], GF(5)) + TPoly([1], QQ)


coeff_lists = st.lists(st.integers(-50, 50), max_size=6)


@given(coeff_lists, coeff_lists, st.integers(-20, 20))
def test_tpoly_evaluation_is_a_ring_map(f, g, v):
    F = QQ
    f, g = TPoly(f, F), TPoly(g, F)
    assert (f * g)(F(v)) == f(F(v)) * g(F(v))
    assert (f + g)(F(v)) == f(F(v)) + g(F(v))


@given(coeff_lists, coeff_lists, coeff_lists)
def test_tpoly_ring_axioms(f, g, h):
    F = GF(7)
    f, g, h = TPoly(f, F), TPoly(g, F), TPoly(h, F)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)


def test_tpoly_ring_interface():
    R = TPolyRing(GF(5))
    a = R(3)
    assert R.add(a, R.one) == TPoly([4], GF(5))
    assert R.is_zero(R.sub(a, a))
    assert R.characteristic == 5
