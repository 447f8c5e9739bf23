import pytest
from hypothesis import given, settings, strategies as st

from maxgenus.basis import monomials_of_weight
from maxgenus.fields import GF, QQ
from maxgenus.poly import (PROJ, WT, WT_INF, XYW, XYZ, DegreeOverflowError, ParamSet,
                           ParseError, PolyRing, RingMismatchError, dehomogenize_at_z,
                           homogenize, mul_mod_xy_power, parse_poly, w_coefficients,
                           wt_weight, wtinf_weight)
from maxgenus.verify import random_g

F = GF(32003)


def P(text, names=None, field=F):
    return parse_poly(text, field, names)


def test_mul_mod_examples():
    assert mul_mod_xy_power(P("x + y"), P("x^3"), 4) == 0
    assert mul_mod_xy_power(P("z^2"), P("z"), 4) == P("z^3")
    g = P("z^2 + x^3*z + x*y*z + y^3 + x^4")
    assert mul_mod_xy_power(g, P("1", XYZ), 4) == P("z^2 + x^3*z + x*y*z + y^3")


def test_mul_mod_ring_mismatch():
    with pytest.raises(RingMismatchError):
        mul_mod_xy_power(P("x"), P("w"), 3)


def test_homogenize_examples():
    g0 = P("z^2 + x^3*z + x*y*z + y^3")
    G = homogenize(g0, 5)
    assert G == P("Z^2*W^2 + X^3*Z + X*Y*Z*W + Y^3*W")
    for m in range(2, 7):
        G = homogenize(P(f"z^{m}"), 3 * m - 1)
        assert G == P(f"Z^{m}*W^{2 * (m - 1)}")
        assert dehomogenize_at_z(G) == P(f"w^{2 * (m - 1)}")
    assert homogenize(P("3", XYZ), 7) == P("3*W^6")


def test_homogenize_overflow():
    with pytest.raises(DegreeOverflowError):
        homogenize(P("x^5"), 5)


def test_dehomogenize_example():
    G = P("Z^2*W^2 + X^3*Z + X*Y*Z*W + Y^3*W")
    assert dehomogenize_at_z(G) == P("w^2 + x^3 + x*y*w + y^3*w")


def test_w_coefficients_examples():
    assert w_coefficients(P("w^2 + x*y*w + y^3*w + x^3")) == [P("1", XYW), P("x*y + y^3", XYW),
                                                                 P("x^3", XYW)]
    assert w_coefficients(P("w^5")) == [P("1", XYW)] + [0] * 5
    assert w_coefficients(P("x^3", XYW)) == [P("x^3", XYW)]


@pytest.mark.parametrize("m", range(2, 8))
def test_homogenization_weight_law(m):
    g0 = random_g(m, F, [1, m])
    g_inf = dehomogenize_at_z(homogenize(g0, 3 * m - 1))
    assert g_inf.is_homogeneous(WT_INF, 6 * (m - 1))
    for (a, b, c), v in g0.terms.items():
        e = 3 * m - 2 - a - b - c
        assert g_inf.coeff((a, b, e)) == v
        assert wtinf_weight((a, b, e)) == 9 * m - 6 - wt_weight((a, b, c))


@pytest.mark.parametrize("m", range(2, 26))
def test_unique_top_degree_monomial(m):
    ell = 3 * m - 2
    outside = [mono for mono in monomials_of_weight(3 * m) if mono[0] + mono[1] < ell]
    top = max(sum(mono) for mono in outside)
    assert top == ell
    assert [mono for mono in outside if sum(mono) == top] == [(3 * (m - 1), 0, 1)]


def test_paramset():
    p = ParamSet(4, 2)
    assert (p.d, p.ell, p.e) == (11, 10, 5)
    assert p.d % 3 == 2 and p.ell == p.d - 1
    assert list(p.weight_range) == list(range(12, 28))
    with pytest.raises(ValueError):
        ParamSet(1)


def test_parse_and_format():
    g = P("z^2 + 3*x^3*z + x*y*z + 7*y^3")
    assert g.coeff((3, 0, 1)) == 3 and g.coeff((0, 3, 0)) == 7
    assert str(g) == "3*x^3*z + x*y*z + 7*y^3 + z^2"
    assert str(P("x - y", field=QQ)) == "x - y"
    assert str(P("x - y")) == "x + 32002*y"
    assert str(P("1/2*x", field=QQ)) == "1/2*x"
    assert P("2/3*x", field=GF(7)).coeff((1, 0, 0)) == 3
    assert str(P("0")) == "0"
    assert P("x", XYZ).ring.names == XYZ and P("X").ring.names == PROJ


@pytest.mark.parametrize("bad", ["", "x^", "x**2", "q*x", "x+*y"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        P(bad)


terms = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)),
                        st.integers(-30, 30), max_size=6)


@given(terms, st.sampled_from([QQ, GF(7), GF(32003)]))
def test_text_round_trip(t, field):
    f = PolyRing(XYZ, field).from_terms(t.items())
    text = str(f)
    g = parse_poly(text, field, XYZ)
    assert g == f and str(g) == text


@settings(max_examples=60)
@given(terms, terms, st.integers(0, 9))
def test_truncated_product_properties(a, b, r):
    ring = PolyRing(XYZ, QQ)
    f, g = ring.from_terms(a.items()), ring.from_terms(b.items())
    h = mul_mod_xy_power(f, g, r)
    assert h == mul_mod_xy_power(g, f, r)
    assert h.truncate_xy(r) == h
    assert (f * g).truncate_xy(r) == h
    assert mul_mod_xy_power(f, g, 100) == f * g


def test_arithmetic_basics(ring_xyz):
    x, y, z = ring_xyz.gens
    f = x + y
    assert f ** 2 == x * x + 2 * x * y + y * y
    assert f - f == 0
    assert (f * z).is_homogeneous(WT) is False
    assert (x * z).is_homogeneous(WT, 4)
    assert not ring_xyz.from_terms([((1, 0, 0), 0)]).terms
