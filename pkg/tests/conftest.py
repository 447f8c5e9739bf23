import pytest

from maxgenus.fields import GF, QQ
from maxgenus.poly import XYW, XYZ, PolyRing


@pytest.fixture
def F5():
    return GF(5)


@pytest.fixture
def Fp():
    return GF(32003)


@pytest.fixture
def ring_xyz(Fp):
    return PolyRing(XYZ, Fp)


@pytest.fixture
def ring_xyw(Fp):
    return PolyRing(XYW, Fp)


@pytest.fixture
def ring_q():
    return PolyRing(XYZ, QQ)
