from hypothesis import given, settings
from hypothesis import strategies as st

from hilbmot.lpoly import L, ONE, LPoly, mono
from hilbmot.series import TSeries, binomial_series, zeta_class, zeta_dilated, zeta_proj

coeff = st.dictionaries(st.integers(-2, 4), st.integers(-5, 5), max_size=3).map(LPoly)


def unit_series(order):
    return st.lists(coeff, min_size=order, max_size=order).map(lambda cs: TSeries([ONE] + cs, order))


def test_zeta_point_is_geometric():
    assert zeta_class(ONE, 5) == TSeries([1] * 6, 5)


def test_zeta_p1():
    z = zeta_proj(1, 3)
    assert [z[i] for i in range(4)] == [ONE, L + 1, L**2 + L + 1, L**3 + L**2 + L + 1]


def test_binomial_series():
    assert binomial_series(3, 4) == [1, 3, 6, 10, 15]
    assert binomial_series(0, 3) == [1, 0, 0, 0]


def test_dilated():
    assert zeta_dilated(mono(1), 2, 5) == zeta_class(mono(1), 5).dilate(2)


def test_render():
    assert (TSeries([1, L, -L], 2)).to_text() == "1 + L*t - L*t^2 + O(t^3)"


@settings(max_examples=50)
@given(unit_series(6))
def test_inverse(s):
    assert s * s.inverse() == TSeries.one(6)


@settings(max_examples=50)
@given(coeff, coeff)
def test_zeta_additive(a, b):
    assert zeta_class(a + b, 6) == zeta_class(a, 6) * zeta_class(b, 6)
