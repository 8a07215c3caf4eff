import pytest

from hilbmot.errors import NonUnitConstant, NonzeroConstant, UnknownStratum
from hilbmot.grassmann import proj
from hilbmot.lpoly import L, ONE, mono
from hilbmot.plethystic import exp_series, hilb_variety, log_series, omega, q_poly
from hilbmot.series import TSeries, zeta_proj


def test_exp_of_class_is_zeta():
    assert exp_series(TSeries([0, proj(2)], 6)) == zeta_proj(2, 6)


def test_constant_term_guards():
    with pytest.raises(NonzeroConstant):
        exp_series(TSeries([1, 1], 3))
    with pytest.raises(NonUnitConstant):
        log_series(TSeries([2, 1], 3))


def test_small_omegas():
    assert omega(1, 3) == ONE
    assert omega(2, 3) == L**2 + L
    assert omega(3, 3) == L**4 + L**3 + L**2
    assert omega(5, 2) == mono(4)


def test_q_small():
    assert q_poly(3).coeffs == (mono(2),)
    with pytest.raises(UnknownStratum):
        q_poly(9)


def test_hilb_of_p2_two_points():
    # Hilb^2(P^2) is the blow-up of Sym^2 P^2 along the diagonal
    h = hilb_variety(proj(2), 2, 2)
    assert h[2] == L**4 + 2 * L**3 + 3 * L**2 + 2 * L + 1


def test_order_limit():
    with pytest.raises(UnknownStratum):
        hilb_variety(proj(3), 3, 9)
