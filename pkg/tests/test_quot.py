import pytest

from hilbmot.errors import OutOfRange
from hilbmot.grassmann import gauss, proj
from hilbmot.hilb import hilb_punctual
from hilbmot.lpoly import specialize_euler
from hilbmot.quot import quot_hs_stratum, quot_omega, quot_punctual, quot_series, quot_stratum, u4


def test_rank_one_is_hilb():
    assert quot_punctual(4, 3, 1) == hilb_punctual(4, 3)


def test_length_one():
    assert quot_punctual(1, 3, 4) == proj(3)


def test_top_stratum_is_grassmannian():
    assert quot_stratum(4, 4, 2, 5) == gauss(4, 5)
    assert quot_hs_stratum(3, "(3)", 2, 5) == gauss(3, 5)


def test_out_of_range():
    with pytest.raises(OutOfRange):
        quot_punctual(5, 2, 2)
    with pytest.raises(OutOfRange):
        quot_stratum(1, 5, 2, 2)
    with pytest.raises(OutOfRange):
        quot_omega(5, 3, 3)


def test_series_origin():
    s = quot_series(3, 2, 2)
    assert s.coeff(0, 0) == quot_punctual(3, 1, 1)
    assert s.coeff(2, 1) == quot_punctual(3, 3, 2)


def test_u4_constant_term():
    assert specialize_euler(u4().coeff(0, 0)) == 1
