import pytest

from hilbmot.errors import UnknownStratum
from hilbmot.grassmann import gauss
from hilbmot.hilb import MOTIVES, hilb_infinity, hilb_punctual, hilb_recursive, p_poly, stab_check
from hilbmot.lpoly import L, ONE, specialize_euler


def test_small_lengths():
    assert hilb_punctual(0, 5) == ONE
    assert hilb_punctual(1, 5) == ONE
    assert hilb_punctual(2, 3) == L**2 + L + 1
    assert hilb_punctual(3, 2) == L**2 + L + 1


def test_curve_and_plane():
    assert all(hilb_punctual(d, 1) == ONE for d in range(9))
    # planar punctual classes have Euler characteristic p(d)
    assert [specialize_euler(hilb_punctual(d, 2)) for d in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_three_points_is_grassmannian():
    assert hilb_punctual(3, 4) == gauss(2, 5)


def test_pd_text():
    assert p_poly(4).to_text() == "1 + L^2*t - L^2*t^2"
    assert p_poly(3).to_text() == "1"


def test_recursion_large_n():
    assert hilb_recursive(5, 12) == hilb_punctual(5, 12)


def test_memo_table_fills():
    hilb_punctual(6, 7)
    assert (6, 7) in MOTIVES


def test_beyond_eight_points():
    with pytest.raises(UnknownStratum):
        hilb_punctual(9, 3)


def test_stab_and_infinity():
    assert stab_check(6, 10)
    assert hilb_infinity(1, 3) == ONE
