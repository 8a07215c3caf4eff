import pytest

from hilbmot.errors import UnknownStratum
from hilbmot.grassmann import binom, proj
from hilbmot.lpoly import ONE, specialize_euler
from hilbmot.strata import d_class, y_class


def test_curvilinear_and_top():
    for d in range(2, 9):
        assert y_class(d - 1, d) == ONE
    for d in range(3, 9):
        assert y_class(d - 2, d) == proj(binom(d - 1, 2) - 1)


def test_d_class_euler():
    assert [specialize_euler(d_class(i)) for i in range(1, 8)] == [1, 2, 1, 0, 0, 0, 0]


def test_unknown_region_raises():
    with pytest.raises(UnknownStratum) as e:
        y_class(3, 9)
    assert e.value.boundary


def test_known_outside_unknown_region():
    # k = d-5 and above have closed forms for every d
    assert y_class(5, 10) is not None
    assert y_class(1, 2) == ONE
    assert specialize_euler(y_class(1, 12)) == 1
