import pytest

from hilbmot.errors import ResourceLimit, UnknownStratum
from hilbmot.macmahon import (
    andrews_check,
    count_partitions,
    epsilon,
    iter_partitions,
    macmahon_coeff,
    partition_counts,
    r_poly,
    r_poly_check,
)


def test_known_counts():
    assert partition_counts(2, 6) == [1, 1, 2, 3, 5, 7, 11]
    assert partition_counts(3, 6) == [1, 1, 3, 6, 13, 24, 48]
    assert count_partitions(4, 6) == 140


def test_solid_partitions():
    assert partition_counts(4, 9) == [1, 1, 4, 10, 26, 59, 140, 307, 684, 1464]


def test_ideals_are_downward_closed():
    ps = list(iter_partitions(3, 4))
    assert len(ps) == 13
    assert all(p.is_downward_closed() for p in ps)


def test_budget():
    with pytest.raises(ResourceLimit):
        count_partitions(6, 9, budget=100)


def test_epsilon_first_nonzero():
    assert epsilon(6, 4) == 1
    assert all(epsilon(5, n) == 0 for n in range(1, 10))


def test_macmahon_coeff():
    assert macmahon_coeff(1, 3) == 1
    assert macmahon_coeff(3, 3) == 3


def test_r_poly():
    assert r_poly(7).to_text() == "n - 2"
    assert r_poly_check(8, 12)
    with pytest.raises(UnknownStratum):
        r_poly_check(9, 12)


def test_andrews():
    assert andrews_check(0).computed == {0: 1, 1: 5, 2: 16}
    assert andrews_check(2).matched == [0]
