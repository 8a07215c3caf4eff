import pytest

from hilbmot.grassmann import binom, gauss, gauss_pascal, gr_infinity, is_p2_divisible, proj
from hilbmot.lpoly import L, ONE, ZERO, specialize_euler


def test_small_values():
    assert gauss(2, 4) == L**4 + L**3 + 2 * L**2 + L + 1
    assert gauss(0, 5) == ONE
    assert gauss(3, 2) == ZERO
    assert gauss(-1, 3) == ZERO


def test_proj():
    assert proj(2) == L**2 + L + 1
    assert proj(-1) == ZERO


@pytest.mark.parametrize("n", range(9))
def test_euler_is_binomial(n):
    for k in range(n + 1):
        assert specialize_euler(gauss(k, n)) == binom(n, k)
        assert gauss(k, n) == gauss_pascal(k, n)


def test_gr_infinity_truncates():
    assert gr_infinity(2, 3) == 1 + L + 2 * L**2


def test_p2_divisibility():
    assert is_p2_divisible(1, 3)
    assert not is_p2_divisible(1, 2)
