"""Classes of Grassmannians (Gaussian binomials in L) and their identities.

Out-of-range parameters give zero, so identity sums need no boundary cases.
The ``check_*`` functions evaluate one instance of an identity and are
collected by :func:`invariants` for the ``verify`` command.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import NotDivisible
from .lpoly import ONE, ZERO, LPoly, exact_div, mono, specialize_euler
from .series import TSeries, zeta_proj

__all__ = [
    "gauss",
    "gauss_pascal",
    "proj",
    "gr_infinity",
    "is_p2_divisible",
    "binom",
    "invariants",
]


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def proj(e: int) -> LPoly:
    """[P^e] = 1 + L + ... + L^e, and 0 for e < 0."""
    if e < 0:
        return ZERO
    return LPoly.from_coeffs([1] * (e + 1))


@lru_cache(maxsize=None)
def gauss(k: int, n: int) -> LPoly:
    """[Gr(k, n)] as a Gaussian binomial.

    Built as a telescoping product: after step i the partial result is
    gauss(i, n-k+i), so every division is exact.

    >>> gauss(2, 4)
    LPoly('L^4 + L^3 + 2*L^2 + L + 1')
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    out = ONE
    for i in range(1, k + 1):
        out = exact_div(out * (mono(n - k + i) - 1), mono(i) - 1)
    return out


@lru_cache(maxsize=None)
def gauss_pascal(k: int, n: int) -> LPoly:
    """Independent path via the q-Pascal rule; used only as a test oracle."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return gauss_pascal(k - 1, n - 1) + gauss_pascal(k, n - 1).shift(k)


def gr_infinity(k: int, l_prec: int) -> LPoly:
    """[Gr(k, oo)] modulo L^l_prec.

    Coefficient of t^k in prod_{i>=0} (1 - L^i t)^{-1}; factors with
    i >= l_prec are 1 modulo L^l_prec and are dropped.
    """
    if k < 0 or l_prec < 1:
        raise ValueError("need k >= 0 and l_prec >= 1")
    return zeta_proj(l_prec - 1, k)[k].truncate(l_prec)


def is_p2_divisible(k: int, n: int) -> bool:
    """Congruence criterion for [P^2] | [Gr(k, n)], 0 < k <= n."""
    if not 0 < k <= n:
        raise ValueError("need 0 < k <= n")
    return (k % 3 == 1 and n % 3 == 0) or (k % 3 == 2 and n % 3 != 2)


def _divides(a: LPoly, b: LPoly) -> bool:
    try:
        exact_div(a, b)
    except NotDivisible:
        return False
    return True


# single instances of the identities


def check_tartaglia(i: int, d: int) -> bool:
    lhs = gauss(i + 1, d + 1)
    return lhs == gauss(i, d) + gauss(i + 1, d).shift(i + 1) and lhs == gauss(i + 1, d) + gauss(i, d).shift(d - i)


def check_binomial_theorem(d: int, order: int) -> bool:
    inv = zeta_proj(d - 1, order).inverse()
    return all(
        inv[i] == gauss(i, d).shift(binom(i, 2)) * (-1) ** i for i in range(order + 1)
    )


def check_zeta_coefficients(k: int, order: int) -> bool:
    z = zeta_proj(k, order)
    return all(z[n] == gauss(k, n + k) for n in range(order + 1))


def check_shifted_generating(k: int, alpha: int, order: int) -> bool:
    """sum_{n>=k} Gr(k,n) L^{alpha n} t^n = L^{k alpha} t^k zeta_{P^{alpha+k}} / zeta_{P^{alpha-1}}."""
    lhs = TSeries([gauss(k, n).shift(alpha * n) if n >= k else ZERO for n in range(order + 1)], order)
    ratio = zeta_proj(alpha + k, order) * zeta_proj(alpha - 1, order).inverse()
    rhs = TSeries([ZERO] * k + [c.shift(k * alpha) for c in ratio.coeffs], order)
    return lhs == rhs


def check_hockey_stick(g: int, gamma: int, alpha: int) -> bool:
    total = ZERO
    for k in range(alpha + 1):
        total += gauss(gamma, gamma + alpha - k) * gauss(g - gamma, g - gamma + k) * mono(k * (gamma + 1))
    return total == gauss(g + 1, g + 1 + alpha)


def check_alternating_vanish(d: int, k: int) -> bool:
    total = ZERO
    for j in range(k + 1):
        e = binom(j, 2) - j * (k - 1)
        total += gauss(j, j + d - 1) * gauss(k - j, d) * mono(e, (-1) ** j)
    return total.is_zero()


def check_two_sided(eps: int, d: int, m: int) -> bool:
    lhs = gauss(d - eps, m - eps) * gauss(eps - 1, m)
    rhs = ZERO
    for j in range(d - eps + 1):
        e = binom(j + 1, 2) - (j + 1) * (d - eps)
        rhs += gauss(d - 1, j + m) * gauss(eps + j, d) * mono(e, (-1) ** j)
    return lhs == rhs


def check_double_grassmannian(h: int, k: int) -> bool:
    total = ZERO
    for j in range(h, k + 1):
        e = binom(j + 1, 2) - j * (h + 1)
        total += gauss(h, j) * gauss(j, k) * mono(e, (-1) ** j)
    return total.is_zero()


def check_horizontal_stick(d: int, i: int) -> bool:
    rhs = ZERO
    for a in range(i + 1):
        rhs += gauss(a, d) * mono(binom(a, 2), (-1) ** (a + i))
    return gauss(i, d - 1).shift(binom(i + 1, 2)) == rhs


def check_p2_criterion(k: int, n: int) -> bool:
    return is_p2_divisible(k, n) == _divides(gauss(k, n), proj(2))


def check_shadows(bound: int) -> bool:
    """Euler shadows: chi Gr = binomial and the three binomial identities."""
    for n in range(bound + 1):
        for k in range(n + 1):
            if specialize_euler(gauss(k, n)) != comb(n, k):
                return False
    for g in range(bound + 1):
        for gamma in range(g + 1):
            for alpha in range(bound + 1):
                s = sum(binom(g - gamma + k, g - gamma) * binom(gamma + alpha - k, gamma) for k in range(alpha + 1))
                if s != binom(g + 1 + alpha, g + 1):
                    return False
    for d in range(1, bound + 1):
        for k in range(1, d + 1):
            if sum((-1) ** j * binom(j + d - 1, j) * binom(d, k - j) for j in range(k + 1)):
                return False
    for k in range(bound + 1):
        for h in range(k):
            if sum((-1) ** j * binom(j, h) * binom(k, j) for j in range(h, k + 1)):
                return False
    return True


def invariants(bound: int = 12):
    """Yield (name, ok) for the exhaustive identity suite up to ``bound``."""
    r = range(bound + 1)
    yield "tartaglia", all(check_tartaglia(i, d) for i in r for d in r)
    yield "symmetry", all(gauss(k, n) == gauss(n - k, n) for n in r for k in range(n + 1))
    yield "pascal-oracle", all(gauss(k, n) == gauss_pascal(k, n) for n in r for k in range(-1, n + 2))
    yield "binomial-theorem", all(check_binomial_theorem(d, bound) for d in range(1, bound + 1))
    yield "zeta-coefficients", all(check_zeta_coefficients(k, 10) for k in r)
    yield "shifted-generating", all(
        check_shifted_generating(k, a, 10) for k in r for a in range(1, bound + 1)
    )
    yield "hockey-stick", all(
        check_hockey_stick(g, gm, a) for g in r for gm in range(g + 1) for a in r
    )
    yield "alternating-vanish", all(
        check_alternating_vanish(d, k) for d in range(1, bound + 1) for k in range(1, bound + 1)
    )
    yield "two-sided", all(
        check_two_sided(e, d, m)
        for m in range(1, bound + 1)
        for d in range(1, m + 1)
        for e in range(1, d + 1)
    )
    yield "double-grassmannian", all(check_double_grassmannian(h, k) for k in r for h in range(k))
    yield "horizontal-stick", all(check_horizontal_stick(d, i) for d in range(1, bound + 1) for i in range(d))
    yield "p2-criterion", all(check_p2_criterion(k, n) for n in range(1, 16) for k in range(1, n + 1))
    yield "gr-infinity", all(
        gr_infinity(k, p) == gauss(k, k + p - 1).truncate(p) for k in range(8) for p in range(1, 8)
    )
    yield "binomial-shadows", check_shadows(bound)
