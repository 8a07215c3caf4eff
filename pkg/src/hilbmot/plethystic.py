"""Plethystic Exp/Log over Z[L, L^-1] and the Omega-classes they produce.

Exp(sum A_d t^d) = prod_d zeta_{A_d}(t^d), with zeta_mu expanded monomial by
monomial, so only exponents that are Laurent polynomials in L are supported.
Log peels one degree at a time, lowest first: A_d is the t^d coefficient of
the residual, which is then multiplied by zeta_{-A_d}(t^d).
"""

from __future__ import annotations

import random

from .errors import NonUnitConstant, NonzeroConstant, UnknownStratum
from .grassmann import binom, gauss, proj
from .hilb import MAX_D, MotiveTable, PdPoly, hilb_series
from .lpoly import ONE, ZERO, LPoly, mono, specialize_euler
from .series import TSeries, zeta_class, zeta_dilated, zeta_proj

__all__ = [
    "exp_series",
    "log_series",
    "omega",
    "OMEGAS",
    "QdPoly",
    "q_poly",
    "omega_gf_check",
    "omega_recursion_check",
    "hilb_variety",
    "invariants",
]


def exp_series(a: TSeries) -> TSeries:
    """Plethystic exponential of a series without constant term."""
    if a[0]:
        raise NonzeroConstant(f"Exp needs a zero constant term, got {a[0]}")
    out = TSeries.one(a.order)
    for d in range(1, a.order + 1):
        if a[d]:
            out = out * zeta_dilated(a[d], d, a.order)
    return out


def log_series(h: TSeries) -> TSeries:
    """Inverse of :func:`exp_series`.

    >>> log_series(zeta_class(ONE, 3)).coeffs
    (LPoly('0'), LPoly('1'), LPoly('0'), LPoly('0'))
    """
    if h[0] != ONE:
        raise NonUnitConstant(f"Log needs constant term 1, got {h[0]}")
    res = h
    out = [ZERO] * (h.order + 1)
    for d in range(1, h.order + 1):
        a = res[d]
        out[d] = a
        if a:
            res = res * zeta_dilated(-a, d, h.order)
    return TSeries(out, h.order)


def _compute_omega(d: int, n: int) -> LPoly:
    if d < 1:
        return ZERO
    if n >= 3 and d > MAX_D:
        raise UnknownStratum(f"Omega^{n}_{d} needs Y-classes unknown for d>=9")
    return log_series(hilb_series(n, d))[d]


OMEGAS = MotiveTable(_compute_omega, label="Omega")


def omega(d: int, n: int) -> LPoly:
    """Omega^n_d, the t^d coefficient of Log Hilb_{n,0}(t).

    >>> omega(3, 3)
    LPoly('L^4 + L^3 + L^2')
    """
    return OMEGAS.get(d, n)


class QdPoly(PdPoly):
    """Numerator Q_d(t) of Omega_d(t) = sum_n Omega^{n+2}_d t^n over zeta_{P^{d-1}}(t)."""


def q_poly(d: int) -> QdPoly:
    if d < 1:
        raise ValueError("need d >= 1")
    if d > MAX_D:
        raise UnknownStratum(f"Q_{d} needs Y-classes unknown for d>=9")
    if d <= 3:
        return QdPoly(d, (mono(d - 1),))
    coeffs = []
    for i in range(d - 2):
        c = ZERO
        for j in range(i + 1):
            c += omega(d, i - j + 2) * gauss(j, d) * mono(binom(j, 2), (-1) ** j)
        coeffs.append(c)
    return QdPoly(d, tuple(coeffs))


def omega_gf_check(d: int, order: int = 10) -> bool:
    """Omega_d(t) == zeta_{P^{d-1}}(t) Q_d(t) up to t^order."""
    lhs = TSeries([omega(d, n + 2) for n in range(order + 1)], order)
    return lhs == zeta_proj(d - 1, order) * q_poly(d).series(order)


def omega_recursion_check(d: int, m: int) -> bool:
    """Omega^m_d against the (d-1)-term alternating sum over gamma."""
    if not (d >= 3 and m >= d):
        raise ValueError("need d >= 3 and m >= d")
    rhs = ZERO
    for g in range(1, d):
        w = gauss(m - d, m - g - 1) * gauss(g, m)
        if w:
            rhs += omega(d, g) * w * mono(binom(d - g, 2), (-1) ** (d + g + 1))
    return rhs == omega(d, m)


def hilb_variety(x_class, n: int, order: int) -> TSeries:
    """[Hilb^d(X)] for a smooth n-fold X with class x_class, d <= order."""
    if order > MAX_D:
        raise UnknownStratum(f"Hilbert series beyond t^{MAX_D} needs Y-classes unknown for d>=9")
    out = TSeries.one(order)
    for d in range(1, order + 1):
        out = out * zeta_dilated(omega(d, n) * x_class, d, order)
    return out


# checks


def _random_series(rng: random.Random, order: int, zero_const: bool) -> TSeries:
    cs = []
    for _ in range(order + 1):
        c = LPoly({rng.randint(-2, 4): rng.randint(-3, 3) for _ in range(rng.randint(0, 3))})
        cs.append(c)
    cs[0] = ZERO if zero_const else ONE
    return TSeries(cs, order)


def _p3_by_monomials(order: int) -> TSeries:
    # prod_{i=0}^{3} prod_d zeta_{Omega^3_d}(L^i t^d)
    out = TSeries.one(order)
    for i in range(4):
        for d in range(1, order + 1):
            out = out * zeta_class(omega(d, 3), order).scale(i).dilate(d)
    return out


def invariants(seed: int = 0):
    from . import reference as R

    rng = random.Random(seed)
    pairs = [(_random_series(rng, 10, True), _random_series(rng, 10, True)) for _ in range(20)]
    yield "exp-log-inverse", all(log_series(exp_series(a)) == a for a, _ in pairs)
    yield "exp-homomorphism", all(exp_series(a + b) == exp_series(a) * exp_series(b) for a, b in pairs)
    yield "log-of-geometric", log_series(zeta_class(ONE, 8)) == TSeries([0, 1], 8)
    yield "zeta-scaling", all(
        zeta_class(mu.shift(1), 8) == zeta_class(mu, 8).scale(1) for a, _ in pairs for mu in a.coeffs[1:4]
    )
    yield "omega-small-n", all(omega(d, 1) == (ONE if d == 1 else ZERO) for d in range(1, 9)) and all(
        omega(d, 2) == mono(d - 1) for d in range(1, 9)
    )
    yield "omega-3-golden", all(omega(d, 3) == R.lp(R.OMEGA_3[d]) for d in range(1, 9))
    yield "q-golden", all(q_poly(d).coeffs == R.q_ref(d) for d in range(1, 9))
    yield "omega-gf", all(omega_gf_check(d, 10) for d in range(1, 9))
    yield "omega-recursion", all(omega_recursion_check(d, m) for d in range(3, 9) for m in range(d, 11))
    p3 = hilb_variety(proj(3), 3, 8)
    yield "p3-golden", all(p3[d] == R.lp(R.HILB_P3[d]) for d in range(5, 9))
    yield "p3-monomial-form", p3 == _p3_by_monomials(8)
    yield "point-reproduces-punctual", all(hilb_variety(ONE, n, 8) == hilb_series(n, 8) for n in range(1, 5))
    yield "p1-curve", all(hilb_variety(proj(1), 1, 8)[d] == proj(d) for d in range(9))
    yield "omega-euler-positive", all(
        specialize_euler(omega(d, n)) > 0 for d in range(1, 9) for n in range(2, 9)
    )
