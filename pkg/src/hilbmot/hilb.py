"""Punctual Hilbert scheme motives [Hilb^d(A^n)_0] and their structure.

Two independent routes compute the same classes:

* assembly from the diagonal strata ``y_class`` (``hilb_punctual``), and
* the (d-1)-term recursion in the ambient dimension (``hilb_recursive``).

They are compared in the test suite; neither is treated as the oracle.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .errors import UnknownStratum
from .grassmann import binom, gauss, gr_infinity, proj
from .lpoly import ONE, ZERO, LPoly, mono, specialize_weight
from .series import TSeries, latex_tpoly, render_tpoly, zeta_dilated, zeta_proj
from .strata import y_class

__all__ = [
    "MotiveTable",
    "MOTIVES",
    "PdPoly",
    "goettsche_punctual",
    "goettsche_series",
    "hilb_punctual",
    "y_from_hilb",
    "invert_assembly",
    "hilb_recursive",
    "p_poly",
    "p_coeff_from_y",
    "z_series",
    "stab_check",
    "weight_check",
    "hilb_infinity",
    "hilb_series",
    "relation_d2_terms",
    "MAX_D",
    "invariants",
]

MAX_D = 8


@lru_cache(maxsize=None)
def goettsche_series(order: int) -> TSeries:
    """prod_{m>=1} (1 - L^{m-1} t^m)^{-1} up to t^order."""
    out = TSeries.one(order)
    for m in range(1, order + 1):
        out = out * zeta_dilated(mono(m - 1), m, order)
    return out


def goettsche_punctual(d: int) -> LPoly:
    """[Hilb^d(A^2)_0]."""
    if d < 0:
        return ZERO
    return goettsche_series(d)[d]


class MotiveTable:
    """Memo of classes keyed by (d, n), filled by ``compute(d, n)``.

    Concurrent fills of the same key recompute the same value, so the lock
    only guards the dict itself.
    """

    def __init__(self, compute, label: str = "Hilb"):
        self._compute = compute
        self._label = label
        self._data: dict[tuple[int, int], LPoly] = {}
        self._lock = threading.Lock()

    def get(self, d: int, n: int) -> LPoly:
        key = (d, n)
        with self._lock:
            hit = self._data.get(key)
        if hit is not None:
            return hit
        val = self._compute(d, n)
        if not val.is_polynomial():
            raise ArithmeticError(f"{self._label}({d}, {n}) has a negative exponent")
        with self._lock:
            self._data.setdefault(key, val)
        return val

    def __contains__(self, key) -> bool:
        with self._lock:
            return key in self._data

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)


def _compute_punctual(d: int, n: int) -> LPoly:
    if d < 0 or n < 0:
        return ZERO
    if d <= 1:
        return ONE
    if n == 0:
        return ZERO
    if n == 1:
        return ONE
    if n == 2:
        return goettsche_punctual(d)
    out = ZERO
    for k in range(1, min(n, d - 1) + 1):
        out += gauss(k, n) * y_class(k, d).shift((n - k) * (d - k - 1))
    return out


MOTIVES = MotiveTable(_compute_punctual)


def hilb_punctual(d: int, n: int) -> LPoly:
    """[Hilb^d(A^n)_0].

    >>> hilb_punctual(2, 4)
    LPoly('L^3 + L^2 + L + 1')
    """
    return MOTIVES.get(d, n)


def y_from_hilb(k: int, d: int) -> LPoly:
    """Invert the assembly: recover Y(k, d) from Hilb^d(A^j)_0, j <= k."""
    return invert_assembly(k, d, hilb_punctual)


def invert_assembly(k: int, d: int, hilb) -> LPoly:
    out = ZERO
    for j in range(1, k + 1):
        e = (k - j) * (d - j - 1) - binom(k - j, 2)
        out += gauss(j, k) * hilb(d, j) * mono(e, (-1) ** (k + j))
    return out


def hilb_recursive(d: int, m: int, hilb=None) -> LPoly:
    """Hilb^d(A^m)_0 from the classes in dimensions 1..d-1 (m >= d > 1)."""
    if not m >= d > 1:
        raise ValueError("need m >= d > 1")
    hilb = hilb or hilb_punctual
    out = ZERO
    for g in range(1, d):
        w = gauss(m - d, m - g - 1) * gauss(g, m)
        if w:
            out += hilb(d, g) * w * mono(binom(d - g, 2), (-1) ** (d + g + 1))
    return out


@dataclass(frozen=True)
class PdPoly:
    """Numerator P_d(t) of Z_d(t) = zeta_{P^{d-1}}(t) P_d(t)."""

    d: int
    coeffs: tuple[LPoly, ...]

    def degree(self) -> int:
        nz = [i for i, c in enumerate(self.coeffs) if c]
        return max(nz) if nz else -1

    def at_one(self) -> LPoly:
        return sum(self.coeffs, ZERO)

    def series(self, order: int) -> TSeries:
        return TSeries(self.coeffs, order)

    def to_text(self) -> str:
        return render_tpoly(self.coeffs)

    def to_latex(self) -> str:
        return latex_tpoly(self.coeffs)

    def to_json(self) -> dict:
        return {"d": self.d, "coeffs": [c.to_json() for c in self.coeffs]}

    def __str__(self) -> str:
        return self.to_text()


def _check_bound(d: int) -> None:
    if d > MAX_D:
        raise UnknownStratum(f"P_{d} needs Y-classes unknown for d>=9")


@lru_cache(maxsize=None)
def p_poly(d: int) -> PdPoly:
    if d < 1:
        raise ValueError("need d >= 1")
    _check_bound(d)
    if d <= 3:
        return PdPoly(d, (ONE,))
    coeffs = []
    for i in range(d - 1):
        a = ZERO
        for al in range(i + 1):
            a += hilb_punctual(d, i - al + 1) * gauss(al, d) * mono(binom(al, 2), (-1) ** al)
        coeffs.append(a)
    pd = PdPoly(d, tuple(coeffs))
    if pd.at_one() != ONE:
        raise ArithmeticError(f"P_{d}(1) != 1")
    return pd


def p_coeff_from_y(i: int, d: int) -> LPoly:
    """a_i^{(d)} written through the Y-classes instead of the Hilb classes."""
    out = ZERO
    for k in range(i + 1):
        out += gauss(i - k, d - k - 2) * y_class(k + 1, d) * mono(binom(i - k, 2), (-1) ** (i - k))
    return out


def z_series(d: int, order: int) -> TSeries:
    """Z_d(t) = sum_n [Hilb^d(A^{n+1})_0] t^n."""
    _check_bound(d)
    return zeta_proj(d - 1, order) * p_poly(d).series(order)


def stab_check(d: int, n: int) -> bool:
    """Hilb^d(A^n)_0 == Gr(d-1, n) modulo L^{n-d+2}."""
    prec = n - d + 2
    if prec <= 0:
        return True
    diff = hilb_punctual(d, n) - gauss(d - 1, n)
    return diff.is_zero() or diff.valuation() >= prec


def _zbinom(k: int, n: int) -> list[int]:
    """Gaussian binomial in z as an integer list, via the product formula."""
    if k < 0 or k > n:
        return []

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def div(a, b):
        a = list(a)
        q = [0] * (len(a) - len(b) + 1)
        for i in range(len(q) - 1, -1, -1):
            q[i] = a[i + len(b) - 1] // b[-1]
            for j, y in enumerate(b):
                a[i + j] -= q[i] * y
        assert not any(a), "inexact division"
        return q

    num, den = [1], [1]
    for j in range(1, n + 1):
        num = mul(num, [-1] + [0] * (j - 1) + [1])
    for j in list(range(1, k + 1)) + list(range(1, n - k + 1)):
        den = mul(den, [-1] + [0] * (j - 1) + [1])
    return div(num, den)


def weight_check(d: int, n: int) -> bool:
    """Weight polynomial congruence against the z-binomial, modulo z^{n-d+2}."""
    prec = n - d + 2
    if prec <= 0:
        return True
    w = specialize_weight(hilb_punctual(d, n))
    g = _zbinom(d - 1, n)
    pad = lambda v: (v + [0] * prec)[:prec]
    return pad(w) == pad(g)


def hilb_infinity(d: int, l_prec: int) -> LPoly:
    """The limit of Hilb^d(A^n)_0 as n grows, modulo L^l_prec."""
    if d < 1:
        raise ValueError("need d >= 1")
    val = gr_infinity(d - 1, l_prec)
    if d <= MAX_D:
        n = max(d + l_prec - 2, 1)
        if hilb_punctual(d, n).truncate(l_prec) != val:
            raise ArithmeticError("stabilised class disagrees with the infinite Grassmannian")
    return val


def hilb_series(n: int, order: int) -> TSeries:
    """Hilb_{n,0}(t) = sum_d [Hilb^d(A^n)_0] t^d."""
    return TSeries([hilb_punctual(d, n) for d in range(order + 1)], order)


def invariants():
    D = range(2, MAX_D + 1)
    yield "inversion-round-trip", all(y_from_hilb(k, d) == y_class(k, d) for d in D for k in range(1, d))
    yield "recursion-cross-path", all(
        hilb_recursive(d, m) == hilb_punctual(d, m) for d in D for m in range(d, 13)
    )
    yield "coefficients-via-y", all(
        p_poly(d).coeffs[i] == p_coeff_from_y(i, d) for d in range(4, MAX_D + 1) for i in range(d - 1)
    )
    yield "p-at-one", all(p_poly(d).at_one() == ONE for d in range(1, MAX_D + 1))
    yield "p-degree", all(p_poly(d).degree() == d - 2 for d in range(4, MAX_D + 1))
    yield "d-2-relation", all(_relation_d2(d) for d in range(4, MAX_D + 1))
    yield "z-series", all(
        z_series(d, 10)[n] == hilb_punctual(d, n + 1) for d in range(1, MAX_D + 1) for n in range(11)
    )
    yield "stabilisation", all(stab_check(d, n) for d in range(1, MAX_D + 1) for n in range(1, 13))
    yield "weight-congruence", all(weight_check(d, n) for d in range(1, MAX_D + 1) for n in range(1, 13))
    yield "infinite", all(
        hilb_infinity(d, p) == gr_infinity(d - 1, p) for d in range(1, MAX_D + 1) for p in range(1, 7)
    )
    yield "three-points", all(hilb_punctual(3, n + 1) == gauss(2, n + 2) for n in range(11))


def relation_d2_terms(d: int) -> LPoly:
    """sum_{i=1}^{d-2} L^{d-2-i} [P^{i-1}] a_i^{(d)}."""
    a = p_poly(d).coeffs
    total = ZERO
    for i in range(1, d - 1):
        total += proj(i - 1) * a[i] * mono(d - 2 - i)
    return total


def _relation_d2(d: int) -> bool:
    # the leading term is L^{d-2}[P^{C(d-2,2)-1}]; this is not y_class(d-2, d),
    # which equals [P^{C(d-1,2)-1}]
    return (relation_d2_terms(d) + proj(binom(d - 2, 2) - 1).shift(d - 2)).is_zero()
