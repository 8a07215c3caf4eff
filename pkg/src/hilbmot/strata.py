"""Closed-form motives of embedding-dimension strata and their pieces.

``y_class(k, d)`` is the class of the locus of length-d fat points in A^k
with embedding dimension exactly k.  Closed forms exist for k in {1, 2}
and for d-5 <= k <= d-1; everything else raises :class:`UnknownStratum`.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import OutOfRange, UnknownStratum
from .grassmann import binom, gauss, proj
from .lpoly import ONE, ZERO, L, LPoly, exact_div, mono, specialize_euler

__all__ = [
    "d_class",
    "hs_very_compressed",
    "hs_stratum_1kr1",
    "y_class",
    "gamma",
    "c_class",
    "C_RANGE",
    "invariants",
]


def _s(k: int) -> int:
    """Number of quadrics in k variables."""
    return binom(k + 1, 2)


@lru_cache(maxsize=None)
def d_class(i: int) -> LPoly:
    """Classes D_i from the recursion D_1 = 1, D_i = [P^{C(i+2,3)-1}] - sum_{j<i} Gr(j,i) D_j."""
    if i < 1:
        raise ValueError("d_class needs i >= 1")
    if i == 1:
        return ONE
    out = proj(binom(i + 2, 3) - 1)
    for j in range(1, i):
        out -= gauss(j, i) * d_class(j)
    if specialize_euler(out) < 0:
        raise ArithmeticError(f"D_{i} has negative Euler characteristic")
    return out


def hs_very_compressed(k: int, r: int) -> LPoly:
    """Stratum with Hilbert-Samuel function (1, k, r)."""
    if k < 1 or r < 0:
        raise ValueError("need k >= 1, r >= 0")
    return gauss(r, _s(k))


def hs_stratum_1kr1(k: int, r: int) -> LPoly:
    """Stratum with Hilbert-Samuel function (1, k, r, 1)."""
    if k < 1 or r < 1:
        raise ValueError("need k, r >= 1")
    s = _s(k)
    base = ZERO
    for i in range(1, k + 1):
        base += gauss(i, k) * gauss(r - i, s - i) * d_class(i)
    return base.shift(s - r) if base else ZERO


def _y_closed(k: int, d: int) -> LPoly:
    """Closed forms for k = d-1, ..., d-5 (zero conventions applied first)."""
    P, G = proj, gauss
    j = d - k
    if j == 1:
        return ONE
    if j == 2:
        return G(1, _s(d - 2))
    if j == 3:
        return G(2, _s(d - 3)) + P(d - 4) * mono(_s(d - 3) - 1)
    if j == 4:
        s3, s4 = _s(d - 3), _s(d - 4)
        return (
            G(3, s4)
            + P(d - 5) * mono(s3 - 3)
            + (P(d - 5) * P(s4 - 2) + G(2, d - 4) * (L**3 + L**2)) * mono(s4 - 2)
        )
    if j == 5:
        s3, s4, s5 = _s(d - 3), _s(d - 4), _s(d - 5)
        return (
            G(4, s5)
            + P(d - 6) * mono(s3 - 6)
            + G(2, d - 5) * P(2) * mono(2 * (s5 - 2))
            + (P(d - 6) * P(s5 - 2) - G(2, d - 5) * (-(L**3) - L**2 + L + 1)) * mono(s4 - 4)
            + (
                G(3, d - 5) * (L**9 + L**8 + L**7 + L**6 - L**4 - L**3 - L**2)
                + G(2, d - 5) * (L**3 + L**2) * P(s5 - 3)
                + P(d - 6) * G(2, s5 - 1)
            )
            * mono(s5 - 3)
        )
    raise UnknownStratum(f"no closed form for Y({k},{d})")


def y_class_known(k: int, d: int) -> bool:
    return k <= 0 or k >= d or k in (1, 2) or d - k <= 5


@lru_cache(maxsize=None)
def y_class(k: int, d: int) -> LPoly:
    """[Y^k_{k,d}], the diagonal embedding-dimension stratum.

    >>> y_class(2, 4)
    LPoly('L^2 + L + 1')
    """
    if k <= 0 or k >= d:
        return ZERO
    if k == 1 or k == d - 1:
        return ONE
    if d - k <= 5:
        return _y_closed(k, d)
    if k == 2:
        from .hilb import goettsche_punctual

        return goettsche_punctual(d) - proj(1).shift(d - 2)
    raise UnknownStratum(
        f"Y-classes unknown for d>=9 and 3<=k<=d-6 (asked for k={k}, d={d}); "
        "no closed form is available beyond eight points"
    )


def y_class_goettsche(d: int) -> LPoly:
    """The k=2 stratum via the planar series, regardless of d."""
    from .hilb import goettsche_punctual

    if d < 3:
        return ONE if d == 2 else ZERO
    return goettsche_punctual(d) - proj(1).shift(d - 2)


_GAMMA = {
    (0, 0): ONE,
    (1, 1): ONE,
    (1, 2): ONE,
    (2, 1): ONE,
    (2, 2): proj(2),
    (2, 4): proj(2),
    (2, 3): L**8 + L**7 + 2 * L**6 + 2 * L**5 + 2 * L**4 - L**2 - L,
}

C_RANGE = {1: (1, 2), 2: (1, 2, 3, 4)}


def gamma(e: int, i: int) -> LPoly:
    try:
        return _GAMMA[(e, i)]
    except KeyError:
        raise OutOfRange(f"no constant Gamma_({e},{i})") from None


def c_class(e: int, i: int, k: int) -> LPoly:
    """Class of the piece C^k_{e,i} of Y^k_{k,k+e+1}."""
    if e not in C_RANGE or i not in C_RANGE[e] or k < 1:
        raise OutOfRange(f"C-stratum ({e},{i}) with k={k} is not available")
    g = gamma(e, i)
    if (e, i) == (1, 1):
        return g * proj(k - 2)
    if (e, i) == (1, 2):
        return g * proj(binom(k, 2)).shift(k - 1)
    if (e, i) == (2, 1):
        return g * gauss(1, k).shift((k - 1) * (k + 2) // 2)
    if (e, i) == (2, 2):
        return g * gauss(2, k)
    if (e, i) == (2, 3):
        return g * gauss(3, k)
    inner = (
        exact_div(gauss(2, _s(k)), proj(2))
        - gauss(3, k) * L * (L**5 + L**3 + L**2 - 1)
        - gauss(2, k)
    )
    return g * inner


def invariants():
    yield "stratification-d-3", all(
        y_class(d - 3, d) == hs_very_compressed(d - 3, 2) + hs_stratum_1kr1(d - 3, 1) for d in range(4, 9)
    )
    yield "overlap-k2", all(y_class(2, d) == y_class_goettsche(d) for d in range(3, 9))
    yield "c-stratification", all(
        sum((c_class(e, i, k) for i in C_RANGE[e]), ZERO) == y_class(k, k + e + 1)
        for e in (1, 2)
        for k in range(1, 9)
    )
    yield "d-class-nonnegative", all(specialize_euler(d_class(i)) >= 0 for i in range(1, 8))
    yield "unknown-boundary", _raises_unknown(3, 9)


def _raises_unknown(k: int, d: int) -> bool:
    try:
        y_class(k, d)
    except UnknownStratum:
        return True
    return False
