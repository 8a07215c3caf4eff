"""Punctual Quot schemes of O^r on A^n, lengths d <= 4.

The strata are indexed by s = dim F/mF (number of generators).  Unshifted
indices (d, n, r) are used everywhere except in :func:`quot_series`, whose
coefficient of x^n y^r is the class over A^{n+1} with rank r+1.
"""

from __future__ import annotations

from .errors import OutOfRange
from .grassmann import gauss, proj
from .hilb import hilb_punctual
from .lpoly import ONE, ZERO, LPoly, mono, specialize_euler
from .plethystic import log_series
from .series import BiSeries, TSeries, bi_from_factors, binomial_series, zeta_class, zeta_dilated, zeta_proj

__all__ = [
    "QUOT_ROWS",
    "quot_hs_stratum",
    "quot_stratum",
    "quot_punctual",
    "quot_series",
    "quot_series_strata",
    "u4",
    "u4_from_strata",
    "quot_omega",
    "quot_variety",
    "curvilinear_motive",
    "elementary_dim_check",
    "chi_rational_expansion",
    "invariants",
]

MAX_QUOT_D = 4


# (s, Hilbert-Samuel function, class as a function of n and r)
QUOT_ROWS = {
    3: (
        (1, "(1,1,1),(1,2)", lambda n, r: hilb_punctual(3, n) * proj(r - 1) * mono(2 * (r - 1))),
        (2, "(2,1)", lambda n, r: gauss(2, r) * proj(2 * n - 1) * mono(r - 2)),
        (3, "(3)", lambda n, r: gauss(3, r)),
    ),
    4: (
        (1, "(1,1,1,1),(1,2,1),(1,3)", lambda n, r: hilb_punctual(4, n) * proj(r - 1) * mono(3 * (r - 1))),
        (2, "(2,1,1)", lambda n, r: gauss(2, r) * proj(n - 1) * proj(1) * mono(2 * (n + r - 2) - 1)),
        (2, "(2,2)", lambda n, r: gauss(2, r) * gauss(2, 2 * n) * mono(2 * (r - 2))),
        (3, "(3,1)", lambda n, r: gauss(3, r) * proj(3 * n - 1) * mono(r - 3)),
        (4, "(4)", lambda n, r: gauss(4, r)),
    ),
}


def _check_nr(n: int, r: int) -> None:
    if n < 1 or r < 1:
        raise ValueError("need n, r >= 1")


def quot_hs_stratum(d: int, hs: str, n: int, r: int) -> LPoly:
    """Single row of the stratum tables, selected by its Hilbert-Samuel label."""
    _check_nr(n, r)
    for _, label, f in QUOT_ROWS.get(d, ()):
        if label == hs:
            return f(n, r)
    raise OutOfRange(f"no Quot stratum {hs} for d={d}")


def quot_stratum(s: int, d: int, n: int, r: int) -> LPoly:
    """[Y^{n,r}_{s,d}]; rows sharing the same s are summed."""
    if d not in QUOT_ROWS:
        raise OutOfRange(f"Quot strata are tabulated only for d in (3, 4), not d={d}")
    if not 1 <= s <= d:
        raise OutOfRange(f"need 1 <= s <= {d}")
    _check_nr(n, r)
    return sum((f(n, r) for s2, _, f in QUOT_ROWS[d] if s2 == s), ZERO)


def quot_punctual(d: int, n: int, r: int) -> LPoly:
    """[Quot_{A^n}(O^r, d)_0]."""
    if d > MAX_QUOT_D:
        raise OutOfRange(f"punctual Quot classes are only known for d <= {MAX_QUOT_D}")
    _check_nr(n, r)
    if d < 0:
        return ZERO
    if d == 0:
        return ONE
    if d == 1:
        return proj(r - 1)
    if d == 2:
        return proj(r - 1) * proj(n - 1) * mono(r - 1) + gauss(2, r)
    return sum((quot_stratum(s, d, n, r) for s in range(1, d + 1)), ZERO)


def u4() -> BiSeries:
    """U_4(x, y) from the embedded published terms."""
    from .reference import U4_TERMS

    return BiSeries(dict(U4_TERMS), 4, 3)


def _l4_zeta(order: int) -> TSeries:
    return zeta_class(mono(4), order)


def quot_series(d: int, nx: int, ny: int) -> BiSeries:
    """Closed product form of sum_{n,r} [Quot_{A^{n+1}}(O^{r+1}, d)_0] x^n y^r."""
    if not 1 <= d <= MAX_QUOT_D:
        raise OutOfRange(f"closed forms exist only for 1 <= d <= {MAX_QUOT_D}")
    zx = zeta_proj(d - 1, nx)
    zy = zeta_proj(d, ny)
    if d == 1:
        return bi_from_factors([zx], [zy], None, nx, ny)
    if d == 2:
        return bi_from_factors([zx], [zy], {(0, 0): ONE, (1, 1): mono(1, -1)}, nx, ny)
    if d == 3:
        corr = {(0, 0): ONE, (1, 1): mono(1, -1) + mono(2, -1), (2, 2): mono(3)}
        return bi_from_factors([zx], [zy], corr, nx, ny)
    from .reference import U4_TERMS

    return bi_from_factors([zx, _l4_zeta(nx)], [zy], dict(U4_TERMS), nx, ny)


def quot_series_strata(d: int, nx: int, ny: int) -> BiSeries:
    """The same series assembled coefficient by coefficient from quot_punctual."""
    return BiSeries({(i, j): quot_punctual(d, i + 1, j + 1) for i in range(nx + 1) for j in range(ny + 1)}, nx, ny)


def u4_from_strata(nx: int = 6, ny: int = 6) -> BiSeries:
    """Divide the stratum-assembled Quot_4 series by its zeta factors."""
    s = quot_series_strata(4, nx, ny)
    inv_x = [zeta_proj(3, nx).inverse(), _l4_zeta(nx).inverse()]
    inv_y = [zeta_proj(4, ny).inverse()]
    return bi_from_factors(inv_x, inv_y, None, nx, ny) * s


def quot_omega(d: int, n: int, r: int) -> LPoly:
    """Omega^{n,r}_d from Log of sum_d [Quot_{A^n}(O^r, d)_0] t^d."""
    if not 1 <= d <= MAX_QUOT_D:
        raise OutOfRange(f"Quot Omega-classes need d <= {MAX_QUOT_D}")
    h = TSeries([quot_punctual(e, n, r) for e in range(d + 1)], d)
    return log_series(h)[d]


def quot_variety(x_class, n: int, r: int, order: int) -> TSeries:
    """sum_d [Quot_X(E, d)] t^d for E locally free of rank r on a smooth n-fold X."""
    if order > MAX_QUOT_D:
        raise OutOfRange(f"Quot series of a variety need order <= {MAX_QUOT_D}")
    out = TSeries.one(order)
    for d in range(1, order + 1):
        out = out * zeta_dilated(quot_omega(d, n, r) * x_class, d, order)
    return out


def curvilinear_motive(n: int, r: int, d: int) -> LPoly:
    if min(n, r, d) < 1:
        raise ValueError("need n, r, d >= 1")
    return proj(r - 1) * mono((d - 1) * (r - 1)) * proj(n - 1) * mono((d - 2) * (n - 1))


def elementary_dim_check(n: int, r: int) -> bool:
    """The (2,2) stratum has dimension 4(r+n-3)."""
    if n < 4 or r < 2:
        raise ValueError("need n >= 4, r >= 2")
    return quot_hs_stratum(4, "(2,2)", n, r).degree() == 4 * (r + n - 3)


def chi_rational_expansion(d: int, nx: int, ny: int) -> list[list[int]]:
    """Expand the published Euler-characteristic rational function to order (nx, ny)."""
    from .reference import CHI_QUOT

    num, a, b = CHI_QUOT[d]
    bx, by = binomial_series(a, nx), binomial_series(b, ny)
    out = [[0] * (ny + 1) for _ in range(nx + 1)]
    for (i0, j0), c in num.items():
        for i in range(i0, nx + 1):
            for j in range(j0, ny + 1):
                out[i][j] += c * bx[i - i0] * by[j - j0]
    return out


def invariants():
    from . import reference as R

    D = range(1, MAX_QUOT_D + 1)
    yield "rank-one", all(quot_punctual(d, n, 1) == hilb_punctual(d, n) for d in D for n in range(1, 9))
    yield "closed-form-vs-strata", all(quot_series(d, 6, 6) == quot_series_strata(d, 6, 6) for d in D)
    yield "chi-rational", all(quot_series(d, 6, 6).euler() == chi_rational_expansion(d, 6, 6) for d in D)
    yield "chi-columns", all(
        specialize_euler(quot_stratum(s, d, n, r)) == R.CHI_QUOT_STRATA[(d, s)](n, r)
        for d in (3, 4)
        for s in range(1, d + 1)
        for n in range(1, 7)
        for r in range(1, 7)
    )
    yield "u4-from-strata", u4_from_strata(6, 6) == BiSeries(dict(R.U4_TERMS), 6, 6)
    yield "omega-33-d<=3", all(quot_omega(d, 3, 3) == R.OMEGA_33[d] for d in (1, 2, 3))
    # the printed d=4 class lacks the [P^2] factor shared by d=1,2,3
    yield "omega-33-d4-up-to-P2", quot_omega(4, 3, 3) == proj(2) * R.OMEGA_33[4]
    qp3 = quot_variety(proj(3), 3, 3, 4)
    yield "quot-p3-golden", all(qp3[d] == R.lp(R.QUOT_P3[d]) for d in (2, 3, 4))
    yield "curvilinear-dimension", all(
        curvilinear_motive(n, r, d).degree() == d * (r - 1) + (d - 1) * (n - 1)
        for n in range(1, 6)
        for r in range(1, 6)
        for d in range(1, 6)
    )
    yield "elementary-dimension", all(elementary_dim_check(n, r) for n in range(4, 9) for r in range(2, 7))
