"""Truncated power series over LPoly in one (t) or two (x, y) variables.

Truncation orders are always explicit.  Binary operations insist on equal
orders; use :func:`truncate_to_min` when mixing precisions on purpose.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import NonUnitConstant, OrderMismatch
from .lpoly import ONE, ZERO, LPoly, as_lpoly, mono, specialize_euler

__all__ = [
    "TSeries",
    "BiSeries",
    "truncate_to_min",
    "zeta_proj",
    "zeta_class",
    "zeta_dilated",
    "binomial_series",
    "bi_from_factors",
    "render_tpoly",
    "latex_tpoly",
]


def _lp(x) -> LPoly:
    v = as_lpoly(x)
    if v is NotImplemented:
        raise TypeError(f"not an LPoly: {x!r}")
    return v


class TSeries:
    """sum_{i<=order} coeffs[i] t^i."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [_lp(c) for c in coeffs][: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: tuple[LPoly, ...] = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls([ONE], order)

    @classmethod
    def zero(cls, order: int) -> "TSeries":
        return cls([], order)

    def __getitem__(self, i: int) -> LPoly:
        if i < 0 or i > self.order:
            raise IndexError(f"coefficient t^{i} outside order {self.order}")
        return self.coeffs[i]

    def __len__(self) -> int:
        return self.order + 1

    def _check(self, other: "TSeries") -> None:
        if other.order != self.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} differ")

    def __add__(self, other) -> "TSeries":
        if not isinstance(other, TSeries):
            other = TSeries([other], self.order)
        self._check(other)
        return TSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> "TSeries":
        return TSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other) -> "TSeries":
        if not isinstance(other, TSeries):
            other = TSeries([other], self.order)
        return self + (-other)

    def __rsub__(self, other) -> "TSeries":
        return (-self) + other

    def __mul__(self, other) -> "TSeries":
        if not isinstance(other, TSeries):
            c = _lp(other)
            return TSeries([a * c for a in self.coeffs], self.order)
        self._check(other)
        n = self.order
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def truncate(self, order: int) -> "TSeries":
        if order > self.order:
            raise OrderMismatch(f"cannot raise order {self.order} to {order}")
        return TSeries(self.coeffs, order)

    def inverse(self) -> "TSeries":
        """Multiplicative inverse; the constant term must be 1."""
        if self.coeffs[0] != ONE:
            raise NonUnitConstant(f"constant term {self.coeffs[0]} is not 1")
        n = self.order
        inv = [ONE] + [ZERO] * n
        for k in range(1, n + 1):
            acc = ZERO
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    acc = acc + self.coeffs[j] * inv[k - j]
            inv[k] = -acc
        return TSeries(inv, n)

    def dilate(self, d: int) -> "TSeries":
        """Substitute t -> t^d (same order)."""
        if d < 1:
            raise ValueError("dilation factor must be positive")
        out = [ZERO] * (self.order + 1)
        for i in range(0, self.order // d + 1):
            out[i * d] = self.coeffs[i]
        return TSeries(out, self.order)

    def scale(self, a: int) -> "TSeries":
        """Substitute t -> L^a t."""
        return TSeries([c.shift(a * i) for i, c in enumerate(self.coeffs)], self.order)

    def euler(self) -> list[int]:
        return [specialize_euler(c) for c in self.coeffs]

    # rendering
    def to_text(self, var: str = "t") -> str:
        body = render_tpoly(self.coeffs, var)
        return f"{body} + O({var}^{self.order + 1})"

    def to_latex(self, var: str = "t") -> str:
        return latex_tpoly(self.coeffs, var) + r" + O(%s^{%d})" % (var, self.order + 1)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    def __repr__(self) -> str:
        return f"TSeries({self.to_text()!r})"


def truncate_to_min(a: TSeries, b: TSeries) -> tuple[TSeries, TSeries]:
    n = min(a.order, b.order)
    return a.truncate(n), b.truncate(n)


def _monomial_split(c: LPoly):
    """(sign, |coefficient|, exponent) if c is a single term, else None."""
    items = c.items()
    if len(items) != 1:
        return None
    e, k = items[0]
    return (-1 if k < 0 else 1), abs(k), e


def render_tpoly(coeffs: Sequence[LPoly], var: str = "t") -> str:
    """Render sum coeffs[i] var^i, e.g. ``1 + L^2*t - L^2*t^2``."""
    parts: list[str] = []
    for i, c in enumerate(coeffs):
        c = _lp(c)
        if c.is_zero():
            continue
        tp = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        split = _monomial_split(c)
        if split is not None:
            sign, k, e = split
            m = LPoly({e: k}).to_text()
            if not tp:
                body = m
            elif m == "1":
                body = tp
            else:
                body = f"{m}*{tp}"
        else:
            sign = 1
            body = c.to_text() if not tp else f"({c.to_text()})*{tp}"
        if not parts:
            parts.append(("-" if sign < 0 else "") + body)
        else:
            parts.append((" - " if sign < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


def latex_tpoly(coeffs: Sequence[LPoly], var: str = "t") -> str:
    parts: list[str] = []
    for i, c in enumerate(coeffs):
        c = _lp(c)
        if c.is_zero():
            continue
        tp = "" if i == 0 else (var if i == 1 else "%s^{%d}" % (var, i))
        split = _monomial_split(c)
        if split is not None:
            sign, k, e = split
            m = LPoly({e: k}).to_latex()
            body = m if not tp else (tp if m == "1" else m + tp)
        else:
            sign = 1
            body = c.to_latex() if not tp else f"({c.to_latex()}){tp}"
        if not parts:
            parts.append(("-" if sign < 0 else "") + body)
        else:
            parts.append((" - " if sign < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


def binomial_series(a: int, order: int) -> list[int]:
    """Coefficients of (1-x)^(-a) up to x^order, for any integer a."""
    out = [1]
    c = 1
    for k in range(1, order + 1):
        c = c * (a + k - 1) // k
        out.append(c)
    return out


def zeta_class(mu, order: int) -> TSeries:
    """zeta_mu(t) = prod_j (1 - L^{e_j} t)^{-a_j} for mu = sum_j a_j L^{e_j}."""
    mu = _lp(mu)
    out = TSeries.one(order)
    for e, a in mu.items():
        coeffs = binomial_series(a, order)
        out = out * TSeries([mono(e * k, c) for k, c in enumerate(coeffs)], order)
    return out


def zeta_dilated(mu, d: int, order: int) -> TSeries:
    """zeta_mu(t^d) truncated at t^order."""
    inner = zeta_class(mu, order // d)
    out = [ZERO] * (order + 1)
    for i, c in enumerate(inner.coeffs):
        out[i * d] = c
    return TSeries(out, order)


def zeta_proj(n: int, order: int) -> TSeries:
    """Kapranov zeta function of P^n; the constant series 1 when n < 0."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = TSeries.one(order)
    for i in range(n + 1):
        out = out * TSeries([mono(i * k) for k in range(order + 1)], order)
    return out


class BiSeries:
    """sum_{i<=order_x, j<=order_y} coeffs[i][j] x^i y^j."""

    __slots__ = ("order_x", "order_y", "coeffs")

    def __init__(self, grid: Mapping[tuple[int, int], LPoly] | Sequence[Sequence], order_x: int, order_y: int):
        g = [[ZERO] * (order_y + 1) for _ in range(order_x + 1)]
        if isinstance(grid, Mapping):
            for (i, j), c in grid.items():
                if i <= order_x and j <= order_y:
                    g[i][j] = g[i][j] + _lp(c)
        else:
            for i, row in enumerate(grid):
                if i > order_x:
                    break
                for j, c in enumerate(row):
                    if j <= order_y:
                        g[i][j] = _lp(c)
        self.order_x = order_x
        self.order_y = order_y
        self.coeffs = tuple(tuple(r) for r in g)

    @classmethod
    def one(cls, order_x: int, order_y: int) -> "BiSeries":
        return cls({(0, 0): ONE}, order_x, order_y)

    @classmethod
    def from_x(cls, s: TSeries, order_y: int) -> "BiSeries":
        return cls({(i, 0): c for i, c in enumerate(s.coeffs)}, s.order, order_y)

    @classmethod
    def from_y(cls, s: TSeries, order_x: int) -> "BiSeries":
        return cls({(0, j): c for j, c in enumerate(s.coeffs)}, order_x, s.order)

    def coeff(self, i: int, j: int) -> LPoly:
        return self.coeffs[i][j]

    def _check(self, other: "BiSeries") -> None:
        if (self.order_x, self.order_y) != (other.order_x, other.order_y):
            raise OrderMismatch("bivariate orders differ")

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        return BiSeries(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.coeffs, other.coeffs)],
            self.order_x,
            self.order_y,
        )

    def __neg__(self) -> "BiSeries":
        return BiSeries([[-a for a in r] for r in self.coeffs], self.order_x, self.order_y)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __mul__(self, other) -> "BiSeries":
        if not isinstance(other, BiSeries):
            c = _lp(other)
            return BiSeries([[a * c for a in r] for r in self.coeffs], self.order_x, self.order_y)
        self._check(other)
        ox, oy = self.order_x, self.order_y
        out = [[ZERO] * (oy + 1) for _ in range(ox + 1)]
        nz = [(k, l, b) for k, r in enumerate(other.coeffs) for l, b in enumerate(r) if b]
        for i, r in enumerate(self.coeffs):
            for j, a in enumerate(r):
                if a.is_zero():
                    continue
                for k, l, b in nz:
                    if i + k <= ox and j + l <= oy:
                        out[i + k][j + l] = out[i + k][j + l] + a * b
        return BiSeries(out, ox, oy)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (self.order_x, self.order_y, self.coeffs) == (other.order_x, other.order_y, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.order_x, self.order_y, self.coeffs))

    def euler(self) -> list[list[int]]:
        return [[specialize_euler(c) for c in r] for r in self.coeffs]

    def to_text(self) -> str:
        parts = []
        for i, r in enumerate(self.coeffs):
            for j, c in enumerate(r):
                if c:
                    parts.append(f"x^{i}*y^{j}: {c.to_text()}")
        return "\n".join(parts) if parts else "0"

    def to_latex(self) -> str:
        parts = []
        for i, r in enumerate(self.coeffs):
            for j, c in enumerate(r):
                if c:
                    parts.append(r"(%s)x^{%d}y^{%d}" % (c.to_latex(), i, j))
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "order_x": self.order_x,
            "order_y": self.order_y,
            "coeffs": [[c.to_json() for c in r] for r in self.coeffs],
        }


def bi_from_factors(
    x_factors: Iterable[TSeries],
    y_factors: Iterable[TSeries],
    correction: Mapping[tuple[int, int], LPoly] | None,
    order_x: int,
    order_y: int,
) -> BiSeries:
    """Product of univariate factors in x and y times a polynomial correction."""
    out = BiSeries.one(order_x, order_y)
    for s in x_factors:
        out = out * BiSeries.from_x(s.truncate(order_x), order_y)
    for s in y_factors:
        out = out * BiSeries.from_y(s.truncate(order_y), order_x)
    if correction is not None:
        out = out * BiSeries(correction, order_x, order_y)
    return out


def invariants(seed: int = 0, trials: int = 100):
    import random

    from .lpoly import _random_lpoly

    rng = random.Random(seed)
    order = 8

    def unit():
        return TSeries([ONE] + [_random_lpoly(rng) for _ in range(order)], order)

    units = [unit() for _ in range(trials)]
    yield "two-sided-inverse", all(u * u.inverse() == TSeries.one(order) == u.inverse() * u for u in units)
    mus = [(_random_lpoly(rng, -2, 4), _random_lpoly(rng, -2, 4)) for _ in range(trials // 4)]
    yield "zeta-additive", all(zeta_class(a + b, 6) == zeta_class(a, 6) * zeta_class(b, 6) for a, b in mus)
    yield "zeta-affine", all(
        zeta_class(mono(a), 6)[k] == mono(a * k) for a in range(-2, 5) for k in range(7)
    )
    yield "zeta-shift", all(zeta_class(a.shift(1), 6) == zeta_class(a, 6).scale(1) for a, _ in mus)
    yield "zeta-proj-product", all(
        zeta_proj(n, 6) == zeta_class(LPoly.from_coeffs([1] * (n + 1)), 6) for n in range(6)
    )
