"""Higher-dimensional partitions and the MacMahon discrepancy.

The partition enumerator is the Euler-characteristic oracle for the punctual
Hilbert schemes: p_{n-1}(d) = chi [Hilb^d(A^n)_0].

Barred classes use the naive exponent Gr(n-2, d-3+n) L^{d-1}.  In dimension
n = 1 that formula gives 0, while the correct class is 1 at d = 1; we use the
correct n = 1 values, which is what makes the barred Hilbert classes obey the
same recursion as the true ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import ResourceLimit, UnknownStratum
from .grassmann import binom, gauss
from .hilb import MAX_D, invert_assembly
from .lpoly import ONE, ZERO, LPoly, mono, specialize_euler
from .plethystic import exp_series, omega
from .series import TSeries, binomial_series
from .strata import y_class

__all__ = [
    "PartitionIdeal",
    "DEFAULT_BUDGET",
    "iter_partitions",
    "partition_counts",
    "count_partitions",
    "pi_product",
    "macmahon_coeff",
    "macmahon_product",
    "epsilon",
    "RationalPoly",
    "r_poly",
    "r_poly_check",
    "bar_omega",
    "bar_hilb",
    "bar_y",
    "eps_mot",
    "e_mot",
    "AndrewsReport",
    "andrews_series",
    "andrews_check",
    "invariants",
]

DEFAULT_BUDGET = 20_000_000


@dataclass(frozen=True)
class PartitionIdeal:
    """A finite downward-closed set of points in N^n."""

    n: int
    points: frozenset

    def __len__(self) -> int:
        return len(self.points)

    def is_downward_closed(self) -> bool:
        for p in self.points:
            for i, a in enumerate(p):
                if a and p[:i] + (a - 1,) + p[i + 1 :] not in self.points:
                    return False
        return True


def _walk(n: int, d: int, budget: int, visit):
    """Canonical growth: each ideal is reached once.

    A child adds one candidate c and may later only use candidates after c in
    the list plus the points that c itself makes addable.  Candidates skipped
    at a level stay forbidden in that subtree, so no ideal repeats.
    """
    origin = (0,) * n
    present = {origin}
    nodes = 0

    def addable_after(c):
        for i in range(n):
            p = c[:i] + (c[i] + 1,) + c[i + 1 :]
            if all(p[:j] + (p[j] - 1,) + p[j + 1 :] in present for j in range(n) if p[j] and j != i):
                yield p

    def rec(cands, size):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ResourceLimit(f"partition enumeration exceeded the node budget {budget}")
        visit(size, present)
        if size == d:
            return
        for idx, c in enumerate(cands):
            present.add(c)
            rec(cands[idx + 1 :] + list(addable_after(c)), size + 1)
            present.discard(c)

    if d == 0:
        visit(0, set())
        return
    rec(list(addable_after(origin)), 1)


def partition_counts(n: int, d: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """[p_{n-1}(0), ..., p_{n-1}(d)] from a single enumeration."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    counts = [0] * (d + 1)
    counts[0] = 1

    def visit(size, _):
        if size:
            counts[size] += 1

    _walk(n, d, budget, visit)
    return counts


def count_partitions(n: int, d: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of (n-1)-dimensional partitions of d.

    >>> count_partitions(3, 6)
    48
    """
    return partition_counts(n, d, budget)[d]


def iter_partitions(n: int, d: int, budget: int = DEFAULT_BUDGET):
    """All ideals of size exactly d, as PartitionIdeal values."""
    out = []

    def visit(size, present):
        if size == d:
            out.append(PartitionIdeal(n, frozenset(present)))

    _walk(n, d, budget, visit)
    return out


def _int_product(exponent, order: int) -> list[int]:
    """prod_{m>=1} (1 - t^m)^{-exponent(m)} as integers up to t^order."""
    out = [1] + [0] * order
    for m in range(1, order + 1):
        e = exponent(m)
        if not e:
            continue
        f = binomial_series(e, order // m)
        new = [0] * (order + 1)
        for i, a in enumerate(out):
            if a:
                for k, b in enumerate(f):
                    if i + k * m > order:
                        break
                    new[i + k * m] += a * b
        out = new
    return out


def pi_product(n: int, order: int) -> list[int]:
    """The classical product formulas for n = 1, 2, 3."""
    if n == 1:
        return [1] * (order + 1)
    if n == 2:
        return _int_product(lambda m: 1, order)
    if n == 3:
        return _int_product(lambda m: m, order)
    raise ValueError("no product formula for n > 3")


def macmahon_coeff(d: int, n: int) -> int:
    """MacMahon's exponent C(d+n-3, n-2), written as C(d+n-3, d-1).

    The second form agrees for n >= 2 and extends to n = 1, where it gives
    1 at d = 1 and 0 otherwise, matching 1/(1-t).
    """
    if d < 1 or n < 1:
        raise ValueError("need d, n >= 1")
    if d == 1:
        return 1
    return binom(d + n - 3, d - 1)


def macmahon_product(n: int, order: int) -> list[int]:
    return _int_product(lambda m: macmahon_coeff(m, n), order)


def epsilon(d: int, n: int) -> int:
    """epsilon_d(n) = C(d+n-3, n-2) - chi(Omega^n_d)."""
    return macmahon_coeff(d, n) - specialize_euler(omega(d, n))


class RationalPoly:
    """Polynomial in one variable with Fraction coefficients (ascending)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_reference(cls, den: int, high_to_low) -> "RationalPoly":
        return cls([Fraction(c, den) for c in reversed(high_to_low)])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_text(self, var: str = "n") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if a == 1 else f"{a}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((("-" if c < 0 else "") + body) if not parts else f" {sign} {body}")
        return "".join(parts)

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"RationalPoly({self.to_text()!r})"


def r_poly(d: int) -> RationalPoly:
    """Embedded r_d for 6 <= d <= 26 (read-only reference data)."""
    from .reference import R_POLYS

    if d not in R_POLYS:
        raise KeyError(f"no reference r_{d}")
    den, cs = R_POLYS[d]
    return RationalPoly.from_reference(den, cs)


def r_poly_check(d: int, n_max: int) -> bool:
    """epsilon_d(n) == C(n,4) r_d(n) for 1 <= n <= n_max."""
    if d > MAX_D:
        raise UnknownStratum(f"epsilon_{d} needs Y-classes unknown for d>=9")
    if d < 6:
        raise ValueError("r_d is defined for d >= 6")
    r = r_poly(d)
    return all(epsilon(d, n) == binom(n, 4) * r(n) for n in range(1, n_max + 1))


# barred classes


def bar_omega(d: int, n: int) -> LPoly:
    """Gr(n-2, d-3+n) L^{d-1}; for n = 1 the true class (1 at d = 1, else 0)."""
    if d < 1:
        return ZERO
    if n == 1:
        return ONE if d == 1 else ZERO
    return gauss(n - 2, d - 3 + n) * mono(d - 1)


@lru_cache(maxsize=None)
def _bar_hilb_series(n: int, order: int) -> TSeries:
    return exp_series(TSeries([ZERO] + [bar_omega(d, n) for d in range(1, order + 1)], order))


def bar_hilb(d: int, n: int) -> LPoly:
    if d < 0:
        return ZERO
    if d == 0:
        return ONE
    return _bar_hilb_series(n, max(d, MAX_D))[d]


def bar_y(k: int, d: int) -> LPoly:
    """Formal inversion of the barred Hilbert classes (may have any sign)."""
    return invert_assembly(k, d, bar_hilb)


def eps_mot(d: int, n: int) -> LPoly:
    return bar_omega(d, n) - omega(d, n)


def e_mot(k: int, d: int) -> LPoly:
    """Motivic error bar Y^k_d - [Y^k_{k,d}] (embedding dimension k, length d)."""
    return bar_y(k, d) - y_class(k, d)


def _recursion_rhs(val, d: int, m: int) -> LPoly:
    rhs = ZERO
    for g in range(1, d):
        w = gauss(m - d, m - g - 1) * gauss(g, m)
        if w:
            rhs += val(d, g) * w * mono(binom(d - g, 2), (-1) ** (d + g + 1))
    return rhs


# the generating-function conjecture for e_{6+k+i, 4+i}


@dataclass
class AndrewsReport:
    k: int
    series: list[int]
    computed: dict[int, int] = field(default_factory=dict)
    matched: list[int] = field(default_factory=list)
    mismatched: list[int] = field(default_factory=list)
    unreachable: str = ""

    @property
    def ok(self) -> bool:
        return not self.mismatched and bool(self.matched)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "series": self.series,
            "computed": {str(i): v for i, v in self.computed.items()},
            "matched": self.matched,
            "mismatched": self.mismatched,
            "unreachable": self.unreachable,
        }


def andrews_series(k: int, order: int) -> list[int]:
    """M_k(t) / ((1-t)^{2k+3} prod_{i=0}^k (1-(2+i)t)^{k+1-i}) to t^order."""
    from .reference import M_POLYS

    num = [Fraction(c) for c in reversed(M_POLYS[k])]
    out = num[: order + 1] + [Fraction(0)] * (order + 1 - len(num))

    def mul(a, b):
        c = [Fraction(0)] * (order + 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b[: order + 1 - i]):
                    c[i + j] += x * y
        return c

    out = mul(out, binomial_series(2 * k + 3, order))
    for i in range(k + 1):
        base = 2 + i
        geo = [base**j for j in range(order + 1)]
        for _ in range(k + 1 - i):
            out = mul(out, geo)
    assert all(c.denominator == 1 for c in out)
    return [int(c) for c in out]


def andrews_check(k: int) -> AndrewsReport:
    """Compare the computable prefix of e_{6+k+i, 4+i} (length, embedding dimension)."""
    if k not in (0, 1, 2):
        raise ValueError("M_k is available for k in (0, 1, 2)")
    reach = MAX_D - 6 - k
    rep = AndrewsReport(k, andrews_series(k, reach))
    for i in range(reach + 1):
        v = specialize_euler(e_mot(4 + i, 6 + k + i))
        rep.computed[i] = v
        (rep.matched if v == rep.series[i] else rep.mismatched).append(i)
    rep.unreachable = f"i >= {reach + 1} (length > {MAX_D})"
    return rep


def invariants(max_n: int = 6, max_d: int = 8):
    from . import reference as R
    from .hilb import hilb_punctual

    counts = {n: partition_counts(n, max_d) for n in range(1, max_n + 1)}
    yield "oracle-euler", all(
        counts[n][d] == specialize_euler(hilb_punctual(d, n)) for n in counts for d in range(max_d + 1)
    )
    yield "pi-products", all(partition_counts(n, 9) == pi_product(n, 9) for n in (1, 2, 3))
    yield "macmahon-small-n", all(macmahon_product(n, 9) == pi_product(n, 9) for n in (1, 2, 3))
    yield "epsilon-small-d", all(epsilon(d, n) == 0 for d in range(1, 6) for n in range(1, 11))
    yield "epsilon-small-n", all(epsilon(d, n) == 0 for d in range(1, 9) for n in (2, 3))
    yield "r-poly", all(r_poly_check(d, 12) for d in (6, 7, 8))
    # r_d has rational coefficients, so only the vanishing below n = 4 is integral
    yield "vanishes-below-4", all(epsilon(d, n) == 0 for d in (6, 7, 8) for n in (1, 2, 3))
    yield "table-eps-mot", all(eps_mot(d, n) == v for (d, n), v in R.EPS_MOT_TABLE.items())
    yield "table-e-mot", all(e_mot(k, d) == v for (d, k), v in R.E_MOT_TABLE.items())
    yield "eps-mot-euler", all(
        specialize_euler(eps_mot(d, n)) == epsilon(d, n) for d in range(1, 9) for n in range(1, 9)
    )
    yield "bar-hilb-recursion", all(
        bar_hilb(d, m) == _recursion_rhs(bar_hilb, d, m) for d in range(2, 9) for m in range(d, 11)
    )
    yield "bar-omega-recursion", all(
        bar_omega(d, m) == _recursion_rhs(bar_omega, d, m) for d in range(3, 9) for m in range(d, 11)
    )
    yield "bar-hilb-planar", all(bar_hilb(d, 2) == hilb_punctual(d, 2) for d in range(9))
    yield "bar-y-top-euler", all(specialize_euler(bar_y(d - 1, d)) == 1 for d in range(2, 9))
    yield "andrews", all(andrews_check(k).ok for k in (0, 1, 2))
