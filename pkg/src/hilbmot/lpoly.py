"""Laurent polynomials in the Lefschetz class L with integer coefficients.

Every motivic class handled by the package lives in Z[L, L^-1].  The
representation is a sparse map ``exponent -> coefficient`` with no zero
coefficients, so equality of values is equality of maps.

>>> (L + 1) * (L - 1)
LPoly('L^2 - 1')
>>> print(L**-2 * (L**3 + L**2))
L + 1
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

from .errors import NegativeExponent, NotDivisible

__all__ = [
    "LPoly",
    "L",
    "ONE",
    "ZERO",
    "mono",
    "as_lpoly",
    "exact_div",
    "specialize_euler",
    "specialize_weight",
]

Coercible = Union["LPoly", int]


class LPoly:
    """Immutable element of Z[L, L^-1]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        clean: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                if c:
                    clean[int(e)] = clean.get(int(e), 0) + int(c)
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LPoly":
        return cls._raw({0: int(c)} if c else {})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], shift: int = 0) -> "LPoly":
        """Build from an ascending coefficient list, ``coeffs[i]`` at L^(i+shift)."""
        return cls((i + shift, c) for i, c in enumerate(coeffs))

    # inspection
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs in decreasing exponent."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self._terms)

    def is_polynomial(self) -> bool:
        return not self._terms or min(self._terms) >= 0

    # ring operations
    def __add__(self, other: Coercible) -> "LPoly":
        other = as_lpoly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LPoly":
        return LPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> "LPoly":
        other = as_lpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "LPoly":
        return (-self) + other

    def __mul__(self, other: Coercible) -> "LPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LPoly._raw({e: c * other for e, c in self._terms.items()})
        other = as_lpoly(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LPoly":
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LPoly._raw({e * k: c ** (-k)})
            raise ValueError("negative power of a non-monomial")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LPoly":
        """Multiply by L^k."""
        return LPoly._raw({e + k: c for e, c in self._terms.items()})

    def truncate(self, prec: int) -> "LPoly":
        """Reduce modulo L^prec (drop exponents >= prec)."""
        return LPoly._raw({e: c for e, c in self._terms.items() if e < prec})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LPoly.const(other)
        if not isinstance(other, LPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __call__(self, x):
        """Evaluate at a number (int or Fraction); negative exponents allowed for nonzero x."""
        return sum(c * x**e for e, c in self._terms.items()) if self._terms else 0

    # rendering
    def to_text(self, var: str = "L") -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if a == 1 else f"{a}*{power}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.items()):
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                power = r"\mathbb{L}" if e == 1 else r"\mathbb{L}^{%d}" % e
                body = power if a == 1 else f"{a}{power}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def to_json(self) -> list:
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data) -> "LPoly":
        return cls((int(e), int(c)) for e, c in data)

    _TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*(?:\*\s*)?)?(L(?:\^\(?(-?\d+)\)?)?)?\s*")

    @classmethod
    def parse(cls, text: str) -> "LPoly":
        """Inverse of :meth:`to_text`.

        >>> LPoly.parse("L^4 + L^3 + 2*L^2 + L + 1") == L**4 + L**3 + 2*L**2 + L + 1
        True
        """
        s = text.strip()
        if s == "0":
            return ZERO
        out: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse {text!r} at {pos}")
            if not first and m.group(1) is None:
                raise ValueError(f"missing sign in {text!r} at {pos}")
            first = False
            sign = -1 if m.group(1) == "-" else 1
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                e = int(m.group(4)) if m.group(4) else 1
            else:
                e = 0
            out[e] = out.get(e, 0) + sign * c
            pos = m.end()
        return cls(out)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LPoly({self.to_text()!r})"


def as_lpoly(x) -> LPoly:
    if isinstance(x, LPoly):
        return x
    if isinstance(x, int):
        return LPoly.const(x)
    return NotImplemented


def mono(e: int, c: int = 1) -> LPoly:
    """The monomial c*L^e."""
    return LPoly._raw({e: c} if c else {})


ZERO = LPoly._raw({})
ONE = LPoly._raw({0: 1})
L = LPoly._raw({1: 1})


def exact_div(a: Coercible, b: Coercible) -> LPoly:
    """Return q with q*b == a, or raise NotDivisible.

    >>> exact_div(L**2 - 1, L - 1)
    LPoly('L + 1')
    """
    a, b = as_lpoly(a), as_lpoly(b)
    if b.is_zero():
        raise ZeroDivisionError("exact_div by zero")
    if a.is_zero():
        return ZERO
    # a quotient of Laurent polynomials is fixed up to the monomial factor,
    # so normalise both to valuation 0 and do ordinary long division
    va, vb = a.valuation(), b.valuation()
    rem = a.shift(-va)._terms.copy()
    bt = b.shift(-vb)._terms
    db, lead = max(bt), bt[max(bt)]
    q: dict[int, int] = {}
    while rem:
        dr = max(rem)
        if dr < db:
            break
        c, r = divmod(rem[dr], lead)
        if r:
            raise NotDivisible(f"{a} is not divisible by {b}")
        s = dr - db
        q[s] = c
        for e, bc in bt.items():
            v = rem.get(e + s, 0) - c * bc
            if v:
                rem[e + s] = v
            else:
                rem.pop(e + s, None)
    if rem:
        raise NotDivisible(f"{a} is not divisible by {b}")
    return LPoly(q).shift(va - vb)


def specialize_euler(a: Coercible) -> int:
    """The Euler characteristic L -> 1."""
    return sum(as_lpoly(a)._terms.values())


def specialize_weight(a: Coercible) -> list[int]:
    """Weight polynomial: relabel L as z.  Returns ascending coefficients.

    >>> specialize_weight(L + 1)
    [1, 1]
    """
    a = as_lpoly(a)
    if a.is_zero():
        return []
    if a.valuation() < 0:
        raise NegativeExponent(f"{a} has a negative exponent")
    out = [0] * (a.degree() + 1)
    for e, c in a._terms.items():
        out[e] = c
    return out


def _random_lpoly(rng, lo: int = -3, hi: int = 6) -> LPoly:
    return LPoly({rng.randint(lo, hi): rng.randint(-9, 9) for _ in range(rng.randint(0, 5))})


def invariants(seed: int = 0, trials: int = 200):
    import random

    rng = random.Random(seed)
    triples = [(_random_lpoly(rng), _random_lpoly(rng), _random_lpoly(rng)) for _ in range(trials)]
    yield "ring-axioms", all(
        (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c and a * b == b * a and a + b == b + a
        for a, b, c in triples
    )
    yield "exact-div-round-trip", all(exact_div(a * b, b) == a for a, b, _ in triples if b)
    yield "euler-homomorphism", all(
        specialize_euler(a * b) == specialize_euler(a) * specialize_euler(b)
        and specialize_euler(a + b) == specialize_euler(a) + specialize_euler(b)
        for a, b, _ in triples
    )
    yield "text-round-trip", all(LPoly.parse(a.to_text()) == a for a, _, _ in triples)
    yield "json-round-trip", all(LPoly.from_json(a.to_json()) == a for a, _, _ in triples)
