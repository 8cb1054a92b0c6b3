"""Exact polynomial arithmetic.

``UniPoly`` and ``BiPoly`` hold Python integers, so coefficients never
overflow.  ``RatPoly`` carries :class:`fractions.Fraction` coefficients and
exists for Euclidean division (gcd, Sturm chains).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _monomial(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _render(terms: Iterable[tuple[Number, str]]) -> str:
    """Join (coefficient, monomial) pairs as ``1 + 4x - x^2``."""
    out = []
    for c, mono in terms:
        neg = c < 0
        mag = -c if neg else c
        if mono and mag == 1:
            body = mono
        elif isinstance(mag, Fraction) and mag.denominator != 1 and mono:
            body = f"({mag}){mono}"
        else:
            body = f"{mag}{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) or "0"


class UniPoly:
    """Dense univariate integer polynomial; ``coeffs[k]`` multiplies ``x^k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def const(cls, c: int) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "UniPoly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> float | int:
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            other = UniPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            other = UniPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "UniPoly":
        return UniPoly.const(other) - self

    def __mul__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            return UniPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        result = UniPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by ``x^k``."""
        if not self.coeffs:
            return self
        return UniPoly((0,) * k + self.coeffs)

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        return _render((c, _monomial("x", k)) for k, c in enumerate(self.coeffs) if c)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"


X = UniPoly((0, 1))


class BiPoly:
    """Sparse polynomial in ``x`` and ``y``: ``{(i, j): c}`` for ``c x^i y^j``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BiPoly":
        return cls({(i, j): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) - c
        return BiPoly(out)

    def __mul__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            return BiPoly({k: c * other for k, c in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def swap_vars(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def __call__(self, x: Number, y: Number) -> Number:
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(i, j, self.terms[i, j]) for i, j in sorted(self.terms)]

    def __str__(self):
        return _render(
            (c, _monomial("x", i) + _monomial("y", j)) for i, j, c in self.sorted_terms()
        )

    def __repr__(self):
        return f"BiPoly({dict(sorted(self.terms.items()))})"


def embed_x(p: UniPoly) -> BiPoly:
    return BiPoly({(k, 0): c for k, c in enumerate(p.coeffs)})


def embed_y(p: UniPoly) -> BiPoly:
    return BiPoly({(0, k): c for k, c in enumerate(p.coeffs)})


def outer(p: UniPoly, q: UniPoly) -> BiPoly:
    """``p(x) * q(y)`` without going through the generic product."""
    return BiPoly({(i, j): a * b for i, a in enumerate(p.coeffs) if a
                   for j, b in enumerate(q.coeffs) if b})


def swap_vars(p: BiPoly) -> BiPoly:
    return p.swap_vars()


class RatPoly:
    """Dense univariate polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        self.coeffs = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def from_uni(cls, p: UniPoly) -> "RatPoly":
        return cls(p.coeffs)

    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        a, b = list(self.coeffs), other.coeffs
        a += [Fraction(0)] * (len(b) - len(a))
        for i, c in enumerate(b):
            a[i] -= c
        return RatPoly(a)

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RatPoly(out)

    def monic(self) -> "RatPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return RatPoly(c / lc for c in self.coeffs)

    def derivative(self) -> "RatPoly":
        return RatPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1 - d, -1, -1):
            c = rem[k + d] / lc
            quot[k] = c
            if c:
                for i, oc in enumerate(other.coeffs):
                    rem[k + i] -= c * oc
        return RatPoly(quot), RatPoly(rem[:d])

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[0]

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        return _render((c, _monomial("x", k)) for k, c in enumerate(self.coeffs) if c)

    def __repr__(self):
        return f"RatPoly([{', '.join(str(c) for c in self.coeffs)}])"


def gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    """Monic gcd by Euclidean remainders."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    while q:
        p, q = q, p % q
    return p.monic()
