"""Univariate integer polynomials in w and their quotients.

Coefficients are stored lowest degree first.  A ``RationalFn`` is kept in a
canonical form: common polynomial factors removed, integer content of the
pair removed, leading coefficient of the denominator positive.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

__all__ = ["Poly", "RationalFn", "poly_gcd", "divide_exact", "deflate_at_one"]


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim([int(x) for x in coeffs]))

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "Poly":
        return Poly([-x for x in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly([other * x for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def scale_down(self, d: int) -> "Poly":
        """Divide every coefficient by the integer ``d`` (must be exact)."""
        if any(c % d for c in self.coeffs):
            raise ArithmeticError(f"{d} does not divide {self}")
        return Poly([c // d for c in self.coeffs])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else "w" if i == 1 else f"w^{i}"
            if mono and abs(c) == 1:
                t = mono
            else:
                t = f"{abs(c)}*{mono}" if mono else str(abs(c))
            terms.append(("-" if c < 0 else "+", t))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            s += f" {sign} {t}"
        return s


def _pseudo_rem(a: Poly, b: Poly) -> Poly:
    """Remainder of lead(b)^k * a by b, computed over the integers."""
    r = list(a.coeffs)
    db, lb = b.degree, b.lead
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [lb * x for x in r]
        for i, y in enumerate(b.coeffs):
            r[i + shift] -= lr * y
        r = list(_trim(r))
    return Poly(r)


def _primitive(p: Poly) -> Poly:
    if p.is_zero():
        return p
    c = p.content()
    if p.lead < 0:
        c = -c
    return p.scale_down(c)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd of two integer polynomials, leading coefficient positive.

    Euclid over Q with content removal at each step (primitive remainder
    sequence), so intermediate coefficients stay small.
    """
    a, b = _primitive(a), _primitive(b)
    if a.is_zero():
        return b if not b.is_zero() else Poly([1])
    while not b.is_zero():
        a, b = b, _primitive(_pseudo_rem(a, b))
    return a


def divide_exact(a: Poly, b: Poly) -> Poly:
    """Quotient a / b, which must be an exact division in Z[w]."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a.coeffs)
    db, lb = b.degree, b.lead
    if len(r) - 1 < db:
        if r:
            raise ArithmeticError("inexact polynomial division")
        return Poly()
    q = [0] * (len(r) - db)
    for k in range(len(q) - 1, -1, -1):
        top = r[k + db]
        if top % lb:
            raise ArithmeticError("inexact polynomial division")
        qk = top // lb
        q[k] = qk
        for i, y in enumerate(b.coeffs):
            r[k + i] -= qk * y
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return Poly(q)


def deflate_at_one(p: Poly) -> tuple[Poly, int]:
    """Strip every factor (w - 1) from ``p`` by synthetic division.

    Returns the cofactor and the multiplicity of the root w = 1.
    """
    k = 0
    while not p.is_zero() and p(1) == 0:
        c = p.coeffs
        q = [0] * (len(c) - 1)
        acc = 0
        for i in range(len(c) - 1, 0, -1):
            acc += c[i]
            q[i - 1] = acc
        p = Poly(q)
        k += 1
    return p, k


@dataclass(frozen=True)
class RationalFn:
    num: Poly
    den: Poly

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly([1])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly([1])
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = divide_exact(num, g), divide_exact(den, g)
            c = gcd(num.content(), den.content())
            if den.lead < 0:
                c = -c
            num, den = num.scale_down(c), den.scale_down(c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __add__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        return self + (-other)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.num, self.den * other.den)

    def __call__(self, x) -> Fraction:
        d = self.den(Fraction(x))
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return self.num(Fraction(x)) / d

    def __str__(self) -> str:
        if self.den.coeffs == (1,):
            return str(self.num)
        return f"({self.num})/({self.den})"
