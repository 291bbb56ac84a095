"""Truncated power series in q with exact integer coefficients.

A series of order N is known modulo q^(N+1).  Mixed-order arithmetic
truncates to the smaller order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import NonUnitConstantTerm

__all__ = [
    "IntSeries",
    "series_mul",
    "series_inverse",
    "series_pow",
    "expand_product_family",
    "hilbert_euler_table",
]


@dataclass(frozen=True)
class IntSeries:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int) -> "IntSeries":
        """Build a series of the given order, padding with zeros or truncating."""
        c = [int(x) for x in coeffs][: order + 1]
        c.extend([0] * (order + 1 - len(c)))
        return cls(order, tuple(c))

    @classmethod
    def one(cls, order: int) -> "IntSeries":
        return cls.from_coeffs([1], order)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        return series_mul(self, other)

    def truncate(self, order: int) -> "IntSeries":
        if order >= self.order:
            return self
        return IntSeries(order, self.coeffs[: order + 1])

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "q" if i == 1 else f"q^{i}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def series_mul(a: IntSeries, b: IntSeries) -> IntSeries:
    """Cauchy product, truncated to min(a.order, b.order)."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs[: n + 1], b.coeffs[: n + 1]
    sa = [(i, x) for i, x in enumerate(ac) if x]
    sb = [(i, x) for i, x in enumerate(bc) if x]
    # loop over the sparser operand; product families are mostly zeros
    if len(sb) < len(sa):
        sa, bc = sb, ac
    out = [0] * (n + 1)
    for i, x in sa:
        for j, y in enumerate(bc[: n + 1 - i], i):
            if y:
                out[j] += x * y
    return IntSeries(n, tuple(out))


def series_inverse(a: IntSeries) -> IntSeries:
    """Multiplicative inverse of a series whose constant term is +1 or -1."""
    a0 = a.coeffs[0]
    if abs(a0) != 1:
        raise NonUnitConstantTerm(f"constant term {a0} is not a unit in Z")
    n = a.order
    ac = a.coeffs
    support = [i for i in range(1, n + 1) if ac[i] != 0]
    b = [0] * (n + 1)
    b[0] = a0  # a0 == 1/a0 for a unit
    for k in range(1, n + 1):
        s = 0
        for i in support:
            if i > k:
                break
            s += ac[i] * b[k - i]
        b[k] = -a0 * s
    return IntSeries(n, tuple(b))


def series_pow(a: IntSeries, e: int) -> IntSeries:
    """Non-negative integer power by repeated squaring."""
    if e < 0:
        raise ValueError("use series_inverse(series_pow(a, -e)) for negative powers")
    result = IntSeries.one(a.order)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def _euler_product(ms: Iterable[int], order: int) -> IntSeries:
    """prod_{m in ms} (1 - q^m), one two-term factor at a time."""
    acc = IntSeries.one(order)
    for m in ms:
        c = [0] * (order + 1)
        c[0], c[m] = 1, -1
        acc = series_mul(acc, IntSeries(order, tuple(c)))
    return acc


def expand_product_family(exponents: Mapping[int, int], order: int) -> IntSeries:
    """Expand prod_m (1 - q^m)^(e_m) to the given order.

    Factors with m > order are ignored.  Factors sharing an exponent e are
    multiplied first and raised to |e| once; all negative-exponent factors
    end up in one positive-power product that is inverted at the end.

    >>> expand_product_family({1: 1, 2: 1}, 3).coeffs
    (1, -1, -1, 1)
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    groups: dict[int, list[int]] = {}
    for m, e in exponents.items():
        if m < 1:
            raise ValueError(f"factor index must be positive, got {m}")
        if m <= order and e != 0:
            groups.setdefault(e, []).append(m)
    top = IntSeries.one(order)
    bottom = IntSeries.one(order)
    for e, ms in sorted(groups.items()):
        power = series_pow(_euler_product(sorted(ms), order), abs(e))
        if e > 0:
            top = series_mul(top, power)
        else:
            bottom = series_mul(bottom, power)
    if bottom == IntSeries.one(order):
        return top
    return series_mul(top, series_inverse(bottom))


def hilbert_euler_table(max_n: int) -> list[int]:
    """Euler numbers a_0..a_max_n of the Hilbert schemes of points on a K3.

    These are the coefficients of prod_{m>=1} (1 - q^m)^(-24).

    >>> hilbert_euler_table(3)
    [1, 24, 324, 3200]
    """
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    s = expand_product_family({m: -24 for m in range(1, max_n + 1)}, max_n)
    return list(s.coeffs)

