"""Stringy Euler numbers and stringy E-functions of divisor arrangements.

Input is the data of a log resolution whose exceptional divisor has simple
normal crossings: for each divisor a discrepancy a_j > -1, and for each
subset J of divisors the open stratum D_J^0 (points lying on exactly the
divisors in J) with its Euler number and, optionally, its E-polynomial
restricted to the diagonal u = v, written in w = uv.

    e_st   = sum_J e(D_J^0) * prod_{j in J} 1 / (a_j + 1)
    E_st(w) = sum_J E(D_J^0; w) * prod_{j in J} (w - 1) / (w^(a_j + 1) - 1)
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterable, Mapping

from .errors import (
    BadSubsetKey,
    InconsistentEpoly,
    MissingEpoly,
    NotLogTerminal,
    PoleAtOne,
    SchemaError,
    SymbolicPathUnavailable,
)
from .poly import Poly, RationalFn, deflate_at_one

__all__ = [
    "Divisor",
    "Stratum",
    "Stratification",
    "ValidationReport",
    "validate",
    "stringy_euler",
    "stringy_E_diagonal",
    "limit_at_one",
    "parse_rational",
    "format_rational",
    "stratification_from_json",
    "stratification_to_json",
]

log = logging.getLogger(__name__)

Subset = tuple[int, ...]


@dataclass(frozen=True)
class Divisor:
    name: str
    discrepancy: Fraction


@dataclass(frozen=True)
class Stratum:
    euler: int
    epoly: Poly | None = None


@dataclass(frozen=True)
class Stratification:
    """Divisors with discrepancies plus the open strata D_J^0.

    ``strata`` maps sorted tuples of divisor indices to ``Stratum`` records.
    Subsets absent from the map are empty strata.
    """

    divisors: tuple[Divisor, ...]
    strata: Mapping[Subset, Stratum] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        divisors: Iterable[tuple[str, Any]],
        strata: Mapping[Iterable[int], Any],
    ) -> "Stratification":
        """Convenience constructor.

        ``divisors`` is a sequence of ``(name, discrepancy)`` pairs and each
        stratum value is either an Euler number or an ``(euler, epoly)`` pair
        with ``epoly`` a coefficient list.
        """
        divs = tuple(Divisor(name, Fraction(a)) for name, a in divisors)
        st: dict[Subset, Stratum] = {}
        for key, val in strata.items():
            k = tuple(key)
            if isinstance(val, Stratum):
                st[k] = val
            elif isinstance(val, tuple):
                e, p = val
                st[k] = Stratum(int(e), None if p is None else Poly(p))
            else:
                st[k] = Stratum(int(val))
        return cls(divs, st)

    @property
    def rank(self) -> int:
        return len(self.divisors)

    def subset_names(self, key: Subset) -> list[str]:
        return [self.divisors[i].name for i in key]


@dataclass(frozen=True)
class ValidationReport:
    missing: tuple[Subset, ...]
    symbolic_eligible: bool
    all_epolys: bool

    @property
    def symbolic_ready(self) -> bool:
        return self.symbolic_eligible and self.all_epolys


def _check_key(key, rank: int) -> None:
    if not isinstance(key, tuple) or any(not isinstance(i, int) for i in key):
        raise BadSubsetKey(f"subset key {key!r} is not a tuple of indices")
    if list(key) != sorted(set(key)):
        raise BadSubsetKey(f"subset key {key!r} is not strictly increasing")
    if key and (key[0] < 0 or key[-1] >= rank):
        raise BadSubsetKey(f"subset key {key!r} references a missing divisor")


def validate(s: Stratification) -> ValidationReport:
    """Check the arrangement's invariants.

    Raises ``NotLogTerminal``, ``InconsistentEpoly`` or ``BadSubsetKey``.
    Absent strata are reported (and logged) but count as Euler number 0.
    """
    for d in s.divisors:
        if d.discrepancy <= -1:
            raise NotLogTerminal(
                f"divisor {d.name} has discrepancy {d.discrepancy} <= -1"
            )
    names = [d.name for d in s.divisors]
    if len(set(names)) != len(names):
        raise BadSubsetKey(f"duplicate divisor names in {names}")
    for key, st in s.strata.items():
        _check_key(key, s.rank)
        if st.epoly is not None and st.epoly(1) != st.euler:
            raise InconsistentEpoly(
                f"stratum {s.subset_names(key)}: E(1) = {st.epoly(1)} "
                f"but euler = {st.euler}"
            )
    missing = tuple(
        key
        for r in range(s.rank + 1)
        for key in combinations(range(s.rank), r)
        if key not in s.strata
    )
    if missing:
        log.warning("%d strata absent, treated as empty", len(missing))
    eligible = all(
        d.discrepancy.denominator == 1 and d.discrepancy >= 0 for d in s.divisors
    )
    all_epolys = all(st.epoly is not None for st in s.strata.values())
    return ValidationReport(missing, eligible, all_epolys)


def stringy_euler(s: Stratification) -> Fraction:
    """Exact stringy Euler number of the arrangement.

    >>> s = Stratification.build([("D", 1)], {(): 1, (0,): 1})
    >>> stringy_euler(s)
    Fraction(3, 2)
    """
    validate(s)
    total = Fraction(0)
    for key, st in s.strata.items():
        w = Fraction(1)
        for j in key:
            w /= s.divisors[j].discrepancy + 1
        total += st.euler * w
    return total


def stringy_E_diagonal(s: Stratification) -> RationalFn:
    """Stringy E-function on the diagonal u = v, as a reduced function of w = uv.

    Needs every discrepancy to be a non-negative integer and an E-polynomial
    on every stratum present.
    """
    report = validate(s)
    if not report.symbolic_eligible:
        bad = [str(d.discrepancy) for d in s.divisors]
        raise SymbolicPathUnavailable(
            f"discrepancies must be non-negative integers, got {bad}"
        )
    w_minus_1 = Poly([-1, 1])
    denominators = [
        Poly.monomial(int(d.discrepancy) + 1) - Poly([1]) for d in s.divisors
    ]
    total = RationalFn(Poly())
    for key in sorted(s.strata, key=lambda k: (len(k), k)):
        st = s.strata[key]
        if st.epoly is None:
            raise MissingEpoly(f"stratum {s.subset_names(key)} has no E-polynomial")
        num, den = st.epoly, Poly([1])
        for j in key:
            num = num * w_minus_1
            den = den * denominators[j]
        total = total + RationalFn(num, den)
    return total


def limit_at_one(f: RationalFn) -> Fraction:
    """Value of ``f`` at w = 1 after cancelling all (w - 1) factors.

    >>> limit_at_one(RationalFn(Poly([-1, 0, 1]), Poly([-1, 1])))
    Fraction(2, 1)
    """
    num, kn = deflate_at_one(f.num)
    den, kd = deflate_at_one(f.den)
    if kd > kn:
        raise PoleAtOne(f"{f} has a pole of order {kd - kn} at w = 1")
    if kn > kd:
        return Fraction(0)
    return Fraction(num(1), den(1))


# -- JSON --------------------------------------------------------------------


def parse_rational(x: Any) -> Fraction:
    """Parse ``"p/q"`` or ``"n"`` (an int is accepted too); floats are rejected."""
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise SchemaError(f"expected a rational string, got {x!r}")
    try:
        if isinstance(x, str) and not x.strip().lstrip("+-").replace("/", "", 1).isdigit():
            raise ValueError(x)
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {x!r}") from exc


def _parse_int(x: Any) -> int:
    if isinstance(x, bool):
        raise SchemaError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip(), 10)
        except ValueError:
            pass
    raise SchemaError(f"expected a decimal integer string, got {x!r}")


def format_rational(x: Fraction | int) -> str:
    """Integers print as ``"n"``, everything else as ``"p/q"``."""
    return str(Fraction(x))


def stratification_from_json(data: str | Mapping[str, Any]) -> Stratification:
    """Read the JSON interchange format.

    ``{"divisors": [{"name": ..., "discrepancy": "p/q"}, ...],
    "strata": [{"subset": [names], "euler": "n", "epoly": [...]}, ...]}``
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, Mapping):
        raise SchemaError("top level must be an object")
    divs_raw = data.get("divisors", [])
    strata_raw = data.get("strata")
    if not isinstance(divs_raw, list) or not isinstance(strata_raw, list):
        raise SchemaError("'divisors' and 'strata' must be lists")

    divisors = []
    for d in divs_raw:
        if not isinstance(d, Mapping) or not isinstance(d.get("name"), str):
            raise SchemaError(f"bad divisor record {d!r}")
        if "discrepancy" not in d:
            raise SchemaError(f"divisor {d['name']} lacks a discrepancy")
        divisors.append(Divisor(d["name"], parse_rational(d["discrepancy"])))
    index = {d.name: i for i, d in enumerate(divisors)}
    if len(index) != len(divisors):
        raise BadSubsetKey("duplicate divisor names")

    strata: dict[Subset, Stratum] = {}
    for rec in strata_raw:
        if not isinstance(rec, Mapping) or not isinstance(rec.get("subset"), list):
            raise SchemaError(f"bad stratum record {rec!r}")
        if "euler" not in rec:
            raise SchemaError(f"stratum {rec['subset']} lacks an Euler number")
        try:
            idx = [index[name] for name in rec["subset"]]
        except (KeyError, TypeError) as exc:
            raise BadSubsetKey(f"unknown divisor in subset {rec['subset']}") from exc
        key = tuple(sorted(idx))
        if len(set(key)) != len(key):
            raise BadSubsetKey(f"repeated divisor in subset {rec['subset']}")
        if key in strata:
            raise BadSubsetKey(f"subset {rec['subset']} listed twice")
        epoly = rec.get("epoly")
        if epoly is not None:
            if not isinstance(epoly, list):
                raise SchemaError(f"epoly of {rec['subset']} must be a list")
            epoly = Poly(_parse_int(c) for c in epoly)
        strata[key] = Stratum(_parse_int(rec["euler"]), epoly)
    return Stratification(tuple(divisors), strata)


def stratification_to_json(s: Stratification) -> dict[str, Any]:
    """Inverse of ``stratification_from_json``; strata sorted by subset."""
    strata = []
    for key in sorted(s.strata, key=lambda k: (len(k), k)):
        st = s.strata[key]
        rec: dict[str, Any] = {
            "subset": sorted(s.subset_names(key)),
            "euler": str(st.euler),
        }
        if st.epoly is not None:
            rec["epoly"] = [str(c) for c in st.epoly.coeffs] or ["0"]
        strata.append(rec)
    return {
        "divisors": [
            {
                "name": d.name,
                "discrepancy": f"{d.discrepancy.numerator}/{d.discrepancy.denominator}",
            }
            for d in s.divisors
        ],
        "strata": strata,
    }
