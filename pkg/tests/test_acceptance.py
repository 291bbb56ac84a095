"""Exit criteria.  Each test prints one PASS/FAIL line.

    pytest tests/test_acceptance.py -s      # or
    python tests/test_acceptance.py
"""
import io
import csv
import sys
import time
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path
from random import Random

sys.path.insert(0, str(Path(__file__).parent))

from oracles import a_table_by_convolution  # noqa: E402
from stringy_calc.cli import main  # noqa: E402
from stringy_calc.ogrady import (  # noqa: E402
    identity_check,
    isotropic_grassmannian_euler,
    known_part,
    obstruction_test,
)
from stringy_calc.poly import Poly  # noqa: E402
from stringy_calc.series import hilbert_euler_table  # noqa: E402
from stringy_calc.stringy import (  # noqa: E402
    Stratification,
    limit_at_one,
    stringy_E_diagonal,
    stringy_euler,
)

PAPER_LIST = {5, 6, 8, 11, 12, 13, 15, 16, 17, 18, 19, 20}


def check(label, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else ""))
    assert ok, f"{label}: {detail}"


def _cli_csv(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, list(csv.DictReader(io.StringIO(buf.getvalue())))


def _random_arrangement(rng, crepant=False):
    r = rng.randint(0, 4)
    disc = [0 if crepant else rng.randint(0, 6) for _ in range(r)]
    strata = {}
    for mask in range(1 << r):
        p = [rng.randint(-5, 5) for _ in range(rng.randint(1, 6))]  # degree <= 5
        strata[tuple(j for j in range(r) if mask >> j & 1)] = (Poly(p)(1), p)
    return Stratification.build([(f"D{j}", a) for j, a in enumerate(disc)], strata)


def test_ac1_obstruction_list():
    t0 = time.perf_counter()
    code, rows = _cli_csv("obstruction", "--max", "20", "--format", "csv")
    dt = time.perf_counter() - t0
    flagged = {int(r["n"]) for r in rows if r["obstructed"] == "true"}
    check(
        "AC1 obstruction --max 20 flags exactly the published list, < 1 s",
        code == 0 and flagged == PAPER_LIST and dt < 1.0,
        f"{sorted(flagged)} in {dt:.3f} s",
    )


def test_ac2_resolved_case_unobstructed():
    r = obstruction_test(2, hilbert_euler_table(5))
    check("AC2 n = 2 (c = 4) unobstructed", not r.obstructed, f"2*a_2/1 = {r.value}")


def test_ac3_a_table_oracle():
    t0 = time.perf_counter()
    got = hilbert_euler_table(12)
    dt = time.perf_counter() - t0
    want = a_table_by_convolution(12)
    check(
        "AC3 hilbert_euler_table(12) equals naive factor-by-factor convolution, < 1 s",
        got == want and dt < 1.0,
        f"a_12 = {got[12]}, {dt:.4f} s",
    )


def test_ac4_eq31_identity():
    t0 = time.perf_counter()
    a = hilbert_euler_table(30)
    bad = [n for n in range(2, 31) if not identity_check(n, a[n])]
    dt = time.perf_counter() - t0
    check(
        "AC4 eight-term stratum sum == (n-1)(a^2-a) + 2n(n-1)a/(2n-3) for 2 <= n <= 30, < 1 s",
        not bad and dt < 1.0,
        f"failures {bad}, {dt:.3f} s",
    )


def test_ac5_grassmannian_recursion():
    bad = [
        (k, n)
        for n in range(1, 51)
        for k in range(1, n + 1)
        if (2 * n - 2 * k + 2) * isotropic_grassmannian_euler(k - 1, n)
        != k * isotropic_grassmannian_euler(k, n)
    ]
    check("AC5 (2n-2k+2) e(k-1) = k e(k) for 1 <= k <= n <= 50", not bad, f"failures {bad[:5]}")


def test_ac6_limit_law():
    rng = Random(20061019)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(200):
        s = _random_arrangement(rng)
        if limit_at_one(stringy_E_diagonal(s)) != stringy_euler(s):
            bad += 1
    dt = time.perf_counter() - t0
    check(
        "AC6 limit_at_one(E_st) == e_st on 200 random arrangements, < 5 s",
        bad == 0 and dt < 5.0,
        f"{bad} mismatches, {dt:.3f} s",
    )


def test_ac7_crepant_collapse():
    rng = Random(7)
    bad = 0
    for _ in range(200):
        s = _random_arrangement(rng, crepant=True)
        total = sum(st.euler for st in s.strata.values())
        if stringy_euler(s) != total or limit_at_one(stringy_E_diagonal(s)) != total:
            bad += 1
    check("AC7 all discrepancies 0 => e_st is the plain Euler sum", bad == 0, f"{bad} mismatches")


def test_ac8_vafa_witten_divergence():
    code, rows = _cli_csv("obstruction", "--max", "20", "--vw", "--format", "csv")
    obstructed = [r for r in rows if r["obstructed"] == "true"]
    agree = [r["n"] for r in obstructed if r["est_vw_differ"] != "true"]
    # cross-check the CLI against the library's exact values
    a = hilbert_euler_table(77)
    for r in obstructed:
        n = int(r["n"])
        diff = known_part(n, a[n]) - (a[4 * n - 3] + Fraction(a[n], 4))
        if diff.denominator == 1:
            agree.append(n)
    check(
        "AC8 every obstructed n <= 20 has e_st - e_VW non-integral",
        code == 0 and len(obstructed) == len(PAPER_LIST) and not agree,
        f"{len(obstructed)} obstructed, exceptions {agree}",
    )


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
