"""
The stratification of M_{2n}
============================

Kirwan's resolution of M_{2n} has three exceptional divisors with
discrepancies 6n-7, 2n-4, 4n-6.  Every open stratum is an iterated bundle
over X^[n] (or its symmetric square) with fibres built from projective spaces
and isotropic Grassmannians, so its Euler number is a polynomial in a_n.
Only e(M^s_{2n}) of the stable locus is unknown, and it is an integer.
"""

import json

from stringy_calc import (
    hilbert_euler_table,
    isotropic_grassmannian_euler,
    known_part,
    stratification_to_json,
    stratum_euler_table,
    stringy_euler,
    to_stratification,
)

###############################################################################
# Euler numbers of isotropic Grassmannians Gr^w(k, 2n) are 2^k C(n, k)
for n in range(1, 6):
    print(f"n={n}:", [isotropic_grassmannian_euler(k, n) for k in range(n + 1)])

###############################################################################
# The seven exceptional strata for n = 5
a = hilbert_euler_table(10)
t = stratum_euler_table(5, a[5])
for name, key in [("D1", (0,)), ("D2", (1,)), ("D3", (2,)), ("D12", (0, 1)),
                  ("D23", (1, 2)), ("D13", (0, 2)), ("D123", (0, 1, 2))]:
    print(f"e({name}^0) = {t.by_subset()[key]}")

###############################################################################
# Feeding the arrangement to the generic evaluator with e(M^s) = 0 gives the
# closed form; the denominator 7 = 2n - 3 survives.
s = to_stratification(5, t, e_stable=0)
est = stringy_euler(s)
print("e_st(M_10) - e(M^s_10) =", est)
assert est == known_part(5, a[5])

###############################################################################
# The arrangement in the JSON interchange format, ready for
# `stringy-calc stringy --strata FILE`
print(json.dumps(stratification_to_json(s))[:200], "...")
