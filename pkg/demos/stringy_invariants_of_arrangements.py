"""
Stringy E-functions from resolution data
========================================

A log resolution is described by its exceptional divisors (with
discrepancies) and the E-polynomials of the open strata, written in w = uv.
Three classical cases: the blow-up of a smooth point, the A_1 surface
singularity, and the non-Gorenstein quotient C^3 / +-1.
"""

import json
from fractions import Fraction

from stringy_calc import (
    Stratification,
    limit_at_one,
    stratification_from_json,
    stratification_to_json,
    stringy_E_diagonal,
    stringy_euler,
    validate,
)

###############################################################################
# Blowing up the origin of C^2.  The exceptional P^1 has discrepancy 1 and the
# stringy E-function recovers E(C^2) = w^2: it does not see the resolution.
blowup = Stratification.build(
    [("E", 1)],
    {(): (0, [-1, 0, 1]), (0,): (2, [1, 1])},  # C^2 - 0, and P^1
)
print("blow-up of C^2:  E_st =", stringy_E_diagonal(blowup), " e_st =", stringy_euler(blowup))

###############################################################################
# The A_1 singularity C^2 / +-1.  The minimal resolution is crepant, so E_st is
# the E-polynomial of the resolution, and e_st = 2 is the orbifold Euler number.
a1 = Stratification.build([("E", 0)], {(): (0, [-1, 0, 1]), (0,): (2, [1, 1])})
f = stringy_E_diagonal(a1)
print("A_1:             E_st =", f, " limit =", limit_at_one(f))

###############################################################################
# C^3 / +-1.  Blowing up the origin gives an exceptional P^2 with discrepancy
# 1/2.  The symbolic path needs integral discrepancies, but e_st is still
# defined: 0 + 3 / (3/2) = 2, again the orbifold Euler number.
c3 = Stratification.build([("E", Fraction(1, 2))], {(): (0, [-1, 0, 0, 1]), (0,): (3, [1, 1, 1])})
report = validate(c3)
print("C^3/+-1:         e_st =", stringy_euler(c3), " symbolic path:", report.symbolic_eligible)

###############################################################################
# Arrangements travel as JSON, with every number written as a string.
text = json.dumps(stratification_to_json(blowup), indent=1)
print(text)
assert stratification_from_json(text) == blowup
