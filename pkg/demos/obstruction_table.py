"""
Which M_{2n} cannot have a symplectic resolution
================================================

If M_{2n} had a symplectic (hence crepant) resolution, its stringy Euler
number would be an integer.  The stringy Euler number is n a_n / (2n-3) plus
an integer, so every n with (2n-3) not dividing n a_n is ruled out.  The
Vafa-Witten prediction a_{4n-3} + a_n / 4 only has fractional parts in
{0, 1/4, 1/2, 3/4}, which an odd denominator 2n-3 can never hit.
"""

from fractions import Fraction

from stringy_calc import hilbert_euler_table, obstruction_list, obstruction_test

N = 40
a = hilbert_euler_table(4 * N - 3)

###############################################################################
# The obstructed values of n
print("obstructed n <= 20:", obstruction_list(20, a))
print("obstructed n <= 40:", obstruction_list(N, a))

###############################################################################
# Per-n detail, including the comparison with the Vafa-Witten value
print(f"{'n':>3} {'frac(n a_n/(2n-3))':>20} {'frac(e_VW)':>11} {'differ':>7}")
for n in range(2, 21):
    r = obstruction_test(n, a)
    vw_frac = r.vw_value - (r.vw_value.numerator // r.vw_value.denominator)
    print(f"{n:>3} {str(r.fractional_part):>20} {str(vw_frac):>11} {str(r.est_vw_differ):>7}")

###############################################################################
# Share of obstructed n as the range grows
for top in (20, 40):
    hits = obstruction_list(top, a)
    print(f"n <= {top}: {len(hits)} of {top - 1} obstructed ({Fraction(len(hits), top - 1)})")
