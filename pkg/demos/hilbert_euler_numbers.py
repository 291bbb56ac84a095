"""
Euler numbers of Hilbert schemes of points on a K3 surface
==========================================================

The generating series of the Euler numbers a_n = e(X^[n]) is the product
prod_{m>=1} (1 - q^m)^(-24).  We expand it exactly, compare against the
divisor-sum recurrence n a_n = 24 sum_k sigma(k) a_{n-k}, and look at how
fast the numbers outgrow machine integers.
"""

from stringy_calc import IntSeries, expand_product_family, hilbert_euler_table

###############################################################################
# The first few coefficients
a = hilbert_euler_table(10)
for n, an in enumerate(a):
    print(f"a_{n:<2d} = {an}")

###############################################################################
# The same series as an IntSeries, printed with its truncation order
s = expand_product_family({m: -24 for m in range(1, 6)}, 5)
print(s)

###############################################################################
# Independent check with the logarithmic-derivative recurrence
N = 60
sigma = [0] + [sum(d for d in range(1, k + 1) if k % d == 0) for k in range(1, N + 1)]
rec = [1]
for n in range(1, N + 1):
    rec.append(24 * sum(sigma[k] * rec[n - k] for k in range(1, n + 1)) // n)
assert rec == hilbert_euler_table(N)
print(f"recurrence agrees up to n = {N}")

###############################################################################
# Size: a_n grows like exp(4 pi sqrt(n)) and soon needs more than 64 bits
big = hilbert_euler_table(200)
first = next(n for n, x in enumerate(big) if x >= 2**63)
print(f"first n with a_n >= 2^63: {first}")
for n in (50, 100, 200):
    print(f"a_{n} has {len(str(big[n]))} digits")

###############################################################################
# Series truncate to the smaller order when mixed
x = IntSeries.from_coeffs([1, 1, 1, 1], 3)
y = IntSeries.from_coeffs([1, -1], 1)
print(x * y)
