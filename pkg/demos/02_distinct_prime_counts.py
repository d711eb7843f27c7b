"""Distinct prime divisor counts omega(n): exact sieving, SPF factorization,
and truncated counts for integers far beyond any sieve.

Run:  python demos/02_distinct_prime_counts.py
"""

import numpy as np

from omegalab import (
    omega_range,
    omega_truncated,
    omega_via_spf,
    primes_up_to,
    spf_table,
)

# ---------------------------------------------------------------------------
# Exact omega over a range: one sieve pass adds 1 at every prime multiple.
# ---------------------------------------------------------------------------
rng = omega_range(1, 30)
print("n     :", " ".join(f"{n:2d}" for n in range(1, 31)))
print("omega :", " ".join(f"{c:2d}" for c in rng.counts))

# The average of omega over [1, N] equals sum(floor(N/p))/N exactly: each
# multiple of each prime contributes one hit to the sieve.
n = 100_000
table = primes_up_to(n)
counts = omega_range(1, n, table).counts
total = int(counts.astype(np.int64).sum())
floor_sum = sum(n // int(p) for p in table.primes)
print(f"\nsum omega(1..{n:,}) = {total:,} = sum floor(N/p) = {floor_sum:,}")
print(f"mean omega = {total / n:.6f}")

# ---------------------------------------------------------------------------
# Smallest-prime-factor tables factor any tabled integer in O(log n).
# ---------------------------------------------------------------------------
spf = spf_table(100_000)
for x in (30_030, 1_024, 99_991):
    print(f"omega({x}) via SPF = {omega_via_spf(x, spf)}")

# ---------------------------------------------------------------------------
# Hundred-digit integers cannot be factored, but their distinct prime
# divisors up to a bound B are exact: trial division by tabled primes,
# batched into machine-word chunk products (one big-integer remainder per
# chunk instead of one per prime).
# ---------------------------------------------------------------------------
x = 10**99 + 4224342  # an arbitrary 100-digit integer
for bound in (1_000, 100_000):
    t = primes_up_to(bound)
    res = omega_truncated(x, t)
    print(f"omega_{bound}(10^99 + 4224342) = {res.value_omega}")

# Constructed example: the primorial of 23 has exactly the first nine primes.
primorial = 2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23
print(f"omega_23({primorial}) =", omega_truncated(primorial, primes_up_to(23)).value_omega)
