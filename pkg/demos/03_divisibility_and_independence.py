"""Divisibility frequencies are floor-exact, and divisibility by distinct
primes behaves like independent events up to a provable 3/N floor error.

Run:  python demos/03_divisibility_and_independence.py
"""

from omegalab import (
    divisibility_count,
    divisibility_identity_check,
    independence_check,
    independence_max_check,
    info_content,
    primes_up_to,
)

# ---------------------------------------------------------------------------
# The number of multiples of m in [1, N] is floor(N/m), checked here against
# literal enumeration.
# ---------------------------------------------------------------------------
for n, m in ((100, 6), (1_000_000, 997), (12_345, 1)):
    check = divisibility_identity_check(n, m)
    print(
        f"N={n:>9,} m={m:>4}: floor = {divisibility_count(n, m):>7,}, "
        f"enumerated = {int(check.rhs):>7,}, identical = {check.passed}"
    )

# So P(m | X) for X uniform on [1, N] is floor(N/m)/N -> 1/m.

# ---------------------------------------------------------------------------
# Observing a prime divisor p carries log2(p) bits.
# ---------------------------------------------------------------------------
table = primes_up_to(2_000)
for p in (2, 3, 31, 1021):
    print(f"info content of p={p}: {info_content(p, table):.4f} bits")

# ---------------------------------------------------------------------------
# Joint divisibility by two distinct primes factors into the marginals with
# error below 3/N (each floor is off by less than one).
# ---------------------------------------------------------------------------
print("\n  p   q        joint      product     |error|      3/N")
for p, q, n in ((2, 3, 100), (2, 3, 6), (7, 11, 10_000), (43, 47, 1_000_000)):
    res = independence_check(p, q, n)
    print(
        f"{p:>3} {q:>3}  {res.lhs:.9f}  {res.rhs:.9f}  {res.abs_error:.2e}  {3 / n:.2e}"
    )

worst = independence_max_check(1_000_000, primes_up_to(50), max_prime=50)
print(f"\nworst pair over p < q <= 50 at N = 1e6: |error| = {worst.abs_error:.3e}")
print(f"within the 3/N bound: {worst.passed}")
