"""Prime reciprocal sums and the information sum: both track their
asymptotes with a constant offset that is already stable at desk scale.

Run:  python demos/04_prime_sums.py
"""

from omegalab import (
    chebyshev_entropy_sum,
    mertens_sum,
    model_variance,
    prime_zeta2,
    primes_up_to,
)
from omegalab.checks import MERTENS_CONSTANT, PI2_OVER_6

table = primes_up_to(1_000_000)

# ---------------------------------------------------------------------------
# sum 1/p grows like ln ln N; the difference settles at ~0.261497.
# ---------------------------------------------------------------------------
print("        N     sum 1/p    ln ln N        gap")
for n in (10, 1_000, 10_000, 100_000, 1_000_000):
    res = mertens_sum(n, table)
    print(f"{n:>9,}   {res.lhs:.6f}   {res.rhs:>8.6f}   {res.extras['gap']:+.6f}")
print(f"reference constant: {MERTENS_CONSTANT:.6f}")

# ---------------------------------------------------------------------------
# sum log2(p)/p: the expected bits gained from one divisibility observation,
# summed over primes. It tracks log2 N about 1.92 bits behind. The full
# per-prime binary entropy is reported alongside its leading term.
# ---------------------------------------------------------------------------
print("\n        N   sum log2(p)/p    log2 N     gap    full entropy sum")
for n in (10, 1_000, 10_000, 100_000, 1_000_000):
    res = chebyshev_entropy_sum(n, table)
    print(
        f"{n:>9,}   {res.lhs:>13.6f}   {res.rhs:>8.4f}   {res.extras['gap']:.4f}"
        f"   {res.extras['full_binary_entropy_sum']:>13.6f}"
    )

# ---------------------------------------------------------------------------
# The indicator-model variance sum(1/p - 1/p^2) also grows like ln ln N,
# because sum 1/p^2 stays below pi^2/6 (it converges to ~0.4522).
# ---------------------------------------------------------------------------
print("\n        N   model variance   sum 1/p^2")
for n in (10, 1_000, 100_000, 1_000_000):
    print(f"{n:>9,}   {model_variance(n, table):>14.6f}   {prime_zeta2(n, table):.6f}")
print(f"pi^2/6 = {PI2_OVER_6:.6f} stays an upper bound at every N")
