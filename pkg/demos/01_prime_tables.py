"""Prime tables: sieving, windowed segments, and the binary cache format.

Run:  python demos/01_prime_tables.py
"""

import tempfile
from pathlib import Path

import numpy as np

from omegalab import PrimeTable, primes_up_to, segment_primes, sieve_segment

# ---------------------------------------------------------------------------
# A full table: ascending primes plus a packed odd-only membership bit-set.
# ---------------------------------------------------------------------------
table = primes_up_to(1_000_000)
print(f"primes up to {table.bound:,}: {table.prime_count():,}")
print("first ten:", [int(p) for p in table.primes[:10]])
print("pi(10^4) =", int(np.count_nonzero(table.primes <= 10_000)), "(expect 1229)")
print("pi(10^6) =", table.prime_count(), "(expect 78498)")
print("is_prime(999983) =", table.is_prime(999_983))

# ---------------------------------------------------------------------------
# Windowed sieving far from the origin only needs a base table up to sqrt(hi).
# ---------------------------------------------------------------------------
base = primes_up_to(1_100)
window = segment_primes(1_000_000, 1_000_100, base)
print("\nprimes in [1e6, 1e6 + 100]:", [int(p) for p in window])

# Splitting a range anywhere and concatenating reproduces the whole sieve.
lo, hi, mid = 100, 20_000, 7_777
whole = sieve_segment(lo, hi, base)
parts = np.concatenate([sieve_segment(lo, mid, base), sieve_segment(mid + 1, hi, base)])
print("segment composition is split-invariant:", bool(np.array_equal(whole, parts)))

# ---------------------------------------------------------------------------
# Tables persist to a compact binary cache (magic + bound + odd bit-set) and
# the loader verifies the header before trusting the payload.
# ---------------------------------------------------------------------------
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "primes_1e6.bin"
    table.save(path)
    loaded = PrimeTable.load(path)
    print(f"\ncache file: {path.stat().st_size:,} bytes for bound {loaded.bound:,}")
    print("roundtrip identical:", bool(np.array_equal(loaded.primes, table.primes)))
