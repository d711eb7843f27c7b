"""Distinct prime divisor counts: exact over ranges, truncated for big integers.

omega(n) counts distinct prime divisors, ignoring multiplicity. For integers
far beyond the sieve cap (hundreds of digits) only the truncated count
omega_B(n) over primes p <= B is computable; that is what omega_truncated
provides, by trial-dividing the big integer with the tabled primes.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DomainError, PreconditionError
from .primes import RANGE_CAP, PrimeTable, SpfTable, primes_up_to

# Keep chunk products below 2^62 so per-chunk remainders fit in int64 arrays.
_CHUNK_LIMIT = 1 << 62


@dataclass
class OmegaRange:
    """Exact omega values for a contiguous range; counts[i] = omega(lo + i)."""

    lo: int
    hi: int
    counts: np.ndarray


@dataclass
class TruncatedOmega:
    """Count of distinct prime divisors p <= bound of one integer."""

    value_omega: int
    bound: int


class _PrimeChunks:
    """Tabled primes packed into machine-width products for batched remainders.

    For a big integer x, x mod p == (x mod product) mod p for every prime p in
    the chunk, so one big-integer remainder per chunk replaces one per prime.
    """

    def __init__(self, table: PrimeTable):
        products = []
        chunk_idx = np.empty(len(table.primes), dtype=np.int64)
        cur = 1
        k = 0
        for i, p in enumerate(table.primes):
            p = int(p)
            if cur * p >= _CHUNK_LIMIT:
                products.append(cur)
                cur = 1
                k += 1
            cur *= p
            chunk_idx[i] = k
        products.append(cur)
        self.products = products
        self.chunk_idx = chunk_idx
        self.primes = table.primes.astype(np.int64)

    def count_divisors(self, x: int) -> int:
        rems = np.fromiter(
            (x % P for P in self.products), dtype=np.int64, count=len(self.products)
        )
        return int(np.count_nonzero(rems[self.chunk_idx] % self.primes == 0))


def _chunks_for(table: PrimeTable) -> _PrimeChunks:
    # Lazy per-table cache; tables are immutable so this is safe to share.
    if table._chunks is None:
        table._chunks = _PrimeChunks(table)
    return table._chunks


def omega_range(lo: int, hi: int, table: PrimeTable | None = None) -> OmegaRange:
    """Exact distinct-prime-divisor counts over [lo, hi].

    A sieve pass adds 1 at every multiple of every prime <= hi, so each entry
    ends up exactly omega(n). One byte per integer (omega(n) <= 9 below the
    range cap).

    Parameters
    ----------
    lo, hi : int
        Inclusive range, 1 <= lo <= hi <= RANGE_CAP. lo = 0 is rejected:
        omega(0) is undefined (0 is divisible by everything).
    table : PrimeTable, optional
        Reused if it already covers hi; otherwise a table is built.
    """
    if lo < 1:
        raise DomainError(f"range must start at 1 or above, got lo={lo}")
    if hi < lo:
        raise DomainError(f"need lo <= hi, got [{lo}, {hi}]")
    if hi > RANGE_CAP:
        raise CapacityError(f"hi {hi} exceeds range cap {RANGE_CAP}")
    if table is None or table.bound < hi:
        table = primes_up_to(hi) if hi >= 2 else None
    counts = np.zeros(hi - lo + 1, dtype=np.uint8)
    if table is not None:
        for p in table.primes:
            p = int(p)
            if p > hi:
                break
            start = ((lo + p - 1) // p) * p
            if start <= hi:
                counts[start - lo :: p] += 1
    return OmegaRange(lo=lo, hi=hi, counts=counts)


def omega_via_spf(n: int, spf: SpfTable) -> int:
    """omega(n) by repeated division by smallest prime factors."""
    if n < 2 or n > spf.bound:
        raise PreconditionError(f"n={n} outside table range [2, {spf.bound}]")
    table = spf.spf
    count = 0
    prev = 0
    while n > 1:
        p = int(table[n])
        if p != prev:
            count += 1
            prev = p
        n //= p
    return count


def omega_truncated(x: int, table: PrimeTable) -> TruncatedOmega:
    """Count distinct primes p <= table.bound dividing x (arbitrary precision).

    Primes are multiplied into machine-width chunk products; one big-integer
    remainder per chunk, then cheap per-prime checks on the machine-width
    remainder. Equivalent to (and oracle-checked against) per-prime remainders.
    """
    if x == 0:
        raise DomainError("omega(0) is undefined (0 is divisible by everything)")
    if x < 1:
        raise DomainError(f"x must be >= 1, got {x}")
    if x == 1:
        return TruncatedOmega(value_omega=0, bound=table.bound)
    return TruncatedOmega(
        value_omega=_chunks_for(table).count_divisors(x), bound=table.bound
    )


def omega_truncated_naive(x: int, table: PrimeTable) -> int:
    """Per-prime big-integer remainders; the slow dual route for omega_truncated."""
    if x < 1:
        raise DomainError(f"x must be >= 1, got {x}")
    return sum(1 for p in table.primes if x % int(p) == 0)


def omega_truncated_many(values, table: PrimeTable) -> np.ndarray:
    """Truncated omega for a sequence of integers, as an int64 array."""
    chunks = _chunks_for(table)
    out = np.empty(len(values), dtype=np.int64)
    for i, x in enumerate(values):
        if x < 1:
            raise DomainError(f"values must be >= 1, got {x}")
        out[i] = 0 if x == 1 else chunks.count_divisors(x)
    return out
