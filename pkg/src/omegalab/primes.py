"""Prime tables and segmented sieving.

All range sieving works on machine-width integers up to RANGE_CAP. Tables are
immutable after construction and safe to share across threads; segment sieving
is a pure function of (lo, hi, base).
"""

import struct
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from .errors import CacheFormatError, CapacityError, DomainError, PreconditionError

# Documented range cap for every range-sieve input in the package.
RANGE_CAP = 1_000_000_000

# Default segment length for callers that iterate a large range in pieces.
DEFAULT_SEGMENT = 1 << 20

CACHE_MAGIC = b"EKPRIME1"


@dataclass
class PrimeTable:
    """Ascending primes <= bound plus an odd-only packed membership bit-set.

    odd_bits packs one bit per odd number 1, 3, 5, ... <= bound,
    least-significant-bit first within each byte; the bit for 2 is implicit.
    """

    bound: int
    primes: np.ndarray
    odd_bits: np.ndarray
    _chunks: "object" = field(default=None, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.primes)

    def prime_count(self) -> int:
        """pi(bound): number of primes in the table."""
        return len(self.primes)

    def is_prime(self, n: int) -> bool:
        """Membership test via the packed bit-set. Requires n <= bound."""
        if n > self.bound:
            raise PreconditionError(f"{n} exceeds table bound {self.bound}")
        if n == 2:
            return True
        if n < 2 or n % 2 == 0:
            return False
        i = (n - 1) // 2
        return bool((self.odd_bits[i >> 3] >> (i & 7)) & 1)

    def odd_mask(self) -> np.ndarray:
        """Unpacked boolean mask over the odd numbers 1, 3, ... <= bound."""
        n_odds = (self.bound + 1) // 2
        return np.unpackbits(self.odd_bits, count=n_odds, bitorder="little").astype(bool)

    def save(self, path) -> None:
        """Write the binary cache: magic, little-endian u64 bound, odd bit-set."""
        with open(path, "wb") as fh:
            fh.write(CACHE_MAGIC)
            fh.write(struct.pack("<Q", self.bound))
            fh.write(self.odd_bits.tobytes())

    @classmethod
    def load(cls, path) -> "PrimeTable":
        """Read a cache file, verifying magic, bound, and payload length."""
        with open(path, "rb") as fh:
            magic = fh.read(len(CACHE_MAGIC))
            if magic != CACHE_MAGIC:
                raise CacheFormatError(f"bad magic {magic!r}")
            raw = fh.read(8)
            if len(raw) != 8:
                raise CacheFormatError("truncated bound field")
            (bound,) = struct.unpack("<Q", raw)
            if not 2 <= bound <= RANGE_CAP:
                raise CacheFormatError(f"bound {bound} outside [2, {RANGE_CAP}]")
            payload = fh.read()
        n_odds = (bound + 1) // 2
        expected = (n_odds + 7) // 8
        if len(payload) != expected:
            raise CacheFormatError(
                f"payload is {len(payload)} bytes, expected {expected} for bound {bound}"
            )
        odd_bits = np.frombuffer(payload, dtype=np.uint8).copy()
        mask = np.unpackbits(odd_bits, count=n_odds, bitorder="little").astype(bool)
        odds = 2 * np.nonzero(mask)[0].astype(np.int64) + 1
        primes = np.concatenate(([2], odds)) if bound >= 2 else odds
        return cls(bound=int(bound), primes=primes, odd_bits=odd_bits)


@dataclass
class SpfTable:
    """spf[n] = smallest prime factor of n for 2 <= n <= bound.

    Convention: spf[0] = 0, spf[1] = 1, spf[p] = p for prime p. A uint32 entry
    per integer; memory is the practical limit well before RANGE_CAP
    (10^8 entries ~ 400 MB).
    """

    bound: int
    spf: np.ndarray


def _check_bound(bound: int) -> None:
    if bound < 2:
        raise DomainError(f"bound must be >= 2, got {bound}")
    if bound > RANGE_CAP:
        raise CapacityError(f"bound {bound} exceeds range cap {RANGE_CAP}")


def primes_up_to(bound: int) -> PrimeTable:
    """Sieve of Eratosthenes over the odd numbers up to bound (inclusive).

    Parameters
    ----------
    bound : int
        Upper limit, 2 <= bound <= RANGE_CAP.

    Returns
    -------
    PrimeTable
        Complete ascending prime list and packed odd membership bits.
    """
    _check_bound(bound)
    n_odds = (bound + 1) // 2
    mask = np.ones(n_odds, dtype=bool)
    mask[0] = False  # 1 is not prime
    for p in range(3, isqrt(bound) + 1, 2):
        if mask[(p - 1) // 2]:
            start = (p * p - 1) // 2
            mask[start::p] = False
    odds = 2 * np.nonzero(mask)[0].astype(np.int64) + 1
    primes = np.concatenate(([2], odds))
    odd_bits = np.packbits(mask, bitorder="little")
    return PrimeTable(bound=bound, primes=primes, odd_bits=odd_bits)


def spf_table(bound: int) -> SpfTable:
    """Smallest-prime-factor sieve up to bound (inclusive)."""
    _check_bound(bound)
    spf = np.zeros(bound + 1, dtype=np.uint32)
    spf[1] = 1
    for p in range(2, isqrt(bound) + 1):
        if spf[p] == 0:
            sl = spf[p * p :: p]
            sl[sl == 0] = p
            spf[p] = p
    rest = np.nonzero(spf[2:] == 0)[0] + 2
    spf[rest] = rest  # remaining zeros have no factor <= sqrt(bound): primes
    return SpfTable(bound=bound, spf=spf)


def sieve_segment(lo: int, hi: int, base: PrimeTable) -> np.ndarray:
    """Primality bit-set for the window [lo, hi].

    Parameters
    ----------
    lo, hi : int
        Window limits, 2 <= lo <= hi <= RANGE_CAP.
    base : PrimeTable
        Must cover sqrt(hi); anything smaller raises PreconditionError rather
        than returning silently wrong answers.

    Returns
    -------
    np.ndarray
        Boolean mask of length hi - lo + 1; mask[i] iff lo + i is prime.
    """
    if lo < 2 or lo > hi:
        raise DomainError(f"need 2 <= lo <= hi, got [{lo}, {hi}]")
    if hi > RANGE_CAP:
        raise CapacityError(f"hi {hi} exceeds range cap {RANGE_CAP}")
    root = isqrt(hi)
    if base.bound < root:
        raise PreconditionError(
            f"base table bound {base.bound} < sqrt(hi) = {root}; sieve would be wrong"
        )
    mask = np.ones(hi - lo + 1, dtype=bool)
    first_even = lo + (lo & 1)
    mask[first_even - lo :: 2] = False
    if lo <= 2 <= hi:
        mask[2 - lo] = True
    for p in base.primes[1:]:  # odd primes
        p = int(p)
        if p * p > hi:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start % 2 == 0:
            start += p  # even multiples are already cleared
        if start <= hi:
            mask[start - lo :: 2 * p] = False
    return mask


def segment_primes(lo: int, hi: int, base: PrimeTable) -> np.ndarray:
    """Primes in [lo, hi] as an int64 array (convenience over sieve_segment)."""
    mask = sieve_segment(lo, hi, base)
    return np.nonzero(mask)[0].astype(np.int64) + lo


def iter_segments(lo: int, hi: int, base: PrimeTable, segment: int = DEFAULT_SEGMENT):
    """Yield (seg_lo, mask) windows covering [lo, hi] in fixed-size segments."""
    if segment < 1:
        raise DomainError("segment length must be positive")
    cur = lo
    while cur <= hi:
        end = min(cur + segment - 1, hi)
        yield cur, sieve_segment(cur, end, base)
        cur = end + 1
