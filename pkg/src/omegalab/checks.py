"""Numeric verification of the model's formula chain.

Each check compares a finite prime sum (or exact floor count) against its
asymptote or bound and records pass/fail against a named tolerance from the
registry. Sums run ascending by prime with compensated (Kahan) accumulation
for reproducible last digits.
"""

import math
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from .errors import DomainError, PreconditionError
from .primes import PrimeTable

# Regression references: stable finite-size values, not asymptotic limits.
MERTENS_CONSTANT = 0.2614972128476428
CHEBYSHEV_GAP_BITS = 1.9226
PRIME_ZETA_2 = 0.4522474200410654
PI2_OVER_6 = math.pi * math.pi / 6.0

DEFAULT_TOLERANCES = {
    "divisibility_exact": 0.0,
    "mertens_gap": 0.01,
    "chebyshev_gap_low": 1.5,
    "chebyshev_gap_high": 2.5,
    "chebyshev_variation": 0.3,
    "independence_floor_multiple": 3.0,
    "prime_zeta_upper": 0.4523,
    "lindeberg_slack": 1e-9,
    "mean_identity": 1e-12,
    "merge_rel": 1e-9,
    "variance_ratio_low": 0.5,
    "variance_ratio_high": 1.2,
    "ks_headline": 0.08,
    "ks_trend_inversions": 1.0,
}


def tolerances(overrides=None) -> dict:
    """A fresh copy of the registry, optionally with overridden entries."""
    reg = dict(DEFAULT_TOLERANCES)
    if overrides:
        for name, value in overrides.items():
            if name not in reg:
                raise DomainError(f"unknown tolerance {name!r}")
            reg[name] = float(value)
    return reg


@dataclass
class CheckResult:
    """One named comparison: lhs vs rhs, judged against a registry tolerance."""

    name: str
    lhs: float
    rhs: float
    abs_error: float
    rel_error: float
    passed: bool
    tolerance_name: str
    tolerance: float
    extras: dict = field(default_factory=dict)


def _make_check(name, lhs, rhs, passed, tolerance_name, tolerance, extras=None):
    abs_error = abs(lhs - rhs)
    denom = max(abs(lhs), abs(rhs))
    rel_error = abs_error / denom if denom > 0 else 0.0
    return CheckResult(
        name=name,
        lhs=float(lhs),
        rhs=float(rhs),
        abs_error=abs_error,
        rel_error=rel_error,
        passed=bool(passed),
        tolerance_name=tolerance_name,
        tolerance=float(tolerance),
        extras=extras or {},
    )


def kahan_sum(values) -> float:
    """Kahan-Neumaier compensated summation; order-stable to the last digit."""
    total = 0.0
    c = 0.0
    for v in values:
        t = total + v
        if abs(total) >= abs(v):
            c += (total - t) + v
        else:
            c += (v - t) + total
        total = t
    return total + c


def _primes_upto_n(table: PrimeTable, n: int) -> np.ndarray:
    if table.bound < n:
        raise PreconditionError(f"table bound {table.bound} < N = {n}")
    k = int(np.searchsorted(table.primes, n, side="right"))
    return table.primes[:k]


def _is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# divisibility (floor identity)
# ---------------------------------------------------------------------------


def divisibility_count(n: int, m: int) -> int:
    """floor(N/m): how many multiples of m lie in [1, N]."""
    if m == 0:
        raise DomainError("m = 0: divisibility by zero is undefined")
    if n < 1 or m < 1:
        raise DomainError(f"need N >= 1 and m >= 1, got N={n}, m={m}")
    return n // m


def count_multiples(n: int, m: int, chunk: int = 1 << 22) -> int:
    """Exact enumeration of {k <= N : m | k}; the slow route of the identity."""
    if m == 0:
        raise DomainError("m = 0: divisibility by zero is undefined")
    if n < 1 or m < 1:
        raise DomainError(f"need N >= 1 and m >= 1, got N={n}, m={m}")
    total = 0
    lo = 1
    while lo <= n:
        hi = min(lo + chunk - 1, n)
        total += int(np.count_nonzero(np.arange(lo, hi + 1) % m == 0))
        lo = hi + 1
    return total


def divisibility_identity_check(n: int, m: int, registry=None) -> CheckResult:
    """Assert floor(N/m) equals the enumerated multiple count (0 tolerance)."""
    reg = registry or DEFAULT_TOLERANCES
    floor_count = divisibility_count(n, m)
    enumerated = count_multiples(n, m)
    return _make_check(
        name=f"divisibility N={n} m={m}",
        lhs=float(floor_count),
        rhs=float(enumerated),
        passed=floor_count == enumerated,
        tolerance_name="divisibility_exact",
        tolerance=reg["divisibility_exact"],
        extras={"floor": floor_count, "enumerated": enumerated},
    )


# ---------------------------------------------------------------------------
# information content
# ---------------------------------------------------------------------------


def info_content(p: int, table: PrimeTable) -> float:
    """log2(p) bits for a tabled prime p; composites are rejected."""
    if p > table.bound:
        raise PreconditionError(f"p = {p} exceeds table bound {table.bound}")
    if not table.is_prime(p):
        raise DomainError(f"{p} is not prime")
    return math.log2(p)


# ---------------------------------------------------------------------------
# prime sums
# ---------------------------------------------------------------------------


def mertens_sum(n: int, table: PrimeTable, registry=None) -> CheckResult:
    """sum_{p <= N} 1/p against ln ln N; their gap approaches ~0.2615."""
    reg = registry or DEFAULT_TOLERANCES
    if n < 3:
        raise DomainError(f"ln ln N undefined for N = {n} (need N >= 3)")
    primes = _primes_upto_n(table, n)
    lhs = kahan_sum(1.0 / int(p) for p in primes)
    rhs = math.log(math.log(n))
    gap = lhs - rhs
    return _make_check(
        name=f"mertens N={n}",
        lhs=lhs,
        rhs=rhs,
        passed=abs(gap - MERTENS_CONSTANT) <= reg["mertens_gap"],
        tolerance_name="mertens_gap",
        tolerance=reg["mertens_gap"],
        extras={"gap": gap, "reference_constant": MERTENS_CONSTANT},
    )


def chebyshev_entropy_sum(n: int, table: PrimeTable, registry=None) -> CheckResult:
    """sum_{p <= N} log2(p)/p against log2 N; the gap settles near 1.92 bits.

    The extras also carry the full binary-entropy sum H(1/p) per prime, of
    which log2(p)/p is the leading term; both are reported, neither preferred.
    """
    reg = registry or DEFAULT_TOLERANCES
    if n < 2:
        raise DomainError(f"need N >= 2, got {n}")
    primes = _primes_upto_n(table, n)
    lhs = kahan_sum(math.log2(int(p)) / int(p) for p in primes)
    rhs = math.log2(n)
    gap = rhs - lhs

    def h_bits(p):
        q = 1.0 / int(p)
        return -q * math.log2(q) - (1.0 - q) * math.log2(1.0 - q)

    full_entropy = kahan_sum(h_bits(p) for p in primes)
    low, high = reg["chebyshev_gap_low"], reg["chebyshev_gap_high"]
    return _make_check(
        name=f"chebyshev N={n}",
        lhs=lhs,
        rhs=rhs,
        passed=low <= gap <= high,
        tolerance_name="chebyshev_gap_low/high",
        tolerance=high,
        extras={
            "gap": gap,
            "reference_gap": CHEBYSHEV_GAP_BITS,
            "full_binary_entropy_sum": full_entropy,
        },
    )


# ---------------------------------------------------------------------------
# pairwise independence
# ---------------------------------------------------------------------------


def independence_check(p: int, q: int, n: int, registry=None) -> CheckResult:
    """Joint divisibility frequency vs the product of marginals, exactly.

    |floor(N/pq)/N - floor(N/p)floor(N/q)/N^2| <= 3/N, judged in integer
    arithmetic: |N*floor(N/pq) - floor(N/p)*floor(N/q)| <= 3N.
    """
    reg = registry or DEFAULT_TOLERANCES
    if p == q:
        raise DomainError("independence is claimed for distinct primes only")
    if not (_is_prime_trial(p) and _is_prime_trial(q)):
        raise DomainError(f"{p}, {q} must both be prime")
    if p * q > n:
        raise DomainError(f"need pq <= N, got {p}*{q} > {n}")
    joint = n // (p * q)
    fp, fq = n // p, n // q
    lhs = joint / n
    rhs = (fp / n) * (fq / n)
    mult = reg["independence_floor_multiple"]
    scaled = abs(joint * n - fp * fq)  # = abs_error * N^2, exact
    passed = scaled <= mult * n
    return _make_check(
        name=f"independence p={p} q={q} N={n}",
        lhs=lhs,
        rhs=rhs,
        passed=passed,
        tolerance_name="independence_floor_multiple",
        tolerance=mult,
        extras={"scaled_error": int(scaled), "bound": int(mult * n)},
    )


def independence_max_check(
    n: int, table: PrimeTable, registry=None, max_prime: int = 50
) -> CheckResult:
    """Worst pair over p < q <= max_prime with pq <= N."""
    reg = registry or DEFAULT_TOLERANCES
    small = [int(p) for p in table.primes[table.primes <= max_prime]]
    worst = None
    for i, p in enumerate(small):
        for q in small[i + 1 :]:
            if p * q > n:
                break
            res = independence_check(p, q, n, reg)
            if worst is None or res.abs_error > worst.abs_error:
                worst = res
    if worst is None:
        raise DomainError(f"no prime pairs with pq <= {n}")
    worst.name = f"independence pairs<= {max_prime} N={n}"
    worst.extras["pairs_bound"] = max_prime
    return worst


# ---------------------------------------------------------------------------
# variance model
# ---------------------------------------------------------------------------


def model_variance(n: int, table: PrimeTable) -> float:
    """sum_{p <= N} (1/p - 1/p^2), the independent-indicator variance."""
    if n < 2:
        raise DomainError(f"need N >= 2, got {n}")
    primes = _primes_upto_n(table, n)
    return kahan_sum(_variance_term(int(p)) for p in primes)


def _variance_term(p: int) -> float:
    q = 1.0 / p
    return q - q * q


def prime_zeta2(n: int, table: PrimeTable) -> float:
    """sum_{p <= N} 1/p^2 (bounded above by pi^2/6)."""
    if n < 2:
        raise DomainError(f"need N >= 2, got {n}")
    primes = _primes_upto_n(table, n)
    return kahan_sum(1.0 / (int(p) * int(p)) for p in primes)


def prime_zeta_bound_check(n: int, table: PrimeTable, registry=None) -> CheckResult:
    reg = registry or DEFAULT_TOLERANCES
    lhs = prime_zeta2(n, table)
    upper = reg["prime_zeta_upper"]
    return _make_check(
        name=f"prime_zeta2 N={n}",
        lhs=lhs,
        rhs=PI2_OVER_6,
        passed=lhs < upper < PI2_OVER_6,
        tolerance_name="prime_zeta_upper",
        tolerance=upper,
        extras={"regression_upper": upper},
    )


# ---------------------------------------------------------------------------
# Lindeberg functional
# ---------------------------------------------------------------------------


@dataclass
class LindebergReport:
    """Truncated-second-moment functional of the indicator sum at (N, eps)."""

    n: int
    epsilon: float
    sigma2: float
    lambda_value: float
    variant: str


def lindeberg_lambda(
    n: int, epsilon: float, table: PrimeTable, variant: str = "centered"
) -> LindebergReport:
    """Evaluate the functional exactly in one pass over tabled primes <= N.

    centered: per prime, Y takes 1 - 1/p with probability 1/p and -1/p with
    probability 1 - 1/p; the summand is E[Y^2 ; |Y| >= eps*sigma] / sigma^2.
    When both branches qualify the term collapses to the variance term
    1/p - 1/p^2, computed by the same expression as model_variance so that an
    all-branches-in evaluation yields exactly 1.0.

    literal: the raw indicator in {0, 1} is used unchanged; the 1-branch
    qualifies iff 1 >= eps*sigma, so the value is sum(1/p)/sigma^2 or 0. Note
    this exceeds 1 whenever nonzero (raw second moments over the centered
    variance); the [0, 1] range contract applies to the centered variant.
    """
    if epsilon <= 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    if n < 3:
        raise DomainError(f"need N >= 3, got {n}")
    if variant not in ("centered", "literal"):
        raise DomainError(f"unknown variant {variant!r}")
    sigma2 = model_variance(n, table)
    sigma = math.sqrt(sigma2)
    threshold = epsilon * sigma
    primes = _primes_upto_n(table, n)

    def centered_terms():
        for p in primes:
            q = 1.0 / int(p)
            rare_in = (1.0 - q) >= threshold  # value 1 - 1/p, probability 1/p
            common_in = q >= threshold  # value -1/p, probability 1 - 1/p
            if rare_in and common_in:
                yield _variance_term(int(p))
            elif rare_in:
                yield q * (1.0 - q) ** 2
            elif common_in:
                yield (1.0 - q) * q * q

    def literal_terms():
        if 1.0 >= threshold:
            for p in primes:
                yield 1.0 / int(p)

    terms = centered_terms() if variant == "centered" else literal_terms()
    lam = kahan_sum(terms) / sigma2
    return LindebergReport(
        n=n, epsilon=float(epsilon), sigma2=sigma2, lambda_value=lam, variant=variant
    )


def lindeberg_grid(ns, epsilons, table: PrimeTable, variant: str = "centered"):
    """Evaluate lambda over an explicit (N, eps) grid, row-major by N."""
    return [
        lindeberg_lambda(n, eps, table, variant) for n in ns for eps in epsilons
    ]


def lindeberg_check(
    n: int, epsilon: float, table: PrimeTable, variant: str = "centered", registry=None
) -> CheckResult:
    """LindebergReport folded into a CheckResult for report serialization."""
    reg = registry or DEFAULT_TOLERANCES
    rep = lindeberg_lambda(n, epsilon, table, variant)
    slack = reg["lindeberg_slack"]
    if variant == "centered":
        passed = -slack <= rep.lambda_value <= 1.0 + slack
    else:
        # literal lambda is 0 or sum(1/p)/sigma2; bound by that value.
        primes = _primes_upto_n(table, n)
        cap = kahan_sum(1.0 / int(p) for p in primes) / rep.sigma2
        passed = -slack <= rep.lambda_value <= cap + slack
    return _make_check(
        name=f"lindeberg {variant} N={n} eps={epsilon}",
        lhs=rep.lambda_value,
        rhs=0.0,
        passed=passed,
        tolerance_name="lindeberg_slack",
        tolerance=slack,
        extras={"sigma2": rep.sigma2, "epsilon": epsilon, "variant": variant},
    )
