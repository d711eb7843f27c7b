"""Standardization, normal CDF, KS statistic, histograms, mergeable moments.

Everything here is pure. MomentSummary and Histogram support associative
merging so sample shards can be reduced map-reduce style; merge order changes
results by no more than ~1e-9 relative.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

_LN10 = math.log(10.0)
_TWO_OVER_SQRTPI = 2.0 / math.sqrt(math.pi)
_INV_SQRTPI = 1.0 / math.sqrt(math.pi)
_SQRT2 = math.sqrt(2.0)

# ---------------------------------------------------------------------------
# logarithms of decimal strings (bounds far beyond float range)
# ---------------------------------------------------------------------------


def ln_decimal(n) -> float:
    """ln(N) for N given as a decimal string of any length.

    Computed as (digits - 1) * ln 10 + ln(mantissa) from the leading 18
    digits; relative error < 1e-12 regardless of size.
    """
    s = n if isinstance(n, str) else str(n)
    if not s or not s.isdigit():
        raise DomainError(f"need a decimal digit string, got {n!r}")
    if s[0] == "0" and len(s) > 1:
        raise DomainError(f"no leading zeros allowed, got {n!r}")
    if s == "0":
        raise DomainError("ln(0) is undefined")
    lead = s[:18]
    mantissa = int(lead) / 10.0 ** (len(lead) - 1)
    return (len(s) - 1) * _LN10 + math.log(mantissa)


def lnln_decimal(n) -> float:
    """ln(ln(N)) from a decimal string; requires N > e^e (about 15.15)."""
    ln_n = ln_decimal(n)
    if ln_n <= math.e:
        raise DomainError(
            f"scale undefined: N must exceed e^e (~15.15), got ln N = {ln_n:.6g}"
        )
    return math.log(ln_n)


# ---------------------------------------------------------------------------
# standard normal CDF
# ---------------------------------------------------------------------------


def _erf_series(x: float) -> float:
    # Maclaurin series, used for x in [0, 2): alternating terms fall off fast.
    total = x
    term = x
    xx = x * x
    n = 0
    while True:
        n += 1
        term *= -xx / n
        contrib = term / (2 * n + 1)
        total += contrib
        if abs(contrib) < 1e-18:
            return _TWO_OVER_SQRTPI * total


def _erfc_cf(x: float) -> float:
    # Continued fraction erfc(x) = e^(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + ...)))
    # with coefficients n/2, evaluated bottom-up; used for x >= 2.
    e = math.exp(-x * x)
    if e == 0.0:
        return 0.0
    t = 0.0
    for n in range(80, 0, -1):
        t = (n / 2.0) / (x + t)
    return e * _INV_SQRTPI / (x + t)


def _erfc_nonneg(x: float) -> float:
    return 1.0 - _erf_series(x) if x < 2.0 else _erfc_cf(x)


def normal_cdf(z: float) -> float:
    """Phi(z) to within 1e-10 absolute (series below |x|=2, continued
    fraction above; the two branches are stitched at the erfc level)."""
    z = float(z)
    if not math.isfinite(z):
        raise DomainError(f"z must be finite, got {z}")
    u = abs(z) / _SQRT2
    half_tail = 0.5 * _erfc_nonneg(u)
    return half_tail if z <= 0 else 1.0 - half_tail


def normal_cdf_array(z) -> np.ndarray:
    return np.array([normal_cdf(v) for v in np.asarray(z, dtype=float).ravel()])


def normal_pdf(z: float) -> float:
    return math.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi)


# ---------------------------------------------------------------------------
# standardization
# ---------------------------------------------------------------------------


@dataclass
class StandardizedSample:
    """z = (omega - center) / scale, with the transform recorded."""

    z_values: np.ndarray
    center: float
    scale: float


def standardize_with(omegas, center: float, scale: float) -> StandardizedSample:
    """Affine standardization with an explicit center and scale."""
    if scale <= 0:
        raise DomainError(f"scale must be positive, got {scale}")
    arr = np.asarray(omegas, dtype=np.float64)
    if arr.size == 0:
        raise DomainError("cannot standardize an empty sample")
    return StandardizedSample(
        z_values=(arr - center) / scale, center=center, scale=scale
    )


def standardize(omegas, bound) -> StandardizedSample:
    """Center by ln ln N and scale by sqrt(ln ln N), N as a decimal string."""
    decimal = bound.decimal if hasattr(bound, "decimal") else str(bound)
    lnln = lnln_decimal(decimal)
    return standardize_with(omegas, center=lnln, scale=math.sqrt(lnln))


# ---------------------------------------------------------------------------
# Kolmogorov-Smirnov statistic
# ---------------------------------------------------------------------------


@dataclass
class KsResult:
    """Supremum deviation between the empirical CDF and a reference CDF."""

    statistic: float
    n: int
    reference: str


def ks_statistic(sample, reference: str = "normal(0,1)") -> KsResult:
    """D = max_i max(i/n - Phi(z_(i)), Phi(z_(i)) - (i-1)/n) over sorted z.

    Ties are handled exactly: within a run of equal values the upper deviation
    is largest at the top rank and the lower one at the bottom rank, so the
    computation runs over unique values with cumulative counts.
    """
    z = sample.z_values if isinstance(sample, StandardizedSample) else sample
    z = np.asarray(z, dtype=np.float64).ravel()
    n = z.size
    if n == 0:
        raise DomainError("KS statistic of an empty sample")
    uniq, counts = np.unique(z, return_counts=True)
    cum = np.cumsum(counts)
    cdf_ref = normal_cdf_array(uniq)
    d_upper = cum / n - cdf_ref
    d_lower = cdf_ref - (cum - counts) / n
    stat = float(max(d_upper.max(), d_lower.max(), 0.0))
    return KsResult(statistic=stat, n=int(n), reference=reference)


# ---------------------------------------------------------------------------
# histograms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinPolicy:
    """Uniform bins [lo, hi) of the given width, with optional overflow bins.

    The default matches unit-variance data: width 0.5 over [-4, 4).
    """

    width: float = 0.5
    lo: float = -4.0
    hi: float = 4.0
    overflow: bool = True

    def edges(self) -> np.ndarray:
        if self.width <= 0 or self.hi <= self.lo:
            raise DomainError(f"bad bin policy {self}")
        n = int(round((self.hi - self.lo) / self.width))
        return self.lo + self.width * np.arange(n + 1)


@dataclass
class Histogram:
    """Counts per half-open bin [left, right); edge values go to the right bin.

    densities are counts / (total * width) where total counts every input
    value including the ones that landed in the under/overflow bins, so
    sum(density * width) = 1 exactly when no value falls outside.
    """

    bin_edges: np.ndarray
    counts: np.ndarray
    densities: np.ndarray
    underflow: int = 0
    overflow: int = 0

    @property
    def total(self) -> int:
        return int(self.counts.sum()) + self.underflow + self.overflow

    def merge(self, other: "Histogram") -> "Histogram":
        if len(self.bin_edges) != len(other.bin_edges) or not np.array_equal(
            self.bin_edges, other.bin_edges
        ):
            raise DomainError("cannot merge histograms with different edges")
        counts = self.counts + other.counts
        return _finish_histogram(
            self.bin_edges,
            counts,
            self.underflow + other.underflow,
            self.overflow + other.overflow,
        )


def _finish_histogram(edges, counts, underflow, overflow) -> Histogram:
    total = int(counts.sum()) + underflow + overflow
    widths = np.diff(edges)
    densities = counts / (total * widths) if total > 0 else counts * 0.0
    return Histogram(
        bin_edges=edges,
        counts=counts,
        densities=densities,
        underflow=underflow,
        overflow=overflow,
    )


def histogram(values, edges=None, allow_overflow: bool | None = None) -> Histogram:
    """Bin values (or a StandardizedSample) into half-open bins."""
    if isinstance(values, StandardizedSample):
        values = values.z_values
    vals = np.asarray(values, dtype=np.float64).ravel()
    if vals.size == 0:
        raise DomainError("histogram needs at least one value")
    if edges is None:
        edges = BinPolicy()
    if isinstance(edges, BinPolicy):
        if allow_overflow is None:
            allow_overflow = edges.overflow
        edges = edges.edges()
    else:
        edges = np.asarray(edges, dtype=np.float64)
        if allow_overflow is None:
            allow_overflow = True
    if len(edges) < 2 or not np.all(np.diff(edges) > 0):
        raise DomainError("bin edges must be strictly ascending with >= 2 entries")
    nbins = len(edges) - 1
    idx = np.searchsorted(edges, vals, side="right") - 1
    underflow = int(np.count_nonzero(idx < 0))
    overflow = int(np.count_nonzero(idx >= nbins))
    if (underflow or overflow) and not allow_overflow:
        raise DomainError(
            f"{underflow + overflow} values outside [{edges[0]}, {edges[-1]}) "
            "and overflow bins are disabled"
        )
    inside = idx[(idx >= 0) & (idx < nbins)]
    counts = np.bincount(inside, minlength=nbins).astype(np.int64)
    return _finish_histogram(edges, counts, underflow, overflow)


# ---------------------------------------------------------------------------
# mergeable moments
# ---------------------------------------------------------------------------


@dataclass
class MomentSummary:
    """Count, mean, and centered power sums m2, m3; mergeable."""

    count: int
    mean: float
    m2: float = 0.0
    m3: float = 0.0

    @property
    def variance(self) -> float:
        """Unbiased (n - 1) variance."""
        if self.count < 2:
            raise DomainError(f"variance undefined for count {self.count}")
        return self.m2 / (self.count - 1)

    @property
    def skewness(self) -> float:
        """Standardized third central moment; 0 for degenerate samples."""
        if self.count < 2 or self.m2 <= 0.0:
            return 0.0
        return (self.m3 / self.count) / (self.m2 / self.count) ** 1.5

    def merge(self, other: "MomentSummary") -> "MomentSummary":
        # Chan/Pebay pairwise update; associative to ~1e-9 relative.
        na, nb = self.count, other.count
        if na == 0:
            return MomentSummary(other.count, other.mean, other.m2, other.m3)
        if nb == 0:
            return MomentSummary(self.count, self.mean, self.m2, self.m3)
        n = na + nb
        delta = other.mean - self.mean
        mean = self.mean + delta * nb / n
        m2 = self.m2 + other.m2 + delta * delta * na * nb / n
        m3 = (
            self.m3
            + other.m3
            + delta**3 * na * nb * (na - nb) / (n * n)
            + 3.0 * delta * (na * other.m2 - nb * self.m2) / n
        )
        return MomentSummary(count=n, mean=mean, m2=m2, m3=m3)


def moments(values) -> MomentSummary:
    """Two-pass moment summary of a sequence of reals."""
    arr = np.asarray(values, dtype=np.float64).ravel()
    if arr.size == 0:
        raise DomainError("moments of an empty sample")
    mean = float(arr.mean())
    d = arr - mean
    return MomentSummary(
        count=int(arr.size),
        mean=mean,
        m2=float(np.sum(d * d)),
        m3=float(np.sum(d * d * d)),
    )
