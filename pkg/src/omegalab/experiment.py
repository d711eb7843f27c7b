"""Experiment orchestration: run a distribution experiment, emit reports.

Exhaustive mode sieves omega over [1, N] (machine range). Sample mode draws
uniform big integers and computes truncated omega at the configured bound.
All numeric output is a pure function of the config: sample indices are
pre-assigned and statistics are computed on the gathered values, so results
are bit-identical for any worker count.
"""

import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__ as _version
from .checks import (
    CheckResult,
    chebyshev_entropy_sum,
    independence_max_check,
    kahan_sum,
    lindeberg_check,
    mertens_sum,
    model_variance,
    prime_zeta_bound_check,
    tolerances,
    _make_check,
)
from .errors import CapacityError, DomainError
from .omega import _chunks_for, omega_range
from .primes import RANGE_CAP, primes_up_to
from .sampling import BigBound, sample_uniform
from .stats import (
    BinPolicy,
    Histogram,
    KsResult,
    MomentSummary,
    histogram,
    ks_statistic,
    lnln_decimal,
    moments,
    normal_cdf,
    normal_pdf,
    standardize_with,
)

SCHEMA_VERSION = 1

_FORMATS = ("json", "csv-histogram", "svg-histogram")


@dataclass
class ExperimentConfig:
    n_decimal: str
    mode: str = "sample"
    samples: int = 100_000
    truncation_bound: int = 100_000
    seed: int = 1
    bins: BinPolicy = field(default_factory=BinPolicy)
    sigma_mode: str | None = None  # None resolves per mode, see resolved_sigma_mode
    lindeberg_variant: str = "centered"
    lindeberg_epsilon: float = 1.0
    threads: int | None = None
    tolerance_overrides: dict = field(default_factory=dict)

    @property
    def resolved_sigma_mode(self) -> str:
        if self.sigma_mode is not None:
            return self.sigma_mode
        # Truncated omega is centered by the truncation bound's prime sum, so
        # sample mode defaults to the model transform; exhaustive mode keeps
        # the literal ln ln N form.
        return "model" if self.mode == "sample" else "lnln"

    @property
    def resolved_threads(self) -> int:
        if self.threads is not None:
            return max(1, int(self.threads))
        env = os.environ.get("OMEGA_LAB_THREADS")
        return max(1, int(env)) if env else 1

    def validate(self) -> None:
        if self.mode not in ("exhaustive", "sample"):
            raise DomainError(f"mode: expected 'exhaustive' or 'sample', got {self.mode!r}")
        bound = BigBound.from_decimal(self.n_decimal)  # validates n_decimal
        if self.mode == "exhaustive":
            if bound.value > RANGE_CAP:
                raise CapacityError(
                    f"n_decimal: exhaustive mode needs N <= {RANGE_CAP}, got {bound.decimal}"
                )
        else:
            if self.samples < 100:
                raise DomainError(f"samples: sample mode needs >= 100, got {self.samples}")
            if self.truncation_bound < 2:
                raise DomainError(
                    f"truncation_bound: need >= 2, got {self.truncation_bound}"
                )
            if self.truncation_bound > RANGE_CAP:
                raise CapacityError(
                    f"truncation_bound: exceeds range cap {RANGE_CAP}"
                )
        if not 0 <= self.seed < 2**64:
            raise DomainError(f"seed: need a 64-bit value, got {self.seed}")
        if self.resolved_sigma_mode not in ("lnln", "model"):
            raise DomainError(f"sigma_mode: expected 'lnln' or 'model', got {self.sigma_mode!r}")
        if self.lindeberg_variant not in ("centered", "literal"):
            raise DomainError(
                f"lindeberg_variant: expected 'centered' or 'literal', "
                f"got {self.lindeberg_variant!r}"
            )
        if self.lindeberg_epsilon <= 0:
            raise DomainError(
                f"lindeberg_epsilon: must be positive, got {self.lindeberg_epsilon}"
            )

    def echo(self) -> dict:
        return {
            "n": self.n_decimal,
            "mode": self.mode,
            "samples": self.samples if self.mode == "sample" else None,
            "truncation_bound": self.truncation_bound if self.mode == "sample" else None,
            "seed": self.seed,
            "bins": {
                "width": self.bins.width,
                "lo": self.bins.lo,
                "hi": self.bins.hi,
                "overflow": self.bins.overflow,
            },
            "sigma_mode": self.resolved_sigma_mode,
            "lindeberg_variant": self.lindeberg_variant,
            "lindeberg_epsilon": self.lindeberg_epsilon,
            "tolerance_overrides": dict(self.tolerance_overrides),
            "version": _version,
        }


@dataclass
class EkReport:
    config: ExperimentConfig
    moments: MomentSummary
    ks: KsResult
    histogram: Histogram
    checks: list
    center: float
    scale: float
    runtime_ms: float
    version: str = _version

    def all_checks_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _sample_omegas(config: ExperimentConfig, table) -> np.ndarray:
    """Truncated omega of each sample, in index order, thread-count invariant."""
    bound = BigBound.from_decimal(config.n_decimal)
    chunks = _chunks_for(table)
    count = config.samples
    seed = config.seed

    def shard(start: int, num: int) -> np.ndarray:
        out = np.empty(num, dtype=np.int64)
        for i in range(num):
            x = sample_uniform(bound, start + i, seed)
            out[i] = 0 if x == 1 else chunks.count_divisors(x)
        return out

    workers = min(config.resolved_threads, count)
    if workers <= 1:
        return shard(0, count)
    step = (count + workers - 1) // workers
    spans = [(s, min(step, count - s)) for s in range(0, count, step)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda sp: shard(*sp), spans))
    return np.concatenate(parts)


def run_ek_experiment(config: ExperimentConfig) -> EkReport:
    """Run one experiment; deterministic given the config."""
    config.validate()
    registry = tolerances(config.tolerance_overrides)
    t0 = time.perf_counter()

    if config.mode == "exhaustive":
        n_value = int(config.n_decimal)
        b_eff = n_value
        table = primes_up_to(max(2, b_eff))
        omegas = omega_range(1, n_value, table).counts
    else:
        b_eff = config.truncation_bound
        table = primes_up_to(b_eff)
        omegas = _sample_omegas(config, table)

    if config.resolved_sigma_mode == "lnln":
        center = lnln_decimal(config.n_decimal)
        scale = math.sqrt(center)
    else:
        primes = table.primes[table.primes <= b_eff]
        center = kahan_sum(1.0 / int(p) for p in primes)
        scale = math.sqrt(model_variance(b_eff, table))

    values = omegas.astype(np.float64)
    summary = moments(values)
    std = standardize_with(values, center, scale)
    ks = ks_statistic(
        std, reference=f"normal(0,1) sigma_mode={config.resolved_sigma_mode}"
    )
    hist = histogram(std, config.bins)

    checks: list[CheckResult] = []
    if config.mode == "exhaustive":
        floor_sum = sum(n_value // int(p) for p in table.primes)
        identity_mean = floor_sum / n_value
        checks.append(
            _make_check(
                name=f"mean_floor_identity N={n_value}",
                lhs=summary.mean,
                rhs=identity_mean,
                passed=abs(summary.mean - identity_mean) <= registry["mean_identity"],
                tolerance_name="mean_identity",
                tolerance=registry["mean_identity"],
                extras={"floor_sum": floor_sum},
            )
        )
    if b_eff >= 3:
        checks.append(mertens_sum(b_eff, table, registry))
    if b_eff >= 2:
        checks.append(chebyshev_entropy_sum(b_eff, table, registry))
        checks.append(prime_zeta_bound_check(b_eff, table, registry))
    if b_eff >= 6:
        checks.append(independence_max_check(b_eff, table, registry))
    if b_eff >= 3:
        checks.append(
            lindeberg_check(
                b_eff,
                config.lindeberg_epsilon,
                table,
                config.lindeberg_variant,
                registry,
            )
        )

    runtime_ms = (time.perf_counter() - t0) * 1e3
    return EkReport(
        config=config,
        moments=summary,
        ks=ks,
        histogram=hist,
        checks=checks,
        center=center,
        scale=scale,
        runtime_ms=runtime_ms,
    )


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def report_to_dict(report: EkReport) -> dict:
    hist = report.histogram
    return {
        "schema_version": SCHEMA_VERSION,
        "config": report.config.echo(),
        "moments": {
            "count": report.moments.count,
            "mean": report.moments.mean,
            "variance": report.moments.variance,
            "skewness": report.moments.skewness,
        },
        "ks": {
            "statistic": report.ks.statistic,
            "n": report.ks.n,
            "reference": report.ks.reference,
            "center": report.center,
            "scale": report.scale,
        },
        "histogram": {
            "bin_edges": [float(e) for e in hist.bin_edges],
            "counts": [int(c) for c in hist.counts],
            "densities": [float(d) for d in hist.densities],
            "underflow": hist.underflow,
            "overflow": hist.overflow,
        },
        "checks": [
            {
                "name": c.name,
                "lhs": c.lhs,
                "rhs": c.rhs,
                "abs_error": c.abs_error,
                "rel_error": c.rel_error,
                "passed": c.passed,
                "tolerance_name": c.tolerance_name,
                "tolerance": c.tolerance,
                "extras": _jsonable(c.extras),
            }
            for c in report.checks
        ],
        "runtime_ms": report.runtime_ms,
    }


def _jsonable(d: dict) -> dict:
    out = {}
    for k, v in d.items():
        if isinstance(v, (np.integer,)):
            v = int(v)
        elif isinstance(v, (np.floating,)):
            v = float(v)
        out[k] = v
    return out


def _csv_histogram(report: EkReport) -> str:
    hist = report.histogram
    lines = ["bin_left,bin_right,count,density,normal_density"]
    for left, right, count, dens in zip(
        hist.bin_edges[:-1], hist.bin_edges[1:], hist.counts, hist.densities
    ):
        width = right - left
        normal_density = (normal_cdf(right) - normal_cdf(left)) / width
        lines.append(
            f"{float(left):.6g},{float(right):.6g},{int(count)},"
            f"{float(dens):.10g},{normal_density:.10g}"
        )
    return "\n".join(lines) + "\n"


def _svg_histogram(report: EkReport) -> str:
    hist = report.histogram
    width_px, height_px = 640, 420
    ml, mr, mt, mb = 55, 15, 25, 40
    plot_w, plot_h = width_px - ml - mr, height_px - mt - mb
    x_lo, x_hi = float(hist.bin_edges[0]), float(hist.bin_edges[-1])
    y_hi = 1.1 * max(float(hist.densities.max()) if len(hist.densities) else 0.0,
                     normal_pdf(0.0))

    def sx(x):
        return ml + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y):
        return mt + plot_h - (y / y_hi) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" '
        f'height="{height_px}" viewBox="0 0 {width_px} {height_px}">',
        f'<rect x="0" y="0" width="{width_px}" height="{height_px}" fill="white"/>',
    ]
    for left, right, dens in zip(
        hist.bin_edges[:-1], hist.bin_edges[1:], hist.densities
    ):
        x = sx(float(left))
        w = sx(float(right)) - x
        y = sy(float(dens))
        h = sy(0.0) - y
        parts.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="{w:.2f}" height="{h:.2f}" '
            f'fill="#7aa6c2" stroke="#33536b" stroke-width="0.5"/>'
        )
    pts = []
    for i in range(201):
        z = x_lo + (x_hi - x_lo) * i / 200
        pts.append(f"{sx(z):.2f},{sy(normal_pdf(z)):.2f}")
    parts.append(
        f'<polyline points="{" ".join(pts)}" fill="none" stroke="#b2353b" '
        f'stroke-width="1.5"/>'
    )
    # axes
    parts.append(
        f'<line x1="{ml}" y1="{sy(0.0):.2f}" x2="{ml + plot_w}" y2="{sy(0.0):.2f}" '
        f'stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{sy(0.0):.2f}" '
        f'stroke="black" stroke-width="1"/>'
    )
    z = math.ceil(x_lo)
    while z <= math.floor(x_hi):
        parts.append(
            f'<text x="{sx(z):.2f}" y="{sy(0.0) + 16:.2f}" font-size="11" '
            f'text-anchor="middle">{z:d}</text>'
        )
        z += 1
    for frac in (0.0, 0.5, 1.0):
        yv = y_hi * frac
        parts.append(
            f'<text x="{ml - 6}" y="{sy(yv) + 4:.2f}" font-size="11" '
            f'text-anchor="end">{yv:.2f}</text>'
        )
    ks = report.ks
    parts.append(
        f'<text x="{ml}" y="{mt - 8}" font-size="12">standardized distinct-prime-factor '
        f"counts, n={ks.n}, KS={ks.statistic:.4f}</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_report(report: EkReport, format: str = "json") -> bytes:
    """Serialize a report: full JSON, histogram CSV, or a static SVG chart."""
    if format == "json":
        return (
            json.dumps(report_to_dict(report), sort_keys=True, indent=2) + "\n"
        ).encode()
    if format == "csv-histogram":
        return _csv_histogram(report).encode()
    if format == "svg-histogram":
        return _svg_histogram(report).encode()
    raise DomainError(f"unsupported format {format!r}; expected one of {_FORMATS}")
