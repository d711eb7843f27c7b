"""Acceptance suite: one test per numbered criterion, each printing a
PASS/FAIL line per clause (run with -s to see them all).

Three clauses are known to be mathematically out of reach at desk scale and
are asserted last in their tests, after every attainable clause has been
verified:

* criterion 4: the empirical variance of omega over [1, 1e7] is ~1.10, i.e.
  0.40 * ln ln 1e7; finite-range negative correlation between divisibility
  events (pq > N pairs never co-occur) keeps it far below the asymptote.
* criterion 7: the centered truncated-second-moment functional at eps = 0.1
  is ~0.98 on the whole grid; it reaches 0 only once eps*sigma(N) exceeds the
  largest summand branch (~1), i.e. ln ln N > ~100.
* criterion 8: truncated omega is lattice-valued, so the sup-distance between
  its empirical CDF and the continuous normal is ~half the modal mass: about
  0.16 at bound 1e5, above the 0.08 target for any sample size. The decrease
  of KS in the bound (the emergence trend) does hold and is asserted.
"""

import math
import time

import numpy as np
import pytest

from omegalab import (
    ExperimentConfig,
    chebyshev_entropy_sum,
    divisibility_count,
    independence_max_check,
    lindeberg_lambda,
    mertens_sum,
    model_variance,
    moments,
    omega_range,
    prime_zeta2,
    primes_up_to,
    report_to_dict,
    run_ek_experiment,
    tolerances,
)
from omegalab.checks import PI2_OVER_6
from oracles import oracle_omega

REG = tolerances()

HEADLINE = dict(
    n_decimal="1" + "0" * 100,
    mode="sample",
    samples=100_000,
    truncation_bound=100_000,
    seed=1,
    sigma_mode="model",
)

_headline_cache: dict = {}


def _headline_report(threads: int):
    if threads not in _headline_cache:
        cfg = ExperimentConfig(**HEADLINE, threads=threads)
        t0 = time.perf_counter()
        report = run_ek_experiment(cfg)
        _headline_cache[threads] = (report, time.perf_counter() - t0)
    return _headline_cache[threads]


def _line(ok: bool, label: str) -> bool:
    print(f"[{'PASS' if ok else 'FAIL'}] {label}")
    return ok


def test_criterion_1_omega_oracle_equivalence():
    t0 = time.perf_counter()
    counts = omega_range(1, 100_000).counts
    mismatches = sum(
        1 for n in range(1, 100_001) if counts[n - 1] != oracle_omega(n)
    )
    elapsed = time.perf_counter() - t0
    ok_exact = _line(
        mismatches == 0,
        f"criterion 1: omega over [1, 1e5] vs trial division, {mismatches} mismatches",
    )
    ok_time = _line(elapsed < 5.0, f"criterion 1: runtime {elapsed:.2f}s < 5s")
    assert ok_exact
    assert ok_time


def test_criterion_2_divisibility_floor_identity(table_1e3):
    n = 1_000_000
    grid = np.arange(1, n + 1)
    bad = []
    for p in (int(q) for q in table_1e3.primes if q <= 100):
        enumerated = int(np.count_nonzero(grid % p == 0))
        if enumerated != divisibility_count(n, p):
            bad.append(p)
    ok = _line(
        not bad,
        f"criterion 2: floor(N/p) identity exact for all 25 primes <= 100, N=1e6",
    )
    assert ok, bad


def test_criterion_3_mertens_and_mean_identity(table_1e6):
    res = mertens_sum(1_000_000, table_1e6)
    gap = res.extras["gap"]
    ok_gap = _line(
        abs(gap - 0.2615) <= REG["mertens_gap"],
        f"criterion 3: sum 1/p - ln ln 1e6 = {gap:.6f} within 0.2615 +- 0.01",
    )
    n = 1_000_000
    counts = omega_range(1, n, table_1e6).counts
    mean = float(counts.astype(np.float64).mean())
    floor_mean = sum(n // int(p) for p in table_1e6.primes) / n
    err = abs(mean - floor_mean)
    ok_mean = _line(
        err <= REG["mean_identity"],
        f"criterion 3: exhaustive mean vs floor-sum identity, error {err:.2e} <= 1e-12",
    )
    assert ok_gap
    assert ok_mean


def test_criterion_4_variance_band():
    n = 10_000_000
    table = primes_up_to(n)
    for grid_n in (1_000, 100_000, n):
        z = prime_zeta2(grid_n, table)
        assert _line(
            z < PI2_OVER_6,
            f"criterion 4: sum 1/p^2 = {z:.6f} < pi^2/6 at N={grid_n}",
        )
    counts = omega_range(1, n, table).counts
    var = moments(counts.astype(np.float64)).variance
    lnln = math.log(math.log(n))
    ratio = var / lnln
    lo, hi = REG["variance_ratio_low"], REG["variance_ratio_high"]
    ok_band = _line(
        lo <= ratio <= hi,
        f"criterion 4: empirical var(omega[1,1e7]) = {var:.4f}, "
        f"ratio to ln ln N = {ratio:.4f}, band [{lo}, {hi}]",
    )
    assert ok_band, (
        f"variance ratio {ratio:.4f} outside [{lo}, {hi}]: finite-range "
        "divisibility events are negatively correlated, so the desk-scale "
        "variance sits well below the ln ln N asymptote"
    )


def test_criterion_5_chebyshev_gap_band(table_1e6):
    gaps = []
    for n in (1_000, 10_000, 100_000, 1_000_000):
        res = chebyshev_entropy_sum(n, table_1e6)
        gaps.append(res.extras["gap"])
        assert _line(
            1.5 <= gaps[-1] <= 2.5,
            f"criterion 5: log2 N - sum log2(p)/p = {gaps[-1]:.4f} in [1.5, 2.5] at N={n}",
        )
    spread = max(gaps) - min(gaps)
    ok = _line(spread < 0.3, f"criterion 5: gap spread {spread:.4f} < 0.3 across grid")
    assert ok


def test_criterion_6_independence_floor_bound(table_1e3):
    res = independence_max_check(1_000_000, table_1e3, max_prime=50)
    ok = _line(
        res.abs_error <= 3e-6,
        f"criterion 6: max pair error {res.abs_error:.3e} <= 3e-6 "
        f"over p < q <= 50, N = 1e6",
    )
    assert ok and res.passed


def test_criterion_7_lindeberg(table_1e6):
    lam_2 = lindeberg_lambda(10, 2.0, table_1e6).lambda_value
    lam_001 = lindeberg_lambda(10, 0.01, table_1e6).lambda_value
    ok_hand = _line(
        lam_2 == 0.0 and lam_001 == 1.0,
        f"criterion 7: N=10 hand values reproduced exactly (0 at eps=2, 1 at eps=0.01)",
    )
    assert ok_hand

    grid = (1_000, 10_000, 100_000, 1_000_000)
    slack = REG["lindeberg_slack"]
    eps_grid = (0.01, 0.1, 0.5, 1.0, 2.0)
    monotone_ok, range_ok = True, True
    for n in grid:
        vals = [lindeberg_lambda(n, e, table_1e6).lambda_value for e in eps_grid]
        monotone_ok &= all(a >= b - 1e-15 for a, b in zip(vals, vals[1:]))
        range_ok &= all(0.0 <= v <= 1.0 + slack for v in vals)
    assert _line(monotone_ok, "criterion 7: lambda nonincreasing in eps on grid")
    assert _line(range_ok, "criterion 7: lambda within [0, 1 + 1e-9] on grid")

    lams = {n: lindeberg_lambda(n, 0.1, table_1e6).lambda_value for n in grid[1:]}
    ok_zero = _line(
        all(v == 0.0 for v in lams.values()),
        f"criterion 7: centered lambda(eps=0.1) = 0 for N >= 1e4 "
        f"(observed {', '.join(f'{v:.4f}@1e{int(math.log10(k))}' for k, v in lams.items())})",
    )
    assert ok_zero, (
        f"lambda(0.1) = {lams}: the functional reaches 0 only when "
        "eps*sigma(N) exceeds the largest branch magnitude (~1), which needs "
        "ln ln N > ~100; at eps >= 0.7 the zero IS reached on this grid "
        "(see test_lindeberg_vanishes_on_grid_for_moderate_epsilon)"
    )


def test_criterion_8_emergence_trend_and_headline_ks():
    report, headline_s = _headline_report(threads=1)
    ks_head = report.ks.statistic

    trend = {}
    trend_s = 0.0
    for bound in (1_000, 10_000, 100_000, 1_000_000):
        cfg = ExperimentConfig(
            **{**HEADLINE, "samples": 20_000, "truncation_bound": bound}
        )
        t0 = time.perf_counter()
        trend[bound] = run_ek_experiment(cfg).ks.statistic
        trend_s += time.perf_counter() - t0

    ks_list = [trend[b] for b in sorted(trend)]
    inversions = sum(1 for a, b in zip(ks_list, ks_list[1:]) if b > a)
    ok_trend = _line(
        inversions <= int(REG["ks_trend_inversions"]),
        "criterion 8: KS decreases across B in {1e3..1e6} "
        f"({', '.join(f'{v:.4f}' for v in ks_list)}), inversions = {inversions}",
    )
    total_s = headline_s + trend_s
    ok_time = _line(total_s < 600.0, f"criterion 8: runtime {total_s:.0f}s < 600s")
    ok_ks = _line(
        ks_head <= REG["ks_headline"],
        f"criterion 8: headline KS = {ks_head:.4f} vs target <= 0.08 "
        "(N=1e100, B=1e5, 1e5 samples, seed 1, model sigma)",
    )
    assert ok_trend
    assert ok_time
    assert ok_ks, (
        f"KS = {ks_head:.4f}: truncated omega is integer-valued, so the "
        "empirical CDF jumps by the modal mass (~0.26 at B=1e5) and the "
        "sup-distance to the continuous normal cannot fall below ~0.13 for "
        "any sample size; 0.08 would need a truncation bound near 1e260"
    )


def test_criterion_9_thread_count_determinism():
    rep_1, _ = _headline_report(threads=1)
    rep_8, _ = _headline_report(threads=8)
    d1, d8 = report_to_dict(rep_1), report_to_dict(rep_8)
    d1.pop("runtime_ms"), d8.pop("runtime_ms")
    ok = _line(
        d1 == d8,
        "criterion 9: thread counts 1 and 8 produce identical numeric fields",
    )
    assert ok
