"""omegalab: distinct prime divisor statistics at desk scale.

Sieve-exact omega counts, truncated omega for hundred-digit integers,
deterministic uniform sampling, prime-sum checks, and normal-order
distribution experiments with KS scoring.
"""

__version__ = "0.1.0"

from .errors import (
    CacheFormatError,
    CapacityError,
    DomainError,
    OmegaLabError,
    PreconditionError,
)
from .primes import (
    DEFAULT_SEGMENT,
    RANGE_CAP,
    PrimeTable,
    SpfTable,
    iter_segments,
    primes_up_to,
    segment_primes,
    sieve_segment,
    spf_table,
)
from .omega import (
    OmegaRange,
    TruncatedOmega,
    omega_range,
    omega_truncated,
    omega_truncated_many,
    omega_truncated_naive,
    omega_via_spf,
)
from .sampling import (
    BigBound,
    SampleBatch,
    exhaustive_range,
    sample_batch,
    sample_uniform,
)
from .stats import (
    BinPolicy,
    Histogram,
    KsResult,
    MomentSummary,
    StandardizedSample,
    histogram,
    ks_statistic,
    ln_decimal,
    lnln_decimal,
    moments,
    normal_cdf,
    standardize,
    standardize_with,
)
from .checks import (
    CheckResult,
    LindebergReport,
    chebyshev_entropy_sum,
    count_multiples,
    divisibility_count,
    divisibility_identity_check,
    independence_check,
    independence_max_check,
    info_content,
    lindeberg_grid,
    lindeberg_lambda,
    mertens_sum,
    model_variance,
    prime_zeta2,
    prime_zeta_bound_check,
    tolerances,
)
from .experiment import (
    EkReport,
    ExperimentConfig,
    emit_report,
    report_to_dict,
    run_ek_experiment,
)

__all__ = [
    "__version__",
    "OmegaLabError",
    "DomainError",
    "CapacityError",
    "PreconditionError",
    "CacheFormatError",
    "RANGE_CAP",
    "DEFAULT_SEGMENT",
    "PrimeTable",
    "SpfTable",
    "primes_up_to",
    "spf_table",
    "sieve_segment",
    "segment_primes",
    "iter_segments",
    "OmegaRange",
    "TruncatedOmega",
    "omega_range",
    "omega_via_spf",
    "omega_truncated",
    "omega_truncated_naive",
    "omega_truncated_many",
    "BigBound",
    "SampleBatch",
    "sample_uniform",
    "sample_batch",
    "exhaustive_range",
    "StandardizedSample",
    "KsResult",
    "BinPolicy",
    "Histogram",
    "MomentSummary",
    "standardize",
    "standardize_with",
    "normal_cdf",
    "ks_statistic",
    "histogram",
    "moments",
    "ln_decimal",
    "lnln_decimal",
    "CheckResult",
    "LindebergReport",
    "divisibility_count",
    "count_multiples",
    "divisibility_identity_check",
    "info_content",
    "mertens_sum",
    "chebyshev_entropy_sum",
    "independence_check",
    "independence_max_check",
    "model_variance",
    "prime_zeta2",
    "prime_zeta_bound_check",
    "lindeberg_lambda",
    "lindeberg_grid",
    "tolerances",
    "ExperimentConfig",
    "EkReport",
    "run_ek_experiment",
    "emit_report",
    "report_to_dict",
]
