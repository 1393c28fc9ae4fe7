"""Boole-Bell inequality analysis of digitized exchange-rate data.

The pipeline digitizes daily exchange-rate changes to +-1 values, splits
them into three equal time segments, and tests every ordered currency
triple against the three-correlation bound |C1 +- C2| -+ C3 - 1 <= 0.
Violations are possible because segmented data need not be reshufflable
into triples; the package also computes the maximum reshufflable fraction
gamma by linear programming, which caps the tested quantity at
2*(1 - gamma) for any +-1 data whatsoever. A separate module reconstructs
trivariate distributions on {-1,+1}^3 from their moments, and a synthetic
generator reproduces the reference random and singlet-mimicking
experiments.
"""

__version__ = "0.1.0"

from .correlations import (
    POOLED,
    CorrelationRecord,
    CorrelationSet,
    all_correlations,
    correlate,
    pooled_correlate,
    pooled_correlations,
)
from .errors import (
    ConvergenceError,
    DataError,
    DomainError,
    FormatError,
    FxBellError,
    InsufficientDataError,
    NoDistributionError,
)
from .fine import (
    K123Interval,
    MomentSet,
    Three3Report,
    Trivariate,
    check_three3,
    construct_trivariate,
    feasibility_oracle,
    k123_interval,
    moments_from_trivariate,
)
from .inequalities import (
    SettingVector,
    SingletDemoResult,
    TripleTest,
    bell_like_lhs,
    model_free_check,
    scan_triples,
    significance,
    singlet_demo,
)
from .ingest import (
    CurrencyId,
    RateTable,
    SegmentedData,
    SignMatrix,
    forward_diff_signs,
    load_rate_table,
    parse_rate_table,
    rate_table_to_csv,
    segment,
)
from .rng import SplitMix64
from .synthetic import (
    SyntheticConfig,
    SyntheticReport,
    gen_biased,
    gen_random,
    run_experiment,
    singlet_experiment,
)
from .triples import (
    PairCounts,
    TripleLpProblem,
    TripleLpSolution,
    TRIPLE_PATTERNS,
    build_lp,
    count_pairs,
    gamma_for_counts,
    gamma_for_triple,
    pair_counts_from_arrays,
    pair_counts_from_segments,
    solve_max_triples,
)

__all__ = [
    "__version__",
    # errors
    "FxBellError",
    "FormatError",
    "InsufficientDataError",
    "DomainError",
    "DataError",
    "ConvergenceError",
    "NoDistributionError",
    # ingest
    "CurrencyId",
    "RateTable",
    "SignMatrix",
    "SegmentedData",
    "parse_rate_table",
    "load_rate_table",
    "rate_table_to_csv",
    "forward_diff_signs",
    "segment",
    # correlations
    "POOLED",
    "CorrelationRecord",
    "CorrelationSet",
    "correlate",
    "all_correlations",
    "pooled_correlate",
    "pooled_correlations",
    # inequalities
    "bell_like_lhs",
    "model_free_check",
    "significance",
    "scan_triples",
    "singlet_demo",
    "TripleTest",
    "SettingVector",
    "SingletDemoResult",
    # triples
    "TRIPLE_PATTERNS",
    "PairCounts",
    "TripleLpProblem",
    "TripleLpSolution",
    "count_pairs",
    "pair_counts_from_arrays",
    "pair_counts_from_segments",
    "build_lp",
    "solve_max_triples",
    "gamma_for_triple",
    "gamma_for_counts",
    # fine
    "MomentSet",
    "Trivariate",
    "K123Interval",
    "Three3Report",
    "moments_from_trivariate",
    "check_three3",
    "k123_interval",
    "construct_trivariate",
    "feasibility_oracle",
    # synthetic
    "SplitMix64",
    "SyntheticConfig",
    "SyntheticReport",
    "gen_random",
    "gen_biased",
    "run_experiment",
    "singlet_experiment",
]
