"""Optimal stopping rules for secretary-type problems and the distribution of search duration."""

from .errors import ConvergenceError, DomainError, ExactModeUnavailable, UnsupportedVariantError
from .policies import (
    ReservationValue,
    SettingSpec,
    SingleThreshold,
    StageThresholds,
    ValueCutoffs,
    Variant,
    asymptotic_threshold,
    decaying_cutoffs,
    gm_cutoffs,
    moser_cutoffs,
    objective_value,
    reservation_value,
    single_threshold,
    stage_thresholds,
)
from .duration import (
    AsymptoticReport,
    DurationDistribution,
    SummaryStats,
    asymptotic_report,
    cutoff_pmf,
    gm_pmf,
    house_selling_stats,
    no_info_mean,
    no_info_pmf,
)
from .montecarlo import SimulationSummary, enumerate_exact, simulate

__version__ = "0.1.0"
