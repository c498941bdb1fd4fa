"""Distributions of the search duration T.

Exact finite-N probability mass functions for the threshold, value-cutoff
and candidate-cutoff rules, summary statistics, and the limiting mean and
median proportions of applicants interviewed for each variant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional

import numpy as np

from .errors import DomainError, ExactModeUnavailable, UnsupportedVariantError
from .policies import (
    FI_BEST_CHOICE_DURATION_CONSTANT,
    FI_DURATION_CONSTANT,
    GM_CONSTANT,
    GUSEIN_ZADE_LIMIT_FRACTION,
    RECORD_VARIANTS,
    SettingSpec,
    SingleThreshold,
    StageThresholds,
    ValueCutoffs,
    Variant,
    asymptotic_threshold,
    decaying_cutoffs,
    lindley_stages,
    lindley_v_infinity,
    stage_thresholds,
)
from .specfun import Bracket, digamma, exp_integral_e1, integrate, lambert_w, solve_root

GM_EXACT_CAP = 20_000

# Ties in the CDF are decided with this slack so that a CDF equal to p up to
# rounding counts as reaching p.
_CDF_SLACK = 1e-12


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    median: int
    quantiles: Dict[float, int] = field(default_factory=dict)
    mean_fraction: Optional[float] = None
    median_fraction: Optional[float] = None
    success_prob: Optional[float] = None
    no_choice_prob: Optional[float] = None


@dataclass(frozen=True, eq=False)
class DurationDistribution:
    """PMF of T over 1..N.

    ``pmf[x - 1]`` is Pr(T = x). When the rule can end without a choice,
    that mass sits inside ``pmf[N - 1]`` and is also reported as
    ``no_choice_mass``.
    """

    N: int
    pmf: np.ndarray
    no_choice_mass: Optional[float] = None
    success_prob: Optional[float] = None

    def __post_init__(self):
        arr = np.asarray(self.pmf, dtype=float)
        if arr.shape != (self.N,):
            raise DomainError(f"pmf must have length N={self.N}, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "pmf", arr)

    @property
    def support(self) -> np.ndarray:
        return np.arange(1, self.N + 1)

    def cdf(self) -> np.ndarray:
        return np.cumsum(self.pmf)

    def mean(self) -> float:
        return float(np.dot(self.support.astype(float), self.pmf))

    def quantile(self, p: float) -> int:
        """Smallest x with CDF(x) >= p."""
        if not 0.0 < p < 1.0:
            raise DomainError(f"p must lie in (0, 1), got {p}")
        idx = int(np.searchsorted(self.cdf(), p - _CDF_SLACK, side="left"))
        return min(idx, self.N - 1) + 1

    def median(self) -> int:
        return self.quantile(0.5)

    def summary(self, quantiles: Iterable[float] = ()) -> SummaryStats:
        mean = self.mean()
        med = self.median()
        return SummaryStats(
            mean=mean,
            median=med,
            quantiles={float(q): self.quantile(q) for q in quantiles},
            mean_fraction=mean / self.N,
            median_fraction=med / self.N,
            success_prob=self.success_prob,
            no_choice_prob=self.no_choice_mass,
        )


@dataclass(frozen=True)
class AsymptoticReport:
    """Limiting proportions of the pool interviewed, as N grows."""

    mean_fraction: float
    median_fraction: Optional[float] = None
    no_choice_prob: Optional[float] = None
    success_prob: Optional[float] = None
    threshold_fraction: Optional[float] = None
    constant_c: Optional[float] = None
    conditional_mean_fraction: Optional[float] = None


# ---------------------------------------------------------------------------
# No-information threshold rules


def _check_threshold(N: int, policy: SingleThreshold) -> int:
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    if policy.c > N:
        raise DomainError(f"threshold {policy.c} exceeds N={N}")
    return policy.first_eligible


def no_info_pmf(N: int, policy: SingleThreshold) -> DurationDistribution:
    """PMF of T when eligible applicants arrive at position i with probability 1/i.

    With f the first eligible position, Pr(T = x) = (f-1)/(x(x-1)) for
    f <= x < N and the last applicant takes the remaining (f-1)/(N-1),
    whether chosen or taken by default.
    """
    f = _check_threshold(N, policy)
    pmf = np.zeros(N)
    if f <= 1:
        pmf[0] = 1.0
    elif f >= N:
        pmf[N - 1] = 1.0
    else:
        x = np.arange(f, N, dtype=float)
        pmf[f - 1 : N - 1] = (f - 1) / (x * (x - 1.0))
        pmf[N - 1] = (f - 1) / (N - 1.0)
    return DurationDistribution(N, pmf)


def no_info_mean(N: int, policy: SingleThreshold) -> float:
    """(f-1)[N/(N-1) + psi(N-1) - psi(f-1)] with f the first eligible position."""
    f = _check_threshold(N, policy)
    if f <= 1:
        return 1.0
    if f >= N:
        return float(N)
    return (f - 1) * (N / (N - 1.0) + digamma(N - 1) - digamma(f - 1))


def threshold_mean(N: int, c: float) -> float:
    """Mean of T for a real-valued first eligible position ``c`` in (1, N].

    Same expression as :func:`no_info_mean`; useful for expansions in a
    continuous threshold such as c = sqrt(N).
    """
    if N < 2 or not 1.0 < c <= N:
        raise DomainError(f"need N >= 2 and 1 < c <= N, got N={N}, c={c}")
    return (c - 1.0) * (N / (N - 1.0) + digamma(N - 1) - digamma(c - 1.0))


def no_info_quantile(c: int, p: float, N: Optional[int] = None):
    """Quantile (c-1)/(1-p) of T under a threshold rule.

    Without ``N`` the continuous value is returned; with ``N`` it is rounded
    up to an integer and capped at N.
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie in (0, 1), got {p}")
    if c < 2:
        raise DomainError(f"threshold must be >= 2, got {c}")
    q = (c - 1) / (1.0 - p)
    if N is None:
        return q
    return int(min(N, math.ceil(q - 1e-9)))


def asymptotic_fraction_single(x: float) -> float:
    """Mean proportion x[1 + ln(1/x)] interviewed under threshold fraction x."""
    if not 0.0 < x <= 1.0:
        raise DomainError(f"x must lie in (0, 1], got {x}")
    return x * (1.0 - math.log(x))


def inverse_threshold_for_mean(p: float) -> float:
    """Threshold fraction whose mean proportion interviewed is ``p``."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie in (0, 1), got {p}")
    return math.exp(1.0 + lambert_w(-p / math.e, "lower"))


# ---------------------------------------------------------------------------
# Value cutoffs


def cutoff_pmf(N: int, policy: ValueCutoffs) -> DurationDistribution:
    """PMF of T when applicant x is accepted with probability 1 - P_x.

    Pr(T = x) = (1 - P_x) prod_{i<x} P_i, with the products taken in log
    space. Mass left after position N counts as no choice.
    """
    if policy.candidate_only:
        raise DomainError("candidate-only cutoffs need gm_pmf")
    P = policy.cutoffs
    if P.size != N:
        raise DomainError(f"cutoff vector has length {P.size}, expected {N}")
    with np.errstate(divide="ignore"):
        logp = np.log(P)
    log_reach = np.concatenate(([0.0], np.cumsum(logp)))
    reach = np.exp(log_reach)
    pmf = (1.0 - P) * reach[:-1]
    residual = float(reach[-1])
    no_choice = None
    if P[-1] > 0.0:
        pmf[-1] += residual
        no_choice = residual
    return DurationDistribution(N, pmf, no_choice_mass=no_choice)


def cutoff_mean(policy: ValueCutoffs) -> float:
    """E(T) = sum_x Pr(T >= x) for value cutoffs."""
    P = policy.cutoffs
    with np.errstate(divide="ignore"):
        reach = np.exp(np.concatenate(([0.0], np.cumsum(np.log(P[:-1])))))
    return float(np.sum(reach))


def decaying_pool_distribution(N: int) -> DurationDistribution:
    return cutoff_pmf(N, decaying_cutoffs(N))


def gm_pmf(N: int, policy: ValueCutoffs, cap: int = GM_EXACT_CAP) -> DurationDistribution:
    """PMF of T for candidate-only cutoffs (best-choice type rules).

    The chance of passing the first x applicants without stopping is
    (1/x) sum_{i<=x} P_i^x, so Pr(T = x) is the difference of consecutive
    terms. The work is quadratic in N, hence ``cap``.
    """
    if not policy.candidate_only:
        raise DomainError("gm_pmf expects candidate-only cutoffs")
    P = policy.cutoffs
    if P.size != N:
        raise DomainError(f"cutoff vector has length {P.size}, expected {N}")
    if N > cap:
        raise ExactModeUnavailable(
            f"exact mode unavailable: N={N} exceeds the cap of {cap}; use asymptotic_report"
        )
    with np.errstate(divide="ignore"):
        logp = np.log(P)
    # reach[x] = Pr(no stop among the first x applicants)
    reach = np.empty(N + 1)
    reach[0] = 1.0
    for x in range(1, N + 1):
        with np.errstate(under="ignore"):
            reach[x] = float(np.sum(np.exp(x * logp[:x]))) / x
    pmf = reach[:-1] - reach[1:]
    pmf[-1] = reach[N - 1]
    return DurationDistribution(N, pmf, no_choice_mass=float(reach[N]))


# ---------------------------------------------------------------------------
# House selling


def house_selling_stats(cost: float, quantiles: Iterable[float] = ()) -> SummaryStats:
    """Geometric law of the number of offers with success probability sqrt(2 cost)."""
    if not cost > 0.0:
        raise DomainError(f"cost must be positive, got {cost}")
    p = min(1.0, math.sqrt(2.0 * cost))

    def q(prob):
        if p >= 1.0:
            return 1
        return max(1, math.ceil(math.log1p(-prob) / math.log1p(-p) - 1e-12))

    return SummaryStats(
        mean=1.0 / p,
        median=q(0.5),
        quantiles={float(pr): q(pr) for pr in quantiles},
    )


# ---------------------------------------------------------------------------
# Multi-stage rules


def multi_stage_cdf(stages: StageThresholds, m: float) -> float:
    """Limiting CDF of T/N: 1 - prod_{i<=d} c_i / m^d, d = number of stages below m."""
    c = stages.fractions
    d = sum(1 for ci in c if ci < m)
    if d == 0:
        return 0.0
    return 1.0 - math.prod(c[:d]) / m**d


def multi_stage_quantile(stages: StageThresholds, p: float) -> float:
    """Fraction m with multi_stage_cdf(m) = p, capped at 1."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie in (0, 1), got {p}")
    c = stages.fractions
    bounds = c + (1.0,)
    prod = 1.0
    for d in range(1, len(c) + 1):
        prod *= c[d - 1]
        m = (prod / (1.0 - p)) ** (1.0 / d)
        if c[d - 1] < m <= bounds[d]:
            return m
    return 1.0


def multi_stage_mean(stages: StageThresholds) -> float:
    """Limiting E(T)/N for stage thresholds, closing the last stage at 1."""
    c = stages.fractions
    S = len(c)
    ext = c + (1.0,)
    total = c[0] * math.log(ext[1] / c[0])
    prod = c[0]
    for d in range(2, S + 1):
        prod *= c[d - 1]
        total += d / (d - 1.0) * prod * (ext[d - 1] ** -(d - 1) - ext[d] ** -(d - 1))
    return total + prod


@dataclass(frozen=True)
class LindleySeries:
    head_sum: float
    tail: float
    tail_bound: float
    mean_fraction: float


LINDLEY_TAIL_BOUND = 4.99106 / 70278


def _lindley_terms(k_max: int) -> np.ndarray:
    k = np.arange(1, k_max + 1, dtype=float)
    j = np.arange(2, k_max + 2, dtype=float)
    logs = np.cumsum(-(j - 1.0) / (j + 1.0) * np.log1p(2.0 / j))
    return np.exp(logs) / (k * (k + 1.0))


def lindley_series(terms: int = 50) -> LindleySeries:
    """Mean proportion interviewed under the Lindley stage rule.

    The series is summed to ``terms`` terms; the remainder is evaluated
    numerically and reported next to its analytic bound.
    """
    head = float(math.fsum(_lindley_terms(terms)))
    full = _lindley_terms(200_000)
    tail = float(math.fsum(full[terms:]))
    v = lindley_v_infinity()
    mean = (0.5 * math.log(3.0) + 2.0 - head) / v
    return LindleySeries(head, tail, LINDLEY_TAIL_BOUND, mean)


def lindley_asymptotic_mean() -> float:
    return lindley_series().mean_fraction


# ---------------------------------------------------------------------------
# Full-information candidate rules, large N


def gm_mean_fraction(c: float) -> float:
    """(e^c - 1 - c) E1(c) + e^-c."""
    return (math.expm1(c) - c) * exp_integral_e1(c) + math.exp(-c)


def gm_no_choice_fraction(c: float) -> float:
    """e^-c - c E1(c), the chance that nobody is chosen."""
    return math.exp(-c) - c * exp_integral_e1(c)


def gm_median_equation(m: float, c: float, tol: float = 1e-10) -> float:
    """m - 2 * integral_0^m exp(-c m/(1-x)) dx; zero at the median fraction."""
    return m - 2.0 * integrate(lambda x: math.exp(-c * m / (1.0 - x)), 0.0, m, tol=tol)


def gm_median_fraction(c: float) -> float:
    return solve_root(lambda m: gm_median_equation(m, c), Bracket(0.01, 0.99), tol=1e-13)


# ---------------------------------------------------------------------------
# Approximations and conjectures


def bearden_mean_approx(N: float) -> float:
    """(sqrt(N) - 1)(1 + ln(N)/2) + 3/2, the large-N expansion of the Bearden mean."""
    return (math.sqrt(N) - 1.0) * (1.0 + 0.5 * math.log(N)) + 1.5


def decaying_pool_conjecture(N: int) -> Dict[str, float]:
    """Ratios of the exact decaying-pool mean and median to sqrt(N/2) and ln 2 sqrt(N/2)."""
    dist = decaying_pool_distribution(N)
    scale = math.sqrt(N / 2.0)
    mean, med = dist.mean(), dist.median()
    return {
        "mean": mean,
        "median": float(med),
        "mean_ratio": mean / scale,
        "median_ratio": med / (math.log(2.0) * scale),
    }


# ---------------------------------------------------------------------------
# Limiting reports


def _threshold_report(x: float, **extra) -> AsymptoticReport:
    return AsymptoticReport(
        mean_fraction=asymptotic_fraction_single(x),
        median_fraction=min(1.0, 2.0 * x),
        threshold_fraction=x,
        **extra,
    )


def _gm_report(c: float, success: bool) -> AsymptoticReport:
    mean = gm_mean_fraction(c)
    return AsymptoticReport(
        mean_fraction=mean,
        median_fraction=gm_median_fraction(c),
        no_choice_prob=gm_no_choice_fraction(c),
        success_prob=mean if success else None,
        constant_c=c,
    )


def asymptotic_report(setting: SettingSpec) -> AsymptoticReport:
    """Limiting mean and median of T/N for the variant of ``setting``."""
    v = setting.variant
    if v is Variant.SECRETARY:
        return _threshold_report(math.exp(-1.0), success_prob=math.exp(-1.0))
    if v is Variant.POSTDOC:
        return _threshold_report(0.5, success_prob=0.25)
    if v is Variant.SAKAGUCHI:
        x = math.exp(-0.5)
        return _threshold_report(
            x, no_choice_prob=x, conditional_mean_fraction=1.0 / (2.0 * (math.exp(0.5) - 1.0))
        )
    if v is Variant.SMITH:
        x = asymptotic_threshold(setting)
        p = setting.p
        if p == 1.0:
            return _threshold_report(x, success_prob=x)
        return AsymptoticReport(
            mean_fraction=x * (1.0 - math.log(p) / (1.0 - p)), threshold_fraction=x
        )
    if v is Variant.PRESMAN_SONIN:
        e2 = math.exp(2.0)
        return AsymptoticReport(mean_fraction=(4.0 * e2 - 1.0) / e2**2, threshold_fraction=1.0 / e2)
    if v in RECORD_VARIANTS and v is not Variant.BEARDEN:
        return _threshold_report(asymptotic_threshold(setting))
    if v is Variant.MOSER:
        return AsymptoticReport(mean_fraction=1.0 / 3.0, median_fraction=1.0 - math.sqrt(0.5))
    if v is Variant.GM_BEST_CHOICE:
        return _gm_report(GM_CONSTANT, success=True)
    if v is Variant.FI_DURATION:
        return _gm_report(FI_DURATION_CONSTANT, success=False)
    if v is Variant.FI_BEST_CHOICE_DURATION:
        return _gm_report(FI_BEST_CHOICE_DURATION_CONSTANT, success=False)
    if v is Variant.LINDLEY:
        stages = lindley_stages(50)
        return AsymptoticReport(
            mean_fraction=lindley_asymptotic_mean(),
            median_fraction=multi_stage_quantile(stages, 0.5),
            threshold_fraction=stages.fractions[0],
        )
    if v is Variant.GUSEIN_ZADE:
        if setting.S == math.inf:
            t = GUSEIN_ZADE_LIMIT_FRACTION
            return AsymptoticReport(mean_fraction=t, median_fraction=t, threshold_fraction=t)
        stages = stage_thresholds(setting)
        return AsymptoticReport(
            mean_fraction=multi_stage_mean(stages),
            median_fraction=multi_stage_quantile(stages, 0.5),
            threshold_fraction=stages.fractions[0],
        )
    raise UnsupportedVariantError(f"no limiting proportions for {v.value}")
