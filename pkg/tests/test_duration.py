import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from stopdur import duration as du
from stopdur import policies as po
from stopdur.errors import DomainError, ExactModeUnavailable, UnsupportedVariantError
from stopdur.montecarlo import enumerate_exact_fractions, simulate
from stopdur.policies import SettingSpec, SingleThreshold, StageThresholds, ValueCutoffs, Variant


# ---- no-information threshold rules

def test_no_info_pmf_accepts_first_when_c_is_one():
    d = du.no_info_pmf(5, SingleThreshold(1, 1))
    assert d.pmf.tolist() == [1.0, 0.0, 0.0, 0.0, 0.0]


def test_no_info_pmf_rejects_threshold_above_n():
    with pytest.raises(DomainError):
        du.no_info_pmf(5, SingleThreshold(6, 6))


def test_dowry_n9_median_is_twice_c_minus_one():
    d = du.no_info_pmf(9, SingleThreshold(4, 4))
    assert d.median() == 6


@pytest.mark.parametrize("N,c", [(6, 3), (8, 1), (8, 4), (8, 8), (7, 2)])
def test_no_info_pmf_matches_enumeration_exactly(N, c):
    s = SettingSpec(Variant.SECRETARY, N=N)
    ex = enumerate_exact_fractions(s, SingleThreshold(c, c))
    d = du.no_info_pmf(N, SingleThreshold(c, c))
    assert np.allclose(d.pmf, [float(p) for p in ex.pmf], atol=1e-12, rtol=0)
    mean = sum(Fraction(x) * p for x, p in enumerate(ex.pmf, start=1))
    assert du.no_info_mean(N, SingleThreshold(c, c)) == pytest.approx(float(mean), abs=1e-12)


def test_postdoc_atom_is_passed_over_share():
    # with c = 5 passed over and N = 10 the last-position atom is 5/9,
    # which enumeration confirms for every even N it can reach
    d = du.no_info_pmf(10, po.single_threshold(SettingSpec(Variant.POSTDOC, N=10)))
    assert d.pmf[-1] == pytest.approx(5 / 9, abs=1e-15)
    s = SettingSpec(Variant.POSTDOC, N=8)
    ex = enumerate_exact_fractions(s, po.single_threshold(s))
    assert ex.pmf[-1] == Fraction(4, 7)
    assert ex.pmf[-1] != Fraction(1, 2) + Fraction(1, 8)


@pytest.mark.parametrize("N", [5, 9, 25, 100])
def test_closed_form_mean_equals_weighted_pmf(N):
    for variant in (Variant.SECRETARY, Variant.BEARDEN, Variant.POSTDOC):
        pol = po.single_threshold(SettingSpec(variant, N=N))
        d = du.no_info_pmf(N, pol)
        assert du.no_info_mean(N, pol) == pytest.approx(d.mean(), abs=1e-9)
        assert d.pmf.sum() == pytest.approx(1.0, abs=1e-12)
        assert np.all(d.pmf >= 0)


def test_reference_threshold_means_carry_an_offset():
    # Diagnostic: the reference Bearden and dowry means for N = 100 exceed
    # the exact mean by (c - 1)/(N - 1), the signature of psi(N) in place
    # of psi(N - 1).
    for c, reference in ((10, 31.2266), (38, 74.4780)):
        exact = du.no_info_mean(100, SingleThreshold(c, c))
        assert reference - exact == pytest.approx((c - 1) / 99, abs=1e-4)
        with_psi_n = (c - 1) * (100 / 99 + po.digamma(100) - po.digamma(c - 1))
        assert with_psi_n == pytest.approx(reference, abs=5e-5)


def test_no_info_mean_by_simulation():
    s = SettingSpec(Variant.SECRETARY, N=100)
    pol = po.single_threshold(s)
    sim = simulate(s, pol, 300_000, seed=5)
    assert abs(sim.mean_T - du.no_info_mean(100, pol)) < 4 * sim.se_mean


@pytest.mark.parametrize("p,factor", [(0.5, 2.0), (0.75, 4.0), (0.2, 1.25)])
def test_no_info_quantile(p, factor):
    assert du.no_info_quantile(7, p) == pytest.approx(6 * factor)
    assert du.no_info_quantile(7, p, N=10) <= 10


def test_no_info_quantile_domain():
    with pytest.raises(DomainError):
        du.no_info_quantile(3, 1.0)
    with pytest.raises(DomainError):
        du.no_info_quantile(1, 0.5)


def test_quantile_matches_pmf():
    N, c = 1000, 101
    d = du.no_info_pmf(N, SingleThreshold(c, c))
    for p in (0.2, 0.5, 0.75):
        assert d.quantile(p) == du.no_info_quantile(c, p, N=N)


# ---- limiting fractions for a single threshold

def test_asymptotic_fraction_single():
    assert du.asymptotic_fraction_single(math.exp(-1)) == pytest.approx(2 / math.e)
    assert du.asymptotic_fraction_single(1.0) == 1.0
    assert du.asymptotic_fraction_single(math.exp(-0.5)) == pytest.approx(1.5 / math.sqrt(math.e))
    with pytest.raises(DomainError):
        du.asymptotic_fraction_single(0.0)


def test_inverse_threshold_examples():
    assert du.inverse_threshold_for_mean(0.5) == pytest.approx(0.186682, abs=5e-7)
    assert du.inverse_threshold_for_mean(2 / math.e) == pytest.approx(math.exp(-1), abs=1e-12)
    assert du.inverse_threshold_for_mean(1 - 1e-12) == pytest.approx(1.0, abs=1e-5)


@given(st.floats(min_value=1e-6, max_value=0.999))
def test_inverse_threshold_round_trip(p):
    x = du.inverse_threshold_for_mean(p)
    assert du.asymptotic_fraction_single(x) == pytest.approx(p, abs=1e-10)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=4, max_value=10**6))
def test_bearden_expansion_within_one(N):
    assert abs(du.threshold_mean(N, math.sqrt(N)) - du.bearden_mean_approx(N)) < 1.0


# ---- value cutoffs

def test_moser_small_pool():
    d = du.cutoff_pmf(9, po.moser_cutoffs(9))
    assert d.mean() == pytest.approx(4.23844, abs=5e-6)
    # the CDF first reaches 1/2 at x = 4 (0.450 at x = 3, 0.574 at x = 4)
    assert d.median() == 4
    assert d.no_choice_mass is None


def test_moser_large_pool():
    N = 10**6
    d = du.cutoff_pmf(N, po.moser_cutoffs(N))
    assert d.mean() == pytest.approx(333338, abs=0.5)
    assert abs(d.mean() / N - 1 / 3) < 1e-3
    assert abs(d.median() / N - (1 - math.sqrt(0.5))) < 1e-3
    assert du.cutoff_mean(po.moser_cutoffs(N)) == pytest.approx(d.mean(), rel=1e-12)


def test_cutoff_pmf_zero_first_cutoff():
    d = du.cutoff_pmf(3, ValueCutoffs([0.0, 0.7, 0.3]))
    assert d.pmf.tolist() == [1.0, 0.0, 0.0]


def test_cutoff_pmf_residual_goes_to_last_position():
    d = du.cutoff_pmf(2, ValueCutoffs([0.5, 0.5]))
    assert d.pmf.tolist() == [0.5, 0.5]
    assert d.no_choice_mass == 0.25


def test_cutoff_pmf_length_checked():
    with pytest.raises(DomainError):
        du.cutoff_pmf(4, po.moser_cutoffs(3))
    with pytest.raises(DomainError):
        du.cutoff_pmf(3, po.gm_cutoffs(3))


def test_decaying_pool_mean():
    assert du.decaying_pool_distribution(10**6).mean() == pytest.approx(707.107, abs=5e-4)


def test_telescoping_triangular_law():
    N = 1000
    i = np.arange(1, N + 1)
    d = du.cutoff_pmf(N, ValueCutoffs(1 - 2 / (N + 2 - i)))
    want = 2 * (N + 1 - i) / (N * (N + 1))
    assert np.max(np.abs(d.pmf - want)) < 1e-12


def test_moser_pmf_slope():
    # Pr(T = x+1)/Pr(T = x) - 1 = -a(1 - a)/(1 + a) with a = P_{x+1}, which
    # follows from 1 - P_x = (1 - P_{x+1})^2/2 and the product form
    N = 500
    P = po.moser_cutoffs(N).cutoffs
    d = du.cutoff_pmf(N, po.moser_cutoffs(N))
    x = np.arange(1, N - 1)
    ratio = d.pmf[x] / d.pmf[x - 1]
    a = P[x]
    assert np.max(np.abs(ratio - 1 + a * (1 - a) / (1 + a))) < 1e-10


@settings(max_examples=25, deadline=None)
@given(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=60))
def test_cutoff_pmf_normalised(cutoffs):
    d = du.cutoff_pmf(len(cutoffs), ValueCutoffs(cutoffs))
    assert np.all(d.pmf >= 0)
    assert d.pmf.sum() == pytest.approx(1.0, abs=1e-10)


# ---- best-choice cutoffs

def test_gm_pmf_n100():
    d = du.gm_pmf(100, po.gm_cutoffs(100))
    assert d.mean() == pytest.approx(58.2935, abs=1e-4)
    # the reference median is 58; the CDF is 0.4964 there and first passes 1/2 at 59
    assert d.median() == 59
    assert d.cdf()[57] < 0.5 <= d.cdf()[58]


def test_gm_pmf_single_applicant():
    d = du.gm_pmf(1, po.gm_cutoffs(1))
    assert d.pmf.tolist() == [1.0]
    assert d.no_choice_mass == 0.0


def test_gm_pmf_cap():
    with pytest.raises(ExactModeUnavailable):
        du.gm_pmf(30, po.gm_cutoffs(30), cap=20)
    with pytest.raises(DomainError):
        du.gm_pmf(3, po.moser_cutoffs(3))


@pytest.mark.parametrize("N", [5, 9, 25, 100])
def test_gm_pmf_cdf_and_mean(N):
    pol = po.gm_cutoffs(N)
    d = du.gm_pmf(N, pol)
    P = pol.cutoffs
    x = np.arange(1, N + 1)
    # Pr(T <= x) = 1 - (1/x) sum_{i<=x} P_i^x, except that T = N absorbs the rest
    cdf = np.array([1 - np.sum(P[:k] ** k) / k for k in x])
    assert np.allclose(d.cdf()[:-1], cdf[:-1], atol=1e-12)
    # E(T) = sum_{x=0}^{N-1} Pr(T > x)
    surv = [1.0] + [np.sum(P[:k] ** k) / k for k in range(1, N)]
    assert d.mean() == pytest.approx(sum(surv), abs=1e-9)
    assert d.no_choice_mass == pytest.approx(np.sum(P**N) / N, abs=1e-15)


def test_gm_pmf_matches_simulation():
    N = 8
    s = SettingSpec(Variant.GM_BEST_CHOICE, N=N)
    pol = po.gm_cutoffs(N)
    d = du.gm_pmf(N, pol)
    sim = simulate(s, pol, 500_000, seed=2)
    freq = sim.histogram / sim.trials
    se = np.sqrt(d.pmf * (1 - d.pmf) / sim.trials)
    assert np.all(np.abs(freq - d.pmf) < 4 * se + 1e-12)
    assert abs(sim.no_choice_rate - d.no_choice_mass) < 4 * sim.se_no_choice + 1e-12


# ---- house selling

@pytest.mark.parametrize("cost,mean,median", [(0.001, 22.36, 16), (0.01, 7.07, 5), (0.5, 1.0, 1)])
def test_house_selling(cost, mean, median):
    s = du.house_selling_stats(cost)
    assert s.mean == pytest.approx(mean, abs=5e-3)
    assert s.median == median


def test_house_selling_quantiles_and_domain():
    s = du.house_selling_stats(0.01, quantiles=(0.9,))
    p = math.sqrt(0.02)
    q = s.quantiles[0.9]
    assert 1 - (1 - p) ** q >= 0.9 > 1 - (1 - p) ** (q - 1)
    assert du.house_selling_stats(0.9).mean == 1.0
    with pytest.raises(DomainError):
        du.house_selling_stats(0.0)


# ---- multi-stage rules

def test_single_stage_cdf():
    s = StageThresholds((0.3,))
    assert du.multi_stage_cdf(s, 0.2) == 0.0
    assert du.multi_stage_cdf(s, 0.6) == pytest.approx(0.5)
    assert du.multi_stage_quantile(s, 0.5) == pytest.approx(0.6)


def test_lindley_median():
    st_ = po.lindley_stages(50)
    m = du.multi_stage_quantile(st_, 0.5)
    assert m == pytest.approx(math.sqrt(2 * st_.fractions[0] * st_.fractions[1]), rel=1e-14)
    assert m == pytest.approx(0.48099, abs=5e-5)
    assert du.multi_stage_cdf(st_, m) == pytest.approx(0.5, abs=1e-14)


def test_gusein_zade_medians():
    s10 = po.stage_thresholds(SettingSpec(Variant.GUSEIN_ZADE, S=10))
    assert du.multi_stage_quantile(s10, 0.5) == pytest.approx(0.52276, abs=1e-4)
    s25 = po.stage_thresholds(SettingSpec(Variant.GUSEIN_ZADE, S=25))
    c = s25.fractions
    assert du.multi_stage_quantile(s25, 0.5) == pytest.approx((2 * c[0] * c[1] * c[2]) ** (1 / 3), rel=1e-14)


def test_gusein_zade_means():
    mean = lambda S: du.multi_stage_mean(po.stage_thresholds(SettingSpec(Variant.GUSEIN_ZADE, S=S)))
    assert mean(2) == pytest.approx(0.6892, abs=5e-5)
    assert mean(5) == pytest.approx(0.6102, abs=5e-5)


@given(st.floats(min_value=1e-4, max_value=1.0))
def test_multi_stage_mean_reduces_to_single(x):
    assert du.multi_stage_mean(StageThresholds((x,))) == pytest.approx(du.asymptotic_fraction_single(x), rel=1e-13)


@settings(max_examples=40)
@given(st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=1, max_size=8, unique=True))
def test_multi_stage_cdf_monotone_and_mean_consistent(fr):
    s = StageThresholds(tuple(sorted(fr)))
    grid = np.linspace(1e-3, 1.0, 400)
    F = [du.multi_stage_cdf(s, m) for m in grid]
    assert all(b >= a - 1e-12 for a, b in zip(F, F[1:]))
    # E(T/N) = integral of the survival function, with the atom at 1 included
    from scipy.integrate import quad

    pts = [c for c in s.fractions if c < 1.0]
    surv = quad(lambda m: 1 - du.multi_stage_cdf(s, m), 0.0, 1.0, points=pts, limit=200)[0]
    assert du.multi_stage_mean(s) == pytest.approx(surv, abs=1e-8)


def test_lindley_series():
    L = du.lindley_series()
    assert L.head_sum == pytest.approx(0.5895, abs=5e-5)
    assert L.mean_fraction == pytest.approx(0.5065, abs=5e-5)
    assert 0 < L.tail < L.tail_bound
    assert du.lindley_asymptotic_mean() == L.mean_fraction


# ---- large-N best-choice family

@pytest.mark.parametrize(
    "variant,mean,median,no_choice",
    [
        (Variant.GM_BEST_CHOICE, 0.580164, 0.585926, 0.199505),
        (Variant.FI_DURATION, 0.336134, 0.279642, 0.032134),
        (Variant.FI_BEST_CHOICE_DURATION, 0.466785, 0.42689, 0.10255),
    ],
)
def test_candidate_family_reports(variant, mean, median, no_choice):
    r = du.asymptotic_report(SettingSpec(variant))
    assert r.mean_fraction == pytest.approx(mean, abs=1e-6)
    assert r.median_fraction == pytest.approx(median, abs=1e-5)
    assert r.no_choice_prob == pytest.approx(no_choice, abs=1e-5)


@pytest.mark.parametrize("c", [0.804352, 1.25643, 2.1198])
def test_median_equation_residual(c):
    m = du.gm_median_fraction(c)
    assert abs(du.gm_median_equation(m, c)) < 1e-8


def test_gm_mean_fraction_against_large_pool():
    N = 5000
    d = du.gm_pmf(N, po.gm_cutoffs(N))
    assert d.mean() / N == pytest.approx(du.gm_mean_fraction(po.GM_CONSTANT), abs=2e-3)
    assert d.no_choice_mass == pytest.approx(du.gm_no_choice_fraction(po.GM_CONSTANT), abs=2e-3)


# ---- limiting reports for threshold rules

def test_threshold_reports():
    rep = lambda v, **kw: du.asymptotic_report(SettingSpec(v, **kw))
    e = math.e
    assert rep(Variant.SECRETARY).mean_fraction == pytest.approx(2 / e)
    assert rep(Variant.SECRETARY).median_fraction == pytest.approx(2 / e)
    sk = rep(Variant.SAKAGUCHI)
    assert sk.mean_fraction == pytest.approx(1.5 / math.sqrt(e))
    assert sk.median_fraction == 1.0
    assert sk.conditional_mean_fraction == pytest.approx(1 / (2 * (math.sqrt(e) - 1)))
    pd = rep(Variant.POSTDOC)
    assert pd.mean_fraction == pytest.approx((1 + math.log(2)) / 2)
    assert pd.median_fraction == 1.0
    nd = rep(Variant.NO_INFO_DURATION)
    assert (nd.mean_fraction, nd.median_fraction) == pytest.approx((3 / e**2, 2 / e**2))
    w = po.lambert_w(-2 / e**2)
    bc = rep(Variant.NO_INFO_BEST_CHOICE_DURATION)
    assert bc.mean_fraction == pytest.approx(-0.5 * w * (3 + w))
    assert bc.median_fraction == pytest.approx(-w)
    sm = rep(Variant.SMITH, p=0.5)
    assert sm.mean_fraction == pytest.approx(0.25 * (1 + 2 * math.log(2)))
    mo = rep(Variant.MOSER)
    assert (mo.mean_fraction, mo.median_fraction) == pytest.approx((1 / 3, 1 - math.sqrt(0.5)))
    gz = rep(Variant.GUSEIN_ZADE, S=math.inf)
    assert gz.mean_fraction == gz.median_fraction == 0.2834
    ps = rep(Variant.PRESMAN_SONIN, b=10)
    assert ps.mean_fraction == pytest.approx((4 * e**2 - 1) / e**4)


@pytest.mark.parametrize("v", [Variant.BEARDEN, Variant.MOSER_DECAYING, Variant.HOUSE_SELLING])
def test_unsupported_reports(v):
    kw = {"cost": 0.1} if v is Variant.HOUSE_SELLING else {}
    with pytest.raises(UnsupportedVariantError):
        du.asymptotic_report(SettingSpec(v, **kw))


def test_presman_sonin_duration_by_simulation():
    # With the pool size uniform on 1..b and threshold x b, E(T)/b tends to
    # 2x + x^2/2 for x = e^-2, so E(T)/E(n) tends to 4/e^2 + 1/e^4.
    b = 2000
    s = SettingSpec(Variant.PRESMAN_SONIN, b=b)
    sim = simulate(s, po.finite_threshold(s), 400_000, seed=3)
    x = math.exp(-2)
    assert sim.mean_T / b == pytest.approx(2 * x + x * x / 2, abs=4 * sim.se_mean / b + 1e-3)


def test_smith_success_by_simulation():
    s = SettingSpec(Variant.SMITH, N=500, p=0.5)
    sim = simulate(s, po.finite_threshold(s), 200_000, seed=4)
    assert sim.success_rate == pytest.approx(0.25, abs=4 * sim.se_success + 5e-3)


def test_decaying_pool_conjecture_ratios():
    out = du.decaying_pool_conjecture(20_000)
    assert set(out) == {"mean", "median", "mean_ratio", "median_ratio"}
    assert 0.95 < out["mean_ratio"] < 1.05
