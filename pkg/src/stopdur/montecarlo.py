"""Simulation and brute-force enumeration oracles.

:func:`simulate` plays a policy against random applicant sequences and
:func:`enumerate_exact` walks every relative-rank sequence of a small pool.
Both are written independently of the closed forms in
:mod:`stopdur.duration` so that they can be used to check them.

Random streams
--------------
Trials are split into fixed blocks of :data:`BLOCK_SIZE`. Block ``k`` draws
from PCG64 seeded with ``SeedSequence(seed, spawn_key=(k,))`` and blocks are
merged in index order, so a summary depends only on ``(seed, trials)`` and
never on the number of workers.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .duration import DurationDistribution
from .errors import DomainError
from .policies import (
    FULL_INFO_CANDIDATE_VARIANTS,
    RECORD_VARIANTS,
    Policy,
    ReservationValue,
    SettingSpec,
    SingleThreshold,
    StageThresholds,
    ValueCutoffs,
    Variant,
)

BLOCK_SIZE = 65_536
ENUMERATION_MAX_N = 8

@dataclass(frozen=True, eq=False)
class SimulationSummary:
    trials: int
    seed: int
    mean_T: float
    se_mean: float
    median_T: int
    histogram: np.ndarray
    mean_fraction: float
    se_fraction: float
    success_rate: Optional[float] = None
    se_success: Optional[float] = None
    no_choice_rate: Optional[float] = None
    se_no_choice: Optional[float] = None
    mean_payoff: Optional[float] = None
    se_payoff: Optional[float] = None

    def to_dict(self) -> dict:
        out = {}
        for name in self.__dataclass_fields__:
            value = getattr(self, name)
            out[name] = value.tolist() if isinstance(value, np.ndarray) else value
        return out


@dataclass
class _Block:
    T: np.ndarray
    frac: np.ndarray
    success: Optional[np.ndarray] = None
    no_choice: Optional[np.ndarray] = None
    payoff: Optional[np.ndarray] = None


class _Moments:
    """Count, mean and centred second moment, merged in a fixed order."""

    def __init__(self):
        self.n = 0
        self.mean = 0.0
        self.m2 = 0.0

    def add(self, x: np.ndarray):
        k = x.size
        if k == 0:
            return
        mu = float(np.mean(x))
        m2 = float(np.sum((x - mu) ** 2))
        n = self.n + k
        delta = mu - self.mean
        self.mean += delta * k / n
        self.m2 += m2 + delta * delta * self.n * k / n
        self.n = n

    def se(self) -> float:
        if self.n < 2:
            return 0.0
        return math.sqrt(self.m2 / (self.n - 1) / self.n)


# ---------------------------------------------------------------------------
# Engines. Each takes a generator and a trial count and returns a _Block.


def _geometric(rng, p: np.ndarray) -> np.ndarray:
    """Trials up to and including the first success; p may be tiny."""
    return rng.geometric(np.clip(p, 1e-18, 1.0))


def _next_record(rng, R: np.ndarray) -> np.ndarray:
    """Next position after R that is relatively best (independent 1/i events)."""
    u = 1.0 - rng.random(R.size)  # in (0, 1]
    return np.floor(R / u).astype(np.int64) + 1


def _record_block(rng, n_trials, setting: SettingSpec, policy: SingleThreshold) -> _Block:
    v = setting.variant
    if v is Variant.PRESMAN_SONIN:
        n = rng.integers(1, setting.b + 1, size=n_trials)
    else:
        n = np.full(n_trials, setting.N, dtype=np.int64)
    f = policy.first_eligible
    if f <= 1:
        R = np.ones(n_trials, dtype=np.int64)
    else:
        u = 1.0 - rng.random(n_trials)
        R = np.floor((f - 1) / u).astype(np.int64) + 1

    if v is Variant.SMITH:
        # each candidate accepts with probability p; refusals resume the search
        stopped = np.zeros(n_trials, dtype=bool)
        active = R <= n
        while np.any(active):
            idx = np.flatnonzero(active)
            agree = rng.random(idx.size) < setting.p
            stopped[idx[agree]] = True
            rest = idx[~agree]
            R[rest] = _next_record(rng, R[rest])
            active[:] = False
            active[rest] = R[rest] <= n[rest]
        chose = stopped
    else:
        chose = R <= n

    T = np.where(chose, R, n)
    nxt = np.where(chose, _next_record(rng, np.minimum(R, n)), n + 1)
    # a default pick of the last applicant is never the best
    best = chose & (nxt > n)
    block = _Block(T=T, frac=T / n, success=best, no_choice=~chose)

    N = n.astype(float)
    if v is Variant.SAKAGUCHI:
        block.payoff = np.where(chose, np.where(best, 1.0, -1.0), 0.0)
    elif v is Variant.BEARDEN:
        # value of a record at T is the max of T uniforms; a default pick is
        # a non-maximal value among N uniforms
        u1, u2 = rng.random(n_trials), rng.random(n_trials)
        rec_val = u1 ** (1.0 / T)
        default_val = u1 ** (1.0 / N) * u2
        block.payoff = np.where(chose, rec_val, default_val)
    elif v is Variant.NO_INFO_DURATION:
        block.payoff = np.where(chose, (np.minimum(nxt, n + 1) - T) / N, 0.0)
    elif v is Variant.NO_INFO_BEST_CHOICE_DURATION:
        block.payoff = np.where(best, (n - T + 1) / N, 0.0)
    elif v is Variant.INTERVIEW_COST:
        block.payoff = np.where(best, 1.0 - T / N, 0.0)
    return block


def _rank_block(rng, n_trials, setting: SettingSpec, policy: Policy) -> _Block:
    """Per-position relative ranks; tracks the chosen applicant's overall rank."""
    N = setting.require_n()
    v = setting.variant
    if isinstance(policy, StageThresholds):
        cuts = np.asarray(policy.fractions) * N
        max_rank = np.searchsorted(cuts, np.arange(1, N + 1), side="left")
    T = np.zeros(n_trials, dtype=np.int64)
    rho = np.zeros(n_trials, dtype=np.int64)
    eligible_pick = np.zeros(n_trials, dtype=bool)
    for i in range(1, N + 1):
        r = rng.integers(1, i + 1, size=n_trials)
        chosen = T > 0
        rho += chosen & (r <= rho)
        if v is Variant.POSTDOC:
            ok = (r == 2) & (i >= policy.first_eligible)
        else:
            ok = r <= max_rank[i - 1]
        take = ~chosen & (ok | (i == N))
        T[take] = i
        rho[take] = r[take]
        eligible_pick |= ~chosen & ok
    block = _Block(T=T, frac=T / N, no_choice=~eligible_pick)
    if v is Variant.POSTDOC:
        block.success = rho == 2
    elif v is Variant.GUSEIN_ZADE:
        block.success = rho <= setting.S
    elif v is Variant.LINDLEY:
        block.payoff = rho.astype(float)
    return block


def _value_block(rng, n_trials, setting: SettingSpec, policy: ValueCutoffs) -> _Block:
    """Per-position uniform values against the cutoffs (Moser and decaying pool)."""
    N = setting.require_n()
    decaying = setting.variant is Variant.MOSER_DECAYING
    P = policy.cutoffs
    T = np.full(n_trials, N, dtype=np.int64)
    payoff = np.zeros(n_trials)
    active = np.arange(n_trials)
    for i in range(1, N + 1):
        if active.size == 0:
            break
        u = rng.random(active.size)
        stop = u >= P[i - 1]
        if i == N:
            stop[:] = True
        hit = active[stop]
        T[hit] = i
        payoff[hit] = u[stop] * (N + 1 - i) if decaying else u[stop]
        active = active[~stop]
    return _Block(T=T, frac=T / N, payoff=payoff)


def _candidate_block(rng, n_trials, setting: SettingSpec, policy: ValueCutoffs) -> _Block:
    """Jumps between successive relatively best values (full-information candidates)."""
    N = setting.require_n()
    v = setting.variant
    P = policy.cutoffs
    pos = np.ones(n_trials, dtype=np.int64)
    val = rng.random(n_trials)
    T = np.full(n_trials, N, dtype=np.int64)
    chosen_val = np.zeros(n_trials)
    chose = np.zeros(n_trials, dtype=bool)
    active = np.arange(n_trials)
    while active.size:
        p_, x_ = pos[active], val[active]
        stop = x_ >= P[p_ - 1]
        hit = active[stop]
        T[hit] = p_[stop]
        chosen_val[hit] = x_[stop]
        chose[hit] = True
        rest = active[~stop]
        gap = _geometric(rng, 1.0 - val[rest])
        pos[rest] += gap
        val[rest] += (1.0 - val[rest]) * rng.random(rest.size)
        active = rest[pos[rest] <= N]
    remaining = (N - T).astype(float)
    best = chose & (rng.random(n_trials) < chosen_val**remaining)
    block = _Block(T=T, frac=T / N, success=best, no_choice=~chose)
    if v is Variant.FI_DURATION:
        gap = _geometric(rng, 1.0 - chosen_val)
        block.payoff = np.where(chose, np.minimum(gap, N + 1 - T) / N, 0.0)
    elif v is Variant.FI_BEST_CHOICE_DURATION:
        block.payoff = np.where(best, (N - T + 1) / N, 0.0)
    return block


def _house_block(rng, n_trials, setting: SettingSpec, policy: ReservationValue) -> _Block:
    g = policy.gamma
    T = _geometric(rng, np.full(n_trials, 1.0 - g))
    offer = g + (1.0 - g) * rng.random(n_trials)
    return _Block(T=T, frac=T.astype(float), payoff=offer - setting.cost * T)


def _engine(setting: SettingSpec, policy: Policy):
    v = setting.variant
    if v in RECORD_VARIANTS:
        if not isinstance(policy, SingleThreshold):
            raise DomainError(f"{v.value} needs a SingleThreshold policy")
        if v is not Variant.PRESMAN_SONIN:
            setting.require_n()
        return _record_block
    if v is Variant.POSTDOC:
        if not isinstance(policy, SingleThreshold):
            raise DomainError("postdoc needs a SingleThreshold policy")
        return _rank_block
    if v in (Variant.LINDLEY, Variant.GUSEIN_ZADE):
        if not isinstance(policy, StageThresholds):
            raise DomainError(f"{v.value} needs a StageThresholds policy")
        return _rank_block
    if v in (Variant.MOSER, Variant.MOSER_DECAYING):
        if not isinstance(policy, ValueCutoffs) or policy.candidate_only:
            raise DomainError(f"{v.value} needs ValueCutoffs with candidate_only=False")
        if policy.N != setting.require_n():
            raise DomainError("cutoff vector length differs from N")
        return _value_block
    if v in FULL_INFO_CANDIDATE_VARIANTS:
        if not isinstance(policy, ValueCutoffs) or not policy.candidate_only:
            raise DomainError(f"{v.value} needs ValueCutoffs with candidate_only=True")
        if policy.N != setting.require_n():
            raise DomainError("cutoff vector length differs from N")
        return _candidate_block
    if v is Variant.HOUSE_SELLING:
        if not isinstance(policy, ReservationValue):
            raise DomainError("house-selling needs a ReservationValue policy")
        return _house_block
    raise DomainError(f"cannot simulate {v.value}")  # pragma: no cover


def _block_rng(seed: int, k: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(k,))))


def simulate(
    setting: SettingSpec,
    policy: Policy,
    trials: int,
    seed: int,
    workers: int = 1,
) -> SimulationSummary:
    """Monte Carlo estimate of the duration statistics of ``policy``.

    Parameters
    ----------
    trials : int
        Number of independent applicant sequences.
    seed : int
        Non-negative integer; with ``trials`` it fixes every draw.
    workers : int
        Threads used to run blocks. The result does not depend on it.
    """
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    if seed < 0:
        raise DomainError("seed must be non-negative")
    engine = _engine(setting, policy)
    sizes = [BLOCK_SIZE] * (trials // BLOCK_SIZE)
    if trials % BLOCK_SIZE:
        sizes.append(trials % BLOCK_SIZE)

    def run(k):
        return engine(_block_rng(seed, k), sizes[k], setting, policy)

    if workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(run, range(len(sizes))))
    else:
        blocks = [run(k) for k in range(len(sizes))]
    return _summarize(blocks, trials, seed, setting)


def _summarize(blocks: List[_Block], trials: int, seed: int, setting: SettingSpec) -> SimulationSummary:
    t_mom, f_mom, p_mom = _Moments(), _Moments(), _Moments()
    succ = nochoice = 0
    have_succ = blocks[0].success is not None
    have_nc = blocks[0].no_choice is not None
    have_pay = blocks[0].payoff is not None
    size = setting.N or setting.b or 1
    size = max(size, max(int(b.T.max()) for b in blocks))
    hist = np.zeros(size, dtype=np.int64)
    for b in blocks:
        t_mom.add(b.T.astype(float))
        f_mom.add(b.frac.astype(float))
        hist += np.bincount(b.T - 1, minlength=size)
        if have_succ:
            succ += int(np.count_nonzero(b.success))
        if have_nc:
            nochoice += int(np.count_nonzero(b.no_choice))
        if have_pay:
            p_mom.add(b.payoff)

    def rate(k):
        p = k / trials
        return p, math.sqrt(p * (1.0 - p) / trials)

    median = int(np.searchsorted(np.cumsum(hist), trials / 2.0, side="left")) + 1
    s_rate, s_se = rate(succ) if have_succ else (None, None)
    n_rate, n_se = rate(nochoice) if have_nc else (None, None)
    return SimulationSummary(
        trials=trials,
        seed=seed,
        mean_T=t_mom.mean,
        se_mean=t_mom.se(),
        median_T=median,
        histogram=hist,
        mean_fraction=f_mom.mean,
        se_fraction=f_mom.se(),
        success_rate=s_rate,
        se_success=s_se,
        no_choice_rate=n_rate,
        se_no_choice=n_se,
        mean_payoff=p_mom.mean if have_pay else None,
        se_payoff=p_mom.se() if have_pay else None,
    )


# ---------------------------------------------------------------------------
# Exhaustive enumeration


@dataclass(frozen=True)
class ExactEnumeration:
    """Rational PMF of T (index x - 1) and the chance of a successful pick."""

    pmf: Tuple[Fraction, ...]
    success: Optional[Fraction]
    mean_rank: Fraction


def _rule(setting: SettingSpec, policy: Policy, N: int):
    v = setting.variant
    if v in (Variant.SMITH, Variant.PRESMAN_SONIN):
        raise DomainError(f"enumeration does not model {v.value}")
    if v is Variant.POSTDOC and isinstance(policy, SingleThreshold):
        f = policy.first_eligible
        return (lambda i, r: i >= f and r == 2), (lambda rank: rank == 2)
    if v in RECORD_VARIANTS and isinstance(policy, SingleThreshold):
        f = policy.first_eligible
        return (lambda i, r: i >= f and r == 1), (lambda rank: rank == 1)
    if v in (Variant.LINDLEY, Variant.GUSEIN_ZADE) and isinstance(policy, StageThresholds):
        cuts = [c * N for c in policy.fractions]
        S = setting.S if v is Variant.GUSEIN_ZADE else None
        ok = lambda i, r: r <= sum(1 for c in cuts if i > c)
        return ok, ((lambda rank: rank <= S) if S is not None else None)
    raise DomainError(f"enumeration does not cover {v.value} with {type(policy).__name__}")


def enumerate_exact_fractions(setting: SettingSpec, policy: Policy) -> ExactEnumeration:
    """Walk all N! relative-rank sequences with exact rational weights."""
    N = setting.require_n()
    if N > ENUMERATION_MAX_N:
        raise DomainError(f"enumeration is limited to N <= {ENUMERATION_MAX_N}, got {N}")
    accept, success = _rule(setting, policy, N)
    counts = [0] * N
    wins = 0
    rank_total = 0
    for ranks in itertools.product(*(range(1, i + 1) for i in range(1, N + 1))):
        t = N
        for i, r in enumerate(ranks, start=1):
            if accept(i, r):
                t = i
                break
        rank = ranks[t - 1]
        for r in ranks[t:]:
            if r <= rank:
                rank += 1
        counts[t - 1] += 1
        rank_total += rank
        if success is not None and success(rank):
            wins += 1
    total = math.factorial(N)
    return ExactEnumeration(
        pmf=tuple(Fraction(k, total) for k in counts),
        success=Fraction(wins, total) if success is not None else None,
        mean_rank=Fraction(rank_total, total),
    )


def enumerate_exact(setting: SettingSpec, policy: Policy) -> DurationDistribution:
    """Exact PMF of T for a no-information rule on a pool of at most 8."""
    ex = enumerate_exact_fractions(setting, policy)
    return DurationDistribution(
        setting.N,
        np.array([float(p) for p in ex.pmf]),
        success_prob=None if ex.success is None else float(ex.success),
    )
