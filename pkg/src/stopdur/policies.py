"""Problem settings and their optimal stopping policies.

A :class:`SettingSpec` names a problem variant together with the parameters
it needs. The functions here turn a setting into a :class:`Policy`:

* integer thresholds for the single-threshold no-information problems,
* stage fractions for the relative-rank problems (Lindley, Gusein-Zade),
* per-position value cutoffs for the full-information problems,
* a reservation value for the unbounded house-selling problem.

They also provide the limiting threshold fraction of each variant and the
finite-N objective functions used to find the integer thresholds.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np
from scipy.integrate import solve_ivp
from scipy.special import comb, zeta

from .errors import ConvergenceError, DomainError, UnsupportedVariantError
from .specfun import Bracket, digamma, lambert_w, solve_root

# Decision-value constants of the full-information family.
GM_CONSTANT = 0.804352  # best choice
FI_DURATION_CONSTANT = 2.1198  # duration of the relatively best
FI_BEST_CHOICE_DURATION_CONSTANT = 1.25643  # duration of holding the overall best

# Limit of the Gusein-Zade stopping proportion as S grows without bound.
GUSEIN_ZADE_LIMIT_FRACTION = 0.2834

MOSER_APPROX_SHIFT = 1.76799


class Variant(str, enum.Enum):
    SECRETARY = "secretary"
    BEARDEN = "bearden"
    POSTDOC = "postdoc"
    SAKAGUCHI = "sakaguchi"
    SMITH = "smith"
    PRESMAN_SONIN = "presman-sonin"
    NO_INFO_DURATION = "no-info-duration"
    NO_INFO_BEST_CHOICE_DURATION = "no-info-best-choice-duration"
    INTERVIEW_COST = "interview-cost"
    SZAJOWSKI_COST = "szajowski-cost"
    MOSER = "moser"
    MOSER_DECAYING = "moser-decaying"
    GM_BEST_CHOICE = "gm-best-choice"
    FI_DURATION = "fi-duration"
    FI_BEST_CHOICE_DURATION = "fi-best-choice-duration"
    LINDLEY = "lindley"
    GUSEIN_ZADE = "gusein-zade"
    HOUSE_SELLING = "house-selling"


# Variants whose single-threshold rule accepts the next relatively best applicant.
RECORD_VARIANTS = frozenset(
    {
        Variant.SECRETARY,
        Variant.BEARDEN,
        Variant.SAKAGUCHI,
        Variant.SMITH,
        Variant.PRESMAN_SONIN,
        Variant.NO_INFO_DURATION,
        Variant.NO_INFO_BEST_CHOICE_DURATION,
        Variant.INTERVIEW_COST,
        Variant.SZAJOWSKI_COST,
    }
)
FULL_INFO_CANDIDATE_VARIANTS = frozenset(
    {Variant.GM_BEST_CHOICE, Variant.FI_DURATION, Variant.FI_BEST_CHOICE_DURATION}
)
STAGE_VARIANTS = frozenset({Variant.LINDLEY, Variant.GUSEIN_ZADE})

_REQUIRED = {
    Variant.GUSEIN_ZADE: {"S"},
    Variant.SMITH: {"p"},
    Variant.PRESMAN_SONIN: {"b"},
    Variant.HOUSE_SELLING: {"cost"},
    Variant.SZAJOWSKI_COST: {"cost"},
}
_OPTIONAL = {Variant.INTERVIEW_COST: {"cost"}}
_NO_POOL = {Variant.HOUSE_SELLING, Variant.PRESMAN_SONIN}


@dataclass(frozen=True)
class SettingSpec:
    """A problem variant plus its parameters.

    ``N`` is optional everywhere it is allowed so that a bare setting can be
    used for asymptotic questions; finite-N operations check for it. For
    Gusein-Zade, ``S=math.inf`` stands for the limit of an unbounded target
    rank.
    """

    variant: Variant
    N: Optional[int] = None
    S: Optional[Union[int, float]] = None
    p: Optional[float] = None
    b: Optional[int] = None
    cost: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        v = self.variant
        required = _REQUIRED.get(v, set())
        allowed = required | _OPTIONAL.get(v, set())
        for name in ("S", "p", "b", "cost"):
            value = getattr(self, name)
            if name in required and value is None:
                raise DomainError(f"{v.value} requires parameter {name}")
            if name not in allowed and value is not None:
                raise DomainError(f"{v.value} does not take parameter {name}")
        if self.N is not None:
            if v in _NO_POOL:
                raise DomainError(f"{v.value} does not take a fixed pool size N")
            if int(self.N) != self.N or self.N < 1:
                raise DomainError(f"N must be a positive integer, got {self.N}")
            object.__setattr__(self, "N", int(self.N))
        if self.S is not None and not (self.S == math.inf or (int(self.S) == self.S and self.S >= 1)):
            raise DomainError(f"S must be a positive integer or inf, got {self.S}")
        if self.p is not None and not 0.0 < self.p <= 1.0:
            raise DomainError(f"p must lie in (0, 1], got {self.p}")
        if self.b is not None:
            if int(self.b) != self.b or self.b < 1:
                raise DomainError(f"b must be a positive integer, got {self.b}")
            object.__setattr__(self, "b", int(self.b))
        if self.cost is not None:
            if v is Variant.INTERVIEW_COST:
                if self.N is not None and abs(self.cost - 1.0 / self.N) > 1e-12:
                    raise DomainError("interview-cost is defined for a cost of 1/N per applicant")
            elif not self.cost > 0.0:
                raise DomainError(f"cost must be positive, got {self.cost}")

    def require_n(self) -> int:
        if self.N is None:
            raise DomainError(f"{self.variant.value}: this operation needs a pool size N")
        return self.N


# ---------------------------------------------------------------------------
# Policies


@dataclass(frozen=True)
class SingleThreshold:
    """Pass over applicants before ``first_eligible``, then take the next eligible one.

    ``c`` is the threshold in the convention of the setting (the first
    eligible position for the best-choice problems, the number passed over
    for the postdoc problem); ``first_eligible`` removes the ambiguity.
    ``first_eligible`` may equal N + 1, meaning that nobody is ever eligible.
    """

    c: int
    first_eligible: int

    def __post_init__(self):
        if self.c < 1:
            raise DomainError(f"threshold must be >= 1, got {self.c}")
        if self.first_eligible not in (self.c, self.c + 1):
            raise DomainError("first_eligible must be c or c + 1")


@dataclass(frozen=True)
class StageThresholds:
    """Ascending stage fractions: relative rank <= d is acceptable once fraction ``fractions[d-1]`` has passed."""

    fractions: tuple

    def __post_init__(self):
        fr = tuple(float(x) for x in self.fractions)
        if not fr:
            raise DomainError("at least one stage is required")
        if any(not 0.0 < x <= 1.0 for x in fr):
            raise DomainError("stage fractions must lie in (0, 1]")
        if any(b <= a for a, b in zip(fr, fr[1:])):
            raise DomainError("stage fractions must be strictly increasing")
        object.__setattr__(self, "fractions", fr)

    def acceptable_rank(self, position: int, N: int) -> int:
        """Largest acceptable relative rank at ``position`` of ``N`` (0 = none)."""
        return sum(1 for c in self.fractions if position > c * N)


@dataclass(frozen=True, eq=False)
class ValueCutoffs:
    """Per-position acceptance cutoffs; ``cutoffs[i - 1]`` applies to applicant i.

    With ``candidate_only`` the applicant must also be the relatively best so far.
    """

    cutoffs: np.ndarray
    candidate_only: bool = False

    def __post_init__(self):
        arr = np.asarray(self.cutoffs, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise DomainError("cutoffs must be a non-empty vector")
        if np.any(arr < 0.0) or np.any(arr > 1.0):
            raise DomainError("cutoffs must lie in [0, 1]")
        arr.setflags(write=False)
        object.__setattr__(self, "cutoffs", arr)

    @property
    def N(self) -> int:
        return int(self.cutoffs.size)


@dataclass(frozen=True)
class ReservationValue:
    """Accept the first offer at or above ``gamma`` (unbounded horizon)."""

    gamma: float
    degenerate: bool = False

    def __post_init__(self):
        if not 0.0 <= self.gamma <= 1.0:
            raise DomainError(f"reservation value must lie in [0, 1], got {self.gamma}")


Policy = Union[SingleThreshold, StageThresholds, ValueCutoffs, ReservationValue]


# ---------------------------------------------------------------------------
# Single thresholds


def secretary_threshold(N: int) -> int:
    """Smallest c with sum_{k=c+1}^{N} 1/(k-1) <= 1."""
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    if N == 1:
        return 1
    tail = 0.0
    c = N
    # walk down while adding 1/(c-1) keeps the tail sum within 1
    while c > 1:
        nxt = tail + 1.0 / (c - 1)
        if nxt > 1.0:
            break
        tail = nxt
        c -= 1
    return c


def single_threshold(setting: SettingSpec) -> SingleThreshold:
    """Optimal integer threshold for the secretary, Bearden and postdoc problems."""
    N = setting.require_n()
    v = setting.variant
    if v is Variant.SECRETARY:
        c = secretary_threshold(N)
        return SingleThreshold(c, c)
    if v is Variant.BEARDEN:
        c = max(1, min(N, int(math.floor(math.sqrt(N) + 0.5))))
        return SingleThreshold(c, c)
    if v is Variant.POSTDOC:
        c = max(1, N // 2)
        return SingleThreshold(c, c + 1)
    raise UnsupportedVariantError(f"no finite-N optimal threshold for {v.value}")


def finite_threshold(setting: SettingSpec) -> SingleThreshold:
    """Threshold rule for a finite pool.

    Exact optimum where one is known (:func:`single_threshold`); otherwise
    the first floor(x N) applicants are passed over, with x the limiting
    fraction from :func:`asymptotic_threshold`. For Presman-Sonin the pool
    bound b plays the role of N.
    """
    v = setting.variant
    if v in (Variant.SECRETARY, Variant.BEARDEN, Variant.POSTDOC):
        return single_threshold(setting)
    if v not in RECORD_VARIANTS:
        raise UnsupportedVariantError(f"{v.value} is not a single-threshold problem")
    n = setting.b if v is Variant.PRESMAN_SONIN else setting.require_n()
    x = asymptotic_threshold(setting)
    c = max(1, int(math.floor(x * n)))
    return SingleThreshold(c, c + 1)


# ---------------------------------------------------------------------------
# Full-information cutoffs


def moser_values(m_max: int) -> np.ndarray:
    """Cutoffs A_0..A_{m_max} of the cardinal full-information problem."""
    out = np.empty(m_max + 1)
    a = 0.0
    for m in range(m_max + 1):
        out[m] = a
        a = 0.5 * (a * a + 1.0)
    return out


def moser_approx(m: Union[int, np.ndarray]):
    """Large-m approximation 1 - 2/(m + ln m + 1.76799) of the Moser cutoff."""
    m = np.asarray(m, dtype=float)
    return 1.0 - 2.0 / (m + np.log(m) + MOSER_APPROX_SHIFT)


def moser_cutoffs(N: int) -> ValueCutoffs:
    """Position-indexed Moser cutoffs: applicant i uses A_{N-i}."""
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    return ValueCutoffs(moser_values(N - 1)[::-1].copy(), candidate_only=False)


def decaying_values(m_max: int) -> np.ndarray:
    """Raw cutoffs B_0..B_{m_max} for the decaying pool, B_m = (m + B_{m-1}^2/m)/2."""
    out = np.empty(m_max + 1)
    out[0] = 0.0
    b = 0.0
    for m in range(1, m_max + 1):
        b = 0.5 * (m + b * b / m)
        out[m] = b
    return out


def decaying_cutoffs(N: int) -> ValueCutoffs:
    """Rejection probabilities B_m/(N + 1 - i) for the decaying applicant pool.

    Applicant i is uniform on [0, N + 1 - i]; with m = N - i left, it is
    rejected with probability B_m/(m + 1).
    """
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    b = decaying_values(N - 1)
    probs = b / np.arange(1, N + 1)
    return ValueCutoffs(probs[::-1].copy(), candidate_only=False)


_gm_lock = threading.Lock()
_gm_cache = np.array([0.0, 0.5])


def _gm_solve(m: int, y_hi: float, j: np.ndarray, h_m: float) -> float:
    """Solve sum_{k<=m} y^k/k = H_m + 1 for y = 1/A_m in (1, y_hi]."""
    jj = j[:m]

    def f_and_df(y):
        p = np.exp(jj * math.log(y))
        return float(np.sum(p / jj)) - h_m - 1.0, float(np.sum(p)) / y

    lo, hi = 1.0, y_hi
    y = min(1.0 + GM_CONSTANT / m, hi)
    for _ in range(50):
        f, df = f_and_df(y)
        if f == 0.0:
            return y
        if f > 0.0:
            hi = y
        else:
            lo = y
        y_new = y - f / df
        if not lo <= y_new <= hi:
            y_new = 0.5 * (lo + hi)
        if abs(y_new - y) <= 1e-15 * y:
            return y_new
        y = y_new
    # Newton stalled; fall back to bracketing
    return solve_root(lambda t: f_and_df(t)[0], Bracket(1.0, y_hi), tol=1e-16)


def gm_decision_values(m_max: int) -> np.ndarray:
    """Exact best-choice decision values A_0..A_{m_max}.

    A_m solves sum_{j=1}^{m} (A^{-j} - 1)/j = 1. Values are cached and
    extended on demand; each solve is warm-started from the previous one.
    """
    global _gm_cache
    if m_max < 0:
        raise DomainError("m_max must be >= 0")
    with _gm_lock:
        have = _gm_cache.size - 1
        if m_max > have:
            out = np.empty(m_max + 1)
            out[: have + 1] = _gm_cache
            j = np.arange(1, m_max + 1, dtype=float)
            harm = np.cumsum(1.0 / j)
            for m in range(have + 1, m_max + 1):
                y = _gm_solve(m, 1.0 / out[m - 1], j, harm[m - 1])
                out[m] = 1.0 / y
            out.setflags(write=False)
            _gm_cache = out
        return _gm_cache[: m_max + 1]


def gm_residual(m: int, a: float) -> float:
    """Residual of the defining equation of A_m at ``a``."""
    j = np.arange(1, m + 1, dtype=float)
    return float(np.sum((np.exp(-j * math.log(a)) - 1.0) / j)) - 1.0


def gm_cutoffs(N: int, c_const: float = GM_CONSTANT, m_exact: int = 10_000) -> ValueCutoffs:
    """Decision values for the full-information candidate problems.

    With the best-choice constant, positions with m = N - i <= ``m_exact``
    use the exact decision values and the rest use the first-order form
    A_m = m/(m + c). Any other constant (duration variants) uses the
    first-order form throughout.
    """
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    if not c_const > 0.0:
        raise DomainError("c_const must be positive")
    m = np.arange(N, dtype=float)
    values = m / (m + c_const)
    if c_const == GM_CONSTANT and m_exact > 0:
        k = min(N - 1, m_exact)
        values[: k + 1] = gm_decision_values(k)
    return ValueCutoffs(values[::-1].copy(), candidate_only=True)


def gm_constant(tol: float = 1e-15) -> float:
    """Root of sum_{j>=1} c^j/(j! j) = 1, the best-choice decision constant."""

    def f(c):
        total, term, j = 0.0, 1.0, 1
        while True:
            term *= c / j
            add = term / j
            total += add
            if add < 1e-17:
                return total - 1.0
            j += 1

    return solve_root(f, Bracket(0.5, 1.0), tol=tol)


def fi_best_choice_duration_constant(tol: float = 1e-15) -> float:
    """Root of e^c = 1 + 2c in [1, 2]."""
    return solve_root(lambda c: math.expm1(c) - 2.0 * c, Bracket(1.0, 2.0), tol=tol)


# ---------------------------------------------------------------------------
# Stage thresholds


def _log_factor(j: int) -> float:
    return math.log1p(2.0 / j) / (j + 1.0)


def lindley_v_infinity(head_terms: int = 2000) -> float:
    """Limiting optimal expected rank V = prod_{j>=1} (1 + 2/j)^{1/(j+1)}.

    The first ``head_terms`` log-factors are summed directly. The rest use
    log(1 + 2/j)/(j + 1) = sum_{m>=2} (-1)^m a_m j^{-m} with
    a_m = sum_{k<m} 2^k/k, summed against Hurwitz zeta values.
    """
    head = math.fsum(_log_factor(j) for j in range(1, head_terms + 1))
    tail = 0.0
    a = 0.0
    for m in range(2, 30):
        a += 2.0 ** (m - 1) / (m - 1)
        term = (-1) ** m * a * float(zeta(m, head_terms + 1))
        tail += term
        if abs(term) < 1e-18:
            break
    return math.exp(head + tail)


def lindley_stages(max_stages: int) -> StageThresholds:
    """c(x) = prod_{j<x} (1 + 2/j)^{1/(j+1)} / V for x = 1..max_stages."""
    if max_stages < 1:
        raise DomainError("max_stages must be >= 1")
    v = lindley_v_infinity()
    logs = np.cumsum([0.0] + [_log_factor(j) for j in range(1, max_stages)])
    fr = np.exp(logs) / v
    return StageThresholds(tuple(float(x) for x in fr if x <= 1.0))


def _rank_success(r: int, t: float, S: int) -> float:
    """P(overall rank <= S | relative rank r at time fraction t), large-pool limit."""
    return sum(comb(r - 1 + k, k, exact=True) * t**r * (1.0 - t) ** k for k in range(S - r + 1))


def solve_gusein_zade_stages(S: int, rtol: float = 1e-12) -> tuple:
    """Stage fractions of the best-S-or-better problem in the large-pool limit.

    The continuation value V(t) obeys V' = -(1/t) sum_r max(q_r(t) - V, 0)
    with V(1) = 0, where relative rank r arrives at rate 1/t and q_r is the
    chance that such an applicant finishes within the top S. Stage d starts
    where q_d(t) meets V(t); the ODE is integrated backward from t = 1 and the
    crossings are located as solver events.
    """
    S = int(S)
    if S < 1:
        raise DomainError("S must be >= 1")
    if S == 1:
        return (math.exp(-1.0),)

    def rhs(t, y):
        return [-sum(max(_rank_success(r, t, S) - y[0], 0.0) for r in range(1, S + 1)) / t]

    def make_event(r):
        def ev(t, y):
            return _rank_success(r, t, S) - y[0]

        ev.terminal = False
        ev.direction = 0
        return ev

    events = [make_event(r) for r in range(1, S + 1)]
    sol = solve_ivp(rhs, (1.0, 1e-4), [0.0], method="DOP853", rtol=rtol, atol=1e-15, events=events)
    if sol.status < 0:
        raise ConvergenceError(f"stage ODE failed: {sol.message}")
    stages = []
    for r, hits in enumerate(sol.t_events, start=1):
        if len(hits) == 0:
            raise ConvergenceError(f"no stage crossing found for rank {r}")
        stages.append(float(hits[0]))
    return tuple(stages)


# Frozen output of solve_gusein_zade_stages for the tabulated target ranks.
GUSEIN_ZADE_STAGES = {
    2: (0.3469816097, 0.6666666667),
    3: (0.3367151938, 0.5867809359, 0.7745966692),
    5: (0.3254561115, 0.5115529944, 0.6476666259, 0.7606721221, 0.8633400214),
    10: (
        0.3128503005, 0.4366764159, 0.5288856015, 0.6050957926, 0.6712303693,
        0.7303726257, 0.7844482615, 0.8348820662, 0.8830423908, 0.9311665738,
    ),
    15: (
        0.3068282434, 0.4033957309, 0.4765409292, 0.5375902423, 0.5908570074,
        0.6385704162, 0.6820751067, 0.7222659873, 0.7597839957, 0.7951190710,
        0.8286737090, 0.8608134495, 0.8919291741, 0.9225729713, 0.9540025129,
    ),
    25: (
        0.3005891820, 0.3702147119, 0.4241887520, 0.4698961084, 0.5101891307,
        0.5465556755, 0.5798972487, 0.6108126923, 0.6397256340, 0.6669499269,
        0.6927265681, 0.7172460606, 0.7406627482, 0.7631044650, 0.7846793356,
        0.8054808155, 0.8255916802, 0.8450874942, 0.8640400840, 0.8825217283,
        0.9006114017, 0.9184062208, 0.9360472497, 0.9537941407, 0.9723501011,
    ),
}


def stage_thresholds(
    setting: SettingSpec,
    max_stages: int = 50,
    fractions: Optional[Sequence[float]] = None,
) -> StageThresholds:
    """Stage fractions for the Lindley and Gusein-Zade problems.

    Gusein-Zade uses the tabulated stages for S in {2, 3, 5, 10, 15, 25} or a
    caller-supplied ``fractions`` vector; other S raise (use
    :func:`solve_gusein_zade_stages` to derive them).
    """
    v = setting.variant
    if fractions is not None:
        return StageThresholds(tuple(fractions))
    if v is Variant.LINDLEY:
        return lindley_stages(max_stages)
    if v is Variant.GUSEIN_ZADE:
        S = setting.S
        if S not in GUSEIN_ZADE_STAGES:
            raise UnsupportedVariantError(
                f"no tabulated stages for S={S}; pass fractions= or call solve_gusein_zade_stages"
            )
        return StageThresholds(GUSEIN_ZADE_STAGES[int(S)][:max_stages])
    raise UnsupportedVariantError(f"{v.value} is not a multi-stage problem")


# ---------------------------------------------------------------------------
# House selling


def reservation_value(cost: float) -> ReservationValue:
    """gamma = 1 - sqrt(2 cost); costs above 1/2 make any offer acceptable."""
    if not cost > 0.0:
        raise DomainError(f"cost must be positive, got {cost}")
    if cost > 0.5:
        return ReservationValue(0.0, degenerate=True)
    return ReservationValue(max(0.0, 1.0 - math.sqrt(2.0 * cost)))


# ---------------------------------------------------------------------------
# Asymptotic thresholds and objectives


def best_choice_duration_threshold() -> float:
    """Root of 2x - ln x = 2 in (0, 1), written as -W(-2/e^2)/2."""
    return -0.5 * lambert_w(-2.0 * math.exp(-2.0), "principal")


def szajowski_threshold(cost_coefficient: float) -> float:
    """Root in (0, 1) of ln c = b (c - 1) with b = 1 + 1/(2 C)."""
    if not cost_coefficient > 0.0:
        raise DomainError("cost coefficient must be positive")
    b = 1.0 + 1.0 / (2.0 * cost_coefficient)
    # Solve for u = ln c so that tiny roots keep full relative accuracy.
    # g(-b - 1) < 0 and g peaks at u = -ln b, where it is positive.
    g = lambda u: u - b * math.expm1(u)
    return math.exp(solve_root(g, Bracket(-b - 1.0, -math.log(b)), tol=1e-15))


def asymptotic_threshold(setting: SettingSpec) -> float:
    """Limiting fraction of applicants passed over by the optimal rule."""
    v = setting.variant
    if v is Variant.SECRETARY:
        return math.exp(-1.0)
    if v is Variant.SAKAGUCHI:
        return math.exp(-0.5)
    if v is Variant.POSTDOC:
        return 0.5
    if v in (Variant.PRESMAN_SONIN, Variant.NO_INFO_DURATION):
        return math.exp(-2.0)
    if v is Variant.SMITH:
        p = setting.p
        return math.exp(-1.0) if p == 1.0 else p ** (1.0 / (1.0 - p))
    if v in (Variant.NO_INFO_BEST_CHOICE_DURATION, Variant.INTERVIEW_COST):
        return best_choice_duration_threshold()
    if v is Variant.SZAJOWSKI_COST:
        return szajowski_threshold(setting.cost)
    raise UnsupportedVariantError(f"no single limiting threshold for {v.value}")


def objective_value(setting: SettingSpec, c: int) -> float:
    """Objective of the threshold rule with threshold ``c``.

    Secretary: success probability ((c-1)/N) sum_{k=c}^{N} 1/(k-1).
    Bearden: expected value (2Nc - c^2 + c - N)/(2Nc).
    Postdoc: success probability c(N-c)/(N(N-1)) after passing over c.
    Interview cost: expected payoff with a cost of 1/N per applicant.
    """
    N = setting.require_n()
    if not 1 <= c <= N:
        raise DomainError(f"threshold must lie in [1, {N}], got {c}")
    v = setting.variant
    if v is Variant.SECRETARY:
        if c == 1:
            return 1.0 / N
        return (c - 1) / N * (digamma(N) - digamma(c - 1))
    if v is Variant.BEARDEN:
        return (2.0 * N * c - c * c + c - N) / (2.0 * N * c)
    if v is Variant.POSTDOC:
        if N == 1:
            return 0.0
        return c * (N - c) / (N * (N - 1.0))
    if v is Variant.INTERVIEW_COST:
        if c == 1:
            return 0.0
        return (c - 1) / N * ((N - 1) * (digamma(N) - digamma(c - 1)) - (N - c + 1)) / N
    raise UnsupportedVariantError(f"no finite-N objective for {v.value}")
