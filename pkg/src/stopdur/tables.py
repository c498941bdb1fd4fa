"""Finite-pool and limiting summary tables as flat records."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Union

from .duration import (
    asymptotic_report,
    cutoff_pmf,
    gm_pmf,
    no_info_pmf,
)
from .policies import (
    SettingSpec,
    Variant,
    gm_cutoffs,
    moser_cutoffs,
    single_threshold,
)

TABLE2_SIZES = (9, 25, 49, 64, 100, 400, 2500, 10_000)
TABLE2_LARGE = 1_000_000

STATISTICS = ("mean", "median", "mean_fraction", "median_fraction", "quantile_p", "success", "no_choice")
PROVENANCES = ("exact", "asymptotic", "montecarlo")


@dataclass(frozen=True)
class OutputRecord:
    setting: str
    N: Union[int, str]
    statistic: str
    value: float
    provenance: str

    def __post_init__(self):
        if self.statistic not in STATISTICS:
            raise ValueError(f"unknown statistic {self.statistic!r}")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if not math.isfinite(self.value):
            raise ValueError("record value must be finite")


def _pair(label, N, dist, provenance="exact"):
    return [
        OutputRecord(label, N, "mean", dist.mean(), provenance),
        OutputRecord(label, N, "median", float(dist.median()), provenance),
    ]


def table2_rows(sizes=TABLE2_SIZES, include_large: bool = True) -> List[OutputRecord]:
    """Mean and median of T for the Moser, Bearden, dowry and best-choice rules.

    The best-choice column uses exact cutoffs and the quadratic PMF up to
    N = 10^4; at N = 10^6 it falls back to the limiting fractions times N.
    """
    rows: List[OutputRecord] = []
    sizes = list(sizes) + ([TABLE2_LARGE] if include_large else [])
    for N in sizes:
        rows += _pair("moser", N, cutoff_pmf(N, moser_cutoffs(N)))
        for variant in (Variant.BEARDEN, Variant.SECRETARY):
            policy = single_threshold(SettingSpec(variant, N=N))
            rows += _pair(variant.value, N, no_info_pmf(N, policy))
        label = Variant.GM_BEST_CHOICE.value
        if N <= TABLE2_SIZES[-1]:
            rows += _pair(label, N, gm_pmf(N, gm_cutoffs(N)))
        else:
            rep = asymptotic_report(SettingSpec(Variant.GM_BEST_CHOICE))
            rows.append(OutputRecord(label, N, "mean", rep.mean_fraction * N, "asymptotic"))
            rows.append(OutputRecord(label, N, "median", rep.median_fraction * N, "asymptotic"))
    return rows


# (row label, setting) in the order the limiting table is printed
TABLE3_SETTINGS = (
    ("gusein-zade S=inf", SettingSpec(Variant.GUSEIN_ZADE, S=math.inf)),
    ("moser", SettingSpec(Variant.MOSER)),
    ("fi-duration", SettingSpec(Variant.FI_DURATION)),
    ("no-info-duration", SettingSpec(Variant.NO_INFO_DURATION)),
    ("fi-best-choice-duration", SettingSpec(Variant.FI_BEST_CHOICE_DURATION)),
    ("gusein-zade S=25", SettingSpec(Variant.GUSEIN_ZADE, S=25)),
    ("lindley", SettingSpec(Variant.LINDLEY)),
    ("gusein-zade S=15", SettingSpec(Variant.GUSEIN_ZADE, S=15)),
    ("no-info-best-choice-duration", SettingSpec(Variant.NO_INFO_BEST_CHOICE_DURATION)),
    ("gm-best-choice", SettingSpec(Variant.GM_BEST_CHOICE)),
    ("gusein-zade S=10", SettingSpec(Variant.GUSEIN_ZADE, S=10)),
    ("gusein-zade S=5", SettingSpec(Variant.GUSEIN_ZADE, S=5)),
    ("gusein-zade S=3", SettingSpec(Variant.GUSEIN_ZADE, S=3)),
    ("gusein-zade S=2", SettingSpec(Variant.GUSEIN_ZADE, S=2)),
    ("secretary", SettingSpec(Variant.SECRETARY)),
    ("postdoc", SettingSpec(Variant.POSTDOC)),
    ("sakaguchi", SettingSpec(Variant.SAKAGUCHI)),
)


def table3_rows() -> List[OutputRecord]:
    """Limiting mean and median proportions of the pool interviewed."""
    rows: List[OutputRecord] = []
    for label, setting in TABLE3_SETTINGS:
        rep = asymptotic_report(setting)
        rows.append(OutputRecord(label, "asymptotic", "mean_fraction", rep.mean_fraction, "asymptotic"))
        if rep.median_fraction is not None:
            rows.append(
                OutputRecord(label, "asymptotic", "median_fraction", rep.median_fraction, "asymptotic")
            )
    return rows
