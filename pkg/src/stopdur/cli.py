"""Command-line front end.

    stopdur table table2|table3 [--format csv|json] [--precision k] [--out PATH]
    stopdur dist --setting NAME [--n N] [--s S] [--p P] [--b B] [--cost C] ...
    stopdur simulate --setting NAME ... --trials T --seed SEED

Exit status is 0 on success, 2 for invalid arguments and 3 when an exact
computation is refused because the pool is too large.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import List, Optional

from . import duration as du
from . import policies as po
from .errors import DomainError, ExactModeUnavailable, UnsupportedVariantError
from .montecarlo import simulate
from .policies import SettingSpec, Variant
from .tables import OutputRecord, table2_rows, table3_rows

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3

# Variants whose T has the same law as a plain threshold rule on records.
_THRESHOLD_LAW = (po.RECORD_VARIANTS | {Variant.POSTDOC}) - {Variant.SMITH, Variant.PRESMAN_SONIN}


def _fmt(value, precision: int):
    if isinstance(value, str):
        return value
    if isinstance(value, (int,)) and not isinstance(value, bool):
        return str(value)
    return format(float(value), f".{precision}g")


def _num(value, precision: int):
    """Value rounded to ``precision`` significant digits, as a JSON number."""
    if value is None or isinstance(value, (str, bool)):
        return value
    if isinstance(value, int):
        return value
    return float(format(float(value), f".{precision}g"))


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render_records(records: List[OutputRecord], fmt: str, precision: int) -> str:
    if fmt == "json":
        return dump_json(
            [
                {
                    "setting": r.setting,
                    "N": r.N,
                    "statistic": r.statistic,
                    "value": _num(r.value, precision),
                    "provenance": r.provenance,
                }
                for r in records
            ]
        )
    return _csv(
        ("setting", "N", "statistic", "value", "provenance"),
        [(r.setting, r.N, r.statistic, _fmt(r.value, precision), r.provenance) for r in records],
    )


# ---------------------------------------------------------------------------
# Settings and default policies


def setting_from_args(args) -> SettingSpec:
    return SettingSpec(
        Variant(args.setting),
        N=args.n,
        S=math.inf if args.s == "inf" else (int(args.s) if args.s is not None else None),
        p=args.p,
        b=args.b,
        cost=args.cost,
    )


def default_policy(setting: SettingSpec):
    """The optimal (or limiting) policy used for a setting by the commands."""
    v = setting.variant
    if v in po.RECORD_VARIANTS or v is Variant.POSTDOC:
        return po.finite_threshold(setting)
    if v is Variant.MOSER:
        return po.moser_cutoffs(setting.require_n())
    if v is Variant.MOSER_DECAYING:
        return po.decaying_cutoffs(setting.require_n())
    if v is Variant.GM_BEST_CHOICE:
        return po.gm_cutoffs(setting.require_n())
    if v is Variant.FI_DURATION:
        return po.gm_cutoffs(setting.require_n(), po.FI_DURATION_CONSTANT)
    if v is Variant.FI_BEST_CHOICE_DURATION:
        return po.gm_cutoffs(setting.require_n(), po.FI_BEST_CHOICE_DURATION_CONSTANT)
    if v in po.STAGE_VARIANTS:
        return po.stage_thresholds(setting)
    if v is Variant.HOUSE_SELLING:
        return po.reservation_value(setting.cost)
    raise UnsupportedVariantError(f"no default policy for {v.value}")  # pragma: no cover


def exact_distribution(setting: SettingSpec) -> Optional[du.DurationDistribution]:
    """Exact finite-N law of T, or None when only limiting results exist."""
    v = setting.variant
    if setting.N is None:
        return None
    N = setting.N
    if v in _THRESHOLD_LAW:
        return du.no_info_pmf(N, po.finite_threshold(setting))
    if v in (Variant.MOSER, Variant.MOSER_DECAYING):
        return du.cutoff_pmf(N, default_policy(setting))
    if v in po.FULL_INFO_CANDIDATE_VARIANTS:
        if N > du.GM_EXACT_CAP:
            raise ExactModeUnavailable(
                f"exact mode unavailable: N={N} exceeds the cap of {du.GM_EXACT_CAP}; "
                "use asymptotic_report"
            )
        return du.gm_pmf(N, default_policy(setting))
    return None


def _label(setting: SettingSpec) -> str:
    if setting.variant is Variant.GUSEIN_ZADE:
        return f"gusein-zade S={setting.S}"
    return setting.variant.value


# ---------------------------------------------------------------------------
# Commands


def cmd_table(args) -> str:
    rows = table2_rows() if args.which == "table2" else table3_rows()
    return render_records(rows, args.format, args.precision)


def cmd_dist(args) -> str:
    setting = setting_from_args(args)
    k = args.precision
    label = _label(setting)
    if setting.variant is Variant.HOUSE_SELLING:
        stats = du.house_selling_stats(setting.cost)
        p = min(1.0, math.sqrt(2.0 * setting.cost))
        top = du.house_selling_stats(setting.cost, quantiles=(0.9999,)).quantiles[0.9999]
        rows = []
        for x in range(1, top + 1):
            rows.append((x, p * (1.0 - p) ** (x - 1), 1.0 - (1.0 - p) ** x))
        return _dist_output(label, "unbounded", rows, stats.mean, stats.median, args.format, k)

    dist = exact_distribution(setting)
    if dist is None:
        rep = du.asymptotic_report(setting)
        recs = [OutputRecord(label, "asymptotic", "mean_fraction", rep.mean_fraction, "asymptotic")]
        if rep.median_fraction is not None:
            recs.append(OutputRecord(label, "asymptotic", "median_fraction", rep.median_fraction, "asymptotic"))
        if rep.no_choice_prob is not None:
            recs.append(OutputRecord(label, "asymptotic", "no_choice", rep.no_choice_prob, "asymptotic"))
        return render_records(recs, args.format, k)
    cdf = dist.cdf()
    rows = [(x, float(dist.pmf[x - 1]), float(cdf[x - 1])) for x in range(1, dist.N + 1)]
    return _dist_output(label, dist.N, rows, dist.mean(), dist.median(), args.format, k, dist.no_choice_mass)


def _dist_output(label, N, rows, mean, median, fmt, k, no_choice=None) -> str:
    if fmt == "json":
        return dump_json(
            {
                "setting": label,
                "N": N,
                "mean": _num(mean, k),
                "median": int(median),
                "no_choice": _num(no_choice, k),
                "rows": [{"x": x, "pmf": _num(p, k), "cdf": _num(c, k)} for x, p, c in rows],
            }
        )
    return _csv(
        ("setting", "N", "x", "pmf", "cdf", "mean", "median"),
        [(label, N, x, _fmt(p, k), _fmt(c, k), _fmt(mean, k), int(median)) for x, p, c in rows],
    )


def reference_values(setting: SettingSpec, policy) -> dict:
    """Exact or limiting values to print next to a simulation."""
    ref = {}
    v = setting.variant
    try:
        dist = exact_distribution(setting)
    except ExactModeUnavailable:
        dist = None
    if dist is not None:
        ref["mean_T"] = (dist.mean(), "exact")
        ref["median_T"] = (dist.median(), "exact")
        if dist.no_choice_mass is not None:
            ref["no_choice_rate"] = (dist.no_choice_mass, "exact")
    if v in (Variant.SECRETARY, Variant.POSTDOC) and setting.N is not None:
        ref["success_rate"] = (po.objective_value(setting, policy.c), "exact")
    if v is Variant.BEARDEN:
        ref["mean_payoff"] = (po.objective_value(setting, policy.c), "exact")
    try:
        rep = du.asymptotic_report(setting)
    except UnsupportedVariantError:
        rep = None
    if rep is not None:
        ref["mean_fraction"] = (rep.mean_fraction, "asymptotic")
        if rep.success_prob is not None:
            ref.setdefault("success_rate", (rep.success_prob, "asymptotic"))
        if rep.no_choice_prob is not None:
            ref.setdefault("no_choice_rate", (rep.no_choice_prob, "asymptotic"))
    if v is Variant.HOUSE_SELLING:
        hs = du.house_selling_stats(setting.cost)
        ref["mean_T"] = (hs.mean, "exact")
        ref["median_T"] = (hs.median, "exact")
    if v is Variant.NO_INFO_DURATION:
        ref["mean_payoff_fraction"] = (2.0 * math.exp(-2.0), "asymptotic")
    return ref


def cmd_simulate(args) -> str:
    setting = setting_from_args(args)
    policy = default_policy(setting)
    summary = simulate(setting, policy, args.trials, args.seed, workers=args.workers)
    ref = reference_values(setting, policy)
    k = args.precision
    fields = [
        ("mean_T", summary.mean_T, summary.se_mean),
        ("median_T", summary.median_T, None),
        ("mean_fraction", summary.mean_fraction, summary.se_fraction),
        ("success_rate", summary.success_rate, summary.se_success),
        ("no_choice_rate", summary.no_choice_rate, summary.se_no_choice),
        ("mean_payoff", summary.mean_payoff, summary.se_payoff),
    ]
    fields = [f for f in fields if f[1] is not None]
    if args.format == "json":
        return dump_json(
            {
                "setting": _label(setting),
                "N": setting.N,
                "trials": summary.trials,
                "seed": summary.seed,
                "statistics": [
                    {
                        "statistic": name,
                        "value": _num(val, k),
                        "se": _num(se, k),
                        "reference": _num(ref[name][0], k) if name in ref else None,
                        "reference_provenance": ref[name][1] if name in ref else None,
                    }
                    for name, val, se in fields
                ],
            }
        )
    return _csv(
        ("setting", "N", "trials", "seed", "statistic", "value", "se", "reference", "reference_provenance"),
        [
            (
                _label(setting),
                setting.N if setting.N is not None else "",
                summary.trials,
                summary.seed,
                name,
                _fmt(val, k),
                "" if se is None else _fmt(se, k),
                _fmt(ref[name][0], k) if name in ref else "",
                ref[name][1] if name in ref else "",
            )
            for name, val, se in fields
        ],
    )


# ---------------------------------------------------------------------------


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stopdur", description="Search-duration statistics for optimal stopping rules."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--precision", type=_positive_int, default=6, help="significant digits")
    common.add_argument("--out", help="write to this file instead of standard output")

    setting = argparse.ArgumentParser(add_help=False)
    setting.add_argument("--setting", required=True, choices=[v.value for v in Variant])
    setting.add_argument("--n", type=_positive_int, help="pool size N")
    setting.add_argument("--s", help="target rank S (integer or 'inf')")
    setting.add_argument("--p", type=float, help="acceptance probability")
    setting.add_argument("--b", type=_positive_int, help="largest possible pool size")
    setting.add_argument("--cost", type=float, help="cost per observation")

    sub = parser.add_subparsers(dest="command", required=True)
    t = sub.add_parser("table", parents=[common], help="reproduce a summary table")
    t.add_argument("which", choices=("table2", "table3"))
    t.set_defaults(func=cmd_table)

    d = sub.add_parser("dist", parents=[common, setting], help="distribution of T")
    d.set_defaults(func=cmd_dist)

    s = sub.add_parser("simulate", parents=[common, setting], help="Monte Carlo run")
    s.add_argument("--trials", type=_positive_int, default=100_000)
    s.add_argument("--seed", type=_nonneg_int, default=0)
    s.add_argument("--workers", type=_positive_int, default=1)
    s.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "s", None) not in (None, "inf"):
        try:
            int(args.s)
        except ValueError:
            parser.error(f"--s expects an integer or 'inf', got {args.s!r}")
    try:
        text = args.func(args)
    except ExactModeUnavailable as exc:
        print(f"stopdur: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DomainError, UnsupportedVariantError) as exc:
        print(f"stopdur: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
