"""
Limiting proportions, checked by simulation
===========================================

For large pools the fraction T/N settles down. The library computes the
limits directly; simulation with a fixed seed shows finite pools get there.
"""

import math

from stopdur import SettingSpec, Variant, asymptotic_report, simulate
from stopdur.duration import lindley_series
from stopdur.policies import finite_threshold, gm_cutoffs, stage_thresholds
from stopdur.tables import table3_rows

# The whole limiting table in one go.
for r in table3_rows():
    print(f"{r.setting:30s} {r.statistic:16s} {r.value:.6f}")

# %%
# The expected-rank rule: the mean fraction is a slowly converging series.
L = lindley_series()
print(f"first 50 terms {L.head_sum:.7f}, remaining tail {L.tail:.2e} (bound {L.tail_bound:.2e})")

# %%
# Simulation for a few settings at N = 1000.
N = 1000
cases = [
    SettingSpec(Variant.SECRETARY, N=N),
    SettingSpec(Variant.NO_INFO_DURATION, N=N),
    SettingSpec(Variant.SAKAGUCHI, N=N),
]
for s in cases:
    sim = simulate(s, finite_threshold(s), 200_000, seed=1)
    lim = asymptotic_report(s).mean_fraction
    print(f"{s.variant.value:20s} simulated {sim.mean_fraction:.4f} +- {sim.se_fraction:.4f}   limit {lim:.4f}")

s = SettingSpec(Variant.LINDLEY, N=200)
sim = simulate(s, stage_thresholds(s), 20_000, seed=1)
print(f"lindley N=200       simulated {sim.mean_fraction:.4f}   limit {asymptotic_report(s).mean_fraction:.4f}")

s = SettingSpec(Variant.GM_BEST_CHOICE, N=N)
sim = simulate(s, gm_cutoffs(N), 200_000, seed=1, workers=4)
rep = asymptotic_report(s)
print(f"gm-best-choice      success {sim.success_rate:.4f}  limit {rep.success_prob:.4f}")

# %%
# The number of workers never changes a result: blocks have their own streams.
a = simulate(s, gm_cutoffs(N), 150_000, seed=5, workers=1)
b = simulate(s, gm_cutoffs(N), 150_000, seed=5, workers=3)
print("identical across workers:", a.to_dict() == b.to_dict())

# %%
# An unknown pool size, uniform on 1..b.
s = SettingSpec(Variant.PRESMAN_SONIN, b=100_000)
sim = simulate(s, finite_threshold(s), 200_000, seed=7)
x = math.exp(-2)
print(f"E(T)/b simulated {sim.mean_T / 100_000:.4f}, 2x + x^2/2 = {2 * x + x * x / 2:.4f}")
