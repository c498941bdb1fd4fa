"""
How long does a threshold rule keep you searching?
==================================================

Pass over the first applicants, then take the next one who beats everybody
seen so far. This script walks through the law of the number of interviews
T for that rule and checks it against brute force.
"""

import math

import numpy as np

from stopdur import SettingSpec, Variant, no_info_mean, no_info_pmf, single_threshold
from stopdur.duration import inverse_threshold_for_mean, no_info_quantile
from stopdur.montecarlo import enumerate_exact_fractions

# The classic rule for N = 100: wait, then pick the first relatively best.
setting = SettingSpec(Variant.SECRETARY, N=100)
policy = single_threshold(setting)
dist = no_info_pmf(100, policy)
print(f"threshold c = {policy.c}")
print(f"E(T) = {dist.mean():.4f}  (closed form {no_info_mean(100, policy):.4f})")
print(f"median T = {dist.median()}, i.e. 2(c-1) = {2 * (policy.c - 1)}")

# %%
# Most of the mass sits at the very end: whoever is still searching at the
# last applicant has to take it.
print(f"Pr(T = N) = {dist.pmf[-1]:.4f}  vs  (c-1)/(N-1) = {(policy.c - 1) / 99:.4f}")

# %%
# Quantiles of T are (c-1)/(1-p), so the upper quartile is 4(c-1).
for p in (0.2, 0.5, 0.75, 0.9):
    print(f"  p={p:<4}  quantile {dist.quantile(p):3d}   formula {no_info_quantile(policy.c, p, N=100)}")

# %%
# Brute force: with N = 6 every relative-rank sequence can be listed.
small = SettingSpec(Variant.SECRETARY, N=6)
ex = enumerate_exact_fractions(small, single_threshold(small))
print("enumerated pmf:", [str(p) for p in ex.pmf])
print("formula pmf:   ", np.round(no_info_pmf(6, single_threshold(small)).pmf, 6).tolist())
print("success probability", ex.success)

# %%
# Bearden's cardinal-payoff rule waits only about sqrt(N) applicants, so it
# ends much sooner than the best-choice rule.
for N in (100, 2500, 10_000):
    b = no_info_mean(N, single_threshold(SettingSpec(Variant.BEARDEN, N=N)))
    s = no_info_mean(N, single_threshold(SettingSpec(Variant.SECRETARY, N=N)))
    print(f"N={N:6d}  Bearden E(T)={b:9.3f}   best-choice E(T)={s:10.3f}")

# %%
# Going the other way: which threshold fraction makes you interview half
# of the pool on average?
x = inverse_threshold_for_mean(0.5)
print(f"threshold fraction {x:.6f} gives mean fraction {x * (1 - math.log(x)):.6f}")
