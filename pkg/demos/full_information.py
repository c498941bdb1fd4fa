"""
Full information: acting on the observed values
===============================================

When the applicants' values are seen (uniform on [0, 1]) the optimal rules
use per-position cutoffs. The search is then far shorter than under a
threshold rule.
"""

import numpy as np

from stopdur import SettingSpec, Variant, asymptotic_report, cutoff_pmf, gm_cutoffs, gm_pmf, moser_cutoffs
from stopdur.duration import decaying_pool_distribution, house_selling_stats
from stopdur.policies import gm_constant, moser_values

# Maximising the expected value: accept applicant i if it beats A_{N-i}.
A = moser_values(6)
print("cutoffs A_0..A_6:", np.round(A, 4).tolist())

for N in (9, 100, 10_000, 1_000_000):
    d = cutoff_pmf(N, moser_cutoffs(N))
    print(f"N={N:8d}  E(T)/N={d.mean() / N:.5f}  median/N={d.median() / N:.5f}")
print("the law of T/N tends to a triangle: mean 1/3, median 1 - sqrt(1/2)")

# %%
# Maximising the chance of the very best: candidates only, cutoffs from a
# nonlinear equation per remaining count.
print(f"decision constant c = {gm_constant():.10f}")
for N in (25, 100, 2500):
    d = gm_pmf(N, gm_cutoffs(N))
    print(f"N={N:5d}  E(T)={d.mean():9.3f}  median={d.median():5d}  no choice={d.no_choice_mass:.4f}")
rep = asymptotic_report(SettingSpec(Variant.GM_BEST_CHOICE))
print(f"limit: mean {rep.mean_fraction:.6f}, median {rep.median_fraction:.6f}, no choice {rep.no_choice_prob:.6f}")

# %%
# A pool whose values shrink as the search goes on stops after about
# sqrt(N/2) interviews.
for N in (10_000, 1_000_000):
    d = decaying_pool_distribution(N)
    print(f"N={N:8d}  E(T)={d.mean():9.3f}  sqrt(N/2)={np.sqrt(N / 2):9.3f}")

# %%
# With no fixed pool but a cost per offer, the number of offers is geometric.
for cost in (0.001, 0.01, 0.1):
    s = house_selling_stats(cost)
    print(f"cost {cost:<6} mean offers {s.mean:7.2f}  median {s.median}")
