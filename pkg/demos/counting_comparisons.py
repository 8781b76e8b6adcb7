#!/usr/bin/env python3
# Comparisons used by three quicksorts on random inputs.
#
# Count decides which pivot to try first from the classes seen so far;
# Clairvoyant cheats and knows the classes still to come; classic is the
# single-pivot baseline.  Exact averages come from the recurrence, the
# simulated ones from seeded random permutations.

import numpy as np

from dplab import analysis, sorting
from dplab.harness import sample_rng

sizes = [10, 100, 1000]
runs = 200
seed = 7

algos = {
    "count": (sorting.sort_count, analysis.total_cost_count_closed),
    "clairvoyant": (sorting.sort_clairvoyant, analysis.total_cost_clairvoyant_closed),
    "classic": (sorting.sort_classic, analysis.classic_cost),
}

print(f"{'n':>5} {'algorithm':>12} {'simulated':>11} {'+-':>7} {'exact':>11}")
for n in sizes:
    for name, (sort, exact) in algos.items():
        costs = np.array([sort(sample_rng(seed, i).permutation(n).tolist())[1].total for i in range(runs)])
        se = costs.std(ddof=1) / np.sqrt(runs)
        print(f"{n:5d} {name:>12} {costs.mean():11.2f} {se:7.2f} {float(exact(n)):11.2f}")

# where the comparisons go on one input
out, tally = sorting.sort_count(sample_rng(seed, 0).permutation(1000).tolist())
print(f"\none input of size 1000: {tally.pivot_pivot} pivot-pivot, {tally.necessary} necessary, "
      f"{tally.additional} additional")

# the exact values are rationals with large denominators
c = analysis.total_cost_count_closed(30)
print(f"\nE[C_30] for Count = {float(c):.6f}, denominator has {len(str(c.denominator))} digits")

# asymptotic expansions against the exact values
print(f"\n{'n':>6} {'exact':>14} {'expansion':>14} {'diff * n^4':>11}")
for n in (10, 50, 200, 400):
    exact = analysis.total_cost_count_closed(n)
    approx = analysis.asymptotic_total("count", n)
    print(f"{n:6d} {float(exact):14.6f} {approx:14.6f} {abs(float(exact) - approx) * n**4:11.3g}")

# the leading term 9/5 n ln n beats classic 2 n ln n
ratio = [float(analysis.total_cost_count_closed(n) / analysis.classic_cost(n)) for n in (10, 100, 1000)]
print("\nCount / classic:", ", ".join(f"{r:.4f}" for r in ratio))
