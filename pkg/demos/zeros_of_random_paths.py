#!/usr/bin/env python3
# How often does a random +-1 path come back to the axis?
#
# The endpoint is drawn uniformly first, then a uniform path to it.  The
# expected number of visits to zero (counting the start) grows like
# (log n)/2, and the number of visits converges in law to 1/(r(r+1)).

import numpy as np

from dplab import paths
from dplab.analysis import expected_zeros_asymptotic
from dplab.harness import sample_rng

n = 400
samples = 20000
seed = 2024

zeros = np.array([paths.sample_path_stats(n, sample_rng(seed, i)).zeros for i in range(samples)])

exact_mean = paths.expected_zeros_closed(n)
print(f"n = {n}, {samples} sampled paths")
print(f"  mean zeros   empirical {zeros.mean():.4f} +- {zeros.std(ddof=1) / np.sqrt(samples):.4f}")
print(f"               exact     {float(exact_mean):.4f}  ({exact_mean.numerator.bit_length()}-bit numerator)")
print(f"               expansion {expected_zeros_asymptotic(n):.4f}")

# the law of the zero count, next to its limit
print("\n   r   empirical      exact      limit")
counts = np.bincount(zeros, minlength=8)
for r in range(1, 8):
    exact = float(paths.zeros_distribution(n, r))
    limit = float(paths.zeros_distribution_limit(r))
    print(f"{r:4d}   {counts[r] / samples:9.4f}  {exact:9.4f}  {limit:9.4f}")

# the same model seen as a two-colour urn: every endpoint is equally likely
law = paths.urn_endpoint_distribution(2, 12)
print("\nurn after 12 draws:", sorted(set(law.values())))

# conditioning on the endpoint changes the picture a lot
print("\nextra zeros given endpoint d, n = 20")
for d in range(0, 21, 4):
    print(f"  d = {d:2d}: {float(paths.conditional_expected_zeros(20, d)):.4f}")
