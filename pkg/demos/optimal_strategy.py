#!/usr/bin/env python3
# Is there a better rule than Count for picking the first pivot?
#
# After t classified elements with s small, m medium and l large, the next
# one is small with probability (s+1)/(t+3), and so on.  A wrong first
# comparison costs one extra.  The Bellman recursion below looks at every
# count-based rule; the exhaustive search looks at every rule that may use
# the full history, for the few sizes where that is feasible.

from dplab import optimality as opt
from dplab.sorting import PivotDecision

print(" n   best possible   Count      always p   Count exact optimum")
for n in (3, 4, 5, 10, 20, 50):
    best = opt.min_additional_cost(n)
    count = opt.strategy_additional_cost(opt.count_decision, n)
    naive = opt.strategy_additional_cost(opt.always_p, n)
    print(f"{n:2d}   {float(best):13.5f}   {float(count):8.5f}   {float(naive):8.5f}   {count == best}")

# full-history strategies for n = 5: 2^13 of them
res = opt.enumerate_strategies(5)
print(f"\nn = 5: {res.strategies} strategies, minimum {res.minimum}, {res.optimal} optimal")
print("Count is optimal:", res.count_is_optimal)
print("optimal strategies differ from Count only on prefixes with s == l:", res.optimal_agree_with_count_off_ties)
print("tie prefixes where both choices are optimal:", res.free_tie_prefixes)

# the Bellman recursion reports both decisions at every tie
policy = opt.optimal_policy(6)
ties = sorted((s.s, s.m, s.l) for s, d in policy.items() if len(d) == 2)
print("\nstates with two optimal decisions, n = 6:", ties)
assert all(PivotDecision.P_FIRST in policy[opt.CountState(*t)] for t in ties)
