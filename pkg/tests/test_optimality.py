import itertools
from fractions import Fraction

import pytest

from dplab import optimality as opt
from dplab.analysis import expected_medium, partition_cost_clairvoyant, partition_cost_count
from dplab.sorting import PivotDecision as D

# minimum over all strategies, from an independent prefix recursion
FROZEN_MIN = ["0", "1/3", "7/12", "49/60", "31/30", "87/70", "607/420"]


@pytest.fixture(scope="module")
def count_costs():
    return opt.strategy_additional_costs(opt.count_decision, 200)


def test_next_symbol_pmf():
    third = Fraction(1, 3)
    assert opt.next_symbol_pmf(opt.CountState(0, 0, 0)) == {"s": third, "m": third, "l": third}
    assert opt.next_symbol_pmf((1, 0, 0)) == {"s": Fraction(1, 2), "m": Fraction(1, 4), "l": Fraction(1, 4)}
    for s, m, l in itertools.product(range(6), repeat=3):
        assert sum(opt.next_symbol_pmf((s, m, l)).values()) == 1


def test_frozen_minimum():
    for n, value in enumerate(FROZEN_MIN, start=2):
        assert opt.min_additional_cost(n) == Fraction(value)
        assert opt.min_additional_cost_forward(n) == Fraction(value)


def test_sequence_probability_is_multinomial_law():
    # P{seq} = 1 / (C(n,2) * multinomial(n-2; s, m, l))
    from dplab.exact import binomial, multinomial

    for n in range(2, 9):
        total = Fraction(0)
        for seq in map("".join, itertools.product("sml", repeat=n - 2)):
            p = opt.sequence_probability(seq)
            counts = [seq.count(x) for x in "sml"]
            assert p == Fraction(1, binomial(n, 2) * multinomial(n - 2, counts))
            total += p
        assert total == 1


def test_strategy_costs():
    assert opt.strategy_additional_cost(opt.count_decision, 4) == Fraction(7, 12)
    assert opt.strategy_additional_cost(opt.always_p, 4) == Fraction(2, 3)
    # always-P errs exactly on large elements: E[#large] = (n-2)/3
    for n in range(2, 30):
        assert opt.strategy_additional_cost(opt.always_p, n) == Fraction(n - 2, 3)


def test_strategy_cost_by_enumeration():
    # a count-based strategy written out as a full-history table
    for n in range(2, 8):
        table = {"".join(p): opt.count_decision((p.count("s"), p.count("m"), p.count("l")))
                 for k in range(n - 2) for p in itertools.product("sml", repeat=k)}
        assert opt.prefix_strategy_cost(table, n) == opt.strategy_additional_cost(opt.count_decision, n)


def test_count_cost_against_partition_split(count_costs):
    costs = count_costs
    for n in range(2, 201):
        assert costs[n] == partition_cost_count(n) - 1 - (n - 2) - Fraction(n - 2, 3)


def test_dp_equals_count():
    costs = opt.strategy_additional_costs(opt.count_decision, 70)
    for n in range(2, 71):
        assert opt.min_additional_cost(n) == costs[n]
    forward = [opt.min_additional_cost_forward(n) for n in (2, 50, 70)]
    assert forward == [costs[2], costs[50], costs[70]]


def test_mapping_strategies_and_partial_rejection():
    n = 5
    table = {}
    for t in range(n - 2):
        for s in range(t + 1):
            for l in range(t + 1 - s):
                table[(s, t - s - l, l)] = D.P_FIRST if s >= l else D.Q_FIRST
    assert opt.strategy_additional_cost(table, n) == opt.min_additional_cost(n)
    del table[(0, 0, 1)]
    with pytest.raises(ValueError):
        opt.strategy_additional_cost(table, n)
    with pytest.raises(ValueError):
        opt.prefix_strategy_cost({"": D.P_FIRST}, 4)


def test_optimal_policy_ties():
    for n in range(2, 12):
        policy = opt.optimal_policy(n)
        for state, best in policy.items():
            assert opt.count_decision(state) in best
            assert (len(best) == 2) == (state.s == state.l)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_exhaustive(n):
    res = opt.enumerate_strategies(n)
    assert res.minimum == opt.min_additional_cost(n)
    assert res.count_is_optimal and res.count_cost == res.minimum
    assert res.optimal_agree_with_count_off_ties
    assert res.strategies == 2 ** sum(3**k for k in range(n - 2))


def test_exhaustive_tie_structure():
    assert opt.enumerate_strategies(3).free_tie_prefixes == ("",)
    res = opt.enumerate_strategies(5)
    assert res.strategies == 8192
    assert res.optimal == 32 and set(res.free_tie_prefixes) == {"", "m", "sl", "ls", "mm"}
    with pytest.raises(ValueError):
        opt.enumerate_strategies(6)


def test_clairvoyant_beats_every_strategy(count_costs):
    costs = count_costs
    for n in range(2, 201):
        oracle = partition_cost_clairvoyant(n) - 1 - (n - 2) - expected_medium(n)
        assert oracle < costs[n] if n >= 3 else oracle == costs[n]


def test_minimum_nondecreasing(count_costs):
    costs = count_costs
    assert all(a <= b for a, b in zip(costs[2:], costs[3:]))
