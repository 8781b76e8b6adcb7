import itertools
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dplab import sorting
from dplab.paths import LatticePath, path_stats
from dplab.sorting import PivotDecision as D

WALK_EXAMPLE = "llssslsslllsllsss"

# averages over all n! inputs, from an independent class-sequence recursion
FROZEN_COUNT = ["0", "0", "1", "8/3", "19/4", "433/60", "599/60"]
FROZEN_CLAIRVOYANT = ["0", "0", "1", "7/3", "17/4", "389/60", "541/60"]
FROZEN_CLASSIC = ["0", "0", "1", "8/3", "29/6", "37/5", "103/10"]


def test_count_strategy():
    assert sorting.count_strategy("") is D.P_FIRST
    assert sorting.count_strategy("l") is D.Q_FIRST
    assert sorting.count_strategy("slmls") is D.P_FIRST


def test_clairvoyant_strategy():
    assert sorting.clairvoyant_strategy((1, 0), "") is D.P_FIRST
    assert sorting.clairvoyant_strategy((0, 1), "") is D.Q_FIRST
    assert sorting.clairvoyant_strategy((2, 2), "ss") is D.Q_FIRST
    with pytest.raises(ValueError):
        sorting.clairvoyant_strategy((0, 1), "s")


def test_classify_examples():
    tally = sorting.classify_sequence(sorting.count_strategy, "ll")
    assert (tally.additional, tally.necessary, tally.pivot_pivot) == (1, 2, 0)
    assert sorting.classify_sequence(sorting.count_strategy, WALK_EXAMPLE).additional == 11
    assert sorting.diamond_events(WALK_EXAMPLE) == 11
    assert sorting.classify_sequence(sorting.clairvoyant_rule("sl"), "sl").additional == 0
    assert sorting.classify_sequence(sorting.count_strategy, [sorting.ClassSymbol.SMALL, "m"]).necessary == 3
    with pytest.raises(ValueError):
        sorting.as_sequence("sx")


def test_sequence_to_paths():
    assert sorting.sequence_to_paths("mm") == ((0, 0), ())
    w, wp = sorting.sequence_to_paths("lsm")
    assert wp == (1, -1)
    assert path_stats(LatticePath(wp)).zeros - 1 == 1


def all_sequences(max_len):
    for k in range(max_len + 1):
        yield from map("".join, itertools.product("sml", repeat=k))


def test_diamonds_are_additional_comparisons():
    for seq in all_sequences(9):
        assert sorting.classify_sequence(sorting.count_strategy, seq).additional == sorting.diamond_events(seq)


def test_partition_cost_decomposition_exhaustive():
    # 2 * classify cost = 3k + m + 2 * ups_from_zero(W') - |l - s|, k = len(seq)
    for seq in all_sequences(12):
        tally = sorting.classify_sequence(sorting.count_strategy, seq)
        _, wp = sorting.sequence_to_paths(seq)
        s, m, l = seq.count("s"), seq.count("m"), seq.count("l")
        rhs = 3 * len(seq) + m + 2 * path_stats(LatticePath(wp)).up_from_zero - abs(l - s)
        assert 2 * tally.total == rhs, seq


@pytest.mark.parametrize("n", range(3, 10))
def test_w_prime_endpoint_uniform_given_medium(n):
    hist = Counter()
    for perm in itertools.permutations(range(1, n + 1)):
        p, q = sorted((perm[0], perm[-1]))
        seq = "".join("s" if x < p else "l" if x > q else "m" for x in perm[1:-1])
        hist[seq.count("m"), sum(sorting.sequence_to_paths(seq)[1])] += 1
    for m in range(n - 1):
        ends = {d: c for (mm, d), c in hist.items() if mm == m}
        assert len(ends) == n - m - 1 and len(set(ends.values())) == 1


@pytest.mark.parametrize("sort", [sorting.sort_count, sorting.sort_clairvoyant, sorting.sort_classic])
def test_tiny_inputs(sort):
    assert sort([])[1].total == 0
    assert sort([7])[1].total == 0
    out, tally = sort([2, 1])
    assert out == [1, 2] and tally.total == 1


@pytest.mark.parametrize("n", range(0, 7))
def test_frozen_averages(n):
    assert sorting.average_over_permutations("count", n) == Fraction(FROZEN_COUNT[n])
    assert sorting.average_over_permutations("clairvoyant", n) == Fraction(FROZEN_CLAIRVOYANT[n])
    assert sorting.average_over_permutations("classic", n) == Fraction(FROZEN_CLASSIC[n])


@pytest.mark.parametrize("n", range(2, 8))
def test_abstract_and_in_place_agree_on_average(n):
    assert sorting.average_over_permutations("abstract-count", n) == sorting.average_over_permutations("count", n)
    assert sorting.average_over_permutations("abstract-clairvoyant", n) == sorting.average_over_permutations(
        "clairvoyant", n
    )


def test_tally_split_on_one_partition():
    # n = 3 with the middle element large: Count compares it with p first
    out, tally = sorting.sort_count([1, 3, 2])
    assert out == [1, 2, 3]
    assert (tally.pivot_pivot, tally.necessary, tally.additional) == (1, 1, 1)
    out, tally = sorting.sort_clairvoyant([1, 3, 2])
    assert (tally.pivot_pivot, tally.necessary, tally.additional) == (1, 1, 0)


def test_tally_addition():
    a = sorting.ComparisonTally(1, 2, 3)
    assert (a + a).total == 12


def test_counting_comparator():
    cmp = sorting.CountingComparator()
    assert cmp.lt(1, 2) and cmp.gt(3, 2) and not cmp.lt(2, 2)
    assert cmp.count == 3


int_lists = st.lists(st.integers(-1000, 1000), max_size=300)


@settings(max_examples=80, deadline=None)
@given(int_lists)
def test_sorts_sort_with_duplicates(xs):
    for name, sort in sorting.ALGORITHMS.items():
        out, tally = sort(xs)
        assert out == sorted(xs), name
        assert tally.total >= 0


@settings(max_examples=6, deadline=None)
@given(st.integers(1000, 10**4), st.integers(0, 2**32), st.booleans())
def test_sorts_long_arrays(n, seed, distinct):
    # long inputs are built from a drawn seed to keep hypothesis data small
    rng = np.random.default_rng(seed)
    xs = (rng.permutation(n) if distinct else rng.integers(0, n // 10, n)).tolist()
    for sort in (sorting.sort_count, sorting.sort_clairvoyant, sorting.sort_classic):
        assert sort(xs)[0] == sorted(xs)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.text(max_size=4), max_size=60, unique=True))
def test_any_ordered_type(xs):
    assert sorting.sort_count(xs)[0] == sorted(xs)
    assert sorting.sort_clairvoyant(xs)[0] == sorted(xs)


def test_input_not_mutated():
    xs = [3, 1, 2]
    sorting.sort_count(xs)
    assert xs == [3, 1, 2]


def test_deep_recursion_on_sorted_input():
    xs = list(range(3000))
    assert sorting.sort_count(xs)[0] == xs
    assert sorting.sort_classic(xs)[0] == xs
