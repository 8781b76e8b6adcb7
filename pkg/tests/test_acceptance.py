"""Acceptance criteria, one test per criterion.

Every tolerance is pinned below; ``conftest.py`` prints a PASS/FAIL line
per criterion at the end of the run.
"""
import math
import time
from fractions import Fraction

import pytest

from dplab import analysis, harness, optimality, paths, sorting
from dplab.exact import harmonic

RECURRENCE_TIME_LIMIT_S = 1.0
LIMIT_TOLERANCE = 0.01
ASYMPTOTIC_SIZES = (50, 100, 200, 400)
ASYMPTOTIC_BOUND = 0.2  # sup of |exact - expansion| * n^4 over the sizes above
ASYMPTOTIC_GROWTH = 1.5  # largest scaled error may not exceed this multiple of the first
MC_N, MC_SAMPLES, MC_SIGMAS = 1000, 100_000, 3.0
MC_SEED = harness.DEFAULT_SEED


def _reference(variant, n):
    closed = analysis.total_cost_count_closed if variant == "count" else analysis.total_cost_clairvoyant_closed
    if n >= 4:
        return closed(n)
    return analysis.solve_recurrence(
        analysis.partition_cost_count if variant == "count" else analysis.partition_cost_clairvoyant, 3
    )[n]


def test_c01_count_sort_bruteforce_exact():
    assert sorting.average_over_permutations("count", 4) == Fraction(19, 4)
    for n in range(2, 9):
        assert sorting.average_over_permutations("count", n) == _reference("count", n), n


def test_c02_clairvoyant_sort_bruteforce_exact():
    for n in range(2, 9):
        assert sorting.average_over_permutations("clairvoyant", n) == _reference("clairvoyant", n), n


def test_c03_recurrence_matches_closed_forms():
    start = time.perf_counter()
    count = analysis.solve_recurrence(analysis.partition_cost_count, 200)
    clair = analysis.solve_recurrence(analysis.partition_cost_clairvoyant, 200)
    for n in range(4, 201):
        assert count[n] == analysis.total_cost_count_closed(n), n
        assert clair[n] == analysis.total_cost_clairvoyant_closed(n), n
    assert time.perf_counter() - start < RECURRENCE_TIME_LIMIT_S


def test_c04_identity_four_forms():
    for n in range(0, 301):
        odd = harmonic("odd", n + 1)
        assert paths.identity_quadruple(n) == (odd,) * 4, n
        assert paths.expected_zeros_double_sum(n) == odd, n


def test_c05_zero_count_distribution():
    for n in range(0, 101):
        law = [paths.zeros_distribution(n, r) for r in range(1, n // 2 + 2)]
        assert sum(law) == 1
        assert sum(r * p for r, p in enumerate(law, 1)) == harmonic("odd", n + 1)
    for n in range(0, 15):
        seen = {}
        for path, w in paths.enumerate_weighted_paths(n):
            z = paths.path_stats(path).zeros
            seen[z] = seen.get(z, 0) + w
        for r in range(1, n // 2 + 3):
            assert paths.zeros_distribution(n, r) == seen.get(r, 0), (n, r)
    for r in range(1, 6):
        gap = abs(float(paths.zeros_distribution(400, r)) - 1 / (r * (r + 1)))
        assert gap <= LIMIT_TOLERANCE, (r, gap)


def test_c06_count_is_optimal():
    count = optimality.strategy_additional_costs(optimality.count_decision, 200)
    for n in range(2, 201):
        assert optimality.min_additional_cost(n) == count[n], n
    assert optimality.enumerate_strategies(4).minimum == Fraction(7, 12)
    for n in (3, 4, 5):
        res = optimality.enumerate_strategies(n)
        assert res.minimum == optimality.min_additional_cost(n)
        assert res.count_is_optimal


def test_c07_count_dominates_classic():
    for n in range(1, 201):
        count, classic = analysis.total_cost_count_closed(n), analysis.classic_cost(n)
        assert count <= classic
        assert (count == classic) == (n in (1, 2, 3)), n


@pytest.mark.parametrize("variant", ["count", "clairvoyant"])
def test_c08_asymptotic_expansion(variant):
    expected = {
        "count": dict(A=-2.3823823670652, B=1.675, C=1.81507227725206, D=0.6875, E=-0.1395833, F=-0.125, G=0.0775),
        "clairvoyant": dict(A=-2.6596412392892, B=1.925, C=2.042904116393455, D=0.8125, E=-0.1604166, F=0.125, G=-0.0475),
    }[variant]
    expansion = analysis.COUNT_EXPANSION if variant == "count" else analysis.CLAIRVOYANT_EXPANSION
    for name, value in expected.items():
        assert getattr(expansion, name) == pytest.approx(value, abs=1e-7), name
    closed = analysis.total_cost_count_closed if variant == "count" else analysis.total_cost_clairvoyant_closed
    scaled = [abs(float(closed(n) - Fraction(expansion(n)))) * n**4 for n in ASYMPTOTIC_SIZES]
    assert max(scaled) <= ASYMPTOTIC_BOUND, scaled
    assert max(scaled) <= ASYMPTOTIC_GROWTH * scaled[0], scaled


def test_c09_samplers():
    for n in range(0, 31):
        law = paths.urn_endpoint_distribution(2, n)
        assert len(law) == n + 1 and all(p == Fraction(1, n + 1) for p in law.values())
    rows = harness.cmd_simulate(MC_N, MC_SAMPLES, "path-zeros", seed=MC_SEED)
    zeros, ups = rows[0], rows[2]
    assert zeros.exact == harmonic("odd", MC_N + 1)
    assert ups.exact == harmonic("odd", MC_N) / 2
    for row in (zeros, ups):
        assert abs(row.empirical - float(row.exact)) <= MC_SIGMAS * row.stderr, row
    small = dict(n=MC_N, samples=10_000, target="path-zeros", seed=MC_SEED)
    first = harness.render(harness.cmd_simulate(**small))
    assert harness.render(harness.cmd_simulate(**small)) == first
    assert harness.render(harness.cmd_simulate(**small, threads=2)) == first


def test_c10_integrality():
    for n in range(0, 31):
        for cost in (analysis.total_cost_count_closed(n), analysis.total_cost_clairvoyant_closed(n)):
            assert (math.factorial(n) * cost).denominator == 1, n
