"""Report-producing commands behind the ``dplab`` CLI.

Every command returns plain row objects; :func:`render` turns them into
CSV or JSON text.  Output depends only on the arguments (and the seed),
never on the number of worker processes: Monte Carlo samples get their
own generator seeded from ``(seed, sample index)`` and shards are merged
as integer sums.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from . import analysis, optimality, paths, sorting
from .exact import HarmonicKind, harmonic

DEFAULT_SEED = 20240917
SEED_ENV = "DPLAB_SEED"
MAX_BRUTEFORCE_N = 8
MIN_SAMPLES = 100
TARGETS = ("sort-count", "sort-clairvoyant", "path-zeros", "path-distribution")
SUITES = ("identity", "distribution", "optimality", "urn", "dominance")
BRUTEFORCE_ALGOS = ("count", "clairvoyant", "classic")

REPORT_FIELDS = ("n", "quantity", "exact", "decimal", "empirical", "stderr", "samples", "seed")
CHECK_FIELDS = ("suite", "check", "n", "expected", "actual", "status")


@dataclass(frozen=True)
class ReportRow:
    n: int
    quantity: str
    exact: Fraction | None = None
    decimal: float | None = None
    empirical: float | None = None
    stderr: float | None = None
    samples: int | None = None
    seed: int | None = None

    @classmethod
    def analytic(cls, n, quantity, value):
        value = Fraction(value)
        return cls(n, quantity, exact=value, decimal=float(value))


@dataclass(frozen=True)
class CheckRow:
    suite: str
    check: str
    n: int
    expected: str
    actual: str
    passed: bool


def _fmt(x) -> str:
    return format(x, ".15g")


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, bool):
        return "pass" if value else "FAIL"
    return str(value)


def _json_value(value):
    if value is None or isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, float):
        return float(_fmt(value)) if math.isfinite(value) else _fmt(value)
    return _cell(value)


def render(rows, fmt: str = "csv") -> str:
    """Serialise report or check rows; identical input gives identical text."""
    fields = CHECK_FIELDS if rows and isinstance(rows[0], CheckRow) else REPORT_FIELDS

    def values(row):
        d = asdict(row)
        if isinstance(row, CheckRow):
            d["status"] = d.pop("passed")
        return [d[f] for f in fields]

    if fmt == "json":
        records = [dict(zip(fields, map(_json_value, values(r)))) for r in rows]
        return json.dumps(records, indent=1) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_cell(v) for v in values(row)])
    return buf.getvalue()


def resolve_seed(seed=None) -> int:
    """Explicit seed, else ``$DPLAB_SEED``, else :data:`DEFAULT_SEED`."""
    if seed is None:
        env = os.environ.get(SEED_ENV, "").strip()
        seed = int(env, 0) if env else DEFAULT_SEED
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
    return seed


def sample_rng(seed: int, index: int) -> np.random.Generator:
    """Generator for one Monte Carlo sample; PCG64 keyed by (seed, index)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def _map(fn, jobs, threads):
    if threads <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, *zip(*jobs)))


def _shards(total: int, parts: int) -> list:
    parts = max(1, min(parts, total))
    bounds = [total * i // parts for i in range(parts + 1)]
    return list(zip(bounds, bounds[1:]))


# ---------------------------------------------------------------- exact

def cmd_exact(n_from: int, n_to: int) -> list:
    if n_from < 1 or n_to < n_from:
        raise ValueError(f"need 1 <= from <= to, got {n_from}..{n_to}")
    rows = []
    for n in range(n_from, n_to + 1):
        big = n >= 2
        rows += [
            ReportRow.analytic(n, "partition_count", analysis.partition_cost_count(n) if big else 0),
            ReportRow.analytic(n, "partition_clairvoyant", analysis.partition_cost_clairvoyant(n) if big else 0),
            ReportRow.analytic(n, "total_count", analysis.total_cost_count_closed(n)),
            ReportRow.analytic(n, "total_clairvoyant", analysis.total_cost_clairvoyant_closed(n)),
            ReportRow.analytic(n, "total_classic", analysis.classic_cost(n)),
        ]
        if big:
            rows += [
                ReportRow(n, "asymptotic_count", decimal=analysis.asymptotic_total("count", n)),
                ReportRow(n, "asymptotic_clairvoyant", decimal=analysis.asymptotic_total("clairvoyant", n)),
            ]
    return rows


# ---------------------------------------------------------------- brute force

def _reference_cost(algo: str, n: int) -> Fraction:
    if algo == "classic":
        return analysis.classic_cost(n)
    if algo == "count":
        return analysis.total_cost_count_closed(n)
    return analysis.total_cost_clairvoyant_closed(n)


def _sweep_shard(algo: str, n: int, first: int) -> int:
    """Total comparisons over all permutations of 1..n starting with ``first``."""
    sort = sorting.ALGORITHMS[algo]
    rest = [x for x in range(1, n + 1) if x != first]
    total = 0
    for perm in itertools.permutations(rest):
        total += sort((first, *perm))[1].total
    return total


def cmd_bruteforce(n: int, algo: str, threads: int = 1) -> tuple:
    """Exact average over all n! inputs; returns ``(rows, matched)``."""
    if algo not in BRUTEFORCE_ALGOS:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(BRUTEFORCE_ALGOS)}")
    if not 0 <= n <= MAX_BRUTEFORCE_N:
        raise ValueError(f"brute force needs 0 <= n <= {MAX_BRUTEFORCE_N} (n! inputs), got {n}")
    if n == 0:
        average = Fraction(0)
    else:
        jobs = [(algo, n, first) for first in range(1, n + 1)]
        average = Fraction(sum(_map(_sweep_shard, jobs, threads)), math.factorial(n))
    reference = _reference_cost(algo, n)
    matched = average == reference
    rows = [
        ReportRow.analytic(n, f"bruteforce_{algo}", average),
        ReportRow.analytic(n, f"reference_{algo}", reference),
        ReportRow(n, "verdict_match" if matched else "verdict_mismatch"),
    ]
    return rows, matched


# ---------------------------------------------------------------- simulation

def _simulate_shard(target: str, n: int, seed: int, start: int, stop: int):
    if target == "path-distribution":
        hist = Counter()
        for i in range(start, stop):
            hist[paths.sample_path_stats(n, sample_rng(seed, i)).zeros] += 1
        return hist
    sums = [0, 0, 0, 0]
    for i in range(start, stop):
        rng = sample_rng(seed, i)
        if target == "path-zeros":
            st = paths.sample_path_stats(n, rng)
            a, b = st.zeros, st.up_from_zero
        else:
            algo = sorting.sort_count if target == "sort-count" else sorting.sort_clairvoyant
            a, b = algo(rng.permutation(n).tolist())[1].total, 0
        sums[0] += a
        sums[1] += a * a
        sums[2] += b
        sums[3] += b * b
    return sums


def _mean_rows(n, quantity, exact, total, squares, samples, seed):
    mean = Fraction(total, samples)
    var = (Fraction(squares, samples) - mean * mean) * Fraction(samples, samples - 1)
    se = math.sqrt(var / samples)
    z = float(mean - exact) / se if se > 0 else (0.0 if mean == exact else math.inf)
    return [
        ReportRow(n, quantity, exact, float(exact), float(mean), se, samples, seed),
        ReportRow(n, f"zscore_{quantity}", empirical=z, samples=samples, seed=seed),
    ]


def cmd_simulate(n: int, samples: int, target: str, seed=None, threads: int = 1) -> list:
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    if samples < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples, got {samples}")
    if n < (2 if target.startswith("sort") else 0):
        raise ValueError(f"n too small for {target}: {n}")
    seed = resolve_seed(seed)
    jobs = [(target, n, seed, a, b) for a, b in _shards(samples, threads)]
    parts = _map(_simulate_shard, jobs, threads)

    if target == "path-distribution":
        hist = sum(parts, Counter())
        rows = []
        for r in range(1, min(n // 2 + 1, 10) + 1):
            exact = paths.zeros_distribution(n, r)
            p = hist[r] / samples
            se = math.sqrt(p * (1 - p) / samples)
            rows.append(ReportRow(n, f"P(zeros={r})", exact, float(exact), p, se, samples, seed))
        return rows

    total, squares, total_b, squares_b = (sum(col) for col in zip(*parts))
    if target == "path-zeros":
        return _mean_rows(n, "zeros", paths.expected_zeros_closed(n), total, squares, samples, seed) + _mean_rows(
            n, "up_from_zero", paths.expected_up_from_zero(n), total_b, squares_b, samples, seed
        )
    variant = "count" if target == "sort-count" else "clairvoyant"
    return _mean_rows(n, f"total_{variant}", _reference_cost(variant, n), total, squares, samples, seed)


# ---------------------------------------------------------------- verification

def _check(suite, name, n, expected, actual, passed=None):
    if passed is None:
        passed = expected == actual
    return CheckRow(suite, name, n, _cell(expected), _cell(actual), bool(passed))


def suite_identity(n_max: int = 300) -> list:
    rows = []
    for n in range(n_max + 1):
        closed = paths.expected_zeros_closed(n)
        values = (paths.expected_zeros_double_sum(n), *paths.identity_quadruple(n))
        odd = [v for v in values if v != closed]
        rows.append(_check("identity", "four_forms_and_double_sum", n, closed, odd[0] if odd else closed))
    return rows


def suite_distribution(n_sum: int = 100, n_enum: int = 14, n_limit: int = 400) -> list:
    rows = []
    for n in range(n_sum + 1):
        law = [paths.zeros_distribution(n, r) for r in range(1, n // 2 + 2)]
        mean = sum(r * p for r, p in enumerate(law, 1))
        rows.append(_check("distribution", "total_mass", n, Fraction(1), sum(law)))
        rows.append(_check("distribution", "mean", n, harmonic(HarmonicKind.ODD, n + 1), mean))
    for n in range(n_enum + 1):
        hist = Counter()
        for path, w in paths.enumerate_weighted_paths(n):
            hist[paths.path_stats(path).zeros] += w
        exact = {r: paths.zeros_distribution(n, r) for r in range(1, n // 2 + 2)}
        bad = [r for r in set(hist) | set(exact) if hist.get(r, 0) != exact.get(r, 0)]
        rows.append(_check("distribution", "enumeration", n, "match", "mismatch" if bad else "match"))
    for r in range(1, 6):
        p = paths.zeros_distribution(n_limit, r)
        gap = abs(float(p - paths.zeros_distribution_limit(r)))
        rows.append(_check("distribution", f"limit_r{r}", n_limit, "<=0.01", gap, gap <= 0.01))
    return rows


def suite_optimality(n_max: int = 200, n_exhaustive: int = 5) -> list:
    rows = []
    count = optimality.strategy_additional_costs(optimality.count_decision, n_max)
    previous = Fraction(0)
    for n in range(2, n_max + 1):
        best = optimality.min_additional_cost(n)
        rows.append(_check("optimality", "dp_equals_count", n, best, count[n]))
        rows.append(_check("optimality", "nondecreasing", n, f">={previous}", best, best >= previous))
        previous = best
        oracle = analysis.partition_cost_clairvoyant(n) - 1 - (n - 2) - analysis.expected_medium(n)
        strict = n >= 3
        ok = oracle < best if strict else oracle <= best
        rows.append(_check("optimality", "clairvoyant_below_min", n, ("<" if strict else "<=") + str(best), oracle, ok))
    for n in range(2, n_exhaustive + 1):
        res = optimality.enumerate_strategies(n)
        best = optimality.min_additional_cost(n)
        rows.append(_check("optimality", "exhaustive_min", n, best, res.minimum))
        rows.append(_check("optimality", "count_in_argmin", n, True, res.count_is_optimal))
        rows.append(_check("optimality", "agree_off_ties", n, True, res.optimal_agree_with_count_off_ties))
    return rows


def suite_urn(n_max: int = 30, n_paths: int = 14, seed: int = 0) -> list:
    rows = []
    for n in range(n_max + 1):
        law = paths.urn_endpoint_distribution(2, n)
        target = Fraction(1, n + 1)
        worst = max(law.values(), key=lambda p: abs(p - target))
        rows.append(_check("urn", "endpoint_uniform", n, target, worst, len(law) == n + 1 and worst == target))
    rng = np.random.Generator(np.random.PCG64(seed))
    for n in range(n_max + 1):
        if n <= n_paths:
            words = itertools.product((1, -1), repeat=n)
        else:
            words = (tuple(w) for w in rng.choice((1, -1), size=(64, n)).tolist())
        bad = sum(paths.urn_path_probability(w) != paths.two_stage_path_probability(w) for w in words)
        rows.append(_check("urn", "path_law", n, 0, bad))
    return rows


def suite_dominance(n_max: int = 200) -> list:
    rows = []
    for n in range(1, n_max + 1):
        count, classic = analysis.total_cost_count_closed(n), analysis.classic_cost(n)
        ok = count == classic if n <= 3 else count < classic
        rows.append(_check("dominance", "equal" if n <= 3 else "below", n, classic, count, ok))
    return rows


SUITE_FUNCS = {
    "identity": suite_identity,
    "distribution": suite_distribution,
    "optimality": suite_optimality,
    "urn": suite_urn,
    "dominance": suite_dominance,
}


def cmd_verify(suite: str) -> tuple:
    """Run one suite at its default range; returns ``(rows, all_passed)``."""
    if suite not in SUITE_FUNCS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    rows = SUITE_FUNCS[suite]()
    return rows, all(r.passed for r in rows)
