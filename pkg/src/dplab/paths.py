"""Random ±1 lattice paths under the endpoint-uniform model, and their zeros.

A path of length ``n`` is drawn in two stages: the endpoint height is
uniform over the ``n + 1`` reachable values, then the path is uniform
among all paths reaching it.  This is *not* the uniform-over-all-paths
model.  Equivalently the steps come from a Pólya urn with one initial
ball per colour (see :func:`sample_path_urn`).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import binomial, harmonic, HarmonicKind

__all__ = [
    "LatticePath",
    "PathStats",
    "UrnState",
    "sample_path",
    "sample_path_urn",
    "urn_trajectory_to_path",
    "urn_transition_probabilities",
    "urn_endpoint_distribution",
    "urn_path_probability",
    "two_stage_path_probability",
    "path_stats",
    "expected_zeros_double_sum",
    "expected_zeros_closed",
    "expected_up_from_zero",
    "point_probability",
    "conditional_expected_zeros",
    "zeros_distribution",
    "zeros_distribution_limit",
    "identity_quadruple",
    "enumerate_weighted_paths",
]


@dataclass(frozen=True)
class LatticePath:
    steps: tuple

    def __post_init__(self):
        steps = tuple(int(s) for s in self.steps)
        if any(s not in (1, -1) for s in steps):
            raise ValueError("steps must be +1 or -1")
        object.__setattr__(self, "steps", steps)

    def __len__(self):
        return len(self.steps)

    @property
    def endpoint(self) -> int:
        return sum(self.steps)

    @property
    def down_steps(self) -> int:
        return self.steps.count(-1)

    def heights(self) -> list:
        """Heights at t = 0..n, starting from 0."""
        return [0, *itertools.accumulate(self.steps)]


@dataclass(frozen=True)
class PathStats:
    zeros: int
    up_from_zero: int


@dataclass(frozen=True)
class UrnState:
    counts: tuple

    @property
    def t(self) -> int:
        return sum(self.counts)


# ---------------------------------------------------------------- samplers

def _step_array(n: int, rng: np.random.Generator) -> np.ndarray:
    downs = int(rng.integers(0, n + 1))
    steps = np.ones(n, dtype=np.int8)
    steps[:downs] = -1
    rng.shuffle(steps)
    return steps


def sample_path(n: int, rng: np.random.Generator) -> LatticePath:
    """Draw a path of length ``n`` from the two-stage model.

    The number of down-steps is uniform on ``0..n`` (so the endpoint
    ``n - 2*downs`` is uniform on the reachable heights), then the step
    multiset is shuffled uniformly.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return LatticePath(tuple(_step_array(n, rng).tolist()))


def sample_path_stats(n: int, rng: np.random.Generator) -> PathStats:
    """Vectorised ``path_stats(sample_path(n, rng))`` for Monte Carlo loops."""
    steps = _step_array(n, rng)
    heights = np.cumsum(steps, dtype=np.int64)
    zeros = 1 + int(np.count_nonzero(heights == 0))
    if n == 0:
        return PathStats(zeros, 0)
    before = np.empty(n, dtype=np.int64)
    before[0] = 0
    before[1:] = heights[:-1]
    ups = int(np.count_nonzero((before == 0) & (steps == 1)))
    return PathStats(zeros, ups)


def urn_transition_probabilities(counts) -> tuple:
    """Next-colour law of the urn: colour j with probability (c_j+1)/(t+h)."""
    counts = tuple(counts)
    denom = sum(counts) + len(counts)
    return tuple(Fraction(c + 1, denom) for c in counts)


def sample_path_urn(h: int, n: int, rng: np.random.Generator) -> list:
    """Run the h-colour urn for ``n`` draws; return the list of states.

    The returned trajectory has ``n + 1`` entries starting at the empty
    state.  Sampling uses integer draws so probabilities are exact.
    """
    if h < 1:
        raise ValueError(f"h must be at least 1, got {h}")
    counts = [0] * h
    trajectory = [UrnState(tuple(counts))]
    for t in range(n):
        # ball index uniform over the t + h balls currently in the urn
        ball = int(rng.integers(0, t + h))
        colour = 0
        while ball >= counts[colour] + 1:
            ball -= counts[colour] + 1
            colour += 1
        counts[colour] += 1
        trajectory.append(UrnState(tuple(counts)))
    return trajectory


def urn_trajectory_to_path(trajectory) -> LatticePath:
    """Map a 2-colour trajectory to a ±1 path: colour 0 is up, colour 1 down."""
    steps = []
    for prev, cur in zip(trajectory, trajectory[1:]):
        if len(cur.counts) != 2:
            raise ValueError("only 2-colour trajectories map to ±1 paths")
        steps.append(1 if cur.counts[0] > prev.counts[0] else -1)
    return LatticePath(tuple(steps))


def urn_endpoint_distribution(h: int, n: int) -> dict:
    """Exact law of the urn state after ``n`` draws, by forward DP."""
    law = {(0,) * h: Fraction(1)}
    for _ in range(n):
        nxt = {}
        for counts, p in law.items():
            for j, q in enumerate(urn_transition_probabilities(counts)):
                c = list(counts)
                c[j] += 1
                key = tuple(c)
                nxt[key] = nxt.get(key, 0) + p * q
        law = nxt
    return law


def urn_path_probability(steps) -> Fraction:
    """Probability the 2-colour urn produces exactly this ±1 step word."""
    counts = [0, 0]
    prob = Fraction(1)
    for s in steps:
        j = 0 if s == 1 else 1
        prob *= urn_transition_probabilities(counts)[j]
        counts[j] += 1
    return prob


def two_stage_path_probability(steps) -> Fraction:
    """Probability of a ±1 step word under the two-stage model."""
    n = len(steps)
    downs = sum(1 for s in steps if s == -1)
    return Fraction(1, (n + 1) * binomial(n, downs))


def enumerate_weighted_paths(n: int):
    """Yield ``(LatticePath, weight)`` over all 2**n step words.

    Brute-force oracle for the exact formulas; keep ``n`` small.
    """
    for steps in itertools.product((1, -1), repeat=n):
        yield LatticePath(steps), two_stage_path_probability(steps)


# ---------------------------------------------------------------- statistics

def path_stats(path: LatticePath) -> PathStats:
    height = 0
    zeros = 1
    ups = 0
    for s in path.steps:
        if height == 0 and s == 1:
            ups += 1
        height += s
        if height == 0:
            zeros += 1
    return PathStats(zeros, ups)


# ---------------------------------------------------------------- exact formulas

def _double_sum(n: int, upper: int) -> Fraction:
    # sum_{0 <= k < l < upper} C(n,k)/C(n,l), inner sum carried as a prefix
    total = Fraction(0)
    prefix = 0
    for ell in range(upper):
        total += Fraction(prefix, binomial(n, ell))
        prefix += binomial(n, ell)
    return total


def expected_zeros_double_sum(n: int) -> Fraction:
    """E[Z_n] through the binomial-quotient double sum (generating-function route)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    result = Fraction(4, n + 1) * _double_sum(n, (n + 1) // 2) + 1
    if n % 2 == 0:
        result += Fraction(1, n + 1) * (Fraction(2**n, binomial(n, n // 2)) - 1)
    return result


def expected_zeros_closed(n: int) -> Fraction:
    """E[Z_n] = H^odd_{n+1}."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return harmonic(HarmonicKind.ODD, n + 1)


def expected_up_from_zero(n: int) -> Fraction:
    """Expected number of zeros immediately followed by an up-step: H^odd_n / 2."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return harmonic(HarmonicKind.ODD, n) / 2


def point_probability(n: int, t: int, k: int) -> Fraction:
    """P{(t, k) lies on the path}; uniform 1/(t+1) over reachable heights."""
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={n}")
    if abs(k) <= t and (k - t) % 2 == 0:
        return Fraction(1, t + 1)
    return Fraction(0)


def conditional_expected_zeros(n: int, d: int) -> Fraction:
    """Mean number of zeros other than the origin among paths ending at (n, d)."""
    if abs(d) > n or (n - d) % 2:
        raise ValueError(f"endpoint ({n}, {d}) is not reachable")
    ell = (n - abs(d)) // 2
    below = sum(binomial(n, k) for k in range(ell))
    return Fraction(2 * below, binomial(n, ell))


def zeros_distribution(n: int, r: int) -> Fraction:
    """P{Z_n = r}, exact."""
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    if n == 0:
        return Fraction(int(r == 1))
    if n < 2 * r - 2:
        return Fraction(0)
    half_up = (n + 1) // 2
    even = n % 2 == 0
    bracket = Fraction(2 * half_up, r * (r + 1)) + Fraction(r - 1, r + 1)
    if even:
        bracket += Fraction(1, r)
    result = Fraction(2**r * binomial(half_up, r), (n + 1) * binomial(n, r)) * bracket
    if even:
        result += Fraction(
            2 ** (r - 1) * (r - 1) * binomial(n // 2, r - 1),
            (n + 1) * r * binomial(n, r),
        )
    return result


def zeros_distribution_limit(r: int) -> Fraction:
    """Limit of P{Z_n = r} as n grows: 1/(r(r+1))."""
    return Fraction(1, r * (r + 1))


def identity_quadruple(n: int) -> tuple:
    """Four independently evaluated expressions that all equal E[Z_n].

    Returns ``(double, double_simple, quicksort, single)``: the double sum
    over C(n,k)/C(n,l), its odd-length variant, the sum over paths through
    (2m, 0), and H^odd_{n+1}.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    double = expected_zeros_double_sum(n)

    half = n // 2
    odd_len = 2 * half + 1
    double_simple = Fraction(2, half + 1) * _double_sum(odd_len, half + 1) + 1

    # regroup by l so the inner sum over m stays in integers
    # every C(n, l) divides lcm(1..n+1)/(n+1), so sum over that denominator
    common = math.lcm(*range(1, n + 2)) // (n + 1)
    # through[l] = sum_m C(2m, m) C(n-2m, l-m); rows C(n-2m, .) built by Pascal steps
    through = [0] * (n + 1)
    row = [1] if n % 2 == 0 else [1, 1]
    for j in range(n % 2, n + 1, 2):
        m = (n - j) // 2
        central = math.comb(2 * m, m)
        for i, c in enumerate(row):
            through[i + m] += central * c
        for _ in range(2):
            row = [a + b for a, b in zip([0] + row, row + [0])]
    quick = sum(t * (common // binomial(n, ell)) for ell, t in enumerate(through))
    quick = Fraction(quick, common * (n + 1))

    single = sum((Fraction(1, m) for m in range(1, n + 2, 2)), Fraction(0))
    return double, double_simple, quick, single
