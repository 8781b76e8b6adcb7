"""Expected comparison counts of dual-pivot quicksort, exact and asymptotic.

Partitioning costs come as closed forms and as sums of their component
expectations; the sorting cost is obtained from the partitioning cost by
solving the dual-pivot recurrence in exact arithmetic, and independently
from the closed-form expressions in H_n and H^alt_n.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact import EULER_GAMMA, LOG2, HarmonicKind, binomial, harmonic

__all__ = [
    "CostTable",
    "AsymptoticExpansion",
    "pivot_class_pmf",
    "expected_medium",
    "expected_abs_large_minus_small",
    "expected_upzero_mixture",
    "expected_downzero_mixture",
    "partition_cost_count",
    "partition_cost_clairvoyant",
    "partition_cost_decomposed",
    "partition_cost_clairvoyant_decomposed",
    "solve_recurrence",
    "total_cost_count_closed",
    "total_cost_clairvoyant_closed",
    "total_cost",
    "classic_cost",
    "COUNT_EXPANSION",
    "CLAIRVOYANT_EXPANSION",
    "asymptotic_total",
    "expected_zeros_asymptotic",
    "expected_up_from_zero_asymptotic",
]

H = lambda n: harmonic(HarmonicKind.PLAIN, n)  # noqa: E731
H_odd = lambda n: harmonic(HarmonicKind.ODD, n)  # noqa: E731
H_alt = lambda n: harmonic(HarmonicKind.ALTERNATING, n)  # noqa: E731


def _check_n(n: int, least: int = 2) -> None:
    if n < least:
        raise ValueError(f"n must be at least {least}, got {n}")


# ---------------------------------------------------------------- pivot classes

def pivot_class_pmf(n: int, m: int) -> Fraction:
    """P{M = m}: number of medium elements for a uniformly random pivot pair."""
    _check_n(n)
    if 0 <= m <= n - 2:
        return Fraction(n - m - 1, binomial(n, 2))
    return Fraction(0)


def expected_medium(n: int) -> Fraction:
    _check_n(n)
    return Fraction(n - 2, 3)


def expected_abs_large_minus_small(n: int) -> Fraction:
    """E|L - S| by summing over all (s, m, l) with s + m + l = n - 2."""
    _check_n(n)
    total = 0
    for s in range(n - 1):
        for ell in range(n - 1 - s):
            total += abs(ell - s)
    return Fraction(total, binomial(n, 2))


def expected_upzero_mixture(n: int) -> Fraction:
    """E[up-from-zero count of W'], where W' has random length n - 2 - M."""
    _check_n(n)
    acc = sum(((m + 1) * H_odd(m) for m in range(n - 1)), Fraction(0))
    return acc / (2 * binomial(n, 2))


def expected_downzero_mixture(n: int) -> Fraction:
    """Same mixture for down-to-zero situations, (H^odd_{k+1} - 1)/2 at length k."""
    _check_n(n)
    acc = sum(
        (pivot_class_pmf(n, m) * (H_odd(n - 1 - m) - 1) / 2 for m in range(n - 1)),
        Fraction(0),
    )
    return acc


# ---------------------------------------------------------------- partitioning

def partition_cost_count(n: int) -> Fraction:
    """Expected comparisons of one Count partitioning step on n elements."""
    _check_n(n)
    odd = n % 2
    result = Fraction(3 * n, 2) + H_odd(n) / 2 - Fraction(19, 8)
    if odd:
        result -= Fraction(3, 8 * n)
    else:
        result -= Fraction(1, 8 * (n - 1))
    return result


def partition_cost_clairvoyant(n: int) -> Fraction:
    _check_n(n)
    odd = n % 2
    result = Fraction(3 * n, 2) - H_odd(n) / 2 - Fraction(13, 8)
    if odd:
        result += Fraction(3, 8 * n)
    else:
        result += Fraction(1, 8 * (n - 1))
    return result


def partition_cost_decomposed(n: int) -> Fraction:
    """Count's partitioning cost assembled from its component expectations.

    One pivot comparison, 3/2 per classified element, 1/2 per medium,
    one per up-from-zero step of W', minus half of |L - S|.
    """
    _check_n(n)
    return (
        1
        + Fraction(3, 2) * (n - 2)
        + expected_medium(n) / 2
        + expected_upzero_mixture(n)
        - expected_abs_large_minus_small(n) / 2
    )


def partition_cost_clairvoyant_decomposed(n: int) -> Fraction:
    """Clairvoyant analogue of :func:`partition_cost_decomposed`.

    Read backwards, the walk of remaining (large - small) is again a path
    of the endpoint-uniform model; each down-to-zero situation of that
    reversed path is a step where Clairvoyant saves a comparison.
    """
    _check_n(n)
    return (
        1
        + Fraction(3, 2) * (n - 2)
        + expected_medium(n) / 2
        - expected_downzero_mixture(n)
        - expected_abs_large_minus_small(n) / 2
    )


# ---------------------------------------------------------------- recurrence

@dataclass(frozen=True)
class CostTable:
    n_max: int
    partition: tuple
    total: tuple

    def __getitem__(self, n: int) -> Fraction:
        return self.total[n]


def solve_recurrence(partition: Callable[[int], Fraction], n_max: int) -> CostTable:
    """E[C_n] = E[P_n] + 3/C(n,2) * sum_{k=1}^{n-2} (n-1-k) E[C_k], bottom-up.

    Two running sums (of E[C_k] and of k*E[C_k]) keep this linear in n_max.
    """
    parts = [Fraction(0), Fraction(0)]
    totals = [Fraction(0), Fraction(0)]
    sum_c = Fraction(0)
    sum_kc = Fraction(0)
    for n in range(2, n_max + 1):
        k = n - 2
        sum_c += totals[k]
        sum_kc += k * totals[k]
        p = Fraction(partition(n))
        parts.append(p)
        totals.append(p + Fraction(3, binomial(n, 2)) * ((n - 1) * sum_c - sum_kc))
    return CostTable(n_max, tuple(parts[: n_max + 1]), tuple(totals[: n_max + 1]))


_TABLES: dict = {}


def total_cost(variant: str, n: int) -> Fraction:
    """E[C_n] for ``"count"`` or ``"clairvoyant"`` via the recurrence (memoised)."""
    partition = {"count": partition_cost_count, "clairvoyant": partition_cost_clairvoyant}[variant]
    table = _TABLES.get(variant)
    if table is None or table.n_max < n:
        table = solve_recurrence(partition, max(n, 2 * (table.n_max if table else 32)))
        _TABLES[variant] = table
    return table[n]


def total_cost_count_closed(n: int) -> Fraction:
    """Exact E[C_n] of Count from its closed form; n < 4 falls back to the recurrence."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n < 4:
        return total_cost("count", n)
    even = n % 2 == 0
    result = (
        Fraction(9, 5) * n * H(n)
        - Fraction(1, 5) * n * H_alt(n)
        - Fraction(89, 25) * n
        + Fraction(67, 40) * H(n)
        - Fraction(3, 40) * H_alt(n)
        - Fraction(83, 800)
        + Fraction((-1) ** n, 10)
    )
    if even:
        result -= Fraction(1, 320) * (Fraction(1, n - 3) + Fraction(3, n - 1))
    else:
        result += Fraction(1, 320) * (Fraction(3, n - 2) + Fraction(1, n))
    return result


def total_cost_clairvoyant_closed(n: int) -> Fraction:
    """Exact E[C_n] of Clairvoyant from its closed form; n < 4 uses the recurrence."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n < 4:
        return total_cost("clairvoyant", n)
    even = n % 2 == 0
    result = (
        Fraction(9, 5) * n * H(n)
        + Fraction(1, 5) * n * H_alt(n)
        - Fraction(89, 25) * n
        + Fraction(77, 40) * H(n)
        + Fraction(3, 40) * H_alt(n)
        + Fraction(67, 800)
        - Fraction((-1) ** n, 10)
    )
    if even:
        result += Fraction(1, 320) * (Fraction(1, n - 3) + Fraction(3, n - 1))
    else:
        result -= Fraction(1, 320) * (Fraction(3, n - 2) + Fraction(1, n))
    return result


def classic_cost(n: int) -> Fraction:
    """Average comparisons of classical quicksort: 2(n+1)H_n - 4n."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return 2 * (n + 1) * H(n) - 4 * n


# ---------------------------------------------------------------- asymptotics

@dataclass(frozen=True)
class AsymptoticExpansion:
    """(9/5) n log n + A n + B log n + C + D/n + E/n^2 + (F [n even] + G)/n^3."""

    A: float
    B: float
    C: float
    D: float
    E: float
    F: float
    G: float
    leading: float = 9 / 5

    def __call__(self, n: int) -> float:
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        log_n = math.log(n)
        even = 1 if n % 2 == 0 else 0
        return (
            self.leading * n * log_n
            + self.A * n
            + self.B * log_n
            + self.C
            + self.D / n
            + self.E / n**2
            + (self.F * even + self.G) / n**3
        )


COUNT_EXPANSION = AsymptoticExpansion(
    A=9 / 5 * EULER_GAMMA + LOG2 / 5 - 89 / 25,
    B=67 / 40,
    C=67 / 40 * EULER_GAMMA + 3 / 40 * LOG2 + 637 / 800,
    D=11 / 16,
    E=-67 / 480,
    F=-1 / 8,
    G=31 / 400,
)

CLAIRVOYANT_EXPANSION = AsymptoticExpansion(
    A=9 / 5 * EULER_GAMMA - LOG2 / 5 - 89 / 25,
    B=77 / 40,
    C=77 / 40 * EULER_GAMMA - 3 / 40 * LOG2 + 787 / 800,
    D=13 / 16,
    E=-77 / 480,
    F=1 / 8,
    G=-19 / 400,
)


def asymptotic_total(variant: str, n: int) -> float:
    expansion = {"count": COUNT_EXPANSION, "clairvoyant": CLAIRVOYANT_EXPANSION}[variant]
    return expansion(n)


def expected_zeros_asymptotic(n: int) -> float:
    """E[Z_n] through the n^-3 term."""
    _check_n(n, 1)
    even = 1 if n % 2 == 0 else 0
    return (
        math.log(n) / 2
        + (EULER_GAMMA + LOG2) / 2
        + (1 + even) / (2 * n)
        - (2 + 9 * even) / (12 * n**2)
        + even / n**3
    )


def expected_up_from_zero_asymptotic(n: int) -> float:
    _check_n(n, 1)
    even = 1 if n % 2 == 0 else 0
    return (
        math.log(n) / 4
        + (EULER_GAMMA + LOG2) / 4
        + (1 - even) / (4 * n)
        + (3 * even - 2) / (24 * n**2)
    )
