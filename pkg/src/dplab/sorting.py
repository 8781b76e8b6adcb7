"""Classification strategies and instrumented dual-pivot quicksort.

Class sequences are plain strings over ``"s"`` (small), ``"m"`` (medium)
and ``"l"`` (large); :class:`ClassSymbol` gives the symbols names.  A
strategy is any callable taking the prefix seen so far and returning a
:class:`PivotDecision`.

The in-place sorts use the usual two-pointer dual-pivot partition
(with a three-way left rotation) for both the Count and the
Clairvoyant classifier.  Comparisons are counted by :class:`CountingComparator`, and
each classification is booked as necessary or additional.
"""
from __future__ import annotations

import enum
import itertools
import math
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

__all__ = [
    "ClassSymbol",
    "PivotDecision",
    "ComparisonTally",
    "CountingComparator",
    "as_sequence",
    "count_strategy",
    "clairvoyant_strategy",
    "always",
    "classify_sequence",
    "diamond_events",
    "sequence_to_paths",
    "count_rule",
    "clairvoyant_rule",
    "sort_count",
    "sort_clairvoyant",
    "sort_classic",
    "sort_with_strategy",
    "ALGORITHMS",
    "average_over_permutations",
]


class ClassSymbol(str, enum.Enum):
    SMALL = "s"
    MEDIUM = "m"
    LARGE = "l"


class PivotDecision(enum.Enum):
    P_FIRST = "p"
    Q_FIRST = "q"


Strategy = Callable[[str], PivotDecision]


@dataclass
class ComparisonTally:
    pivot_pivot: int = 0
    necessary: int = 0
    additional: int = 0

    @property
    def total(self) -> int:
        return self.pivot_pivot + self.necessary + self.additional

    def __add__(self, other: "ComparisonTally") -> "ComparisonTally":
        return ComparisonTally(
            self.pivot_pivot + other.pivot_pivot,
            self.necessary + other.necessary,
            self.additional + other.additional,
        )

    def book(self, symbol: str, comparisons: int) -> None:
        """Record one classified element that took ``comparisons`` comparisons."""
        needed = 2 if symbol == "m" else 1
        if comparisons < needed:
            raise AssertionError(f"{symbol!r} classified with {comparisons} comparisons")
        self.necessary += needed
        self.additional += comparisons - needed


@dataclass
class CountingComparator:
    """Strict less-than that counts how often it is called."""

    count: int = 0

    def lt(self, a, b) -> bool:
        self.count += 1
        return a < b

    def gt(self, a, b) -> bool:
        return self.lt(b, a)


def as_sequence(symbols) -> str:
    """Normalise an iterable of symbols (or a string) to the string form."""
    if isinstance(symbols, str):
        seq = symbols
    else:
        seq = "".join(ClassSymbol(x).value for x in symbols)
    if seq.strip("sml"):
        raise ValueError(f"not a class sequence: {symbols!r}")
    return seq


# ---------------------------------------------------------------- strategies

def count_strategy(prefix: str) -> PivotDecision:
    """Compare with p first iff at least as many smalls as larges were seen."""
    if prefix.count("s") >= prefix.count("l"):
        return PivotDecision.P_FIRST
    return PivotDecision.Q_FIRST


def clairvoyant_strategy(totals: tuple, prefix: str) -> PivotDecision:
    """Oracle strategy: compare with p first iff remaining smalls >= remaining larges."""
    small, large = totals
    seen_small, seen_large = prefix.count("s"), prefix.count("l")
    if seen_small > small or seen_large > large:
        raise ValueError(f"prefix {prefix!r} exceeds totals {totals}")
    if small - seen_small >= large - seen_large:
        return PivotDecision.P_FIRST
    return PivotDecision.Q_FIRST


def always(decision: PivotDecision) -> Strategy:
    return lambda prefix: decision


def count_rule(seq: str) -> Strategy:
    return count_strategy


def clairvoyant_rule(seq: str) -> Strategy:
    totals = (seq.count("s"), seq.count("l"))
    return lambda prefix: clairvoyant_strategy(totals, prefix)


# ---------------------------------------------------------------- abstract layer

def _is_wrong(decision: PivotDecision, symbol: str) -> bool:
    if decision is PivotDecision.P_FIRST:
        return symbol == "l"
    return symbol == "s"


def classify_sequence(strategy: Strategy, seq) -> ComparisonTally:
    """Cost of classifying ``seq`` left to right; no pivot-pivot comparison."""
    seq = as_sequence(seq)
    tally = ComparisonTally()
    for t, symbol in enumerate(seq):
        decision = strategy(seq[:t])
        tally.book(symbol, 2 if symbol == "m" or _is_wrong(decision, symbol) else 1)
    return tally


def diamond_events(seq) -> int:
    """Wrong-pivot events of Count read off the walk of (#large - #small).

    An up-step (large) taken from height <= 0, or a down-step (small)
    taken from height > 0, costs an additional comparison.
    """
    height = 0
    events = 0
    for symbol in as_sequence(seq):
        if symbol == "l":
            events += height <= 0
            height += 1
        elif symbol == "s":
            events += height > 0
            height -= 1
    return events


def sequence_to_paths(seq) -> tuple:
    """Return ``(W, W')``: W maps large/medium/small to +1/0/-1, W' drops the zeros."""
    step = {"l": 1, "m": 0, "s": -1}
    w = tuple(step[x] for x in as_sequence(seq))
    return w, tuple(x for x in w if x)


# ---------------------------------------------------------------- in-place sorts

@contextmanager
def _recursion_room(depth: int):
    old = sys.getrecursionlimit()
    if depth + 200 > old:
        sys.setrecursionlimit(depth + 200)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def _dual_pivot(a, left, right, cmp, tally, oracle):
    if right <= left:
        return
    tally.pivot_pivot += 1
    if cmp.lt(a[right], a[left]):
        a[left], a[right] = a[right], a[left]
    p = a[left]
    q = a[right]
    i = left + 1
    k = right - 1
    j = i
    if oracle:
        # oracle pre-pass: uses plain comparisons, never tallied
        d = sum(1 for x in a[i:k + 1] if x < p) - sum(1 for x in a[i:k + 1] if q < x)
        small_step = -1
    else:
        d = 0
        small_step = 1
    while j <= k:
        if d >= 0:
            if cmp.lt(a[j], p):
                a[i], a[j] = a[j], a[i]
                i += 1
                j += 1
                d += small_step
                tally.book("s", 1)
            elif cmp.lt(a[j], q):
                j += 1
                tally.book("m", 2)
            else:
                a[j], a[k] = a[k], a[j]
                k -= 1
                d -= small_step
                tally.book("l", 2)
        else:
            if cmp.gt(a[k], q):
                k -= 1
                d -= small_step
                tally.book("l", 1)
            else:
                if cmp.lt(a[k], p):
                    # rotate3: tmp <- A[k]; A[k] <- A[j]; A[j] <- A[i]; A[i] <- tmp
                    tmp = a[k]
                    a[k] = a[j]
                    a[j] = a[i]
                    a[i] = tmp
                    i += 1
                    d += small_step
                    tally.book("s", 2)
                else:
                    a[j], a[k] = a[k], a[j]
                    tally.book("m", 2)
                j += 1
    a[left], a[i - 1] = a[i - 1], a[left]
    a[right], a[k + 1] = a[k + 1], a[right]
    _dual_pivot(a, left, i - 2, cmp, tally, oracle)
    _dual_pivot(a, i, k, cmp, tally, oracle)
    _dual_pivot(a, k + 2, right, cmp, tally, oracle)


def _run_dual_pivot(array, oracle):
    a = list(array)
    cmp = CountingComparator()
    tally = ComparisonTally()
    with _recursion_room(len(a)):
        _dual_pivot(a, 0, len(a) - 1, cmp, tally, oracle)
    if cmp.count != tally.total:
        raise AssertionError("comparator count and tally disagree")
    return a, tally


def sort_count(array) -> tuple:
    """Dual-pivot quicksort with the Count classification; returns (sorted, tally)."""
    return _run_dual_pivot(array, oracle=False)


def sort_clairvoyant(array) -> tuple:
    """Dual-pivot quicksort whose classifier knows #small - #large in advance.

    The oracle's own comparisons are not counted.
    """
    return _run_dual_pivot(array, oracle=True)


def sort_classic(array) -> tuple:
    """Single-pivot quicksort, first element as pivot, order-preserving partition.

    Uses exactly ``len - 1`` comparisons per partitioning step; keeping
    the relative order of each side keeps the subproblems uniformly
    random, so the average over all inputs is ``2(n+1)H_n - 4n``.
    """
    cmp = CountingComparator()
    tally = ComparisonTally()

    def rec(a):
        if len(a) <= 1:
            return list(a)
        pivot = a[0]
        lower, upper = [], []
        for x in a[1:]:
            (lower if cmp.lt(x, pivot) else upper).append(x)
        tally.necessary += len(a) - 1
        return rec(lower) + [pivot] + rec(upper)

    with _recursion_room(len(array)):
        out = rec(list(array))
    return out, tally


def sort_with_strategy(array, rule: Callable[[str], Strategy] = count_rule) -> tuple:
    """Dual-pivot quicksort over the abstract classifier.

    Pivots are the first and last elements; the rest are classified left
    to right with the strategy ``rule(seq)`` (``rule`` sees the whole class
    sequence, so oracle strategies can be expressed) and each class keeps
    its input order for the recursive call.
    """
    tally = ComparisonTally()
    cmp = CountingComparator()

    def classify(x, p, q, decision):
        if decision is PivotDecision.P_FIRST:
            if cmp.lt(x, p):
                return "s"
            return "m" if cmp.lt(x, q) else "l"
        if cmp.gt(x, q):
            return "l"
        return "s" if cmp.lt(x, p) else "m"

    def rec(a):
        if len(a) <= 1:
            return list(a)
        tally.pivot_pivot += 1
        p, q = (a[-1], a[0]) if cmp.lt(a[-1], a[0]) else (a[0], a[-1])
        middle = a[1:-1]
        true_seq = "".join("s" if x < p else "l" if q < x else "m" for x in middle)
        strategy = rule(true_seq)
        groups = {"s": [], "m": [], "l": []}
        for t, x in enumerate(middle):
            before = cmp.count
            symbol = classify(x, p, q, strategy(true_seq[:t]))
            tally.book(symbol, cmp.count - before)
            groups[symbol].append(x)
        return rec(groups["s"]) + [p] + rec(groups["m"]) + [q] + rec(groups["l"])

    with _recursion_room(len(array)):
        out = rec(list(array))
    if cmp.count != tally.total:
        raise AssertionError("comparator count and tally disagree")
    return out, tally


ALGORITHMS = {
    "count": sort_count,
    "clairvoyant": sort_clairvoyant,
    "classic": sort_classic,
    "abstract-count": lambda a: sort_with_strategy(a, count_rule),
    "abstract-clairvoyant": lambda a: sort_with_strategy(a, clairvoyant_rule),
}


def average_over_permutations(algorithm, n: int) -> Fraction:
    """Exact mean comparison count of ``algorithm`` over all n! orderings of 1..n."""
    sort = ALGORITHMS[algorithm] if isinstance(algorithm, str) else algorithm
    total = 0
    for perm in itertools.permutations(range(1, n + 1)):
        out, tally = sort(perm)
        total += tally.total
    return Fraction(total, math.factorial(n))
