"""Minimum expected additional comparisons over all classification strategies.

After ``t`` classified elements with counts ``(s, m, l)`` the next
element is small, medium or large with probabilities ``(s+1)/(t+3)``,
``(m+1)/(t+3)`` and ``(l+1)/(t+3)``.  Comparing with ``p`` first wastes a
comparison on a large element, comparing with ``q`` first on a small one.

Three independent routes are provided: a backward Bellman recursion over
count states (:func:`min_additional_cost`), a forward evaluation of a
given count-based strategy (:func:`strategy_additional_cost`), and an
exhaustive search over every full-history strategy for tiny ``n``
(:func:`enumerate_strategies`).
"""
from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .sorting import PivotDecision

__all__ = [
    "CountState",
    "next_symbol_pmf",
    "count_decision",
    "always_p",
    "min_additional_cost",
    "min_additional_cost_forward",
    "optimal_policy",
    "strategy_additional_cost",
    "strategy_additional_costs",
    "prefix_strategy_cost",
    "sequence_probability",
    "EnumerationResult",
    "enumerate_strategies",
]

P, Q = PivotDecision.P_FIRST, PivotDecision.Q_FIRST


@dataclass(frozen=True)
class CountState:
    s: int
    m: int
    l: int  # noqa: E741

    @property
    def t(self) -> int:
        return self.s + self.m + self.l


def next_symbol_pmf(state) -> dict:
    """Law of the next symbol given the counts seen so far."""
    s, m, l = _counts(state)
    denom = s + m + l + 3
    return {"s": Fraction(s + 1, denom), "m": Fraction(m + 1, denom), "l": Fraction(l + 1, denom)}


def _counts(state) -> tuple:
    if isinstance(state, CountState):
        return state.s, state.m, state.l
    s, m, l = state
    return s, m, l


def count_decision(state) -> PivotDecision:
    s, _, l = _counts(state)
    return P if s >= l else Q


def always_p(state) -> PivotDecision:
    return P


# ---------------------------------------------------------------- backward DP

def min_additional_cost(n: int) -> Fraction:
    """Bellman recursion from t = n-2 back to the empty prefix.

    ``value(c) = min_d [wrong(c, d) + sum_g pmf(g) value(c + e_g)]`` with
    terminal value 0.  The layer at time ``t`` is stored scaled by
    ``prod_{u=t}^{n-3} (u+3)``, which turns every value into an integer,
    so each layer is one vectorised pass over object arrays.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    steps = n - 2
    if steps == 0:
        return Fraction(0)
    nxt = None
    scale = 1  # product of (u+3) for u in (t, steps)
    for t in range(steps - 1, -1, -1):
        s = np.arange(t + 1)[:, None]
        l = np.arange(t + 1)[None, :]  # noqa: E741
        m = t - s - l
        inside = m >= 0
        # wrong-pivot weight of each decision, times (t+3)
        cost_p = (l + 1).astype(object) * scale
        cost_q = (s + 1).astype(object) * scale
        future = 0
        if nxt is not None:
            future = (
                (s + 1).astype(object) * nxt[1:, : t + 1]
                + (l + 1).astype(object) * nxt[: t + 1, 1:]
                + np.where(inside, m + 1, 0).astype(object) * nxt[: t + 1, : t + 1]
            )
        value = np.minimum(cost_p + future, cost_q + future)
        nxt = np.where(inside, value, 0)
        scale *= t + 3
    return Fraction(int(nxt[0, 0]), scale)


def optimal_policy(n: int) -> dict:
    """Set of optimal decisions at every reachable count state (small ``n``).

    Plain Fraction Bellman recursion; both decisions are reported when
    their values tie.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    steps = n - 2
    value = {}
    policy = {}
    for t in range(steps - 1, -1, -1):
        for s in range(t + 1):
            for l in range(t + 1 - s):  # noqa: E741
                m = t - s - l
                pmf = next_symbol_pmf((s, m, l))
                future = Fraction(0)
                if t + 1 < steps:
                    future = (
                        pmf["s"] * value[(s + 1, m, l)]
                        + pmf["m"] * value[(s, m + 1, l)]
                        + pmf["l"] * value[(s, m, l + 1)]
                    )
                q_values = {P: pmf["l"] + future, Q: pmf["s"] + future}
                best = min(q_values.values())
                value[(s, m, l)] = best
                policy[CountState(s, m, l)] = frozenset(d for d, v in q_values.items() if v == best)
    return policy


# ---------------------------------------------------------------- forward DP

def _forward(decide, n_max: int, pick_min: bool = False) -> list:
    """Expected additional cost for every n <= n_max in one forward sweep.

    Weights ``w_t(c)`` are path-probabilities times ``(t+2)!/2``; the
    urn step multiplies by ``c_j + 1`` and the normaliser by ``t + 3``.
    """
    costs = [Fraction(0)] * min(3, n_max + 1)
    layer = {(0, 0, 0): 1}
    norm = 1  # (t+2)!/2
    running = Fraction(0)
    for t in range(max(n_max - 2, 0)):
        step = 0
        nxt = {}
        for (s, m, l), w in layer.items():  # noqa: E741
            if pick_min:
                wrong = min(s, l) + 1
            else:
                decision = decide((s, m, l)) if not isinstance(decide, Mapping) else decide.get((s, m, l))
                if decision is None and isinstance(decide, Mapping):
                    decision = decide.get(CountState(s, m, l))
                if decision is None:
                    raise ValueError(f"strategy undefined at state {(s, m, l)}")
                wrong = l + 1 if PivotDecision(decision) is P else s + 1
            step += w * wrong
            for key, mult in (((s + 1, m, l), s + 1), ((s, m + 1, l), m + 1), ((s, m, l + 1), l + 1)):
                nxt[key] = nxt.get(key, 0) + w * mult
        running += Fraction(step, norm * (t + 3))
        costs.append(running)
        layer = nxt
        norm *= t + 3
    return costs[: n_max + 1]


def min_additional_cost_forward(n: int) -> Fraction:
    """Forward-weighted counterpart of :func:`min_additional_cost`."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return _forward(None, n, pick_min=True)[n]


def strategy_additional_costs(strategy, n_max: int) -> list:
    """``[E A(n) for n in 0..n_max]`` for a count-based strategy.

    ``strategy`` maps a state ``(s, m, l)`` to a :class:`PivotDecision`,
    either as a callable or as a mapping; it must not depend on ``n``.
    Entries for n < 2 are zero.
    """
    return _forward(strategy, n_max)


def strategy_additional_cost(strategy, n: int) -> Fraction:
    """Expected number of additional comparisons of a count-based strategy."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return _forward(strategy, n)[n]


# ---------------------------------------------------------------- exhaustive mode

def sequence_probability(seq: str) -> Fraction:
    """Probability of a class sequence under the random-permutation model."""
    counts = {"s": 0, "m": 0, "l": 0}
    prob = Fraction(1)
    for t, symbol in enumerate(seq):
        prob *= Fraction(counts[symbol] + 1, t + 3)
        counts[symbol] += 1
    return prob


def _prefixes(length: int) -> list:
    return ["".join(p) for k in range(length) for p in itertools.product("sml", repeat=k)]


def prefix_strategy_cost(strategy: Mapping, n: int) -> Fraction:
    """Expected additional cost of a full-history strategy by enumerating sequences."""
    total = Fraction(0)
    for seq in map("".join, itertools.product("sml", repeat=n - 2)):
        wrong = 0
        for t, symbol in enumerate(seq):
            try:
                decision = strategy[seq[:t]]
            except KeyError:
                raise ValueError(f"strategy undefined at prefix {seq[:t]!r}") from None
            wrong += (decision is P and symbol == "l") or (decision is Q and symbol == "s")
        total += wrong * sequence_probability(seq)
    return total


@dataclass(frozen=True)
class EnumerationResult:
    n: int
    strategies: int
    minimum: Fraction
    count_cost: Fraction
    optimal: int
    count_is_optimal: bool
    optimal_agree_with_count_off_ties: bool
    free_tie_prefixes: tuple  # tie prefixes where optimal strategies differ


def enumerate_strategies(n: int) -> EnumerationResult:
    """Evaluate every strategy on prefixes of length < n - 2 (n <= 5)."""
    if n < 2 or n > 5:
        raise ValueError(f"exhaustive enumeration supports 2 <= n <= 5, got {n}")
    prefixes = _prefixes(n - 2)
    index = {p: i for i, p in enumerate(prefixes)}
    # per sequence: (weight, [(prefix index, symbol)])
    table = []
    for seq in map("".join, itertools.product("sml", repeat=n - 2)):
        table.append((sequence_probability(seq), [(index[seq[:t]], x) for t, x in enumerate(seq)]))

    def cost(bits):
        total = Fraction(0)
        for weight, steps in table:
            wrong = 0
            for i, symbol in steps:
                q_first = bits >> i & 1
                wrong += (symbol == "s") if q_first else (symbol == "l")
            if wrong:
                total += weight * wrong
        return total

    count_bits = sum(
        1 << i for i, p in enumerate(prefixes) if p.count("s") < p.count("l")
    )
    results = [cost(bits) for bits in range(1 << len(prefixes))]
    minimum = min(results)
    optimal = [bits for bits, c in enumerate(results) if c == minimum]

    ties = [i for i, p in enumerate(prefixes) if p.count("s") == p.count("l")]
    tie_mask = sum(1 << i for i in ties)
    agree = all((bits ^ count_bits) & ~tie_mask == 0 for bits in optimal)
    free = tuple(
        prefixes[i] for i in ties if len({bits >> i & 1 for bits in optimal}) == 2
    )
    return EnumerationResult(
        n=n,
        strategies=len(results),
        minimum=minimum,
        count_cost=results[count_bits],
        optimal=len(optimal),
        count_is_optimal=results[count_bits] == minimum,
        optimal_agree_with_count_off_ties=agree,
        free_tie_prefixes=free,
    )
