"""Exact rational primitives: harmonic numbers, binomials, multinomials.

Every expectation in the package is a :class:`fractions.Fraction`; nothing
here rounds.  The floating asymptotic evaluators live next to the exact
sums so callers can compare the two directly.
"""
from __future__ import annotations

import enum
import math
import threading
from fractions import Fraction

__all__ = [
    "Rational",
    "HarmonicKind",
    "harmonic",
    "binomial",
    "multinomial",
    "harmonic_asymptotic",
    "EULER_GAMMA",
    "LOG2",
    "parse_rational",
]

Rational = Fraction

# 0.57721566490153286060651209...
EULER_GAMMA = 0.5772156649015329
LOG2 = math.log(2.0)


class HarmonicKind(enum.Enum):
    PLAIN = "plain"
    ODD = "odd"
    ALTERNATING = "alternating"


class _PrefixTable:
    """Lazily grown prefix sums of one harmonic variant."""

    def __init__(self, term):
        self._term = term
        self._values = [Fraction(0)]
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> Fraction:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = self._values
            # copy-on-extend so concurrent readers never see a half-built list
            grown = list(values)
            acc = grown[-1]
            for m in range(len(grown), n + 1):
                acc = acc + self._term(m)
                grown.append(acc)
            self._values = grown
            return grown[n]


_TABLES = {
    HarmonicKind.PLAIN: _PrefixTable(lambda m: Fraction(1, m)),
    HarmonicKind.ODD: _PrefixTable(lambda m: Fraction(m % 2, m)),
    HarmonicKind.ALTERNATING: _PrefixTable(lambda m: Fraction((-1) ** m, m)),
}


def harmonic(kind: HarmonicKind | str, n: int) -> Fraction:
    """H_n, the odd-index sum, or the alternating sum, exactly.

    ``kind`` may be a :class:`HarmonicKind` or its string value.
    All variants vanish at ``n = 0``.
    """
    kind = HarmonicKind(kind)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return _TABLES[kind][n]


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts) -> int:
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"parts must be non-negative: {parts}")
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    result = math.factorial(n)
    for p in parts:
        result //= math.factorial(p)
    return result


def harmonic_asymptotic(kind: HarmonicKind | str, n: int) -> float:
    """Expansion of a harmonic variant through the 1/n^2 term.

    The neglected remainder is O(1/n^4) for all three variants.
    """
    kind = HarmonicKind(kind)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    log_n = math.log(n)
    even = 1 if n % 2 == 0 else 0
    if kind is HarmonicKind.PLAIN:
        return log_n + EULER_GAMMA + 1 / (2 * n) - 1 / (12 * n * n)
    if kind is HarmonicKind.ODD:
        return (
            log_n / 2
            + (EULER_GAMMA + LOG2) / 2
            + (1 - even) / (2 * n)
            + (3 * even - 2) / (12 * n * n)
        )
    sign = 1 if even else -1
    return -LOG2 + sign / (2 * n) - sign / (4 * n * n)


def parse_rational(text: str) -> Fraction:
    """Inverse of ``str(Fraction)``; accepts ``"p/q"`` or an integer."""
    return Fraction(text.strip())
