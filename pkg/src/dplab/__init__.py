"""Exact and simulated analysis of dual-pivot quicksort with the Count strategy."""
from .analysis import (
    classic_cost,
    partition_cost_clairvoyant,
    partition_cost_count,
    solve_recurrence,
    total_cost_clairvoyant_closed,
    total_cost_count_closed,
)
from .exact import HarmonicKind, Rational, binomial, harmonic, multinomial
from .optimality import enumerate_strategies, min_additional_cost, strategy_additional_cost
from .paths import LatticePath, expected_zeros_closed, sample_path, zeros_distribution
from .sorting import ComparisonTally, PivotDecision, sort_classic, sort_clairvoyant, sort_count

__version__ = "0.1.0"
