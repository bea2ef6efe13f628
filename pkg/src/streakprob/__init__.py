"""streakprob: exact and simulated win-streak probabilities.

Given per-game loss/draw/win probabilities for a sequence of independent
games, compute the probability that the sequence contains at least one
streak, for three streak definitions:

* pure: k or more consecutive wins,
* non-losing: k or more consecutive games without a loss,
* in-between: k+1 consecutive games scoring k + 1/2 or more points
  (all wins, or k wins and a single draw).

Exact curves come from dynamic programs over prefix lengths; ground truth
for small inputs comes from exhaustive enumeration; a seeded Monte-Carlo
simulator provides estimates with confidence intervals at any size.
"""

__version__ = "0.1.0"

from .engine import (
    KINDS,
    NoStreakCurve,
    NumericalInvariantError,
    StreakGrid,
    StreakQuery,
    boundary_run_probability,
    inbetween_no_streak_curve,
    no_streak_curve,
    nonlosing_no_streak_curve,
    nonlosing_streak_probability,
    pure_no_streak_curve,
    streak_grid,
)
from .model import (
    OutcomeDistribution,
    ProbabilitySequence,
    ScenarioSpec,
    SequenceValidationError,
    UniformInterval,
    ValidationReport,
    Violation,
    generate_scenario,
    load_sequence,
    loads_sequence,
    merge_draws,
    sequence_to_csv,
    validate,
)
from .montecarlo import SimulationResult, sample_outcomes, simulate
from .oracle import (
    ENUMERATION_CAP,
    EnumerationCapError,
    OutcomeSequence,
    enumerate_streak_probability,
    has_streak,
    total_enumerated_mass,
)

__all__ = [
    "__version__",
    "KINDS",
    "ENUMERATION_CAP",
    "EnumerationCapError",
    "NoStreakCurve",
    "NumericalInvariantError",
    "OutcomeDistribution",
    "OutcomeSequence",
    "ProbabilitySequence",
    "ScenarioSpec",
    "SequenceValidationError",
    "SimulationResult",
    "StreakGrid",
    "StreakQuery",
    "UniformInterval",
    "ValidationReport",
    "Violation",
    "boundary_run_probability",
    "enumerate_streak_probability",
    "generate_scenario",
    "has_streak",
    "inbetween_no_streak_curve",
    "load_sequence",
    "loads_sequence",
    "merge_draws",
    "no_streak_curve",
    "nonlosing_no_streak_curve",
    "nonlosing_streak_probability",
    "pure_no_streak_curve",
    "sample_outcomes",
    "sequence_to_csv",
    "simulate",
    "streak_grid",
    "total_enumerated_mass",
    "validate",
]
