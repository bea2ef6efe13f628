"""Seeded Monte-Carlo estimation of streak probabilities.

Each replicate samples one full outcome sequence from the per-game triplets
and checks it with the shared streak detector. Replicate r of seed s draws
from the counter-based stream keyed by ``rng.replicate_key(s, r)``, so the
estimate depends only on (seed, reps, sequence, query), never on execution
order, chunking, or parallelism.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from statistics import NormalDist

import numpy as np

from . import _kernels, rng
from .engine import StreakQuery
from .model import ProbabilitySequence, validate
from .oracle import OutcomeSequence


@dataclass(frozen=True)
class SimulationResult:
    """Estimate with a two-sided normal-approximation binomial interval."""

    estimate: float
    reps: int
    seed: int
    ci_low: float
    ci_high: float
    level: float
    successes: int
    interval: str = "normal-approximation"


def sample_outcomes(seq: ProbabilitySequence, rng_state: int) -> OutcomeSequence:
    """Sample one outcome per game from the stream with key ``rng_state``.

    Game i consumes the i-th uniform of the stream (0-based) through the
    inverse CDF in the fixed category order loss, draw, win.
    """
    if not 0 <= rng_state <= rng.MASK64:
        raise ValueError(f"rng_state must be an unsigned 64-bit key, got {rng_state}")
    buf = np.empty(seq.n, dtype=np.int8)
    _kernels.sample_outcomes_into(np.uint64(rng_state), seq.loss, seq.draw, buf)
    return OutcomeSequence(buf)


def simulate(
    seq: ProbabilitySequence,
    query: StreakQuery,
    reps: int,
    seed: int,
    level: float = 0.95,
) -> SimulationResult:
    """Estimate the streak probability from ``reps`` independent replicates.

    Replicate r uses the stream keyed by ``rng.replicate_key(seed, r)``; the
    success count is a plain sum over replicates, so any partition of the
    replicate range yields the identical result.
    """
    if reps < 1:
        raise ValueError(f"reps must be >= 1, got {reps}")
    if not 0.0 < level < 1.0:
        raise ValueError(f"confidence level must be in (0, 1), got {level}")
    rng.check_seed(seed)
    validate(seq).raise_if_invalid("simulation input")
    hits = _kernels.count_streak_replicates(
        seq.loss, seq.draw, np.uint64(seed), np.uint64(0), np.uint64(reps),
        query.kind_code, query.k)
    successes = int(hits)
    estimate = successes / reps
    z = NormalDist().inv_cdf(0.5 + level / 2.0)
    half = z * sqrt(estimate * (1.0 - estimate) / reps)
    return SimulationResult(
        estimate=estimate,
        reps=reps,
        seed=seed,
        ci_low=max(0.0, estimate - half),
        ci_high=min(1.0, estimate + half),
        level=level,
        successes=successes,
    )
