"""Shared builders for randomized test instances."""

import numpy as np

from streakprob import ProbabilitySequence


def random_sequence(rng, n, draw_cap=0.0, loss_scale=1.0):
    """Random valid sequence; triplets sum to 1 up to float rounding.

    draw_cap bounds the per-game draw mass; loss_scale shrinks losses
    toward 0 to reach interesting streak regimes.
    """
    draw = rng.random(n) * draw_cap
    loss = rng.random(n) * (1.0 - draw) * loss_scale
    win = 1.0 - draw - loss
    return ProbabilitySequence(loss, draw, win)


def random_draw_free(rng, n):
    loss = rng.random(n)
    return ProbabilitySequence(loss, np.zeros(n), 1.0 - loss)


def constant_sequence(n, loss, draw, win):
    return ProbabilitySequence(
        np.full(n, float(loss)), np.full(n, float(draw)), np.full(n, float(win)))
