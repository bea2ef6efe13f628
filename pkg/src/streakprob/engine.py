"""Exact streak-probability engine for the three streak kinds.

Each operation returns the full no-streak curve: one probability per prefix
length m = 1..n, where entry m is the probability that games 1..m contain no
streak. The reported streak probability is 1 minus the final entry.

Kinds:

* ``pure``: a streak is k or more consecutive wins; requires a draw-free
  sequence (fold draws first with :func:`streakprob.model.merge_draws` or
  use the other kinds).
* ``nonlosing``: k or more consecutive non-losses; computed by merging
  draw mass into win mass and running the pure recurrence.
* ``inbetween``: k+1 consecutive games scoring at least k + 1/2 (all wins,
  or k wins and one draw). Values are exact except where the boundary-run
  correction falls back to its upper-bound form, so the curve is an upper
  bound on the true no-streak probability and the streak probability is a
  lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .model import ProbabilitySequence, merge_draws, validate

KINDS = ("pure", "nonlosing", "inbetween")

_KIND_ALIASES = {
    "pure": "pure",
    "nonlosing": "nonlosing",
    "non-losing": "nonlosing",
    "inbetween": "inbetween",
    "in-between": "inbetween",
}

_KIND_CODES = {
    "pure": _kernels.KIND_PURE,
    "nonlosing": _kernels.KIND_NONLOSING,
    "inbetween": _kernels.KIND_INBETWEEN,
}

# raw kernel outputs may stray this far outside [0, 1] before it is a bug
RANGE_SLACK = 1e-12


class NumericalInvariantError(ArithmeticError):
    """A computed probability left [0 - slack, 1 + slack]: an engine bug."""


def normalize_kind(kind: str) -> str:
    try:
        return _KIND_ALIASES[kind.lower()]
    except KeyError:
        raise ValueError(f"unknown streak kind {kind!r}; expected one of {KINDS}") from None


@dataclass(frozen=True)
class StreakQuery:
    """A streak kind plus its length parameter k.

    For pure and non-losing streaks, k is the run length. For in-between
    streaks the window is k+1 games and the score target is k + 1/2; every
    prefix of length <= k trivially has no streak.
    """

    kind: str
    k: int

    def __post_init__(self):
        object.__setattr__(self, "kind", normalize_kind(self.kind))
        if self.k < 1:
            raise ValueError(f"streak parameter k must be >= 1, got {self.k}")

    @property
    def kind_code(self) -> int:
        return _KIND_CODES[self.kind]


@dataclass(frozen=True)
class NoStreakCurve:
    """No-streak probability per prefix length, for one (kind, k) query."""

    kind: str
    k: int
    values: np.ndarray  # values[m - 1] = no-streak probability of games 1..m

    @property
    def n(self) -> int:
        return int(self.values.size)

    @property
    def trivial_prefix_length(self) -> int:
        """Longest prefix whose value is 1 by definition (boundary convention).

        Pure and non-losing streaks need k games, so prefixes shorter than k
        are streak-free with certainty; in-between streaks need a k+1 window,
        so prefixes up to length k are.
        """
        return self.k if self.kind == "inbetween" else self.k - 1

    def value_at(self, m: int) -> float:
        """No-streak probability of the first m games (1-based)."""
        if not 1 <= m <= self.n:
            raise IndexError(f"prefix length {m} out of range 1..{self.n}")
        return float(self.values[m - 1])

    @property
    def streak_probability(self) -> float:
        """Probability of at least one streak within all n games."""
        return 1.0 - float(self.values[-1])


@dataclass(frozen=True)
class StreakGrid:
    """Final streak probability for every k = 1..k_max at fixed n."""

    kind: str
    k_max: int
    n: int
    values: np.ndarray  # values[k - 1] = streak probability at parameter k

    def value_at(self, k: int) -> float:
        if not 1 <= k <= self.k_max:
            raise IndexError(f"k {k} out of range 1..{self.k_max}")
        return float(self.values[k - 1])


def _checked(values: np.ndarray, kind: str, k: int) -> NoStreakCurve:
    lo = float(values.min())
    hi = float(values.max())
    if lo < -RANGE_SLACK or hi > 1.0 + RANGE_SLACK:
        raise NumericalInvariantError(
            f"curve value outside [{-RANGE_SLACK}, {1 + RANGE_SLACK}]: min={lo!r} max={hi!r}")
    values = np.clip(values, 0.0, 1.0)
    values.setflags(write=False)
    return NoStreakCurve(kind=kind, k=k, values=values)


def _require_valid(seq: ProbabilitySequence) -> None:
    validate(seq).raise_if_invalid("engine input")


def pure_no_streak_curve(seq: ProbabilitySequence, k: int) -> NoStreakCurve:
    """Exact no-streak curve for runs of k or more consecutive wins.

    The recurrence conditions on the newest game: a loss leaves the
    probability unchanged; a win removes the mass of histories whose k-1
    trailing games were wins behind a loss, with streak-free games before.
    k > n is legal and yields the all-ones curve.
    """
    _require_valid(seq)
    if k < 1:
        raise ValueError(f"streak length k must be >= 1, got {k}")
    if not seq.is_draw_free():
        raise ValueError("pure path requires draw-free sequence")
    values = _kernels.pure_no_streak_curve(seq.loss, k)
    return _checked(values, "pure", k)


def nonlosing_streak_probability(seq: ProbabilitySequence, k: int) -> float:
    """Probability of k or more consecutive non-losses (win or draw)."""
    return nonlosing_no_streak_curve(seq, k).streak_probability


def nonlosing_no_streak_curve(seq: ProbabilitySequence, k: int) -> NoStreakCurve:
    """No-streak curve where draws continue a streak: merge draws, run pure."""
    _require_valid(seq)
    if k < 1:
        raise ValueError(f"streak length k must be >= 1, got {k}")
    merged = merge_draws(seq)
    values = _kernels.pure_no_streak_curve(merged.loss, k)
    return _checked(values, "nonlosing", k)


def inbetween_no_streak_curve(seq: ProbabilitySequence, k: int) -> NoStreakCurve:
    """No-streak curve for score k + 1/2 or more over k+1 consecutive games.

    Exact except for the documented upper-bound fallback in the
    boundary-run correction, so every value is >= the true no-streak
    probability. k + 1 > n yields the all-ones curve.
    """
    _require_valid(seq)
    if k < 1:
        raise ValueError(f"streak parameter k must be >= 1, got {k}")
    values = _kernels.inbetween_no_streak_curve(seq.loss, seq.draw, seq.win, k)
    return _checked(values, "inbetween", k)


def no_streak_curve(seq: ProbabilitySequence, query: StreakQuery) -> NoStreakCurve:
    """Dispatch on the query kind."""
    if query.kind == "pure":
        return pure_no_streak_curve(seq, query.k)
    if query.kind == "nonlosing":
        return nonlosing_no_streak_curve(seq, query.k)
    return inbetween_no_streak_curve(seq, query.k)


def boundary_run_probability(
    a: int, b: int, k: int, seq: ProbabilitySequence, no_streak_values
) -> float:
    """Probability that games 1..b are streak-free with a trailing win run.

    The event: no in-between streak (parameter k) within games 1..b, games
    a+1..b all won, and game a not won (a loss when the run length b-a is
    exactly k; a = 0 means the run starts at game 1). For run lengths
    shorter than k with a > 1 this returns the upper-bound form used by the
    recurrence; elsewhere it is exact.

    ``no_streak_values`` is a prefix of in-between no-streak values laid out
    like :attr:`NoStreakCurve.values` (entry m-1 for prefix length m); it
    must reach prefix length a-1 when a - 1 > k. Values at or below k are 1
    and need not be present.
    """
    if k < 1:
        raise ValueError(f"streak parameter k must be >= 1, got {k}")
    if a < 0 or a > b:
        raise ValueError(f"need 0 <= a <= b, got a={a}, b={b}")
    if b - a > k:
        raise ValueError(f"run length b-a must be <= k, got {b - a} > {k}")
    if b > seq.n:
        raise IndexError(f"b={b} exceeds sequence length {seq.n}")
    run = 1.0
    for j in range(a + 1, b + 1):
        run *= float(seq.win[j - 1])
    if a == 0:
        return run
    if b - a == k:
        gate = float(seq.loss[a - 1])
    else:
        gate = float(seq.loss[a - 1]) + float(seq.draw[a - 1])
    if a - 1 <= k:
        prefix = 1.0
    else:
        if no_streak_values is None or len(no_streak_values) < a - 1:
            raise ValueError(
                f"no_streak_values must cover prefix length {a - 1} when a > k + 1")
        prefix = float(no_streak_values[a - 2])
    return prefix * gate * run


def streak_grid(seq: ProbabilitySequence, kind: str, k_max: int) -> StreakGrid:
    """Final streak probability for every k = 1..k_max under one kind."""
    kind = normalize_kind(kind)
    _require_valid(seq)
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    if kind == "pure":
        if not seq.is_draw_free():
            raise ValueError("pure path requires draw-free sequence")
        raw = _kernels.pure_streak_grid(seq.loss, k_max)
    elif kind == "nonlosing":
        merged = merge_draws(seq)
        raw = _kernels.pure_streak_grid(merged.loss, k_max)
    else:
        raw = _kernels.inbetween_streak_grid(seq.loss, seq.draw, seq.win, k_max)
    lo = float(raw.min())
    hi = float(raw.max())
    if lo < -RANGE_SLACK or hi > 1.0 + RANGE_SLACK:
        raise NumericalInvariantError(
            f"grid value outside [{-RANGE_SLACK}, {1 + RANGE_SLACK}]: min={lo!r} max={hi!r}")
    values = np.clip(raw, 0.0, 1.0)
    values.setflags(write=False)
    return StreakGrid(kind=kind, k_max=k_max, n=seq.n, values=values)
