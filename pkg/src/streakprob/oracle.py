"""Ground truth by exhaustive enumeration, plus the shared streak detector.

The enumerator walks every possible outcome string (3^n of them, 2^n for
draw-free sequences) with a plain odometer and sums the probabilities of the
strings containing a streak. It shares its streak detector with the
Monte-Carlo module, and is feasible only below ``ENUMERATION_CAP`` games.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .engine import StreakQuery
from .model import ProbabilitySequence

ENUMERATION_CAP = 16  # 3**16 ~ 43M outcome strings

LOSS, DRAW, WIN = 0, 1, 2
CODE_NAMES = {LOSS: "loss", DRAW: "draw", WIN: "win"}
_CHAR_CODES = {"L": LOSS, "D": DRAW, "W": WIN}


class EnumerationCapError(ValueError):
    """Sequence too long to enumerate exhaustively."""


@dataclass(frozen=True)
class OutcomeSequence:
    """Realized outcomes of a sequence of games, coded 0 loss, 1 draw, 2 win."""

    codes: np.ndarray

    def __post_init__(self):
        codes = np.ascontiguousarray(self.codes, dtype=np.int8)
        if codes.ndim != 1 or codes.size < 1:
            raise ValueError("outcomes must be a nonempty one-dimensional sequence")
        if not np.all((codes >= 0) & (codes <= 2)):
            raise ValueError("outcome codes must be 0 (loss), 1 (draw) or 2 (win)")
        codes.setflags(write=False)
        object.__setattr__(self, "codes", codes)

    @classmethod
    def from_string(cls, text: str) -> "OutcomeSequence":
        """Parse a compact string like 'WWLDW' (case-insensitive)."""
        try:
            codes = [_CHAR_CODES[c] for c in text.upper()]
        except KeyError as exc:
            raise ValueError(f"unknown outcome character {exc.args[0]!r}; use W, D, L") from None
        return cls(np.array(codes, dtype=np.int8))

    def __len__(self) -> int:
        return int(self.codes.size)

    def __str__(self) -> str:
        return "".join("LDW"[c] for c in self.codes)


def has_streak(outcomes: OutcomeSequence, query: StreakQuery) -> bool:
    """Does the realized outcome string contain a streak of the given kind?

    pure: some window of k consecutive wins. nonlosing: k consecutive
    non-losses. inbetween: some window of k+1 consecutive games totalling
    k + 1/2 points or more, i.e. no loss and at most one draw in the window.
    """
    codes = outcomes.codes if isinstance(outcomes, OutcomeSequence) else OutcomeSequence(outcomes).codes
    return bool(_kernels.has_streak(codes, query.kind_code, query.k))


def enumerate_streak_probability(seq: ProbabilitySequence, query: StreakQuery) -> float:
    """Exact streak probability by summing over every outcome string.

    Only valid below the cap; the per-string probability is the product of
    the per-game outcome probabilities (independence).
    """
    if seq.n > ENUMERATION_CAP:
        raise EnumerationCapError(
            f"enumeration supports at most {ENUMERATION_CAP} games, got {seq.n}")
    hit, _total = _kernels.enumerate_streak_probability(
        seq.loss, seq.draw, seq.win, query.kind_code, query.k, seq.is_draw_free())
    return float(hit)


def total_enumerated_mass(seq: ProbabilitySequence) -> float:
    """Sum of all outcome-string probabilities; 1 up to rounding for valid input."""
    if seq.n > ENUMERATION_CAP:
        raise EnumerationCapError(
            f"enumeration supports at most {ENUMERATION_CAP} games, got {seq.n}")
    _hit, total = _kernels.enumerate_streak_probability(
        seq.loss, seq.draw, seq.win, _kernels.KIND_PURE, 1, seq.is_draw_free())
    return float(total)
