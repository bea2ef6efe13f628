"""Per-game probability model: triplets, validation, CSV ingestion, scenarios.

A game has three outcomes, loss / draw / win, with probabilities that must
sum to 1 within ``SUM_TOLERANCE``. Two-outcome (win/loss) settings are
expressed with draw = 0; there is a single data model for every streak kind.

Out-of-tolerance rows are hard errors, never silently renormalized: this is
an audit tool and quiet fixes would mask data bugs upstream.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence, TextIO, Union

import numpy as np

from . import rng

SUM_TOLERANCE = 1e-9

CSV_HEADER = ("game", "loss", "draw", "win")


class SequenceValidationError(ValueError):
    """Raised when probability data violates the model invariants.

    Carries the full list of violations so callers (e.g. the CLI) can report
    every offending row, not just the first.
    """

    def __init__(self, violations: Sequence["Violation"], context: str = ""):
        self.violations = tuple(violations)
        head = "; ".join(str(v) for v in self.violations[:5])
        more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
        prefix = f"{context}: " if context else ""
        super().__init__(f"{prefix}{len(self.violations)} violation(s): {head}{more}")


@dataclass(frozen=True)
class Violation:
    """One invariant violation, attributed to a 1-based game index."""

    game: int
    rule: str
    values: tuple

    def __str__(self) -> str:
        vals = ", ".join(repr(v) for v in self.values)
        return f"game {self.game}: {self.rule} [{vals}]"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def raise_if_invalid(self, context: str = "") -> None:
        if not self.ok:
            raise SequenceValidationError(self.violations, context)


@dataclass(frozen=True)
class OutcomeDistribution:
    """Loss/draw/win probabilities of one game."""

    loss: float
    draw: float
    win: float

    def total(self) -> float:
        return self.loss + self.draw + self.win


class ProbabilitySequence:
    """Ordered loss/draw/win probability triplets for n independent games.

    Stored as three read-only float64 arrays. Construction does not validate;
    use :func:`validate` (or :meth:`ProbabilitySequence.validation_report`)
    to audit data, which reports violations instead of raising.
    """

    __slots__ = ("loss", "draw", "win")

    def __init__(self, loss, draw, win):
        loss = np.ascontiguousarray(loss, dtype=np.float64)
        draw = np.ascontiguousarray(draw, dtype=np.float64)
        win = np.ascontiguousarray(win, dtype=np.float64)
        if not (loss.ndim == draw.ndim == win.ndim == 1):
            raise ValueError("probability components must be one-dimensional")
        if not (loss.size == draw.size == win.size):
            raise ValueError("loss, draw, win must have equal length")
        if loss.size < 1:
            raise ValueError("a probability sequence needs at least one game")
        for arr in (loss, draw, win):
            arr.setflags(write=False)
        self.loss = loss
        self.draw = draw
        self.win = win

    @classmethod
    def from_games(
        cls, games: Iterable[Union[OutcomeDistribution, tuple[float, float, float]]]
    ) -> "ProbabilitySequence":
        triples = [
            (g.loss, g.draw, g.win) if isinstance(g, OutcomeDistribution) else tuple(g)
            for g in games
        ]
        if not triples:
            raise ValueError("a probability sequence needs at least one game")
        arr = np.asarray(triples, dtype=np.float64)
        return cls(arr[:, 0], arr[:, 1], arr[:, 2])

    @property
    def n(self) -> int:
        return self.loss.size

    def __len__(self) -> int:
        return self.loss.size

    def game(self, index: int) -> OutcomeDistribution:
        """Triplet of the 1-based game ``index``."""
        if not 1 <= index <= self.n:
            raise IndexError(f"game index {index} out of range 1..{self.n}")
        i = index - 1
        return OutcomeDistribution(float(self.loss[i]), float(self.draw[i]), float(self.win[i]))

    @property
    def games(self) -> Iterator[OutcomeDistribution]:
        for i in range(self.n):
            yield OutcomeDistribution(float(self.loss[i]), float(self.draw[i]), float(self.win[i]))

    def is_draw_free(self) -> bool:
        """True when every game has exactly zero draw mass."""
        return bool(np.all(self.draw == 0.0))

    def validation_report(self) -> ValidationReport:
        return validate(self)

    def __repr__(self) -> str:
        return f"ProbabilitySequence(n={self.n})"


def validate(seq: ProbabilitySequence) -> ValidationReport:
    """Audit every triplet; violations are data, not exceptions."""
    violations: list[Violation] = []
    comp_ok = (
        (seq.loss >= 0.0) & (seq.loss <= 1.0)
        & (seq.draw >= 0.0) & (seq.draw <= 1.0)
        & (seq.win >= 0.0) & (seq.win <= 1.0)
    )
    totals = seq.loss + seq.draw + seq.win
    sum_ok = np.abs(totals - 1.0) <= SUM_TOLERANCE
    for i in np.flatnonzero(~comp_ok):
        violations.append(
            Violation(int(i) + 1, "component in [0,1]",
                      (float(seq.loss[i]), float(seq.draw[i]), float(seq.win[i])))
        )
    for i in np.flatnonzero(~sum_ok):
        violations.append(
            Violation(int(i) + 1, f"triplet sums to 1 within {SUM_TOLERANCE:g}",
                      (float(totals[i]),))
        )
    violations.sort(key=lambda v: v.game)
    return ValidationReport(ok=not violations, violations=tuple(violations))


def merge_draws(seq: ProbabilitySequence) -> ProbabilitySequence:
    """Fold draw mass into win mass: win' = win + draw, draw' = 0, loss' = loss.

    This turns a three-outcome model into the two-outcome model where a draw
    counts as a continuation, the reduction behind non-losing streaks. It is
    idempotent and preserves loss probabilities and triplet sums exactly.
    """
    return ProbabilitySequence(seq.loss, np.zeros(seq.n), seq.win + seq.draw)


# ---------------------------------------------------------------------------
# CSV ingestion / serialization
# ---------------------------------------------------------------------------

def load_sequence(source: Union[str, Path, TextIO]) -> ProbabilitySequence:
    """Read the canonical ``game,loss,draw,win`` CSV into a validated sequence.

    Rows are taken in file order; the game column is informational but must
    be a positive integer. Every malformed or invariant-violating row is
    collected and reported with its 1-based data-row number.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", newline="") as fh:
            return load_sequence(fh)
    return _parse_csv(source)


def _parse_csv(stream: TextIO) -> ProbabilitySequence:
    reader = csv.reader(line for line in stream if not line.startswith("#"))
    try:
        header = next(reader)
    except StopIteration:
        raise SequenceValidationError([Violation(0, "empty file", ())], "CSV input") from None
    if tuple(h.strip() for h in header) != CSV_HEADER:
        raise SequenceValidationError(
            [Violation(0, f"header must be {','.join(CSV_HEADER)}", (tuple(header),))],
            "CSV input",
        )
    problems: list[Violation] = []
    triples: list[tuple[float, float, float]] = []
    row_no = 0
    for row in reader:
        if not row:
            continue
        row_no += 1
        if len(row) != 4:
            problems.append(Violation(row_no, "malformed row: expected 4 fields", (len(row),)))
            continue
        game_field = row[0].strip()
        if not game_field.isdigit() or int(game_field) < 1:
            problems.append(
                Violation(row_no, "game column must be a positive integer", (row[0],)))
        try:
            triple = (float(row[1]), float(row[2]), float(row[3]))
        except ValueError:
            problems.append(Violation(row_no, "non-numeric field", tuple(row[1:])))
            continue
        triples.append(triple)
    if row_no == 0:
        raise SequenceValidationError([Violation(0, "empty file", ())], "CSV input")
    if problems:
        raise SequenceValidationError(problems, "CSV input")
    seq = ProbabilitySequence.from_games(triples)
    validate(seq).raise_if_invalid("CSV input")
    return seq


def loads_sequence(text: str) -> ProbabilitySequence:
    """`load_sequence` over an in-memory string."""
    return load_sequence(io.StringIO(text))


def sequence_to_csv(seq: ProbabilitySequence) -> str:
    """Serialize to the canonical CSV format (shortest round-tripping floats)."""
    lines = [",".join(CSV_HEADER)]
    for i in range(seq.n):
        lines.append(
            f"{i + 1},{float(seq.loss[i])!r},{float(seq.draw[i])!r},{float(seq.win[i])!r}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Scenario generation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UniformInterval:
    """Closed-open uniform sampling interval [low, high) within [0, 1]."""

    low: float
    high: float

    def __post_init__(self):
        if not (0.0 <= self.low <= self.high <= 1.0):
            raise ValueError(
                f"uniform interval must satisfy 0 <= low <= high <= 1, got [{self.low}, {self.high}]")

    def sample(self, u: float) -> float:
        return self.low + (self.high - self.low) * u


@dataclass(frozen=True)
class ScenarioSpec:
    """Family of synthetic per-game probabilities.

    Exactly one of ``win`` / ``loss`` is None and is derived per game as the
    remainder 1 - (sum of the sampled components). ``draw`` is either a
    uniform interval or None for constant zero. Interval endpoints must keep
    the remainder nonnegative in the worst case; that is checked here,
    before any sampling.
    """

    n: int
    seed: int
    win: Union[UniformInterval, None] = None
    draw: Union[UniformInterval, None] = None
    loss: Union[UniformInterval, None] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"scenario needs n >= 1 games, got {self.n}")
        rng.check_seed(self.seed)
        if (self.win is None) == (self.loss is None):
            raise ValueError(
                "exactly one of win/loss must be sampled; the other is derived as remainder")
        sampled_max = (self.draw.high if self.draw is not None else 0.0)
        sampled_max += (self.win.high if self.win is not None else self.loss.high)
        if sampled_max > 1.0:
            raise ValueError(
                f"interval endpoints can drive the remainder negative "
                f"(worst-case sampled mass {sampled_max:g} > 1)")


def generate_scenario(spec: ScenarioSpec) -> ProbabilitySequence:
    """Draw a probability sequence from the scenario family, deterministically.

    One SplitMix64 stream keyed by the spec seed is consumed in a fixed
    order: games 1..n, and within a game the draw component first (when it
    is sampled), then the sampled win-or-loss component. The remainder
    component never consumes a variate. Same spec, same seed: identical
    sequences, bit for bit.
    """
    key = rng.scenario_key(spec.seed)
    loss = np.empty(spec.n)
    draw = np.zeros(spec.n)
    win = np.empty(spec.n)
    idx = 0
    for i in range(spec.n):
        if spec.draw is not None:
            draw[i] = spec.draw.sample(rng.stream_uniform(key, idx))
            idx += 1
        if spec.win is not None:
            win[i] = spec.win.sample(rng.stream_uniform(key, idx))
            idx += 1
            loss[i] = 1.0 - draw[i] - win[i]
        else:
            loss[i] = spec.loss.sample(rng.stream_uniform(key, idx))
            idx += 1
            win[i] = 1.0 - draw[i] - loss[i]
    return ProbabilitySequence(loss, draw, win)
