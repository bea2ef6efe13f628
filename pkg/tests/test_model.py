import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from streakprob import (
    OutcomeDistribution,
    ProbabilitySequence,
    ScenarioSpec,
    SequenceValidationError,
    UniformInterval,
    generate_scenario,
    load_sequence,
    loads_sequence,
    merge_draws,
    sequence_to_csv,
    validate,
)
from helpers import random_sequence


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def test_sequence_basics():
    seq = ProbabilitySequence.from_games([(0.2, 0.3, 0.5), (0.1, 0.0, 0.9)])
    assert seq.n == 2 and len(seq) == 2
    assert seq.game(1) == OutcomeDistribution(0.2, 0.3, 0.5)
    assert list(seq.games)[1].win == 0.9
    with pytest.raises(IndexError):
        seq.game(0)
    with pytest.raises(IndexError):
        seq.game(3)


def test_sequence_rejects_empty_and_mismatched():
    with pytest.raises(ValueError):
        ProbabilitySequence.from_games([])
    with pytest.raises(ValueError):
        ProbabilitySequence([0.1], [0.0, 0.0], [0.9])


def test_sequence_arrays_read_only():
    seq = ProbabilitySequence.from_games([(0.2, 0.3, 0.5)])
    with pytest.raises(ValueError):
        seq.loss[0] = 0.9


# ---------------------------------------------------------------------------
# CSV ingestion
# ---------------------------------------------------------------------------

def test_load_basic_row():
    seq = loads_sequence("game,loss,draw,win\n1,0.2,0.3,0.5\n")
    assert seq.game(1) == OutcomeDistribution(0.2, 0.3, 0.5)


def test_load_sum_violation_reports_row():
    with pytest.raises(SequenceValidationError) as exc:
        loads_sequence("game,loss,draw,win\n1,0.2,0.2,0.5\n")
    assert exc.value.violations[0].game == 1
    assert "sums to 1" in exc.value.violations[0].rule


def test_load_certain_win_boundary():
    seq = loads_sequence("game,loss,draw,win\n1,0,0,1\n")
    assert seq.game(1) == OutcomeDistribution(0.0, 0.0, 1.0)


def test_load_component_out_of_range():
    with pytest.raises(SequenceValidationError) as exc:
        loads_sequence("game,loss,draw,win\n1,-0.1,0.3,0.8\n")
    assert any("component in [0,1]" in v.rule for v in exc.value.violations)


def test_load_malformed_and_non_numeric_rows():
    text = "game,loss,draw,win\n1,0.5,0.5\n2,a,0.3,0.5\n3,0.5,0.2,0.3\n"
    with pytest.raises(SequenceValidationError) as exc:
        loads_sequence(text)
    rules = {v.game: v.rule for v in exc.value.violations}
    assert "malformed" in rules[1]
    assert "non-numeric" in rules[2]


def test_load_empty_inputs():
    with pytest.raises(SequenceValidationError):
        loads_sequence("")
    with pytest.raises(SequenceValidationError):
        loads_sequence("game,loss,draw,win\n")


def test_load_bad_header_and_game_column():
    with pytest.raises(SequenceValidationError):
        loads_sequence("loss,draw,win\n0.2,0.3,0.5\n")
    with pytest.raises(SequenceValidationError) as exc:
        loads_sequence("game,loss,draw,win\n0,0.2,0.3,0.5\n")
    assert "positive integer" in exc.value.violations[0].rule


def test_load_from_path(tmp_path):
    path = tmp_path / "seq.csv"
    path.write_text("game,loss,draw,win\n1,0.25,0.25,0.5\n2,0.5,0.0,0.5\n")
    seq = load_sequence(path)
    assert seq.n == 2


def test_csv_round_trip_exact():
    gen = np.random.default_rng(5)
    seq = random_sequence(gen, 40, draw_cap=0.3)
    back = loads_sequence(sequence_to_csv(seq))
    assert np.array_equal(back.loss, seq.loss)
    assert np.array_equal(back.draw, seq.draw)
    assert np.array_equal(back.win, seq.win)


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------

def test_validate_ok():
    gen = np.random.default_rng(11)
    report = validate(random_sequence(gen, 25, draw_cap=0.2))
    assert report.ok and report.violations == ()


def test_validate_reports_violations_as_data():
    seq = ProbabilitySequence([0.5, -0.2], [0.5, 0.3], [0.5, 0.9])
    report = validate(seq)
    assert not report.ok
    games = [v.game for v in report.violations]
    assert 1 in games and 2 in games
    with pytest.raises(SequenceValidationError):
        report.raise_if_invalid()


def test_validate_sum_tolerance_boundary():
    ok = ProbabilitySequence([0.2], [0.3], [0.5 + 5e-10])
    assert validate(ok).ok
    bad = ProbabilitySequence([0.2], [0.3], [0.5 + 5e-9])
    assert not validate(bad).ok


# ---------------------------------------------------------------------------
# merge_draws
# ---------------------------------------------------------------------------

def test_merge_draws_definition():
    seq = ProbabilitySequence.from_games([(0.2, 0.3, 0.5)])
    merged = merge_draws(seq)
    assert merged.game(1) == OutcomeDistribution(0.2, 0.0, 0.8)
    # input unchanged
    assert seq.game(1).draw == 0.3


def test_merge_draws_identity_on_draw_free():
    seq = ProbabilitySequence.from_games([(1.0, 0.0, 0.0)])
    merged = merge_draws(seq)
    assert merged.game(1) == OutcomeDistribution(1.0, 0.0, 0.0)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.floats(0, 1), st.floats(0, 1)), min_size=1, max_size=12))
def test_merge_draws_idempotent_and_preserving(pairs):
    games = []
    for a, b in pairs:
        draw = a * 0.5
        loss = b * (1 - draw)
        games.append((loss, draw, 1 - draw - loss))
    seq = ProbabilitySequence.from_games(games)
    once = merge_draws(seq)
    twice = merge_draws(once)
    assert np.array_equal(once.loss, twice.loss)
    assert np.array_equal(once.draw, twice.draw)
    assert np.array_equal(once.win, twice.win)
    assert np.array_equal(once.loss, seq.loss)
    before = seq.loss + seq.draw + seq.win
    after = once.loss + once.draw + once.win
    assert np.max(np.abs(before - after)) <= 1e-15


# ---------------------------------------------------------------------------
# scenarios
# ---------------------------------------------------------------------------

def test_scenario_spec_rejects_bad_configs():
    with pytest.raises(ValueError):
        ScenarioSpec(n=0, seed=1, win=UniformInterval(0.8, 1.0))
    with pytest.raises(ValueError):
        ScenarioSpec(n=3, seed=1)  # nothing sampled
    with pytest.raises(ValueError):
        ScenarioSpec(n=3, seed=1, win=UniformInterval(0.8, 1.0), loss=UniformInterval(0, 0.1))
    with pytest.raises(ValueError):
        UniformInterval(0.5, 0.2)
    with pytest.raises(ValueError):
        UniformInterval(-0.1, 0.2)
    # draw U(0,0.2) with loss U(0,0.9) can push the remainder negative
    with pytest.raises(ValueError):
        ScenarioSpec(n=3, seed=1, draw=UniformInterval(0, 0.2), loss=UniformInterval(0, 0.9))
    with pytest.raises(ValueError):
        ScenarioSpec(n=3, seed=-1, win=UniformInterval(0.8, 1.0))


def test_scenario_win_sampled_loss_remainder():
    spec = ScenarioSpec(n=3, seed=7, win=UniformInterval(0.85, 1.0))
    seq = generate_scenario(spec)
    assert np.all((seq.win >= 0.85) & (seq.win < 1.0))
    assert np.all(seq.draw == 0.0)
    assert np.array_equal(seq.loss, 1.0 - seq.win)


def test_scenario_remainder_win_floor():
    spec = ScenarioSpec(
        n=2, seed=1, draw=UniformInterval(0, 0.2), loss=UniformInterval(0, 0.15))
    seq = generate_scenario(spec)
    assert np.all(seq.win >= 0.65)


def test_scenario_deterministic():
    spec = ScenarioSpec(n=50, seed=123, draw=UniformInterval(0, 0.2),
                        loss=UniformInterval(0, 0.15))
    a = generate_scenario(spec)
    b = generate_scenario(spec)
    assert np.array_equal(a.loss, b.loss)
    assert np.array_equal(a.draw, b.draw)
    assert np.array_equal(a.win, b.win)
    # and a different seed changes the draw
    c = generate_scenario(ScenarioSpec(n=50, seed=124, draw=UniformInterval(0, 0.2),
                                       loss=UniformInterval(0, 0.15)))
    assert not np.array_equal(a.loss, c.loss)


def test_scenario_output_validates():
    for seed in range(5):
        spec = ScenarioSpec(n=30, seed=seed, draw=UniformInterval(0, 0.3),
                            loss=UniformInterval(0, 0.6))
        assert validate(generate_scenario(spec)).ok
        spec = ScenarioSpec(n=30, seed=seed, win=UniformInterval(0.7, 1.0))
        assert validate(generate_scenario(spec)).ok
