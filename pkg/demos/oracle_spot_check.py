"""Three ways to the same number: enumeration, dynamic program, simulation.

On a small schedule (10 games) every possible outcome string can be listed,
so the streak probability can be summed exactly by brute force. That brute
force is the ground truth the fast engine is tested against; this script
walks the comparison for all three streak kinds, then shows the detector on
a few concrete outcome strings.
"""

import numpy as np

from streakprob import (
    OutcomeSequence,
    ProbabilitySequence,
    StreakQuery,
    enumerate_streak_probability,
    has_streak,
    inbetween_no_streak_curve,
    nonlosing_streak_probability,
    pure_no_streak_curve,
    simulate,
)


def main():
    gen = np.random.default_rng(7)
    n = 10
    draw = gen.random(n) * 0.2
    loss = gen.random(n) * (1 - draw) * 0.4
    seq = ProbabilitySequence(loss, draw, 1.0 - draw - loss)
    print("schedule of 10 games, per-game probabilities:")
    for i, game in enumerate(seq.games, start=1):
        print(f"  game {i}: loss {game.loss:.3f}  draw {game.draw:.3f}  win {game.win:.3f}")

    print(f"\n{'kind':<12}{'k':>3}{'enumerated':>13}{'engine':>13}{'simulated':>12}")
    for kind, k in (("pure", 3), ("nonlosing", 5), ("inbetween", 3)):
        query = StreakQuery(kind, k)
        truth = enumerate_streak_probability(seq, query)
        if kind == "pure":
            # only wins continue a pure streak, so draws act as losses:
            # fold draw mass into loss mass and run the two-outcome engine
            folded = ProbabilitySequence(
                seq.loss + seq.draw, np.zeros(n), seq.win)
            engine = pure_no_streak_curve(folded, k).streak_probability
        elif kind == "nonlosing":
            # draws continue a non-losing streak: the engine folds them
            # into wins internally (same as merge_draws)
            engine = nonlosing_streak_probability(seq, k)
        else:
            engine = inbetween_no_streak_curve(seq, k).streak_probability
        mc = simulate(seq, query, reps=20_000, seed=1).estimate
        print(f"{kind:<12}{k:>3}{truth:>13.6f}{engine:>13.6f}{mc:>12.4f}")
    print("\n(the in-between engine value sits just below the enumerated truth:")
    print("it is a guaranteed lower bound on the streak probability, and the")
    print("gap stays within a fraction of a percent)")

    print("\nstreak detector on concrete outcome strings (k = 2):")
    for text in ("WWLW", "WDW", "WDDW", "LWWD"):
        outcomes = OutcomeSequence.from_string(text)
        verdicts = ", ".join(
            f"{kind}: {'yes' if has_streak(outcomes, StreakQuery(kind, 2)) else 'no'}"
            for kind in ("pure", "nonlosing", "inbetween"))
        print(f"  {text:<6} -> {verdicts}")


if __name__ == "__main__":
    main()
