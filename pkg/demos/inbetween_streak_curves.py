"""Streaks that survive a single draw: scoring k + 1/2 over k+1 games.

Drawn games are common in chess-like settings, so a natural streak notion
sits between "pure wins" and "never losing": a window of k+1 consecutive
games worth at least k + 1/2 points, i.e. all wins or k wins plus exactly
one draw. Draw probabilities here follow U(0, 0.2); four families of loss
probabilities, U(0, 0.15) through U(0, 0.30), sweep playing strength.

The computed streak probabilities are slight underestimates (the recurrence
uses an upper-bound correction for one family of boundary events), which is
the conservative direction for "could this streak happen by chance"
questions. Output lands in demo_output/inbetween_streak_curves.csv.
"""

from pathlib import Path

from streakprob import ScenarioSpec, UniformInterval, generate_scenario, streak_grid

N_GAMES = 10_000
K_MAX = 60
LOSS_FAMILIES = [(0.0, 0.15), (0.0, 0.20), (0.0, 0.25), (0.0, 0.30)]
DRAW_FAMILY = (0.0, 0.2)
SEED = 4096

OUT = Path(__file__).parent / "demo_output"


def main():
    OUT.mkdir(exist_ok=True)
    grids = []
    for i, (low, high) in enumerate(LOSS_FAMILIES):
        spec = ScenarioSpec(
            n=N_GAMES, seed=SEED + i,
            draw=UniformInterval(*DRAW_FAMILY), loss=UniformInterval(low, high))
        seq = generate_scenario(spec)
        print(f"loss ~ U({low}, {high}), draw ~ U{DRAW_FAMILY}: "
              f"computing {K_MAX} curves over {N_GAMES} games...")
        grids.append(streak_grid(seq, "inbetween", K_MAX))

    path = OUT / "inbetween_streak_curves.csv"
    headers = ",".join(f"loss U({lo},{hi})" for lo, hi in LOSS_FAMILIES)
    with open(path, "w") as fh:
        fh.write(f"k,{headers}\n")
        for k in range(1, K_MAX + 1):
            row = ",".join(f"{g.value_at(k):.6g}" for g in grids)
            fh.write(f"{k},{row}\n")
    print(f"wrote {path}")

    print(f"\nprobability of scoring k + 1/2 or more over some k+1 consecutive games:")
    print(f"{'k':>5}" + "".join(f"{f'U({lo},{hi})':>14}" for lo, hi in LOSS_FAMILIES))
    for k in (15, 25, 35, 45, 55):
        print(f"{k:>5}" + "".join(f"{g.value_at(k):>14.4f}" for g in grids))


if __name__ == "__main__":
    main()
