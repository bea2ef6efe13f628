"""Numba kernels: dynamic programs, enumeration, sampling, streak detection.

Everything here is deterministic and allocation-light. Outcome codes are
int8: 0 loss, 1 draw, 2 win (score = code / 2). Streak kinds are small ints:
0 pure, 1 non-losing, 2 in-between.

The uint64 SplitMix64 arithmetic mirrors ``rng`` exactly; keys crossing the
Python boundary must be wrapped in ``np.uint64`` by the caller (tests pin
cross-agreement).
"""

import numpy as np
from numba import njit

KIND_PURE = 0
KIND_NONLOSING = 1
KIND_INBETWEEN = 2

U64 = np.uint64
_GAMMA = U64(0x9E3779B97F4A7C15)
_MIX_C1 = U64(0xBF58476D1CE4E5B9)
_MIX_C2 = U64(0x94D049BB133111EB)
_REPLICATE_TAG = U64(0x452821E638D01377)
_INV_2_53 = 2.0**-53


@njit(cache=True)
def mix64(x):
    x = (x ^ (x >> U64(30))) * _MIX_C1
    x = (x ^ (x >> U64(27))) * _MIX_C2
    return x ^ (x >> U64(31))


@njit(cache=True)
def stream_uniform(key, index):
    x = mix64(key + (index + U64(1)) * _GAMMA)
    return (x >> U64(11)) * _INV_2_53


@njit(cache=True)
def replicate_key(seed, replicate):
    return mix64(mix64(seed ^ _REPLICATE_TAG) + replicate * _GAMMA)


@njit(cache=True)
def sample_outcomes_into(key, loss, draw, out):
    # inverse CDF on one uniform per game, category order loss, draw, win
    n = loss.shape[0]
    for i in range(n):
        u = stream_uniform(key, U64(i))
        if u < loss[i]:
            out[i] = 0
        elif u < loss[i] + draw[i]:
            out[i] = 1
        else:
            out[i] = 2


@njit(cache=True)
def has_streak(codes, kind, k):
    """True when the outcome codes contain a streak of the given kind.

    pure: k consecutive wins. non-losing: k consecutive non-losses.
    in-between: k+1 consecutive games with no loss and at most one draw
    (total score k + 1/2 or more).
    """
    n = codes.shape[0]
    if kind == KIND_PURE or kind == KIND_NONLOSING:
        run = 0
        for i in range(n):
            c = codes[i]
            if (c == 2) if kind == KIND_PURE else (c != 0):
                run += 1
                if run >= k:
                    return True
            else:
                run = 0
        return False
    last_loss = -1
    last_draw = -1
    prev_draw = -1
    for i in range(n):
        c = codes[i]
        if c == 0:
            last_loss = i
        elif c == 1:
            prev_draw = last_draw
            last_draw = i
        start = i - k  # window [start, i] spans k+1 games
        if start >= 0 and last_loss < start and prev_draw < start:
            return True
    return False


# ---------------------------------------------------------------------------
# Exact dynamic programs
# ---------------------------------------------------------------------------

@njit(cache=True)
def pure_no_streak_curve(loss, k):
    """No-streak probabilities for runs of >= k wins, one value per prefix.

    Returns v where v[m-1] = P(no k-win run within games 1..m). Win
    probability of game i is 1 - loss[i-1]. Boundary conventions: virtual
    prefix values are 1 and the virtual game 0 is a certain loss, which
    makes the recurrence reproduce the product base case at m = k.
    """
    n = loss.shape[0]
    vbuf = np.ones(n + 2)  # vbuf[j + 1] = value for prefix length j, j = -1..n
    if k > n:
        return vbuf[2:]
    win = 1.0 - loss
    # rolling product of win over the k-1 games before the target game,
    # kept as (zero-factor count, product of nonzero factors)
    zero_count = 0
    nz_prod = 1.0
    for j in range(k - 1):
        f = win[j]
        if f == 0.0:
            zero_count += 1
        else:
            nz_prod *= f
    for t in range(k, n + 1):
        window = 0.0 if zero_count > 0 else nz_prod
        loss_before_run = 1.0 if t == k else loss[t - k - 1]
        value = vbuf[t] - win[t - 1] * loss_before_run * vbuf[t - k] * window
        if value < 0.0:
            value = 0.0
        vbuf[t + 1] = value
        if t < n:
            f_out = win[t - k]
            if f_out == 0.0:
                zero_count -= 1
            else:
                nz_prod /= f_out
            f_in = win[t - 1]
            if f_in == 0.0:
                zero_count += 1
            else:
                nz_prod *= f_in
            if zero_count == 0 and nz_prod == 0.0:
                # extreme underflow: rebuild the window product directly
                nz_prod = 1.0
                for j in range(t - k + 1, t):
                    f = win[j]
                    if f != 0.0:
                        nz_prod *= f
    return vbuf[2:]


@njit(cache=True)
def inbetween_no_streak_curve(loss, draw, win, k):
    """No-streak probabilities for score >= k + 1/2 over k+1 consecutive games.

    Returns v with v[m-1] = P(no such window within games 1..m), computed by
    the three-branch recurrence over the outcome of the newest game. The
    boundary-run terms for short win runs use their upper-bound form, so
    each returned value is an upper bound on the true no-streak probability
    (the reported streak probability is a lower bound).

    Cost is O(k) per game from the window prefix/suffix products and the
    running boundary-term sum, O(n*k) per curve.
    """
    n = loss.shape[0]
    gbuf = np.ones(n + 2)  # gbuf[j + 1] = value for prefix length j, j = -1..n
    if k + 1 > n:
        return gbuf[2:]
    pre = np.empty(k + 1)
    suf = np.empty(k + 1)
    run_suffix = np.empty(k + 2)
    for t in range(k + 1, n + 1):
        m = t - 1
        w0 = m - k  # 0-based index of the first window game (1-based m-k+1)
        pre[0] = 1.0
        for i in range(k):
            pre[i + 1] = pre[i] * win[w0 + i]
        suf[k] = 1.0
        for i in range(k - 1, -1, -1):
            suf[i] = win[w0 + i] * suf[i + 1]
        all_wins = pre[k]
        one_draw_sum = 0.0  # windows with k-1 wins and the draw at each slot
        for i in range(k):
            one_draw_sum += draw[w0 + i] * pre[i] * suf[i + 1]
        if m == k:
            loss_before = 1.0  # virtual game 0 is a certain loss
            draw_before = 0.0
        else:
            loss_before = loss[w0 - 1]
            draw_before = draw[w0 - 1]
        g_prev = gbuf[t]            # prefix length m
        g_before_run = gbuf[t - k - 1]  # prefix length m-k-1
        cond_draw = g_prev - g_before_run * loss_before * all_wins
        new_after_loss = g_before_run * loss_before * (all_wins + one_draw_sum)
        new_after_draw = 0.0
        if draw_before > 0.0:
            run_end = m - k - 1  # 1-based end of the boundary win run
            a_low = m - 2 * k - 1
            if a_low < 0:
                a_low = 0
            run_suffix[run_end - a_low] = 1.0
            for a in range(run_end - 1, a_low - 1, -1):
                run_suffix[a - a_low] = win[a] * run_suffix[a - a_low + 1]
            run_sum = 0.0
            for pos in range(k):
                a = m - 2 * k - 1 + pos
                if a >= a_low:
                    if a == 0:
                        prefix_factor = 1.0
                    elif a == m - 2 * k - 1:
                        # run of exactly k wins: the game before it must be a loss
                        prefix_factor = gbuf[a] * loss[a - 1]
                    else:
                        # shorter run: upper-bound form with a non-win prefix game
                        prefix_factor = gbuf[a] * (loss[a - 1] + draw[a - 1])
                    run_sum += prefix_factor * run_suffix[a - a_low]
                remainder = g_before_run - run_sum
                if remainder < 0.0:
                    remainder = 0.0
                new_after_draw += remainder * draw[w0 + pos] * pre[pos] * suf[pos + 1]
            new_after_draw *= draw_before
        cond_win = g_prev - new_after_loss - new_after_draw
        if cond_win < 0.0:
            cond_win = 0.0
        value = loss[t - 1] * g_prev + draw[t - 1] * cond_draw + win[t - 1] * cond_win
        # the true curve is non-increasing; keep fp/input noise from breaking that
        if value > g_prev:
            value = g_prev
        if value < 0.0:
            value = 0.0
        gbuf[t + 1] = value
    return gbuf[2:]


@njit(cache=True)
def pure_streak_grid(loss, k_max):
    out = np.empty(k_max)
    for k in range(1, k_max + 1):
        curve = pure_no_streak_curve(loss, k)
        out[k - 1] = 1.0 - curve[curve.shape[0] - 1]
    return out


@njit(cache=True)
def inbetween_streak_grid(loss, draw, win, k_max):
    out = np.empty(k_max)
    for k in range(1, k_max + 1):
        curve = inbetween_no_streak_curve(loss, draw, win, k)
        out[k - 1] = 1.0 - curve[curve.shape[0] - 1]
    return out


# ---------------------------------------------------------------------------
# Exhaustive enumeration and Monte-Carlo simulation
# ---------------------------------------------------------------------------

@njit(cache=True)
def enumerate_streak_probability(loss, draw, win, kind, k, draw_free):
    """Sum outcome-string probabilities with and without the streak indicator.

    Base-3 odometer over outcome codes (base-2 over {loss, win} when
    draw_free); returns (probability of at least one streak, total mass).
    Total mass should be 1 up to rounding; it is returned so callers can
    check the enumerator normalizes.
    """
    n = loss.shape[0]
    codes = np.zeros(n, dtype=np.int8)
    hit = 0.0
    total = 0.0
    while True:
        prob = 1.0
        for i in range(n):
            c = codes[i]
            if c == 0:
                prob *= loss[i]
            elif c == 1:
                prob *= draw[i]
            else:
                prob *= win[i]
        total += prob
        if prob > 0.0 and has_streak(codes, kind, k):
            hit += prob
        # advance odometer; draw-free counts loss -> win only
        pos = n - 1
        while pos >= 0:
            if draw_free:
                if codes[pos] == 0:
                    codes[pos] = 2
                    break
                codes[pos] = 0
                pos -= 1
            else:
                if codes[pos] < 2:
                    codes[pos] += 1
                    break
                codes[pos] = 0
                pos -= 1
        if pos < 0:
            return hit, total


@njit(cache=True)
def count_streak_replicates(loss, draw, seed, rep_lo, rep_hi, kind, k):
    """Number of replicates in [rep_lo, rep_hi) whose sampled outcomes contain a streak.

    Each replicate uses its own counter-based stream keyed by (seed, index),
    so the count is independent of evaluation order or partitioning.
    """
    n = loss.shape[0]
    buf = np.empty(n, dtype=np.int8)
    hits = 0
    for r in range(rep_lo, rep_hi):
        key = replicate_key(seed, U64(r))
        sample_outcomes_into(key, loss, draw, buf)
        if has_streak(buf, kind, k):
            hits += 1
    return hits


def warm_up():
    """Compile (or load from cache) every kernel on tiny inputs."""
    loss = np.array([0.5, 0.5, 0.5])
    draw = np.array([0.0, 0.0, 0.0])
    win = 1.0 - loss
    pure_no_streak_curve(loss, 2)
    inbetween_no_streak_curve(loss, draw, win, 1)
    pure_streak_grid(loss, 2)
    inbetween_streak_grid(loss, draw, win, 2)
    enumerate_streak_probability(loss, draw, win, KIND_PURE, 2, True)
    enumerate_streak_probability(loss, draw, win, KIND_INBETWEEN, 1, False)
    count_streak_replicates(loss, draw, U64(1), U64(0), U64(2), KIND_PURE, 1)
    buf = np.empty(3, dtype=np.int8)
    sample_outcomes_into(U64(1), loss, draw, buf)
    has_streak(buf, KIND_NONLOSING, 1)
