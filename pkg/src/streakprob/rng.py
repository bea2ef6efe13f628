"""Deterministic random streams used everywhere randomness is needed.

All randomness in this package comes from SplitMix64-style counter streams:
the j-th uniform of the stream with 64-bit key ``key`` is

    u_j = mix64((key + (j + 1) * GOLDEN_GAMMA) mod 2**64) >> 11, scaled by 2**-53

where ``mix64`` is the SplitMix64 output permutation (Steele, Lea & Flood).
Because each variate is a pure function of (key, j), streams can be evaluated
in any order, in parallel, or partially, and always agree bit for bit.

Stream keys are derived from user-facing seeds with domain-separation tags so
that scenario generation and Monte-Carlo replication never share a stream:

    scenario stream:   key = mix64(seed XOR SCENARIO_TAG)
    replicate stream:  key = mix64(mix64(seed XOR REPLICATE_TAG) + r * GOLDEN_GAMMA)

Seeds are unsigned 64-bit integers. The same constructions are mirrored in
the compiled kernels (``_kernels``); cross-agreement is covered by tests.
"""

from __future__ import annotations

MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
SCENARIO_TAG = 0x243F6A8885A308D3
REPLICATE_TAG = 0x452821E638D01377

_MIX_C1 = 0xBF58476D1CE4E5B9
_MIX_C2 = 0x94D049BB133111EB


def mix64(value: int) -> int:
    """SplitMix64 output permutation of a 64-bit integer."""
    value &= MASK64
    value = ((value ^ (value >> 30)) * _MIX_C1) & MASK64
    value = ((value ^ (value >> 27)) * _MIX_C2) & MASK64
    return value ^ (value >> 31)


def check_seed(seed: int) -> int:
    """Validate a user-facing seed (unsigned 64-bit integer)."""
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ValueError(f"seed must be an integer, got {type(seed).__name__}")
    if not 0 <= seed <= MASK64:
        raise ValueError(f"seed must be in [0, 2**64), got {seed}")
    return seed


def stream_uniform(key: int, index: int) -> float:
    """The index-th uniform double in [0, 1) of the stream with the given key."""
    x = mix64((key + (index + 1) * GOLDEN_GAMMA) & MASK64)
    return (x >> 11) * 2.0**-53


def scenario_key(seed: int) -> int:
    """Stream key for scenario (per-game probability) generation."""
    return mix64(check_seed(seed) ^ SCENARIO_TAG)


def replicate_key(seed: int, replicate: int) -> int:
    """Stream key for the ``replicate``-th Monte-Carlo replicate of ``seed``."""
    if replicate < 0:
        raise ValueError(f"replicate index must be nonnegative, got {replicate}")
    base = mix64(check_seed(seed) ^ REPLICATE_TAG)
    return mix64((base + replicate * GOLDEN_GAMMA) & MASK64)
