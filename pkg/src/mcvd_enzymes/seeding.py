"""Stateless derivation of per-replication seeds."""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finaliser (Steele, Lea & Flood 2014); a bijection on 64 bits."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def seed_derivation(master_seed: int, replication_id: int) -> int:
    """64-bit seed for one replication.

    ``mix64(master + (id + 1) * GOLDEN_GAMMA)`` with wrap-around arithmetic.
    For a fixed master the map is injective in ``id`` (mod 2**64), so distinct
    replications never share a stream.
    """
    return mix64((master_seed + (replication_id + 1) * GOLDEN_GAMMA) & MASK64)
