"""Enzymatic degradation in the fast-reaction limit.

A molecule inside the enzyme sphere decays exponentially with rate
``ln 2 / half_life``.  To hold the enzyme amount fixed while the sphere
grows, the half-life is scaled in proportion to the enzyme volume relative to
a reference volume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

LN2 = math.log(2.0)


def degradation_factor(half_life: float) -> float:
    if not half_life > 0:
        raise DomainError(f"half-life must be positive, got {half_life}")
    return LN2 / half_life


def concentration_decay(c0, rate, t):
    """``c0 * exp(-rate * t)``; broadcasts over array arguments."""
    c0, rate, t = np.asarray(c0, float), np.asarray(rate, float), np.asarray(t, float)
    if np.any(c0 < 0) or np.any(rate < 0) or np.any(t < 0):
        raise DomainError("concentration, rate and time must be non-negative")
    out = c0 * np.exp(-rate * t)
    return float(out) if out.ndim == 0 else out


def effective_half_life(unit_half_life: float, volume: float, reference_volume: float) -> float:
    """Half-life that keeps the enzyme amount equal to the reference one.

    The enzyme concentration is inversely proportional to the volume it is
    spread over, so the half-life grows linearly with that volume.
    """
    if not (unit_half_life > 0 and volume > 0 and reference_volume > 0):
        raise DomainError(
            f"half-life and volumes must be positive, got {(unit_half_life, volume, reference_volume)}"
        )
    return unit_half_life * volume / reference_volume


def survival_probability(dt: float, half_life: float) -> float:
    """Probability that a molecule inside the enzyme sphere survives one step."""
    if not dt > 0:
        raise DomainError(f"time step must be positive, got {dt}")
    if not half_life > 0:
        raise DomainError(f"half-life must be positive, got {half_life}")
    if math.isinf(half_life):
        return 1.0
    return 2.0 ** (-dt / half_life)


@dataclass(frozen=True)
class KineticsSpec:
    unit_half_life: float
    reference_volume: float
    effective_half_life: float
    degradation_factor: float

    def __post_init__(self):
        for name in ("unit_half_life", "reference_volume", "effective_half_life"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive")
        # an infinite half-life means no degradation at all
        if not self.degradation_factor >= 0:
            raise DomainError("degradation_factor must be non-negative")

    @classmethod
    def from_volumes(cls, unit_half_life: float, volume: float, reference_volume: float) -> "KineticsSpec":
        hl = effective_half_life(unit_half_life, volume, reference_volume)
        return cls(unit_half_life, reference_volume, hl, degradation_factor(hl))

    @classmethod
    def from_half_life(cls, half_life: float) -> "KineticsSpec":
        """Kinetics with a directly chosen effective half-life (no volume scaling)."""
        return cls(half_life, 1.0, half_life, degradation_factor(half_life))

    def survival_probability(self, dt: float) -> float:
        return survival_probability(dt, self.effective_half_life)
