"""First-passage statistics of a point Tx and an absorbing sphere Rx.

These closed forms hold for an unbounded 3D medium, optionally with uniform
first-order degradation everywhere, and serve as references for the particle
simulator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special

from .errors import DomainError, QuadratureError


@dataclass(frozen=True)
class ChannelParams:
    """Point-to-surface distance ``d`` (um), Rx radius ``r_r`` (um),
    diffusion coefficient ``D`` (um^2/s) and degradation rate ``lam`` (1/s)."""

    d: float
    r_r: float
    D: float
    lam: float = 0.0

    def __post_init__(self):
        if not (self.d > 0 and self.r_r > 0 and self.D > 0):
            raise DomainError(f"d, r_r and D must be positive: {self}")
        if not self.lam >= 0:
            raise DomainError(f"degradation rate must be non-negative, got {self.lam}")

    @property
    def capture_probability(self) -> float:
        """Eventual hitting probability without degradation."""
        return self.r_r / (self.d + self.r_r)

    @property
    def t_peak(self) -> float:
        return self.d**2 / (6.0 * self.D)


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def hit_rate(t, p: ChannelParams):
    """First-passage density without degradation, in 1/s.

    The ``lam`` field of ``p`` is ignored here; see :func:`hit_rate_enzyme`.
    """
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0):
        raise DomainError("hit_rate needs t > 0")
    out = (
        p.capture_probability
        * p.d
        / np.sqrt(4.0 * math.pi * p.D * t**3)
        * np.exp(-(p.d**2) / (4.0 * p.D * t))
    )
    return _scalar_or_array(out)


def hit_rate_enzyme(t, p: ChannelParams):
    t = np.asarray(t, dtype=float)
    return _scalar_or_array(np.asarray(hit_rate(t, p)) * np.exp(-p.lam * t))


def hit_cdf(t, p: ChannelParams):
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise DomainError("hit_cdf needs t >= 0")
    with np.errstate(divide="ignore"):
        arg = np.where(t > 0, p.d / (2.0 * np.sqrt(p.D * np.where(t > 0, t, 1.0))), np.inf)
    return _scalar_or_array(p.capture_probability * special.erfc(arg))


def _quad(f, a, b, epsrel):
    val, err, info = integrate.quad(f, a, b, epsabs=0.0, epsrel=epsrel, limit=200, full_output=True)[:3]
    if err > max(epsrel * abs(val), 1e-14):
        raise QuadratureError(
            f"quadrature on [{a}, {b}] did not converge: value={val}, error={err}, "
            f"evaluations={info['neval']}"
        )
    return val


def hit_cdf_enzyme(t: float, p: ChannelParams, epsrel: float = 1e-8) -> float:
    """Probability of being absorbed before ``t`` without degrading first.

    Integrates the degraded first-passage density adaptively, splitting the
    range at the density peak and again at a few multiples of it so the
    near-singular rise and the long tail are handled separately.
    """
    if t < 0:
        raise DomainError("hit_cdf_enzyme needs t >= 0")
    if t == 0:
        return 0.0

    def f(s):
        return hit_rate_enzyme(s, p) if s > 0 else 0.0

    tp = p.t_peak
    if p.lam > 0:
        tp = min(tp, (math.sqrt(9 * p.D**2 + 4 * p.lam * p.D * p.d**2) - 3 * p.D) / (4 * p.lam * p.D))
    cuts = [0.0] + [c for c in (tp, 10 * tp, 100 * tp) if c < t] + [t]
    return sum(_quad(f, a, b, epsrel) for a, b in zip(cuts[:-1], cuts[1:]))
