"""Channel geometry: bodies, enzyme regions and enzyme-volume bookkeeping.

All lengths are in micrometres and volumes in cubic micrometres.  The receiver
(Rx) is an absorbing sphere centred at the origin; the transmitter (Tx) sits
on the +x axis, either as a reflecting sphere of the same radius or as a
passive point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import DomainError, GeometryError

ABSORBING = "absorbing"
REFLECTING = "reflecting"
PASSIVE_POINT = "passive-point"

AROUND_RX = "around-Rx"
AROUND_TX = "around-Tx"
EVERYWHERE = "everywhere"

# scenario id -> (Tx is a sphere, enzyme anchor or None)
SCENARIOS = {
    "PT-ARx": (False, AROUND_RX),
    "PT-ATx": (False, AROUND_TX),
    "ST-ARx": (True, AROUND_RX),
    "ST-ATx": (True, AROUND_TX),
    "everywhere-PT": (False, EVERYWHERE),
    "everywhere-ST": (True, EVERYWHERE),
    "none-PT": (False, None),
    "none-ST": (True, None),
}

# radius of the "everywhere" sphere in units of the longest Tx-Rx distance
EVERYWHERE_FACTOR = 4.0

# outer radius of an enzyme sphere around a point Tx: r_enz ("surface", the
# extension is measured from the body surface) or r_r + r_enz ("matched", the
# same footprint as around a sphere Tx)
POINT_FOOTPRINTS = ("surface", "matched")


class Point3(NamedTuple):
    x: float
    y: float
    z: float


ORIGIN = Point3(0.0, 0.0, 0.0)


@dataclass(frozen=True)
class SphereBody:
    center: Point3
    radius: float
    behavior: str

    def __post_init__(self):
        if not all(math.isfinite(c) for c in self.center):
            raise GeometryError(f"non-finite body center {self.center}")
        if self.radius < 0:
            raise GeometryError(f"negative body radius {self.radius}")
        if self.behavior not in (ABSORBING, REFLECTING, PASSIVE_POINT):
            raise GeometryError(f"unknown body behavior {self.behavior!r}")
        if self.behavior == PASSIVE_POINT and self.radius != 0:
            raise GeometryError("a passive point body must have zero radius")

    @property
    def volume(self) -> float:
        return sphere_volume(self.radius)


@dataclass(frozen=True)
class EnzymeRegion:
    """Sphere inside which molecules may be degraded.

    ``outer_radius`` is the full radius of the enzyme sphere; for regions
    anchored on a body it equals the body radius plus the extended enzyme
    radius.
    """

    center: Point3
    outer_radius: float
    anchor: str

    def __post_init__(self):
        if not self.outer_radius > 0:
            raise GeometryError(f"enzyme radius must be positive, got {self.outer_radius}")
        if self.anchor not in (AROUND_RX, AROUND_TX, EVERYWHERE):
            raise GeometryError(f"unknown enzyme anchor {self.anchor!r}")

    @property
    def radius(self) -> float:
        return self.outer_radius


@dataclass(frozen=True)
class ChannelGeometry:
    tx: SphereBody
    rx: SphereBody
    enzyme: Optional[EnzymeRegion]
    d: float

    def __post_init__(self):
        if not self.rx.radius > 0:
            raise GeometryError("receiver radius must be positive")
        if self.rx.behavior != ABSORBING:
            raise GeometryError("receiver must be absorbing")
        if not self.d > 0:
            raise GeometryError(f"surface distance must be positive, got {self.d}")
        gap = _dist(self.tx.center, self.rx.center) - self.tx.radius - self.rx.radius
        if not math.isclose(gap, self.d, rel_tol=1e-9, abs_tol=1e-9):
            raise GeometryError(f"body gap {gap} does not match d={self.d}")

    @property
    def center_distance(self) -> float:
        return _dist(self.tx.center, self.rx.center)

    @property
    def tx_is_sphere(self) -> bool:
        return self.tx.behavior == REFLECTING


def _dist(a, b) -> float:
    return math.sqrt((a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2 + (a[2] - b[2]) ** 2)


def sphere_volume(radius: float) -> float:
    if radius < 0:
        raise DomainError(f"radius must be non-negative, got {radius}")
    return 4.0 / 3.0 * math.pi * radius**3


def lens_volume(r1: float, r2: float, center_dist: float) -> float:
    """Volume of the intersection of two spheres.

    Disjoint (or externally tangent) spheres give 0 and a sphere fully
    inside the other gives the smaller sphere's volume.  A zero radius is
    accepted and yields 0.
    """
    if r1 < 0 or r2 < 0 or center_dist < 0:
        raise DomainError(f"lens_volume needs non-negative inputs, got {(r1, r2, center_dist)}")
    big, small = max(r1, r2), min(r1, r2)
    if small == 0 or center_dist >= big + small:
        return 0.0
    if center_dist <= big - small:
        return sphere_volume(small)
    d = center_dist
    # (r1 - r2)^2 / d stays below d here, so the division is safe for tiny d
    gap = big - small
    return math.pi * (big + small - d) ** 2 * (d + 2 * (big + small) - 3 * gap * (gap / d)) / 12


def overlap_volume(geom: ChannelGeometry) -> float:
    """Volume of the enzyme sphere occupied by the Tx and Rx bodies.

    For a region anchored on a body this reproduces the three regimes of the
    extended radius: only the anchor body inside, the anchor body plus a lens
    cut from the far body, and both bodies inside.  A point Tx has no volume.
    """
    enz = geom.enzyme
    if enz is None:
        return 0.0
    total = 0.0
    for body in (geom.rx, geom.tx):
        if body.radius > 0:
            total += lens_volume(enz.outer_radius, body.radius, _dist(enz.center, body.center))
    return total


def total_enzyme_volume(geom: ChannelGeometry) -> float:
    if geom.enzyme is None:
        raise GeometryError("geometry has no enzyme region")
    vol = sphere_volume(geom.enzyme.outer_radius) - overlap_volume(geom)
    if not vol > 0:
        raise GeometryError(f"non-positive enzyme volume {vol}")
    return vol


def contains(region, p) -> bool | np.ndarray:
    """True where ``p`` lies inside or on the surface of ``region``.

    ``p`` may be a single point or an ``(n, 3)`` array of points.
    """
    c = np.asarray(region.center, dtype=float)
    q = np.asarray(p, dtype=float) - c
    r2 = region.radius * region.radius
    inside = np.einsum("...i,...i->...", q, q) <= r2
    return bool(inside) if inside.ndim == 0 else inside


def channel_geometry(
    scenario: str,
    r_r: float,
    d: float,
    r_enz: float,
    everywhere_distance: Optional[float] = None,
    point_footprint: str = "surface",
) -> ChannelGeometry:
    """Lay out the Rx, Tx and enzyme sphere of a deployment scenario.

    The Rx is centred at the origin and the Tx on the +x axis with surface
    gap ``d``.  An anchored enzyme sphere extends ``r_enz`` beyond the surface
    of its anchor body, so a point Tx gets radius ``r_enz`` unless
    ``point_footprint="matched"``.  ``everywhere_distance`` is the longest
    Tx-Rx distance of the study; the "everywhere" sphere is four times that,
    centred on the Rx.
    """
    if scenario not in SCENARIOS:
        raise GeometryError(f"unknown scenario {scenario!r}")
    if point_footprint not in POINT_FOOTPRINTS:
        raise GeometryError(f"unknown point footprint {point_footprint!r}")
    tx_sphere, anchor = SCENARIOS[scenario]
    rx = SphereBody(ORIGIN, r_r, ABSORBING)
    if tx_sphere:
        tx = SphereBody(Point3(d + 2 * r_r, 0.0, 0.0), r_r, REFLECTING)
    else:
        tx = SphereBody(Point3(d + r_r, 0.0, 0.0), 0.0, PASSIVE_POINT)

    enzyme = None
    if anchor == EVERYWHERE:
        reach = d if everywhere_distance is None else everywhere_distance
        enzyme = EnzymeRegion(ORIGIN, EVERYWHERE_FACTOR * reach, EVERYWHERE)
    elif anchor is not None:
        if not r_enz > 0:
            raise GeometryError(f"extended enzyme radius must be positive, got {r_enz}")
        body = rx if anchor == AROUND_RX else tx
        base = r_r if (body.radius > 0 or point_footprint == "matched") else 0.0
        enzyme = EnzymeRegion(body.center, base + r_enz, anchor)
    return ChannelGeometry(tx=tx, rx=rx, enzyme=enzyme, d=d)


def reference_geometry(scenario: str, r_r: float, d: float, point_footprint: str = "surface") -> ChannelGeometry:
    """Geometry whose enzyme volume normalises the half-life of ``scenario``.

    Anchored scenarios use themselves at an extended radius of 1 um; the
    "everywhere" family borrows the around-Rx layout so that every scenario
    holds the same enzyme amount.
    """
    tx_sphere, anchor = SCENARIOS[scenario]
    if anchor is None:
        raise GeometryError(f"scenario {scenario} has no enzymes")
    if anchor == EVERYWHERE:
        scenario = "ST-ARx" if tx_sphere else "PT-ARx"
    return channel_geometry(scenario, r_r, d, 1.0, point_footprint=point_footprint)

