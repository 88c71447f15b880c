"""Contour paths around sectors: rays, circular arcs and vertical chords."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError


class Variant(str, enum.Enum):
    SECTOR_BOUNDARY = "SectorBoundary"
    BALL_UNION_SECTOR = "BallUnionSector"
    BALL_COMPLEMENT_SECTOR = "BallComplementSector"
    CHORD_KEYHOLE = "ChordKeyhole"


@dataclass(frozen=True)
class Ray:
    """Points rho e^{i angle}, traversed from ``r_from`` to ``r_to`` (either may be 0 or inf)."""

    angle: float
    r_from: float
    r_to: float

    @property
    def outward(self) -> bool:
        return self.r_to > self.r_from

    def start(self) -> complex:
        return self.r_from * np.exp(1j * self.angle)

    def end(self) -> complex:
        return self.r_to * np.exp(1j * self.angle)


@dataclass(frozen=True)
class Arc:
    radius: float
    from_angle: float
    to_angle: float

    def start(self) -> complex:
        return self.radius * np.exp(1j * self.from_angle)

    def end(self) -> complex:
        return self.radius * np.exp(1j * self.to_angle)


@dataclass(frozen=True)
class Chord:
    start_point: complex
    end_point: complex

    def start(self) -> complex:
        return self.start_point

    def end(self) -> complex:
        return self.end_point


Segment = Ray | Arc | Chord


@dataclass(frozen=True)
class ContourPath:
    """Positively oriented path: the enclosed region lies to the left."""

    segments: tuple
    variant: Variant
    delta: float
    r: float

    def __post_init__(self):
        for a, b in zip(self.segments, self.segments[1:]):
            pa, pb = a.end(), b.start()
            if not (np.isfinite(pa) and np.isfinite(pb)) or abs(pa - pb) > 1e-12 * max(1.0, abs(pa)):
                raise DomainError("consecutive path segments must share endpoints")

    def rays(self) -> list[Ray]:
        return [s for s in self.segments if isinstance(s, Ray)]

    def length_bounded(self) -> float:
        """Length of the bounded (non-ray) part."""
        total = 0.0
        for s in self.segments:
            if isinstance(s, Arc):
                total += s.radius * abs(s.to_angle - s.from_angle)
            elif isinstance(s, Chord):
                total += abs(s.end_point - s.start_point)
        return total


def build_keyhole_path(delta_prime: float, r: float = 1.0, variant=Variant.SECTOR_BOUNDARY) -> ContourPath:
    """Boundary of a sector, possibly modified near the origin.

    ``SectorBoundary`` is the boundary of the sector of half-angle
    ``delta_prime``; the ball variants replace the part inside radius ``r`` by
    the arc through the left half-plane (union) or the arc through the
    positive axis (complement); ``ChordKeyhole`` closes with a vertical chord.
    """
    variant = Variant(variant)
    d = float(delta_prime)
    if not 0.0 < d < math.pi / 2:
        raise DomainError(f"delta_prime must lie in (0, pi/2), got {d!r}")
    if variant is Variant.SECTOR_BOUNDARY:
        segs = (Ray(d, math.inf, 0.0), Ray(-d, 0.0, math.inf))
        return ContourPath(segs, variant, d, 0.0)
    if not r > 0:
        raise DomainError("ball and chord variants need r > 0")
    upper, lower = Ray(d, math.inf, r), Ray(-d, r, math.inf)
    if variant is Variant.BALL_UNION_SECTOR:
        middle = Arc(r, d, 2.0 * math.pi - d)
    elif variant is Variant.BALL_COMPLEMENT_SECTOR:
        middle = Arc(r, d, -d)
    else:
        middle = Chord(r * np.exp(1j * d), r * np.exp(-1j * d))
    # the arc through the left half-plane ends at angle 2pi - d, i.e. at r e^{-i d}
    return ContourPath((upper, middle, lower), variant, d, float(r))
