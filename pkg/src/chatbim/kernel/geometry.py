"""2D footprint math for the 2.5D prism geometry used throughout the kernel.

Every element is reduced to a footprint polygon (millimeters, world XY) plus
a vertical interval. That is enough for clash checks, support checks and the
mesh the viewer consumes; no b-rep solids are kept.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from shapely.geometry import Polygon as _ShapelyPolygon

Point = tuple[float, float]

GEOMETRY_TOLERANCE_MM = 1e-6


def points_close(a: Point, b: Point, tol: float = GEOMETRY_TOLERANCE_MM) -> bool:
    return abs(a[0] - b[0]) <= tol and abs(a[1] - b[1]) <= tol


def signed_area(vertices: list[Point] | tuple[Point, ...]) -> float:
    """Shoelace area; positive for counter-clockwise rings."""
    total = 0.0
    n = len(vertices)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total / 2.0


def polygon_area(vertices: list[Point] | tuple[Point, ...]) -> float:
    return abs(signed_area(vertices))


def ensure_ccw(vertices: tuple[Point, ...]) -> tuple[Point, ...]:
    if signed_area(vertices) < 0:
        return tuple(reversed(vertices))
    return vertices


def centroid(vertices: tuple[Point, ...]) -> Point:
    """Area centroid of a simple polygon; falls back to the vertex mean for
    degenerate (zero-area) rings."""
    a = signed_area(vertices)
    if abs(a) < GEOMETRY_TOLERANCE_MM:
        n = len(vertices)
        return (sum(p[0] for p in vertices) / n, sum(p[1] for p in vertices) / n)
    cx = cy = 0.0
    n = len(vertices)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        cross = x0 * y1 - x1 * y0
        cx += (x0 + x1) * cross
        cy += (y0 + y1) * cross
    return (cx / (6.0 * a), cy / (6.0 * a))


def rotate_point(p: Point, angle_deg: float, center: Point) -> Point:
    rad = math.radians(angle_deg)
    c, s = math.cos(rad), math.sin(rad)
    dx, dy = p[0] - center[0], p[1] - center[1]
    return (center[0] + dx * c - dy * s, center[1] + dx * s + dy * c)


def translate(vertices: tuple[Point, ...], dx: float, dy: float) -> tuple[Point, ...]:
    return tuple((x + dx, y + dy) for x, y in vertices)


def bounding_box(vertices: tuple[Point, ...]) -> tuple[float, float, float, float]:
    xs = [p[0] for p in vertices]
    ys = [p[1] for p in vertices]
    return (min(xs), min(ys), max(xs), max(ys))


def wall_footprint(start: Point, end: Point, thickness: float) -> tuple[Point, ...]:
    """Thickness-wide rectangle about the centerline from start to end."""
    dx, dy = end[0] - start[0], end[1] - start[1]
    length = math.hypot(dx, dy)
    if length <= 0:
        raise ValueError("wall start and end coincide")
    nx, ny = -dy / length * thickness / 2.0, dx / length * thickness / 2.0
    return (
        (start[0] + nx, start[1] + ny),
        (end[0] + nx, end[1] + ny),
        (end[0] - nx, end[1] - ny),
        (start[0] - nx, start[1] - ny),
    )


def opening_footprint(
    start: Point, end: Point, wall_thickness: float, offset: float, width: float
) -> tuple[Point, ...]:
    """Box footprint of a door/window centered at `offset` along the wall
    centerline, extending the full wall thickness across it."""
    dx, dy = end[0] - start[0], end[1] - start[1]
    length = math.hypot(dx, dy)
    if length <= 0:
        raise ValueError("host wall is degenerate")
    ux, uy = dx / length, dy / length
    lo = offset - width / 2.0
    hi = offset + width / 2.0
    a = (start[0] + ux * lo, start[1] + uy * lo)
    b = (start[0] + ux * hi, start[1] + uy * hi)
    return wall_footprint(a, b, wall_thickness)


def to_shapely(vertices: tuple[Point, ...]) -> _ShapelyPolygon:
    return _ShapelyPolygon(vertices)


def offset_polygon(vertices: tuple[Point, ...], distance: float) -> tuple[Point, ...]:
    """Outward offset (mitre joins) of a footprint, used for roof eaves."""
    if distance == 0:
        return tuple(vertices)
    poly = to_shapely(ensure_ccw(tuple(vertices)))
    grown = poly.buffer(distance, join_style="mitre", mitre_limit=10.0)
    ring = list(grown.exterior.coords)[:-1]
    return tuple((float(x), float(y)) for x, y in ring)


def overlap_area(a: tuple[Point, ...], b: tuple[Point, ...]) -> float:
    """Area of the 2D intersection of two footprints (handles concave rings)."""
    pa, pb = to_shapely(a), to_shapely(b)
    if not pa.is_valid:
        pa = pa.buffer(0)
    if not pb.is_valid:
        pb = pb.buffer(0)
    return float(pa.intersection(pb).area)


@dataclass(frozen=True)
class Solid:
    """A 2.5D prism: footprint polygon plus absolute z interval (mm)."""

    footprint: tuple[Point, ...]
    z_min: float
    z_max: float

    def __post_init__(self) -> None:
        if self.z_max <= self.z_min:
            raise ValueError("solid z_max must exceed z_min")
        if polygon_area(self.footprint) <= 0:
            raise ValueError("solid footprint has no area")

    def z_overlap(self, other: "Solid") -> float:
        return min(self.z_max, other.z_max) - max(self.z_min, other.z_min)
