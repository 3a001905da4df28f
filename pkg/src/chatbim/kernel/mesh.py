"""Triangulated mesh export for the 3D viewer.

Each physical element becomes one group of triangles (prism of its solid).
Polygons and functional areas are non-physical and stay out of the mesh.
Vertex ordering is deterministic: footprint ring order, bottom then top.
"""

from __future__ import annotations

from . import geometry
from .geometry import Point
from .model import Model, PHYSICAL_CATEGORIES


def _ear_clip(vertices: tuple[Point, ...]) -> list[tuple[int, int, int]]:
    """Triangulate a simple polygon (no holes) by ear clipping.

    Expects a CCW ring; returns index triples into the input ring.
    """
    n = len(vertices)
    if n < 3:
        return []
    if n == 3:
        return [(0, 1, 2)]
    remaining = list(range(n))
    triangles: list[tuple[int, int, int]] = []

    def cross(o: Point, a: Point, b: Point) -> float:
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
        d1 = cross(a, b, p)
        d2 = cross(b, c, p)
        d3 = cross(c, a, p)
        has_neg = (d1 < 0) or (d2 < 0) or (d3 < 0)
        has_pos = (d1 > 0) or (d2 > 0) or (d3 > 0)
        return not (has_neg and has_pos)

    guard = 0
    while len(remaining) > 3 and guard < n * n:
        guard += 1
        clipped = False
        for k in range(len(remaining)):
            i_prev = remaining[k - 1]
            i_curr = remaining[k]
            i_next = remaining[(k + 1) % len(remaining)]
            a, b, c = vertices[i_prev], vertices[i_curr], vertices[i_next]
            if cross(a, b, c) <= 0:
                continue  # reflex corner, not an ear
            if any(
                point_in_triangle(vertices[j], a, b, c)
                for j in remaining
                if j not in (i_prev, i_curr, i_next)
            ):
                continue
            triangles.append((i_prev, i_curr, i_next))
            remaining.pop(k)
            clipped = True
            break
        if not clipped:
            # Degenerate ring; fall back to a fan to stay total.
            break
    if len(remaining) >= 3:
        anchor = remaining[0]
        for k in range(1, len(remaining) - 1):
            triangles.append((anchor, remaining[k], remaining[k + 1]))
    return triangles


def prism_mesh(footprint: tuple[Point, ...], z_min: float, z_max: float) -> tuple[list[float], list[int]]:
    """Positions (flat xyz list) and triangle indices for an extruded footprint."""
    ring = geometry.ensure_ccw(tuple(footprint))
    n = len(ring)
    positions: list[float] = []
    for x, y in ring:
        positions.extend((float(x), float(y), float(z_min)))
    for x, y in ring:
        positions.extend((float(x), float(y), float(z_max)))
    indices: list[int] = []
    caps = _ear_clip(ring)
    for a, b, c in caps:  # bottom cap faces downward
        indices.extend((a, c, b))
    for a, b, c in caps:  # top cap faces upward
        indices.extend((n + a, n + b, n + c))
    for i in range(n):  # side quads
        j = (i + 1) % n
        indices.extend((i, j, n + j))
        indices.extend((i, n + j, n + i))
    return positions, indices


def mesh_export(model: Model) -> dict:
    """Mesh document {elements: [{uuid, category, positions, indices}]}."""
    groups = []
    for uid, element in model.elements.items():
        if element.category not in PHYSICAL_CATEGORIES:
            continue
        solid = model.element_solid(uid)
        positions, indices = prism_mesh(solid.footprint, solid.z_min, solid.z_max)
        groups.append(
            {
                "uuid": uid,
                "category": element.category,
                "positions": positions,
                "indices": indices,
            }
        )
    return {"elements": groups}
