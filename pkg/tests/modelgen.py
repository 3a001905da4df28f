"""Seeded random model generator for oracle and round-trip tests."""

from __future__ import annotations

import random

from chatbim.kernel.model import Model

WORLD = 8000.0  # generated footprints stay inside this square (mm)


def _rand_point(rng: random.Random, margin: float = 500.0) -> tuple[float, float]:
    return (
        round(rng.uniform(margin, WORLD - margin), 1),
        round(rng.uniform(margin, WORLD - margin), 1),
    )


def _rect(rng: random.Random, min_side: float, max_side: float) -> list[tuple[float, float]]:
    x0, y0 = _rand_point(rng)
    w = rng.uniform(min_side, max_side)
    h = rng.uniform(min_side, max_side)
    return [(x0, y0), (x0 + w, y0), (x0 + w, y0 + h), (x0, y0 + h)]


def _lshape(rng: random.Random) -> list[tuple[float, float]]:
    x0, y0 = _rand_point(rng, margin=1500.0)
    w = rng.uniform(1200, 2400)
    h = rng.uniform(1200, 2400)
    cut_w = w * rng.uniform(0.3, 0.6)
    cut_h = h * rng.uniform(0.3, 0.6)
    return [
        (x0, y0),
        (x0 + w, y0),
        (x0 + w, y0 + h - cut_h),
        (x0 + w - cut_w, y0 + h - cut_h),
        (x0 + w - cut_w, y0 + h),
        (x0, y0 + h),
    ]


def random_model(seed: int, max_elements: int = 12) -> Model:
    """A small random building-ish model. Some seeds plant exact duplicates
    and overlapping members on purpose so clash and duplicate rules fire."""
    rng = random.Random(seed)
    model = Model(seed=seed)
    layer = model.add_layer("Ground Floor", 0.0, 1)
    budget = rng.randint(3, max_elements)

    walls: list[str] = []
    while len(model.elements) < budget:
        kind = rng.choice(["wall", "wall", "slab", "roofless_slab", "roof", "opening", "dup", "area"])
        remaining = budget - len(model.elements)
        if kind == "wall":
            start = _rand_point(rng)
            angle = rng.choice([0, 90, 45, 30])
            length = rng.uniform(1000, 3500)
            import math

            end = (
                start[0] + length * math.cos(math.radians(angle)),
                start[1] + length * math.sin(math.radians(angle)),
            )
            wall = model.create_wall(start, end, layer.id)
            wall.thickness = rng.choice([100.0, 200.0, 300.0])
            if rng.random() < 0.3:
                wall.bottom_elevation = rng.choice([0.0, 500.0])
                wall.top_elevation = wall.bottom_elevation + rng.uniform(2000, 3500)
            walls.append(wall.id)
        elif kind in ("slab", "roofless_slab") and remaining >= 2:
            profile = _lshape(rng) if rng.random() < 0.3 else _rect(rng, 1200, 3200)
            poly = model.create_polygon(profile, layer.id)
            slab = model.create_slab(poly.id, layer.id)
            slab.height = rng.choice([0.0, 250.0, 3000.0])
            slab.thickness = rng.choice([200.0, 250.0])
        elif kind == "roof" and remaining >= 2:
            poly = model.create_polygon(_rect(rng, 1500, 3000), layer.id)
            model.create_roof(poly.id, layer.id, rng.uniform(10, 40), rng.uniform(0, 600), rng.uniform(2500, 3500), 250.0)
        elif kind == "opening" and walls:
            host = model.get(rng.choice(walls))
            offset = rng.uniform(300, max(host.length - 300, 301))
            if rng.random() < 0.5:
                model.create_opening("door", host.id, 0.0, offset, "D")
            else:
                model.create_opening("window", host.id, 1000.0, offset, "W")
        elif kind == "dup" and model.elements and rng.random() < 0.7:
            candidates = [e for e in model.elements.values() if e.category in ("wall", "slab", "roof")]
            if candidates:
                source = rng.choice(candidates)
                model.duplicate(source.id, layer.id, 1)
        elif kind == "area":
            model.create_functional_area(_rect(rng, 1000, 2500), f"Area {len(model.elements)}", layer.id)
    return model
