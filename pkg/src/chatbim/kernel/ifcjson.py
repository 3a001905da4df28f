"""IFC-lite JSON: a Site -> Building -> Storeys document for the Model.

The document is canonical: storeys sorted by (floor_index, name), elements
sorted by uuid, keys sorted on dump. serialize(deserialize(doc)) is therefore
a fixpoint, and deserialize(serialize(model)) structurally equals the model.
"""

from __future__ import annotations

import json
import re

from ..errors import SchemaViolation
from .model import (
    Door,
    FunctionalArea,
    Model,
    PitchedRoof,
    Polygon,
    Slab,
    StoryLayer,
    Wall,
    Window,
)

UUID_PATTERN = re.compile(r"^[0-9a-f]{8}-[0-9a-f]{4}-[0-9a-f]{4}-[0-9a-f]{4}-[0-9a-f]{12}$")

_CATEGORIES = ("wall", "door", "window", "slab", "roof", "polygon", "functional_area")


def _points(vertices) -> list[list[float]]:
    return [[x, y] for x, y in vertices]


def _element_record(model: Model, element) -> dict:
    record = {"uuid": element.id, "category": element.category, "description": element.description}
    if isinstance(element, Wall):
        record["geometry"] = {
            "start": list(element.start),
            "end": list(element.end),
            "thickness": element.thickness,
            "bottom_elevation": element.bottom_elevation,
            "top_elevation": element.top_elevation,
            "style": element.style,
            "openings": list(element.openings),
        }
    elif isinstance(element, (Door, Window)):
        record["geometry"] = {
            "host_wall": element.host_wall,
            "name": element.name,
            "elevation": element.elevation,
            "offset": element.offset,
            "width": element.width,
            "height": element.height,
        }
    elif isinstance(element, Polygon):
        record["geometry"] = {"vertices": _points(element.vertices)}
    elif isinstance(element, Slab):
        record["geometry"] = {
            "profile": _points(element.profile),
            "height": element.height,
            "thickness": element.thickness,
            "style": element.style,
        }
    elif isinstance(element, PitchedRoof):
        record["geometry"] = {
            "profile": _points(element.profile),
            "slope": element.slope,
            "eave_overhang": element.eave_overhang,
            "eave_height": element.eave_height,
            "roof_thickness": element.roof_thickness,
            "style": element.style,
        }
    elif isinstance(element, FunctionalArea):
        record["geometry"] = {"name": element.name, "boundary": _points(element.boundary)}
    return record


def model_serialize(model: Model) -> dict:
    storeys = []
    for layer in sorted(model.layers.values(), key=lambda l: (l.floor_index, l.name)):
        members = [e for e in model.elements.values() if e.layer == layer.id]
        storeys.append(
            {
                "uuid": layer.id,
                "name": layer.name,
                "elevation": layer.elevation,
                "floor_index": layer.floor_index,
                "elements": sorted(
                    (_element_record(model, e) for e in members), key=lambda r: r["uuid"]
                ),
            }
        )
    active = None
    if model.active_layer is not None:
        active = model.layer_by_id(model.active_layer).name
    return {
        "site": {
            "building": {
                "name": model.ref,
                "active_storey": active,
                "selection": sorted(model.selection),
                "storeys": storeys,
            }
        }
    }


def dumps_canonical(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1)


def _expect(container, key, kind, path: str):
    if not isinstance(container, dict) or key not in container:
        raise SchemaViolation(path, f"missing key {key!r}")
    value = container[key]
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise SchemaViolation(f"{path}.{key}", "expected a number")
        return value
    if not isinstance(value, kind):
        raise SchemaViolation(f"{path}.{key}", f"expected {kind.__name__}")
    return value


def _read_vertices(raw, path: str) -> tuple:
    if not isinstance(raw, list) or len(raw) < 3:
        raise SchemaViolation(path, "expected a list of at least 3 [x, y] pairs")
    pts = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaViolation(f"{path}[{i}]", "expected an [x, y] pair")
        pts.append((pair[0], pair[1]))
    return tuple(pts)


def model_deserialize(doc: dict) -> Model:
    site = _expect(doc, "site", dict, "$")
    building = _expect(site, "building", dict, "$.site")
    name = _expect(building, "name", str, "$.site.building")
    storeys = _expect(building, "storeys", list, "$.site.building")

    model = Model(ref=name)
    seen: set[str] = set()
    wall_openings: dict[str, list[str]] = {}
    pending: list[tuple[dict, str, str]] = []

    for si, storey in enumerate(storeys):
        spath = f"$.site.building.storeys[{si}]"
        layer = StoryLayer(
            id=_expect(storey, "uuid", str, spath),
            name=_expect(storey, "name", str, spath),
            elevation=float(_expect(storey, "elevation", float, spath)),
            floor_index=int(_expect(storey, "floor_index", float, spath)),
        )
        if layer.name in model.layers:
            raise SchemaViolation(f"{spath}.name", f"duplicate storey name {layer.name!r}")
        if layer.id in seen:
            raise SchemaViolation(f"{spath}.uuid", "duplicate uuid")
        seen.add(layer.id)
        model.layers[layer.name] = layer
        for ei, record in enumerate(_expect(storey, "elements", list, spath)):
            epath = f"{spath}.elements[{ei}]"
            pending.append((record, layer.id, epath))

    for record, layer_id, epath in pending:
        uid = _expect(record, "uuid", str, epath)
        if uid in seen:
            raise SchemaViolation(f"{epath}.uuid", f"duplicate uuid {uid}")
        seen.add(uid)
        category = _expect(record, "category", str, epath)
        if category not in _CATEGORIES:
            raise SchemaViolation(f"{epath}.category", f"unknown category {category!r}")
        description = _expect(record, "description", str, epath)
        geom = _expect(record, "geometry", dict, epath)
        gpath = f"{epath}.geometry"
        if category == "wall":
            start = tuple(_expect(geom, "start", list, gpath))
            end = tuple(_expect(geom, "end", list, gpath))
            if len(start) != 2 or len(end) != 2:
                raise SchemaViolation(gpath, "wall start/end must be [x, y] pairs")
            if start == end:
                raise SchemaViolation(gpath, "wall start and end coincide")
            top = _expect(geom, "top_elevation", float, gpath)
            bottom = _expect(geom, "bottom_elevation", float, gpath)
            if top <= bottom:
                raise SchemaViolation(f"{gpath}.top_elevation", "top must exceed bottom")
            wall = Wall(
                id=uid,
                layer=layer_id,
                start=(start[0], start[1]),
                end=(end[0], end[1]),
                thickness=_expect(geom, "thickness", float, gpath),
                bottom_elevation=bottom,
                top_elevation=top,
                style=_expect(geom, "style", str, gpath),
                openings=[],
                description=description,
            )
            model.elements[uid] = wall
            wall_openings[uid] = list(_expect(geom, "openings", list, gpath))
        elif category in ("door", "window"):
            cls = Door if category == "door" else Window
            model.elements[uid] = cls(
                id=uid,
                layer=layer_id,
                host_wall=_expect(geom, "host_wall", str, gpath),
                name=_expect(geom, "name", str, gpath),
                elevation=_expect(geom, "elevation", float, gpath),
                offset=_expect(geom, "offset", float, gpath),
                width=_expect(geom, "width", float, gpath),
                height=_expect(geom, "height", float, gpath),
                description=description,
            )
        elif category == "polygon":
            model.elements[uid] = Polygon(
                id=uid,
                layer=layer_id,
                vertices=_read_vertices(geom.get("vertices"), f"{gpath}.vertices"),
                description=description,
            )
        elif category == "slab":
            model.elements[uid] = Slab(
                id=uid,
                layer=layer_id,
                profile=_read_vertices(geom.get("profile"), f"{gpath}.profile"),
                height=_expect(geom, "height", float, gpath),
                thickness=_expect(geom, "thickness", float, gpath),
                style=_expect(geom, "style", str, gpath),
                description=description,
            )
        elif category == "roof":
            model.elements[uid] = PitchedRoof(
                id=uid,
                layer=layer_id,
                profile=_read_vertices(geom.get("profile"), f"{gpath}.profile"),
                slope=_expect(geom, "slope", float, gpath),
                eave_overhang=_expect(geom, "eave_overhang", float, gpath),
                eave_height=_expect(geom, "eave_height", float, gpath),
                roof_thickness=_expect(geom, "roof_thickness", float, gpath),
                style=_expect(geom, "style", str, gpath),
                description=description,
            )
        elif category == "functional_area":
            model.elements[uid] = FunctionalArea(
                id=uid,
                layer=layer_id,
                name=_expect(geom, "name", str, gpath),
                boundary=_read_vertices(geom.get("boundary"), f"{gpath}.boundary"),
                description=description,
            )

    # Cross-reference checks after all elements exist.
    for record, _, epath in pending:
        uid = record["uuid"]
        element = model.elements[uid]
        if isinstance(element, (Door, Window)):
            host = model.elements.get(element.host_wall)
            if not isinstance(host, Wall):
                raise SchemaViolation(f"{epath}.geometry.host_wall", f"dangling wall reference {element.host_wall}")
    for wall_id, opening_ids in wall_openings.items():
        wall = model.elements[wall_id]
        assert isinstance(wall, Wall)
        for oid in opening_ids:
            opening = model.elements.get(oid)
            if not isinstance(opening, (Door, Window)) or opening.host_wall != wall_id:
                raise SchemaViolation(
                    f"$.site.building (wall {wall_id})", f"opening list entry {oid} does not resolve"
                )
        wall.openings = opening_ids

    active = building.get("active_storey")
    if active is not None:
        if not any(layer.name == active for layer in model.layers.values()):
            raise SchemaViolation("$.site.building.active_storey", f"dangling layer reference {active!r}")
        model.active_layer = model.layers[active].id
    for uid in building.get("selection", []):
        if uid not in model.elements:
            raise SchemaViolation("$.site.building.selection", f"dangling element reference {uid}")
        model.selection.add(uid)
    return model
