"""In-memory building model: story layers, elements and their prism solids.

Coordinates are millimeters everywhere. Wall start/end points describe the
centerline. Element ids are version-4-shaped UUIDs drawn from a per-model
seeded generator so that identical construction sequences produce identical
models (needed for replayable fixtures and byte-stable exports).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from ..errors import InvalidArgument, UnknownElement
from . import geometry
from .geometry import Point, Solid

WALL_STYLES = ("Concrete Wall", "Wood Wall", "Brick Wall")
ROOF_STYLES = ("Low Slope Concrete w/ Rigid Insulation", "Sloped Wood Struct Insul Flat Clay Tile")
UNSTYLED = "Unstyled"

DEFAULT_WALL_THICKNESS = 200.0
DEFAULT_WALL_BOTTOM = 0.0
DEFAULT_WALL_TOP = 3000.0
DEFAULT_SLAB_THICKNESS = 250.0
DEFAULT_DOOR_WIDTH = 900.0
DEFAULT_DOOR_HEIGHT = 2100.0
DEFAULT_WINDOW_WIDTH = 1200.0
DEFAULT_WINDOW_HEIGHT = 1400.0

MIN_ROOF_SLOPE_DEG = 5.0

CATEGORY_WALL = "wall"
CATEGORY_DOOR = "door"
CATEGORY_WINDOW = "window"
CATEGORY_SLAB = "slab"
CATEGORY_ROOF = "roof"
CATEGORY_POLYGON = "polygon"
CATEGORY_FUNCTIONAL_AREA = "functional_area"

# Categories with a physical body; polygons are construction scaffolds and
# functional areas are conceptual regions.
PHYSICAL_CATEGORIES = (CATEGORY_WALL, CATEGORY_DOOR, CATEGORY_WINDOW, CATEGORY_SLAB, CATEGORY_ROOF)


@dataclass
class StoryLayer:
    id: str
    name: str
    elevation: float
    floor_index: int


@dataclass
class Wall:
    id: str
    layer: str
    start: Point
    end: Point
    thickness: float = DEFAULT_WALL_THICKNESS
    bottom_elevation: float = DEFAULT_WALL_BOTTOM
    top_elevation: float = DEFAULT_WALL_TOP
    style: str = UNSTYLED
    openings: list[str] = field(default_factory=list)
    description: str = ""

    category = CATEGORY_WALL

    @property
    def length(self) -> float:
        return math.hypot(self.end[0] - self.start[0], self.end[1] - self.start[1])


@dataclass
class Door:
    id: str
    layer: str
    host_wall: str
    name: str
    elevation: float
    offset: float
    width: float = DEFAULT_DOOR_WIDTH
    height: float = DEFAULT_DOOR_HEIGHT
    description: str = ""

    category = CATEGORY_DOOR


@dataclass
class Window:
    id: str
    layer: str
    host_wall: str
    name: str
    elevation: float
    offset: float
    width: float = DEFAULT_WINDOW_WIDTH
    height: float = DEFAULT_WINDOW_HEIGHT
    description: str = ""

    category = CATEGORY_WINDOW


@dataclass
class Polygon:
    id: str
    layer: str
    vertices: tuple[Point, ...]
    description: str = ""

    category = CATEGORY_POLYGON


@dataclass
class Slab:
    id: str
    layer: str
    profile: tuple[Point, ...]
    height: float = 0.0
    thickness: float = DEFAULT_SLAB_THICKNESS
    style: str = UNSTYLED
    description: str = ""

    category = CATEGORY_SLAB


@dataclass
class PitchedRoof:
    id: str
    layer: str
    profile: tuple[Point, ...]
    slope: float
    eave_overhang: float
    eave_height: float
    roof_thickness: float
    style: str = UNSTYLED
    description: str = ""

    category = CATEGORY_ROOF


@dataclass
class FunctionalArea:
    id: str
    layer: str
    name: str
    boundary: tuple[Point, ...]
    description: str = ""

    category = CATEGORY_FUNCTIONAL_AREA


Element = Wall | Door | Window | Polygon | Slab | PitchedRoof | FunctionalArea
OPENING_CATEGORIES = (CATEGORY_DOOR, CATEGORY_WINDOW)


def _normalize_vertices(vertices) -> tuple[Point, ...]:
    try:
        pts = tuple((float(x), float(y)) for x, y in vertices)
    except (TypeError, ValueError) as exc:
        raise InvalidArgument(f"vertices must be 2D coordinate pairs: {exc}") from None
    if len(pts) < 3:
        raise InvalidArgument("a polygon needs at least 3 vertices")
    # Drop an explicit closing vertex so rings are stored open.
    if len(pts) > 3 and geometry.points_close(pts[0], pts[-1]):
        pts = pts[:-1]
    if geometry.polygon_area(pts) <= 0:
        raise InvalidArgument("polygon is degenerate (zero area)")
    return pts


def _normalize_point(pt) -> Point:
    try:
        x, y = pt
        return (float(x), float(y))
    except (TypeError, ValueError) as exc:
        raise InvalidArgument(f"expected a 2D coordinate pair: {exc}") from None


class Model:
    """Element registry plus story layers and the active-layer pointer.

    Single-writer: one session mutates one model; read-only snapshots may be
    shared. The `seed` fixes the element-id stream for reproducible runs.
    """

    def __init__(self, seed: int = 0, ref: str | None = None):
        self._rng = random.Random(seed)
        self.layers: dict[str, StoryLayer] = {}
        self.elements: dict[str, Element] = {}
        self.active_layer: str | None = None
        self.selection: set[str] = set()
        self.ref = ref if ref is not None else f"prompt_{self._draw_uuid()}"

    # -- identity ----------------------------------------------------------

    def _draw_uuid(self) -> str:
        raw = bytearray(self._rng.getrandbits(8) for _ in range(16))
        raw[6] = (raw[6] & 0x0F) | 0x40  # version 4
        raw[8] = (raw[8] & 0x3F) | 0x80  # RFC 4122 variant
        h = raw.hex()
        return f"{h[0:8]}-{h[8:12]}-{h[12:16]}-{h[16:20]}-{h[20:32]}"

    def new_id(self) -> str:
        uid = self._draw_uuid()
        while uid in self.elements or uid in (layer.id for layer in self.layers.values()):
            uid = self._draw_uuid()
        return uid

    # -- layers ------------------------------------------------------------

    def add_layer(self, name: str, elevation: float, floor_index: int) -> StoryLayer:
        from ..errors import DuplicateLayerName

        if name in self.layers:
            raise DuplicateLayerName(name)
        if floor_index < 1:
            raise InvalidArgument("floor_index must be >= 1")
        if not math.isfinite(float(elevation)):
            raise InvalidArgument("layer elevation must be finite")
        layer = StoryLayer(id=self.new_id(), name=name, elevation=float(elevation), floor_index=int(floor_index))
        self.layers[name] = layer
        self.active_layer = layer.id
        return layer

    def layer_by_id(self, layer_id: str) -> StoryLayer:
        for layer in self.layers.values():
            if layer.id == layer_id:
                return layer
        raise UnknownElement(layer_id)

    def layer_by_name(self, name: str) -> StoryLayer:
        from ..errors import UnknownLayer

        if name not in self.layers:
            raise UnknownLayer(name)
        return self.layers[name]

    def is_layer_id(self, uid: str) -> bool:
        return any(layer.id == uid for layer in self.layers.values())

    def require_layer(self, layer_id: str) -> StoryLayer:
        try:
            return self.layer_by_id(layer_id)
        except UnknownElement:
            raise UnknownElement(layer_id) from None

    # -- elements ----------------------------------------------------------

    def add_element(self, element: Element) -> Element:
        self.elements[element.id] = element
        if not element.description:
            element.description = element.id
        return element

    def get(self, uid: str) -> Element:
        try:
            return self.elements[uid]
        except KeyError:
            raise UnknownElement(uid) from None

    def by_category(self, category: str) -> list[Element]:
        return [e for e in self.elements.values() if e.category == category]

    def delete(self, uids: list[str]) -> int:
        """Remove elements and any openings they host. Returns the count of
        removed elements. Never leaves dangling host_wall references."""
        doomed: set[str] = set()
        for uid in uids:
            element = self.get(uid)
            doomed.add(uid)
            if isinstance(element, Wall):
                doomed.update(element.openings)
        for uid in doomed:
            element = self.elements.pop(uid)
            self.selection.discard(uid)
            if isinstance(element, (Door, Window)) and element.host_wall in self.elements:
                host = self.elements[element.host_wall]
                if isinstance(host, Wall) and uid in host.openings:
                    host.openings.remove(uid)
        return len(doomed)

    # -- construction helpers (used by the toolset) -------------------------

    def create_wall(self, start, end, layer_id: str) -> Wall:
        layer = self.require_layer(layer_id)
        p0, p1 = _normalize_point(start), _normalize_point(end)
        if geometry.points_close(p0, p1):
            raise InvalidArgument("wall start and end points must differ")
        wall = Wall(id=self.new_id(), layer=layer.id, start=p0, end=p1)
        return self.add_element(wall)

    def create_opening(self, kind: str, wall_id: str, elevation: float, offset: float, name: str) -> Door | Window:
        wall = self.get(wall_id)
        if not isinstance(wall, Wall):
            raise InvalidArgument(f"{wall_id} is not a wall")
        cls = Door if kind == CATEGORY_DOOR else Window
        opening = cls(
            id=self.new_id(),
            layer=wall.layer,
            host_wall=wall.id,
            name=str(name),
            elevation=float(elevation),
            offset=float(offset),
        )
        self.add_element(opening)
        wall.openings.append(opening.id)
        return opening

    def create_polygon(self, vertices, layer_id: str) -> Polygon:
        layer = self.require_layer(layer_id)
        poly = Polygon(id=self.new_id(), layer=layer.id, vertices=_normalize_vertices(vertices))
        return self.add_element(poly)

    def create_slab(self, profile_id: str, layer_id: str) -> Slab:
        layer = self.require_layer(layer_id)
        profile = self.get(profile_id)
        if not isinstance(profile, Polygon):
            raise InvalidArgument(f"{profile_id} is not a polygon profile")
        slab = Slab(id=self.new_id(), layer=layer.id, profile=tuple(profile.vertices))
        return self.add_element(slab)

    def create_roof(
        self,
        profile_id: str,
        layer_id: str,
        slope: float,
        eave_overhang: float,
        eave_height: float,
        roof_thickness: float,
    ) -> PitchedRoof:
        layer = self.require_layer(layer_id)
        profile = self.get(profile_id)
        if not isinstance(profile, Polygon):
            raise InvalidArgument(f"{profile_id} is not a polygon profile")
        if float(slope) < MIN_ROOF_SLOPE_DEG:
            raise InvalidArgument(f"roof slope cannot be less than {MIN_ROOF_SLOPE_DEG} degrees")
        if float(eave_overhang) < 0:
            raise InvalidArgument("eave_overhang must be >= 0")
        if float(roof_thickness) <= 0:
            raise InvalidArgument("roof_thickness must be > 0")
        roof = PitchedRoof(
            id=self.new_id(),
            layer=layer.id,
            profile=tuple(profile.vertices),
            slope=float(slope),
            eave_overhang=float(eave_overhang),
            eave_height=float(eave_height),
            roof_thickness=float(roof_thickness),
        )
        return self.add_element(roof)

    def create_functional_area(self, vertices, name: str, layer_id: str) -> FunctionalArea:
        layer = self.require_layer(layer_id)
        area = FunctionalArea(
            id=self.new_id(), layer=layer.id, name=str(name), boundary=_normalize_vertices(vertices)
        )
        return self.add_element(area)

    def duplicate(self, element_id: str, layer_id: str, copies: int) -> list[str]:
        if self.is_layer_id(element_id):
            raise InvalidArgument("story layers cannot be duplicated")
        if copies < 1:
            raise InvalidArgument("number of copies must be >= 1")
        source = self.get(element_id)
        target = self.require_layer(layer_id)
        made: list[str] = []
        for _ in range(copies):
            made.append(self._duplicate_one(source, target))
        return made

    def _duplicate_one(self, source: Element, target: StoryLayer) -> str:
        if isinstance(source, Wall):
            copy = Wall(
                id=self.new_id(),
                layer=target.id,
                start=source.start,
                end=source.end,
                thickness=source.thickness,
                bottom_elevation=source.bottom_elevation,
                top_elevation=source.top_elevation,
                style=source.style,
            )
            self.add_element(copy)
            for opening_id in source.openings:
                opening = self.get(opening_id)
                assert isinstance(opening, (Door, Window))
                dup = type(opening)(
                    id=self.new_id(),
                    layer=target.id,
                    host_wall=copy.id,
                    name=opening.name,
                    elevation=opening.elevation,
                    offset=opening.offset,
                    width=opening.width,
                    height=opening.height,
                )
                self.add_element(dup)
                copy.openings.append(dup.id)
            return copy.id
        if isinstance(source, (Door, Window)):
            # An opening copy stays embedded in its host wall; the wall owns
            # the layer, so the target layer argument is ignored here.
            host = self.get(source.host_wall)
            assert isinstance(host, Wall)
            dup = type(source)(
                id=self.new_id(),
                layer=host.layer,
                host_wall=host.id,
                name=source.name,
                elevation=source.elevation,
                offset=source.offset,
                width=source.width,
                height=source.height,
            )
            self.add_element(dup)
            host.openings.append(dup.id)
            return dup.id
        if isinstance(source, Polygon):
            copy = Polygon(id=self.new_id(), layer=target.id, vertices=source.vertices)
        elif isinstance(source, Slab):
            copy = Slab(
                id=self.new_id(),
                layer=target.id,
                profile=source.profile,
                height=source.height,
                thickness=source.thickness,
                style=source.style,
            )
        elif isinstance(source, PitchedRoof):
            copy = PitchedRoof(
                id=self.new_id(),
                layer=target.id,
                profile=source.profile,
                slope=source.slope,
                eave_overhang=source.eave_overhang,
                eave_height=source.eave_height,
                roof_thickness=source.roof_thickness,
                style=source.style,
            )
        elif isinstance(source, FunctionalArea):
            copy = FunctionalArea(id=self.new_id(), layer=target.id, name=source.name, boundary=source.boundary)
        else:  # pragma: no cover - exhaustive over Element
            raise InvalidArgument(f"cannot duplicate {source.category}")
        self.add_element(copy)
        return copy.id

    def move(self, uid: str, dx: float, dy: float, dz: float) -> None:
        element = self.get(uid)
        dx, dy, dz = float(dx), float(dy), float(dz)
        if isinstance(element, Wall):
            element.start = (element.start[0] + dx, element.start[1] + dy)
            element.end = (element.end[0] + dx, element.end[1] + dy)
            element.bottom_elevation += dz
            element.top_elevation += dz
        elif isinstance(element, (Door, Window)):
            # Sliding an opening moves it along its host wall's axis.
            host = self.get(element.host_wall)
            assert isinstance(host, Wall)
            ux = (host.end[0] - host.start[0]) / host.length
            uy = (host.end[1] - host.start[1]) / host.length
            element.offset += dx * ux + dy * uy
            element.elevation += dz
        elif isinstance(element, Polygon):
            element.vertices = geometry.translate(element.vertices, dx, dy)
        elif isinstance(element, Slab):
            element.profile = geometry.translate(element.profile, dx, dy)
            element.height += dz
        elif isinstance(element, PitchedRoof):
            element.profile = geometry.translate(element.profile, dx, dy)
            element.eave_height += dz
        elif isinstance(element, FunctionalArea):
            element.boundary = geometry.translate(element.boundary, dx, dy)

    def rotate(self, uid: str, angle: float, center=None) -> None:
        element = self.get(uid)
        angle = float(angle)
        pivot = _normalize_point(center) if center is not None else self.footprint_center(uid)
        if isinstance(element, Wall):
            element.start = geometry.rotate_point(element.start, angle, pivot)
            element.end = geometry.rotate_point(element.end, angle, pivot)
        elif isinstance(element, (Door, Window)):
            pass  # openings ride with their wall; rotating one alone is a no-op
        elif isinstance(element, Polygon):
            element.vertices = tuple(geometry.rotate_point(p, angle, pivot) for p in element.vertices)
        elif isinstance(element, Slab):
            element.profile = tuple(geometry.rotate_point(p, angle, pivot) for p in element.profile)
        elif isinstance(element, PitchedRoof):
            element.profile = tuple(geometry.rotate_point(p, angle, pivot) for p in element.profile)
        elif isinstance(element, FunctionalArea):
            element.boundary = tuple(geometry.rotate_point(p, angle, pivot) for p in element.boundary)

    def footprint_center(self, uid: str) -> Point:
        element = self.get(uid)
        if isinstance(element, Wall):
            return (
                (element.start[0] + element.end[0]) / 2.0,
                (element.start[1] + element.end[1]) / 2.0,
            )
        return geometry.centroid(self.footprint(uid))

    # -- geometry ------------------------------------------------------------

    def footprint(self, uid: str) -> tuple[Point, ...]:
        element = self.get(uid)
        if isinstance(element, Wall):
            return geometry.wall_footprint(element.start, element.end, element.thickness)
        if isinstance(element, (Door, Window)):
            host = self.get(element.host_wall)
            assert isinstance(host, Wall)
            return geometry.opening_footprint(
                host.start, host.end, host.thickness, element.offset, element.width
            )
        if isinstance(element, Polygon):
            return element.vertices
        if isinstance(element, Slab):
            return element.profile
        if isinstance(element, PitchedRoof):
            return geometry.offset_polygon(element.profile, element.eave_overhang)
        if isinstance(element, FunctionalArea):
            return element.boundary
        raise UnknownElement(uid)  # pragma: no cover

    def roof_rise(self, roof: PitchedRoof) -> float:
        """Ridge rise above the eave: tan(slope) times half the shorter side
        of the profile's axis-aligned bounding box (pre-overhang)."""
        x0, y0, x1, y1 = geometry.bounding_box(roof.profile)
        r = min(x1 - x0, y1 - y0) / 2.0
        return math.tan(math.radians(roof.slope)) * r

    def element_solid(self, uid: str) -> Solid:
        element = self.get(uid)
        layer = self.layer_by_id(element.layer)
        base = layer.elevation
        if isinstance(element, Wall):
            return Solid(self.footprint(uid), base + element.bottom_elevation, base + element.top_elevation)
        if isinstance(element, (Door, Window)):
            host = self.get(element.host_wall)
            assert isinstance(host, Wall)
            host_base = self.layer_by_id(host.layer).elevation + host.bottom_elevation
            return Solid(
                self.footprint(uid),
                host_base + element.elevation,
                host_base + element.elevation + element.height,
            )
        if isinstance(element, Slab):
            top = base + element.height
            return Solid(element.profile, top - element.thickness, top)
        if isinstance(element, PitchedRoof):
            eave = base + element.eave_height
            return Solid(self.footprint(uid), eave, eave + self.roof_rise(element))
        if isinstance(element, Polygon):
            return Solid(element.vertices, base, base + 1.0)
        if isinstance(element, FunctionalArea):
            return Solid(element.boundary, base, base + 1.0)
        raise UnknownElement(uid)  # pragma: no cover

    # -- comparisons ---------------------------------------------------------

    def structurally_equal(self, other: "Model") -> bool:
        return (
            self.ref == other.ref
            and self.layers == other.layers
            and self.elements == other.elements
            and self.active_layer == other.active_layer
            and self.selection == other.selection
        )

    def category_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for element in self.elements.values():
            counts[element.category] = counts.get(element.category, 0) + 1
        return counts
