"""The callable modeling tools, bound to one Model instance.

Signatures and parameter names follow the catalog exactly: generated scripts
call these by keyword. Every tool either mutates the model or is a pure read;
none performs I/O. Errors are raised as kernel exceptions and surface in the
interpreter as tool errors.
"""

from __future__ import annotations

from ..errors import (
    IndexOutOfRange,
    InvalidArgument,
    LayerDeletionForbidden,
    UnknownElement,
    UnknownStyle,
)
from ..kernel.model import (
    CATEGORY_DOOR,
    CATEGORY_WINDOW,
    Model,
    PitchedRoof,
    Polygon,
    ROOF_STYLES,
    Slab,
    WALL_STYLES,
    Wall,
)
from .catalog import TOOL_NAMES


class ToolApi:
    def __init__(self, model: Model):
        self.model = model

    def bindings(self) -> dict[str, object]:
        """Name -> callable map for the script interpreter."""
        return {name: getattr(self, name) for name in TOOL_NAMES}

    # -- layers --------------------------------------------------------------

    def create_story_layer(self, layer_name, elevation, floor_index):
        layer = self.model.add_layer(str(layer_name), elevation, floor_index)
        return layer.id

    def set_active_story_layer(self, layer_name):
        layer = self.model.layer_by_name(str(layer_name))
        self.model.active_layer = layer.id
        return layer.id

    # -- walls ---------------------------------------------------------------

    def create_wall(self, st_pt, ed_pt, layer_uuid):
        return self.model.create_wall(st_pt, ed_pt, layer_uuid).id

    def _wall(self, uuid) -> Wall:
        element = self.model.get(uuid)
        if not isinstance(element, Wall):
            raise InvalidArgument(f"{uuid} is not a wall")
        return element

    def set_wall_thickness(self, uuid, thickness):
        if float(thickness) <= 0:
            raise InvalidArgument("wall thickness must be > 0")
        self._wall(uuid).thickness = float(thickness)
        return uuid

    def get_wall_thickness(self, uuid):
        return self._wall(uuid).thickness

    def set_wall_elevation(self, uuid, top_elevation, bottom_elevation):
        if float(top_elevation) <= float(bottom_elevation):
            raise InvalidArgument("top_elevation must exceed bottom_elevation")
        wall = self._wall(uuid)
        wall.top_elevation = float(top_elevation)
        wall.bottom_elevation = float(bottom_elevation)
        return uuid

    def get_wall_elevation(self, uuid):
        wall = self._wall(uuid)
        return (wall.top_elevation, wall.bottom_elevation)

    def set_wall_style(self, uuid, style_name):
        if style_name not in WALL_STYLES:
            raise UnknownStyle(str(style_name), WALL_STYLES)
        self._wall(uuid).style = style_name
        return uuid

    # -- openings --------------------------------------------------------------

    def add_window_to_wall(self, wall_uuid, window_elevation, window_offset, window_name):
        return self.model.create_opening(
            CATEGORY_WINDOW, wall_uuid, window_elevation, window_offset, window_name
        ).id

    def add_door_to_wall(self, wall_uuid, door_elevation, door_offset, door_name):
        return self.model.create_opening(CATEGORY_DOOR, wall_uuid, door_elevation, door_offset, door_name).id

    # -- generic element ops -----------------------------------------------------

    def move_obj(self, uuid, xDistance, yDistance, zDistance):
        if self.model.is_layer_id(uuid):
            raise InvalidArgument("story layers cannot be moved")
        self.model.move(uuid, xDistance, yDistance, zDistance)
        return None

    def delete_element(self, uuid):
        uuids = list(uuid) if isinstance(uuid, (list, tuple)) else [uuid]
        for uid in uuids:
            if self.model.is_layer_id(uid):
                raise LayerDeletionForbidden(uid)
        if uuids:
            self.model.delete(uuids)
        return None

    def find_selected_element(self):
        active = self.model.active_layer
        return sorted(
            uid
            for uid in self.model.selection
            if uid in self.model.elements and self.model.elements[uid].layer == active
        )

    def duplicate_obj(self, element_uuid, layer_uuid, n):
        return self.model.duplicate(element_uuid, layer_uuid, int(n))

    def rotate_obj(self, uuid, angle, center=None):
        if self.model.is_layer_id(uuid):
            raise InvalidArgument("story layers cannot be rotated")
        self.model.rotate(uuid, angle, center)
        return uuid

    # -- polygons ------------------------------------------------------------

    def create_polygon(self, vertices, layer_uuid):
        return self.model.create_polygon(vertices, layer_uuid).id

    def _polygon(self, uuid) -> Polygon:
        element = self.model.get(uuid)
        if not isinstance(element, Polygon):
            raise InvalidArgument(f"{uuid} is not a polygon")
        return element

    def get_polygon_vertex(self, uuid, at):
        poly = self._polygon(uuid)
        index = int(at)
        if not 0 <= index < len(poly.vertices):
            raise IndexOutOfRange(f"vertex index {index} outside 0..{len(poly.vertices) - 1}")
        return poly.vertices[index]

    def get_vertex_count(self, uuid):
        return len(self._polygon(uuid).vertices)

    # -- slabs ----------------------------------------------------------------

    def create_slab(self, profile_id, layer_uuid):
        return self.model.create_slab(profile_id, layer_uuid).id

    def _slab(self, slab_id) -> Slab:
        element = self.model.get(slab_id)
        if not isinstance(element, Slab):
            raise InvalidArgument(f"{slab_id} is not a slab")
        return element

    def set_slab_height(self, slab_id, height):
        self._slab(slab_id).height = float(height)
        return slab_id

    def get_slab_height(self, slab_id):
        return self._slab(slab_id).height

    def set_slab_style(self, slab_id, style_name):
        self._slab(slab_id).style = str(style_name)
        return slab_id

    # -- spaces ---------------------------------------------------------------

    def create_functional_area(self, vertices, name, layer_uuid):
        return self.model.create_functional_area(vertices, name, layer_uuid).id

    # -- roofs ----------------------------------------------------------------

    def create_pitched_roof(self, profile_id, layer_uuid, slope, eave_overhang, eave_height, roof_thickness):
        return self.model.create_roof(
            profile_id, layer_uuid, slope, eave_overhang, eave_height, roof_thickness
        ).id

    def _roof(self, roof_id) -> PitchedRoof:
        element = self.model.get(roof_id)
        if not isinstance(element, PitchedRoof):
            raise InvalidArgument(f"{roof_id} is not a pitched roof")
        return element

    def set_pitched_roof_attributes(
        self, roof_id, slope=None, eave_overhang=None, eave_height=None, roof_thickness=None
    ):
        roof = self._roof(roof_id)
        if slope is not None:
            if float(slope) < 5.0:
                raise InvalidArgument("roof slope cannot be less than 5 degrees")
            roof.slope = float(slope)
        if eave_overhang is not None:
            if float(eave_overhang) < 0:
                raise InvalidArgument("eave_overhang must be >= 0")
            roof.eave_overhang = float(eave_overhang)
        if eave_height is not None:
            roof.eave_height = float(eave_height)
        if roof_thickness is not None:
            if float(roof_thickness) <= 0:
                raise InvalidArgument("roof_thickness must be > 0")
            roof.roof_thickness = float(roof_thickness)
        return roof_id

    def set_pitched_roof_style(self, roof_id, style_name):
        if style_name not in ROOF_STYLES:
            raise UnknownStyle(str(style_name), ROOF_STYLES)
        self._roof(roof_id).style = style_name
        return roof_id


def _missing_tools() -> list[str]:
    return [name for name in TOOL_NAMES if not callable(getattr(ToolApi, name, None))]


assert not _missing_tools(), f"catalog entries without implementations: {_missing_tools()}"
