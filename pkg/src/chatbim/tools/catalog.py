"""The modeling tool catalog: names, documentation and parameter schemas.

The rendered text block is what gets injected into every agent prompt, so it
must stay byte-identical to ``data/tool_catalog.txt`` (guarded by a test).
Entries are ordered; the order is part of the contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources


@dataclass(frozen=True)
class ToolParam:
    name: str
    type_text: str
    description: str
    json_type: object = "string"
    optional: bool = False


@dataclass(frozen=True)
class ToolEntry:
    name: str
    description: str
    params: tuple[ToolParam, ...]
    returns: tuple[str, ...]

    def render(self) -> str:
        lines = [f"- {self.name}:", f"    {self.description}", "    Input:"]
        if self.params:
            for p in self.params:
                lines.append(f"        - {p.name}: {p.type_text}, {p.description}")
        else:
            lines.append("        - None")
        lines.append("    Return:")
        for r in self.returns:
            lines.append(f"        - {r}")
        return "\n".join(lines)

    def parameter_schema(self) -> dict:
        properties = {}
        required = []
        for p in self.params:
            properties[p.name] = {"type": p.json_type, "description": p.description}
            if not p.optional:
                required.append(p.name)
        return {"type": "object", "properties": properties, "required": required}


def _p(name: str, type_text: str, description: str, json_type="string", optional=False) -> ToolParam:
    return ToolParam(name, type_text, description, json_type, optional)


ENTRIES: tuple[ToolEntry, ...] = (
    ToolEntry(
        "create_story_layer",
        "This tool is used to create a new story layer. The new layer is created at the given "
        "elevation. Once a new story layer is created, it becomes the active layer. All new "
        "building elements will be created on the current active story.",
        (
            _p("layer_name", "str", "the unique name of the new story."),
            _p("elevation", "float", "the elevation of the new story relative to the ground.", "number"),
            _p("floor_index", "int", "the index of the new floor. Should start from 1.", "integer"),
        ),
        ("str, the layer_uuid of the new story layer.",),
    ),
    ToolEntry(
        "set_active_story_layer",
        "This tool is used to set the story layer with the given name to active. The active "
        "story layer is the layer in which new elements are created.",
        (_p("layer_name", "str", "the name of the layer to set as active."),),
        ("str, the layer_uuid of the active layer.",),
    ),
    ToolEntry(
        "create_functional_area",
        "This tool is used to create a conceptual functional area on a specified layer. The "
        "area is created from a list of vertices that define the room boundary. Usually, "
        "functional areas are created first to define the interior layout of the building, and "
        "then the rooms are separated by placing walls at the boundaries.",
        (
            _p(
                "vertices",
                "list of tuples",
                "each tuple represents the 2D coordinate of a vertex that defines the boundary of the room.",
                "array",
            ),
            _p("name", "str", "the name of the room/functional area."),
            _p("layer_uuid", "str", "the uuid of the story layer where the space will be created."),
        ),
        ("str, the uuid of the created room/functional area.",),
    ),
    ToolEntry(
        "create_wall",
        "This tool is used to create a wall on a specified layer. By default, the wall is "
        "created with a bottom_elevation of 0 and a top_elevation of 3000 relative to this layer.",
        (
            _p("st_pt", "tuple", "the 2D coordinate of the starting point of the wall.", "array"),
            _p("ed_pt", "tuple", "the 2D coordinate of the end point of the wall.", "array"),
            _p("layer_uuid", "str", "the uuid of the story layer where the wall will be created."),
        ),
        ("str, the uuid of the newly created wall.",),
    ),
    ToolEntry(
        "set_wall_thickness",
        "This tool is used to set the thickness of a wall.",
        (
            _p("uuid", "str", "the uuid of the wall object."),
            _p("thickness", "float", "the new thickness of the wall.", "number"),
        ),
        ("str, the uuid of the wall object that has been modified.",),
    ),
    ToolEntry(
        "set_wall_elevation",
        "This tool is used to set the top/bottom elevation of a wall. Subtracting these two is "
        "the height of the wall itself.",
        (
            _p("uuid", "str", "the uuid of the wall object."),
            _p(
                "top_elevation",
                "float",
                "the vertical distance from the top of the wall to the story layer where the wall was originally created.",
                "number",
            ),
            _p(
                "bottom_elevation",
                "float",
                "the vertical distance from the bottom of the wall to the story layer where the wall was originally created.",
                "number",
            ),
        ),
        ("str, the uuid of the wall object that has been modified.",),
    ),
    ToolEntry(
        "get_wall_elevation",
        "This tool is used to get the top and bottom elevation of a wall. Subtracting these two "
        "is the height of the wall itself.",
        (_p("uuid", "str", "the uuid of the wall object."),),
        (
            "top_elevation: float, the vertical distance from the top of the wall to the story layer where the wall was originally created.",
            "bottom_elevation: float, the vertical distance from the bottom of the wall to the story layer where the wall was originally created.",
        ),
    ),
    ToolEntry(
        "get_wall_thickness",
        "This tool is used to get the thickness of a wall.",
        (_p("uuid", "str", "the uuid of the wall object."),),
        ("thickness: float, the thickness of the wall.",),
    ),
    ToolEntry(
        "set_wall_style",
        "This tool is used to set the style of a wall.",
        (
            _p("uuid", "str", "the uuid of the wall object."),
            _p(
                "style_name",
                "str",
                'the name of the style. Following wall style names are available: ["Concrete Wall", "Wood Wall", "Brick Wall"]',
            ),
        ),
        ("str, the uuid of the wall object that has been modified.",),
    ),
    ToolEntry(
        "add_window_to_wall",
        "This tool is used to add a window to a wall. Once a window is added to a wall, it is "
        "part of the wall and will be moved/duplicated/rotated with the wall.",
        (
            _p("wall_uuid", "str", "the uuid of the wall object to which the window will be added."),
            _p("window_elevation", "float", "the elevation of the window from the bottom of the wall.", "number"),
            _p("window_offset", "float", "the offset of the window from the starting point of the wall.", "number"),
            _p("window_name", "str", "the name of the window object to be added."),
        ),
        ("str, the uuid of the window object that has been added to the wall.",),
    ),
    ToolEntry(
        "add_door_to_wall",
        "This tool is used to add a door to a wall. Once a door is added to a wall, it is part "
        "of the wall and will be moved/duplicated/rotated with the wall.",
        (
            _p("wall_uuid", "str", "the uuid of the wall object to which the door will be added."),
            _p("door_elevation", "float", "the elevation of the door from the bottom of the wall.", "number"),
            _p("door_offset", "float", "the offset of the door from the starting point of the wall.", "number"),
            _p("door_name", "str", "the name of the door object to be added."),
        ),
        ("str, the uuid of the door object that has been added to the wall.",),
    ),
    ToolEntry(
        "move_obj",
        "This tool is used to move an element. It can only move the given element within the "
        "layer where it is placed but not duplicate it.",
        (
            _p("uuid", "str", "the unique uuid of the element to move."),
            _p("xDistance", "float", "moving distance in x direction.", "number"),
            _p("yDistance", "float", "moving distance in y direction.", "number"),
            _p("zDistance", "float", "moving distance in z direction.", "number"),
        ),
        ("None",),
    ),
    ToolEntry(
        "delete_element",
        "This tool is used to delete an element or a list of elements. Story layers cannot be deleted.",
        (_p("uuid", "str or a list of string", "the unique uuids of the elements to delete.", ["string", "array"]),),
        ("None",),
    ),
    ToolEntry(
        "find_selected_element",
        "This tool is used to find the selected element in the current active story layer. If "
        "no selected elements are found, it will return an empty list.",
        (),
        ("list of str, the uuids of the selected elements.",),
    ),
    ToolEntry(
        "create_polygon",
        "This tool is used to create a polygon on a specified story layer using its vertices.",
        (
            _p("vertices", "list of tuples", "each tuple represents the 2D coordinate of a vertex of the polygon.", "array"),
            _p("layer_uuid", "str", "the uuid of the story layer where the polygon will be created."),
        ),
        ("str, the uuid of the created polygon.",),
    ),
    ToolEntry(
        "get_polygon_vertex",
        "This tool is used to get a desired vertex at the given index in the polygon's vertex array.",
        (
            _p("uuid", "str", "the uuid of the polygon object."),
            _p("at", "int", "the index of the desired vertex.", "integer"),
        ),
        ("tuple, the 2D coordinate of the desired vertex of the polygon.",),
    ),
    ToolEntry(
        "get_vertex_count",
        "This tool is used to get the number of vertices in a polygon.",
        (_p("uuid", "str", "the uuid of the polygon object."),),
        ("int, the number of vertices in the input polygon.",),
    ),
    ToolEntry(
        "create_slab",
        "This tool is used to create a slab from a polygon profile on a specified layer.",
        (
            _p("profile_id", "str", "the uuid of a polygon object that determines the profile of the slab."),
            _p("layer_uuid", "str", "the uuid of the story layer where the slab will be created."),
        ),
        ("str, the uuid of the created slab.",),
    ),
    ToolEntry(
        "set_slab_height",
        "This tool is used to set the height (elevation) of a slab.",
        (
            _p("slab_id", "str", "the uuid of the slab object."),
            _p(
                "height",
                "float",
                "the height of the slab relative to the story layer where the slab was originally created.",
                "number",
            ),
        ),
        ("str, the uuid of the modified slab.",),
    ),
    ToolEntry(
        "get_slab_height",
        "This tool is used to get the height (elevation) of a slab.",
        (_p("slab_id", "str", "the uuid of the slab object."),),
        ("float, the height of the slab relative to the story layer where the slab was originally created.",),
    ),
    ToolEntry(
        "set_slab_style",
        "This tool is used to set the style of a slab.",
        (
            _p("slab_id", "str", "the uuid of the slab object."),
            _p("style_name", "str", "the name of the style."),
        ),
        ("str, the uuid of the modified slab.",),
    ),
    ToolEntry(
        "duplicate_obj",
        "This tool is used to duplicate an element to a specified layer. Note that when "
        "duplicating a wall that includes doors and windows, the doors and windows within it "
        "will also be duplicated. The story layer cannot be duplicated.",
        (
            _p("element_uuid", "str", "the unique uuid of an element to duplicate."),
            _p("layer_uuid", "str", "the uuid of the story layer where the copies will be placed."),
            _p("n", "int", "the number of copies to make.", "integer"),
        ),
        ("list of str, the list of uuids of the copies. It is recommended to use this list to further manipulate the copies.",),
    ),
    ToolEntry(
        "rotate_obj",
        "This tool is used to rotate an element.",
        (
            _p("uuid", "str", "the unique uuid of the element to rotate."),
            _p("angle", "float", "the angle in degrees to rotate the element.", "number"),
            _p(
                "center",
                "tuple",
                "the 2D coordinate of the center of rotation. By default, it is the center of the element. (optional)",
                "array",
                optional=True,
            ),
        ),
        ("str, the uuid of the rotated element.",),
    ),
    ToolEntry(
        "create_pitched_roof",
        "This tool is used to create a pitched roof from a polygon profile on a specified layer.",
        (
            _p("profile_id", "str", "the uuid of a polygon object that determines the profile(base) of the roof."),
            _p("layer_uuid", "str", "the uuid of the story layer where the roof will be created."),
            _p("slope", "float", "the slope of the roof in degrees. It cannot be less than 5.", "number"),
            _p("eave_overhang", "float", "the eave overhang of the roof.", "number"),
            _p(
                "eave_height",
                "float",
                "the elevation of the roof relative to the specified layer. Usually the height of the wall on this floor.",
                "number",
            ),
            _p("roof_thickness", "float", "the thickness of the roof.", "number"),
        ),
        ("str, the uuid of the created roof.",),
    ),
    ToolEntry(
        "set_pitched_roof_attributes",
        "This tool is used to set the new attributes of a pitched roof. Attributes that need to "
        "be changed can be optionally entered.",
        (
            _p("roof_id", "str", "the uuid of the roof object."),
            _p("slope", "float", "the slope of the roof in degrees (optional).", "number", optional=True),
            _p("eave_overhang", "float", "the eave overhang of the roof (optional).", "number", optional=True),
            _p(
                "eave_height",
                "float",
                "the height(elevation) of the roof from the story layer where the roof was originally created (optional).",
                "number",
                optional=True,
            ),
            _p("roof_thickness", "float", "the thickness of the roof (optional).", "number", optional=True),
        ),
        ("str, the uuid of the modified roof.",),
    ),
    ToolEntry(
        "set_pitched_roof_style",
        "This tool is used to set the style of a pitched roof.",
        (
            _p("roof_id", "str", "the uuid of the roof object."),
            _p(
                "style_name",
                "str",
                'the name of the style. Available: ["Low Slope Concrete w/ Rigid Insulation", "Sloped Wood Struct Insul Flat Clay Tile"]',
            ),
        ),
        ("str, the uuid of the modified roof.",),
    ),
)

TOOL_NAMES: tuple[str, ...] = tuple(entry.name for entry in ENTRIES)


def catalog_text() -> str:
    """The prompt-injectable description block, one entry per tool."""
    return "\n".join(entry.render() for entry in ENTRIES) + "\n"


def shipped_catalog_text() -> str:
    """Contents of the versioned catalog file shipped with the package."""
    return resources.files("chatbim.tools").joinpath("data/tool_catalog.txt").read_text(encoding="utf-8")


def parameter_schemas() -> dict[str, dict]:
    """JSON schemas for the function-calling layer, keyed by tool name."""
    return {entry.name: entry.parameter_schema() for entry in ENTRIES}
