from .geometry import Point, Solid
from .ifcjson import dumps_canonical, model_deserialize, model_serialize
from .mesh import mesh_export
from .model import (
    Door,
    Element,
    FunctionalArea,
    Model,
    PitchedRoof,
    Polygon,
    Slab,
    StoryLayer,
    Wall,
    Window,
)

__all__ = [
    "Door",
    "Element",
    "FunctionalArea",
    "Model",
    "PitchedRoof",
    "Point",
    "Polygon",
    "Slab",
    "Solid",
    "StoryLayer",
    "Wall",
    "Window",
    "dumps_canonical",
    "mesh_export",
    "model_deserialize",
    "model_serialize",
]
