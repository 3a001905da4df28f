import math

import pytest

from chatbim.errors import (
    DuplicateLayerName,
    InvalidArgument,
    UnknownElement,
)
from chatbim.kernel.ifcjson import UUID_PATTERN
from chatbim.kernel.model import Model


@pytest.fixture
def model():
    m = Model(seed=1)
    m.add_layer("Ground Floor", 0.0, 1)
    return m


def ground(m: Model):
    return m.layers["Ground Floor"]


def test_uuid_shape_and_uniqueness(model):
    layer = ground(model)
    ids = {model.create_wall((0, 0), (1000 * (i + 1), 0), layer.id).id for i in range(50)}
    assert len(ids) == 50
    for uid in ids:
        assert UUID_PATTERN.match(uid)


def test_identical_seeds_build_identical_ids():
    a, b = Model(seed=7), Model(seed=7)
    la = a.add_layer("L", 0, 1)
    lb = b.add_layer("L", 0, 1)
    assert la.id == lb.id
    assert a.create_wall((0, 0), (1, 1), la.id).id == b.create_wall((0, 0), (1, 1), lb.id).id


def test_description_mirrors_uuid(model):
    wall = model.create_wall((0, 0), (5000, 0), ground(model).id)
    assert wall.description == wall.id


def test_duplicate_layer_name_rejected(model):
    with pytest.raises(DuplicateLayerName):
        model.add_layer("Ground Floor", 3000.0, 2)


def test_wall_solid_defaults(model):
    wall = model.create_wall((0, 0), (5000, 0), ground(model).id)
    solid = model.element_solid(wall.id)
    assert solid.z_min == 0
    assert solid.z_max == 3000


def test_wall_solid_follows_layer_elevation():
    m = Model(seed=2)
    layer = m.add_layer("First", 3000.0, 2)
    wall = m.create_wall((0, 0), (4000, 0), layer.id)
    solid = m.element_solid(wall.id)
    assert (solid.z_min, solid.z_max) == (3000, 6000)


def test_roof_rise_from_bbox_half_min_side():
    m = Model(seed=3)
    layer = m.add_layer("G", 0.0, 1)
    poly = m.create_polygon([(0, 0), (10000, 0), (10000, 8000), (0, 8000)], layer.id)
    roof = m.create_roof(poly.id, layer.id, 30.0, 1000.0, 3000.0, 300.0)
    # Hand oracle: tan(30 deg) * (8000 / 2) = 2309.40...
    assert m.roof_rise(roof) == pytest.approx(math.tan(math.radians(30)) * 4000, abs=1e-6)
    solid = m.element_solid(roof.id)
    assert solid.z_min == 3000
    assert solid.z_max == pytest.approx(3000 + 2309.401076758503, abs=1e-3)


def test_roof_slope_minimum(model):
    poly = model.create_polygon([(0, 0), (1000, 0), (1000, 1000)], ground(model).id)
    with pytest.raises(InvalidArgument):
        model.create_roof(poly.id, ground(model).id, 4.0, 0.0, 3000.0, 200.0)


def test_slab_solid_spans_thickness_below_height(model):
    poly = model.create_polygon([(0, 0), (2000, 0), (2000, 2000), (0, 2000)], ground(model).id)
    slab = model.create_slab(poly.id, ground(model).id)
    slab.height = 3000.0
    solid = model.element_solid(slab.id)
    assert (solid.z_min, solid.z_max) == (2750, 3000)


def test_opening_solid_embedded_in_wall(model):
    wall = model.create_wall((0, 0), (5000, 0), ground(model).id)
    door = model.create_opening("door", wall.id, 0.0, 2500.0, "Main Door")
    solid = model.element_solid(door.id)
    xs = sorted({round(p[0], 6) for p in solid.footprint})
    ys = sorted({round(p[1], 6) for p in solid.footprint})
    assert xs == [2050, 2950]  # 900 wide, centered at the 2500 offset
    assert ys == [-100, 100]  # full wall thickness
    assert (solid.z_min, solid.z_max) == (0, 2100)


def test_delete_wall_cascades_to_openings(model):
    wall = model.create_wall((0, 0), (5000, 0), ground(model).id)
    model.create_opening("window", wall.id, 1000.0, 1000.0, "W1")
    model.create_opening("window", wall.id, 1000.0, 4000.0, "W2")
    assert len(model.elements) == 3
    removed = model.delete([wall.id])
    assert removed == 3
    assert model.elements == {}


def test_no_dangling_hosts_after_any_delete(model):
    wall = model.create_wall((0, 0), (5000, 0), ground(model).id)
    door = model.create_opening("door", wall.id, 0.0, 2000.0, "D")
    model.delete([door.id])
    assert door.id not in model.get(wall.id).openings
    model.delete([wall.id])
    for element in model.elements.values():
        if hasattr(element, "host_wall"):
            assert element.host_wall in model.elements


def test_duplicate_wall_copies_openings_with_fresh_ids(model):
    upper = model.add_layer("First", 3000.0, 2)
    wall = model.create_wall((0, 0), (5000, 0), ground(model).id)
    door = model.create_opening("door", wall.id, 0.0, 2000.0, "D")
    before = len(model.elements)
    made = model.duplicate(wall.id, upper.id, 1)
    assert len(made) == 1
    assert len(model.elements) == before + 2
    copy = model.get(made[0])
    assert copy.layer == upper.id
    assert copy.openings and copy.openings[0] != door.id
    copied_door = model.get(copy.openings[0])
    assert copied_door.host_wall == copy.id
    # z comes from the target layer: relative elevations are copied verbatim
    assert model.element_solid(copy.id).z_min == 3000


def test_move_translates_and_inverse_restores(model):
    wall = model.create_wall((0, 0), (5000, 0), ground(model).id)
    model.move(wall.id, 1000, 0, 0)
    assert wall.start == (1000, 0) and wall.end == (6000, 0)
    model.move(wall.id, -1000, 0, 0)
    assert wall.start == pytest.approx((0, 0)) and wall.end == pytest.approx((5000, 0))


def test_move_zero_is_identity(model):
    wall = model.create_wall((0, 0), (5000, 0), ground(model).id)
    before = model.element_solid(wall.id)
    model.move(wall.id, 0, 0, 0)
    assert model.element_solid(wall.id) == before


def test_element_solid_pure(model):
    wall = model.create_wall((0, 0), (5000, 0), ground(model).id)
    assert model.element_solid(wall.id) == model.element_solid(wall.id)


def test_unknown_element_raises(model):
    with pytest.raises(UnknownElement):
        model.element_solid("not-a-uuid")


def test_degenerate_polygon_rejected(model):
    with pytest.raises(InvalidArgument):
        model.create_polygon([(0, 0), (1000, 0)], ground(model).id)
    with pytest.raises(InvalidArgument):
        model.create_polygon([(0, 0), (1000, 0), (2000, 0)], ground(model).id)
