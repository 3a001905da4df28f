import json

import pytest

from chatbim.checker.bcf import CLEAN_MESSAGE, export_bcf_lite, render_issues_text
from chatbim.checker.engine import check, issue_amount, pass_rate, solids_intersect
from chatbim.checker.rules import RULES, catalog_manifest
from chatbim.kernel.geometry import Solid
from chatbim.kernel.model import Model, Wall


def empty_with_layer() -> Model:
    m = Model(seed=0)
    m.add_layer("Ground Floor", 0.0, 1)
    return m


def simple_clean_model() -> Model:
    """One-room building that passes all 30 rules."""
    m = empty_with_layer()
    layer = m.layers["Ground Floor"]
    w1 = m.create_wall((0, 0), (8000, 0), layer.id)
    w2 = m.create_wall((8000, 0), (8000, 6000), layer.id)
    w3 = m.create_wall((8000, 6000), (0, 6000), layer.id)
    w4 = m.create_wall((0, 6000), (0, 0), layer.id)
    m.create_opening("door", w1.id, 0, 4000, "Main Door")
    m.create_opening("window", w3.id, 1000, 4000, "Window")
    poly = m.create_polygon([(0, 0), (8000, 0), (8000, 6000), (0, 6000)], layer.id)
    m.create_slab(poly.id, layer.id)  # default height 0: top flush with wall bottoms
    m.create_roof(poly.id, layer.id, 30.0, 500.0, 3000.0, 250.0)
    m.create_functional_area([(0, 0), (8000, 0), (8000, 6000), (0, 6000)], "Room", layer.id)
    return m


# -- catalog --------------------------------------------------------------------


def test_rule_catalog_has_30_stable_ids():
    assert len(RULES) == 30
    assert len({r.id for r in RULES}) == 30
    classes = {r.rule_class for r in RULES}
    assert classes == {1, 2, 3}


def test_manifest_shape():
    manifest = catalog_manifest()
    assert len(manifest) == 30
    assert {"id", "rule_class", "title", "description", "desired_resolution"} <= set(manifest[0])


# -- solids_intersect ------------------------------------------------------------


def test_disjoint_boxes_do_not_intersect():
    a = Solid(((0, 0), (1000, 0), (1000, 1000), (0, 1000)), 0, 3000)
    b = Solid(((5000, 5000), (6000, 5000), (6000, 6000), (5000, 6000)), 0, 3000)
    assert not solids_intersect(a, b)


def test_identical_boxes_intersect():
    a = Solid(((0, 0), (1000, 0), (1000, 1000), (0, 1000)), 0, 3000)
    assert solids_intersect(a, a)


def test_crossing_walls_intersect():
    m = empty_with_layer()
    layer = m.layers["Ground Floor"]
    w1 = m.create_wall((0, 0), (4000, 0), layer.id)
    w2 = m.create_wall((2000, -2000), (2000, 2000), layer.id)
    assert solids_intersect(m.element_solid(w1.id), m.element_solid(w2.id))


def test_intersection_symmetric():
    m = empty_with_layer()
    layer = m.layers["Ground Floor"]
    w1 = m.create_wall((0, 0), (4000, 0), layer.id)
    w2 = m.create_wall((1000, -500), (1000, 3000), layer.id)
    a, b = m.element_solid(w1.id), m.element_solid(w2.id)
    assert solids_intersect(a, b) == solids_intersect(b, a)


def test_z_separation_prevents_intersection():
    a = Solid(((0, 0), (1000, 0), (1000, 1000), (0, 1000)), 0, 3000)
    b = Solid(((0, 0), (1000, 0), (1000, 1000), (0, 1000)), 3000, 6000)
    assert not solids_intersect(a, b)


# -- whole-model checks --------------------------------------------------------------


def test_empty_model_fails_presence_rules_only():
    report = check(empty_with_layer())
    assert sorted(report.failed_rules()) == [
        "presence-doors",
        "presence-roofs",
        "presence-slabs",
        "presence-spaces",
        "presence-walls",
        "presence-windows",
    ]
    assert issue_amount(report) == 6


def test_clean_model_passes_everything():
    report = check(simple_clean_model())
    assert report.failed_rules() == []
    assert pass_rate(report) == 1.0
    assert render_issues_text(report) == CLEAN_MESSAGE


def test_corner_joined_walls_exempt():
    m = simple_clean_model()
    report = check(m)
    assert report.pass_map["intersect-wall-wall"]


def test_opening_never_clashes_with_host_wall():
    report = check(simple_clean_model())
    assert report.pass_map["intersect-door-wall"]
    assert report.pass_map["intersect-window-wall"]


def test_crossing_walls_reported_once_per_pair():
    m = simple_clean_model()
    layer = m.layers["Ground Floor"]
    m.create_wall((1000, 3000), (7000, 3000), layer.id)
    m.create_wall((4000, 1000), (4000, 5000), layer.id)
    report = check(m)
    assert not report.pass_map["intersect-wall-wall"]
    wall_wall = [i for i in report.issues if i.rule_id == "intersect-wall-wall"]
    assert len(wall_wall) == 1
    assert len(wall_wall[0].related_uuids) == 2


def test_duplicate_wall_detected_regardless_of_direction():
    m = simple_clean_model()
    layer = m.layers["Ground Floor"]
    m.create_wall((2000, 2000), (5000, 2000), layer.id)
    m.create_wall((5000, 2000), (2000, 2000), layer.id)  # reversed twin
    report = check(m)
    assert not report.pass_map["duplicate-wall"]
    # coincident reversed walls share endpoints, so the corner-join exemption
    # keeps the intersection rule quiet; only the duplicate rule fires
    assert report.pass_map["intersect-wall-wall"]


def test_duplicate_detection_symmetric_and_sorted():
    m = simple_clean_model()
    layer = m.layers["Ground Floor"]
    m.create_wall((2000, 2000), (5000, 2000), layer.id)
    m.create_wall((2000, 2000), (5000, 2000), layer.id)
    report = check(m)
    dup = [i for i in report.issues if i.rule_id == "duplicate-wall"][0]
    assert list(dup.related_uuids) == sorted(dup.related_uuids)


def test_floating_slab_fails_support():
    m = simple_clean_model()
    layer = m.layers["Ground Floor"]
    poly = m.create_polygon([(20000, 20000), (24000, 20000), (24000, 24000), (20000, 24000)], layer.id)
    slab = m.create_slab(poly.id, layer.id)
    slab.height = 9000.0
    report = check(m)
    assert not report.pass_map["slab-support"]
    failing = [i for i in report.issues if i.rule_id == "slab-support"]
    assert failing and failing[0].related_uuids == (slab.id,)


def test_floating_roof_fails_support():
    m = simple_clean_model()
    layer = m.layers["Ground Floor"]
    poly = m.create_polygon([(0, 0), (8000, 0), (8000, 6000), (0, 6000)], layer.id)
    roof = m.create_roof(poly.id, layer.id, 30.0, 500.0, 8000.0, 250.0)  # hovering high
    report = check(m)
    assert not report.pass_map["roof-support"]
    assert any(i.related_uuids == (roof.id,) for i in report.issues)


def test_orphan_window_detected():
    m = simple_clean_model()
    layer = m.layers["Ground Floor"]
    from chatbim.kernel.model import Window

    orphan = Window(
        id=m.new_id(),
        layer=layer.id,
        host_wall="00000000-0000-4000-8000-000000000000",
        name="Ghost",
        elevation=1000.0,
        offset=500.0,
    )
    m.add_element(orphan)
    report = check(m)
    assert not report.pass_map["orphan-openings"]


def test_description_pattern_rule():
    m = simple_clean_model()
    wall = next(e for e in m.elements.values() if e.category == "wall")
    wall.description = "just a wall"
    report = check(m)
    assert not report.pass_map["description-uuid"]
    assert any(wall.id in i.related_uuids for i in report.issues)


def test_opening_on_other_floor_detected():
    m = simple_clean_model()
    upper = m.add_layer("First Floor", 3000.0, 2)
    door = next(e for e in m.elements.values() if e.category == "door")
    door.layer = upper.id
    report = check(m)
    assert not report.pass_map["opening-storey-match"]


def test_spatial_structure_requires_storeys():
    m = Model(seed=0)
    report = check(m)
    assert not report.pass_map["spatial-structure"]


def test_check_pure_and_deterministic():
    m = simple_clean_model()
    r1, r2 = check(m), check(m)
    assert r1 == r2
    assert json.dumps(export_bcf_lite(r1)) == json.dumps(export_bcf_lite(r2))


def test_pass_rate_values():
    m = empty_with_layer()
    report = check(m)
    assert pass_rate(report) == pytest.approx(24 / 30)
    clean = check(simple_clean_model())
    assert pass_rate(clean) == 1.0


def test_issue_amount_counts_instance_pairs():
    m = simple_clean_model()
    layer = m.layers["Ground Floor"]
    # three overlapping slab pairs via three coincident-footprint slabs at one level
    poly = m.create_polygon([(10000, 10000), (13000, 10000), (13000, 13000), (10000, 13000)], layer.id)
    for dz in (0.0, 100.0, 200.0):
        slab = m.create_slab(poly.id, layer.id)
        slab.height = 3000.0 + dz
    report = check(m)
    slab_pairs = [i for i in report.issues if i.rule_id == "intersect-slab-slab"]
    assert len(slab_pairs) == 3  # C(3, 2), matching a brute-force pair count


def test_bcf_lite_record_fields():
    report = check(empty_with_layer())
    records = export_bcf_lite(report)
    assert len(records) == 6
    for record in records:
        assert set(record) == {"Issue", "Issue description", "Related element uuids"}
    spaces = [r for r in records if "Space" in r["Issue"]][0]
    assert "Model Should Have Spaces" in spaces["Issue description"]
    assert spaces["Related element uuids"] == []


def test_issue_ordering_stable():
    report = check(empty_with_layer())
    ids = [i.rule_id for i in report.issues]
    assert ids == sorted(ids)
