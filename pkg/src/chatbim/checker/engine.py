"""Deterministic evaluation of the 30-rule catalog against a model.

check() is pure: repeated runs over the same model produce identical reports.
Issues are ordered by (rule id, related uuids) and each carries the rule's
headline, explanation and desired resolution so downstream agents can act on
the text alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..kernel.geometry import Solid, overlap_area
from ..kernel.ifcjson import UUID_PATTERN
from ..kernel.model import (
    CATEGORY_DOOR,
    CATEGORY_ROOF,
    CATEGORY_SLAB,
    CATEGORY_WALL,
    CATEGORY_WINDOW,
    Door,
    Model,
    PHYSICAL_CATEGORIES,
    PitchedRoof,
    Slab,
    Wall,
    Window,
)
from .rules import RULE_INDEX, RULES, Rule

# Clash thresholds: a pair clashes when footprints share more than this area
# and vertical intervals overlap by more than this height.
FOOTPRINT_AREA_THRESHOLD_MM2 = 100.0
Z_OVERLAP_THRESHOLD_MM = 1.0

ENDPOINT_JOIN_TOLERANCE_MM = 1.0
DUPLICATE_TOLERANCE_MM = 1.0
SUPPORT_LEVEL_TOLERANCE_MM = 10.0

_LABELS = {
    CATEGORY_WALL: "Wall",
    CATEGORY_SLAB: "Slab",
    CATEGORY_ROOF: "Roof",
    CATEGORY_DOOR: "Door",
    CATEGORY_WINDOW: "Window",
}
_PRESENCE_RULES = {
    "presence-walls": (CATEGORY_WALL, "Wall"),
    "presence-doors": (CATEGORY_DOOR, "Door"),
    "presence-windows": (CATEGORY_WINDOW, "Window"),
    "presence-slabs": (CATEGORY_SLAB, "Slab"),
    "presence-roofs": (CATEGORY_ROOF, "Roof"),
}


@dataclass(frozen=True)
class Issue:
    rule_id: str
    title: str
    description: str
    related_uuids: tuple[str, ...] = ()


@dataclass
class IssueReport:
    model_ref: str
    issues: tuple[Issue, ...]
    pass_map: dict[str, bool]

    def failed_rules(self) -> list[str]:
        return [rule_id for rule_id, ok in self.pass_map.items() if not ok]


def pass_rate(report: IssueReport) -> float:
    passed = sum(1 for ok in report.pass_map.values() if ok)
    return passed / len(RULES)


def issue_amount(report: IssueReport) -> int:
    return len(report.issues)


def solids_intersect(a: Solid, b: Solid) -> bool:
    """True when two prisms clash: footprint overlap above 100 mm2 and
    vertical overlap above 1 mm."""
    if a.z_overlap(b) <= Z_OVERLAP_THRESHOLD_MM:
        return False
    return overlap_area(a.footprint, b.footprint) > FOOTPRINT_AREA_THRESHOLD_MM2


def _issue(rule: Rule, detail: str, uuids: tuple[str, ...], title: str | None = None) -> Issue:
    description = (
        f"{rule.title}\n{rule.description}\nDesired resolution: {rule.desired_resolution}\n{detail}"
    )
    return Issue(
        rule_id=rule.id,
        title=title if title is not None else detail.splitlines()[0],
        description=description,
        related_uuids=uuids,
    )


def _rings_match(a: tuple, b: tuple, tol: float = DUPLICATE_TOLERANCE_MM) -> bool:
    """Vertex rings equal under cyclic rotation and reflection, within tol."""
    if len(a) != len(b):
        return False
    n = len(a)

    def matches(candidate) -> bool:
        for shift in range(n):
            if all(
                abs(candidate[(i + shift) % n][0] - a[i][0]) <= tol
                and abs(candidate[(i + shift) % n][1] - a[i][1]) <= tol
                for i in range(n)
            ):
                return True
        return False

    return matches(b) or matches(tuple(reversed(b)))


class _Audit:
    def __init__(self, model: Model):
        self.model = model
        self.issues: list[Issue] = []
        self.failed: set[str] = set()
        self.solids: dict[str, Solid] = {}
        for uid in model.elements:
            try:
                self.solids[uid] = model.element_solid(uid)
            except Exception:
                # Elements whose solid cannot be built (for example an orphan
                # opening) simply stay out of the geometric rules; structural
                # rules still see them.
                continue

    def add(self, rule_id: str, detail: str, uuids: tuple[str, ...] = (), title: str | None = None) -> None:
        self.failed.add(rule_id)
        self.issues.append(_issue(RULE_INDEX[rule_id], detail, uuids, title))

    # -- class 1 ------------------------------------------------------------

    def presence(self, ref: str) -> None:
        for rule_id, (category, label) in _PRESENCE_RULES.items():
            if not any(e.category == category for e in self.model.elements.values()):
                self.add(
                    rule_id,
                    f"No {label} Components in {ref}\n{ref} doesn't contain any {label} components",
                    title=f"No {label} Components in {ref}",
                )
        if not any(e.category == "functional_area" for e in self.model.elements.values()):
            self.add(
                "presence-spaces",
                f"No Space Components in {ref}\n{ref} doesn't contain any Space components",
                title=f"No Space Components in {ref}",
            )

    def guid_unique(self) -> None:
        seen: dict[str, int] = {}
        for uid in list(self.model.elements) + [layer.id for layer in self.model.layers.values()]:
            seen[uid] = seen.get(uid, 0) + 1
        for uid, count in sorted(seen.items()):
            if count > 1:
                self.add("guid-unique", f"GUID {uid} is used by {count} components", (uid,))
        for uid, element in sorted(self.model.elements.items()):
            if not UUID_PATTERN.match(uid):
                self.add("guid-unique", f"Component {uid} has a malformed GUID", (uid,))

    def spatial_structure(self) -> None:
        if not self.model.layers:
            self.add("spatial-structure", "Model has no building storeys")
            return
        layer_ids = {layer.id for layer in self.model.layers.values()}
        for uid, element in sorted(self.model.elements.items()):
            if element.layer not in layer_ids:
                self.add("spatial-structure", f"Component {uid} is not assigned to any storey", (uid,))

    def opening_storey_match(self) -> None:
        for uid, element in sorted(self.model.elements.items()):
            if not isinstance(element, (Door, Window)):
                continue
            host = self.model.elements.get(element.host_wall)
            if isinstance(host, Wall) and host.layer != element.layer:
                self.add(
                    "opening-storey-match",
                    f"{_LABELS[element.category]} {uid} is on a different floor than its wall {host.id}",
                    (uid, host.id),
                )

    def layer_information(self) -> None:
        layer_ids = {layer.id for layer in self.model.layers.values()}
        for uid, element in sorted(self.model.elements.items()):
            if isinstance(element, (Door, Window)):
                continue
            if not element.layer or element.layer not in layer_ids:
                self.add("layer-information", f"Component {uid} has no layer information", (uid,))

    def description_uuid(self) -> None:
        for uid, element in sorted(self.model.elements.items()):
            if element.category not in PHYSICAL_CATEGORIES:
                continue
            if not element.description or not UUID_PATTERN.match(element.description):
                self.add(
                    "description-uuid",
                    f"Component {uid} has description {element.description!r} which is not a UUID",
                    (uid,),
                )

    # -- class 3: clashes -------------------------------------------------------

    def _sorted_ids(self, category: str) -> list[str]:
        return sorted(uid for uid, e in self.model.elements.items() if e.category == category and uid in self.solids)

    def _walls_share_endpoint(self, a: Wall, b: Wall) -> bool:
        for p in (a.start, a.end):
            for q in (b.start, b.end):
                if abs(p[0] - q[0]) <= ENDPOINT_JOIN_TOLERANCE_MM and abs(p[1] - q[1]) <= ENDPOINT_JOIN_TOLERANCE_MM:
                    return True
        return False

    def _is_host_pair(self, opening_id: str, wall_id: str) -> bool:
        opening = self.model.elements[opening_id]
        return isinstance(opening, (Door, Window)) and opening.host_wall == wall_id

    def intersections(self) -> None:
        for rule in RULES:
            if not rule.id.startswith("intersect-"):
                continue
            _, cat_a, cat_b = rule.id.split("-")
            ids_a = self._sorted_ids(cat_a)
            ids_b = self._sorted_ids(cat_b)
            if cat_a == cat_b:
                pairs = [(ids_a[i], ids_a[j]) for i in range(len(ids_a)) for j in range(i + 1, len(ids_a))]
            else:
                pairs = [(x, y) for x in ids_a for y in ids_b]
            for x, y in pairs:
                if cat_a == CATEGORY_WALL and cat_b == CATEGORY_WALL:
                    wall_x, wall_y = self.model.elements[x], self.model.elements[y]
                    if self._walls_share_endpoint(wall_x, wall_y):
                        continue  # corner joins are intended contact
                if cat_b == CATEGORY_WALL and cat_a in (CATEGORY_DOOR, CATEGORY_WINDOW):
                    if self._is_host_pair(x, y):
                        continue  # an opening never clashes with its own wall
                if solids_intersect(self.solids[x], self.solids[y]):
                    first, second = sorted((x, y))
                    self.add(
                        rule.id,
                        f"{_LABELS[cat_a]} {x} intersects {_LABELS[cat_b]} {y}",
                        (first, second),
                    )

    def duplicates(self) -> None:
        for category in (CATEGORY_WALL, CATEGORY_SLAB, CATEGORY_ROOF, CATEGORY_DOOR, CATEGORY_WINDOW):
            ids = self._sorted_ids(category)
            for i in range(len(ids)):
                for j in range(i + 1, len(ids)):
                    a, b = self.solids[ids[i]], self.solids[ids[j]]
                    if (
                        abs(a.z_min - b.z_min) <= DUPLICATE_TOLERANCE_MM
                        and abs(a.z_max - b.z_max) <= DUPLICATE_TOLERANCE_MM
                        and _rings_match(a.footprint, b.footprint)
                    ):
                        self.add(
                            f"duplicate-{category}",
                            f"{_LABELS[category]} {ids[i]} duplicates {_LABELS[category]} {ids[j]}",
                            (ids[i], ids[j]),
                        )

    # -- class 3: support and orphans ---------------------------------------------

    def _wall_solids(self) -> list[tuple[str, Wall, Solid]]:
        out = []
        for uid in self._sorted_ids(CATEGORY_WALL):
            wall = self.model.elements[uid]
            out.append((uid, wall, self.solids[uid]))
        return out

    def roof_support(self) -> None:
        walls = self._wall_solids()
        top_floor_walls: list[tuple[str, Wall, Solid]] = []
        if walls:
            wall_floors = {uid: self.model.layer_by_id(w.layer).floor_index for uid, w, _ in walls}
            top_index = max(wall_floors.values())
            top_floor_walls = [(uid, w, s) for uid, w, s in walls if wall_floors[uid] == top_index]
        for uid in self._sorted_ids(CATEGORY_ROOF):
            roof = self.model.elements[uid]
            assert isinstance(roof, PitchedRoof)
            eave = self.model.layer_by_id(roof.layer).elevation + roof.eave_height
            if not top_floor_walls:
                self.add("roof-support", f"Roof {uid} has no supporting walls", (uid,))
                continue
            top_of_walls = max(s.z_max for _, _, s in top_floor_walls)
            level_ok = abs(eave - top_of_walls) <= SUPPORT_LEVEL_TOLERANCE_MM
            touch_ok = any(overlap_area(roof.profile, s.footprint) > 0 for _, _, s in top_floor_walls)
            if not (level_ok and touch_ok):
                self.add(
                    "roof-support",
                    f"Roof {uid} is not connected to the walls on the uppermost floor",
                    (uid,),
                )

    def slab_support(self) -> None:
        walls = self._wall_solids()
        needed = 3 if len(walls) >= 3 else 1
        for uid in self._sorted_ids(CATEGORY_SLAB):
            slab = self.model.elements[uid]
            assert isinstance(slab, Slab)
            top = self.solids[uid].z_max
            touching = [
                (w, s) for _, w, s in walls if overlap_area(slab.profile, s.footprint) > 0
            ]
            level_ok = any(
                s.z_min - SUPPORT_LEVEL_TOLERANCE_MM <= top <= s.z_max + SUPPORT_LEVEL_TOLERANCE_MM
                for _, s in touching
            )
            if len(touching) < needed or not level_ok:
                self.add("slab-support", f"Slab {uid} is not connected to supporting walls", (uid,))

    def orphan_openings(self) -> None:
        for uid, element in sorted(self.model.elements.items()):
            if not isinstance(element, (Door, Window)):
                continue
            host = self.model.elements.get(element.host_wall)
            if not isinstance(host, Wall):
                self.add(
                    "orphan-openings",
                    f"{_LABELS[element.category]} {uid} has no relation to any wall",
                    (uid,),
                )


def check(model: Model, model_ref: str | None = None) -> IssueReport:
    """Run all 30 rules; deterministic issue ordering by (rule id, uuids)."""
    ref = model_ref if model_ref is not None else model.ref
    audit = _Audit(model)
    audit.presence(ref)
    audit.guid_unique()
    audit.spatial_structure()
    audit.opening_storey_match()
    audit.layer_information()
    audit.description_uuid()
    audit.intersections()
    audit.duplicates()
    audit.roof_support()
    audit.slab_support()
    audit.orphan_openings()

    issues = tuple(sorted(audit.issues, key=lambda i: (i.rule_id, i.related_uuids, i.title)))
    pass_map = {rule.id: rule.id not in audit.failed for rule in RULES}
    return IssueReport(model_ref=ref, issues=issues, pass_map=pass_map)
