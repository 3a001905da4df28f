"""The fixed 30-rule audit catalog.

Rules fall into three classes: class 1 checks well-formedness of content and
structure, class 2 checks attribute values against a prescribed pattern, and
class 3 checks geometry-derived relations between components. Ids are stable
keys; titles are the human headlines reused in issue reports.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class Rule:
    id: str
    rule_class: int
    title: str
    description: str
    desired_resolution: str


_PRESENCE = [
    ("walls", "Wall"),
    ("doors", "Door"),
    ("windows", "Window"),
    ("slabs", "Slab"),
    ("roofs", "Roof"),
]

_INTERSECTION_PAIRS = [
    ("wall", "wall"),
    ("wall", "slab"),
    ("wall", "roof"),
    ("slab", "slab"),
    ("slab", "roof"),
    ("roof", "roof"),
    ("door", "door"),
    ("window", "window"),
    ("door", "window"),
    ("door", "wall"),
    ("window", "wall"),
]

_DUPLICATE_CATEGORIES = ["wall", "slab", "roof", "door", "window"]

_LABELS = {"wall": "Wall", "slab": "Slab", "roof": "Roof", "door": "Door", "window": "Window"}


def _build_catalog() -> tuple[Rule, ...]:
    rules: list[Rule] = []

    for key, label in _PRESENCE:
        rules.append(
            Rule(
                id=f"presence-{key}",
                rule_class=1,
                title=f"Model Should Have {label}s",
                description=f"The rule checks if {label.lower()} components are present in the model",
                desired_resolution="Create missing components based on the user's input",
            )
        )
    rules.append(
        Rule(
            id="presence-spaces",
            rule_class=1,
            title="Model Should Have Spaces",
            description="The rule checks if functional areas (spaces) are present in the model",
            desired_resolution="Create meaningful functional areas in the building by considering building requirements",
        )
    )
    rules.append(
        Rule(
            id="guid-unique",
            rule_class=1,
            title="Components Should Have Unique GUIDs",
            description="The rule checks if all components have a unique GUID",
            desired_resolution="Refine GUIDs of those components, which have not passed this rule",
        )
    )
    rules.append(
        Rule(
            id="spatial-structure",
            rule_class=1,
            title="Model Should Have A Spatial Breakdown Structure",
            description=(
                "The rule checks if the model has a spatial breakdown structure of site, building "
                "and building storeys, with every component assigned to a storey"
            ),
            desired_resolution="Create appropriate spatial containers and assign components accordingly",
        )
    )
    rules.append(
        Rule(
            id="opening-storey-match",
            rule_class=1,
            title="Doors And Windows Should Be On The Same Floor As Their Wall",
            description="The rule checks if all doors and windows are on the same floor as the containing wall",
            desired_resolution="Re-assign spatial associations for each affected door or window",
        )
    )
    rules.append(
        Rule(
            id="layer-information",
            rule_class=1,
            title="Components Should Have Layer Information",
            description="The rule checks if each component has layer information attached to it",
            desired_resolution="Add layer information to affected components",
        )
    )
    rules.append(
        Rule(
            id="description-uuid",
            rule_class=2,
            title="Component Descriptions Should Match The UUID Pattern",
            description=(
                "The rule checks if the description value of all building components is set and "
                "the value complies with the pattern of a UUID"
            ),
            desired_resolution=(
                "Set the kernel-internal ID into the description field of those components, "
                "which have not passed this rule"
            ),
        )
    )
    for a, b in _INTERSECTION_PAIRS:
        rules.append(
            Rule(
                id=f"intersect-{a}-{b}",
                rule_class=3,
                title=f"{_LABELS[a]}-{_LABELS[b]} Intersection",
                description="The rule checks if a component intersects with another component",
                desired_resolution="Reposition the components to avoid intersection",
            )
        )
    for category in _DUPLICATE_CATEGORIES:
        rules.append(
            Rule(
                id=f"duplicate-{category}",
                rule_class=3,
                title=f"Duplicate {_LABELS[category]}s",
                description="The rule checks if two components duplicate each other",
                desired_resolution="Remove one of the components",
            )
        )
    rules.append(
        Rule(
            id="roof-support",
            rule_class=3,
            title="Roofs Should Be Supported By Walls",
            description=(
                "The rule checks the connection between two components: roofs must be connected "
                "to the walls on the uppermost floor"
            ),
            desired_resolution="Move the roofs to the top of the support walls",
        )
    )
    rules.append(
        Rule(
            id="slab-support",
            rule_class=3,
            title="Slabs Should Be Supported By Walls",
            description="The rule checks the connection between two components: slabs must be connected to supporting walls",
            desired_resolution="Move the slabs to the top of the support walls",
        )
    )
    rules.append(
        Rule(
            id="orphan-openings",
            rule_class=3,
            title="No Orphan Doors Or Windows",
            description=(
                "The rule checks that the model doesn't contain any orphan doors or windows "
                "(a door or a window, which doesn't have a relation to any wall)"
            ),
            desired_resolution="Remove the orphan doors or windows",
        )
    )
    return tuple(rules)


RULES: tuple[Rule, ...] = _build_catalog()
RULE_COUNT = len(RULES)
RULE_INDEX: dict[str, Rule] = {rule.id: rule for rule in RULES}

assert RULE_COUNT == 30, f"rule catalog must hold exactly 30 rules, found {RULE_COUNT}"


def catalog_manifest() -> list[dict]:
    """Machine-readable rule manifest (id, class, title, resolution)."""
    return [asdict(rule) for rule in RULES]
