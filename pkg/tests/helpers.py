"""Shared fixtures: cached pipelines and the catalog lists under test."""

from functools import lru_cache

from burnside import catalog_group
from burnside.pipeline import Pipeline

# representative catalog groups, used wherever a criterion says "every
# catalog group of order <= 16 / 24"
CATALOG_LE_16 = [
    *[f"cyclic:{n}" for n in range(1, 17)],
    *[f"dihedral:{n}" for n in range(2, 9)],
    "symmetric:2",
    "symmetric:3",
    "alternating:3",
    "alternating:4",
    "quaternion:8",
    "product:cyclic:2*cyclic:2",
    "product:cyclic:2*cyclic:4",
    "product:cyclic:3*cyclic:3",
    "product:cyclic:2*cyclic:2*cyclic:2",
    "product:cyclic:2*cyclic:6",
    "product:cyclic:4*cyclic:4",
    "product:cyclic:2*quaternion:8",
    "product:cyclic:2*dihedral:4",
]

CATALOG_LE_24 = CATALOG_LE_16 + [
    *[f"cyclic:{n}" for n in range(17, 25)],
    *[f"dihedral:{n}" for n in range(9, 13)],
    "symmetric:4",
    "product:cyclic:2*symmetric:3",
    "product:cyclic:3*symmetric:3",
    "product:cyclic:2*alternating:4",
    "product:cyclic:2*cyclic:10",
    "product:cyclic:2*cyclic:12",
    "product:cyclic:2*cyclic:2*cyclic:6",
    "product:cyclic:2*dihedral:6",
]

# the one group in the list whose unit group provably exceeds what basic
# degrees generate; every other listed group factors completely
KNOWN_COUNTEREXAMPLES = {"symmetric:4"}


@lru_cache(maxsize=None)
def pipe(spec: str) -> Pipeline:
    return Pipeline(catalog_group(spec), max_unit_classes=40)


def subgroup_by_order(pipeline: Pipeline, order: int, which: int = 0):
    """The representative of the which-th class of subgroups of a given order."""
    hits = [c for c in pipeline.classes.classes if c.subgroup_order == order]
    return hits[which].representative
