"""Lazy per-group pipeline: each stage is computed once and memoized."""

from __future__ import annotations

from functools import cached_property

from .characters import (
    CharacterTable,
    FixedDimMatrix,
    RealIrrepSet,
    character_table,
    fixed_dim_matrix,
    real_irreducibles,
)
from .degrees import BasicDegree, all_basic_degrees
from .groups import (
    DEFAULT_MAX_ORDER,
    DEFAULT_MAX_SUBGROUPS,
    FiniteGroup,
    SubgroupClassTable,
    subgroup_classes,
)
from .marks import MarksMatrix, table_of_marks
from .ring import DEFAULT_MAX_UNIT_CLASSES, MultTensor, mult_tensor


class Pipeline:
    """Holds a group and memoizes every derived structure on first use."""

    def __init__(
        self,
        group: FiniteGroup,
        max_order: int = DEFAULT_MAX_ORDER,
        max_subgroups: int = DEFAULT_MAX_SUBGROUPS,
        max_unit_classes: int = DEFAULT_MAX_UNIT_CLASSES,
    ):
        self.group = group
        self.max_order = max_order
        self.max_subgroups = max_subgroups
        self.max_unit_classes = max_unit_classes

    @cached_property
    def classes(self) -> SubgroupClassTable:
        return subgroup_classes(self.group, self.max_subgroups)

    @cached_property
    def psi(self) -> MarksMatrix:
        return table_of_marks(self.classes)

    @cached_property
    def tensor(self) -> MultTensor:
        return mult_tensor(self.psi)

    @cached_property
    def chartable(self) -> CharacterTable:
        return character_table(self.group, self.max_order)

    @cached_property
    def irreps(self) -> RealIrrepSet:
        return real_irreducibles(self.chartable)

    @cached_property
    def fixed_dims(self) -> FixedDimMatrix:
        return fixed_dim_matrix(self.irreps, self.classes)

    @cached_property
    def basics(self) -> list[BasicDegree]:
        return all_basic_degrees(self.fixed_dims, self.psi, self.classes)
