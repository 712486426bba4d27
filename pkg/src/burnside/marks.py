"""The table of marks: fixed-coset counts for all pairs of subgroup classes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .errors import NotASubgroup
from .groups import FiniteGroup, Subgroup, SubgroupClassTable
from .gsets import coset_space, fixed_points


@dataclass(frozen=True)
class MarksMatrix:
    """entries[i][j] = m(H_i, H_j) = number of cosets in G/H_j fixed by H_i.

    Upper triangular in the canonical class order, with |W(H_i)| on the
    diagonal, the subgroup indices [G:H_j] in the first row and a final
    column of ones.
    """

    classes: SubgroupClassTable
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def determinant(self) -> int:
        return prod(self.entries[i][i] for i in range(self.size))

    def __repr__(self):
        return f"MarksMatrix(N={self.size}, group={self.classes.group.name!r})"


def mark(group: FiniteGroup, h: Subgroup, k: Subgroup) -> int:
    """m(H, K): cosets of K fixed pointwise by H, counted directly."""
    if not group.is_subgroup_set(h.elements):
        raise NotASubgroup(f"{h!r} is not a subgroup of {group.name}")
    return fixed_points(coset_space(group, k), h)


@lru_cache(maxsize=None)
def table_of_marks(classes: SubgroupClassTable) -> MarksMatrix:
    """Marks for all pairs of class representatives, by direct coset counting."""
    group = classes.group
    n = classes.size
    spaces = [coset_space(group, classes.classes[j].representative) for j in range(n)]
    entries = tuple(
        tuple(fixed_points(spaces[j], classes.classes[i].representative) for j in range(n))
        for i in range(n)
    )
    for i in range(n):
        assert entries[i][i] == classes.classes[i].weyl_order
        assert entries[i][n - 1] == 1
        assert entries[0][i] == group.order // classes.classes[i].subgroup_order
        for j in range(i):
            assert entries[i][j] == 0, "marks matrix must be upper triangular"
    return MarksMatrix(classes=classes, entries=entries)
