"""Finite G-sets: coset spaces, products, fixed points, isotropy census.

This is the brute-force side of the package: everything here is computed by
direct enumeration of points and orbits, so it can serve as an independent
oracle for the triangular recurrences elsewhere.  Only finite G-sets appear;
that is the only case Burnside-ring arithmetic needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GroupMismatch, NotASubgroup
from .groups import FiniteGroup, Subgroup, SubgroupClassTable


@dataclass(frozen=True)
class GSet:
    """A finite set with a group action; action[g][p] is the image of point p."""

    group: FiniteGroup = field(compare=False)
    action: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.action[0])

    def __repr__(self):
        return f"GSet(size={self.size}, group={self.group.name!r})"


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def coset_space(group: FiniteGroup, sub: Subgroup) -> GSet:
    """The left cosets gH with g acting by left translation."""
    if not group.is_subgroup_set(sub.elements):
        raise NotASubgroup(f"{sub!r} is not a subgroup of {group.name}")
    cosets: dict[frozenset[int], int] = {}
    reps: list[int] = []
    point_of_element: dict[int, int] = {}
    for g in group.elements:
        coset = frozenset(group.op(g, h) for h in sub.elements)
        if coset not in cosets:
            cosets[coset] = len(reps)
            reps.append(min(coset))
    # renumber so points are sorted by coset representative
    order = sorted(range(len(reps)), key=lambda i: reps[i])
    rank = {old: new for new, old in enumerate(order)}
    for coset, i in cosets.items():
        for x in coset:
            point_of_element[x] = rank[i]
    reps = [reps[i] for i in order]
    action = tuple(
        tuple(point_of_element[group.op(g, reps[p])] for p in range(len(reps)))
        for g in group.elements
    )
    labels = tuple(f"{r}H" for r in reps)
    return GSet(group=group, action=action, labels=labels)


def regular_gset(group: FiniteGroup) -> GSet:
    return coset_space(group, Subgroup(frozenset([0])))


def product(x: GSet, y: GSet) -> GSet:
    """Cartesian product with the diagonal action."""
    if x.group != y.group:
        raise GroupMismatch("product of G-sets over different groups")
    ny = y.size
    action = tuple(
        tuple(gx[p] * ny + gy[q] for p in range(x.size) for q in range(ny))
        for gx, gy in zip(x.action, y.action)
    )
    return GSet(group=x.group, action=action)


def fixed_points(x: GSet, sub: Subgroup) -> int:
    """|X^H|: the number of points fixed by every element of the subgroup."""
    if not x.group.is_subgroup_set(sub.elements):
        raise GroupMismatch(f"{sub!r} is not a subgroup of {x.group.name}")
    count = 0
    rows = [x.action[h] for h in sub.elements]
    for p in range(x.size):
        if all(row[p] == p for row in rows):
            count += 1
    return count


def isotropy(x: GSet, point: int) -> frozenset[int]:
    return frozenset(g for g in x.group.elements if x.action[g][point] == point)


def orbits(x: GSet) -> list[list[int]]:
    """Orbits of the action, each sorted, ordered by smallest point."""
    uf = _UnionFind(x.size)
    for row in x.action:
        for p in range(x.size):
            uf.union(p, row[p])
    buckets: dict[int, list[int]] = {}
    for p in range(x.size):
        buckets.setdefault(uf.find(p), []).append(p)
    return [buckets[r] for r in sorted(buckets)]


def isotropy_census(x: GSet, classes: SubgroupClassTable) -> tuple[tuple[int, int], ...]:
    """Per subgroup class: (points of that orbit type, orbits of that type).

    Each point's isotropy subgroup is classified through the class table's
    lookup, and orbits are computed by union-find; the census checks that
    every orbit of type (H) has exactly |G|/|H| points.
    """
    if x.group != classes.group:
        raise GroupMismatch("G-set and class table belong to different groups")
    lookup = classes.class_index_by_elements
    class_of_point = [lookup[isotropy(x, p)] for p in range(x.size)]

    n = classes.size
    point_counts = [0] * n
    orbit_counts = [0] * n
    for p in range(x.size):
        point_counts[class_of_point[p]] += 1
    for orbit in orbits(x):
        kinds = {class_of_point[p] for p in orbit}
        assert len(kinds) == 1, "orbit mixes isotropy classes"
        k = kinds.pop()
        assert len(orbit) * classes.classes[k].subgroup_order == x.group.order
        orbit_counts[k] += 1
    for k in range(n):
        assert orbit_counts[k] * x.group.order == point_counts[k] * classes.classes[k].subgroup_order
    return tuple(zip(point_counts, orbit_counts))


def burnside_linearization(x: GSet, classes: SubgroupClassTable):
    """The G-set's class in the Burnside ring: orbit counts per orbit type."""
    from .ring import BurnsideElement

    census = isotropy_census(x, classes)
    return BurnsideElement(coeffs=tuple(c for _, c in census), table=classes)
