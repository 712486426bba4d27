"""Concrete finite groups and their subgroup lattice.

Groups are realized as permutation groups on a finite domain.  Elements are
integer indices 0..order-1 with index 0 the identity; the composition
convention is (f*g)(x) = f(g(x)), i.e. g acts first.  Element numbering is
canonical: the identity gets index 0 and the remaining elements are sorted
by their image tuple, so two constructions of the same permutation set
produce the identical group object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import lcm

from .errors import GroupTooLarge, MalformedCycle, UnknownSpec

DEFAULT_MAX_ORDER = 5040
DEFAULT_MAX_SUBGROUPS = 50_000


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its element permutations on a fixed domain."""

    name: str = field(compare=False)
    perms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.perms:
            raise ValueError("a group needs at least the identity element")
        identity = tuple(range(len(self.perms[0])))
        if self.perms[0] != identity:
            raise ValueError("element 0 must be the identity permutation")
        if len(set(self.perms)) != len(self.perms):
            raise ValueError("duplicate permutations")

    @property
    def order(self) -> int:
        return len(self.perms)

    @property
    def domain_size(self) -> int:
        return len(self.perms[0])

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def permutation_images(self) -> tuple[tuple[int, ...], ...]:
        return self.perms

    @cached_property
    def _perm_index(self) -> dict[tuple[int, ...], int]:
        return {p: i for i, p in enumerate(self.perms)}

    @cached_property
    def _rows(self) -> dict[int, tuple[int, ...]]:
        # composition-table rows, filled on demand
        return {}

    def _row(self, a: int) -> tuple[int, ...]:
        row = self._rows.get(a)
        if row is None:
            pa = self.perms[a]
            idx = self._perm_index
            row = tuple(idx[tuple(pa[x] for x in pb)] for pb in self.perms)
            self._rows[a] = row
        return row

    def op(self, a: int, b: int) -> int:
        """Index of the composition a*b (b applied first)."""
        return self._row(a)[b]

    @cached_property
    def compose(self) -> tuple[tuple[int, ...], ...]:
        """The full order x order composition table."""
        return tuple(self._row(a) for a in self.elements)

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        idx = self._perm_index
        out = []
        for p in self.perms:
            inv = [0] * len(p)
            for i, j in enumerate(p):
                inv[j] = i
            out.append(idx[tuple(inv)])
        return tuple(out)

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.op(self.op(g, x), self.inverse[g])

    def element_order(self, a: int) -> int:
        # lcm of cycle lengths; avoids touching the composition table
        perm = self.perms[a]
        seen = [False] * len(perm)
        total = 1
        for start in range(len(perm)):
            if seen[start]:
                continue
            length, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = perm[x]
                length += 1
            total = lcm(total, length)
        return total

    @cached_property
    def exponent(self) -> int:
        return lcm(*(self.element_order(a) for a in self.elements))

    def is_subgroup_set(self, elems: frozenset[int]) -> bool:
        if 0 not in elems or not all(0 <= x < self.order for x in elems):
            return False
        return all(self.op(a, b) in elems for a in elems for b in elems)

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its element-index set."""

    elements: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __repr__(self):
        return f"Subgroup({list(self.indices)})"


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of subgroups."""

    representative: Subgroup
    members: tuple[Subgroup, ...]
    normalizer_order: int
    weyl_order: int

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def subgroup_order(self) -> int:
        return self.representative.order


@dataclass(frozen=True)
class SubgroupClassTable:
    """All subgroup conjugacy classes of a group, in the canonical total order.

    Classes are sorted by (subgroup order, lexicographically smallest member
    index tuple), which refines containment-up-to-conjugacy: a class can only
    contain into classes of equal or larger subgroup order, and equal-order
    containment forces conjugacy.  Class 0 is the trivial subgroup and class
    N-1 is the whole group.

    containment_counts[i][j] counts the members of class j that contain the
    fixed representative of class i.
    """

    group: FiniteGroup
    classes: tuple[SubgroupClass, ...]
    containment_counts: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.classes)

    @cached_property
    def order_relation(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(c > 0 for c in row) for row in self.containment_counts)

    @cached_property
    def class_index_by_elements(self) -> dict[frozenset[int], int]:
        """Lookup from any subgroup's element set to its class index."""
        out = {}
        for i, cls in enumerate(self.classes):
            for member in cls.members:
                out[member.elements] = i
        return out

    @cached_property
    def labels(self) -> tuple[str, ...]:
        """Human-readable class labels "order.position", 1-based per order."""
        seen: dict[int, int] = {}
        out = []
        for cls in self.classes:
            k = cls.subgroup_order
            seen[k] = seen.get(k, 0) + 1
            out.append(f"{k}.{seen[k]}")
        return tuple(out)

    def __repr__(self):
        return f"SubgroupClassTable({self.group.name!r}, N={self.size})"


# ---------------------------------------------------------------------------
# construction


def _cycles_to_image(domain_size: int, cycles) -> tuple[int, ...]:
    image = list(range(domain_size))
    seen: set[int] = set()
    for cycle in cycles:
        for pt in cycle:
            if not isinstance(pt, int) or not 1 <= pt <= domain_size:
                raise MalformedCycle(f"point {pt!r} outside domain 1..{domain_size}")
            if pt in seen:
                raise MalformedCycle(f"point {pt} appears twice in one generator")
            seen.add(pt)
        for a, b in zip(cycle, cycle[1:] + type(cycle)(cycle[:1])):
            image[a - 1] = b - 1
    return tuple(image)


def _close_permutations(gens: list[tuple[int, ...]], max_order: int) -> set[tuple[int, ...]]:
    identity = tuple(range(len(gens[0])))
    els = {identity}
    frontier = [identity]
    for g in gens:
        if g not in els:
            els.add(g)
            frontier.append(g)
    while frontier:
        new = []
        for g in gens:
            for p in frontier:
                q = tuple(g[x] for x in p)
                if q not in els:
                    els.add(q)
                    new.append(q)
                    if len(els) > max_order:
                        raise GroupTooLarge(f"closure exceeds {max_order} elements")
        frontier = new
    return els


def _from_permutation_set(perms: set[tuple[int, ...]], name: str) -> FiniteGroup:
    identity = tuple(range(len(next(iter(perms)))))
    rest = sorted(p for p in perms if p != identity)
    return FiniteGroup(name=name, perms=(identity, *rest))


def group_from_generators(
    domain_size: int,
    generators,
    name: str = "group",
    max_order: int = DEFAULT_MAX_ORDER,
) -> FiniteGroup:
    """Close a list of permutations (disjoint-cycle form, 1-based) into a group.

    Each generator is a list of cycles; cycles within one generator must be
    disjoint.  Raises MalformedCycle on bad input and GroupTooLarge when the
    closure exceeds ``max_order``.
    """
    if domain_size < 1:
        raise MalformedCycle("domain size must be positive")
    if not generators:
        raise MalformedCycle("generator list is empty")
    gens = [_cycles_to_image(domain_size, g) for g in generators]
    return _from_permutation_set(_close_permutations(gens, max_order), name)


def _group_from_images(images, name, max_order):
    return _from_permutation_set(_close_permutations(list(images), max_order), name)


def _cyclic(n: int, max_order: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup(name="cyclic:1", perms=((0,),))
    cycle = tuple((i + 1) % n for i in range(n))
    return _group_from_images([cycle], f"cyclic:{n}", max_order)


def _dihedral(n: int, max_order: int) -> FiniteGroup:
    if n == 2:
        # the 2-gon reflection degenerates, so realize the Klein group on 4 points
        return _group_from_images([(1, 0, 2, 3), (0, 1, 3, 2)], "dihedral:2", max_order)
    rot = tuple((i + 1) % n for i in range(n))
    refl = tuple((n - i) % n for i in range(n))
    return _group_from_images([rot, refl], f"dihedral:{n}", max_order)


def _symmetric(n: int, max_order: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup(name="symmetric:1", perms=((0,),))
    gens = [(1, 0) + tuple(range(2, n)), tuple((i + 1) % n for i in range(n))]
    return _group_from_images(gens, f"symmetric:{n}", max_order)


def _alternating(n: int, max_order: int) -> FiniteGroup:
    if n <= 2:
        return FiniteGroup(name=f"alternating:{n}", perms=(tuple(range(max(n, 1))),))
    three = (1, 2, 0) + tuple(range(3, n))
    if n == 3:
        gens = [three]
    elif n % 2 == 1:
        gens = [three, tuple((i + 1) % n for i in range(n))]
    else:
        gens = [three, (0,) + tuple(1 + (i % (n - 1)) for i in range(1, n))]
    return _group_from_images(gens, f"alternating:{n}", max_order)


def _quaternion8(max_order: int) -> FiniteGroup:
    # unit quaternions 1,-1,i,-i,j,-j,k,-k as indices 0..7; generators are
    # left multiplication by i and by j
    left_i = (2, 3, 1, 0, 6, 7, 5, 4)
    left_j = (4, 5, 7, 6, 1, 0, 2, 3)
    return _group_from_images([left_i, left_j], "quaternion:8", max_order)


def _direct_product(parts: list[FiniteGroup], name: str, max_order: int) -> FiniteGroup:
    total = 1
    for p in parts:
        total *= p.order
        if total > max_order:
            raise GroupTooLarge(f"product order exceeds {max_order}")
    perms = [()]
    for part in parts:
        offset = len(perms[0])
        perms = [
            p + tuple(x + offset for x in q)
            for p in perms
            for q in part.perms
        ]
    return _from_permutation_set(set(perms), name)


@lru_cache(maxsize=None)
def catalog_group(spec: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build a named catalog group on its canonical permutation realization.

    Grammar: cyclic:n (n>=1), dihedral:n (order 2n, n>=2), symmetric:n (n<=7),
    alternating:n (n<=7), quaternion:8, or product:spec*spec[*spec...] where
    each factor is one of the non-product forms.
    """
    spec = spec.strip()
    if spec.startswith("product:"):
        body = spec[len("product:"):]
        factor_specs = body.split("*")
        if len(factor_specs) < 2:
            raise UnknownSpec(f"product needs at least two factors: {spec!r}")
        parts = [catalog_group(f, max_order) for f in factor_specs]
        return _direct_product(parts, spec, max_order)

    kind, sep, arg = spec.partition(":")
    if not sep or not arg.isdigit():
        raise UnknownSpec(f"unrecognized group spec {spec!r}")
    n = int(arg)
    if kind == "cyclic" and n >= 1:
        return _cyclic(n, max_order)
    if kind == "dihedral" and n >= 2:
        return _dihedral(n, max_order)
    if kind == "symmetric" and 1 <= n <= 7:
        return _symmetric(n, max_order)
    if kind == "alternating" and 1 <= n <= 7:
        return _alternating(n, max_order)
    if kind == "quaternion" and n == 8:
        return _quaternion8(max_order)
    raise UnknownSpec(f"unrecognized group spec {spec!r}")


# ---------------------------------------------------------------------------
# subgroup lattice


def _closure_of(group: FiniteGroup, seed: frozenset[int]) -> frozenset[int]:
    els = set(seed) | {0}
    gens = sorted(els)
    frontier = list(els)
    while frontier:
        new = []
        for g in gens:
            for x in frontier:
                y = group.op(g, x)
                if y not in els:
                    els.add(y)
                    new.append(y)
        frontier = new
    return frozenset(els)


def _all_subgroups(group: FiniteGroup, max_subgroups: int) -> list[frozenset[int]]:
    # seed with every cyclic subgroup, then close under joins <H, g>
    subs: set[frozenset[int]] = {frozenset([0])}
    for g in group.elements:
        powers = {0}
        x = g
        while x != 0:
            powers.add(x)
            x = group.op(x, g)
        subs.add(frozenset(powers))

    done: set[tuple[frozenset[int], int]] = set()
    while True:
        added = False
        for sub in sorted(subs, key=lambda s: (len(s), sorted(s))):
            for g in group.elements:
                if g in sub or (sub, g) in done:
                    continue
                done.add((sub, g))
                join = _closure_of(group, sub | {g})
                if join not in subs:
                    subs.add(join)
                    added = True
                    if len(subs) > max_subgroups:
                        raise GroupTooLarge(f"more than {max_subgroups} subgroups")
        if not added:
            break
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


@lru_cache(maxsize=None)
def subgroup_classes(
    group: FiniteGroup, max_subgroups: int = DEFAULT_MAX_SUBGROUPS
) -> SubgroupClassTable:
    """Enumerate all subgroups of ``group`` grouped into conjugacy classes.

    Returns the canonical class table with normalizer and Weyl orders and the
    containment-count matrix.  Deterministic: repeated runs give equal tables.
    """
    subs = _all_subgroups(group, max_subgroups)
    inv = group.inverse

    remaining = set(subs)
    raw_classes: list[list[frozenset[int]]] = []
    while remaining:
        rep = min(remaining, key=lambda s: (len(s), sorted(s)))
        orbit = {rep}
        for g in group.elements:
            gi = inv[g]
            conj = frozenset(group.op(group.op(g, x), gi) for x in rep)
            orbit.add(conj)
        assert orbit <= remaining, "conjugation left the enumerated subgroup set"
        remaining -= orbit
        raw_classes.append(sorted(orbit, key=sorted))

    entries = []
    for members in raw_classes:
        rep = members[0]
        normalizer = sum(
            1
            for g in group.elements
            if frozenset(group.op(group.op(g, x), inv[g]) for x in rep) == rep
        )
        assert normalizer * len(members) == group.order
        order = len(rep)
        assert normalizer % order == 0
        entries.append(
            SubgroupClass(
                representative=Subgroup(rep),
                members=tuple(Subgroup(m) for m in members),
                normalizer_order=normalizer,
                weyl_order=normalizer // order,
            )
        )

    entries.sort(key=lambda c: (c.subgroup_order, c.representative.indices))
    n = len(entries)

    counts = []
    for i in range(n):
        rep = entries[i].representative.elements
        counts.append(
            tuple(
                sum(1 for m in entries[j].members if rep <= m.elements)
                for j in range(n)
            )
        )

    table = SubgroupClassTable(
        group=group, classes=tuple(entries), containment_counts=tuple(counts)
    )

    assert table.classes[0].subgroup_order == 1
    assert table.classes[-1].subgroup_order == group.order
    for i in range(n):
        assert counts[i][i] == 1
        assert counts[0][i] == entries[i].size
        for j in range(i):
            assert counts[i][j] == 0, "listed order does not refine containment"
    return table
