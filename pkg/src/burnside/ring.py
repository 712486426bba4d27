"""Burnside ring arithmetic over the subgroup-class basis.

Elements are integer coefficient vectors over the classes (H_1)...(H_N).
The multiplication tensor is built from the table of marks by the triangular
recurrence

    n[i,j,k] = (psi[k][i]*psi[k][j] - sum_{l>k} n[i,j,l]*psi[k][l]) / psi[k][k]

processed for k from N-1 down to 0; every division must be exact.  The ghost
map a -> psi @ a turns ring products into componentwise products, and units
are exactly the elements whose ghost vector is a sign pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import CapExceeded, GroupMismatch, InexactDivision, NotIntegral
from .groups import SubgroupClassTable
from .marks import MarksMatrix

DEFAULT_MAX_UNIT_CLASSES = 25


@dataclass(frozen=True)
class BurnsideElement:
    """Integer coefficients over the subgroup-class basis of one group."""

    table: SubgroupClassTable
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.table.size:
            raise GroupMismatch("coefficient length does not match the class table")

    def _check(self, other: BurnsideElement) -> None:
        if self.table is not other.table and self.table != other.table:
            raise GroupMismatch("elements belong to different class tables")

    def __add__(self, other: BurnsideElement) -> BurnsideElement:
        self._check(other)
        return BurnsideElement(self.table, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: BurnsideElement) -> BurnsideElement:
        self._check(other)
        return BurnsideElement(self.table, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> BurnsideElement:
        return BurnsideElement(self.table, tuple(-a for a in self.coeffs))

    def __repr__(self):
        return f"BurnsideElement{self.coeffs}"


@dataclass(frozen=True)
class GhostVector:
    """An element of Z^N under the componentwise (Hadamard) product."""

    table: SubgroupClassTable
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.table.size:
            raise GroupMismatch("value length does not match the class table")

    def hadamard(self, other: GhostVector) -> GhostVector:
        if self.table is not other.table and self.table != other.table:
            raise GroupMismatch("ghost vectors belong to different class tables")
        return GhostVector(self.table, tuple(a * b for a, b in zip(self.values, other.values)))

    def __repr__(self):
        return f"GhostVector{self.values}"


@dataclass(frozen=True)
class MultTensor:
    """entries[i][j][k]: multiplicity of (H_k) in the product (H_i)*(H_j)."""

    classes: SubgroupClassTable
    entries: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)


def basis_element(table: SubgroupClassTable, index: int) -> BurnsideElement:
    coeffs = [0] * table.size
    coeffs[index] = 1
    return BurnsideElement(table, tuple(coeffs))


def identity_element(table: SubgroupClassTable) -> BurnsideElement:
    """The class (G), which is the ring identity."""
    return basis_element(table, table.size - 1)


@lru_cache(maxsize=None)
def mult_tensor(psi: MarksMatrix) -> MultTensor:
    """Build the full multiplication tensor from the table of marks."""
    n = psi.size
    m = psi.entries
    tensor = [[[0] * n for _ in range(n)] for _ in range(n)]
    for k in range(n - 1, -1, -1):
        diag = m[k][k]
        for i in range(n):
            for j in range(n):
                num = m[k][i] * m[k][j]
                row = tensor[i][j]
                for l in range(k + 1, n):
                    num -= row[l] * m[k][l]
                q, r = divmod(num, diag)
                if r:
                    raise InexactDivision(
                        f"tensor entry [{i},{j},{k}] is not integral (remainder {r})"
                    )
                row[k] = q
    counts = psi.classes.containment_counts
    for i in range(n):
        for j in range(n):
            assert tensor[i][j] == tensor[j][i]
            assert tensor[n - 1][j][i] == (1 if i == j else 0)
            for k in range(n):
                if counts[k][i] == 0 or counts[k][j] == 0:
                    assert tensor[i][j][k] == 0
    return MultTensor(
        classes=psi.classes,
        entries=tuple(tuple(tuple(row) for row in plane) for plane in tensor),
    )


def multiply(a: BurnsideElement, b: BurnsideElement, tensor: MultTensor) -> BurnsideElement:
    """Bilinear product through the multiplication tensor."""
    a._check(b)
    if a.table is not tensor.classes and a.table != tensor.classes:
        raise GroupMismatch("tensor belongs to a different class table")
    n = tensor.size
    out = [0] * n
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j, bj in enumerate(b.coeffs):
            if not bj:
                continue
            scale = ai * bj
            row = tensor.entries[i][j]
            for k in range(n):
                if row[k]:
                    out[k] += scale * row[k]
    return BurnsideElement(a.table, tuple(out))


def ghost_map(psi: MarksMatrix, a: BurnsideElement) -> GhostVector:
    """The mark homomorphism: v = psi @ coeffs."""
    if a.table is not psi.classes and a.table != psi.classes:
        raise GroupMismatch("element and marks matrix belong to different tables")
    values = tuple(
        sum(m_ij * c for m_ij, c in zip(row, a.coeffs)) for row in psi.entries
    )
    return GhostVector(psi.classes, values)


def ghost_preimage(psi: MarksMatrix, v: GhostVector | Iterable[int]) -> BurnsideElement:
    """Invert the mark homomorphism by back-substitution.

    Raises NotIntegral (with the first failing class index, scanning from the
    whole-group class downward) when the vector is not in the image; that is
    a legitimate outcome, not a fault.
    """
    values = tuple(v.values) if isinstance(v, GhostVector) else tuple(v)
    n = psi.size
    if len(values) != n:
        raise GroupMismatch("ghost vector length does not match the marks matrix")
    m = psi.entries
    coeffs = [0] * n
    for i in range(n - 1, -1, -1):
        num = values[i] - sum(m[i][j] * coeffs[j] for j in range(i + 1, n))
        q, r = divmod(num, m[i][i])
        if r:
            raise NotIntegral(i)
        coeffs[i] = q
    return BurnsideElement(psi.classes, tuple(coeffs))


def is_unit(a: BurnsideElement, psi: MarksMatrix) -> bool:
    """True iff every ghost component is +1 or -1."""
    return all(x in (1, -1) for x in ghost_map(psi, a).values)


def enumerate_units(
    psi: MarksMatrix, max_classes: int = DEFAULT_MAX_UNIT_CLASSES
) -> list[BurnsideElement]:
    """All units, by depth-first search over ghost sign patterns.

    Signs are assigned from the whole-group class downward with
    back-substitution after each choice; a branch dies at the first
    non-integral division.  The search is generator-agnostic, so it can
    refute as well as confirm any claimed generating set.  Results are
    sorted by coefficient vector.
    """
    n = psi.size
    if n > max_classes:
        raise CapExceeded(f"{n} classes exceeds the unit-search cap {max_classes}")
    m = psi.entries
    coeffs = [0] * n
    found: list[tuple[int, ...]] = []

    def descend(i: int) -> None:
        if i < 0:
            found.append(tuple(coeffs))
            return
        partial = sum(m[i][j] * coeffs[j] for j in range(i + 1, n))
        for eps in (1, -1):
            q, r = divmod(eps - partial, m[i][i])
            if r == 0:
                coeffs[i] = q
                descend(i - 1)
        coeffs[i] = 0

    descend(n - 1)
    found.sort()
    return [BurnsideElement(psi.classes, c) for c in found]
