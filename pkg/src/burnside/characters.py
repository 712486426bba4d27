"""Complex character tables, real irreducibles, and fixed-point dimensions.

The complex table is computed with Dixon's variant of Burnside's algorithm:
the class-sum multiplication matrices are simultaneously diagonalized over a
prime field GF(p) with p = 1 (mod exp(G)) and p > 2*sqrt(|G|), degrees are
recovered from the orthogonality relation, and the mod-p values are lifted
to complex numbers through eigenvalue multiplicities of an order-e root of
unity.  All integer extractions are round-then-verify with a 1e-6 residual
gate; the only floating point anywhere is in the final character values.

Real irreducibles are obtained from the complex rows by Frobenius-Schur
type: orthogonal rows stand alone, conjugate pairs merge, quaternionic rows
double.  Their fixed-point dimensions over the subgroup classes form the
integer matrix that drives the degree recurrences downstream.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt, sqrt

from .errors import (
    CapExceeded,
    GroupMismatch,
    NonIntegralDimension,
    NonIntegralIndicator,
    NonIntegralMultiplicity,
    UnpairedComplexCharacter,
)
from .groups import DEFAULT_MAX_ORDER, FiniteGroup, Subgroup, SubgroupClassTable
from .gsets import coset_space

_RESIDUAL = 1e-6

ORTHOGONAL = 1
COMPLEX = 0
QUATERNIONIC = -1


@dataclass(frozen=True)
class ElementClassInfo:
    """One conjugacy class of group elements."""

    rep: int
    size: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class CharacterTable:
    """All complex irreducible characters of a group.

    ``chars[r][c]`` is the value of row r on element class c; rows are sorted
    by (degree, descending value tuple) so the trivial character comes first.
    """

    group: FiniteGroup
    classes: tuple[ElementClassInfo, ...]
    chars: tuple[tuple[complex, ...], ...]
    degrees: tuple[int, ...]
    class_of: tuple[int, ...]

    @property
    def n_classes(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class RealIrrep:
    """A real irreducible character with its Frobenius-Schur provenance."""

    values: tuple[float, ...]
    fs_type: int
    real_dimension: int
    provenance: tuple[int, ...]


@dataclass(frozen=True)
class RealIrrepSet:
    table: CharacterTable
    irreps: tuple[RealIrrep, ...]

    @property
    def count(self) -> int:
        return len(self.irreps)

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(ir.real_dimension for ir in self.irreps)


@dataclass(frozen=True)
class FixedDimMatrix:
    """entries[i][k] = real dimension of the k-th irrep's H_i-fixed subspace."""

    classes: SubgroupClassTable
    irreps: RealIrrepSet
    entries: tuple[tuple[int, ...], ...]

    @property
    def n_classes(self) -> int:
        return len(self.entries)

    @property
    def n_irreps(self) -> int:
        return len(self.entries[0])


def element_classes(group: FiniteGroup) -> tuple[ElementClassInfo, ...]:
    """Conjugacy classes of elements, identity first, then (size, min member)."""
    seen = [False] * group.order
    out = []
    for x in group.elements:
        if seen[x]:
            continue
        orbit = sorted({group.conjugate(g, x) for g in group.elements})
        for y in orbit:
            seen[y] = True
        out.append(ElementClassInfo(rep=orbit[0], size=len(orbit), members=tuple(orbit)))
    out.sort(key=lambda c: (c.size, c.rep))
    assert out[0].rep == 0 and out[0].size == 1
    return tuple(out)


# ---------------------------------------------------------------------------
# GF(p) linear algebra (dense, small matrices)


def _det_mod(mat: list[list[int]], p: int) -> int:
    m = len(mat)
    a = [row[:] for row in mat]
    det = 1
    for c in range(m):
        pivot = next((r for r in range(c, m) if a[r][c] % p), None)
        if pivot is None:
            return 0
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det = (det * a[c][c]) % p
        inv = pow(a[c][c], p - 2, p)
        for r in range(c + 1, m):
            if a[r][c]:
                f = (a[r][c] * inv) % p
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return det % p


def _charpoly_mod(mat: list[list[int]], p: int) -> list[int]:
    """Coefficients of det(xI - M) mod p, ascending, via interpolation."""
    m = len(mat)
    if m == 0:
        return [1]
    ys = []
    for x in range(m + 1):
        shifted = [
            [(x - mat[r][c]) % p if r == c else (-mat[r][c]) % p for c in range(m)]
            for r in range(m)
        ]
        ys.append(_det_mod(shifted, p))
    # Lagrange interpolation through points (0..m, ys)
    coeffs = [0] * (m + 1)
    for i in range(m + 1):
        numer = [1]
        denom = 1
        for j in range(m + 1):
            if j == i:
                continue
            numer = [
                ((numer[t - 1] if t else 0) - j * (numer[t] if t < len(numer) else 0)) % p
                for t in range(len(numer) + 1)
            ]
            denom = (denom * (i - j)) % p
        scale = (ys[i] * pow(denom, p - 2, p)) % p
        for t, c in enumerate(numer):
            coeffs[t] = (coeffs[t] + scale * c) % p
    return coeffs


def _poly_roots_mod(coeffs: list[int], p: int) -> list[int]:
    degree = len(coeffs) - 1
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
            if len(roots) == degree:
                break
    return roots


def _rref_mod(mat: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    a = [row[:] for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((rr for rr in range(r, rows) if a[rr][c] % p), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for rr in range(rows):
            if rr != r and a[rr][c]:
                f = a[rr][c]
                a[rr] = [(x - f * y) % p for x, y in zip(a[rr], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def _kernel_mod(mat: list[list[int]], p: int) -> list[list[int]]:
    m = len(mat)
    rref, pivots = _rref_mod(mat, p)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * m
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-rref[r][f]) % p
        basis.append(v)
    return basis


def _coords_in_span(basis: list[list[int]], targets: list[list[int]], p: int) -> list[list[int]]:
    """Coordinates of each target vector in the given independent basis."""
    m = len(basis)
    k = len(basis[0])
    aug = [[basis[s][r] for s in range(m)] + [t[r] for t in targets] for r in range(k)]
    rref, pivots = _rref_mod(aug, p)
    assert pivots[:m] == list(range(m)), "basis is not independent"
    for r in range(m, k):
        assert all(x % p == 0 for x in rref[r][m:]), "target outside the span"
    return [[rref[s][m + t] for s in range(m)] for t in range(len(targets))]


# ---------------------------------------------------------------------------
# Dixon's algorithm


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def dixon_prime(group_order: int, exponent: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2*sqrt(group order)."""
    bound = 2 * sqrt(group_order)
    p = exponent + 1
    while p <= bound or not _is_prime(p):
        p += exponent
    return p


def _primitive_root(p: int) -> int:
    n = p - 1
    factors = set()
    m, f = n, 2
    while f * f <= m:
        while m % f == 0:
            factors.add(f)
            m //= f
        f += 1
    if m > 1:
        factors.add(m)
    for w in range(2, p):
        if all(pow(w, n // q, p) != 1 for q in factors):
            return w
    raise AssertionError("no primitive root found")


def _class_matrices(group: FiniteGroup, classes, class_of) -> list[list[list[int]]]:
    k = len(classes)
    inv = group.inverse
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    for m, cm in enumerate(classes):
        z = cm.rep
        for x in group.elements:
            i = class_of[x]
            j = class_of[group.op(inv[x], z)]
            a[i][j][m] += 1
    return a


def _central_characters(mats, k: int, p: int) -> list[list[int]]:
    """Simultaneous eigenvectors of the class matrices, scaled to 1 at class 0."""
    spaces: list[list[list[int]]] = [[[1 if r == c else 0 for r in range(k)] for c in range(k)]]
    for i in range(k):
        if all(len(b) == 1 for b in spaces):
            break
        a_i = mats[i]
        matrix = [[a_i[j][m] % p for m in range(k)] for j in range(k)]
        next_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                next_spaces.append(basis)
                continue
            images = [
                [sum(matrix[r][c] * v[c] for c in range(k)) % p for r in range(k)]
                for v in basis
            ]
            restr_cols = _coords_in_span(basis, images, p)
            m = len(basis)
            restr = [[restr_cols[t][s] for t in range(m)] for s in range(m)]
            split_total = 0
            for lam in sorted(_poly_roots_mod(_charpoly_mod(restr, p), p)):
                shifted = [
                    [(restr[r][c] - (lam if r == c else 0)) % p for c in range(m)]
                    for r in range(m)
                ]
                kernel = _kernel_mod(shifted, p)
                if not kernel:
                    continue
                sub_basis = [
                    [sum(kv[s] * basis[s][r] for s in range(m)) % p for r in range(k)]
                    for kv in kernel
                ]
                next_spaces.append(sub_basis)
                split_total += len(kernel)
            assert split_total == m, "class matrix is not diagonalizable"
        spaces = next_spaces
    assert all(len(b) == 1 for b in spaces) and len(spaces) == k
    out = []
    for basis in spaces:
        v = basis[0]
        assert v[0] % p != 0
        scale = pow(v[0], p - 2, p)
        out.append([(x * scale) % p for x in v])
    return out


@lru_cache(maxsize=None)
def character_table(group: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> CharacterTable:
    """The complete complex character table, via Dixon's algorithm."""
    if group.order > max_order:
        raise CapExceeded(f"group order {group.order} exceeds cap {max_order}")
    classes = element_classes(group)
    k = len(classes)
    class_of = [0] * group.order
    for idx, cl in enumerate(classes):
        for x in cl.members:
            class_of[x] = idx

    e = group.exponent
    p = dixon_prime(group.order, e)
    mats = _class_matrices(group, classes, class_of)
    omegas = _central_characters(mats, k, p)

    inv = group.inverse
    jstar = [class_of[inv[cl.rep]] for cl in classes]
    size_inv = [pow(cl.size, p - 2, p) for cl in classes]

    z = pow(_primitive_root(p), (p - 1) // e, p)
    zpow = [pow(z, t, p) for t in range(e)]
    inv_e = pow(e, p - 2, p)
    power_class = []
    for cl in classes:
        row, x = [], 0
        for _ in range(e):
            row.append(class_of[x])
            x = group.op(x, cl.rep)
        power_class.append(row)

    zeta = [cmath.exp(2j * cmath.pi * s / e) for s in range(e)]
    rows = []
    for omega in omegas:
        s_sum = sum(omega[j] * omega[jstar[j]] * size_inv[j] for j in range(k)) % p
        d_sq = (group.order * pow(s_sum, p - 2, p)) % p
        degree = next(d for d in range(1, isqrt(group.order) + 1) if d * d % p == d_sq)
        t = [degree * omega[j] * size_inv[j] % p for j in range(k)]
        values = []
        for j in range(k):
            mults = []
            for s in range(e):
                acc = sum(t[power_class[j][u]] * zpow[(-s * u) % e] for u in range(e))
                mults.append(acc * inv_e % p)
            assert sum(mults) == degree, "eigenvalue multiplicities do not sum to the degree"
            values.append(sum(m * zeta[s] for s, m in enumerate(mults)))
        assert abs(values[0] - degree) < 1e-9 * max(1, degree)
        rows.append((degree, tuple(values)))

    assert sum(d * d for d, _ in rows) == group.order
    assert all(group.order % d == 0 for d, _ in rows)
    rows.sort(key=lambda r: (r[0], tuple((-round(v.real, 9), -round(v.imag, 9)) for v in r[1])))
    assert all(abs(v - 1) < 1e-9 for v in rows[0][1]), "trivial character must sort first"
    return CharacterTable(
        group=group,
        classes=classes,
        chars=tuple(r[1] for r in rows),
        degrees=tuple(r[0] for r in rows),
        class_of=tuple(class_of),
    )


# ---------------------------------------------------------------------------
# real irreducibles


def _round_checked(value: float, error: type[Exception]) -> int:
    nearest = round(value)
    if abs(value - nearest) >= _RESIDUAL:
        raise error(f"value {value!r} is not integral")
    return int(nearest)


def frobenius_schur(table: CharacterTable, chi: tuple[complex, ...]) -> int:
    """(1/|G|) sum over g of chi(g^2), classifying the character's type."""
    group = table.group
    total = 0.0 + 0.0j
    for cl in table.classes:
        sq = table.class_of[group.op(cl.rep, cl.rep)]
        total += cl.size * chi[sq]
    if abs(total.imag) >= _RESIDUAL:
        raise NonIntegralIndicator(f"indicator has imaginary part {total.imag!r}")
    ind = _round_checked(total.real / group.order, NonIntegralIndicator)
    assert ind in (-1, 0, 1)
    return ind


def _conj_key(values, digits=6):
    return tuple((round(v.real, digits), round(-v.imag, digits)) for v in values)


def _key(values, digits=6):
    return tuple((round(v.real, digits), round(v.imag, digits)) for v in values)


def real_irreducibles(table: CharacterTable) -> RealIrrepSet:
    """Merge the complex rows into real irreducible characters.

    Orthogonal type keeps the row, complex type adds the conjugate partner
    (consuming both rows), quaternionic type doubles the row.
    """
    rows = table.chars
    consumed = [False] * len(rows)
    irreps = []
    for i, chi in enumerate(rows):
        if consumed[i]:
            continue
        consumed[i] = True
        fs = frobenius_schur(table, chi)
        if fs == ORTHOGONAL:
            assert all(abs(v.imag) < _RESIDUAL for v in chi)
            irreps.append(
                RealIrrep(
                    values=tuple(v.real for v in chi),
                    fs_type=ORTHOGONAL,
                    real_dimension=table.degrees[i],
                    provenance=(i,),
                )
            )
        elif fs == QUATERNIONIC:
            assert all(abs(v.imag) < _RESIDUAL for v in chi)
            irreps.append(
                RealIrrep(
                    values=tuple(2 * v.real for v in chi),
                    fs_type=QUATERNIONIC,
                    real_dimension=2 * table.degrees[i],
                    provenance=(i,),
                )
            )
        else:
            want = _conj_key(chi)
            partner = next(
                (
                    j
                    for j in range(len(rows))
                    if not consumed[j] and _key(rows[j]) == want
                ),
                None,
            )
            if partner is None:
                raise UnpairedComplexCharacter(f"row {i} has no conjugate partner")
            consumed[partner] = True
            irreps.append(
                RealIrrep(
                    values=tuple(2 * v.real for v in chi),
                    fs_type=COMPLEX,
                    real_dimension=2 * table.degrees[i],
                    provenance=(i, partner),
                )
            )
    out = RealIrrepSet(table=table, irreps=tuple(irreps))
    assert out.irreps[0].fs_type == ORTHOGONAL and out.irreps[0].real_dimension == 1
    return out


def class_average(table: CharacterTable, values, sub: Subgroup) -> float:
    """(1/|H|) sum of a class function over the subgroup's elements."""
    total = 0.0
    for h in sub.elements:
        total += values[table.class_of[h]]
    return total / sub.order


def fixed_dim(table: CharacterTable, real_char, sub: Subgroup) -> int:
    """Dimension of the subgroup-fixed subspace of a real character."""
    values = real_char.values if isinstance(real_char, RealIrrep) else real_char
    dim = _round_checked(class_average(table, values, sub), NonIntegralDimension)
    assert dim >= 0
    return dim


@lru_cache(maxsize=None)
def fixed_dim_matrix(irreps: RealIrrepSet, classes: SubgroupClassTable) -> FixedDimMatrix:
    """Fixed-point dimensions of every real irrep under every subgroup class."""
    if irreps.table.group != classes.group:
        raise GroupMismatch("irreps and class table belong to different groups")
    table = irreps.table
    entries = tuple(
        tuple(fixed_dim(table, ir, cls.representative) for ir in irreps.irreps)
        for cls in classes.classes
    )
    dims = irreps.dimensions
    assert entries[0] == dims
    assert all(e <= d for row in entries for e, d in zip(row, dims))
    assert entries[-1][0] == 1 and all(e == 0 for e in entries[-1][1:])
    return FixedDimMatrix(classes=classes, irreps=irreps, entries=entries)


def perm_character_decomposition(
    classes: SubgroupClassTable, table: CharacterTable
) -> tuple[tuple[int, ...], ...]:
    """Multiplicities of each complex irreducible in each coset-space character.

    Row j lists, over complex rows k, the multiplicity of row k in the
    permutation character of G/H_j.
    """
    if table.group != classes.group:
        raise GroupMismatch("character table and class table belong to different groups")
    group = table.group
    out = []
    for cls in classes.classes:
        x = coset_space(group, cls.representative)
        fix = [
            sum(1 for pt in range(x.size) if x.action[cl.rep][pt] == pt)
            for cl in table.classes
        ]
        row = []
        for chi in table.chars:
            acc = sum(
                cl.size * fix[i] * chi[i].conjugate()
                for i, cl in enumerate(table.classes)
            )
            if abs(acc.imag) >= _RESIDUAL * group.order:
                raise NonIntegralMultiplicity(f"multiplicity has imaginary part {acc.imag!r}")
            mult = _round_checked(acc.real / group.order, NonIntegralMultiplicity)
            assert mult >= 0
            row.append(mult)
        out.append(tuple(row))
    return tuple(out)
