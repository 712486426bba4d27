"""Basic degrees and degrees of equivariant linear isomorphisms.

The basic degree attached to the k-th real irreducible is the Burnside ring
element whose ghost vector is the sign pattern (-1)^{dim V_k^{H_i}}.  It is
computed twice, from independent data: once by the degree recurrence over
the subgroup lattice (containment counts and Weyl orders) and once by
back-substitution against the table of marks; the two must agree exactly.

A linear isomorphism is described by its action on the multiplicity space
of each isotypic component, either as a negative-eigenvalue count or as a
square rational matrix.  Matrix counts are exact: the characteristic
polynomial is computed over the rationals with the Faddeev-LeVerrier scheme
and the negative eigenvalues are counted, with algebraic multiplicity, by
Sturm sign variations.  No numerical eigensolver is involved; a zero
eigenvalue is a hard error because the map must be an isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GroupMismatch, InexactDivision, SingularBlock
from .characters import FixedDimMatrix
from .groups import SubgroupClassTable
from .marks import MarksMatrix
from .ring import (
    BurnsideElement,
    GhostVector,
    MultTensor,
    ghost_preimage,
    identity_element,
    multiply,
)


@dataclass(frozen=True)
class BasicDegree:
    """The degree of minus-identity on one real irreducible representation."""

    irrep_index: int
    element: BurnsideElement
    ghost: GhostVector


@dataclass(frozen=True)
class SpectralInput:
    """Per-irrep spectral data of a linear isomorphism.

    Each entry is either a nonnegative integer (the count of negative
    eigenvalues on the multiplicity space, with multiplicity) or a square
    matrix of Fractions acting on that space.  A ``None`` entry means the
    isotypic component does not appear, contributing no negative eigenvalues.
    """

    entries: tuple

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> SpectralInput:
        if any(c < 0 for c in counts):
            raise ValueError("negative-eigenvalue counts must be nonnegative")
        return cls(entries=tuple(int(c) for c in counts))

    @classmethod
    def from_blocks(cls, n_irreps: int, blocks: dict) -> SpectralInput:
        entries: list = [None] * n_irreps
        for k, matrix in blocks.items():
            if not 0 <= k < n_irreps:
                raise ValueError(f"irrep index {k} out of range")
            entries[k] = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        return cls(entries=tuple(entries))


def basic_degree(
    k: int,
    fixed_dims: FixedDimMatrix,
    psi: MarksMatrix,
    classes: SubgroupClassTable,
) -> BasicDegree:
    """The k-th basic degree, via the degree recurrence, cross-checked.

    Recurrence, over classes in descending order:

        n_i = ((-1)^{D[i][k]} - sum_{j>i} n_j * n(H_i,H_j) * |W(H_j)|) / |W(H_i)|

    with every division exact.  The result must coincide with the
    back-substitution preimage of the sign vector under the table of marks.
    """
    n = classes.size
    signs = tuple(-1 if fixed_dims.entries[i][k] % 2 else 1 for i in range(n))
    counts = classes.containment_counts
    weyl = [c.weyl_order for c in classes.classes]
    coeffs = [0] * n
    for i in range(n - 1, -1, -1):
        num = signs[i] - sum(
            coeffs[j] * counts[i][j] * weyl[j] for j in range(i + 1, n)
        )
        q, r = divmod(num, weyl[i])
        if r:
            raise InexactDivision(f"degree recurrence is not integral at class {i}")
        coeffs[i] = q
    element = BurnsideElement(classes, tuple(coeffs))
    via_marks = ghost_preimage(psi, signs)
    assert element == via_marks, "recurrence and mark back-substitution disagree"
    return BasicDegree(
        irrep_index=k,
        element=element,
        ghost=GhostVector(classes, signs),
    )


def all_basic_degrees(
    fixed_dims: FixedDimMatrix, psi: MarksMatrix, classes: SubgroupClassTable
) -> list[BasicDegree]:
    return [
        basic_degree(k, fixed_dims, psi, classes)
        for k in range(fixed_dims.n_irreps)
    ]


def degree_product(
    mu: Sequence[int], basics: Sequence[BasicDegree], tensor: MultTensor
) -> BurnsideElement:
    """The Burnside ring product of basic degrees with the given exponents."""
    if len(mu) != len(basics):
        raise GroupMismatch("exponent vector length does not match the irrep count")
    out = identity_element(tensor.classes)
    for m, bd in zip(mu, basics):
        for _ in range(m):
            out = multiply(out, bd.element, tensor)
    return out


def ghost_degree_linear(mu: Sequence[int], fixed_dims: FixedDimMatrix) -> GhostVector:
    """Ghost vector of a product of basic degrees, from fixed-dimension parity."""
    n = fixed_dims.n_classes
    values = tuple(
        -1 if sum(m * fixed_dims.entries[i][k] for k, m in enumerate(mu)) % 2 else 1
        for i in range(n)
    )
    return GhostVector(fixed_dims.classes, values)


# ---------------------------------------------------------------------------
# exact negative-eigenvalue counting


def _charpoly(mat) -> list[Fraction]:
    """Monic characteristic polynomial, ascending coefficients, Faddeev-LeVerrier."""
    n = len(mat)
    if n == 0:
        return [Fraction(1)]
    a = [[Fraction(x) for x in row] for row in mat]
    if any(len(row) != n for row in a):
        raise ValueError("spectral block must be square")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m_prev = [[Fraction(1) if r == c else Fraction(0) for c in range(n)] for r in range(n)]
    for step in range(1, n + 1):
        am = [
            [sum(a[r][t] * m_prev[t][c] for t in range(n)) for c in range(n)]
            for r in range(n)
        ]
        c_step = -sum(am[r][r] for r in range(n)) / step
        coeffs[n - step] = c_step
        m_prev = [
            [am[r][c] + (c_step if r == c else 0) for c in range(n)] for r in range(n)
        ]
    return coeffs


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_derivative(p: list[Fraction]) -> list[Fraction]:
    if len(p) == 1:
        return [Fraction(0)]
    return [i * c for i, c in enumerate(p)][1:]


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        a = _poly_trim(a)
        if len(a) < len(b):
            break
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = a[:-1]
    return _poly_trim(q), _poly_trim(a)


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _poly_trim(a), _poly_trim(b)
    while b != [Fraction(0)] and any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a] if a[-1] != 0 else a


def _sign_at_zero(p: list[Fraction]) -> int:
    c0 = p[0]
    if c0 > 0:
        return 1
    if c0 < 0:
        return -1
    return 0


def _sign_at_neg_inf(p: list[Fraction]) -> int:
    lead = p[-1]
    s = 1 if lead > 0 else -1
    return s if (len(p) - 1) % 2 == 0 else -s


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _distinct_negative_roots(p: list[Fraction]) -> int:
    p = _poly_trim(p)
    if len(p) <= 1:
        return 0
    g = _poly_gcd(p, _poly_derivative(p))
    if len(g) > 1:
        p, _ = _poly_divmod(p, g)
    chain = [p, _poly_trim(_poly_derivative(p))]
    while len(chain[-1]) > 1:
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not any(r):
            break
        chain.append([-c for c in r])
    at_inf = [_sign_at_neg_inf(q) for q in chain]
    at_zero = [_sign_at_zero(q) for q in chain]
    return _variations(at_inf) - _variations(at_zero)


def count_negative_eigenvalues(mat) -> int:
    """Negative real eigenvalues of a rational square matrix, with multiplicity.

    Raises SingularBlock when 0 is an eigenvalue.
    """
    p = _charpoly(mat)
    if len(p) > 1 and p[0] == 0:
        raise SingularBlock("spectral block has eigenvalue zero")
    total = 0
    while len(p) > 1:
        total += _distinct_negative_roots(p)
        p = _poly_gcd(p, _poly_derivative(p))
    return total


def negative_eigen_multiplicities(spec: SpectralInput) -> tuple[int, ...]:
    """Resolve a spectral description to per-irrep negative-eigenvalue counts."""
    mu = []
    for entry in spec.entries:
        if entry is None:
            mu.append(0)
        elif isinstance(entry, int):
            mu.append(entry)
        else:
            mu.append(count_negative_eigenvalues(entry))
    return tuple(mu)


def degree_of_linear_iso(
    spec: SpectralInput, basics: Sequence[BasicDegree], tensor: MultTensor
) -> BurnsideElement:
    """Degree of the linear isomorphism described by the spectral data."""
    return degree_product(negative_eigen_multiplicities(spec), basics, tensor)
