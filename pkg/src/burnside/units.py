"""Factoring Burnside ring units into products of basic degrees.

A unit's ghost vector is a sign pattern, recorded as a parity vector delta
with (-1)^{delta_i} equal to the i-th ghost component.  Factoring the unit
means solving D mu = delta over GF(2), where D is the fixed-dimension
matrix of the real irreducibles, and then verifying the claimed product
coefficient by coefficient in the ring.  An inconsistent system is a
first-class outcome: it would be a counterexample to generation by basic
degrees, so it is reported with a certificate instead of asserted away.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degrees import degree_product
from .errors import CapExceeded, NoSolution, NotAUnit
from .marks import MarksMatrix
from .ring import (
    DEFAULT_MAX_UNIT_CLASSES,
    BurnsideElement,
    enumerate_units,
    ghost_map,
    multiply,
)


@dataclass(frozen=True)
class ParityVector:
    """Exponent pattern of a unit's ghost signs: bits_i = (1 - eps_i) / 2."""

    bits: tuple[int, ...]


@dataclass(frozen=True)
class Factorization:
    unit: BurnsideElement
    mu: tuple[int, ...]
    verified: bool


@dataclass(frozen=True)
class UnitRecord:
    coeffs: tuple[int, ...]
    delta: tuple[int, ...]
    mu: tuple[int, ...] | None
    verified: bool
    certificate: tuple[int, ...] | None = None


@dataclass(frozen=True)
class VerificationReport:
    group: str
    n_classes: int
    n_irreps: int
    unit_count: int
    rank_d_mod2: int
    rank_unit_parities: int
    results: tuple[UnitRecord, ...]
    status: str

    @property
    def counterexamples(self) -> tuple[UnitRecord, ...]:
        return tuple(r for r in self.results if not r.verified)

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "N": self.n_classes,
            "r": self.n_irreps,
            "units": self.unit_count,
            "rank_D_mod2": self.rank_d_mod2,
            "results": [
                {
                    "coeffs": list(r.coeffs),
                    "delta": list(r.delta),
                    "mu": list(r.mu) if r.mu is not None else None,
                    "verified": r.verified,
                    **({"certificate": list(r.certificate)} if r.certificate else {}),
                }
                for r in self.results
            ],
            "status": self.status,
        }


def parity_vector(unit: BurnsideElement, psi: MarksMatrix) -> ParityVector:
    """The mod-2 exponent pattern of the unit's ghost signs."""
    ghost = ghost_map(psi, unit)
    if any(v not in (1, -1) for v in ghost.values):
        raise NotAUnit(f"{unit!r} is not a unit")
    return ParityVector(bits=tuple((1 - v) // 2 for v in ghost.values))


def _pack(bits) -> int:
    word = 0
    for k, b in enumerate(bits):
        if b & 1:
            word |= 1 << k
    return word


def gf2_rank(rows: list[int], n_cols: int) -> int:
    work = [r for r in rows if r]
    rank = 0
    for col in range(n_cols):
        pivot = next((i for i, r in enumerate(work) if (r >> col) & 1), None)
        if pivot is None:
            continue
        pr = work.pop(pivot)
        work = [r ^ pr if (r >> col) & 1 else r for r in work]
        rank += 1
    return rank


def solve_parity(d_mod2_rows, delta, minimal_weight: bool = False, coset_cap: int = 4096) -> tuple[int, ...]:
    """Solve D mu = delta over GF(2), free variables pinned to zero.

    ``d_mod2_rows`` is any matrix of ints, one row per subgroup class, one
    column per irrep; only parities matter.  Pivots are chosen in ascending
    irrep order, making the returned solution deterministic.  Raises
    NoSolution with a certificate: the set of class rows whose mod-2 sum has
    zero coefficients but right-hand side one.

    With ``minimal_weight`` the whole solution coset (at most 2^(r - rank)
    vectors, capped at ``coset_cap``) is scanned for the fewest-factors
    solution, ties broken lexicographically.
    """
    n_rows = len(d_mod2_rows)
    n_cols = len(d_mod2_rows[0]) if n_rows else 0
    if len(delta) != n_rows:
        raise ValueError("parity vector length does not match the matrix")
    # each work row: (coefficient bits, augmented bit, history of source rows)
    work = [(_pack(row), delta[i] & 1, 1 << i) for i, row in enumerate(d_mod2_rows)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if (work[i][0] >> col) & 1), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        pr_bits, pr_aug, pr_hist = work[r]
        for i in range(n_rows):
            if i != r and (work[i][0] >> col) & 1:
                bits, aug, hist = work[i]
                work[i] = (bits ^ pr_bits, aug ^ pr_aug, hist ^ pr_hist)
        pivots.append((col, r))
        r += 1
    for bits, aug, hist in work[r:]:
        if aug:
            certificate = tuple(i for i in range(n_rows) if (hist >> i) & 1)
            raise NoSolution(certificate, delta=tuple(delta))
    mu = [0] * n_cols
    for col, row in pivots:
        mu[col] = work[row][1]
    if not minimal_weight:
        return tuple(mu)

    pivot_cols = {col for col, _ in pivots}
    free_cols = [c for c in range(n_cols) if c not in pivot_cols]
    if 1 << len(free_cols) > coset_cap:
        raise CapExceeded(
            f"solution coset of size 2^{len(free_cols)} exceeds cap {coset_cap}"
        )
    # kernel basis vector for each free column
    kernel = []
    for f in free_cols:
        vec = [0] * n_cols
        vec[f] = 1
        for col, row in pivots:
            vec[col] = (work[row][0] >> f) & 1
        kernel.append(vec)
    best = tuple(mu)
    for mask in range(1, 1 << len(free_cols)):
        cand = mu[:]
        for t, vec in enumerate(kernel):
            if (mask >> t) & 1:
                cand = [a ^ b for a, b in zip(cand, vec)]
        cand = tuple(cand)
        if (sum(cand), cand) < (sum(best), best):
            best = cand
    return best


def factor_unit(unit: BurnsideElement, ctx) -> Factorization:
    """Express a unit as a product of basic degrees and verify it exactly.

    ``ctx`` is any object exposing psi, fixed_dims, basics and tensor (the
    assembled pipeline).  The parity solution alone would suffice because the
    mark homomorphism is injective on the ring, but the product is still
    compared coefficient by coefficient.
    """
    delta = parity_vector(unit, ctx.psi)
    try:
        mu = solve_parity(ctx.fixed_dims.entries, delta.bits)
    except NoSolution as exc:
        raise NoSolution(exc.certificate, delta=delta.bits, coeffs=unit.coeffs) from None
    prod = degree_product(mu, ctx.basics, ctx.tensor)
    return Factorization(unit=unit, mu=mu, verified=prod == unit)


def verify_generation(ctx, group_label: str | None = None) -> VerificationReport:
    """Enumerate all units, factor each, and report the outcome.

    The report records, per unit, the parity vector, the exponent vector and
    whether the reconstructed product matches exactly; any unit that fails
    appears with a certificate and flips the status to COUNTEREXAMPLE.
    """
    psi = ctx.psi
    cap = getattr(ctx, "max_unit_classes", DEFAULT_MAX_UNIT_CLASSES)
    units = enumerate_units(psi, max_classes=cap)
    n = psi.size
    records = []
    ok = True
    parity_rows = []
    for u in units:
        delta = parity_vector(u, psi)
        parity_rows.append(_pack(delta.bits))
        try:
            fact = factor_unit(u, ctx)
        except NoSolution as exc:
            records.append(
                UnitRecord(
                    coeffs=u.coeffs,
                    delta=delta.bits,
                    mu=None,
                    verified=False,
                    certificate=exc.certificate,
                )
            )
            ok = False
            continue
        records.append(
            UnitRecord(coeffs=u.coeffs, delta=delta.bits, mu=fact.mu, verified=fact.verified)
        )
        ok = ok and fact.verified

    unit_count = len(units)
    assert unit_count & (unit_count - 1) == 0, "unit count must be a power of two"
    rank_parities = gf2_rank(parity_rows, n)
    assert unit_count == 1 << rank_parities
    d_rows = [_pack(row) for row in ctx.fixed_dims.entries]
    rank_d = gf2_rank(d_rows, ctx.fixed_dims.n_irreps)

    return VerificationReport(
        group=group_label or ctx.group.name,
        n_classes=n,
        n_irreps=ctx.fixed_dims.n_irreps,
        unit_count=unit_count,
        rank_d_mod2=rank_d,
        rank_unit_parities=rank_parities,
        results=tuple(records),
        status="SUCCESS" if ok else "COUNTEREXAMPLE",
    )


def units_are_involutions(ctx) -> bool:
    """Check u*u = (G) for every unit; used by the verification suite."""
    ident = tuple(1 if i == ctx.psi.size - 1 else 0 for i in range(ctx.psi.size))
    cap = getattr(ctx, "max_unit_classes", DEFAULT_MAX_UNIT_CLASSES)
    return all(
        multiply(u, u, ctx.tensor).coeffs == ident
        for u in enumerate_units(ctx.psi, max_classes=cap)
    )
