"""Parity vectors, GF(2) solving, and the unit-factorization report.

The factorization question is exactly the generation claim under test: for
every group in the list the suite records whether each unit is a product of
basic degrees.  symmetric:4 is the recorded counterexample: its 64 units
cover a 6-dimensional parity space while the fixed-dimension matrix only
spans 5 dimensions mod 2, so exactly half of the units cannot be factored.
"""

import pytest

from burnside import (
    BurnsideElement,
    NoSolution,
    NotAUnit,
    enumerate_units,
    factor_unit,
    gf2_rank,
    ghost_degree_linear,
    identity_element,
    parity_vector,
    solve_parity,
    verify_generation,
)
from helpers import CATALOG_LE_24, KNOWN_COUNTEREXAMPLES, pipe


def test_parity_examples():
    p = pipe("symmetric:3")
    one = identity_element(p.classes)
    assert parity_vector(one, p.psi).bits == (0, 0, 0, 0)
    assert parity_vector(-one, p.psi).bits == (1, 1, 1, 1)
    assert parity_vector(BurnsideElement(p.classes, (0, 0, -1, 1)), p.psi).bits == (1, 0, 1, 0)


def test_parity_rejects_non_units():
    p = pipe("symmetric:3")
    with pytest.raises(NotAUnit):
        parity_vector(BurnsideElement(p.classes, (1, 0, 0, 0)), p.psi)


def test_solve_parity_examples():
    p = pipe("symmetric:3")
    d = p.fixed_dims.entries
    assert solve_parity(d, (0, 0, 0, 0)) == (0, 0, 0)
    assert solve_parity(d, (1, 0, 1, 0)) == (0, 1, 0)
    assert solve_parity(d, (1, 1, 1, 0)) == (0, 1, 1)


def test_solve_parity_no_solution_certificate():
    rows = [(1, 0), (0, 1), (1, 1)]
    with pytest.raises(NoSolution) as exc:
        solve_parity(rows, (0, 0, 1))
    cert = exc.value.certificate
    # the certified rows XOR to zero coefficients with right-hand side one
    xor = [0, 0]
    rhs = 0
    delta = (0, 0, 1)
    for i in cert:
        xor = [a ^ b for a, b in zip(xor, rows[i])]
        rhs ^= delta[i]
    assert xor == [0, 0] and rhs == 1


def test_solve_parity_minimal_weight():
    # one equation, two equivalent single-factor solutions: lexicographic tie-break
    assert solve_parity([(1, 1)], (1,)) == (1, 0)
    assert solve_parity([(1, 1)], (1,), minimal_weight=True) == (0, 1)
    assert solve_parity([(1, 1, 0)], (1,), minimal_weight=True) == (0, 1, 0)
    # still a solution on real data, never heavier than the pinned one
    p = pipe("dihedral:4")
    for u in enumerate_units(p.psi):
        delta = parity_vector(u, p.psi).bits
        base = solve_parity(p.fixed_dims.entries, delta)
        small = solve_parity(p.fixed_dims.entries, delta, minimal_weight=True)
        assert sum(small) <= sum(base)
        ghost = ghost_degree_linear(small, p.fixed_dims)
        assert tuple((1 - v) // 2 for v in ghost.values) == delta


def test_solve_parity_minimal_weight_cap():
    from burnside import CapExceeded

    rows = [tuple(0 for _ in range(16))]
    with pytest.raises(CapExceeded):
        solve_parity(rows, (0,), minimal_weight=True, coset_cap=8)


def test_gf2_rank():
    assert gf2_rank([0b11, 0b01, 0b10], 2) == 2
    assert gf2_rank([0b101, 0b011, 0b110], 3) == 2
    assert gf2_rank([], 4) == 0


def test_factor_examples():
    p = pipe("symmetric:3")
    one = identity_element(p.classes)
    fact = factor_unit(-one, p)
    assert fact.mu == (1, 0, 0) and fact.verified
    fact = factor_unit(BurnsideElement(p.classes, (1, -2, 0, 1)), p)
    assert fact.mu == (0, 0, 1) and fact.verified
    fact = factor_unit(BurnsideElement(p.classes, (1, -2, -1, 1)), p)
    assert fact.mu == (0, 1, 1) and fact.verified


def test_factor_determinism():
    p = pipe("dihedral:4")
    u = enumerate_units(p.psi)[3]
    assert factor_unit(u, p) == factor_unit(u, p)


def test_verify_c3():
    rep = verify_generation(pipe("cyclic:3"))
    assert rep.status == "SUCCESS"
    assert rep.unit_count == 2
    mus = sorted(r.mu for r in rep.results)
    assert mus == [(0, 0), (1, 0)]


def test_verify_c2():
    rep = verify_generation(pipe("cyclic:2"))
    assert rep.status == "SUCCESS"
    assert rep.unit_count == 4
    assert rep.rank_d_mod2 == 2


def test_verify_s3():
    rep = verify_generation(pipe("symmetric:3"))
    assert rep.status == "SUCCESS"
    assert rep.unit_count == 8
    assert rep.rank_d_mod2 == 3
    assert all(r.verified for r in rep.results)


def test_verify_s4_counterexample_is_recorded():
    # A(S4) has 64 units but the basic degrees only span 32 parity patterns;
    # the report must carry certificates rather than fail.
    rep = verify_generation(pipe("symmetric:4"))
    assert rep.status == "COUNTEREXAMPLE"
    assert rep.unit_count == 64
    assert rep.rank_d_mod2 == 5
    assert rep.rank_unit_parities == 6
    good = [r for r in rep.results if r.verified]
    bad = [r for r in rep.results if not r.verified]
    assert len(good) == 32 and len(bad) == 32
    assert all(r.mu is None and r.certificate for r in bad)
    assert all(r.mu is not None for r in good)


def test_factor_wraps_no_solution_with_unit_data():
    p = pipe("symmetric:4")
    rep = verify_generation(p)
    bad = next(r for r in rep.results if not r.verified)
    with pytest.raises(NoSolution) as exc:
        factor_unit(BurnsideElement(p.classes, bad.coeffs), p)
    assert exc.value.coeffs == bad.coeffs
    assert exc.value.delta == bad.delta


@pytest.mark.parametrize("spec", CATALOG_LE_24)
def test_generation_across_catalog(spec):
    p = pipe(spec)
    rep = verify_generation(p)
    assert rep.unit_count == 1 << rep.rank_unit_parities
    assert rep.rank_d_mod2 <= rep.n_irreps
    if spec in KNOWN_COUNTEREXAMPLES:
        assert rep.status == "COUNTEREXAMPLE"
        assert any(r.certificate for r in rep.results)
    else:
        assert rep.status == "SUCCESS", spec
        assert all(r.verified for r in rep.results)
        assert rep.rank_unit_parities <= rep.rank_d_mod2


@pytest.mark.parametrize("spec", CATALOG_LE_24)
def test_solver_soundness(spec):
    # whenever a mu comes back, its ghost pattern reproduces the parity
    p = pipe(spec)
    rep = verify_generation(p)
    for rec in rep.results:
        if rec.mu is None:
            continue
        ghost = ghost_degree_linear(rec.mu, p.fixed_dims)
        assert tuple((1 - v) // 2 for v in ghost.values) == rec.delta


def test_report_json_schema():
    rep = verify_generation(pipe("cyclic:3"))
    doc = rep.to_json_dict()
    assert set(doc) == {"group", "N", "r", "units", "rank_D_mod2", "results", "status"}
    assert all(set(r) == {"coeffs", "delta", "mu", "verified"} for r in doc["results"])
