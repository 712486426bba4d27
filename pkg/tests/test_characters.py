"""Character tables, Frobenius-Schur types, and fixed-dimension data."""

import pytest

from burnside import (
    catalog_group,
    character_table,
    coset_space,
    element_classes,
    fixed_dim,
    frobenius_schur,
    perm_character_decomposition,
)
from helpers import CATALOG_LE_24, pipe, subgroup_by_order

TOL = 1e-8


def test_element_classes_abelian():
    for spec in ("cyclic:6", "product:cyclic:2*cyclic:2"):
        g = catalog_group(spec)
        cls = element_classes(g)
        assert len(cls) == g.order
        assert all(c.size == 1 for c in cls)


def test_element_classes_s3():
    cls = element_classes(catalog_group("symmetric:3"))
    assert sorted(c.size for c in cls) == [1, 2, 3]
    # ordered by (size, minimal member); brute-force check of each class
    assert [c.size for c in cls] == [1, 2, 3]
    g = catalog_group("symmetric:3")
    for c in cls:
        expected = sorted({g.conjugate(h, c.rep) for h in g.elements})
        assert list(c.members) == expected


def test_element_classes_q8():
    cls = element_classes(catalog_group("quaternion:8"))
    assert [c.size for c in cls] == [1, 1, 2, 2, 2]


def test_trivial_table():
    t = character_table(catalog_group("cyclic:1"))
    assert t.degrees == (1,)
    assert abs(t.chars[0][0] - 1) < TOL


def test_c2_table():
    t = character_table(catalog_group("cyclic:2"))
    assert t.degrees == (1, 1)
    rows = {tuple(round(v.real) for v in row) for row in t.chars}
    assert rows == {(1, 1), (1, -1)}


def test_s3_table():
    t = character_table(catalog_group("symmetric:3"))
    assert t.degrees == (1, 1, 2)
    # classes ordered (identity, 3-cycles, transpositions); the 2-dim row
    std = t.chars[2]
    assert [round(v.real) for v in std] == [2, -1, 0]
    assert all(abs(v.imag) < TOL for v in std)


def test_s4_table_matches_published_values():
    t = character_table(catalog_group("symmetric:4"))
    assert t.degrees == (1, 1, 2, 3, 3)
    got = {tuple(round(v.real) for v in row) for row in t.chars}
    # classes ordered: e, double transpositions, transpositions, 4-cycles, 3-cycles
    expected = {
        (1, 1, 1, 1, 1),
        (1, 1, -1, -1, 1),
        (2, 2, 0, 0, -1),
        (3, -1, 1, -1, 0),
        (3, -1, -1, 1, 0),
    }
    assert got == expected


@pytest.mark.parametrize("spec", CATALOG_LE_24)
def test_orthogonality_and_degree_sum(spec):
    p = pipe(spec)
    t = p.chartable
    g = t.group
    assert sum(d * d for d in t.degrees) == g.order
    assert all(g.order % d == 0 for d in t.degrees)
    k = len(t.classes)
    for a in range(k):
        for b in range(k):
            acc = sum(
                cl.size * t.chars[a][i] * t.chars[b][i].conjugate()
                for i, cl in enumerate(t.classes)
            ) / g.order
            target = 1.0 if a == b else 0.0
            assert abs(acc - target) < TOL


def test_frobenius_schur_examples():
    s3 = character_table(catalog_group("symmetric:3"))
    assert frobenius_schur(s3, s3.chars[0]) == 1
    assert frobenius_schur(s3, s3.chars[2]) == 1
    c3 = character_table(catalog_group("cyclic:3"))
    faithful = [row for row in c3.chars if any(abs(v.imag) > 0.1 for v in row)]
    assert len(faithful) == 2
    assert frobenius_schur(c3, faithful[0]) == 0
    q8 = character_table(catalog_group("quaternion:8"))
    two_dim = q8.chars[q8.degrees.index(2)]
    assert frobenius_schur(q8, two_dim) == -1


def test_real_irreducibles_s3():
    irreps = pipe("symmetric:3").irreps
    assert irreps.dimensions == (1, 1, 2)
    assert all(ir.fs_type == 1 for ir in irreps.irreps)


def test_real_irreducibles_c3():
    irreps = pipe("cyclic:3").irreps
    assert irreps.dimensions == (1, 2)
    assert [ir.fs_type for ir in irreps.irreps] == [1, 0]
    assert len(irreps.irreps[1].provenance) == 2


def test_real_irreducibles_q8():
    irreps = pipe("quaternion:8").irreps
    assert irreps.dimensions == (1, 1, 1, 1, 4)
    assert [ir.fs_type for ir in irreps.irreps] == [1, 1, 1, 1, -1]


def test_real_irreducibles_c5_are_integral_on_fixed_dims():
    # the merged pairs have irrational values but integral averages
    p = pipe("cyclic:5")
    assert p.irreps.dimensions == (1, 2, 2)
    assert p.fixed_dims.entries == ((1, 2, 2), (1, 0, 0))


def test_fixed_dim_examples():
    p = pipe("symmetric:3")
    t = p.chartable
    triv, _, std = p.irreps.irreps
    c2 = subgroup_by_order(p, 2)
    c3 = subgroup_by_order(p, 3)
    assert fixed_dim(t, triv, c2) == 1
    assert fixed_dim(t, triv, c3) == 1
    assert fixed_dim(t, std, c2) == 1
    assert fixed_dim(t, std, c3) == 0


def test_fixed_dim_matrix_s3():
    assert pipe("symmetric:3").fixed_dims.entries == (
        (1, 1, 2),
        (1, 0, 1),
        (1, 1, 0),
        (1, 0, 0),
    )


def test_fixed_dim_matrix_c3():
    assert pipe("cyclic:3").fixed_dims.entries == ((1, 2), (1, 0))


def test_fixed_dim_matrix_trivial_group():
    assert pipe("cyclic:1").fixed_dims.entries == ((1,),)


@pytest.mark.parametrize("spec", ["symmetric:4", "quaternion:8", "dihedral:6", "cyclic:12"])
def test_fixed_dim_matrix_shape_invariants(spec):
    p = pipe(spec)
    d = p.fixed_dims
    dims = p.irreps.dimensions
    assert d.entries[0] == dims
    assert d.entries[-1][0] == 1
    assert all(v == 0 for v in d.entries[-1][1:])
    assert all(0 <= v <= dims[k] for row in d.entries for k, v in enumerate(row))


def test_perm_character_decomposition_s3():
    p = pipe("symmetric:3")
    mults = perm_character_decomposition(p.classes, p.chartable)
    assert mults[3] == (1, 0, 0)  # G/G: trivial character only
    assert mults[1] == (1, 0, 1)  # G/C2
    assert mults[0] == (1, 1, 2)  # regular representation


@pytest.mark.parametrize("spec", ["symmetric:3", "quaternion:8", "alternating:4", "dihedral:4"])
def test_orbit_count_identity(spec):
    # sum_k c_jk * dim_C(chi_k fixed by H_i) equals the H_i-orbit count on G/H_j
    p = pipe(spec)
    t = p.chartable
    g = p.group
    mults = perm_character_decomposition(p.classes, t)
    complex_fix = []
    for chi in t.chars:
        row = []
        for cls in p.classes.classes:
            h = cls.representative
            avg = sum(chi[t.class_of[x]] for x in h.elements) / h.order
            assert abs(avg.imag) < 1e-6
            assert abs(avg.real - round(avg.real)) < 1e-6
            row.append(round(avg.real))
        complex_fix.append(row)
    def count_orbits(rows, size):
        parent = list(range(size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for row in rows:
            for pt in range(size):
                a, b = find(pt), find(row[pt])
                if a != b:
                    parent[b] = a
        return len({find(pt) for pt in range(size)})

    for j, cj in enumerate(p.classes.classes):
        space = coset_space(g, cj.representative)
        for i, ci in enumerate(p.classes.classes):
            h = ci.representative
            n_orbits = count_orbits([space.action[x] for x in h.elements], space.size)
            lhs = sum(mults[j][k] * complex_fix[k][i] for k in range(len(t.chars)))
            assert lhs == n_orbits


def test_table_row_order_is_deterministic():
    a = character_table(catalog_group("dihedral:6"))
    b = character_table(catalog_group("dihedral:6"))
    assert a is b  # cached
    assert a.chars == b.chars
