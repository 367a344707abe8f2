"""Quandle axioms, module laws, orbits, coefficient groups, units."""

import pytest

from qci.algebra import (CoeffGroup, IntegerShadowModule,
                         IntUnit, OrbitShadowModule, Quandle,
                         ShiftUnit, StructureError, TableModule,
                         check_module, check_quandle, cyclic_shadow_module,
                         make_conjugation, make_dihedral, make_trivial,
                         make_alexander, module_from_json, orbits,
                         product_module, quandle_as_module, trivial_module)
from tests.groups import all_groups_up_to_8, cyclic_group, symmetric_3


def test_trivial_quandle_passes():
    for n in (1, 2, 5):
        q = make_trivial(n)
        assert check_quandle(q.op)


def test_dihedral_quandle_brute_force():
    # independent brute-force verification of all three axioms for n=3
    op = [[(2 * b - a) % 3 for b in range(3)] for a in range(3)]
    for a in range(3):
        assert op[a][a] == a
        for b in range(3):
            for c in range(3):
                assert op[op[a][b]][c] == op[op[a][c]][op[b][c]]
    assert check_quandle(op)
    assert make_dihedral(3).apply(0, 1) == 2


def test_idempotence_witness():
    rep = check_quandle([[1, 0], [1, 1]])
    assert not rep.passed
    assert rep.axiom == "idempotence"
    assert rep.witness == (0,)


def test_structural_errors_are_distinct():
    with pytest.raises(StructureError):
        check_quandle([[0, 1]])          # not square
    with pytest.raises(StructureError):
        check_quandle([[0, 2], [1, 1]])  # out of range
    with pytest.raises(StructureError):
        check_quandle([])


def test_dihedral_4_has_two_orbits():
    # brute-force closure: {0,2} and {1,3}
    q = make_dihedral(4)
    om = orbits(q)
    assert om.count == 2
    assert om.orbits == ((0, 2), (1, 3))
    assert om.of(2) == 0 and om.of(3) == 1


def test_dihedral_1_and_3():
    assert make_dihedral(1).n == 1
    assert orbits(make_dihedral(3)).count == 1


def test_trivial_quandle_orbits():
    assert orbits(make_trivial(5)).count == 5


def test_conjugation_abelian_is_trivial():
    q = make_conjugation(cyclic_group(4))
    assert q.op == make_trivial(4).op
    q2 = make_conjugation(cyclic_group(2))
    assert q2.n == 2 and q2.op == make_trivial(2).op


def test_conjugation_s3_orbits():
    q = make_conjugation(symmetric_3())
    assert orbits(q).count == 3  # conjugacy classes of S3


def test_conjugation_rejects_non_group():
    bad = [[0, 1], [0, 1]]  # no inverses / not a group
    with pytest.raises(StructureError):
        make_conjugation(bad)


def test_all_small_groups_give_quandles():
    for name, table in all_groups_up_to_8():
        q = make_conjugation(table)
        assert check_quandle(q.op, q.inv), name


def test_inverse_table_derivation_and_roundtrip():
    q = make_dihedral(5)
    data = q.to_json()
    del data["inv"]
    q2 = Quandle.from_json(data)
    assert q2.inv == q.inv
    assert Quandle.from_json(q.to_json()) == q


def test_module_self_action_passes():
    q = make_dihedral(3)
    assert check_module(quandle_as_module(q))


def test_symbolic_integer_module_passes():
    q = make_dihedral(4)
    m = IntegerShadowModule(q)
    assert check_module(m)
    assert m.act(5, 2) == 6 and m.unact(0, 1) == -1


def test_product_with_integer_module():
    q = make_dihedral(3)
    p = product_module(quandle_as_module(q), IntegerShadowModule(q))
    assert check_module(p)
    assert p.act((1, 7), 2) == (q.apply(1, 2), 8)


def test_product_of_finite_modules():
    q = make_dihedral(3)
    z2 = cyclic_shadow_module(q, 2)
    p = product_module(z2, z2)
    assert p.is_finite and p.size == 4
    assert check_module(p)
    assert p.act((0, 1), 0) == (1, 0)


def test_product_quandle_mismatch():
    with pytest.raises(StructureError):
        product_module(trivial_module(make_dihedral(3)),
                       trivial_module(make_dihedral(4)))


def test_trivial_times_m_isomorphic():
    q = make_dihedral(3)
    m = quandle_as_module(q)
    p = product_module(trivial_module(q), m)
    for x in m.elements():
        for a in range(q.n):
            assert p.act((0, x), a) == (0, m.act(x, a))


def test_module_orbit_conventions():
    q = make_dihedral(4)
    assert orbits(IntegerShadowModule(q)).count == 1
    assert orbits(OrbitShadowModule(q)).count == 1
    assert orbits(cyclic_shadow_module(q, 3)).count == 1
    assert orbits(trivial_module(q)).count == 1


def test_orbit_shadow_action():
    q = make_dihedral(4)
    m = OrbitShadowModule(q)
    z = m.zero()
    assert m.act(z, 1) == (0, 1)
    assert m.act(m.act(z, 0), 2) == (2, 0)
    assert m.unact(m.act(z, 3), 3) == z


def test_orbits_idempotent_under_action():
    q = make_conjugation(symmetric_3())
    om = orbits(q)
    for a in range(q.n):
        for b in range(q.n):
            assert om.of(q.apply(a, b)) == om.of(a)


def test_product_module_orbit_containment():
    q = make_dihedral(4)
    m = quandle_as_module(q)
    p = product_module(m, m)
    om_p, om_m = orbits(p), orbits(m)
    for (x, y) in p.elements():
        rep = om_p.orbits[om_p.of((x, y))]
        for (x2, y2) in rep:
            assert om_m.of(x2) == om_m.of(x)
            assert om_m.of(y2) == om_m.of(y)


def test_module_axiom_failure_witness():
    q = make_trivial(2)
    # over a trivial quandle the actions must commute; two non-commuting
    # transpositions of a 3-point carrier violate self-distributivity
    bad = TableModule(q, [[1, 0], [0, 2], [2, 1]])
    rep = check_module(bad)
    assert not rep.passed and rep.axiom == "self-distributivity"


def test_module_json_roundtrip():
    q = make_dihedral(3)
    for mod in (quandle_as_module(q), IntegerShadowModule(q),
                OrbitShadowModule(q),
                product_module(cyclic_shadow_module(q, 2), IntegerShadowModule(q))):
        back = module_from_json(mod.describe(), q)
        for m in mod.sample_elements():
            for a in range(q.n):
                assert back.act(m, a) == mod.act(m, a)


def test_coeff_group_arithmetic():
    g = CoeffGroup((2, 3))
    assert g.zero() == (0, 0)
    assert g.add((1, 2), (1, 2)) == (0, 1)
    assert g.neg((1, 1)) == (1, 2)
    assert g.scale(4, (1, 2)) == (0, 2)
    assert g.size() == 6 and len(g.elements()) == 6


def test_coeff_group_free_summand():
    g = CoeffGroup((0,))
    assert g.add((5,), (-2,)) == (3,)
    assert not g.is_finite
    with pytest.raises(StructureError):
        g.elements()
    with pytest.raises(StructureError):
        CoeffGroup((1,))


def test_int_unit_validation():
    g = CoeffGroup((6,))
    with pytest.raises(StructureError):
        IntUnit(g, 2)
    with pytest.raises(StructureError):
        IntUnit(g, 3)
    u = IntUnit(g, 5)
    assert u.apply((1,)) == (5,)
    assert u.apply((1,), -1) == (5,)  # 5 is its own inverse mod 6


def test_unit_inverse_exhaustive():
    for mods in ((5,), (2, 3), (4,), (8,)):
        g = CoeffGroup(mods)
        for v in range(1, 12):
            try:
                u = IntUnit(g, v)
            except StructureError:
                continue
            for x in g.elements():
                assert u.apply(u.apply(x, -1)) == x
                assert u.apply(u.apply(x), -1) == x


def test_shift_unit_cyclic():
    g = CoeffGroup((3, 3, 3, 3))
    t = ShiftUnit(g)
    x = (1, 2, 0, 1)
    assert t.apply(x) == (1, 1, 2, 0)
    assert t.apply(t.apply(x), -1) == x
    assert t.apply(x, 4) == x
    with pytest.raises(StructureError):
        ShiftUnit(CoeffGroup((2, 3)))


def test_unit_matrix_matches_apply():
    g = CoeffGroup((5, 5))
    for sc in (IntUnit(g, 2), ShiftUnit(g)):
        mat = sc.int_matrix(-1)
        for x in g.elements():
            via_mat = tuple(sum(mat[i][j] * x[j] for j in range(2)) % 5
                            for i in range(2))
            assert via_mat == sc.apply(x, -1)


def test_one_element_module_accepted():
    q = make_dihedral(3)
    m = trivial_module(q)
    assert m.size == 1 and check_module(m)


def test_alexander_quandle():
    q = make_alexander(5, 2)
    assert check_quandle(q.op)
    assert make_alexander(5, 4).op == make_dihedral(5).op
