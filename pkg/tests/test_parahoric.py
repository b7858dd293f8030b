import pytest

import oracles
from bruhat_tits.apartment import AffineRoot, ApartmentPoint, enumerate_facets, make_facet, vanishing_set
from bruhat_tits.errors import PreconditionError
from bruhat_tits.parahoric import (
    PROUNIPOTENT_TORUS_PART,
    TORUS_PART,
    closure_pairs,
    diagram_type,
    filtration_chain_violations,
    node_deletion_crosscheck,
    parabolic_set,
    parabolic_violations,
    parahoric_exponents,
    reductive_quotient,
    verify_floor_ceiling_lemma,
)
from bruhat_tits.rootsys import DynkinType, Root, build_root_system

# maximal-rank subsystems from deleting one finite node of the extended diagram
BOREL_DE_SIEBENTHAL = {
    ("G2", 0): ["A2"],
    ("G2", 1): ["A1", "A1"],
    ("F4", 0): ["A1", "C3"],
    ("F4", 1): ["A2", "A2"],
    ("F4", 2): ["A1", "A3"],
    ("F4", 3): ["B4"],
    ("E8", 0): ["D8"],
    ("E8", 1): ["A8"],
    ("E8", 2): ["A1", "A7"],
    ("E8", 3): ["A1", "A2", "A5"],
    ("E8", 4): ["A4", "A4"],
    ("E8", 5): ["A3", "D5"],
    ("E8", 6): ["A2", "E6"],
    ("E8", 7): ["A1", "E7"],
    ("C2", 0): ["A1", "A1"],
    ("B3", 1): ["A1", "A1", "A1"],
    ("D4", 1): ["A1", "A1", "A1", "A1"],
}


def R(*coords):
    return Root(tuple(coords))


def facets_by_label(rs):
    return {f.label(): f for f in enumerate_facets(rs)}


# ---------------------------------------------------------------- exponents


def test_a1_exponents():
    rs = build_root_system("A1")
    f = facets_by_label(rs)
    alpha, minus = R(1), R(-1)
    v0 = parahoric_exponents(rs, f["{0}"])
    assert (v0.exponents[alpha], v0.exponents[minus]) == (0, 0)
    assert (v0.prounipotent_exponents[alpha], v0.prounipotent_exponents[minus]) == (1, 1)
    iwahori = parahoric_exponents(rs, f["{}"])
    assert (iwahori.exponents[alpha], iwahori.exponents[minus]) == (0, 1)
    assert iwahori.is_iwahori and not v0.is_iwahori
    v1 = parahoric_exponents(rs, f["{1}"])
    assert (v1.exponents[alpha], v1.exponents[minus]) == (-1, 1)
    assert v0.torus_part == TORUS_PART and v0.prounipotent_torus_part == PROUNIPOTENT_TORUS_PART


@pytest.mark.parametrize("name", ["A2", "B3", "C3", "G2", "F4"])
def test_exponents_match_floor_oracle(name):
    rs = build_root_system(name)
    for f in enumerate_facets(rs):
        data = parahoric_exponents(rs, f, audit=True)
        x = f.representative.coords
        for r in rs.roots:
            assert data.exponents[r] == oracles.floor_exponent(x, r.coords)
            assert data.prounipotent_exponents[r] == oracles.ceil_exponent(x, r.coords)


def test_exponents_at_a_point():
    rs = build_root_system("B2")
    data = parahoric_exponents(rs, ApartmentPoint.parse("5/3,-1/2"))
    assert data.exponents[R(1, 0)] == -1
    assert data.exponents[R(0, 1)] == 1
    assert not data.is_iwahori


# ---------------------------------------------------------------- quotients


def test_quotient_examples():
    a1 = build_root_system("A1")
    f = facets_by_label(a1)
    q = reductive_quotient(a1, f["{0}"])
    assert q.components == (DynkinType("A", 1),) and q.group_dim == 3
    q = reductive_quotient(a1, f["{}"])
    assert q.components == () and q.group_dim == 1
    c2 = build_root_system("C2")
    q = reductive_quotient(c2, make_facet(c2, [1, 2]))
    assert q.components == (DynkinType("A", 1),) * 2
    assert q.semisimple_dim == 6 and q.positive_count == 2


@pytest.mark.parametrize("key", sorted(BOREL_DE_SIEBENTHAL))
def test_vertex_quotients(key):
    name, node = key
    rs = build_root_system(name)
    f = make_facet(rs, [i for i in range(rs.rank + 1) if i != node])
    assert sorted(str(c) for c in reductive_quotient(rs, f).components) == BOREL_DE_SIEBENTHAL[key]
    assert sorted(str(c) for c in diagram_type(rs, f)) == BOREL_DE_SIEBENTHAL[key]


def test_quotient_at_origin_is_whole_group():
    for name in ["A3", "B4", "E6", "G2"]:
        rs = build_root_system(name)
        q = reductive_quotient(rs, make_facet(rs, range(rs.rank)))
        assert q.group_dim == rs.dimension


@pytest.mark.parametrize("name", ["A2", "G2", "B3", "D4", "E6"])
def test_node_deletion(name):
    report = node_deletion_crosscheck(build_root_system(name))
    assert report.mismatches == []
    assert len(report.rows) == 2 ** (report.type.rank + 1) - 1


def test_node_deletion_examples():
    a2 = build_root_system("A2")
    for f in enumerate_facets(a2):
        if f.dimension == 0:
            assert reductive_quotient(a2, f).components == (DynkinType("A", 2),)
    g2 = build_root_system("G2")
    f = make_facet(g2, [1, 2])
    assert reductive_quotient(g2, f).components == diagram_type(g2, f)
    assert reductive_quotient(g2, f).subsystem.total_rank == 2


# --------------------------------------------------------------- parabolics


def A(coords, level):
    return AffineRoot(Root(tuple(coords)), level)


def test_parabolic_a1_borel():
    rs = build_root_system("A1")
    f = facets_by_label(rs)
    ps = parabolic_set(rs, f["{0}"], f["{}"])
    assert ps.levi_part == () and ps.unipotent_part == (A([1], 0),)


def test_parabolic_s_equals_b():
    rs = build_root_system("B2")
    for s in enumerate_facets(rs):
        ps = parabolic_set(rs, s, s)
        assert set(ps.levi_part) == set(vanishing_set(rs, s.representative))
        assert ps.unipotent_part == ()


def test_parabolic_a2_edge():
    rs = build_root_system("A2")
    ps = parabolic_set(rs, make_facet(rs, [0, 1]), make_facet(rs, [1]))
    assert set(ps.levi_part) == {A([0, 1], 0), A([0, -1], 0)}
    assert set(ps.unipotent_part) == {A([1, 0], 0), A([1, 1], 0)}


def test_parabolic_precondition():
    rs = build_root_system("A2")
    with pytest.raises(PreconditionError):
        parabolic_set(rs, make_facet(rs, [1]), make_facet(rs, [0, 1]))
    with pytest.raises(PreconditionError):
        verify_floor_ceiling_lemma(rs, make_facet(rs, [2]), make_facet(rs, [0]))


def test_floor_ceiling_a1():
    rs = build_root_system("A1")
    f = facets_by_label(rs)
    report = verify_floor_ceiling_lemma(rs, f["{0}"], f["{}"])
    assert report.equality_roots == (R(1),)
    assert report.counterexamples == ()
    assert report.matches_parabolic and report.falsifications == []


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "C3"])
def test_parabolic_and_chain_properties(name):
    rs = build_root_system(name)
    for s, b in closure_pairs(enumerate_facets(rs)):
        assert parabolic_violations(rs, parabolic_set(rs, s, b)) == []
        assert verify_floor_ceiling_lemma(rs, s, b).falsifications == []
        assert filtration_chain_violations(rs, s, b) == []
        # P_s^u in P_b^u in P_b in P_s, checked on the oracle exponents
        xs, xb = s.representative.coords, b.representative.coords
        for r in rs.roots:
            c = r.coords
            assert (oracles.ceil_exponent(xs, c) >= oracles.ceil_exponent(xb, c)
                    >= oracles.floor_exponent(xb, c) >= oracles.floor_exponent(xs, c))


def test_closure_pairs_count():
    # pairs J_b subset J_s of proper subsets of {0, 1, 2}
    pairs = list(closure_pairs(enumerate_facets(build_root_system("A2"))))
    assert len(pairs) == sum(2 ** k for k in (0, 1, 1, 1, 2, 2, 2))
