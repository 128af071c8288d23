import pytest

from weylgeom import ConsistencyError, RootSystem
from weylgeom.charring import irrep_character
from weylgeom.duality import (
    E6Duality,
    Triality,
    chamber_automorphism_check,
    dn_swap_automorphism,
    e7_inner_ideal_check,
    e7_rank_one_check,
    wprime_orbits,
    zero_sum_triple_orbits,
)
from weylgeom.geometry import Geometry

W1 = (1, 0, 0, 0, 0, 0)
L3 = (-1, 0, 1, 0, 0, 0)
L4 = (0, 0, -1, 1, 0, 0)
LAM2 = (0, 1, 0, 0, 0, -1)
MINUS_W6 = (0, 0, 0, 0, 0, -1)

S2_FROZEN = frozenset({
    W1, L3, L4, (0, 1, 0, -1, 1, 0), (0, 1, 0, 0, -1, 1),
    (0, 1, 0, 0, 0, -1)})


@pytest.fixture(scope="module")
def dual():
    return E6Duality()


@pytest.fixture(scope="module")
def tri():
    return Triality()


# the order-2 duality of the 27-weight geometry


def test_phi_index_is_the_diagram_flip(dual):
    assert [dual.phi_index(i) for i in range(1, 7)] == [6, 2, 5, 4, 3, 1]
    for i in range(1, 7):
        assert dual.phi_index(dual.phi_index(i)) == i


def test_phi_weight_maps_weights_to_dual_weights(dual):
    assert dual.phi_weight(W1) == (0, 0, 0, 0, 0, 1)
    for w in dual.weights:
        assert dual.phi_weight(dual.phi_weight(w)) == w
    image = {dual.phi_weight(w) for w in dual.weights}
    assert image == {tuple(-x for x in w) for w in dual.weights}


def test_phi_weight_twists_reflections(dual):
    for w in dual.weights:
        for i in range(1, 7):
            assert (dual.phi_weight(dual.rs.reflect(i, w))
                    == dual.rs.reflect(dual.phi_index(i), dual.phi_weight(w)))


def test_hyperlines_have_ten_weights(dual):
    for w in dual.weights:
        assert len(dual.hyperline(w)) == 10
        assert dual.hyperline(w) <= dual.weights


def test_standard_s2_support_frozen(dual):
    assert dual.standard_support(2) == S2_FROZEN


def test_psi_standard_realizes_the_flip(dual):
    for delta in range(1, 7):
        out = dual.psi_standard(delta)
        assert out == dual.standard_support(dual.phi_index(delta))


def test_psi_is_an_involution_on_standard_supports(dual):
    for delta in range(1, 7):
        s = dual.standard_support(delta)
        assert dual.psi_support(dual.psi_support(s)) == s


def test_brace_closure_controls(dual):
    assert dual.brace_closed(dual.standard_support(2))
    s5 = dual.standard_support(5)
    assert not dual.brace_closed(s5)
    assert not dual.brace_closed(frozenset(s5 | {MINUS_W6}))


def test_psi_on_intersections(dual):
    s2 = dual.standard_support(2)
    s5 = dual.standard_support(5)
    x = s2 & s5
    assert len(x) == 4
    assert dual.psi_support(x) == dual.standard_support(3)
    y = frozenset(x | {(0, 1, 0, 0, -1, 1)})
    assert dual.psi_support(y) == frozenset({W1})
    assert dual.psi_support(dual.psi_support(x)) == s5
    assert dual.psi_support(dual.psi_support(x)) > x


def test_psi_rejects_empty(dual):
    with pytest.raises(ValueError):
        dual.psi_support(frozenset())


def test_wprime_orbit_sizes(dual):
    orbits = wprime_orbits(dual.rs, 6, dual.weights)
    assert [len(o) for o in orbits] == [1, 10, 16]
    assert orbits[0] == (MINUS_W6,)
    assert W1 in orbits[1]
    assert LAM2 in orbits[2]


def test_brace_dimensions(dual):
    hist = {}
    for my in sorted(dual.weights):
        k, supp = dual.dim_brace_vplus(my)
        hist[k] = hist.get(k, 0) + 1
        assert len(supp) == (k if k else 0)
    assert hist == {0: 10, 6: 16, 17: 1}


def test_brace_dimension_fixtures(dual):
    k, supp = dual.dim_brace_vplus(W1)
    assert (k, supp) == (0, frozenset())
    k, supp = dual.dim_brace_vplus(LAM2)
    assert k == 6
    assert supp == dual.standard_support(2)
    k, supp = dual.dim_brace_vplus(MINUS_W6)
    assert k == 17
    assert W1 in supp


def test_verify_ln_all_types(dual):
    for delta in range(1, 7):
        assert dual.verify_ln(delta)


def test_verify_ln_perturbation_control(dual):
    # widening the dual support to every weight must break both conditions
    a_ok, b_ok = dual.ln_conditions(dual.standard_support(1), dual.weights)
    assert not a_ok
    assert not b_ok


def test_e6_chamber_automorphism(dual):
    index_map, op = dual.psi_op()
    assert chamber_automorphism_check(dual.geometry, index_map, op)


# triality on the D4 vector weights

TABLE_FROZEN = [
    ("e1", (None, None, None, "e1", None, "e2", "e3", "f4")),
    ("e2", (None, None, "e1", None, "e2", None, "e4", "f3")),
    ("e3", (None, "e1", None, None, "e3", "e4", None, "f2")),
    ("e4", ("e1", None, None, None, "f4", "f3", "f2", None)),
    ("f4", (None, "e2", "e3", "e4", None, None, None, "f1")),
    ("f3", ("e2", None, "f4", "f3", None, None, "f1", None)),
    ("f2", ("e3", "f4", None, "f2", None, "f1", None, None)),
    ("f1", ("e4", "f3", "f2", None, "f1", None, None, None)),
]


def test_triality_table_matches_frozen(tri):
    rows = tri.table()
    assert len(rows) == 8 and all(len(r) == 8 for r in rows)
    for (label, want), got in zip(TABLE_FROZEN, rows):
        assert got == want, label


def test_triality_table_cell_fixtures(tri):
    rows = {lab: dict(zip(tri.LABELS, row))
            for lab, row in zip(tri.LABELS, tri.table())}
    assert rows["e1"]["e4"] == "e1"
    assert rows["e1"]["e1"] is None
    assert rows["f1"]["e1"] == "e4"


def test_trilinear_form(tri):
    assert tri.t_nonzero("e4", "e4", "e4")
    assert not tri.t_nonzero("e1", "e1", "e1")
    # pairing with the product: t(a,b,c) != 0 iff c* appears in a relabeled
    # product; spot-check a full row of the honest product
    for b in tri.LABELS:
        w = tri.star_label("e1", b)
        hits = [c for c in tri.LABELS if tri.t_nonzero("e1", b, c)]
        assert len(hits) <= 1
        if w is None:
            assert hits == []


def test_star_fixtures(tri):
    e1 = tri.label_weight["e1"]
    assert tri.star_support((e1,), tri.weights) \
        == tri.geometry.delta_space(3).support
    assert tri.star_support(tri.weights, (e1,)) \
        == tri.geometry.delta_space(4).support


def test_d4_standard_supports(tri):
    g = tri.geometry
    eps = [tri.label_weight["e%d" % i] for i in (1, 2, 3, 4)]
    f4 = tri.label_weight["f4"]
    assert g.delta_space(2).support == frozenset(eps[:2])
    assert g.delta_space(3).support == frozenset(eps[:3] + [f4])
    assert g.delta_space(4).support == frozenset(eps)


def test_triality_psi_cycles_the_chamber(tri):
    g = tri.geometry
    s1 = g.delta_space(1).support
    s3 = g.delta_space(3).support
    s4 = g.delta_space(4).support
    assert tri.psi(1, s1) == (3, s3)
    assert tri.psi(3, s3) == (4, s4)
    assert tri.psi(4, s4) == (1, s1)
    d2, img = tri.psi(2, g.delta_space(2).support)
    assert (d2, img) == (2, g.delta_space(2).support)


def test_triality_psi_cubed_is_identity_on_points(tri):
    for w in tri.weights:
        d, s = 1, frozenset((w,))
        for _ in range(3):
            d, s = tri.psi(d, s)
        assert (d, s) == (1, frozenset((w,)))


def test_d4_chamber_automorphism(tri):
    index_map, op = tri.psi_op()
    assert index_map == {1: 3, 2: 2, 3: 4, 4: 1}
    assert chamber_automorphism_check(tri.geometry, index_map, op)


def test_dn_swap_automorphism():
    for name in ("D4", "D5"):
        g = Geometry(RootSystem.named(name), 1)
        index_map, op = dn_swap_automorphism(g)
        n = g.rs.rank
        assert index_map[n - 1] == n and index_map[n] == n - 1
        assert chamber_automorphism_check(g, index_map, op)


# orbit bookkeeping


def test_wprime_orbits_d4_halfspin():
    rs = RootSystem.named("D4")
    w3 = set(irrep_character(rs, (0, 0, 1, 0)).weights)
    orbits = wprime_orbits(rs, 4, w3)
    assert [len(o) for o in orbits] == [4, 4]
    tops = [(0, 0, 1, 0) in o for o in orbits]
    bots = [(0, 0, -1, 0) in o for o in orbits]
    assert tops.count(True) == 1 and bots.count(True) == 1
    assert tops != bots
    assert set(orbits[0]) | set(orbits[1]) == w3


def test_zero_sum_triples_e6():
    rs = RootSystem.named("E6")
    wts = set(irrep_character(rs, (1, 0, 0, 0, 0, 0)).weights)
    triples, orbits = zero_sum_triple_orbits(rs, wts, wts, wts)
    assert len(triples) == 270
    assert [len(o) for o in orbits] == [270]
    for a, b, c in triples:
        assert all(x + y + z == 0 for x, y, z in zip(a, b, c))


def test_zero_sum_triples_d4():
    rs = RootSystem.named("D4")
    w1 = set(irrep_character(rs, (1, 0, 0, 0)).weights)
    w3 = set(irrep_character(rs, (0, 0, 1, 0)).weights)
    w4 = set(irrep_character(rs, (0, 0, 0, 1)).weights)
    triples, orbits = zero_sum_triple_orbits(rs, w1, w3, w4)
    assert len(triples) == 32
    assert [len(o) for o in orbits] == [32]


# the 56-weight system


@pytest.fixture(scope="module")
def ge7():
    return Geometry(RootSystem.named("E7"), 7)


def test_e7_rank_one(ge7):
    assert e7_rank_one_check(ge7)


def test_e7_inner_ideals(ge7):
    for delta in range(1, 8):
        assert e7_inner_ideal_check(ge7, delta)


def test_e7_inner_ideal_control(ge7):
    # a set holding both extreme weights cannot be closed: their sum with
    # any third weight lands back in the weight set
    hw = ge7.hw
    loose = frozenset({hw, tuple(-x for x in hw)})

    class Fake:
        weights = ge7.weights

        class _Sp:
            def __init__(self, sup):
                self.support = sup

        def delta_space(self, d):
            return Fake._Sp(loose)

    assert not e7_inner_ideal_check(Fake(), 1)
