import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from polwalk.constructions.optimal import GENUS5_WALKS, genus_optimal
from polwalk.constructions.polygon import monograph_4g_gon, standard_monograph
from polwalk.constructions.steiner import ks_polarization
from polwalk.core import (PolarizedGraph, canonical_code, dart, delete_edges, edge_of,
                          find_complete_walk, format_dart, from_faces, has_complete_walk,
                          is_isomorphic, parse_dart, reduce_to_condition_C, reduced_valences,
                          relabel_vertices, reverse, side_of, stats, tau, trace_walks)
from polwalk.errors import (InputError, NotAPolarizationError, PreconditionError,
                            StructuralError)
from polwalk.textio import dumps, loads

from conftest import polarized_graphs, random_graph

LOOP = PolarizedGraph(1, [[0, 1]])
# ccw triangle: edges 0=(0,1), 1=(1,2), 2=(2,0)
TRIANGLE = PolarizedGraph(3, [[0, 5], [1, 2], [3, 4]])
# planar theta graph: three parallel edges, opposite orders at the two ends
THETA = PolarizedGraph(2, [[0, 2, 4], [1, 5, 3]])


def _cyclic_equal(a, b):
    a, b = list(a), list(b)
    return len(a) == len(b) and any(a[i:] + a[:i] == b for i in range(len(a)))


# -- darts -------------------------------------------------------------------


def test_dart_encoding():
    d = dart(5, 1)
    assert d == 11 and edge_of(d) == 5 and side_of(d) == 1
    assert reverse(reverse(d)) == d and reverse(d) != d
    assert format_dart(10) == "5+" and format_dart(11) == "5-"
    assert parse_dart("5+") == 10 and parse_dart("5-") == 11 and parse_dart("7") == 7


@pytest.mark.parametrize("token", ["", "x+", "-1", "3*"])
def test_parse_dart_rejects(token):
    with pytest.raises(InputError):
        parse_dart(token)


def test_rotation_must_cover_each_dart_once():
    with pytest.raises(InputError):
        PolarizedGraph(1, [[0, 0]])
    with pytest.raises(InputError):
        PolarizedGraph(2, [[0], [2]])


# -- tau ----------------------------------------------------------------------


def test_tau_loop_has_two_fixed_points():
    assert tau(LOOP, 0) == 0 and tau(LOOP, 1) == 1


def test_tau_pendant_rebounds():
    G = PolarizedGraph(3, [[0, 2], [1], [3]])
    assert tau(G, 0) == 1


def test_tau_triangle_orbits_have_length_3():
    for d in range(6):
        orbit = [d]
        while tau(TRIANGLE, orbit[-1]) != d:
            orbit.append(tau(TRIANGLE, orbit[-1]))
        assert len(orbit) == 3


def test_tau_unknown_dart():
    with pytest.raises(InputError):
        tau(TRIANGLE, 6)


# -- walks and stats ----------------------------------------------------------


def test_standard_monograph_genus1_walks():
    w = trace_walks(standard_monograph(1))
    assert [x.length for x in w.walks] == [3, 3]
    assert w.complete_walk is not None


def test_triangle_walks_both_complete():
    w = trace_walks(TRIANGLE)
    assert [x.length for x in w.walks] == [3, 3]
    assert w.complete_index == 0
    st = stats(TRIANGLE)
    assert (st.chi, st.gamma) == (2, 0)


def test_genus5_walks_and_itinerary():
    G = genus_optimal(5)
    w = trace_walks(G)
    assert len(w.walks) == 9
    assert sorted(x.length for x in w.walks) == [3] * 8 + [26]
    expected = [v - 1 for v in GENUS5_WALKS[0][:-1]]
    assert _cyclic_equal(w.complete_walk.itinerary(G)[:-1], expected)


def test_stats_octagon_monograph():
    st = stats(monograph_4g_gon(2))
    assert (st.S, st.A, st.F, st.chi, st.gamma) == (1, 4, 1, -2, 2)


def test_stats_genus5():
    st = stats(genus_optimal(5))
    assert (st.S, st.A, st.F, st.gamma) == (8, 25, 9, 5)
    assert st.V == Fraction(50, 8) and st.V_r == Fraction(50, 8) and st.is_ordinary


def test_stats_k7():
    st = stats(ks_polarization(7))
    assert (st.S, st.A, st.F, st.gamma) == (7, 21, 8, 4)
    assert st.V == st.V_r == 6


def test_disconnected_is_structural_error():
    G = PolarizedGraph(2, [[0, 1], [2, 3]])
    with pytest.raises(StructuralError):
        trace_walks(G)


# -- complete walk ------------------------------------------------------------


def test_find_complete_walk_genus5():
    r = find_complete_walk(genus_optimal(5))
    assert r.walk.length == 26 and r.steps <= 100


def test_find_complete_walk_loop():
    r = find_complete_walk(LOOP)
    assert r.walk.length == 1


def test_two_loop_bouquet_always_has_complete_walk():
    # every one of the 3! cyclic orders of a 1-vertex 2-loop graph has an MC
    from itertools import permutations
    for rest in permutations([1, 2, 3]):
        G = PolarizedGraph(1, [[0, *rest]])
        assert has_complete_walk(G)


def test_torus_bouquet_has_mc_and_theta_has_none():
    torus = PolarizedGraph(1, [[0, 2, 1, 3]])
    assert stats(torus).gamma == 1 and has_complete_walk(torus)
    assert stats(THETA).gamma == 0 and not has_complete_walk(THETA)


# -- reduction ----------------------------------------------------------------


def test_reduce_identity_on_condition_c():
    G = ks_polarization(7)
    assert reduce_to_condition_C(G) == G


def test_reduce_removes_bigon():
    # path 0-1-2 with edge 1-2 doubled; the bigon is a length-2 walk
    G = PolarizedGraph(3, [[0], [1, 2, 4], [3, 5]])
    assert 2 in [w.length for w in trace_walks(G).walks]
    R = reduce_to_condition_C(G)
    assert R.edge_count == 2 and stats(R).gamma == 0
    assert reduced_valences(R) == reduced_valences(G)


def test_reduce_removes_planar_loop_in_genus1():
    G = genus_optimal(1)
    mc = set(trace_walks(G).complete_walk.darts)
    v, x = next((v, x) for v in range(G.vertex_count) for x in G.rotation(v)
                if G.succ(x) in mc)
    n = G.edge_count
    rot = [list(r) for r in G.rotations]
    i = rot[v].index(x)
    rot[v][i + 1:i + 1] = [2 * n + 1, 2 * n]
    H = PolarizedGraph(G.vertex_count, rot)
    assert 1 in stats(H).ell and stats(H).gamma == 1 and has_complete_walk(H)
    R = reduce_to_condition_C(H)
    assert R == G


def test_reduce_needs_mc():
    with pytest.raises(PreconditionError):
        reduce_to_condition_C(PolarizedGraph(3, [[0, 2, 4], [1, 5, 3, 6], [7]]))


# -- from_faces ---------------------------------------------------------------


def test_from_faces_genus5_list():
    G = genus_optimal(5)
    assert stats(G).gamma == 5


def test_from_faces_not_a_polarization():
    # two parallel edges; the faces force a split cycle at vertex 1
    with pytest.raises(NotAPolarizationError):
        from_faces(2, [[0, 1], [2, 5, 4, 3]], [0, 1, 0, 1, 0, 1])


def test_from_faces_rejects_duplicate_dart():
    with pytest.raises(InputError):
        from_faces(1, [[0, 0]], [0, 0])


# -- isomorphism and text format ----------------------------------------------


def test_isomorphism_under_relabelling():
    G = genus_optimal(2)
    perm = list(range(G.vertex_count))[::-1]
    H = relabel_vertices(G, perm)
    assert is_isomorphic(G, H) and canonical_code(G) == canonical_code(H)
    assert not is_isomorphic(genus_optimal(1), genus_optimal(2))


def test_text_round_trip_and_normalisation():
    text = "# comment\npolgraph 1\nvertices 1\nedges 2\nv 0: 1+ 0- 1- 0+\n"
    G = loads(text)
    out = dumps(G)
    assert out.splitlines()[3] == "v 0: 0+ 1+ 0- 1-"
    assert dumps(loads(out)) == out


@pytest.mark.parametrize("text", [
    "",
    "polgraph 2\nvertices 1\nedges 0\nv 0:\n",
    "polgraph 1\nvertices 1\nedges 1\nv 0: 0+\n",
    "polgraph 1\nvertices 1\nedges 1\nv 0: 0+ 0+\n",
    "polgraph 1\nvertices 2\nedges 1\nv 0: 0+ 0-\n",
    "polgraph 1\nvertices 1\nedges 1\nv 0: 0+ 1-\n",
])
def test_text_rejects_bad_input(text):
    with pytest.raises(InputError):
        loads(text)


# -- properties ---------------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(polarized_graphs())
def test_tau_is_a_bijection(G):
    images = [tau(G, d) for d in range(G.dart_count)]
    assert sorted(images) == list(range(G.dart_count))


@settings(max_examples=200, deadline=None)
@given(polarized_graphs())
def test_walks_partition_darts_and_chi_even(G):
    w = trace_walks(G)
    darts = [d for x in w.walks for d in x.darts]
    assert sorted(darts) == list(range(G.dart_count))
    st = stats(G, w)
    assert st.chi % 2 == 0 and st.chi <= 2 and st.gamma >= 0
    assert st.A_r <= st.A and st.V_r <= st.V
    assert st.satisfies_C == (1 not in st.ell and 2 not in st.ell)


@settings(max_examples=300, deadline=None)
@given(polarized_graphs())
def test_find_complete_walk_matches_all_orbits(G):
    r = find_complete_walk(G)
    oracle = any(x.edges() == set(range(G.edge_count)) for x in trace_walks(G).walks)
    assert (r.walk is not None) == oracle
    assert r.steps <= 4 * G.edge_count
    if r.walk is not None:
        assert r.walk.edges() == set(range(G.edge_count))


@settings(max_examples=200, deadline=None)
@given(polarized_graphs())
def test_from_faces_inverts_trace(G):
    faces = [list(x.darts) for x in trace_walks(G).walks]
    H = from_faces(G.vertex_count, faces, G.origin_array())
    assert H == G and is_isomorphic(G, H)


@settings(max_examples=200, deadline=None)
@given(polarized_graphs())
def test_text_round_trip(G):
    assert loads(dumps(G)) == G


@settings(max_examples=300, deadline=None)
@given(polarized_graphs(max_S=6, max_extra=8))
def test_reduce_preserves_genus_and_reduced_valence(G):
    if G.vertex_count < 3 or not has_complete_walk(G):
        return
    R = reduce_to_condition_C(G)
    assert R.vertex_count == G.vertex_count
    assert stats(R).gamma == stats(G).gamma
    assert reduced_valences(R) == reduced_valences(G)
    assert stats(R).satisfies_C and has_complete_walk(R)


def test_delete_edges_renumbers():
    G, m = delete_edges(TRIANGLE, [1])
    assert G.edge_count == 2 and m == {0: 0, 2: 1}


def test_random_graph_helper_is_connected():
    rng = random.Random(3)
    for _ in range(20):
        assert random_graph(rng, 5, 7).is_connected()
