import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from polwalk.constructions.monographs import homotopic_optimal, lower_bound_graph
from polwalk.constructions.optimal import genus_optimal
from polwalk.constructions.polygon import monograph_4g_gon, standard_monograph
from polwalk.constructions.steiner import ks_polarization
from polwalk.core import (PolarizedGraph, has_complete_walk, is_isomorphic, stats,
                          trace_walks)
from polwalk.errors import InputError, PreconditionError
from polwalk.ops import (add_parallel_edge, blow_up_darts, blow_up_elementary, connected_sum,
                         contract_edge, double_edge, mc_corners, subdivide, surgery)

from conftest import polarized_graphs

LOOP = PolarizedGraph(1, [[0, 1]])
TRIANGLE = PolarizedGraph(3, [[0, 5], [1, 2], [3, 4]])
PATH3 = PolarizedGraph(3, [[0], [1, 2], [3]])
K2 = PolarizedGraph(2, [[0], [1]])
# two triangles (0,1,2) and (3,4,5) joined by the bridge 6 = (2,3)
BARBELL = PolarizedGraph(6, [[0, 5], [1, 2], [3, 4, 12], [6, 11, 13], [7, 8], [9, 10]])


def _sfg(G):
    s = stats(G)
    return s.S, s.A, s.F, s.gamma


# -- contraction and blow-up --------------------------------------------------


def test_contract_bridge_gives_bowtie():
    assert stats(BARBELL).gamma == 0
    H = contract_edge(BARBELL, 6).graph
    assert (H.vertex_count, H.edge_count) == (5, 6)
    assert stats(H).gamma == 0
    assert sorted(H.degrees()) == [2, 2, 2, 2, 4]


def test_contract_tree_of_genus1_optimum():
    G = genus_optimal(1)
    r = contract_edge(G, next(e for e in range(G.edge_count) if not G.is_loop(e)))
    assert stats(r.graph).gamma == 1 and has_complete_walk(r.graph)
    while G.vertex_count > 1:
        G = contract_edge(G, next(e for e in range(G.edge_count) if not G.is_loop(e))).graph
        assert stats(G).gamma == 1 and has_complete_walk(G)
    assert G.edge_count == 6


def test_contract_loop_rejected():
    with pytest.raises(PreconditionError):
        contract_edge(LOOP, 0)


def test_blow_up_inverts_contract():
    H = contract_edge(BARBELL, 6)
    v = H.vertex_map[2]
    arc = [H.dart(d) for d in BARBELL.rotation(3) if d != 13]
    back = blow_up_darts(H.graph, v, arc).graph
    assert is_isomorphic(back, BARBELL)


def test_three_blow_ups_of_genus1_monograph():
    G = lower_bound_graph(1)
    st_ = stats(G)
    assert (st_.S, st_.A, st_.has_mc, st_.gamma) == (4, 6, True, 1)


def test_blow_up_degree2_single_dart_rejected():
    with pytest.raises(PreconditionError):
        blow_up_elementary(TRIANGLE, 0, (0, 1))


def test_blow_up_bad_cut():
    with pytest.raises(InputError):
        blow_up_elementary(TRIANGLE, 0, (0, 0))


# -- surgery and subdivision --------------------------------------------------


def _mc_passage(G, v=None):
    y, x = next((y, x) for y, x in mc_corners(G)
                if (v is None or G.origin(x) == v) and y >> 1 != x >> 1)
    return G.origin(x), y, x


def test_surgery_undoes_subdivision():
    K = ks_polarization(7)
    r = subdivide(K, 0)
    H = r.graph
    v, y, x = _mc_passage(H, r.new_vertices[0])
    back = surgery(H, v, y, x).graph
    assert is_isomorphic(back, K)


def test_surgery_through_degree6_vertex_keeps_mc():
    K = ks_polarization(7)
    v, y, x = _mc_passage(K, 0)
    H = surgery(K, v, y, x).graph
    assert H.edge_count == K.edge_count - 1 and has_complete_walk(H)


def test_surgery_on_pendant_rejected():
    with pytest.raises(PreconditionError):
        surgery(PATH3, 1, 0, 2)


def test_subdivide_loop():
    H = subdivide(LOOP, 0).graph
    assert H.vertex_count == 2
    assert [w.length for w in trace_walks(H).walks] == [2, 2]


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_subdivided_planar_bouquet(n):
    G = PolarizedGraph(1, [list(range(2 * n))])
    assert stats(G).gamma == 0
    for e in range(n):
        r = subdivide(G, e)
        G = subdivide(r.graph, r.new_edges[0]).graph
    st_ = stats(G)
    assert st_.gamma == 0 and st_.has_mc
    assert st_.V == Fraction(6 * n, 2 * n + 1)


def test_subdivide_then_contract_is_identity():
    G = genus_optimal(2)
    r = subdivide(G, 3)
    back = contract_edge(r.graph, r.new_edges[0]).graph
    assert is_isomorphic(back, G)


# -- parallel edges -----------------------------------------------------------


def test_double_edge_makes_bigon():
    G = lower_bound_graph(1)
    b = next(d for d in trace_walks(G).complete_walk.darts
             if (d ^ 1) in trace_walks(G).complete_walk.darts)
    r = double_edge(G, b)
    n = r.new_edges[0]
    walks = [w.darts for w in trace_walks(r.graph).walks]
    assert any(sorted(w) == sorted([b ^ 1, 2 * n + 1]) for w in walks)


def test_diagonals_give_standard_monograph():
    for g in (1, 2, 3):
        G = monograph_4g_gon(g)
        for k in range(g):
            G = add_parallel_edge(G, [4 * k, 4 * k + 2]).graph
        assert is_isomorphic(G, standard_monograph(g))
        assert sorted(w.length for w in trace_walks(G).walks)[:g] == [3] * g


def test_chain_through_degree2_vertex():
    r = add_parallel_edge(PATH3, [0, 2])
    walks = [set(w.darts) for w in trace_walks(r.graph).walks]
    assert {0, 2, 2 * r.new_edges[0] + 1} in walks


def test_parallel_rejects_non_mc_chain():
    with pytest.raises(PreconditionError):
        add_parallel_edge(TRIANGLE, [1])


# -- connected sum ------------------------------------------------------------


def _sum_formula(G1, G2, H):
    s1, s2, s = stats(G1), stats(G2), stats(H)
    return s.V_r == (s1.V_r * s1.S + s2.V_r * s2.S) / (s1.S + s2.S - 1)


def test_sum_of_two_k7():
    K = ks_polarization(7)
    H = connected_sum(K, 0, K, 0).graph
    s = stats(H)
    assert (s.S, s.gamma, s.V_r, s.has_mc) == (13, 8, Fraction(84, 13), True)
    assert _sum_formula(K, K, H)


def test_sum_with_single_edge():
    K = ks_polarization(7)
    H = connected_sum(K, 3, K2, 1).graph
    s = stats(H)
    assert s.gamma == 4 and s.V_r == Fraction(44, 8) and _sum_formula(K, K2, H)


def test_sum_keeps_walks_of_both_summands():
    G1, G2 = genus_optimal(5), genus_optimal(3)
    H = connected_sum(G1, 2, G2, 4)
    ell1, ell2, ell = stats(G1).ell, stats(G2).ell, stats(H.graph).ell
    assert ell[3] == ell1[3] + ell2[3]
    assert stats(H.graph).is_ordinary


CATALOGUE = [
    lambda: standard_monograph(1), lambda: standard_monograph(2),
    lambda: homotopic_optimal(3, 2), lambda: homotopic_optimal(4, 1),
    lambda: lower_bound_graph(2), lambda: genus_optimal(1), lambda: genus_optimal(2),
    lambda: genus_optimal(3), lambda: genus_optimal(4), lambda: genus_optimal(5),
    lambda: ks_polarization(9), lambda: K2, lambda: TRIANGLE,
]


def test_sum_on_catalogue_pairs():
    rng = random.Random(7)
    graphs = [f() for f in CATALOGUE]
    for _ in range(20):
        G1, G2 = rng.choice(graphs), rng.choice(graphs)
        v1, v2 = rng.randrange(G1.vertex_count), rng.randrange(G2.vertex_count)
        H = connected_sum(G1, v1, G2, v2).graph
        assert stats(H).gamma == stats(G1).gamma + stats(G2).gamma
        assert has_complete_walk(H) and _sum_formula(G1, G2, H)


def test_sum_needs_mc():
    theta = PolarizedGraph(2, [[0, 2, 4], [1, 5, 3]])
    with pytest.raises(PreconditionError):
        connected_sum(theta, 0, K2, 0)


# -- properties ---------------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(polarized_graphs(), st.data())
def test_subdivide_deltas(G, data):
    e = data.draw(st.integers(0, G.edge_count - 1))
    H = subdivide(G, e).graph
    S, A, F, g = _sfg(G)
    assert _sfg(H) == (S + 1, A + 1, F, g)
    assert has_complete_walk(H) == has_complete_walk(G)
    if stats(G).is_ordinary:
        assert stats(H).is_ordinary


@settings(max_examples=200, deadline=None)
@given(polarized_graphs(), st.data())
def test_contract_deltas(G, data):
    edges = [e for e in range(G.edge_count) if not G.is_loop(e)]
    assume(edges and G.edge_count > 1)
    e = data.draw(st.sampled_from(edges))
    H = contract_edge(G, e).graph
    S, A, F, g = _sfg(G)
    assert _sfg(H) == (S - 1, A - 1, F, g)
    if has_complete_walk(G):
        assert has_complete_walk(H)


@settings(max_examples=200, deadline=None)
@given(polarized_graphs(), st.data())
def test_blow_up_then_contract_round_trip(G, data):
    assume(has_complete_walk(G))
    mc = set(trace_walks(G).complete_walk.darts)
    v = data.draw(st.integers(0, G.vertex_count - 1))
    rot = G.rotation(v)
    cuts = [(i, j) for i in range(len(rot)) for j in range(len(rot))
            if i != j and rot[i] in mc and rot[j - 1] ^ 1 in mc]
    assume(cuts)
    i, j = data.draw(st.sampled_from(cuts))
    r = blow_up_elementary(G, v, (i, j))
    S, A, F, g = _sfg(G)
    assert _sfg(r.graph) == (S + 1, A + 1, F, g)
    assert has_complete_walk(r.graph)
    back = contract_edge(r.graph, r.new_edges[0]).graph
    assert back == G


@settings(max_examples=200, deadline=None)
@given(polarized_graphs(), st.data())
def test_parallel_edge_contract(G, data):
    assume(has_complete_walk(G))
    mc = trace_walks(G).complete_walk.darts
    both = set(mc)
    start = data.draw(st.integers(0, len(mc) - 1))
    m = data.draw(st.integers(1, 3))
    chain = [mc[(start + t) % len(mc)] for t in range(min(m, len(mc) - 1))]
    assume(chain and all(d ^ 1 in both for d in chain))
    assume(len({d >> 1 for d in chain}) == len(chain))
    r = add_parallel_edge(G, chain)
    n = r.new_edges[0]
    S, A, F, g = _sfg(G)
    assert _sfg(r.graph) == (S, A + 1, F + 1, g)
    walks = [w.darts for w in trace_walks(r.graph).walks]
    target = tuple(chain) + (2 * n + 1,)
    k = target.index(min(target))
    assert target[k:] + target[:k] in walks
    assert has_complete_walk(r.graph)
