from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from projnet.metrics import (ALL_PAIRS, LEAF_TO_LEAF, MetricsError, TrafficScope, analyze,
                             brute_force_arc_loads, distance_metrics, dragonfly_hierarchical,
                             generalized_moore_check, generalized_moore_distribution,
                             gm_avg_distance_approx, indirect_leaf_bound, moore_bound, terminal_bound,
                             utilization)
from projnet.topology import build, from_edge_list

from conftest import to_nx


def test_heawood_distances():
    rep = analyze(build("pn", q=2), per_source=True)
    assert rep.W == {1: 42, 2: 84, 3: 56}
    assert rep.k == 3 and rep.kbar == Fraction(27, 13)
    assert set(rep.per_source_W) == {(0, 3, 6, 4)}
    assert rep.u == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_pn_average_distance_closed_form(q):
    _, k, kbar = distance_metrics(build("pn", q=q))
    assert k == 3
    assert kbar == Fraction(5 * q * q + 3 * q + 1, 2 * q * q + 2 * q + 1)


def test_demi_pn_27_distance():
    _, k, kbar = distance_metrics(build("demi_pn", q=27))
    assert k == 2 and kbar == Fraction(1123416, 572292)


def test_oft_leaf_scope():
    rep = analyze(build("oft", q=2), LEAF_TO_LEAF)
    assert (rep.k, rep.kbar, rep.u) == (2, 2, 1)
    with pytest.raises(MetricsError):
        analyze(build("pn", q=2), LEAF_TO_LEAF)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_demi_pn_utilization_theorem(q):
    assert utilization(build("demi_pn", q=q)) == Fraction(2 * q * q + q + 1, 2 * q * (q + 1))


def test_mms5_balanced():
    assert utilization(build("mms", q=5)) == 1


@pytest.mark.parametrize("family,params", [
    ("pn", {"q": 3}), ("demi_pn", {"q": 3}), ("mms", {"q": 3}), ("oft", {"q": 2}), ("mlfm", {"n": 4}),
    ("dragonfly", {"h": 2}), ("hamming", {"n": 4}), ("paley", {"q": 13}), ("turan", {"n": 9, "r": 3}),
])
def test_accumulation_matches_enumeration(family, params):
    G = build(family, **params)
    scope = LEAF_TO_LEAF if G.has_spines else ALL_PAIRS
    assert analyze(G, scope).arc_loads == brute_force_arc_loads(G, scope)


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(3, 12))
    seed = draw(st.integers(0, 10**6))
    p = draw(st.floats(0.2, 0.8))
    H = nx.gnp_random_graph(n, p, seed=seed)
    # close gaps with a path so the graph is connected
    H.add_edges_from((i, i + 1) for i in range(n - 1) if not nx.has_path(H, i, i + 1))
    return from_edge_list("".join(f"{u} {v}\n" for u, v in H.edges()))


@settings(max_examples=60)
@given(connected_graphs())
def test_random_graphs_against_oracles(G):
    rep = analyze(G)
    assert rep.arc_loads == brute_force_arc_loads(G)
    H = to_nx(G)
    lengths = dict(nx.all_pairs_shortest_path_length(H))
    assert rep.k == max(max(d.values()) for d in lengths.values())
    total = sum(sum(d.values()) for d in lengths.values())
    assert rep.kbar == Fraction(total, G.N * (G.N - 1))
    # each ordered pair pushes one unit across each hop of its path
    assert sum(rep.arc_loads.values()) == total
    assert 0 < rep.u <= 1


@settings(max_examples=15)
@given(connected_graphs(), st.integers(2, 5))
def test_thread_count_does_not_change_results(G, threads):
    a, b = analyze(G), analyze(G, threads=threads)
    assert (a.W, a.kbar, a.arc_loads, a.u) == (b.W, b.kbar, b.arc_loads, b.u)


def test_disconnected_scope_rejected():
    G = from_edge_list("0 1\n2 3\n")
    with pytest.raises(MetricsError):
        analyze(G)
    with pytest.raises(MetricsError):
        brute_force_arc_loads(G)


def test_unknown_scope():
    with pytest.raises(MetricsError):
        TrafficScope("some")


def test_mms_load_classes():
    rep = analyze(build("mms", q=7))
    assert set(rep.load_by_class) == {"local", "global"}
    assert sum(rep.load_by_class.values()) == sum(rep.arc_loads.values())


def test_report_serialisation():
    rep = analyze(build("demi_pn", q=2))
    d = rep.to_dict()
    assert d["schema"] == 1
    assert d["u"] == {"num": 11, "den": 12, "value": 0.9167}
    assert rep.w_csv().splitlines() == ["t,W", "1,18", "2,24"]
    assert rep.load_histogram_csv().splitlines()[0] == "load,load_float,arcs"


def test_moore_bound():
    assert moore_bound(3, 2) == 10
    assert moore_bound(7, 2) == 50
    assert moore_bound(57, 2) == 3250
    assert moore_bound(3, 3) == 22
    for bad in [(2, 2), (1, 3), (3, 0)]:
        with pytest.raises(MetricsError):
            moore_bound(*bad)


def test_generalized_moore():
    assert generalized_moore_distribution(3, 3, 14) == [1, 3, 6, 4]
    assert generalized_moore_check(build("pn", q=2))
    assert generalized_moore_check(build("hamming", n=5))
    assert generalized_moore_check(build("paley", q=13))
    assert generalized_moore_check(build("mms", q=5))
    assert not generalized_moore_check(build("dragonfly", h=3))
    assert not generalized_moore_check(build("hypercube", n=4))
    with pytest.raises(MetricsError):
        generalized_moore_check(build("demi_pn", q=2))


def test_gm_average_distance():
    assert round(gm_avg_distance_approx(24, 3, 1106), 3) == 2.479
    assert round(gm_avg_distance_approx(29, 2, 722), 4) == 1.9598
    assert gm_avg_distance_approx(9, 1, 10) == pytest.approx(0.9)
    with pytest.raises(MetricsError):
        gm_avg_distance_approx(10, 2, 5)


def test_terminal_bound():
    v2 = terminal_bound(64, 2, 1.96)
    assert v2 == pytest.approx(64**2 * 1.96 / (0.04 * 2.96**2))
    v3 = terminal_bound(64, 3, 2.5)
    assert v3 > v2
    near = [terminal_bound(64, 2, 2 - 10**-e) for e in range(1, 6)]
    assert near == sorted(near)
    with pytest.raises(MetricsError):
        terminal_bound(64, 2, 2.0)


def test_indirect_leaf_bound():
    assert indirect_leaf_bound(17, 0, 34) == 562 >= 546
    assert indirect_leaf_bound(3, 0, 6) == 16 >= 14
    with pytest.raises(MetricsError):
        indirect_leaf_bound(5, 6, 10)


def test_dragonfly_hierarchical_closed_form():
    for h in (2, 3, 7):
        G = build("dragonfly", h=h)
        rep = dragonfly_hierarchical(G)
        a, g = 2 * h, 2 * h * h + 1
        assert rep.kbar == Fraction((g - 1) * (3 * a - 2) + a - 1, g * a - 1)
        assert sum(rep.arc_loads.values()) == sum(t * c for t, c in rep.W.items())
        assert 0 < rep.u <= 1
    with pytest.raises(MetricsError):
        dragonfly_hierarchical(build("pn", q=2))


@pytest.mark.parametrize("n,degree,seed", [(200, 10, 2), (722, 29, 0)])
def test_random_loads_match_edge_betweenness(n, degree, seed):
    # many distinct path counts per source, large common denominators
    G = build("random_regular", n=n, degree=degree, seed=seed)
    rep = analyze(G)
    eb = nx.edge_betweenness_centrality(to_nx(G), normalized=False)
    for (a, b), v in eb.items():
        both = rep.arc_loads[(a, b)] + rep.arc_loads[(b, a)]
        assert float(both) == pytest.approx(2 * v, rel=1e-12)
