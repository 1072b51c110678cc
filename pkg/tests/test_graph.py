from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from dantimagic.graph import (
    UNREACHABLE,
    ComponentFamily,
    Connectivity,
    CycleOrientation,
    InvalidOrderError,
    Kind,
    OrientedGraph,
    TwoRegularSpec,
    all_pairs_distance,
    build_oriented_cycle,
    build_theta_cycle,
    build_unidirectional_cycle,
    build_union,
    classify,
    component_kind,
    mirror,
    theta_path,
)


def one_based(arcs):
    return {(a + 1, b + 1) for a, b in arcs}


def test_unidirectional_arcs():
    assert one_based(build_unidirectional_cycle(3).arcs) == {(1, 2), (2, 3), (3, 1)}


def test_unidirectional_structure():
    assert classify(build_unidirectional_cycle(4)).diameter == 3
    g = build_unidirectional_cycle(7)
    assert g.sinks == g.sources == frozenset()
    info = classify(build_unidirectional_cycle(9))
    assert info.connectivity is Connectivity.STRONG
    assert info.diameter == 8


def test_theta_arcs():
    assert one_based(build_theta_cycle(4).arcs) == {(1, 2), (2, 3), (3, 4), (1, 4)}


def test_theta_structure():
    assert classify(build_theta_cycle(5)).diameter == 3
    g = build_theta_cycle(3)
    assert g.sources == {0}
    assert g.sinks == {2}
    info = classify(build_theta_cycle(6))
    assert info.is_theta_cycle
    assert info.connectivity is Connectivity.WEAK


@pytest.mark.parametrize("builder", [build_unidirectional_cycle, build_theta_cycle])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_small_cycles_rejected(builder, n):
    with pytest.raises(InvalidOrderError):
        builder(n)


def test_oriented_cycle_matches_named_builders():
    assert build_oriented_cycle(CycleOrientation.parse("TTT")) == build_unidirectional_cycle(3)
    assert build_oriented_cycle(CycleOrientation.parse("TTTF")) == build_theta_cycle(4)


def test_alternating_cycle_sinks_and_sources():
    g = build_oriented_cycle(CycleOrientation.parse("TFTFTF"))
    # Direct scan: vertex v_i is a sink when edge i-1 points in and edge i points back.
    bits = [True, False] * 3
    sinks = sum(1 for i in range(6) if bits[i - 1] and not bits[i])
    sources = sum(1 for i in range(6) if not bits[i - 1] and bits[i])
    assert len(g.sinks) == sinks == 3
    assert len(g.sources) == sources == 3


def test_two_sink_cycle_is_not_theta():
    info = classify(build_oriented_cycle(CycleOrientation.parse("TTFTTF")))
    assert len(info.sinks) == 2
    assert not info.is_theta_cycle
    assert not info.is_unidirectional_cycle


def test_orientation_parse_and_str():
    c = CycleOrientation.parse("1101")
    assert c.bits == (True, True, False, True)
    assert str(c) == "TTFT"
    with pytest.raises(ValueError):
        CycleOrientation.parse("TTX")
    with pytest.raises(InvalidOrderError):
        CycleOrientation.parse("TT")


def test_invalid_graphs():
    with pytest.raises(ValueError):
        OrientedGraph(2, ((0, 0),))
    with pytest.raises(ValueError):
        OrientedGraph(2, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        OrientedGraph(2, ((0, 2),))


def test_union_sizes():
    g = build_union(TwoRegularSpec.of((3, 1, Kind.UNIDIRECTIONAL), (4, 1, Kind.UNIDIRECTIONAL)))
    assert (g.n, len(g.arcs), len(set(g.components))) == (7, 7, 2)
    fig = build_union(TwoRegularSpec.of((4, 3, Kind.THETA), (7, 1, Kind.THETA), (10, 1, Kind.THETA)))
    assert fig.n == 29
    assert len(fig.sinks) == len(fig.sources) == 5
    assert len(build_union(TwoRegularSpec.of((3, 2, Kind.THETA))).sinks) == 2


def test_union_layout():
    spec = TwoRegularSpec.of((3, 2, Kind.THETA), (5, 1, Kind.UNIDIRECTIONAL))
    g = build_union(spec)
    assert g.components == (0, 0, 0, 1, 1, 1, 2, 2, 2, 2, 2)
    assert spec.vertex_id(1, 2, 1) == 3
    assert spec.vertex_id(2, 1, 5) == 10
    kinds = [component_kind(g, vs) for vs in g.component_vertices()]
    assert kinds == [Kind.THETA, Kind.THETA, Kind.UNIDIRECTIONAL]
    assert g.is_two_regular()


def test_spec_validation():
    with pytest.raises(ValueError):
        TwoRegularSpec.of((5, 1, Kind.THETA), (4, 1, Kind.THETA))
    with pytest.raises(ValueError):
        ComponentFamily(4, 0)
    with pytest.raises(ValueError):
        ComponentFamily(4, 1, Kind.CUSTOM)
    fam = ComponentFamily(4, 1, Kind.CUSTOM, CycleOrientation.parse("TFTF"))
    assert len(build_union(TwoRegularSpec((fam,))).sinks) == 2


def test_distances_unidirectional_c5():
    dm = all_pairs_distance(build_unidirectional_cycle(5))
    assert dm(0, 3) == 3
    assert dm(3, 0) == 2


def test_distances_theta_c5():
    dm = all_pairs_distance(build_theta_cycle(5))
    assert dm(0, 4) == 1
    assert dm(4, 0) is UNREACHABLE


@pytest.mark.parametrize("n", range(3, 13))
def test_unidirectional_distance_formula(n):
    dm = all_pairs_distance(build_unidirectional_cycle(n))
    for i, j in itertools.product(range(n), repeat=2):
        assert dm(i, j) == (j - i) % n


@pytest.mark.parametrize("n", range(3, 51))
def test_classify_round_trip(n):
    uni = classify(build_unidirectional_cycle(n))
    assert uni.is_unidirectional_cycle and not uni.is_theta_cycle
    assert uni.diameter == n - 1
    theta = classify(build_theta_cycle(n))
    assert theta.is_theta_cycle and not theta.is_unidirectional_cycle
    assert theta.diameter == n - 2


@pytest.mark.parametrize("n", range(3, 9))
def test_orientation_counts(n):
    uni = theta = forward = 0
    for bits in itertools.product((False, True), repeat=n):
        info = classify(build_oriented_cycle(CycleOrientation(bits)))
        uni += info.is_unidirectional_cycle
        theta += info.is_theta_cycle
        forward += all(bits)
    assert forward == 1
    assert uni == 2
    assert theta == 2 * n


def test_theta_path_and_mirror():
    g = build_theta_cycle(5)
    assert theta_path(g, list(range(5))) == [0, 1, 2, 3, 4]
    m = mirror(g)
    assert m.sources == g.sinks
    assert theta_path(m, list(range(5))) == [4, 3, 2, 1, 0]


orientations = st.integers(3, 12).flatmap(lambda n: st.lists(st.booleans(), min_size=n, max_size=n))


@given(orientations)
def test_handshake_and_sink_source_balance(bits):
    g = build_oriented_cycle(CycleOrientation(tuple(bits)))
    assert sum(map(g.out_degree, range(g.n))) == sum(map(g.in_degree, range(g.n))) == len(g.arcs)
    assert len(g.sinks) == len(g.sources)
    for a, b in g.arcs:
        assert b in g.out_adj[a] and a in g.in_adj[b]


@given(orientations)
def test_distance_matrix_axioms(bits):
    g = build_oriented_cycle(CycleOrientation(tuple(bits)))
    dm = all_pairs_distance(g)
    arcs = set(g.arcs)
    for u in range(g.n):
        assert dm(u, u) == 0
        for w in range(g.n):
            assert (dm(u, w) == 1) == ((u, w) in arcs)
            for x in range(g.n):
                if dm(u, x) is not UNREACHABLE and dm(x, w) is not UNREACHABLE:
                    assert dm(u, w) is not UNREACHABLE and dm(u, w) <= dm(u, x) + dm(x, w)


@given(st.lists(st.tuples(st.integers(3, 7), st.integers(1, 3), st.sampled_from([Kind.UNIDIRECTIONAL, Kind.THETA])), min_size=1, max_size=4))
def test_union_sink_counts_add_up(fams):
    fams = sorted(fams, key=lambda f: f[0])
    g = build_union(TwoRegularSpec.of(*fams))
    assert len(g.sinks) == len(g.sources) == sum(m for _, m, k in fams if k is Kind.THETA)
    assert g.is_two_regular()
