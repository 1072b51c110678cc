from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from dantimagic.graph import (
    CycleOrientation,
    all_pairs_distance,
    build_oriented_cycle,
    build_theta_cycle,
    build_unidirectional_cycle,
)
from dantimagic.labeling import (
    DistanceSet,
    DomainError,
    EmptyDistanceSetError,
    Labeling,
    complement_set,
    d_neighborhood,
    first_collision,
    neighborhoods,
    shift_set,
    weigh,
)


def D(*xs):
    return DistanceSet(xs)


def test_distance_set_validation():
    with pytest.raises(EmptyDistanceSetError):
        DistanceSet(())
    with pytest.raises(ValueError):
        D(3, 0)
    with pytest.raises(ValueError):
        D(0, 0)
    with pytest.raises(ValueError):
        D(-1)
    assert DistanceSet.of([3, 0, 3]) == D(0, 3)
    assert DistanceSet.parse("0,1,3") == D(0, 1, 3)
    with pytest.raises(ValueError):
        DistanceSet.parse("1,1")
    with pytest.raises(ValueError):
        DistanceSet.parse("0,x")
    assert str(D(0, 3)) == "{0,3}"


def test_labeling_must_be_permutation():
    with pytest.raises(ValueError):
        Labeling((1, 1, 2))
    with pytest.raises(ValueError):
        Labeling((0, 1, 2))
    assert Labeling.identity(3).values == (1, 2, 3)


def test_neighborhood_examples():
    g = build_theta_cycle(6)
    dm = all_pairs_distance(g)
    assert d_neighborhood(g, dm, 5, D(1)) == frozenset()
    for v in range(6):
        assert d_neighborhood(g, dm, v, D(0)) == {v}
    u = build_unidirectional_cycle(6)
    assert d_neighborhood(u, all_pairs_distance(u), 0, D(0, 3)) == {0, 3}


def test_weights_theta_reverse_labeling():
    rep = weigh(build_theta_cycle(5), None, Labeling((5, 4, 3, 2, 1)), D(1))
    assert rep.weights == (5, 3, 2, 1, 0)
    assert rep.antimagic and rep.witness is None


def test_weights_unidirectional_identity():
    rep = weigh(build_unidirectional_cycle(5), None, Labeling.identity(5), D(0, 1))
    assert rep.weights == (3, 5, 7, 9, 6)
    assert rep.antimagic


def test_two_sinks_collide():
    g = build_oriented_cycle(CycleOrientation.parse("TTFTTF"))
    for perm in itertools.islice(itertools.permutations(range(1, 7)), 50):
        rep = weigh(g, None, Labeling(perm), D(2))
        assert not rep.antimagic
    sinks = sorted(g.sinks)
    rep = weigh(g, None, Labeling.identity(6), D(2))
    assert rep.weights[sinks[0]] == rep.weights[sinks[1]] == 0


def test_collision_witness_is_first_pair():
    # Direct evaluation: identity on C6 with {0,3} gives weights 5,7,9,5,7,9.
    rep = weigh(build_unidirectional_cycle(6), None, Labeling.identity(6), D(0, 3))
    assert rep.weights == (5, 7, 9, 5, 7, 9)
    assert rep.witness == (0, 3)
    assert first_collision([4, 1, 1, 4]) == (0, 3)
    assert first_collision([1, 2, 3]) is None


def test_weigh_length_mismatch():
    with pytest.raises(ValueError):
        weigh(build_unidirectional_cycle(4), None, Labeling.identity(5), D(0))


def test_complement_examples():
    assert complement_set(build_unidirectional_cycle(5), D(1)) == D(0, 2, 3, 4)
    assert complement_set(build_unidirectional_cycle(7), D(0, 3)) == D(1, 2, 4, 5, 6)
    with pytest.raises(DomainError):
        complement_set(build_theta_cycle(5), D(1))
    with pytest.raises(DomainError):
        complement_set(build_unidirectional_cycle(4), D(0, 4))
    with pytest.raises(EmptyDistanceSetError):
        complement_set(build_unidirectional_cycle(3), D(0, 1, 2))


def test_shift_examples():
    assert shift_set(D(0, 3), 2, 7) == D(2, 5)
    assert shift_set(D(0, 1, 3, 4), 1, 10) == D(1, 2, 4, 5)
    assert shift_set(D(5), 5, 8) == D(2)
    with pytest.raises(ValueError):
        shift_set(D(0), 1, 2)


def test_values_beyond_diameter_contribute_nothing():
    g = build_theta_cycle(5)
    assert weigh(g, None, Labeling.identity(5), D(0, 7)).weights == (1, 2, 3, 4, 5)


# --- properties -------------------------------------------------------------


@st.composite
def uni_instances(draw, n_max=9):
    n = draw(st.integers(3, n_max))
    labels = draw(st.permutations(range(1, n + 1)))
    d = draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n - 1))
    return n, Labeling(tuple(labels)), DistanceSet.of(d)


@given(uni_instances())
def test_complement_weight_identity(inst):
    n, f, d = inst
    g = build_unidirectional_cycle(n)
    rest = complement_set(g, d)
    a, b = weigh(g, None, f, d), weigh(g, None, f, rest)
    assert all(x + y == n * (n + 1) // 2 for x, y in zip(a.weights, b.weights))
    assert a.antimagic == b.antimagic


@given(uni_instances(n_max=20), st.integers(0, 40))
def test_shift_conjugacy(inst, k):
    n, f, d = inst
    g = build_unidirectional_cycle(n)
    base = weigh(g, None, f, d).weights
    shifted = weigh(g, None, f, shift_set(d, k, n)).weights
    assert all(shifted[i] == base[(i + k) % n] for i in range(n))


@given(st.integers(3, 10).flatmap(lambda n: st.tuples(
    st.lists(st.booleans(), min_size=n, max_size=n), st.permutations(range(1, n + 1)))))
def test_zero_set_always_antimagic(case):
    bits, labels = case
    g = build_oriented_cycle(CycleOrientation(tuple(bits)))
    rep = weigh(g, None, Labeling(tuple(labels)), D(0))
    assert rep.antimagic
    assert rep.weights == tuple(labels)


@given(st.integers(3, 9).flatmap(lambda n: st.tuples(
    st.lists(st.booleans(), min_size=n, max_size=n),
    st.permutations(range(1, n + 1)),
    st.sets(st.integers(0, n), min_size=1))))
def test_weight_totals_and_witness_contract(case):
    bits, labels, d = case
    g = build_oriented_cycle(CycleOrientation(tuple(bits)))
    d = DistanceSet.of(d)
    dm = all_pairs_distance(g)
    rep = weigh(g, dm, Labeling(tuple(labels)), d)
    expected = sum(
        labels[v] * sum(1 for u in range(g.n) if dm(u, v) is not None and dm(u, v) in d) for v in range(g.n)
    )
    assert sum(rep.weights) == expected
    assert rep.antimagic == (len(set(rep.weights)) == g.n)
    assert (rep.witness is None) == rep.antimagic
    if rep.witness:
        u, v = rep.witness
        assert u < v and rep.weights[u] == rep.weights[v]
    nbhds = neighborhoods(g, d, dm)
    assert all((v in nbhds[v]) == (0 in d) for v in range(g.n))


@given(st.integers(3, 10).flatmap(lambda n: st.tuples(
    st.lists(st.booleans(), min_size=n, max_size=n),
    st.sets(st.integers(0, n + 2), min_size=1))))
def test_cached_layers_match_distance_matrix(case):
    bits, d = case
    g = build_oriented_cycle(CycleOrientation(tuple(bits)))
    d = DistanceSet.of(d)
    assert neighborhoods(g, d) == neighborhoods(g, d, all_pairs_distance(g))
