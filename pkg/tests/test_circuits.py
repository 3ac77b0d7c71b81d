import pytest
from hypothesis import given, settings

from bsscl.circuits import (
    enumerate_embedded_circuits,
    enumerate_potential_disks,
    mu,
    omega,
    visits_from_edge_vector,
)
from bsscl.errors import LimitExceeded
from bsscl.turngraph import TYPE_L, TYPE_M, build_turn_graph
from bsscl.words import GroupParams, cyclically_reduce, parse

from oracles import exhaustive_potential_disks
from wordgen import zero_exponent_cyclic

P23 = GroupParams(2, 3)


def graph_of(text, params=P23):
    x, _ = cyclically_reduce(parse(text, params), params)
    return build_turn_graph(x)


def test_length_two_circuits_and_disks():
    g = graph_of("t a t^-1 a")
    circuits = enumerate_embedded_circuits(g)
    assert [c.edges for c in circuits] == [(0,), (1,)]  # the two self-loops
    disks = enumerate_potential_disks(g, circuits)
    by_vec = {d.edge_vector: d for d in disks}
    # left loop needs 2 traversals (2 | 2*1), right loop needs 3 (3 | 3*1)
    assert set(by_vec) == {(2, 0), (0, 3)}
    left, right = by_vec[(2, 0)], by_vec[(0, 3)]
    assert (left.circuit_count, left.omega, left.mu, left.kind) == (2, 2, 2, TYPE_M)
    assert (right.circuit_count, right.omega, right.mu, right.kind) == (3, 3, 3, TYPE_L)


def test_omega_counts_visits_with_multiplicity():
    g = graph_of("t a t^-1 a t a t^-1 a^2")
    # circuit 1 -> 3 -> 1 visits both TypeM turns once
    vec = [0] * len(g.edges)
    vec[g.edges.index((1, 3))] = 1
    vec[g.edges.index((3, 1))] = 1
    assert visits_from_edge_vector(vec, g) == (1, 0, 1, 0)
    assert omega(vec, g) == 2
    assert mu(vec, g) == 2
    vec2 = [2 * x for x in vec]
    assert omega(vec2, g) == 4


def test_mixed_mu_is_gcd():
    g = graph_of("a^2 t^2 a t^-1 a t^-1")
    circuits = enumerate_embedded_circuits(g)
    # any circuit through a Mixed turn has mu = gcd(2,3) = 1
    mixed = [c for c in circuits if len(c.nodes) > 2]
    assert mixed
    assert mu(mixed[0].edge_vector, g) == 1


def test_circuit_cap():
    g = graph_of("t a t^-1 a t a t^-1 a^2")
    with pytest.raises(LimitExceeded):
        enumerate_embedded_circuits(g, cap=2)
    with pytest.raises(LimitExceeded):
        enumerate_potential_disks(g, cap=5)


def test_enumeration_is_deterministic():
    g = graph_of("t a t^-1 a t a t^-1 a^2")
    a = enumerate_embedded_circuits(g)
    b = enumerate_embedded_circuits(g)
    assert a == b
    assert enumerate_potential_disks(g, a) == enumerate_potential_disks(g, b)


@pytest.mark.parametrize(
    "text,params",
    [
        ("t a t^-1 a", P23),
        ("t a t^-1 a^2", P23),
        ("t a t^-1 a t a t^-1 a^2", P23),
        ("a^2 t^2 a t^-1 a t^-1", P23),
        ("t a t^-1 a t a^2 t^-1 a", GroupParams(3, 2)),
        ("t a t^-1 a", GroupParams(-2, 3)),
    ],
)
def test_disks_match_exhaustive_oracle(text, params):
    g = graph_of(text, params)
    disks = enumerate_potential_disks(g)
    expected = exhaustive_potential_disks(
        list(g.edges),
        {t.index: t.weight for t in g.turns},
        {t.index: t.kind for t in g.turns},
        params.m,
        params.ell,
    )
    assert {d.edge_vector: d.circuit_count for d in disks} == expected


@given(zero_exponent_cyclic(max_half=2, max_k=3))
@settings(deadline=None, max_examples=30)
def test_disks_match_oracle_random(x):
    g = build_turn_graph(x)
    disks = enumerate_potential_disks(g)
    expected = exhaustive_potential_disks(
        list(g.edges),
        {t.index: t.weight for t in g.turns},
        {t.index: t.kind for t in g.turns},
        x.params.m,
        x.params.ell,
    )
    assert {d.edge_vector: d.circuit_count for d in disks} == expected


@given(zero_exponent_cyclic(max_half=2, max_k=3))
@settings(deadline=None, max_examples=30)
def test_circuits_are_simple_and_closed(x):
    g = build_turn_graph(x)
    for c in enumerate_embedded_circuits(g):
        assert len(set(c.nodes)) == len(c.nodes)
        for pos, e in enumerate(c.edges):
            frm, to = g.edges[e]
            assert frm == c.nodes[pos]
            assert to == c.nodes[(pos + 1) % len(c.nodes)]
        assert sum(c.edge_vector) == len(c.nodes)
