import networkx as nx
import pytest
from hypothesis import given, settings

from bsscl.errors import NotHyperbolicZeroExponent
from bsscl.turngraph import MIXED, TYPE_L, TYPE_M, TurnGraph, build_turn_graph, validate
from bsscl.words import GroupParams, cyclically_reduce, parse

from wordgen import zero_exponent_cyclic

P23 = GroupParams(2, 3)


def cyc(text, params=P23):
    x, _ = cyclically_reduce(parse(text, params), params)
    return x


def test_length_two_graph():
    g = build_turn_graph(cyc("t a t^-1 a"))
    assert [t.kind for t in g.turns] == [TYPE_M, TYPE_L]
    assert [t.weight for t in g.turns] == [1, 1]
    assert g.edges == ((1, 1), (2, 2))
    # the two self-loops are dual to each other: (1->1) |-> (2->2)
    assert g.dual == (1, 0)
    assert validate(g)


def test_alternating_four_graph():
    g = build_turn_graph(cyc("t a t^-1 a t a t^-1 a^2"))
    assert [t.kind for t in g.turns] == [TYPE_M, TYPE_L, TYPE_M, TYPE_L]
    assert set(g.edges) == {
        (1, 1), (1, 3), (3, 1), (3, 3),
        (2, 2), (2, 4), (4, 2), (4, 4),
    }
    def dual_of(e):
        return g.edges[g.dual[g.edges.index(e)]]
    assert dual_of((1, 1)) == (2, 4)
    assert dual_of((1, 3)) == (4, 4)
    assert dual_of((3, 1)) == (2, 2)
    assert dual_of((3, 3)) == (4, 2)
    assert validate(g)


def test_mixed_kinds():
    # a^2 t^2 a t^-1 a t^-1 reads t a^0 t a^1 t^-1 a^1 t^-1 a^2 cyclically
    g = build_turn_graph(cyc("a^2 t^2 a t^-1 a t^-1"))
    assert [t.kind for t in g.turns] == [MIXED, TYPE_M, MIXED, TYPE_L]
    assert [t.weight for t in g.turns] == [0, 1, 1, 2]
    assert validate(g)


def test_rejects_nonzero_exponent_and_elliptic():
    with pytest.raises(NotHyperbolicZeroExponent):
        build_turn_graph(cyc("a^5"))
    with pytest.raises(NotHyperbolicZeroExponent):
        build_turn_graph(cyc("t a"))


def test_validate_catches_corruption():
    g = build_turn_graph(cyc("t a t^-1 a t a t^-1 a^2"))
    # swap two dual pointers
    bad_dual = list(g.dual)
    bad_dual[0], bad_dual[1] = bad_dual[1], bad_dual[0]
    bad = TurnGraph(g.turns, g.edges, tuple(bad_dual), g.params, g.source)
    assert not validate(bad)
    # tamper with a weight
    turns = list(g.turns)
    turns[0] = type(turns[0])(1, turns[0].weight + 1, turns[0].kind)
    bad2 = TurnGraph(tuple(turns), g.edges, g.dual, g.params, g.source)
    assert not validate(bad2)


@given(zero_exponent_cyclic())
@settings(deadline=None)
def test_rotation_gives_isomorphic_graph(x):
    g = build_turn_graph(x)
    n = x.n
    for r in range(1, n):
        h = build_turn_graph(x.rotate(r))
        # vertex map: position i in the rotated word came from i + r in x
        def back(v):
            return (v - 1 + r) % n + 1
        for t in h.turns:
            orig = g.turns[back(t.index) - 1]
            assert t.kind == orig.kind and t.weight == orig.weight
        mapped = {(back(f), back(t)) for f, t in h.edges}
        assert mapped == set(g.edges)
        for pos, (f, t) in enumerate(h.edges):
            fd, td = h.edges[h.dual[pos]]
            assert g.dual[g.edges.index((back(f), back(t)))] == g.edges.index(
                (back(fd), back(td))
            )


@given(zero_exponent_cyclic())
@settings(deadline=None)
def test_class_structure(x):
    g = build_turn_graph(x)
    eps = [e for e, _ in x.syllables]
    n = x.n
    cls = {}
    for i in range(n):
        pair = (eps[i], eps[(i + 1) % n])
        cls[i + 1] = {(1, -1): "A", (-1, 1): "B", (1, 1): "C", (-1, -1): "D"}[pair]
    counts = {c: sum(1 for v in cls.values() if v == c) for c in "ABCD"}
    assert counts["A"] == counts["B"]
    assert counts["C"] == counts["D"]
    for v, c in cls.items():
        has_loop = (v, v) in g.edges
        assert has_loop == (c in "AB")
        targets = {cls[t] for f, t in g.edges if f == v}
        if c in ("A", "C"):
            assert targets <= {"A", "D"}
        else:
            assert targets <= {"B", "C"}
    # every vertex lies on a directed cycle
    G = nx.DiGraph(list(g.edges))
    for comp in nx.strongly_connected_components(G):
        for v in comp:
            assert len(comp) > 1 or G.has_edge(v, v)
