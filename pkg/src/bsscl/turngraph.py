"""Turn graph of a hyperbolic cyclic word with zero t-exponent.

Write the word as t^eps1 a^k1 ... t^epsn a^kn.  Turn i sits between t^eps_i
and t^eps_(i+1) and carries the weight k_i.  There is an edge i -> j exactly
when eps_(j+1) = -eps_i, and the pairing (i -> j) |-> (j+1 -> i-1) is a
fixed-point-free involution on edges (indices cyclic in 1..n).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotHyperbolicZeroExponent
from .words import CyclicWord, GroupParams

TYPE_M = "TypeM"
TYPE_L = "TypeL"
MIXED = "Mixed"


def turn_kind(eps_in: int, eps_out: int) -> str:
    if (eps_in, eps_out) == (1, -1):
        return TYPE_M
    if (eps_in, eps_out) == (-1, 1):
        return TYPE_L
    return MIXED


@dataclass(frozen=True)
class Turn:
    index: int  # 1-based position in the cyclic word
    weight: int
    kind: str


@dataclass(frozen=True)
class TurnGraph:
    turns: tuple[Turn, ...]
    edges: tuple[tuple[int, int], ...]  # (from, to), 1-based turn indices
    dual: tuple[int, ...]  # dual[e] = index into edges of the dual edge
    params: GroupParams
    source: CyclicWord

    @property
    def n(self) -> int:
        return len(self.turns)

    def edge_index(self, frm: int, to: int) -> int:
        return self.edges.index((frm, to))

    def out_edges(self, v: int) -> list[int]:
        return [i for i, (f, _) in enumerate(self.edges) if f == v]

    def in_edges(self, v: int) -> list[int]:
        return [i for i, (_, t) in enumerate(self.edges) if t == v]

    def to_json_dict(self) -> dict:
        return {
            "vertices": [
                {"index": t.index, "weight": t.weight, "kind": t.kind}
                for t in self.turns
            ],
            "edges": [
                {"from": f, "to": t, "dual": d}
                for (f, t), d in zip(self.edges, self.dual)
            ],
        }


def _wrap(i: int, n: int) -> int:
    return (i - 1) % n + 1


def build_turn_graph(x: CyclicWord) -> TurnGraph:
    n = x.n
    if n == 0 or sum(e for e, _ in x.syllables) != 0:
        raise NotHyperbolicZeroExponent(
            "turn graphs require a hyperbolic word with t-exponent zero"
        )
    eps = [e for e, _ in x.syllables]
    turns = tuple(
        Turn(i + 1, x.syllables[i][1], turn_kind(eps[i], eps[(i + 1) % n]))
        for i in range(n)
    )
    edges = tuple(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if eps[j % n] == -eps[i - 1]  # eps_(j+1) = -eps_i, 1-based
    )
    index = {e: pos for pos, e in enumerate(edges)}
    dual = tuple(index[(_wrap(j + 1, n), _wrap(i - 1, n))] for i, j in edges)
    g = TurnGraph(turns, edges, dual, x.params, x)
    if not validate(g):
        raise AssertionError("freshly built turn graph failed validation")
    return g


def validate(g: TurnGraph) -> bool:
    """Exactly recheck the edge condition and the duality involution."""
    n = g.n
    if n == 0:
        return False
    x = g.source
    if x.n != n:
        return False
    eps = [e for e, _ in x.syllables]
    for i, t in enumerate(g.turns):
        if t.index != i + 1:
            return False
        if t.weight != x.syllables[i][1]:
            return False
        if t.kind != turn_kind(eps[i], eps[(i + 1) % n]):
            return False
    expected_edges = {
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if eps[j % n] == -eps[i - 1]
    }
    if set(g.edges) != expected_edges or len(g.edges) != len(expected_edges):
        return False
    if len(g.dual) != len(g.edges):
        return False
    for pos, (i, j) in enumerate(g.edges):
        d = g.dual[pos]
        if not 0 <= d < len(g.edges):
            return False
        if g.edges[d] != (_wrap(j + 1, n), _wrap(i - 1, n)):
            return False
        if g.dual[d] != pos:
            return False
    return True
