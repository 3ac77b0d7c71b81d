"""Embedded circuits of a turn graph and the potential disks they assemble.

An embedded circuit is a simple directed cycle (no repeated vertex).  A
potential disk is a sum of at most M = max(|m|, |l|) embedded circuits whose
supports form a connected subgraph and whose total visited weight omega is
divisible by the modulus mu of the visited turn kinds.  Disks are identified
by their edge multiplicity vector; circuit_count records the smallest
multiset size that produced the vector.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import networkx as nx

from .errors import LimitExceeded
from .turngraph import MIXED, TYPE_L, TYPE_M, TurnGraph

DEFAULT_CIRCUIT_CAP = 10**6
DEFAULT_MULTISET_CAP = 10**6


@dataclass(frozen=True)
class EmbeddedCircuit:
    nodes: tuple[int, ...]  # cyclic vertex order, smallest vertex first
    edges: tuple[int, ...]  # edge indices in traversal order
    edge_vector: tuple[int, ...]
    vertex_visits: tuple[int, ...]


@dataclass(frozen=True)
class PotentialDisk:
    edge_vector: tuple[int, ...]
    circuit_count: int
    omega: int
    mu: int
    kind: str


def visits_from_edge_vector(edge_vector, g: TurnGraph) -> tuple[int, ...]:
    """Vertex visit counts: one visit per incoming edge traversal."""
    visits = [0] * g.n
    for mult, (_, to) in zip(edge_vector, g.edges):
        visits[to - 1] += mult
    return tuple(visits)


def omega(edge_vector, g: TurnGraph) -> int:
    visits = visits_from_edge_vector(edge_vector, g)
    return sum(v * t.weight for v, t in zip(visits, g.turns))


def _visited_kinds(edge_vector, g: TurnGraph) -> set[str]:
    visits = visits_from_edge_vector(edge_vector, g)
    return {t.kind for v, t in zip(visits, g.turns) if v}


def mu(edge_vector, g: TurnGraph) -> int:
    kinds = _visited_kinds(edge_vector, g)
    if kinds == {TYPE_M}:
        return abs(g.params.m)
    if kinds == {TYPE_L}:
        return abs(g.params.ell)
    return math.gcd(abs(g.params.m), abs(g.params.ell))


def disk_kind(edge_vector, g: TurnGraph) -> str:
    kinds = _visited_kinds(edge_vector, g)
    if kinds == {TYPE_M}:
        return TYPE_M
    if kinds == {TYPE_L}:
        return TYPE_L
    return MIXED


def enumerate_embedded_circuits(g: TurnGraph, cap: int = DEFAULT_CIRCUIT_CAP):
    """All simple directed cycles, once per rotation class, deterministically
    ordered by their sorted edge index sets."""
    G = nx.DiGraph(list(g.edges))
    edge_pos = {e: i for i, e in enumerate(g.edges)}
    found = []
    count = 0
    for nodes in nx.simple_cycles(G):
        count += 1
        if count > cap:
            raise LimitExceeded(count, cap)
        k = nodes.index(min(nodes))
        nodes = nodes[k:] + nodes[:k]
        cyc_edges = tuple(
            edge_pos[(nodes[i], nodes[(i + 1) % len(nodes)])] for i in range(len(nodes))
        )
        vec = [0] * len(g.edges)
        for e in cyc_edges:
            vec[e] = 1
        visits = [0] * g.n
        for v in nodes:
            visits[v - 1] = 1
        found.append(
            EmbeddedCircuit(tuple(nodes), cyc_edges, tuple(vec), tuple(visits))
        )
    found.sort(key=lambda c: tuple(sorted(c.edges)))
    return found


def _support_connected(edge_vector, g: TurnGraph) -> bool:
    support = [e for mult, e in zip(edge_vector, g.edges) if mult]
    if not support:
        return False
    U = nx.Graph(support)
    return nx.is_connected(U)


def enumerate_potential_disks(
    g: TurnGraph,
    circuits=None,
    cap: int = DEFAULT_MULTISET_CAP,
):
    """Potential disks as sums of at most M embedded circuits."""
    if circuits is None:
        circuits = enumerate_embedded_circuits(g)
    M = max(abs(g.params.m), abs(g.params.ell))
    best: dict[tuple[int, ...], int] = {}
    examined = 0
    for size in range(1, M + 1):
        for combo in itertools.combinations_with_replacement(range(len(circuits)), size):
            examined += 1
            if examined > cap:
                raise LimitExceeded(examined, cap)
            vec = [0] * len(g.edges)
            for ci in combo:
                for e, mult in enumerate(circuits[ci].edge_vector):
                    vec[e] += mult
            vec = tuple(vec)
            prev = best.get(vec)
            if prev is not None and prev <= size:
                continue
            if not _support_connected(vec, g):
                continue
            if omega(vec, g) % mu(vec, g) != 0:
                continue
            best[vec] = size
    disks = [
        PotentialDisk(vec, cnt, omega(vec, g), mu(vec, g), disk_kind(vec, g))
        for vec, cnt in best.items()
    ]
    disks.sort(key=lambda d: d.edge_vector)
    return disks
