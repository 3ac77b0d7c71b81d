"""scl bounds and classification driven by the turn-graph linear program.

For a hyperbolic word g with zero t-exponent, the program maximizes the total
mass on potential-disk coordinates over the polytope cut out by the dual-edge
balance equations and a unit normalization at turn 1.  The resulting bound is
L(g) = |g|_t / 4 - max / 2, and it is the exact scl value when g alternates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .circuits import (
    EmbeddedCircuit,
    PotentialDisk,
    enumerate_embedded_circuits,
    enumerate_potential_disks,
    visits_from_edge_vector,
)
from .config import Caps
from .errors import (
    InternalInconsistency,
    LimitExceeded,
    NotAlternating,
    NotApplicable,
    PreconditionViolated,
)
from .ratlp import LinearProgram, LPOutcome, solve_max
from .turngraph import TurnGraph, build_turn_graph
from .words import CyclicWord, Word, cyclically_reduce, is_alternating

GAP = Fraction(1, 12)


@dataclass
class PolytopeProgram:
    lp: LinearProgram
    disk_vars: tuple[int, ...]
    circuit_vars: tuple[int, ...]
    normalization_vertex: int
    graph: TurnGraph
    disks: tuple[PotentialDisk, ...]
    circuits: tuple[EmbeddedCircuit, ...]


def build_polytope_program(
    g: TurnGraph, caps: Caps | None = None
) -> PolytopeProgram:
    caps = caps or Caps()
    circuits = tuple(enumerate_embedded_circuits(g, cap=caps.max_circuits))
    disks = tuple(enumerate_potential_disks(g, circuits, cap=caps.max_disks))
    basis_vectors = [d.edge_vector for d in disks] + [c.edge_vector for c in circuits]
    nv = len(basis_vectors)
    constraints = []
    seen_pairs = set()
    for e, d in enumerate(g.dual):
        if e == d or (d, e) in seen_pairs:
            continue  # tolerate hypothetical self-dual edges; pair each once
        seen_pairs.add((e, d))
        row = tuple(Fraction(vec[e] - vec[d]) for vec in basis_vectors)
        constraints.append((row, Fraction(0)))
    v0 = 1
    norm_row = tuple(
        Fraction(visits_from_edge_vector(vec, g)[v0 - 1]) for vec in basis_vectors
    )
    constraints.append((norm_row, Fraction(1)))
    objective = tuple(
        Fraction(1) if i < len(disks) else Fraction(0) for i in range(nv)
    )
    names = tuple(
        [f"x{i}" for i in range(len(disks))] + [f"y{j}" for j in range(len(circuits))]
    )
    lp = LinearProgram(
        num_vars=nv,
        constraints=constraints,
        objective=objective,
        variable_names=names,
    )
    return PolytopeProgram(
        lp=lp,
        disk_vars=tuple(range(len(disks))),
        circuit_vars=tuple(range(len(disks), nv)),
        normalization_vertex=v0,
        graph=g,
        disks=disks,
        circuits=circuits,
    )


def _to_cyclic(w, params=None) -> CyclicWord:
    if isinstance(w, CyclicWord):
        return w
    if params is None:
        raise ValueError("params required for plain Word input")
    x, _ = cyclically_reduce(w, params)
    return x


def solve_polytope(x: CyclicWord, caps: Caps | None = None):
    """Build and solve the program; returns (program, outcome)."""
    if x.n == 0 or sum(e for e, _ in x.syllables) != 0:
        raise NotApplicable("the linear program needs a hyperbolic word with t-exponent 0")
    g = build_turn_graph(x)
    program = build_polytope_program(g, caps)
    out = solve_max(program.lp)
    if out.status != "Optimal":
        raise InternalInconsistency(
            f"polytope must have an optimum for zero-exponent words, got {out.status}"
        )
    _validate_solution(program, out)
    return program, out


def _validate_solution(program: PolytopeProgram, out: LPOutcome) -> None:
    g = program.graph
    basis_vectors = [d.edge_vector for d in program.disks] + [
        c.edge_vector for c in program.circuits
    ]
    visits = [Fraction(0)] * g.n
    for coeff, vec in zip(out.point, basis_vectors):
        if coeff:
            for v, cnt in enumerate(visits_from_edge_vector(vec, g)):
                visits[v] += coeff * cnt
    if any(v != 1 for v in visits):
        raise InternalInconsistency(f"vertex counts not all 1 at optimum: {visits}")
    if any(out.point[j] != 0 for j in program.circuit_vars):
        raise InternalInconsistency("an optimal point kept mass on a bare circuit")


def lp_lower_bound(w, params=None, caps: Caps | None = None) -> Fraction:
    """L(g) = |g|_t/4 - max/2; a lower bound for scl, exact when g alternates."""
    x = _to_cyclic(w, params)
    _, out = solve_polytope(x, caps)
    return Fraction(x.n, 4) - out.value / 2


def scl_exact_alternating(w, params=None, caps: Caps | None = None) -> Fraction:
    x = _to_cyclic(w, params)
    if not is_alternating(x):
        raise NotAlternating("exact evaluation requires an alternating word")
    return lp_lower_bound(x, caps=caps)


def scl_length2_formula(params, i: int, j: int) -> Fraction:
    """scl(t a^i t^-1 a^j) for m not dividing i and l not dividing j."""
    m, ell = params.m, params.ell
    if i % m == 0 or j % ell == 0:
        raise PreconditionViolated("need m not dividing i and l not dividing j")
    return Fraction(1, 2) * (
        1 - Fraction(math.gcd(abs(i), abs(m)), abs(m)) - Fraction(math.gcd(abs(j), abs(ell)), abs(ell))
    )


@dataclass
class SclResult:
    classification: str  # Infinite | Zero | Exact | LowerBoundOnly | AtLeastGap
    value: Fraction | None = None
    lower_bound: Fraction | None = None
    certificates: dict = field(default_factory=dict)


def classify(w, params=None, caps: Caps | None = None) -> SclResult:
    """Full decision procedure for a single group element."""
    from .treeqm import gap_classify  # engine and tree modules stay independent

    x = _to_cyclic(w, params)
    params = x.params
    if x.n == 0:
        return SclResult(classification="Zero", value=Fraction(0), lower_bound=Fraction(0))
    if sum(e for e, _ in x.syllables) != 0:
        return SclResult(classification="Infinite")

    gap_cert = gap_classify(x)
    certificates: dict = {"gap": gap_cert}

    lp_value = None
    bound = None
    try:
        program, out = solve_polytope(x, caps)
        lp_value = out.value
        bound = Fraction(x.n, 4) - out.value / 2
        certificates["lp"] = {
            "value": out.value,
            "point": out.point,
            "variable_names": program.lp.variable_names,
            "unique": out.unique,
        }
    except LimitExceeded as exc:
        certificates["note"] = (
            f"linear program skipped: enumeration cap hit ({exc.count} > {exc.cap})"
        )

    zero_by_reversal = gap_cert.outcome == "ZeroByReversal"
    if zero_by_reversal:
        # the reversal certificate alone pins scl = 0; it never needs the program
        if bound is not None and bound != 0:
            raise InternalInconsistency(
                "reversal certificate says scl = 0 but the program bound is nonzero"
            )
        return SclResult(
            classification="Zero",
            value=Fraction(0),
            lower_bound=Fraction(0),
            certificates=certificates,
        )

    # well aligned from here on: scl >= 1/12 regardless of the program
    if bound is None:
        # a cap was hit; report the best bound we still have, never degrade silently
        return SclResult(
            classification="LowerBoundOnly", lower_bound=GAP, certificates=certificates
        )
    if is_alternating(x):
        if bound == 0:
            raise InternalInconsistency(
                "well-aligned alternating word with exact value zero"
            )
        if bound < GAP:
            raise InternalInconsistency(
                "alternating well-aligned word with exact value below the gap"
            )
        return SclResult(
            classification="Exact",
            value=bound,
            lower_bound=bound,
            certificates=certificates,
        )
    if bound >= GAP:
        return SclResult(
            classification="LowerBoundOnly",
            lower_bound=bound,
            certificates=certificates,
        )
    return SclResult(
        classification="AtLeastGap", lower_bound=GAP, certificates=certificates
    )
