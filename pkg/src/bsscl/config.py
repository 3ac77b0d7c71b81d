"""Run configuration shared by the library entry points and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

from .circuits import DEFAULT_CIRCUIT_CAP, DEFAULT_MULTISET_CAP


@dataclass(frozen=True)
class Caps:
    max_circuits: int = DEFAULT_CIRCUIT_CAP
    max_disks: int = DEFAULT_MULTISET_CAP
    canonicalization_iters: int | None = None  # None: 10 * n * (|m| + |l|)
    witness_search_bound: int = 200


@dataclass
class RunConfig:
    m: int
    ell: int
    caps: Caps = field(default_factory=Caps)
    cache_dir: str | None = None
    seed: int = 0
    output: str = "table"  # "table" | "json"
