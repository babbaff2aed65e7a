"""Weakly and strongly (n, v)-clique-partitioned graphs: constructions,
partition checks, canonical forms and automorphism groups, and isomorph-free
enumeration of the extremal strongly partitioned graphs."""

from __future__ import annotations

from .constructions import (
    CycleSpec,
    circulant,
    from_cycle_spec,
    gamma,
    gamma_prime,
    load_fixture,
    parse_cycle_specs,
    sigma_automorphism,
    symmetric_set,
    turan,
)
from .enumeration import EnumerationReport, enumerate_maximal_strong
from .graph import Graph, emit_dot, emit_graph6, parse_graph6
from .partition import (
    CliquePartition,
    StructureError,
    Tournament,
    count_clique_partitions,
    enumerate_v_cliques,
    is_maximal_strong,
    is_maximal_weak,
    is_strongly_cp,
    is_weakly_cp,
    strong_bound,
    weak_bound,
    weak_structure,
)
from .symmetry import (
    PermGroup,
    Permutation,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    identify_group,
    is_automorphism,
)

__version__ = "0.1.0"
