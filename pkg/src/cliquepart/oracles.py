"""Exhaustive reference computations for small graphs.

These deliberately share nothing with the search code they are used to
check: every permutation or every set partition is tried.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from .graph import Graph


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.order, g.order), dtype=np.uint8)
    for u, w in g.edges():
        a[u, w] = a[w, u] = 1
    return a


def _all_perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


def _relabelled_codes(g: Graph) -> np.ndarray:
    """Upper-triangle bit code of ``g`` under every vertex ordering."""
    n = g.order
    a = adjacency_matrix(g)
    perms = _all_perms(n)
    iu, ju = np.triu_indices(n, 1)
    # entry (i, j) of the reordered matrix is a[p[i], p[j]]
    bits_ = a[perms[:, iu], perms[:, ju]].astype(np.int64)
    weights = (1 << np.arange(len(iu) - 1, -1, -1, dtype=np.int64)) if len(iu) else np.zeros(0, np.int64)
    return bits_ @ weights if len(iu) else np.zeros(len(perms), dtype=np.int64)


def brute_canonical_code(g: Graph) -> tuple[int, int]:
    """(order, least code over all orderings); equal iff isomorphic."""
    if g.order > 9:
        raise ValueError("brute-force canonical form limited to 9 vertices")
    return g.order, int(_relabelled_codes(g).min())


def brute_automorphism_count(g: Graph) -> int:
    if g.order > 9:
        raise ValueError("brute-force automorphism count limited to 9 vertices")
    codes = _relabelled_codes(g)
    identity_code = codes[0]
    return int((codes == identity_code).sum())


def brute_partition_count(g: Graph, v: int) -> int:
    """Partitions of the vertex set into v-sets that all induce cliques."""
    n = g.order
    if n % v:
        raise ValueError("order not divisible by v")

    def rec(remaining: tuple[int, ...]) -> int:
        if not remaining:
            return 1
        first, rest = remaining[0], remaining[1:]
        total = 0
        for others in itertools.combinations(rest, v - 1):
            block = (first,) + others
            if all(g.has_edge(a, b) for a, b in itertools.combinations(block, 2)):
                left = tuple(u for u in rest if u not in others)
                total += rec(left)
        return total

    return rec(tuple(range(n)))


def random_graph(rng: random.Random, order: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    edges = [(a, b) for a in range(order) for b in range(a + 1, order) if rng.random() < p]
    return Graph.from_edges(order, edges)


def random_relabelling(rng: random.Random, order: int) -> list[int]:
    images = list(range(order))
    rng.shuffle(images)
    return images
