"""Isomorph-free generation of maximal strongly clique-partitioned graphs.

In a maximal strongly (n, v)-clique-partitioned graph every vertex has
exactly v - 2 neighbours in each other block, so for v >= 3 the missing
edges between two blocks form a 2-regular bipartite graph, and it must be a
single Hamiltonian 2v-cycle (a two-block subgraph is itself maximal).
Blocks are added one at a time.  A new block q is joined to blocks
0..q-1 by choosing one missing-edge cycle per pair; the cycle to block 0 is
normalised by relabelling block q, so only the cyclic order of block 0
varies there.  A partial assignment is dropped as soon as it contains a
v-clique through a cross edge: cross edges are only ever added, so such a
clique survives in every completion.  After each block the survivors are
reduced to one representative per isomorphism class (isomorphisms of
strongly partitioned graphs map blocks to blocks, so completions of
isomorphic partial graphs are isomorphic).
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from .constructions import CycleSpec, format_label, from_cycle_spec, gamma, labelled_vertices, parse_permutation
from .graph import CAPACITY, Graph, bits, emit_graph6, parse_graph6
from .partition import clique_masks, is_maximal_strong, is_maximal_weak, is_strongly_cp, strong_bound, weak_bound
from .symmetry import automorphism_group, canonical_form, canonical_graph, identify_group


class BudgetExhausted(Exception):
    pass


@dataclass
class Budget:
    max_nodes: int | None = None
    max_seconds: float | None = None
    nodes: int = 0
    started: float = field(default_factory=time.monotonic)

    def tick(self, k: int = 1) -> None:
        self.nodes += k
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExhausted("node budget exhausted")
        if self.max_seconds is not None and self.nodes % 256 == 0:
            if time.monotonic() - self.started > self.max_seconds:
                raise BudgetExhausted("time budget exhausted")


@dataclass
class EnumerationReport:
    n: int
    v: int
    count: int
    complete: bool
    graphs: list[str]
    aut_orders: list[int]
    structures: list[str]
    level_counts: list[int]
    nodes: int
    elapsed_seconds: float
    note: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "EnumerationReport":
        return cls(**json.loads(text))

    def to_text(self) -> str:
        lines = list(self.graphs)
        lines.append("")
        lines.append(f"# n={self.n} v={self.v}")
        word = "graph" if self.count == 1 else "graphs"
        bound = "" if self.complete else " (lower bound; budget exhausted)"
        lines.append(f"# {self.count} {word}{bound}")
        for g6, order, tag in zip(self.graphs, self.aut_orders, self.structures):
            lines.append(f"# {g6} aut_order={order} {tag}")
        lines.append(f"# nodes={self.nodes} elapsed={self.elapsed_seconds:.2f}s")
        return "\n".join(lines) + "\n"


# cycles -------------------------------------------------------------------

def hamiltonian_cycles(v: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Hamiltonian cycles of K_{v,v} as (a_order, b_order), v >= 3.

    The cycle is a0 b0 a1 b1 ... a_{v-1} b_{v-1}; a0 = 0 and a1 < a_{v-1}
    make each cycle appear once, giving v! (v-1)! / 2 cycles.
    """
    out = []
    for rest in itertools.permutations(range(1, v)):
        if rest[0] > rest[-1]:
            continue
        a = (0,) + rest
        for b in itertools.permutations(range(v)):
            out.append((a, b))
    return out


def cycle_pairs(a: Sequence[int], b: Sequence[int]) -> list[tuple[int, int]]:
    """(block-p column, block-q column) pairs on the cycle."""
    v = len(a)
    return [(a[k], b[k]) for k in range(v)] + [(a[(k + 1) % v], b[k]) for k in range(v)]


def _pair_options(v: int) -> tuple[list[list[tuple[int, int]]], list[list[tuple[int, int]]]]:
    """Cross-edge column pairs for each allowed cycle: (normalised, all)."""
    every = []
    normal = []
    seen_orders = set()
    full = {(x, y) for x in range(v) for y in range(v)}
    for a, b in hamiltonian_cycles(v):
        present = sorted(full - set(cycle_pairs(a, b)))
        every.append(present)
        if b == tuple(range(v)) and a not in seen_orders:
            seen_orders.add(a)
            normal.append(present)
    return normal, every


def _has_clique(rows: Sequence[int], cand: int, need: int) -> bool:
    if need == 0:
        return True
    while cand:
        if cand.bit_count() < need:
            return False
        low = cand & -cand
        u = low.bit_length() - 1
        cand ^= low
        if _has_clique(rows, cand & rows[u], need - 1):
            return True
    return False


def _extend(rows: tuple[int, ...], q: int, v: int, options, budget: Budget) -> list[tuple[int, ...]]:
    """All valid ways to join block q to blocks 0..q-1 of ``rows``."""
    normal, every = options
    out = []

    def assign(rows: list[int], p: int) -> None:
        if p == q:
            out.append(tuple(rows))
            return
        for present in (normal if p == 0 else every):
            budget.tick()
            new = list(rows)
            for x, y in present:
                a, b = p * v + x, q * v + y
                new[a] |= 1 << b
                new[b] |= 1 << a
            bad = False
            for x, y in present:
                a, b = p * v + x, q * v + y
                if _has_clique(new, new[a] & new[b], v - 2):
                    bad = True
                    break
            if not bad:
                assign(new, p + 1)

    assign(list(rows), 0)
    return out


def _blocks_graph(n_blocks: int, v: int, order: int) -> tuple[int, ...]:
    rows = [0] * order
    for i in range(n_blocks):
        m = ((1 << v) - 1) << (i * v)
        for u in range(i * v, i * v + v):
            rows[u] = m & ~(1 << u)
    return tuple(rows)


def _canon_rows(order: int, rows: tuple[int, ...]) -> bytes:
    return canonical_form(Graph._trusted(order, rows))


def _canon_classes(order: int, graphs: Iterable[tuple[int, ...]]) -> dict[bytes, tuple[int, ...]]:
    classes: dict[bytes, tuple[int, ...]] = {}
    for k in graphs:
        c = _canon_rows(order, k)
        if c not in classes or k < classes[c]:
            classes[c] = k
    return classes


def _worker(args):
    rows, q, v, order, max_nodes, max_seconds, started = args
    budget = Budget(max_nodes, max_seconds, started=started)
    try:
        kids = _extend(rows, q, v, _pair_options(v), budget)
    except BudgetExhausted:
        return {}, budget.nodes, True
    return _canon_classes(order, kids), budget.nodes, False


def enumerate_maximal_strong(
    n: int,
    v: int,
    max_nodes: int | None = None,
    max_seconds: float | None = None,
    jobs: int = 1,
) -> EnumerationReport:
    """All maximal strongly (n, v)-clique-partitioned graphs up to isomorphism.

    ``max_nodes`` / ``max_seconds`` cap the search; a capped run returns the
    classes found so far with ``complete=False`` (a lower bound on the count).
    ``jobs > 1`` spreads each level's representatives over processes; the
    result does not depend on it.
    """
    if n < 2 or v < 2:
        raise ValueError(f"need n >= 2 and v >= 2, got n={n}, v={v}")
    if n * v > CAPACITY:
        raise ValueError(f"n*v = {n * v} exceeds capacity {CAPACITY}")
    started = time.monotonic()
    order = n * v
    if v == 2:
        # no cross edge can be added: n disjoint edges
        g = gamma(n, 2)
        return _report(n, v, {canonical_form(g): g.rows}, True, [1] * (n - 1), 0, started)

    options = _pair_options(v)
    budget = Budget(max_nodes, max_seconds, started=started)
    level: dict[bytes, tuple[int, ...]] = {b"": _blocks_graph(n, v, order)}
    level_counts = []
    complete = True
    for q in range(1, n):
        reps = [rows for _, rows in sorted(level.items())]
        nxt: dict[bytes, tuple[int, ...]] = {}
        if jobs > 1 and len(reps) > 1:
            remaining = None if max_nodes is None else max(0, max_nodes - budget.nodes)
            work = [(rows, q, v, order, remaining, max_seconds, started) for rows in reps]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_worker, work))
        else:
            results = []
            for rows in reps:
                try:
                    kids = _extend(rows, q, v, options, budget)
                except BudgetExhausted:
                    results.append(({}, 0, True))
                    break
                results.append((_canon_classes(order, kids), 0, False))
        for classes, used, truncated in results:
            budget.nodes += used
            complete = complete and not truncated
            for c, rows in classes.items():
                if c not in nxt or rows < nxt[c]:
                    nxt[c] = rows
        level_counts.append(len(nxt))
        level = nxt
        if not complete:
            if q != n - 1:
                level = {}
            break
    return _report(n, v, level, complete, level_counts, budget.nodes, started)


def _report(n, v, reps, complete, level_counts, nodes, started) -> EnumerationReport:
    order = n * v
    graphs = []
    for c in sorted(reps):
        g = Graph._trusted(order, reps[c])
        graphs.append(emit_graph6(canonical_graph(g)))
    graphs.sort()
    auts, tags = [], []
    for g6 in graphs:
        grp = automorphism_group(parse_graph6(g6))
        auts.append(grp.order)
        tags.append(identify_group(grp))
    return EnumerationReport(
        n=n,
        v=v,
        count=len(graphs),
        complete=complete,
        graphs=graphs,
        aut_orders=auts,
        structures=tags,
        level_counts=level_counts,
        nodes=nodes,
        elapsed_seconds=round(time.monotonic() - started, 3),
    )


# brute-force oracles ------------------------------------------------------

def _brute(n: int, v: int, edges: int, keep, slow: bool) -> list[bytes]:
    order = n * v
    cap = 8 if slow else 6
    if order > cap:
        raise ValueError(f"exhaustive scan refused for {order} vertices (cap {cap})")
    pairs = [(a, b) for a in range(order) for b in range(a + 1, order)]
    classes = set()
    for chosen in itertools.combinations(pairs, edges):
        g = Graph.from_edges(order, chosen)
        if keep(g):
            classes.add(canonical_form(g))
    return sorted(classes)


def brute_force_maximal_weak(n: int, v: int, slow: bool = False) -> list[bytes]:
    """Canonical forms of all weakly (n, v)-clique-partitioned graphs with
    the maximum edge count, by scanning every labelled graph of that size."""
    return _brute(n, v, weak_bound(n, v), lambda g: is_maximal_weak(g, n, v), slow)


def brute_force_maximal_strong(n: int, v: int, slow: bool = False) -> list[bytes]:
    return _brute(n, v, strong_bound(n, v), lambda g: is_maximal_strong(g, n, v), slow)


# the (3,4) tables ---------------------------------------------------------

@dataclass
class RowVerdict:
    name: str
    stated_clique: tuple[int, ...] | None
    foreign_cliques: list[tuple[int, ...]]
    strongly_cp: bool
    iso_verified: bool | None
    ok: bool
    message: str = ""


def verify_table1(rows: Iterable[CycleSpec], reference: Graph) -> list[RowVerdict]:
    """Check each tabulated (3,4) completion.

    Rows stating a clique must contain it and fail to be strongly
    partitioned; rows without one must be strongly partitioned and their
    stated permutation must carry ``reference`` onto the row's graph.
    """
    out = []
    for spec in rows:
        name = spec.meta.get("name", "?")
        try:
            g = from_cycle_spec(spec)
            v = spec.v
            foreign = [
                tuple(bits(c)) for c in clique_masks(g, v) if len({u // v for u in bits(c)}) > 1
            ]
            strong = is_strongly_cp(g, spec.n, v)[0]
            stated = spec.meta.get("clique")
            clique = labelled_vertices(stated.split(","), v) if stated else None
            iso = None
            if clique is not None:
                ok = clique in foreign and not strong
                msg = "" if ok else f"stated clique {stated} not found"
            else:
                perm = parse_permutation(spec.meta["iso"], spec.n, v)
                iso = reference.relabel(perm.images) == g
                ok = strong and iso and not foreign
                msg = "" if ok else "isomorphism or strong property failed"
            out.append(RowVerdict(name, clique, foreign, strong, iso, ok, msg))
        except Exception as exc:  # a broken fixture row must not hide the others
            out.append(RowVerdict(name, None, [], False, None, False, f"{type(exc).__name__}: {exc}"))
    return out


def case_ii_candidates() -> list[frozenset[tuple[int, int]]]:
    """B-C present-edge 8-cycles left for case (II) at (3,4) once B2~C3 and
    B0~C1 are excluded.  Returned as sets of (B column, C column) edges."""
    out = []
    for a, b in hamiltonian_cycles(4):
        edges = frozenset(cycle_pairs(a, b))
        if (2, 3) in edges or (0, 1) in edges:
            continue
        out.append(edges)
    return out


def pair_edge_set(spec: CycleSpec, pair: tuple[int, int]) -> frozenset[tuple[int, int]]:
    """Edges of one listed cycle as (column in p, column in q)."""
    v = spec.v
    out = set()
    for e in spec.cycle_edges(pair):
        a, b = sorted(e)
        out.add((a % v, b % v))
    return frozenset(out)


def describe(u: int, v: int) -> str:
    return format_label(u, v)
