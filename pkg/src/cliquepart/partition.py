"""Clique enumeration, exact-cover partition counting, edge bounds, and the
tournament structure of maximal weakly clique-partitioned graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .graph import Graph, bits, mask_of


@dataclass(frozen=True)
class CliquePartition:
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_masks(cls, masks) -> "CliquePartition":
        return cls(tuple(sorted(tuple(bits(m)) for m in masks)))

    @classmethod
    def standard(cls, n: int, v: int) -> "CliquePartition":
        """Blocks ``{i*v, ..., i*v + v - 1}``."""
        return cls(tuple(tuple(range(i * v, i * v + v)) for i in range(n)))

    def masks(self) -> list[int]:
        return [mask_of(b) for b in self.blocks]

    def block_of(self, u: int) -> int:
        for i, b in enumerate(self.blocks):
            if u in b:
                return i
        raise ValueError(f"vertex {u} not covered")


@dataclass
class PartitionCount:
    count: int
    partitions: list[CliquePartition] = field(default_factory=list)
    truncated: bool = False


def _check_order(g: Graph, n: int, v: int) -> None:
    if g.order != n * v:
        raise ValueError(f"graph has {g.order} vertices, expected n*v = {n * v}")


def clique_masks(g: Graph, v: int) -> list[int]:
    """Bitmasks of all v-cliques, each found once by increasing extension."""
    if v < 1:
        raise ValueError("clique size must be positive")
    rows = g.rows
    out: list[int] = []

    def extend(members: int, cand: int, need: int) -> None:
        if need == 0:
            out.append(members)
            return
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            extend(members | low, cand & rows[u], need - 1)

    extend(0, (1 << g.order) - 1, v)
    return out


def enumerate_v_cliques(g: Graph, v: int) -> list[tuple[int, ...]]:
    """All v-cliques as sorted vertex tuples, in lexicographic order."""
    return sorted(tuple(bits(m)) for m in clique_masks(g, v))


def count_clique_partitions(g: Graph, v: int, limit: int | None = None) -> PartitionCount:
    """Number of partitions of the vertex set into v-cliques.

    Exact cover over the v-cliques, branching on the uncovered vertex with
    the fewest compatible cliques.  With ``limit`` the search stops once
    that many partitions are found and ``truncated`` is set.
    """
    if v < 1 or g.order % v:
        raise ValueError(f"order {g.order} is not divisible by v = {v}")
    cliques = clique_masks(g, v)
    by_vertex: list[list[int]] = [[] for _ in range(g.order)]
    for c in cliques:
        for u in bits(c):
            by_vertex[u].append(c)
    found: list[int] = []
    chosen: list[int] = []
    result = PartitionCount(0)

    def search(uncovered: int) -> bool:
        if not uncovered:
            result.count += 1
            found.append(tuple(chosen))
            return limit is not None and result.count >= limit
        best_opts = None
        for u in bits(uncovered):
            opts = [c for c in by_vertex[u] if c & ~uncovered == 0]
            if best_opts is None or len(opts) < len(best_opts):
                best_opts = opts
                if not opts:
                    return False
        for c in best_opts:
            chosen.append(c)
            stop = search(uncovered & ~c)
            chosen.pop()
            if stop:
                return True
        return False

    if g.order == 0:
        result.count = 1
        result.partitions = [CliquePartition(())]
        return result
    result.truncated = search((1 << g.order) - 1)
    result.partitions = [CliquePartition.from_masks(p) for p in found]
    return result


def is_weakly_cp(g: Graph, n: int, v: int) -> tuple[bool, CliquePartition | None]:
    _check_order(g, n, v)
    res = count_clique_partitions(g, v, limit=2)
    if res.count == 1:
        return True, res.partitions[0]
    return False, None


def is_strongly_cp(g: Graph, n: int, v: int) -> tuple[bool, CliquePartition | None]:
    _check_order(g, n, v)
    cliques = clique_masks(g, v)
    if len(cliques) != n:
        return False, None
    union = 0
    for c in cliques:
        if union & c:
            return False, None
        union |= c
    if union != (1 << g.order) - 1:
        return False, None
    return True, CliquePartition.from_masks(cliques)


def strong_bound(n: int, v: int) -> int:
    """Edge bound for strongly (n, v)-clique-partitioned graphs."""
    return n * v * (v - 1) // 2 + n * v * (n - 1) * (v - 2) // 2


def weak_bound(n: int, v: int) -> int:
    """Edge bound for weakly (n, v)-clique-partitioned graphs."""
    return comb(n * v, 2) - n * (n - 1) * v // 2


def is_maximal_strong(g: Graph, n: int, v: int) -> bool:
    _check_order(g, n, v)
    return g.edge_count == strong_bound(n, v) and is_strongly_cp(g, n, v)[0]


def is_maximal_weak(g: Graph, n: int, v: int) -> bool:
    _check_order(g, n, v)
    return g.edge_count == weak_bound(n, v) and is_weakly_cp(g, n, v)[0]


def cross_degrees(g: Graph, partition: CliquePartition) -> list[list[int]]:
    """``out[u][b]`` = neighbours of ``u`` inside block ``b`` (own block included)."""
    masks = partition.masks()
    return [[(g.neighbors(u) & m).bit_count() for m in masks] for u in range(g.order)]


def missing_between(g: Graph, partition: CliquePartition, p: int, q: int) -> int:
    masks = partition.masks()
    present = sum((g.neighbors(u) & masks[q]).bit_count() for u in bits(masks[p]))
    return masks[p].bit_count() * masks[q].bit_count() - present


# tournament structure -----------------------------------------------------

class StructureError(ValueError):
    """Input is not a maximal weakly clique-partitioned graph; ``cliques``
    names the blocks at fault."""

    def __init__(self, message: str, cliques: tuple[int, ...]):
        super().__init__(message)
        self.cliques = cliques


@dataclass
class Tournament:
    n: int
    arcs: dict[tuple[int, int], int]
    """For p < q: the tail block of the arc between p and q."""
    distinguished: dict[int, int]
    """Block -> its vertex with no neighbours in any block it points to."""

    def points_to(self, p: int, q: int) -> bool:
        key = (min(p, q), max(p, q))
        return self.arcs[key] == p

    def chain(self) -> list[int]:
        """Blocks ordered so each points to every later one."""
        outdeg = {b: sum(1 for c in range(self.n) if c != b and self.points_to(b, c)) for b in range(self.n)}
        return sorted(range(self.n), key=lambda b: -outdeg[b])


def weak_structure(g: Graph, partition: CliquePartition) -> Tournament:
    """Direct each block pair of a maximal weakly clique-partitioned graph.

    ``X -> Y`` when some vertex of X has no neighbour in Y.  Checks that each
    block uses a single distinguished vertex for all its outgoing arcs and
    that the tournament has no directed 3-cycle.
    """
    masks = partition.masks()
    n = len(masks)
    arcs: dict[tuple[int, int], int] = {}
    dist: dict[tuple[int, int], int] = {}
    rows = g.rows
    for p in range(n):
        for q in range(p + 1, n):
            xs = [x for x in bits(masks[p]) if not rows[x] & masks[q]]
            ys = [y for y in bits(masks[q]) if not rows[y] & masks[p]]
            if xs and ys:
                raise StructureError(f"blocks {p} and {q} each have a vertex isolated from the other", (p, q))
            if not xs and not ys:
                raise StructureError(f"no direction between blocks {p} and {q}", (p, q))
            if len(xs) > 1 or len(ys) > 1:
                raise StructureError(f"several isolated vertices between blocks {p} and {q}", (p, q))
            if xs:
                arcs[(p, q)] = p
                dist[(p, q)] = xs[0]
            else:
                arcs[(p, q)] = q
                dist[(q, p)] = ys[0]
    distinguished: dict[int, int] = {}
    for (tail, head), x in sorted(dist.items()):
        if tail in distinguished and distinguished[tail] != x:
            others = [h for (t, h) in dist if t == tail]
            raise StructureError(
                f"block {tail} uses distinguished vertices {distinguished[tail]} and {x}",
                (tail, *sorted(others)),
            )
        distinguished[tail] = x
    t = Tournament(n, arcs, distinguished)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if len({a, b, c}) == 3 and t.points_to(a, b) and t.points_to(b, c) and t.points_to(c, a):
                    raise StructureError(f"directed 3-cycle {a}->{b}->{c}->{a}", (a, b, c))
    return t
