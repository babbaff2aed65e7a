"""Permutations, automorphism groups and canonical labelling.

The search is the usual individualisation-refinement tree.  Each node holds
an ordered equitable partition; the first largest non-singleton cell is
split by individualising its vertices in increasing order.  Leaves are
discrete partitions, i.e. relabellings of the graph.  The canonical form is
the best leaf under the key ``(refinement traces, relabelled rows)``.
Automorphisms found at leaves prune sibling subtrees by orbits, and the
group order is obtained from the generators by Schreier-Sims.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, bits, emit_graph6


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``0..n-1``; ``images[u]`` is the image of ``u``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            for k, u in enumerate(cyc):
                if u in seen:
                    raise ValueError(f"vertex {u} appears in two cycles")
                seen.add(u)
                images[u] = cyc[(k + 1) % len(cyc)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, u: int) -> int:
        return self.images[u]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # left to right: apply self, then other
        o = other.images
        return Permutation(tuple(o[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for u, x in enumerate(self.images):
            inv[x] = u
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(u == x for u, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for u in range(len(self.images)):
            if u in seen or self.images[u] == u:
                continue
            cyc = [u]
            seen.add(u)
            w = self.images[u]
            while w != u:
                cyc.append(w)
                seen.add(w)
                w = self.images[w]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def power(self, k: int) -> "Permutation":
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def is_automorphism(g: Graph, p: Permutation) -> bool:
    """True iff ``p`` maps edges to edges and non-edges to non-edges."""
    if p.degree != g.order:
        raise ValueError(f"permutation on {p.degree} points, graph has {g.order} vertices")
    return g.relabel(p.images) == g


# Schreier-Sims ------------------------------------------------------------

def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(b[x] for x in a)


def _inv(a: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for u, x in enumerate(a):
        inv[x] = u
    return tuple(inv)


class _StabChain:
    """Deterministic Schreier-Sims stabiliser chain."""

    def __init__(self, degree: int, generators: Sequence[tuple[int, ...]]):
        self.degree = degree
        self.ident = tuple(range(degree))
        gens = [g for g in generators if g != self.ident]
        self.base: list[int] = []
        for g in gens:
            if all(g[b] == b for b in self.base):
                self.base.append(next(u for u in range(degree) if g[u] != u))
        self.strong: list[list[tuple[int, ...]]] = [
            [g for g in gens if all(g[b] == b for b in self.base[:i])] for i in range(len(self.base))
        ]
        self.transversals: list[dict[int, tuple[int, ...]]] = [{} for _ in self.base]
        self._build()

    def _orbit(self, level: int) -> None:
        b = self.base[level]
        trans = {b: self.ident}
        queue = [b]
        for x in queue:
            tx = trans[x]
            for s in self.strong[level]:
                y = s[x]
                if y not in trans:
                    trans[y] = _mul(tx, s)
                    queue.append(y)
        self.transversals[level] = trans

    def sift(self, g: tuple[int, ...], start: int = 0) -> tuple[tuple[int, ...], int]:
        for level in range(start, len(self.base)):
            t = self.transversals[level].get(g[self.base[level]])
            if t is None:
                return g, level
            g = _mul(g, _inv(t))
        return g, len(self.base)

    def _build(self) -> None:
        for level in range(len(self.base) - 1, -1, -1):
            self._orbit(level)
        i = len(self.base) - 1
        while i >= 0:
            self._orbit(i)
            trans = self.transversals[i]
            restart = False
            for x, tx in list(trans.items()):
                for s in self.strong[i]:
                    y = s[x]
                    schreier = _mul(_mul(tx, s), _inv(trans[y]))
                    h, j = self.sift(schreier, i + 1)
                    if h == self.ident:
                        continue
                    if j == len(self.base):
                        self.base.append(next(u for u in range(self.degree) if h[u] != u))
                        self.strong.append([])
                        self.transversals.append({})
                    for level in range(i + 1, j + 1):
                        self.strong[level].append(h)
                    for level in range(j, i, -1):
                        self._orbit(level)
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out


def group_order(generators: Sequence[Permutation], degree: int) -> int:
    return _StabChain(degree, [p.images for p in generators]).order()


@dataclass
class PermGroup:
    degree: int
    generators: list[Permutation]
    order: int = field(default=0)

    def __post_init__(self):
        if not self.order:
            self.order = group_order(self.generators, self.degree)

    def elements(self, cap: int = 200_000) -> list[Permutation] | None:
        """All elements by closure, or None if the group is larger than ``cap``."""
        if self.order > cap:
            return None
        ident = tuple(range(self.degree))
        seen = {ident}
        frontier = [ident]
        gens = [p.images for p in self.generators]
        while frontier:
            nxt = []
            for a in frontier:
                for s in gens:
                    b = _mul(a, s)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return [Permutation(e) for e in sorted(seen)]


def identify_group(group: PermGroup) -> str:
    """Coarse structure tag from an element-order census.

    Returns one of ``trivial``, ``cyclic m``, ``elementary-abelian 2^k``,
    ``dihedral 2m`` or ``other``.
    """
    order = group.order
    if order == 1:
        return "trivial"
    elems = group.elements()
    if elems is None or len(elems) != order:
        return "other"
    orders = [p.order() for p in elems]
    if max(orders) == order:
        return f"cyclic {order}"
    if all(o <= 2 for o in orders):
        k = order.bit_length() - 1
        return f"elementary-abelian 2^{k}"
    if order % 2 == 0 and order >= 6:
        m = order // 2
        for r, o in zip(elems, orders):
            if o != m:
                continue
            rot = {r.power(k).images for k in range(m)}
            if all(orders[i] == 2 for i, p in enumerate(elems) if p.images not in rot):
                return f"dihedral {order}"
            break
    return "other"


# refinement ---------------------------------------------------------------

def _refine(rows: Sequence[int], cells: list[int]) -> tuple[list[int], tuple]:
    """Refine an ordered partition (list of cell masks) to an equitable one.

    Returns the refined cells and a relabelling-invariant trace.
    """
    splits = []
    while True:
        changed = False
        out = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for u in bits(cell):
                r = rows[u]
                sig = tuple((r & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | (1 << u)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for sig in sorted(groups):
                out.append(groups[sig])
                splits.append((len(out), sig, groups[sig].bit_count()))
        cells = out
        if not changed:
            break
    quotient = tuple(
        (c.bit_count(), tuple((rows[(c & -c).bit_length() - 1] & d).bit_count() for d in cells))
        for c in cells
    )
    return cells, (tuple(splits), quotient)


def equitable_partition(g: Graph) -> list[list[int]]:
    cells, _ = _refine(g.rows, [(1 << g.order) - 1] if g.order else [])
    return [list(bits(c)) for c in cells]


class _Orbits:
    def __init__(self, n: int, gens: list[tuple[int, ...]]):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in gens:
            for u in range(n):
                a, b = find(u), find(s[u])
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
        self.rep = [find(u) for u in range(n)]


@dataclass
class SearchResult:
    canonical_images: tuple[int, ...]
    canonical_rows: tuple[int, ...]
    generators: list[Permutation]
    leaves: int
    nodes: int


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.n = g.order
        self.rows = g.rows
        self.gens: list[tuple[int, ...]] = []
        self.first_images = None
        self.first_rows = None
        self.first_traces: list[tuple] = []
        self.first_path: list[int] = []
        self.best_images = None
        self.best_rows = None
        self.best_traces: list[tuple] = []
        self.leaves = 0
        self.nodes = 0

    def run(self) -> SearchResult:
        n = self.n
        if n == 0:
            return SearchResult((), (), [], 1, 1)
        cells, trace = _refine(self.rows, [(1 << n) - 1])
        self._node(cells, [], [trace], True, 0)
        return SearchResult(
            tuple(self.best_images),
            tuple(self.best_rows),
            [Permutation(s) for s in self.gens],
            self.leaves,
            self.nodes,
        )

    def _relabelled_rows(self, images: list[int]) -> tuple[int, ...]:
        out = [0] * self.n
        for u, r in enumerate(self.rows):
            m = 0
            for w in bits(r):
                m |= 1 << images[w]
            out[images[u]] = m
        return tuple(out)

    def _node(self, cells, path, traces, equiv_first, cmp_best) -> int:
        """Explore a node; returns the depth to resume at (jump-back)."""
        self.nodes += 1
        depth = len(path)
        if self.first_images is not None:
            if equiv_first and traces[-1] != self.first_traces[depth]:
                equiv_first = False
            if cmp_best == 0:
                bt = self.best_traces[depth]
                if traces[-1] < bt:
                    cmp_best = -1
                elif traces[-1] > bt:
                    cmp_best = 1
            if not equiv_first and cmp_best > 0:
                return depth

        target = 0
        size = 1
        for c in cells:
            k = c.bit_count()
            if k > size:
                size, target = k, c
        if target == 0:
            return self._leaf(cells, path, traces, equiv_first, cmp_best)

        pos = cells.index(target)
        explored_reps: set[int] = set()
        orbit_gens = -1
        orbits = None
        for w in bits(target):
            fixing = [s for s in self.gens if all(s[p] == p for p in path)]
            if len(fixing) != orbit_gens:
                orbits = _Orbits(self.n, fixing).rep
                orbit_gens = len(fixing)
                explored_reps = {orbits[x] for x in explored_reps}
            if orbits[w] in explored_reps:
                continue
            explored_reps.add(orbits[w])
            bit = 1 << w
            child = cells[:pos] + [bit, target & ~bit] + cells[pos + 1:]
            child, trace = _refine(self.rows, child)
            resume = self._node(child, path + [w], traces + [trace], equiv_first, cmp_best)
            if resume < depth:
                return resume
        return depth

    def _leaf(self, cells, path, traces, equiv_first, cmp_best) -> int:
        self.leaves += 1
        depth = len(path)
        images = [0] * self.n
        for k, c in enumerate(cells):
            images[(c & -c).bit_length() - 1] = k
        rows = self._relabelled_rows(images)
        if self.first_images is None:
            self.first_images = self.best_images = images
            self.first_rows = self.best_rows = rows
            self.first_traces = self.best_traces = list(traces)
            self.first_path = list(path)
            return depth
        if equiv_first and rows == self.first_rows:
            inv = _inv(tuple(self.first_images))
            self.gens.append(tuple(inv[images[u]] for u in range(self.n)))
            common = 0
            while common < depth and path[common] == self.first_path[common]:
                common += 1
            return common
        if cmp_best == 0 and rows == self.best_rows:
            inv = _inv(tuple(self.best_images))
            self.gens.append(tuple(inv[images[u]] for u in range(self.n)))
            return depth
        if cmp_best < 0 or (cmp_best == 0 and rows < self.best_rows):
            self.best_images = images
            self.best_rows = rows
            self.best_traces = list(traces)
        return depth


def search(g: Graph) -> SearchResult:
    return _Search(g).run()


def canonical_relabelling(g: Graph) -> Permutation:
    """Permutation taking ``g`` to its canonical copy."""
    return Permutation(search(g).canonical_images)


def canonical_graph(g: Graph) -> Graph:
    res = search(g)
    return Graph._trusted(g.order, res.canonical_rows)


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonically relabelled graph."""
    return emit_graph6(canonical_graph(g)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> tuple[bool, Permutation | None]:
    """Isomorphism test; on success also returns a verified map ``g -> h``."""
    if g.order != h.order or g.edge_count != h.edge_count:
        return False, None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False, None
    rg, rh = search(g), search(h)
    if rg.canonical_rows != rh.canonical_rows:
        return False, None
    inv_h = _inv(rh.canonical_images)
    mapping = Permutation(tuple(inv_h[rg.canonical_images[u]] for u in range(g.order)))
    if g.relabel(mapping.images) != h:
        raise AssertionError("canonical labelling produced a non-isomorphism")
    return True, mapping


def automorphism_group(g: Graph) -> PermGroup:
    res = search(g)
    gens = res.generators
    for p in gens:
        if not is_automorphism(g, p):
            raise AssertionError(f"search returned a non-automorphism {p}")
    return PermGroup(g.order, gens)
