"""Dense simple graphs stored as one bitmask per adjacency row.

Vertex ``(i, j)`` of an ``(n, v)`` block layout is the integer ``i * v + j``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

CAPACITY = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for u in vertices:
        m |= 1 << u
    return m


class Graph:
    """Immutable undirected simple graph on vertices ``0..order-1``.

    Edits return new graphs; instances are hashable and safe to share
    between processes.
    """

    __slots__ = ("_order", "_rows", "_hash")

    def __init__(self, order: int, rows: Sequence[int] | None = None):
        if not 0 <= order <= CAPACITY:
            raise ValueError(f"order {order} outside 0..{CAPACITY}")
        if rows is None:
            rows = (0,) * order
        rows = tuple(rows)
        if len(rows) != order:
            raise ValueError("row count does not match order")
        full = (1 << order) - 1
        for u, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {u} has bits beyond the order")
            if (r >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
        for u, r in enumerate(rows):
            for w in bits(r):
                if not (rows[w] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {w}")
        self._order = order
        self._rows = rows
        self._hash = None

    @classmethod
    def _trusted(cls, order: int, rows: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g._order = order
        g._rows = rows
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= order <= CAPACITY:
            raise ValueError(f"order {order} outside 0..{CAPACITY}")
        rows = [0] * order
        for u, w in edges:
            _check_pair(order, u, w)
            rows[u] |= 1 << w
            rows[w] |= 1 << u
        return cls._trusted(order, tuple(rows))

    @classmethod
    def complete(cls, order: int) -> "Graph":
        full = (1 << order) - 1
        return cls._trusted(order, tuple(full & ~(1 << u) for u in range(order)))

    @property
    def order(self) -> int:
        return self._order

    @property
    def rows(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks, one per vertex."""
        return self._rows

    def neighbors(self, u: int) -> int:
        return self._rows[u]

    def degree(self, u: int) -> int:
        return self._rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u, r in enumerate(self._rows) for w in bits(r >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, w: int) -> bool:
        _check_pair(self._order, u, w)
        return bool((self._rows[u] >> w) & 1)

    def add_edge(self, u: int, w: int) -> "Graph":
        _check_pair(self._order, u, w)
        rows = list(self._rows)
        rows[u] |= 1 << w
        rows[w] |= 1 << u
        return Graph._trusted(self._order, tuple(rows))

    def remove_edge(self, u: int, w: int) -> "Graph":
        _check_pair(self._order, u, w)
        rows = list(self._rows)
        rows[u] &= ~(1 << w)
        rows[w] &= ~(1 << u)
        return Graph._trusted(self._order, tuple(rows))

    def complement(self) -> "Graph":
        full = (1 << self._order) - 1
        return Graph._trusted(
            self._order, tuple(full & ~r & ~(1 << u) for u, r in enumerate(self._rows))
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on ``vertices``, relabelled ``0..k-1`` in sorted order."""
        keep = sorted(set(vertices))
        for u in keep:
            if not 0 <= u < self._order:
                raise ValueError(f"vertex {u} out of range")
        rows = []
        for u in keep:
            r = self._rows[u]
            rows.append(mask_of(k for k, w in enumerate(keep) if (r >> w) & 1))
        return Graph._trusted(len(keep), tuple(rows))

    def relabel(self, images: Sequence[int]) -> "Graph":
        """Graph whose vertex ``images[u]`` plays the role of ``u``."""
        rows = [0] * self._order
        for u, r in enumerate(self._rows):
            rows[images[u]] = mask_of(images[w] for w in bits(r))
        return Graph._trusted(self._order, tuple(rows))

    def is_clique(self, mask: int) -> bool:
        for u in bits(mask):
            if (mask & ~(1 << u)) & ~self._rows[u]:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._order, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={self.edge_count})"


def _check_pair(order: int, u: int, w: int) -> None:
    if not (0 <= u < order and 0 <= w < order):
        raise ValueError(f"vertex pair ({u}, {w}) out of range for order {order}")
    if u == w:
        raise ValueError(f"loop requested at vertex {u}")


def graph_new(order: int) -> Graph:
    return Graph(order)


# graph6 -------------------------------------------------------------------

def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise ValueError("graph too large for graph6")


def emit_graph6(g: Graph) -> str:
    """Header-free graph6 encoding (upper triangle, column by column)."""
    n = g.order
    out = bytearray(_encode_size(n))
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise ValueError("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise ValueError(f"non-printable graph6 byte {b!r}")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        raise ValueError("graph6 order beyond 258047 is not supported")
    else:
        if len(data) < 4:
            raise ValueError("truncated graph6 size field")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    if n > CAPACITY:
        raise ValueError(f"order {n} exceeds capacity {CAPACITY}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if ((body[k // 6] - 63) >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise ValueError("nonzero padding bits in graph6 string")
    return Graph._trusted(n, tuple(rows))


# DOT ----------------------------------------------------------------------

def vertex_label(u: int, v: int) -> str:
    return f"{u // v}{u % v}"


def emit_dot(g: Graph, v: int | None = None, name: str = "G") -> str:
    """Undirected DOT text; with a block size ``v`` vertices are labelled ``ij``."""
    lines = [f"graph {name} {{"]
    for u in range(g.order):
        if v is None:
            lines.append(f"  {u};")
        else:
            lines.append(f'  {u} [label="{vertex_label(u, v)}"];')
    for u, w in g.edges():
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"
