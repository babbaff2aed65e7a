"""Named graphs: the two extremal families, Turán graphs, circulants, and
graphs assembled from per-block-pair cycle descriptions."""

from __future__ import annotations

import re
import string
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .graph import CAPACITY, Graph
from .symmetry import Permutation


def _check_params(n: int, v: int) -> None:
    if n < 2 or v < 2:
        raise ValueError(f"need n >= 2 and v >= 2, got n={n}, v={v}")
    if n * v > CAPACITY:
        raise ValueError(f"n*v = {n * v} exceeds capacity {CAPACITY}")


def gamma(n: int, v: int) -> Graph:
    """The maximal strongly (n, v)-clique-partitioned graph Γ(n, v).

    (i,j) ~ (k,l) iff i == k and j != l, or i < k and (l - j) mod v is not
    0 or 1, or i > k and (j - l) mod v is not 0 or 1.
    """
    _check_params(n, v)
    edges = []
    for i in range(n):
        for j in range(v):
            for k in range(i, n):
                for ell in range(v):
                    if k == i:
                        if ell > j:
                            edges.append((i * v + j, k * v + ell))
                    elif (ell - j) % v not in (0, 1):
                        edges.append((i * v + j, k * v + ell))
    return Graph.from_edges(n * v, edges)


def gamma_prime(n: int, v: int) -> Graph:
    """The maximal weakly (n, v)-clique-partitioned graph Γ'(n, v).

    Complete graph minus every edge from (i, 0) to a vertex of a later block.
    """
    _check_params(n, v)
    g = Graph.complete(n * v)
    rows = list(g.rows)
    for i in range(n - 1):
        later = ((1 << (n * v)) - 1) & ~((1 << ((i + 1) * v)) - 1)
        x = i * v
        rows[x] &= ~later
        for u in range(n * v):
            if later >> u & 1:
                rows[u] &= ~(1 << x)
    return Graph._trusted(n * v, tuple(rows))


def turan(order: int, parts: int) -> Graph:
    """Complete multipartite graph; vertex u lies in part ``u % parts``."""
    if parts < 1 or order < parts:
        raise ValueError(f"need 1 <= parts <= order, got order={order}, parts={parts}")
    return Graph.from_edges(
        order, [(a, b) for a in range(order) for b in range(a + 1, order) if a % parts != b % parts]
    )


def symmetric_set(m: int, residues: Iterable[int]) -> frozenset[int]:
    """Close ``residues`` under negation modulo ``m`` ({1, 3} -> {±1, ±3})."""
    out = set()
    for s in residues:
        s %= m
        out.add(s)
        out.add(-s % m)
    return frozenset(out)


def circulant(m: int, connection: Iterable[int]) -> Graph:
    """Cayley graph of Z_m: i ~ j iff (i - j) mod m is in ``connection``."""
    conn = {s % m for s in connection} if m else set()
    if 0 in conn:
        raise ValueError("0 in connection set")
    for s in conn:
        if -s % m not in conn:
            raise ValueError(f"connection set not closed under negation: {s} without {-s % m}")
    return Graph.from_edges(m, [(a, b) for a in range(m) for b in range(a + 1, m) if (b - a) % m in conn])


def sigma_automorphism(n: int, v: int) -> Permutation:
    """Cyclic automorphism of Γ(n, v) of order n*v.

    (i, j) -> (i + 1, j) for i < n - 1, and (n - 1, j) -> (0, j - 1).
    """
    if n < 2 or v < 2:
        raise ValueError(f"need n >= 2 and v >= 2, got n={n}, v={v}")
    images = [0] * (n * v)
    for i in range(n):
        for j in range(v):
            if i < n - 1:
                images[i * v + j] = (i + 1) * v + j
            else:
                images[i * v + j] = (j - 1) % v
    return Permutation(tuple(images))


# cycle specifications -----------------------------------------------------

PRESENT = "present"
MISSING = "missing"


@dataclass
class CycleSpec:
    """Between-block edges given as one 2v-cycle per block pair.

    With ``kind == "missing"`` the consecutive pairs of each cycle are the
    edges *absent* between the two blocks (every other cross edge of a listed
    pair is present, and unlisted pairs are fully joined).  With
    ``kind == "present"`` the consecutive pairs are exactly the cross edges
    of that pair and unlisted pairs have none.  The bundled fixtures for the
    (3,4) and (4,4) graphs list present edges; at v = 4 both readings give a
    2-regular bipartite graph between each pair.
    """

    n: int
    v: int
    cycles: dict[tuple[int, int], tuple[int, ...]]
    kind: str = MISSING
    meta: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in (PRESENT, MISSING):
            raise ValueError(f"unknown cycle kind {self.kind!r}")
        _check_params(self.n, self.v)
        v = self.v
        for (p, q), cyc in self.cycles.items():
            if not 0 <= p < q < self.n:
                raise ValueError(f"bad block pair ({p}, {q})")
            if len(cyc) != 2 * v:
                raise ValueError(f"cycle for pair ({p},{q}) has length {len(cyc)}, expected {2 * v}")
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"cycle for pair ({p},{q}) repeats a vertex")
            blocks = [u // v for u in cyc]
            if set(blocks) != {p, q} or any(blocks[k] == blocks[(k + 1) % len(cyc)] for k in range(len(cyc))):
                raise ValueError(f"cycle for pair ({p},{q}) does not alternate between blocks {p} and {q}")

    def cycle_edges(self, pair: tuple[int, int]) -> set[frozenset[int]]:
        cyc = self.cycles[pair]
        return {frozenset((cyc[k], cyc[(k + 1) % len(cyc)])) for k in range(len(cyc))}


def from_cycle_spec(spec: CycleSpec) -> Graph:
    n, v = spec.n, spec.v
    edges = []
    for i in range(n):
        for a in range(v):
            for b in range(a + 1, v):
                edges.append((i * v + a, i * v + b))
    for p in range(n):
        for q in range(p + 1, n):
            if (p, q) in spec.cycles:
                listed = spec.cycle_edges((p, q))
                for a in range(p * v, p * v + v):
                    for b in range(q * v, q * v + v):
                        hit = frozenset((a, b)) in listed
                        if hit == (spec.kind == PRESENT):
                            edges.append((a, b))
            elif spec.kind == MISSING:
                edges.extend((a, b) for a in range(p * v, p * v + v) for b in range(q * v, q * v + v))
    return Graph.from_edges(n * v, edges)


_LABEL = re.compile(r"^([A-Z])(\d+)$")
_META = re.compile(r"^#\s*([a-z][\w-]*):\s*(.*)$")


def parse_label(text: str, v: int) -> int:
    """``"C2"`` -> vertex 2*v + 2."""
    m = _LABEL.match(text.strip())
    if not m:
        raise ValueError(f"bad vertex label {text!r}")
    block = string.ascii_uppercase.index(m.group(1))
    col = int(m.group(2))
    if col >= v:
        raise ValueError(f"column {col} out of range in label {text!r}")
    return block * v + col


def format_label(u: int, v: int) -> str:
    return f"{string.ascii_uppercase[u // v]}{u % v}"


def parse_cycle(text: str, v: int) -> tuple[int, ...]:
    return tuple(parse_label(t, v) for t in text.strip().strip("()").split(","))


def parse_permutation(text: str, n: int, v: int) -> Permutation:
    """Cycle notation over letter labels, e.g. ``(A1 A3)(B0 B1)``."""
    cycles = []
    for body in re.findall(r"\(([^)]*)\)", text):
        labels = body.replace(",", " ").split()
        if labels:
            cycles.append([parse_label(t, v) for t in labels])
    return Permutation.from_cycles(n * v, cycles)


def parse_cycle_specs(text: str, kind: str = PRESENT) -> list[CycleSpec]:
    """Parse the fixture format.

    One cycle per line as comma-separated labels (``A0,B2,...``); a blank
    line separates graphs.  Lines ``# key: value`` attach metadata to the
    graph being read; other ``#`` lines are comments.  The block size is
    half the cycle length, the block count is one more than the largest
    block letter used.
    """
    specs = []
    chunks: list[tuple[list[str], dict[str, str]]] = []
    lines: list[str] = []
    meta: dict[str, str] = {}
    for raw in text.splitlines() + [""]:
        line = raw.strip()
        if not line:
            if lines or meta:
                chunks.append((lines, meta))
            lines, meta = [], {}
            continue
        if line.startswith("#"):
            m = _META.match(line)
            if m:
                meta[m.group(1)] = m.group(2).strip()
            continue
        lines.append(line)
    for lines, meta in chunks:
        if not lines:
            raise ValueError(f"graph {meta.get('name', '?')} has no cycles")
        first = lines[0].strip("()").split(",")
        v = len(first) // 2
        cycles = [parse_cycle(line, v) for line in lines]
        n = max(u for cyc in cycles for u in cyc) // v + 1
        n = max(n, int(meta.get("n", n)))
        pairs: dict[tuple[int, int], tuple[int, ...]] = {}
        for cyc in cycles:
            pair = tuple(sorted({cyc[0] // v, cyc[1] // v}))
            if len(pair) != 2:
                raise ValueError(f"cycle {cyc} does not join two blocks")
            if pair in pairs:
                raise ValueError(f"block pair {pair} listed twice in graph {meta.get('name', '?')}")
            pairs[pair] = cyc
        specs.append(CycleSpec(n, v, pairs, kind=meta.get("kind", kind), meta=dict(meta)))
    return specs


def format_cycle_spec(spec: CycleSpec) -> str:
    lines = [f"# {k}: {val}" for k, val in spec.meta.items()]
    for pair in sorted(spec.cycles):
        lines.append(",".join(format_label(u, spec.v) for u in spec.cycles[pair]))
    return "\n".join(lines) + "\n"


def fixture_dir() -> Path:
    """Directory holding the table fixtures (``CLIQUEPART_FIXTURES`` overrides)."""
    import os

    env = os.environ.get("CLIQUEPART_FIXTURES")
    if env:
        return Path(env)
    return Path(str(resources.files("cliquepart") / "data"))


def load_fixture(name: str, directory: str | Path | None = None) -> list[CycleSpec]:
    path = Path(directory) if directory is not None else fixture_dir()
    return parse_cycle_specs((path / name).read_text(encoding="utf-8"))


def labelled_vertices(labels: Sequence[str], v: int) -> tuple[int, ...]:
    return tuple(sorted(parse_label(t, v) for t in labels))
