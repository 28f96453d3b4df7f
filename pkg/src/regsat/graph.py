"""Bit-row graph representation, degree/distance primitives and graph I/O."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

GRAPH6_MAX_N = 258047
UNREACHABLE = -1


class GraphError(ValueError):
    pass


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _words(n: int) -> int:
    return max(1, (n + 63) // 64)


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj`` is an ``(n, ceil(n/64))`` read-only ``uint64`` array; bit ``j % 64``
    of word ``j // 64`` in row ``i`` is set iff ``{i, j}`` is an edge.
    ``labels`` optionally names each vertex and is ignored by equality.
    """

    __slots__ = ("n", "adj", "labels", "__dict__")

    def __init__(self, n: int, adj: np.ndarray, labels: Sequence[str] | None = None):
        if adj.shape != (n, _words(n)) or adj.dtype != np.uint64:
            raise GraphError(f"adjacency must be uint64 of shape {(n, _words(n))}, got {adj.dtype} {adj.shape}")
        adj.flags.writeable = False
        self.n = n
        self.adj = adj
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise GraphError("label map length differs from vertex count")

    @classmethod
    def from_dense(cls, matrix: np.ndarray, labels: Sequence[str] | None = None, check: bool = True) -> "Graph":
        m = np.asarray(matrix, dtype=bool)
        n = m.shape[0]
        if m.shape != (n, n):
            raise GraphError("adjacency matrix must be square")
        if check:
            if m.diagonal().any():
                raise GraphError("loops are not allowed")
            if not np.array_equal(m, m.T):
                raise GraphError("adjacency matrix is not symmetric")
        w = _words(n)
        padded = np.zeros((n, w * 64), dtype=bool)
        padded[:, :n] = m
        packed = np.packbits(padded, axis=1, bitorder="little")
        adj = np.ascontiguousarray(packed).view("<u8").astype(np.uint64, copy=False)
        return cls(n, np.ascontiguousarray(adj.reshape(n, w)), labels)

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int], labels: Sequence[str] | None = None) -> "Graph":
        w = _words(n)
        buf = b"".join(r.to_bytes(8 * w, "little") for r in rows)
        adj = np.frombuffer(buf, dtype="<u8").astype(np.uint64).reshape(n, w) if n else np.zeros((0, w), np.uint64)
        return cls(n, adj, labels)

    def dense(self) -> np.ndarray:
        bits = np.unpackbits(self.adj.view(np.uint8), axis=1, bitorder="little")
        return bits[:, : self.n].astype(bool)

    @cached_property
    def rows(self) -> tuple[int, ...]:
        """Adjacency rows as Python integers (bit j of row i = edge ij)."""
        raw = self.adj.tobytes()
        step = 8 * self.adj.shape[1]
        return tuple(int.from_bytes(raw[i * step:(i + 1) * step], "little") for i in range(self.n))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.bitwise_count(self.adj).sum(axis=1, dtype=np.int64)) if self.n else ()

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((int(self.adj[u, v >> 6]) >> (v & 63)) & 1)

    def neighbors(self, v: int) -> list[int]:
        r = self.rows[v]
        out = []
        while r:
            low = r & -r
            out.append(low.bit_length() - 1)
            r ^= low
        return out

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.neighbors(u):
                if v > u:
                    yield u, v

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy of the graph with edge ``uv`` added."""
        adj = self.adj.copy()
        adj[u, v >> 6] |= np.uint64(1 << (v & 63))
        adj[v, u >> 6] |= np.uint64(1 << (u & 63))
        return Graph(self.n, adj, self.labels)

    def check_invariants(self) -> None:
        m = self.dense()
        if m.diagonal().any():
            raise GraphError("diagonal bit set")
        if not np.array_equal(m, m.T):
            raise GraphError("adjacency is not symmetric")
        if self.n % 64:
            if (self.adj[:, -1] >> np.uint64(self.n % 64)).any():
                raise GraphError("padding bits set beyond vertex count")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    m = np.zeros((n, n), dtype=bool)
    for pair in edges:
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"vertex out of range in pair {pair!r} for n={n}")
        if i == j:
            raise GraphError(f"loop pair {pair!r}")
        m[i, j] = m[j, i] = True
    return Graph.from_dense(m, labels, check=False)


@dataclass(frozen=True)
class DegreeSummary:
    degrees: tuple[int, ...]
    regular_degree: int | None
    edge_count: int


def degree_summary(g: Graph) -> DegreeSummary:
    degs = g.degrees
    total = sum(degs)
    assert total % 2 == 0
    regular = degs[0] if degs and min(degs) == max(degs) else None
    if g.n == 0:
        regular = 0
    return DegreeSummary(degs, regular, total // 2)


def distances_from(g: Graph, source: int) -> list[int]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    rows = g.rows
    seen = 1 << source
    frontier = [source]
    level = 0
    while frontier:
        level += 1
        reach = 0
        for v in frontier:
            reach |= rows[v]
        reach &= ~seen
        seen |= reach
        frontier = []
        while reach:
            low = reach & -reach
            w = low.bit_length() - 1
            dist[w] = level
            frontier.append(w)
            reach ^= low
    return dist


def distance_and_diameter(g: Graph) -> tuple[np.ndarray, int | None]:
    """All-pairs hop distances (``UNREACHABLE`` = -1) and the diameter.

    The diameter is ``None`` when the graph is disconnected.
    """
    d = np.array([distances_from(g, s) for s in range(g.n)], dtype=np.int32).reshape(g.n, g.n)
    if g.n and (d == UNREACHABLE).any():
        return d, None
    return d, int(d.max()) if g.n else 0


def diameter(g: Graph) -> int | None:
    return distance_and_diameter(g)[1]


def non_edges(g: Graph) -> Iterator[tuple[int, int]]:
    """Non-adjacent pairs ``(i, j)``, ``i < j``, in lexicographic order."""
    full = (1 << g.n) - 1
    rows = g.rows
    for i in range(g.n):
        r = full & ~rows[i] & ~((1 << (i + 1)) - 1)
        while r:
            low = r & -r
            yield i, low.bit_length() - 1
            r ^= low


def non_edge_count(g: Graph) -> int:
    return g.n * (g.n - 1) // 2 - g.edge_count


# graph6 ------------------------------------------------------------------

def _graph6_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= GRAPH6_MAX_N:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise GraphError(f"graph6 supports at most {GRAPH6_MAX_N} vertices, got {n}")


def encode_graph6(g: Graph) -> bytes:
    header = _graph6_header(g.n)
    m = g.dense()
    # lower-triangle row-major (j, i) is the column order x(0,1), x(0,2), x(1,2), x(0,3), ...
    j, i = np.tril_indices(g.n, -1)
    bits = m[i, j]
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, bool)]).reshape(-1, 6)
    values = bits.astype(np.uint8) @ np.array([32, 16, 8, 4, 2, 1], np.uint8)
    return header + (values + 63).astype(np.uint8).tobytes()


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for i, c in enumerate(data):
        if c < 63 or c > 126:
            raise Graph6Error(f"byte {c} outside 63..126", i)
    if data[0] == 126:
        if len(data) < 4:
            raise Graph6Error("truncated extended header", len(data))
        if data[1] == 126:
            raise Graph6Error("8-byte headers (n > 258047) are not supported", 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        start = 4
    else:
        n = data[0] - 63
        body = data[1:]
        start = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} body bytes for n={n}, found {len(body)}", start + min(len(body), need))
    vals = np.frombuffer(body, dtype=np.uint8) - 63
    bits = ((vals[:, None] >> np.arange(5, -1, -1, dtype=np.uint8)) & 1).astype(bool).reshape(-1)
    if bits[nbits:].any():
        raise Graph6Error("nonzero padding bits", start + len(body) - 1)
    j, i = np.tril_indices(n, -1)
    m = np.zeros((n, n), dtype=bool)
    m[i, j] = bits[:nbits]
    m |= m.T
    return Graph.from_dense(m, check=False)


# edge-list text ------------------------------------------------------------

def format_edgelist(g: Graph, name: str | None = None) -> str:
    lines = []
    if name is not None:
        lines.append(f"name {name}")
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> tuple[Graph, str | None]:
    """Parse ``name <label>`` (optional), ``n <count>``, then ``u v`` lines."""
    name = None
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "name" and n is None:
            name = " ".join(parts[1:])
        elif parts[0] == "n" and n is None:
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: malformed header {raw!r}")
            n = int(parts[1])
        elif n is None:
            raise GraphError(f"line {lineno}: edge before 'n <count>' header")
        else:
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
            edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise GraphError("missing 'n <count>' header")
    return build_graph(n, edges), name
