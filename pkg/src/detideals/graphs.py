"""Graphs, the graph6 codec, graph matrices, and small-n enumeration.

Vertices are 0-based.  Adjacency is stored as one int bitmask per vertex,
which keeps the canonical-form search and the enumeration fast.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .polyring import RING_Z, MultiPoly, UniPoly

MATRIX_KINDS = ("adjacency", "laplacian", "distance", "distlap")


class Graph6Error(ValueError):
    pass


class DisconnectedGraphError(ValueError):
    pass


class Graph:
    """Simple undirected graph on vertices 0..n-1 (1 <= n <= 62)."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 1 <= n <= 62:
            raise ValueError("vertex count must be between 1 and 62")
        rows = tuple(int(r) for r in rows)
        if len(rows) != n:
            raise ValueError("adjacency row count does not match n")
        for i, r in enumerate(rows):
            if r >> n:
                raise ValueError("adjacency bit outside the vertex range")
            if (r >> i) & 1:
                raise ValueError("loops are not allowed")
        for i in range(n):
            for j in range(i + 1, n):
                if ((rows[i] >> j) & 1) != ((rows[j] >> i) & 1):
                    raise ValueError("adjacency must be symmetric")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.rows))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if self.has_edge(i, j)]

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if (self.rows[v] >> u) & 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph({write_graph6(self)!r})"


# ---------------------------------------------------------------------------
# graph6 codec (n <= 62: single size byte n+63; upper triangle column-major)

_G6_HEADER = ">>graph6<<"


def parse_graph6(data) -> Graph:
    """Decode one graph6 string (optionally prefixed with >>graph6<<)."""
    if isinstance(data, (bytes, bytearray)):
        try:
            s = bytes(data).decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("graph6 data is not ASCII") from exc
    else:
        s = str(data)
    s = s.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string")
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("graphs with more than 62 vertices are not supported")
    n = first - 63
    if not 1 <= n <= 62:
        raise Graph6Error(f"invalid graph6 size byte {s[0]!r}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise Graph6Error(f"graph6 body has {len(body)} bytes, expected {nbytes}")
    bits = 0
    for ch in body:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
        bits = (bits << 6) | v
    pad = 6 * nbytes - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bits >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)


def write_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append((g.rows[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i : i + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if not line or line == _G6_HEADER:
            continue
        yield parse_graph6(line)


# ---------------------------------------------------------------------------
# matrices


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        v = frontier
        while v:
            low = (v & -v).bit_length() - 1
            v ^= 1 << low
            nxt |= g.rows[low]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def distance_matrix(g: Graph) -> list[list[int]]:
    """All-pairs shortest paths by BFS; errors out on disconnected graphs."""
    n = g.n
    dist = []
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.neighbors(u):
                if row[v] < 0:
                    row[v] = row[u] + 1
                    q.append(v)
        if any(d < 0 for d in row):
            raise DisconnectedGraphError("distance matrix of a disconnected graph")
        dist.append(row)
    return dist


def transmissions(g: Graph) -> list[int]:
    return [sum(row) for row in distance_matrix(g)]


def build_matrix(g: Graph, kind: str) -> list[list[int]]:
    """The adjacency, Laplacian, distance or distance Laplacian matrix."""
    n = g.n
    if kind == "adjacency":
        return [[1 if g.has_edge(i, j) else 0 for j in range(n)] for i in range(n)]
    if kind == "laplacian":
        return [
            [g.degree(i) if i == j else (-1 if g.has_edge(i, j) else 0) for j in range(n)]
            for i in range(n)
        ]
    if kind == "distance":
        return distance_matrix(g)
    if kind == "distlap":
        d = distance_matrix(g)
        t = [sum(row) for row in d]
        return [[t[i] if i == j else -d[i][j] for j in range(n)] for i in range(n)]
    raise ValueError(f"unknown matrix kind {kind!r}")


def char_matrix(g: Graph, kind: str, ring: str = RING_Z) -> list[list[UniPoly]]:
    """x*I - M over Z[x] (or Q[x] on request)."""
    m = build_matrix(g, kind)
    n = g.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(UniPoly((-m[i][j], 1), ring))
            else:
                row.append(UniPoly((-m[i][j],), ring))
        out.append(row)
    return out


def generalized_char_matrix(g: Graph, kind: str) -> list[list[MultiPoly]]:
    """diag(x0..x_{n-1}) - M over Z[x0..x_{n-1}] for the adjacency or distance matrix."""
    if kind not in ("adjacency", "distance"):
        raise ValueError("generalized characteristic matrices use the adjacency or distance matrix")
    m = build_matrix(g, kind)
    n = g.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                # diagonal of A and D is zero, so the entry is exactly x_i
                row.append(MultiPoly.variable(i, n) + MultiPoly.const(-m[i][j], n))
            else:
                row.append(MultiPoly.const(-m[i][j], n))
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# named families


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices total: center 0, leaves 1..n-1 (K_{1,n-1})."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("part sizes must be positive")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_family(kind: str, *params: int) -> Graph:
    if kind == "complete":
        (n,) = params
        return complete_graph(n)
    if kind == "star":
        (n,) = params
        return star_graph(n)
    if kind == "complete_bipartite":
        a, b = params
        return complete_bipartite_graph(a, b)
    raise ValueError(f"unknown family {kind!r}")


# ---------------------------------------------------------------------------
# canonical form and exhaustive enumeration

MAX_GENERATED_N = 8


def _twin_classes(n: int, rows: Sequence[int]) -> list[int]:
    """Union-find classes of true/false twins; swapping twins is an automorphism."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        for v in range(u + 1, n):
            mu = rows[u] & ~(1 << v)
            mv = rows[v] & ~(1 << u)
            if rows[u] == rows[v] or (mu == mv and (rows[u] >> v) & 1):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[rv] = ru
    return [find(v) for v in range(n)]


def canonical_columns(g: Graph) -> tuple[int, ...]:
    """Lexicographically minimal upper-triangle bit string over all labelings.

    Returned per column: entry p-1 holds the p bits of column p (adjacency of
    position p to positions 0..p-1, position 0 in the highest bit), so tuple
    comparison equals bit-string comparison.
    """
    n, rows = g.n, g.rows
    if n == 1:
        return ()
    twin = _twin_classes(n, rows)
    # sentinel value 2^p is larger than any real p-bit column
    best = [1 << p for p in range(1, n)]
    placed: list[int] = []

    def dfs(mask: int):
        p = len(placed)
        if p == n:
            return
        items = []
        for v in range(n):
            if (mask >> v) & 1:
                continue
            skip = False
            for u in range(v):
                if not ((mask >> u) & 1) and twin[u] == twin[v]:
                    skip = True  # an unplaced twin with a smaller label covers v
                    break
            if skip:
                continue
            rv = rows[v]
            col = 0
            for u in placed:
                col = (col << 1) | ((rv >> u) & 1)
            items.append((col, v))
        items.sort()
        for col, v in items:
            if p >= 1:
                b = best[p - 1]
                if col > b:
                    break
                if col < b:
                    best[p - 1] = col
                    for q in range(p, n - 1):
                        best[q] = 1 << (q + 1)
            placed.append(v)
            dfs(mask | (1 << v))
            placed.pop()

    dfs(0)
    return tuple(best)


def _graph_from_columns(n: int, cols: Sequence[int]) -> Graph:
    rows = [0] * n
    for j in range(1, n):
        col = cols[j - 1]
        for i in range(j):
            if (col >> (j - 1 - i)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)


def canonical_graph(g: Graph) -> Graph:
    return _graph_from_columns(g.n, canonical_columns(g))


@lru_cache(maxsize=None)
def _connected_cache(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[tuple[int, ...], None] = {}
    for parent in _connected_cache(n - 1):
        prows = parent.rows
        for mask in range(1, 1 << (n - 1)):
            rows = [prows[i] | (((mask >> i) & 1) << (n - 1)) for i in range(n - 1)]
            rows.append(mask)
            cols = canonical_columns(Graph(n, rows))
            if cols not in seen:
                seen[cols] = None
    return tuple(_graph_from_columns(n, cols) for cols in sorted(seen))


def enumerate_connected(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices, one canonical representative per
    isomorphism class, in a deterministic order (built-in generator, n <= 8).
    """
    if not 1 <= n <= MAX_GENERATED_N:
        raise ValueError(f"built-in generation supports 1 <= n <= {MAX_GENERATED_N}")
    return _connected_cache(n)
