"""Immutable simple undirected graphs with bitset adjacency.

Vertices are dense 0-based integers.  A vertex set is a plain int used as a
bitmask over 0..n-1, which keeps subgraph and island machinery cheap.
"""

from __future__ import annotations

import hashlib
from collections import deque
from fractions import Fraction

SOFT_VERTEX_CAP = 4096

#: Sentinel for "no cycle" / unbounded values (girth of a forest).
INF = float("inf")


class GraphError(ValueError):
    """Malformed graph input (parse error, self-loop, bad graph6)."""


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbor bitmask of ``v``.  Instances are immutable
    after construction and safe for concurrent reads.
    """

    __slots__ = ("n", "adj", "name")

    def __init__(self, n, edges=(), name=""):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        if n > SOFT_VERTEX_CAP:
            raise GraphError(f"graph too large: n={n} exceeds cap {SOFT_VERTEX_CAP}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.name = name

    # -- elementary accessors ------------------------------------------------

    def degree(self, v):
        return self.adj[v].bit_count()

    def edge_count(self):
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self):
        """Edges as sorted (u, v) pairs with u < v."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            w = u + 1
            while rest:
                if rest & 1:
                    out.append((u, w))
                rest >>= 1
                w += 1
        return out

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def full_mask(self):
        return (1 << self.n) - 1

    def max_degree(self):
        return max((a.bit_count() for a in self.adj), default=0)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.edge_count()}>"

    def content_hash(self):
        """sha256 over the canonical edge list; used for report provenance."""
        payload = f"{self.n}|" + ";".join(f"{u},{v}" for u, v in self.edges())
        return hashlib.sha256(payload.encode()).hexdigest()


# -- vertex-set (bitmask) helpers ------------------------------------------


def bits(mask):
    """Iterate set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# -- construction / ingestion -----------------------------------------------


def from_edges(n, edges, name=""):
    return Graph(n, edges, name=name)


def from_edge_list(text, name=""):
    """Parse edge-list text: one "u v" per line, '#' starts a comment.

    Vertex ids may be sparse; they are remapped to 0..n-1 preserving
    numeric order.  n is 1 + max original id when ids are already dense.
    """
    edges = []
    seen_ids = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
        seen_ids.add(u)
        seen_ids.add(v)
    if not edges:
        return Graph(0, name=name)
    top = max(seen_ids)
    if len(seen_ids) == top + 1 and min(seen_ids) == 0:
        n = top + 1
        remapped = edges
    else:
        order = {vid: i for i, vid in enumerate(sorted(seen_ids))}
        n = len(order)
        remapped = [(order[u], order[v]) for u, v in edges]
    return Graph(n, remapped, name=name)


def to_edge_list(g):
    return "\n".join(f"{u} {v}" for u, v in g.edges())


# -- graph6 -------------------------------------------------------------------


def _g6_number(n):
    if n < 0:
        raise GraphError("graph6: negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise GraphError("graph6: order too large")


def to_graph6(g):
    data = _g6_number(g.n)
    bitbuf = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bitbuf.append(col >> i & 1)
    out = bytearray(data)
    for k in range(0, len(bitbuf), 6):
        chunk = bitbuf[k : k + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = val << 1 | b
        out.append(val + 63)
    return out.decode("ascii")


def from_graph6(text, name=""):
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphError("graph6: empty input")
    raw = s.encode("ascii", errors="strict") if s.isascii() else None
    if raw is None or any(c < 63 or c > 126 for c in raw):
        raise GraphError("graph6: invalid character")
    if raw[0] == 126:
        if len(raw) < 4:
            raise GraphError("graph6: truncated order")
        if raw[1] == 126:
            raise GraphError("graph6: order too large")
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body = raw[4:]
    else:
        n = raw[0] - 63
        body = raw[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6: expected {need} payload bytes, got {len(body)}")
    bitstream = []
    for c in body:
        val = c - 63
        for shift in range(5, -1, -1):
            bitstream.append(val >> shift & 1)
    if any(bitstream[nbits:]):
        raise GraphError("graph6: nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges, name=name)


# -- subgraphs, components, invariants ----------------------------------------


def induced_vertices(mask):
    """Index map: position i in the induced graph -> vertex in the host."""
    return tuple(bits(mask))


def induced_subgraph(g, mask, name=""):
    """Induced subgraph on the vertices of ``mask`` (relabeled 0..k-1)."""
    if mask & ~g.full_mask():
        raise GraphError("vertex set out of range")
    verts = induced_vertices(mask)
    pos = {v: i for i, v in enumerate(verts)}
    edges = []
    for i, v in enumerate(verts):
        inner = g.adj[v] & mask
        for w in bits(inner):
            if w > v:
                edges.append((i, pos[w]))
    return Graph(len(verts), edges, name=name)


def components(g, within=None):
    """Connected components as bitmasks, ordered by smallest vertex.

    ``within`` restricts to an induced vertex subset (bitmask).
    """
    todo = g.full_mask() if within is None else within
    out = []
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            grow &= todo & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        todo &= ~comp
    return out


def component_sizes(g, within=None):
    return [c.bit_count() for c in components(g, within)]


def girth(g):
    """Length of a shortest cycle, or INF for forests.

    BFS from every vertex; a non-tree edge met at depths d1, d2 closes a
    cycle of length d1 + d2 + 1, and the minimum over all roots is exact.
    """
    best = INF
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        q = deque([root])
        while q:
            x = q.popleft()
            if dist[x] * 2 >= best:
                break
            for y in bits(g.adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y and parent[y] != x:
                    cyc = dist[x] + dist[y] + 1
                    if cyc < best:
                        best = cyc
    return best


def average_degree(g):
    """Exact rational 2|E|/|V|; rejects the null graph."""
    if g.n == 0:
        raise GraphError("average degree of the null graph is undefined")
    return Fraction(2 * g.edge_count(), g.n)
