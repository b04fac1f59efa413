"""Exact maximum-density subgraph via max-flow with rational thresholds.

Density of a vertex set S is |E(S)|/|S|; the maximum average degree is
twice the maximum density.  For a rational guess g = a/b the flow network
(source -> v: m; v -> sink: m + 2g - deg v; each edge 1 both ways, all
scaled by b) has min cut b*m*n - 2*(b|E(S)| - a|S|) minimized over S, so a
cut below b*m*n exhibits a set strictly denser than the guess.  Iterating
from the whole graph's density terminates with the exact optimum.
"""

from __future__ import annotations

from fractions import Fraction

from fpcolor.graph import bits


class _Dinic:
    def __init__(self, n):
        self.n = n
        self.graph = [[] for _ in range(n)]

    def add_edge(self, u, v, cap):
        self.graph[u].append([v, cap, len(self.graph[v])])
        self.graph[v].append([u, 0, len(self.graph[u]) - 1])

    def _bfs(self, s, t):
        level = [-1] * self.n
        level[s] = 0
        q = [s]
        for u in q:
            for v, cap, _ in self.graph[u]:
                if cap > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        self.level = level
        return level[t] >= 0

    def _dfs(self, u, t, f):
        if u == t:
            return f
        while self.it[u] < len(self.graph[u]):
            e = self.graph[u][self.it[u]]
            v, cap, rev = e
            if cap > 0 and self.level[v] == self.level[u] + 1:
                d = self._dfs(v, t, min(f, cap))
                if d > 0:
                    e[1] -= d
                    self.graph[v][rev][1] += d
                    return d
            self.it[u] += 1
        return 0

    def max_flow(self, s, t):
        flow = 0
        while self._bfs(s, t):
            self.it = [0] * self.n
            while True:
                f = self._dfs(s, t, float("inf"))
                if f == 0:
                    break
                flow += f
        return flow

    def source_side(self, s):
        seen = [False] * self.n
        seen[s] = True
        q = [s]
        for u in q:
            for v, cap, _ in self.graph[u]:
                if cap > 0 and not seen[v]:
                    seen[v] = True
                    q.append(v)
        return seen


def _denser_than(g, guess):
    """A vertex mask with density strictly above ``guess``, or 0."""
    n = g.n
    m = g.edge_count()
    a, b = guess.numerator, guess.denominator
    net = _Dinic(n + 2)
    source, sink = n, n + 1
    degs = [g.adj[v].bit_count() for v in range(n)]
    for v in range(n):
        net.add_edge(source, v, b * m)
        net.add_edge(v, sink, b * m + 2 * a - b * degs[v])
        nb = g.adj[v] >> (v + 1)
        w = v + 1
        while nb:
            if nb & 1:
                net.add_edge(v, w, b)
                net.add_edge(w, v, b)
            nb >>= 1
            w += 1
    cut = net.max_flow(source, sink)
    if cut >= b * m * n:
        return 0
    side = net.source_side(source)
    mask = 0
    for v in range(n):
        if side[v]:
            mask |= 1 << v
    return mask


def _density(g, mask):
    size = mask.bit_count()
    inner = sum((g.adj[v] & mask).bit_count() for v in bits(mask)) // 2
    return Fraction(inner, size)


def max_density(g):
    """(density, vertex mask) of an exactly densest nonempty subgraph."""
    if g.n == 0:
        return Fraction(0), 0
    if g.edge_count() == 0:
        return Fraction(0), 1
    best_mask = g.full_mask()
    best = _density(g, best_mask)
    while True:
        improved = _denser_than(g, best)
        if not improved:
            return best, best_mask
        cand = _density(g, improved)
        if cand <= best:  # cut certified optimality; cannot happen
            return best, best_mask
        best, best_mask = cand, improved


def exact_mad(g):
    """Maximum average degree over all subgraphs, as an exact Fraction."""
    if g.n == 0:
        return Fraction(0)
    dens, _ = max_density(g)
    return 2 * dens
