"""Exact solvers for generalized colorings and island coloring numbers.

Everything here is deterministic: search ties break lowest-vertex-first and
lowest-color-first, so certificates are reproducible bit for bit.

The island coloring number is computed by iterated island removal rather
than by its every-induced-subgraph definition; the two agree for hereditary
parameters (the first peel island meeting an induced subgraph H intersects
it in an island of H).  The definitional brute force lives in the test
suite as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from fpcolor.errors import CapExceeded
from fpcolor.graph import Graph, bits
from fpcolor.params import Parameter

CHOOSABILITY_N_CAP = 10
CHOOSABILITY_S_CAP = 3
COL_N_CAP = 64
CHI_N_CAP = 24
EXHAUSTIVE_ISLAND_CAP = 16


@dataclass(frozen=True)
class ListAssignment:
    """Total per-vertex color lists over a small integer universe."""

    lists: tuple  # tuple of frozensets, one per vertex
    s: int  # declared minimum list size

    def __post_init__(self):
        if any(len(lst) < self.s for lst in self.lists):
            raise ValueError(f"not an {self.s}-list assignment: some list is smaller")

    @property
    def n(self):
        return len(self.lists)


def list_assignment(lists, s=None):
    lists = tuple(frozenset(lst) for lst in lists)
    if s is None:
        s = min((len(lst) for lst in lists), default=0)
    return ListAssignment(lists, s)


@dataclass(frozen=True)
class IslandCertificate:
    island: int  # vertex bitmask
    s: int
    f_value: int
    outside_counts: dict = field(compare=False)  # vertex -> outside-neighbor count


@dataclass(frozen=True)
class PeelDecomposition:
    islands: tuple  # IslandCertificate, in removal order
    s: int
    f_id: str
    p: int


@dataclass(frozen=True)
class ColResult:
    value: int
    upper_certificate: PeelDecomposition
    lower_certificate: int | None  # stuck induced-subgraph mask at s = value-1


def verify_fp_proper(g: Graph, coloring, f: Parameter, p: int) -> bool:
    """True iff every color class induces a subgraph with f <= p."""
    if len(coloring) != g.n:
        raise ValueError("coloring must be total on V(G)")
    class_masks = {}
    for v, c in enumerate(coloring):
        class_masks[c] = class_masks.get(c, 0) | 1 << v
    return all(f.eval_mask(g, m) <= p for m in class_masks.values())


def _is_island(g, island, active, s):
    for v in bits(island):
        if (g.adj[v] & active & ~island).bit_count() >= s:
            return False
    return True


def _certificate(g, island, active, s, f, p):
    outside = {v: (g.adj[v] & active & ~island).bit_count() for v in bits(island)}
    return IslandCertificate(island, s, f.eval_mask(g, island), outside)


def find_island(g: Graph, s: int, f: Parameter, p: int, active=None):
    """A connected s-island of g[active] with f <= p, or None.

    For connected hereditary f, absence of a connected island implies
    absence of any island (each component of an island is an island with
    the same defect bound), so None means no island at all.
    """
    if active is None:
        active = g.full_mask()
    if not active:
        return None
    # singleton fast path, lowest vertex first
    for v in bits(active):
        if (g.adj[v] & active).bit_count() < s and f.eval_mask(g, 1 << v) <= p:
            return _certificate(g, 1 << v, active, s, f, p)

    def search(island, ext, banned):
        if _is_island(g, island, active, s):
            return island
        # a vertex already saturated by permanently-excluded neighbors
        # can never satisfy the island condition in any extension
        for v in bits(island):
            if (g.adj[v] & active & banned).bit_count() >= s:
                return 0
        while ext:
            u = ext & -ext
            ext ^= u
            grown = island | u
            if f.eval_mask(g, grown) <= p:
                new_ext = (ext | (g.adj[u.bit_length() - 1] & active)) & ~grown & ~banned
                found = search(grown, new_ext, banned)
                if found:
                    return found
            banned |= u
        return 0

    lower = 0
    for anchor in bits(active):
        abit = 1 << anchor
        ext = g.adj[anchor] & active & ~lower
        found = search(abit, ext, lower)
        if found:
            return _certificate(g, found, active, s, f, p)
        lower |= abit
    return None


def peel(g: Graph, s: int, f: Parameter, p: int):
    """Repeatedly remove s-islands with f <= p.

    Returns (islands, 0) when the graph peels away completely, or
    (None, remainder-mask) when an island-free induced subgraph is hit.
    """
    active = g.full_mask()
    islands = []
    while active:
        cert = find_island(g, s, f, p, active)
        if cert is None:
            return None, active
        islands.append(cert)
        active &= ~cert.island
    return islands, 0


def col_fp(g: Graph, f: Parameter, p: int, cap=COL_N_CAP) -> ColResult:
    """Exact island coloring number with upper and lower certificates."""
    if g.n > cap:
        raise CapExceeded(f"col: n={g.n} exceeds cap {cap}", cap_name="col-n")
    for v in range(g.n):
        if f.eval_mask(g, 1 << v) > p:
            raise ValueError(
                f"col undefined: f(single vertex {v}) > {p}, vertex can join no island"
            )
    lower_cert = None
    s = 1
    while True:
        islands, remainder = peel(g, s, f, p)
        if islands is not None:
            upper = PeelDecomposition(tuple(islands), s, f.id, p)
            return ColResult(s, upper, lower_cert)
        lower_cert = remainder
        s += 1


def degeneracy_col(g: Graph) -> int:
    """Classical coloring number via min-degree peeling (degeneracy + 1)."""
    if g.n == 0:
        return 1
    degs = [g.degree(v) for v in range(g.n)]
    buckets = [set() for _ in range(g.n)]
    for v, d in enumerate(degs):
        buckets[d].add(v)
    alive = g.full_mask()
    worst = 0
    cursor = 0
    for _ in range(g.n):
        while not buckets[cursor]:
            cursor += 1
        v = min(buckets[cursor])
        buckets[cursor].remove(v)
        worst = max(worst, degs[v])
        alive &= ~(1 << v)
        for w in bits(g.adj[v] & alive):
            buckets[degs[w]].remove(w)
            degs[w] -= 1
            buckets[degs[w]].add(w)
        cursor = max(cursor - 1, 0)
    return worst + 1


def chi_fp(g: Graph, f: Parameter, p: int, cap=CHI_N_CAP):
    """Least s admitting an (f,p)-proper coloring, with a witness.

    Backtracking over vertices in index order; with hereditary f a partial
    class already violating f <= p prunes the branch (a violation can never
    recover), otherwise classes are only checked once complete.
    """
    if g.n > cap:
        raise CapExceeded(f"chi: n={g.n} exceeds cap {cap}", cap_name="chi-n")
    if g.n == 0:
        return 0, ()
    for v in range(g.n):
        if f.eval_mask(g, 1 << v) > p:
            raise ValueError(f"chi undefined: f(single vertex {v}) > {p}")
    prune = f.hereditary

    for s in range(1, g.n + 1):
        assign = [-1] * g.n
        class_masks = [0] * s

        def rec(i, used):
            if i == g.n:
                if prune:
                    return True
                return all(
                    f.eval_mask(g, m) <= p for m in class_masks[:used] if m
                )
            for c in range(min(used + 1, s)):
                grown = class_masks[c] | 1 << i
                if prune and f.eval_mask(g, grown) > p:
                    continue
                assign[i] = c
                saved = class_masks[c]
                class_masks[c] = grown
                if rec(i + 1, max(used, c + 1)):
                    return True
                class_masks[c] = saved
                assign[i] = -1
            return False

        if rec(0, 0):
            return s, tuple(assign)
    raise AssertionError("unreachable: singleton classes always color at s = n")


def exists_L_coloring(g: Graph, L: ListAssignment, f: Parameter, p: int):
    """An (f,p)-proper coloring with colors drawn from L, or None."""
    if L.n != g.n:
        raise ValueError("list assignment domain mismatch")
    if g.n == 0:
        return ()
    prune = f.hereditary
    assign = [-1] * g.n
    class_masks = {}
    choices = [sorted(lst) for lst in L.lists]

    def rec(i):
        if i == g.n:
            if prune:
                return True
            return all(f.eval_mask(g, m) <= p for m in class_masks.values())
        for c in choices[i]:
            grown = class_masks.get(c, 0) | 1 << i
            if prune and f.eval_mask(g, grown) > p:
                continue
            assign[i] = c
            saved = class_masks.get(c, 0)
            class_masks[c] = grown
            if rec(i + 1):
                return True
            if saved:
                class_masks[c] = saved
            else:
                del class_masks[c]
            assign[i] = -1
        return False

    if rec(0):
        return tuple(assign)
    return None


def decide_choosability_fp(
    g: Graph,
    s: int,
    f: Parameter,
    p: int,
    cap_n=CHOOSABILITY_N_CAP,
    cap_s=CHOOSABILITY_S_CAP,
):
    """Whether every s-list assignment admits an (f,p)-proper coloring.

    Adversarial enumeration over list systems from a universe of size s*n,
    quotiented by color permutations: colors must be introduced in first
    occurrence order along the fixed vertex order, and fresh colors in a
    single list are consecutive.  On False the offending assignment is
    returned as a certificate.
    """
    if g.n > cap_n:
        raise CapExceeded(
            f"choosability: n={g.n} exceeds cap {cap_n}", cap_name="choosability-n"
        )
    if s > cap_s:
        raise CapExceeded(
            f"choosability: s={s} exceeds cap {cap_s}", cap_name="choosability-s"
        )
    if g.n == 0:
        return True, None

    lists = [None] * g.n

    def rec(i, used):
        if i == g.n:
            L = ListAssignment(tuple(lists), s)
            if exists_L_coloring(g, L, f, p) is None:
                return L
            return None
        for fresh in range(s + 1):
            fresh_block = frozenset(range(used, used + fresh))
            for old in combinations(range(used), s - fresh):
                lists[i] = frozenset(old) | fresh_block
                bad = rec(i + 1, used + fresh)
                if bad is not None:
                    return bad
        return None

    bad = rec(0, 0)
    return bad is None, bad


def greedy_island_coloring(g: Graph, L: ListAssignment, f: Parameter, p: int, peel_cert=None):
    """(f,p)-proper L-coloring by reverse-peel greedy extension.

    Requires |L(v)| >= s where s admits a full peel; islands are colored
    latest-peeled first, each vertex taking its lowest list color unused on
    already-colored neighbors outside its own island.
    """
    if L.n != g.n:
        raise ValueError("list assignment domain mismatch")
    if g.n == 0:
        return ()
    if peel_cert is None:
        islands, _ = peel(g, L.s, f, p)
        if islands is None:
            raise ValueError(
                f"list size {L.s} is below the island coloring number: peel got stuck"
            )
        peel_cert = PeelDecomposition(tuple(islands), L.s, f.id, p)
    colors = [-1] * g.n
    colored = 0
    for cert in reversed(peel_cert.islands):
        for v in bits(cert.island):
            forbidden = {colors[w] for w in bits(g.adj[v] & colored & ~cert.island)}
            for c in sorted(L.lists[v]):
                if c not in forbidden:
                    colors[v] = c
                    break
            else:
                raise ValueError(f"no available list color at vertex {v}")
        colored |= cert.island
    return tuple(colors)


def compose_bound(p: int, s: int, g_fn) -> int:
    """Iterated two-argument bound g(p, g(p, ..., g(p,p)...)), depth s-1."""
    if s < 1:
        raise ValueError("s must be at least 1")
    value = p
    for _ in range(s - 1):
        value = g_fn(p, value)
    return value


def island_free_exhaustive(g: Graph, s: int, f: Parameter, p: int, active=None,
                           cap=EXHAUSTIVE_ISLAND_CAP):
    """Definition-level check that g[active] contains NO s-island with f <= p.

    Enumerates all nonempty vertex subsets (not only connected ones); used
    to re-verify lower certificates without trusting solver internals.
    """
    if active is None:
        active = g.full_mask()
    verts = list(bits(active))
    k = len(verts)
    if k > cap:
        raise CapExceeded(
            f"exhaustive island check: {k} vertices exceeds cap {cap}",
            cap_name="exhaustive-island-n",
        )
    for sub in range(1, 1 << k):
        island = 0
        rest = sub
        while rest:
            low = rest & -rest
            island |= 1 << verts[low.bit_length() - 1]
            rest ^= low
        if _is_island(g, island, active, s) and f.eval_mask(g, island) <= p:
            return False
    return True


def verify_peel(g: Graph, decomposition: PeelDecomposition, f: Parameter) -> bool:
    """Replay a peel decomposition against the island definition only."""
    active = g.full_mask()
    s, p = decomposition.s, decomposition.p
    for cert in decomposition.islands:
        island = cert.island
        if not island or island & ~active:
            return False
        if not _is_island(g, island, active, s):
            return False
        if f.eval_mask(g, island) > p:
            return False
        active &= ~island
    return active == 0
