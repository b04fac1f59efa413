"""Pluggable graph parameters with declared structural flags.

A parameter maps graphs to N (none of the built-ins produce infinity on a
finite graph); the flags declare heredity, connectedness, monotonicity and
whether the parameter bounds the average degree.  Flags are declared, not
inferred; the test suite falsifies wrong declarations at small scale.

Conventions on degenerate inputs: every built-in evaluates to 0 on the
null graph; fan of a single vertex is 1 and fan of any graph with an edge
is at least 2 (an edge is a two-vertex fan).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from fpcolor import density
from fpcolor.errors import CapExceeded
from fpcolor.graph import Graph, bits, components

CHROMATIC_CAP = 24
FAN_NEIGHBORHOOD_CAP = 20


@dataclass(frozen=True)
class Parameter:
    id: str
    hereditary: bool
    connected: bool
    monotone: bool
    bounds_avg_degree: bool
    evaluator: Callable = field(repr=False)

    def eval(self, g: Graph) -> int:
        return self.evaluator(g, g.full_mask())

    def eval_mask(self, g: Graph, mask: int) -> int:
        """Value on the subgraph of g induced by the bitmask ``mask``."""
        return self.evaluator(g, mask)

    def traits(self):
        return {
            "hereditary": self.hereditary,
            "connected": self.connected,
            "monotone": self.monotone,
            "bounds_avg_degree": self.bounds_avg_degree,
        }


def _max_degree(g, mask):
    return max(((g.adj[v] & mask).bit_count() for v in bits(mask)), default=0)


def _star(g, mask):
    if not mask:
        return 0
    return max(c.bit_count() for c in components(g, mask))


def _mad_floor(g, mask):
    return int(exact_mad_mask(g, mask))


def exact_mad_mask(g, mask):
    """Exact maximum average degree of g[mask] as a Fraction."""
    from fpcolor.graph import induced_subgraph

    if not mask:
        return density.exact_mad(Graph(0))
    return density.exact_mad(induced_subgraph(g, mask))


def _longest_path(g, mask):
    """Number of vertices of a longest simple path inside g[mask]."""
    if not mask:
        return 0
    h = mask.bit_count()
    if h > FAN_NEIGHBORHOOD_CAP:
        raise CapExceeded(
            f"fan: neighborhood of {h} vertices exceeds cap {FAN_NEIGHBORHOOD_CAP}",
            cap_name="fan-neighborhood",
        )
    best = 1
    frontier = [(1 << v, v) for v in bits(mask)]
    seen = set(frontier)
    while frontier:
        nxt = []
        for pmask, last in frontier:
            ext = g.adj[last] & mask & ~pmask
            for w in bits(ext):
                state = (pmask | 1 << w, w)
                if state not in seen:
                    seen.add(state)
                    nxt.append(state)
        if nxt:
            best += 1
        frontier = nxt
    return best


def _fan(g, mask):
    if not mask:
        return 0
    best = 1
    for v in bits(mask):
        nb = g.adj[v] & mask
        best = max(best, 1 + _longest_path(g, nb))
    return best


def _chromatic(g, mask, cap=CHROMATIC_CAP):
    verts = list(bits(mask))
    k = len(verts)
    if k == 0:
        return 0
    if k > cap:
        raise CapExceeded(f"chromatic: n={k} exceeds cap {cap}", cap_name="chromatic-n")
    # order by degree inside the mask, densest first
    verts.sort(key=lambda v: -(g.adj[v] & mask).bit_count())
    pos = {v: i for i, v in enumerate(verts)}
    nbr = [0] * k
    for i, v in enumerate(verts):
        for w in bits(g.adj[v] & mask):
            nbr[i] |= 1 << pos[w]

    # greedy clique lower bound
    clique = 0
    cand = (1 << k) - 1
    i = 0
    while cand:
        low = cand & -cand
        j = low.bit_length() - 1
        clique += 1
        cand &= nbr[j]
        i += 1

    # greedy upper bound
    colors = [-1] * k
    for i in range(k):
        used = 0
        for j in bits(nbr[i]):
            if colors[j] >= 0:
                used |= 1 << colors[j]
        c = 0
        while used >> c & 1:
            c += 1
        colors[i] = c
    upper = max(colors) + 1

    def colorable(limit):
        assign = [-1] * k

        def rec(i, used_count):
            if i == k:
                return True
            forbidden = 0
            for j in bits(nbr[i]):
                if assign[j] >= 0:
                    forbidden |= 1 << assign[j]
            top = min(used_count + 1, limit)
            for c in range(top):
                if forbidden >> c & 1:
                    continue
                assign[i] = c
                if rec(i + 1, max(used_count, c + 1)):
                    return True
                assign[i] = -1
            return False

        return rec(0, 0)

    for s in range(clique, upper):
        if colorable(s):
            return s
    return upper


PARAMETERS = {
    "max-degree": Parameter("max-degree", True, True, True, True, _max_degree),
    "star": Parameter("star", True, True, True, True, _star),
    "mad": Parameter("mad", True, True, True, True, _mad_floor),
    "fan": Parameter("fan", True, True, True, False, _fan),
    "chromatic": Parameter("chromatic", True, True, True, False, _chromatic),
}


def get_parameter(token):
    try:
        return PARAMETERS[token]
    except KeyError:
        raise ValueError(
            f"unknown parameter {token!r}; choose from {sorted(PARAMETERS)}"
        ) from None


def eval_max_degree(g):
    return PARAMETERS["max-degree"].eval(g)


def eval_star(g):
    return PARAMETERS["star"].eval(g)


def eval_mad_floor(g):
    return PARAMETERS["mad"].eval(g)


def eval_fan(g):
    return PARAMETERS["fan"].eval(g)


def eval_chromatic(g):
    return PARAMETERS["chromatic"].eval(g)


def parameter_traits(param):
    if isinstance(param, str):
        param = get_parameter(param)
    return param.traits()
