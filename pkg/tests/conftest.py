"""Shared brute-force oracles for the solver and acceptance tests.

Everything here works straight from the definitions, with no pruning and
no reliance on solver internals, so disagreements indict the solvers.
"""

from fpcolor.graph import bits

#: one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def brute_col(g, f, p):
    """Island coloring number by enumerating every induced subgraph H and
    every nonempty island candidate inside it (including H itself)."""
    n = g.n
    if n == 0:
        return 1
    s = 1
    while True:
        ok_all = True
        for H in range(1, 1 << n):
            found = False
            I = H
            while I:
                island = all(
                    (g.adj[v] & H & ~I).bit_count() < s for v in bits(I)
                )
                if island and f.eval_mask(g, I) <= p:
                    found = True
                    break
                I = (I - 1) & H
            if not found:
                ok_all = False
                break
        if ok_all:
            return s
        s += 1


def brute_chi(g, f, p):
    """Least color count admitting a coloring whose classes all have f <= p."""
    from itertools import product

    from fpcolor.solvers import verify_fp_proper

    if g.n == 0:
        return 0
    for s in range(1, g.n + 1):
        for assign in product(range(s), repeat=g.n):
            if verify_fp_proper(g, assign, f, p):
                return s
    raise AssertionError("unreachable")


def has_island_brute(g, s, f, p):
    """Whether any nonempty subset is an s-island with f <= p."""
    for I in range(1, 1 << g.n):
        if all((g.adj[v] & ~I).bit_count() < s for v in bits(I)):
            if f.eval_mask(g, I) <= p:
                return True
    return False
