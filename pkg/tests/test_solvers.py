"""Exact solvers: islands, peeling, chromatic and choosability decisions."""

import random

import pytest

from conftest import brute_chi, brute_col, has_island_brute
from fpcolor import constructions as cons
from fpcolor.errors import CapExceeded
from fpcolor.graph import Graph, bits, mask_of
from fpcolor.params import PARAMETERS, eval_chromatic
from fpcolor.solvers import (
    chi_fp,
    col_fp,
    compose_bound,
    decide_choosability_fp,
    degeneracy_col,
    exists_L_coloring,
    find_island,
    greedy_island_coloring,
    island_free_exhaustive,
    list_assignment,
    peel,
    verify_fp_proper,
    verify_peel,
)
from fpcolor.suites import choosability_value, random_graph_sample, random_list_assignment

STAR = PARAMETERS["star"]
MAX_DEGREE = PARAMETERS["max-degree"]
FAN = PARAMETERS["fan"]


def test_list_assignment_validation():
    L = list_assignment([{0, 1}, {1, 2}])
    assert L.s == 2 and L.n == 2
    with pytest.raises(ValueError):
        list_assignment([{0}], s=2)


def test_verify_fp_proper():
    c5 = cons.cycle(5)
    assert verify_fp_proper(c5, (0, 1, 0, 1, 2), STAR, 1)
    assert not verify_fp_proper(c5, (0, 0, 1, 0, 1), STAR, 1)
    assert verify_fp_proper(c5, (0, 0, 1, 0, 1), STAR, 2)
    with pytest.raises(ValueError):
        verify_fp_proper(c5, (0, 1), STAR, 1)


def test_find_island_matches_brute_existence():
    for g in random_graph_sample(40, 7, 101):
        for f, p in ((STAR, 1), (STAR, 2), (MAX_DEGREE, 1), (FAN, 2)):
            for s in (1, 2, 3):
                got = find_island(g, s, f, p)
                assert (got is not None) == has_island_brute(g, s, f, p)
                if got is not None:
                    # certificate is checkable from the definition
                    assert got.island
                    assert f.eval_mask(g, got.island) <= p
                    for v in bits(got.island):
                        outside = (g.adj[v] & ~got.island).bit_count()
                        assert outside < s
                        assert got.outside_counts[v] == outside


def test_peel_and_verify_peel():
    g = cons.petersen()
    islands, rest = peel(g, 4, STAR, 1)
    assert rest == 0 and islands is not None
    res = col_fp(g, STAR, 1)
    assert verify_peel(g, res.upper_certificate, STAR)
    # corrupting the decomposition must be caught
    bad = res.upper_certificate.islands[:-1]
    from fpcolor.solvers import PeelDecomposition

    assert not verify_peel(g, PeelDecomposition(bad, res.value, "star", 1), STAR)


def test_col_known_values():
    assert col_fp(cons.cycle(5), STAR, 1).value == 3
    assert col_fp(cons.path(6), STAR, 1).value == 2
    assert col_fp(cons.complete(4), STAR, 1).value == 4
    assert col_fp(cons.petersen(), STAR, 1).value == 4
    assert col_fp(Graph(0), STAR, 1).value == 1
    assert col_fp(cons.path_power(9, 2), STAR, 2).value == 3
    assert col_fp(cons.path_power(8, 1), STAR, 3).value == 2
    assert col_fp(cons.fan_join(2), FAN, 2).value == 3


def test_col_matches_degeneracy_and_brute():
    for g in random_graph_sample(40, 7, 103):
        res = col_fp(g, STAR, 1)
        assert res.value == degeneracy_col(g)
        assert res.value == brute_col(g, STAR, 1)
        assert col_fp(g, STAR, 2).value == brute_col(g, STAR, 2)
        assert col_fp(g, MAX_DEGREE, 1).value == brute_col(g, MAX_DEGREE, 1)


def test_col_certificates():
    for g in random_graph_sample(20, 8, 107, min_n=1):
        res = col_fp(g, STAR, 1)
        assert verify_peel(g, res.upper_certificate, STAR)
        if res.value > 1:
            assert res.lower_certificate
            assert island_free_exhaustive(
                g, res.value - 1, STAR, 1, active=res.lower_certificate
            )


def test_col_rejects_impossible_vertex():
    with pytest.raises(ValueError):
        col_fp(cons.cycle(5), STAR, 0)
    with pytest.raises(ValueError):
        chi_fp(cons.cycle(5), STAR, 0)


def test_caps_raise():
    big = cons.random_gnp(70, 0.2, 5)
    with pytest.raises(CapExceeded):
        col_fp(big, STAR, 1)
    with pytest.raises(CapExceeded):
        chi_fp(cons.random_gnp(30, 0.2, 5), STAR, 1)
    with pytest.raises(CapExceeded):
        decide_choosability_fp(cons.random_gnp(12, 0.5, 5), 2, STAR, 1)
    with pytest.raises(CapExceeded):
        decide_choosability_fp(cons.cycle(5), 4, STAR, 1)
    with pytest.raises(CapExceeded):
        island_free_exhaustive(cons.random_gnp(20, 0.5, 5), 2, STAR, 1)


def test_chi_matches_chromatic_and_brute():
    for g in random_graph_sample(25, 6, 109):
        s, coloring = chi_fp(g, STAR, 1)
        assert s == eval_chromatic(g)
        if g.n:
            assert verify_fp_proper(g, coloring, STAR, 1)
        assert chi_fp(g, STAR, 2)[0] == brute_chi(g, STAR, 2)
        assert chi_fp(g, MAX_DEGREE, 1)[0] == brute_chi(g, MAX_DEGREE, 1)


def test_chi_known_values():
    assert chi_fp(Graph(0), STAR, 1) == (0, ())
    assert chi_fp(cons.complete(4), STAR, 2)[0] == 2
    assert chi_fp(cons.complete(4), STAR, 4)[0] == 1
    assert chi_fp(cons.cycle(5), STAR, 2)[0] == 2


def test_exists_L_coloring():
    c4 = cons.cycle(4)
    L = list_assignment([{0, 1}, {0, 1}, {0, 1}, {0, 1}])
    got = exists_L_coloring(c4, L, STAR, 1)
    assert got is not None and verify_fp_proper(c4, got, STAR, 1)
    assert all(got[v] in L.lists[v] for v in range(4))
    # the classical non-2-choosable assignment for K_{2,4}
    k24 = cons.complete_bipartite(2, 4)
    bad = list_assignment(
        [{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}]
    )
    assert exists_L_coloring(k24, bad, STAR, 1) is None
    with pytest.raises(ValueError):
        exists_L_coloring(cons.path(3), L, STAR, 1)


def test_choosability_decisions():
    ok, cert = decide_choosability_fp(cons.cycle(4), 2, STAR, 1)
    assert ok and cert is None
    ok, cert = decide_choosability_fp(cons.complete_bipartite(2, 4), 2, STAR, 1)
    assert not ok
    # the returned assignment really defeats every L-coloring
    assert exists_L_coloring(cons.complete_bipartite(2, 4), cert, STAR, 1) is None
    ok, _ = decide_choosability_fp(cons.cycle(5), 2, STAR, 1)
    assert not ok  # odd cycles are not 2-choosable
    ok, _ = decide_choosability_fp(cons.cycle(5), 3, STAR, 1)
    assert ok


def test_choosability_monotone_in_s():
    for g in random_graph_sample(10, 4, 113):
        prev = False
        for s in (1, 2, 3):
            ok, _ = decide_choosability_fp(g, s, STAR, 1)
            assert ok or not prev
            prev = prev or ok


def test_sandwich_chain():
    """chi <= list-chromatic <= col for a connected hereditary parameter."""
    for g in random_graph_sample(10, 4, 127):
        for p in (1, 2):
            col = col_fp(g, STAR, p).value
            chi = chi_fp(g, STAR, p)[0]
            ell = choosability_value(g, STAR, p, smax=3)
            assert chi <= col
            if ell is not None:
                assert chi <= ell <= col


def test_greedy_island_coloring():
    rng = random.Random(131)
    for g in random_graph_sample(25, 8, 131, min_n=1):
        for f, p in ((STAR, 1), (MAX_DEGREE, 1)):
            s = col_fp(g, f, p).value
            for _ in range(5):
                L = random_list_assignment(g.n, s, s + 3, rng)
                coloring = greedy_island_coloring(g, L, f, p)
                assert all(coloring[v] in L.lists[v] for v in range(g.n))
                assert verify_fp_proper(g, coloring, f, p)


def test_greedy_island_coloring_rejects_short_lists():
    k4 = cons.complete(4)
    L = list_assignment([{0, 1}] * 4)
    with pytest.raises(ValueError):
        greedy_island_coloring(k4, L, STAR, 1)  # col is 4, lists of size 2


def test_greedy_island_coloring_domain_mismatch():
    with pytest.raises(ValueError):
        greedy_island_coloring(cons.path(3), list_assignment([{0}]), STAR, 1)


def test_compose_bound():
    assert compose_bound(3, 1, lambda a, b: a + b) == 3
    assert compose_bound(3, 4, lambda a, b: a + b) == 12
    assert compose_bound(2, 3, lambda a, b: a * b + 1) == 11
    with pytest.raises(ValueError):
        compose_bound(2, 0, lambda a, b: a + b)


def test_island_free_exhaustive_on_masks():
    g = cons.complete(4)
    # K4 has no 1-island of cluster size 1 except nothing: every proper subset
    # sees outside vertices, and the whole graph violates star <= 1
    assert island_free_exhaustive(g, 1, STAR, 1)
    assert not island_free_exhaustive(g, 1, STAR, 4)
    assert island_free_exhaustive(g, 2, STAR, 1, active=mask_of([0, 1, 2]))
