from fractions import Fraction

import pytest
from hypothesis import given

from tourpat.enumerator import (
    ae_complement_form,
    ae_permutation_form,
    alternating_enumerator_antimatching,
    alternating_enumerator_naive,
    alternating_enumerator_rational,
    alternating_enumerator_table,
    antimatching_parity_sum,
    apices,
    enumerate_ordered_maximal_matchings,
    enumerate_unordered_maximal_matchings,
    flip_along,
    has_clique_minor,
    matching_permutation,
    nonvanishing_support,
    treewidth_exact,
)
from tourpat.iso import automorphism_count
from tourpat.structures import (
    Graph,
    anti_matching,
    apply_permutation,
    complete_graph,
    empty_graph,
    flipped_transitive,
    transitive_tournament,
    triangle,
)
import oracles
from strategies import graphs, tournaments


# values below come from the definition-level oracle in tests/oracles.py
TRIANGLE_TABLE = [1, -1, -1, 1, -1, 1, 1, 0]
TRANSITIVE_ANTIMATCHING = {2: 1, 3: 1, 4: 2, 5: 2}
FLIPPED_ANTIMATCHING = {4: 2, 5: 2}


def test_triangle_table():
    assert alternating_enumerator_table(triangle()) == TRIANGLE_TABLE
    assert [oracles.alternating_enumerator(triangle(), Graph(3, c)) for c in range(8)] == TRIANGLE_TABLE


def test_triangle_named_values():
    assert alternating_enumerator_naive(triangle(), empty_graph(3)) == 1
    assert alternating_enumerator_naive(triangle(), anti_matching(3)) == 1
    assert alternating_enumerator_naive(triangle(), complete_graph(3)) == 0


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_antimatching_values(k):
    assert alternating_enumerator_antimatching(transitive_tournament(k)) == TRANSITIVE_ANTIMATCHING[k]
    if k in FLIPPED_ANTIMATCHING:
        assert alternating_enumerator_antimatching(flipped_transitive(k)) == FLIPPED_ANTIMATCHING[k]


@given(tournaments(min_order=1, max_order=4), graphs(min_order=1, max_order=4))
def test_naive_matches_oracle(t, h):
    if t.order != h.order:
        return
    assert alternating_enumerator_naive(t, h) == oracles.alternating_enumerator(t, h)


@given(tournaments(min_order=2, max_order=6))
def test_table_matches_naive(t):
    table = alternating_enumerator_table(t)
    for code in range(0, len(table), max(1, len(table) // 64)):
        assert table[code] == alternating_enumerator_naive(t, Graph(t.order, code))


@given(tournaments(min_order=2, max_order=4), graphs(min_order=2, max_order=4))
def test_permutation_and_complement_forms(t, h):
    if t.order != h.order:
        return
    aut = automorphism_count(t)
    ae = alternating_enumerator_naive(t, h)
    assert ae_permutation_form(t, h) == aut * ae
    assert ae_complement_form(t, h.complement()) == aut * ae
    assert alternating_enumerator_rational(t, h) == Fraction(ae)


def test_single_vertex_convention():
    from tourpat.structures import Tournament

    assert alternating_enumerator_naive(Tournament(1, 0), Graph(1, 0)) == 1


@given(tournaments(min_order=1, max_order=5))
def test_complete_graph_gives_identity_flip(t):
    assert flip_along(t, complete_graph(t.order)) == t


@given(tournaments(min_order=2, max_order=5))
def test_complete_graph_coefficient_vanishes(t):
    assert alternating_enumerator_table(t)[complete_graph(t.order).bits] == 0


@pytest.mark.parametrize("k,count", [(2, 1), (3, 3), (4, 3), (5, 15), (6, 15), (7, 105)])
def test_number_of_maximal_matchings(k, count):
    ms = enumerate_unordered_maximal_matchings(k)
    assert len(ms) == count == len(set(ms))
    assert all(len(m) == k // 2 for m in ms)
    from math import factorial

    assert len(enumerate_ordered_maximal_matchings(k)) == count * factorial(k // 2)


@given(tournaments(min_order=2, max_order=7))
def test_matching_permutation_disagrees_on_matched_pairs(t):
    for m in enumerate_unordered_maximal_matchings(t.order)[:5]:
        sigma = matching_permutation(m, t)
        moved = apply_permutation(t, sigma)
        for i in range(1, t.order // 2 + 1):
            assert moved.has_arc(2 * i - 1, 2 * i) != t.has_arc(2 * i - 1, 2 * i)


@given(tournaments(min_order=2, max_order=5))
def test_parity_sum_is_odd(t):
    assert antimatching_parity_sum(t) % 2 == 1


@given(tournaments(min_order=2, max_order=4))
def test_support_has_no_two_apices(t):
    for h in nonvanishing_support(t):
        assert len(apices(h)) <= 1
        assert h.num_edges <= anti_matching(t.order).num_edges


@pytest.mark.parametrize("k", range(3, 9))
def test_antimatching_treewidth(k):
    assert treewidth_exact(anti_matching(k)) == k - 2


def test_treewidth_small_graphs():
    assert treewidth_exact(complete_graph(5)) == 4
    assert treewidth_exact(empty_graph(5)) == 0
    cycle = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)])
    assert treewidth_exact(cycle) == 2


@pytest.mark.parametrize("k", range(4, 10))
def test_antimatching_clique_minor(k):
    assert has_clique_minor(anti_matching(k), 3 * k // 4)


def test_clique_minor_negative():
    assert not has_clique_minor(anti_matching(8), 7)
    cycle = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert has_clique_minor(cycle, 3) and not has_clique_minor(cycle, 4)
