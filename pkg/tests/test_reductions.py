from math import comb

import pytest
from hypothesis import given, strategies as st

from tourpat import counting as C
from tourpat.enumerator import alternating_enumerator_naive, alternating_enumerator_table
from tourpat.reductions import (
    LinearCombination,
    biased_oracle,
    biased_tournament,
    cf_from_uncolored,
    clique_color_gadget,
    color_removal_terms,
    compose_to_cpsub_basis,
    cpsub_basis_of_cf,
    expand_cpindsub_in_cpsub_basis,
    extract_term,
    indsub_basis_of_cf,
    pied_graph,
    restrict_by_pattern,
    signature_gadget,
    symmetrize_cp_to_cf,
)
from tourpat.signatures import min_signature
from tourpat.structures import (
    ColoredGraph,
    ColoredTournament,
    Coloring,
    Graph,
    complete_graph,
    empty_graph,
    num_pairs,
    random_colored_graph,
    transitive_tournament,
    triangle,
)
import oracles
from strategies import colored_graphs, colored_tournaments, graphs, tournaments


def _cross_color_part(g: ColoredGraph) -> Graph:
    c = g.coloring.colors
    return Graph.from_edges(g.order, [(u, v) for u, v in g.graph.edges() if c[u - 1] != c[v - 1]])


def test_triangle_indsub_basis():
    lc = indsub_basis_of_cf(triangle())
    assert set(lc.terms) == {empty_graph(3), complete_graph(3)}
    assert all(c == 1 for c in lc.terms.values())


@pytest.mark.parametrize("k", [2, 3, 4])
def test_complete_graph_in_indsub_basis(k):
    t = transitive_tournament(k)
    assert indsub_basis_of_cf(t).coefficient(complete_graph(k)) == 1


@given(graphs(min_order=1, max_order=5))
def test_expansion_term_count(h):
    lc = expand_cpindsub_in_cpsub_basis(h)
    assert len(lc) == 2 ** (num_pairs(h.order) - h.num_edges)
    assert lc.coefficient(h) == 1
    assert all(h.is_subgraph_of(g) for g in lc.terms)


@given(graphs(min_order=1, max_order=4), st.data())
def test_expansion_evaluates_to_induced_count(h, data):
    g = data.draw(colored_graphs(h.order, max_order=7))
    lc = expand_cpindsub_in_cpsub_basis(h)
    assert lc.evaluate(lambda f: C.count_cp_sub(f, g)) == C.count_cp_indsub(h, g)


@given(tournaments(min_order=1, max_order=4), st.data())
def test_biased_identity_two_routes(t, data):
    g = data.draw(colored_graphs(t.order, max_order=7))
    lhs = C.count_cf_indsub_to(t, biased_tournament(g, t))
    via_ae = cpsub_basis_of_cf(t).evaluate(lambda h: C.count_cp_sub(h, g))
    via_indsub = indsub_basis_of_cf(t).evaluate(lambda h: C.count_cp_indsub(h, g))
    assert lhs == via_ae == via_indsub
    assert compose_to_cpsub_basis(indsub_basis_of_cf(t)) == cpsub_basis_of_cf(t)


@given(tournaments(min_order=1, max_order=4), st.data())
def test_pied_round_trip(t, data):
    g = data.draw(colored_graphs(t.order, max_order=8))
    back = pied_graph(biased_tournament(g, t), t)
    assert back.coloring == g.coloring
    assert back.graph == _cross_color_part(g)


@given(tournaments(min_order=1, max_order=4), st.data())
def test_biased_of_pied_round_trip(t, data):
    host = data.draw(colored_tournaments(t.order, max_order=8))
    again = biased_tournament(pied_graph(host, t), t)
    c = host.coloring.colors
    for u, v in again.tournament.arcs():
        if c[u - 1] != c[v - 1]:
            assert host.tournament.has_arc(u, v)


@given(tournaments(min_order=2, max_order=4), st.integers(1, 8))
def test_monochromatic_pied_graph_is_edgeless(t, n):
    host = ColoredTournament(transitive_tournament(n), Coloring(t.order, (1,) * n))
    assert pied_graph(host, t).graph.num_edges == 0


@given(tournaments(min_order=1, max_order=4), st.data())
def test_color_removal(t, data):
    host = data.draw(colored_tournaments(t.order, max_order=8))
    terms = color_removal_terms(t, host)
    assert len(terms) == 2 ** t.order
    assert cf_from_uncolored(t, host) == C.count_cf_indsub_to(t, host) == oracles.count_cf_indsub(t, host)


@given(graphs(min_order=1, max_order=4), st.data())
def test_restrict_by_complete_pattern_drops_same_color_edges(f, data):
    g = data.draw(colored_graphs(f.order, max_order=8))
    full = restrict_by_pattern(g, complete_graph(f.order))
    assert full.graph == _cross_color_part(g)
    assert restrict_by_pattern(g, empty_graph(f.order)).graph.num_edges == 0


@given(tournaments(min_order=2, max_order=4), st.data())
def test_extraction_recovers_single_term(t, data):
    g = data.draw(colored_graphs(t.order, max_order=6))
    h = Graph(t.order, data.draw(st.integers(0, (1 << num_pairs(t.order)) - 1)))
    got = extract_term(biased_oracle(t), h, g)
    assert got == alternating_enumerator_naive(t, h) * C.count_cp_sub(h, g)


@given(st.data())
def test_extraction_is_linear(data):
    k = data.draw(st.integers(2, 3))
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=1 << num_pairs(k), max_size=1 << num_pairs(k)))
    lc = LinearCombination(k, {Graph(k, code): c for code, c in enumerate(coeffs) if c})
    g = data.draw(colored_graphs(k, max_order=6))

    def f(host):
        return lc.evaluate(lambda h: C.count_cp_sub(h, host))

    for code in range(1 << num_pairs(k)):
        h = Graph(k, code)
        assert extract_term(f, h, g) == lc.coefficient(h) * C.count_cp_sub(h, g)


def test_linear_combination_arithmetic():
    a = LinearCombination(2, {Graph(2, 1): 2})
    b = LinearCombination(2, {Graph(2, 1): -2, Graph(2, 0): 1})
    s = a + b
    assert len(s) == 1 and s.coefficient(Graph(2, 0)) == 1
    assert a.scaled(3).coefficient(Graph(2, 1)) == 6
    assert s.evaluate_table([5, 7]) == 5


@given(tournaments(min_order=2, max_order=5), st.data())
def test_signature_gadget_counts_colorful_cliques(t, data):
    r = min_signature(t).vertices
    if len(r) == t.order:
        return
    g = data.draw(colored_graphs(t.order - len(r), max_order=7))
    gstar = signature_gadget(t, r, g)
    assert gstar.order == g.order + len(r)
    assert C.count_cf_indsub_to(t, gstar) == C.count_cf_clique(t.order - len(r), g)


def test_signature_gadget_rejects_non_signature():
    g = random_colored_graph(4, 3, 1)
    with pytest.raises(ValueError):
        signature_gadget(triangle(), [], g)


@given(graphs(min_order=1, max_order=6), st.integers(1, 4))
def test_clique_color_gadget(g, k):
    gadget = clique_color_gadget(g, k)
    assert gadget.order == g.order * k
    assert C.count_cf_clique(k, gadget) == C.count_clique(k, g) == oracles.count_clique(k, g)


@given(graphs(min_order=1, max_order=3), st.data())
def test_symmetrization(h, data):
    g = data.draw(colored_graphs(h.order, max_order=7))
    assert symmetrize_cp_to_cf(h, g) == C.count_cf_sub(h, g) == oracles.count_cf_sub(h, g)


def test_palette_mismatch_rejected():
    g = random_colored_graph(4, 2, 3)
    with pytest.raises(ValueError):
        biased_tournament(g, triangle())


def test_ae_table_matches_cpsub_basis():
    t = triangle()
    table = alternating_enumerator_table(t)
    lc = cpsub_basis_of_cf(t)
    assert all(lc.coefficient(Graph(3, c)) == table[c] for c in range(8))
