from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tourpat import counting as C
from tourpat.structures import (
    ColoredGraph,
    Coloring,
    Graph,
    complete_graph,
    empty_graph,
    random_colored_graph,
    random_colored_tournament,
    random_graph,
    random_tournament,
    transitive_tournament,
    triangle,
)
import oracles
from strategies import colored_graphs, colored_tournaments, graphs, tournaments


def test_transitive_in_transitive():
    assert C.count_indsub_to(transitive_tournament(3), transitive_tournament(5)) == 10


def test_triangle_not_in_transitive():
    assert C.count_indsub_to(triangle(), transitive_tournament(5)) == 0
    assert not C.decide_indsub_to(triangle(), transitive_tournament(5))


def test_pattern_larger_than_host():
    assert C.count_indsub_to(transitive_tournament(6), transitive_tournament(5)) == 0


@given(tournaments(max_order=4), tournaments(min_order=1, max_order=8))
def test_indsub_matches_oracle(t, host):
    assert C.count_indsub_to(t, host) == oracles.count_indsub(t, host)


@pytest.mark.parametrize("n,k", [(40, 38), (64, 62), (30, 27)])
def test_removal_strategy_agrees_with_embeddings(n, k):
    host = random_tournament(n, n)
    from tourpat.structures import induced

    t = induced(host, range(1, k + 1))
    assert C._strategy(k, n) == "removal"
    count = C.count_indsub_to(t, host)
    assert count >= 1
    emb, _ = C._kernels.embeddings(t.out_rows, host.out_rows, n, 0)
    from tourpat.iso import automorphism_count

    assert count == emb // automorphism_count(t)


@given(st.integers(8, 14), st.integers(0, 2**32))
def test_embedding_strategy_agrees_with_subsets(k, seed):
    host = random_tournament(k + 5, seed)
    from tourpat.structures import induced

    t = induced(host, range(1, k + 1))
    emb, _ = C._kernels.embeddings(t.out_rows, host.out_rows, host.order, 0)
    from tourpat.iso import are_isomorphic, automorphism_count
    from itertools import combinations

    direct = sum(are_isomorphic(induced(host, s), t) for s in combinations(range(1, host.order + 1), k))
    assert emb // automorphism_count(t) == direct


@given(st.integers(1, 4).flatmap(lambda k: st.tuples(tournaments(k, k), colored_tournaments(k))))
def test_cf_indsub_matches_oracle(pair):
    t, host = pair
    assert C.count_cf_indsub_to(t, host) == oracles.count_cf_indsub(t, host)


@given(st.integers(1, 4).flatmap(lambda k: st.tuples(graphs(k, k), colored_graphs(k))))
def test_cp_counts_match_oracle(pair):
    h, g = pair
    assert C.count_cp_sub(h, g) == oracles.count_cp_sub(h, g)
    assert C.count_cf_sub(h, g) == oracles.count_cf_sub(h, g)


def test_cp_sub_triangle_path():
    # the path 1-3-2 inside a single colorful triangle: one prescribed copy, three free ones
    g = ColoredGraph(complete_graph(3), Coloring(3, (1, 2, 3)))
    path = Graph.from_edges(3, [(1, 3), (2, 3)])
    assert C.count_cp_sub(path, g) == 1
    assert C.count_cf_sub(path, g) == 3
    assert C.count_cp_indsub(path, g) == 0
    assert C.count_cf_indsub(path, g) == 0


def test_cp_indsub_is_exact_code():
    g = random_colored_graph(9, 3, 4)
    hist = C.colorful_histogram(g)
    for code in range(8):
        assert C.count_cp_indsub(Graph(3, code), g) == hist.get(code, 0)


def test_cp_sub_table_matches_counter():
    g = random_colored_graph(10, 4, 8)
    table = C.cp_sub_table(g)
    for code in range(64):
        assert table[code] == C.count_cp_sub(Graph(4, code), g)


def test_edgeless_pattern_counts_products():
    g = random_colored_graph(11, 3, 2)
    assert C.count_cp_sub(empty_graph(3), g) == C.color_class_product(g)


@given(graphs(min_order=1, max_order=8), st.integers(1, 5))
def test_clique_counts(g, k):
    assert C.count_clique(k, g) == oracles.count_clique(k, g)
    assert C.decide_clique(k, g) == (oracles.count_clique(k, g) > 0)


def test_clique_in_complete():
    assert C.count_clique(3, complete_graph(6)) == comb(6, 3)


@given(st.integers(1, 4).flatmap(lambda k: st.tuples(st.just(k), colored_graphs(k))))
def test_cf_clique(pair):
    k, g = pair
    assert C.count_cf_clique(k, g) == oracles.count_cf_clique(k, g)
    assert C.decide_cf_clique(k, g) == (C.count_cf_clique(k, g) > 0)


def test_palette_mismatch_raises():
    with pytest.raises(ValueError):
        C.count_cp_sub(empty_graph(3), random_colored_graph(5, 4, 1))
    with pytest.raises(ValueError):
        C.count_cf_indsub_to(triangle(), random_colored_tournament(5, 2, 1))


def test_find_copy_is_a_copy():
    host = random_tournament(12, 5)
    t = transitive_tournament(4)
    phi = C.find_copy(t, host)
    assert phi is not None
    for a in range(4):
        for b in range(4):
            if a != b:
                assert host.has_arc(phi[a], phi[b]) == t.has_arc(a + 1, b + 1)
