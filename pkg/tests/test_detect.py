from math import floor, log2

import pytest
from hypothesis import given, strategies as st

from tourpat import counting as C
from tourpat.detect import (
    SpineDecomposition,
    best_spine_decomposition,
    contains_transitive,
    core_length,
    detect_pattern,
    detect_pattern_witness,
    extract_transitive_em,
    is_spine_decomposition,
    spine_decompositions,
    tt_number,
)
from tourpat.iso import are_isomorphic
from tourpat.structures import (
    Tournament,
    flipped_transitive,
    induced,
    is_transitive,
    num_pairs,
    random_tournament,
    transitive_tournament,
    triangle,
)
from tourpat.ttunique import family_Tc, family_Tc_decomposition
import oracles
from strategies import tournaments

# from the 3^k brute-force oracle, frozen
RANDOM6_CORES = [2, 2, 2, 1]
RANDOM10_TT = [6, 6, 6, 6, 6]


def test_frozen_cores():
    assert core_length(flipped_transitive(6)) == 2
    assert core_length(triangle()) == 1
    assert [core_length(random_tournament(6, s)) for s in range(4)] == RANDOM6_CORES


def test_frozen_tt_numbers():
    assert [tt_number(random_tournament(10, s))[0] for s in range(5)] == RANDOM10_TT


@pytest.mark.parametrize("k", range(1, 10))
def test_transitive_core_is_full(k):
    t = transitive_tournament(k)
    assert core_length(t) == k
    dec = best_spine_decomposition(t)
    assert dec.ribs == 0 and dec.spine == frozenset(range(1, k + 1))


@given(tournaments(min_order=1, max_order=6))
def test_core_matches_oracle(t):
    assert core_length(t) == oracles.core_length(t)


@given(tournaments(min_order=1, max_order=7))
def test_every_listed_decomposition_is_valid(t):
    decs = spine_decompositions(t)
    assert decs and all(is_spine_decomposition(t, d.r_plus, d.r_minus, d.spine) for d in decs)
    best = best_spine_decomposition(t)
    assert best in decs
    assert best.length == max(d.length for d in decs)


def test_invalid_decomposition_rejected():
    t = triangle()
    assert not is_spine_decomposition(t, {1}, set(), {2, 3})
    assert not is_spine_decomposition(t, {1}, {1}, {2, 3})
    bad = SpineDecomposition(3, frozenset({1}), frozenset(), frozenset({2, 3}))
    with pytest.raises(ValueError):
        detect_pattern(t, random_tournament(6, 0), bad)


@given(tournaments(min_order=1, max_order=7))
def test_tt_number_matches_oracle(t):
    size, chain = tt_number(t)
    assert size == oracles.tt_number(t) == len(chain)
    assert oracles.is_transitive_set(t, chain)
    for a in range(len(chain)):
        for b in range(a + 1, len(chain)):
            assert t.has_arc(chain[a], chain[b])


@given(tournaments(min_order=1, max_order=16))
def test_em_extraction_bound(t):
    chain = extract_transitive_em(t)
    assert len(chain) >= floor(log2(t.order)) + 1
    assert is_transitive(induced(t, sorted(chain)))[0]


def test_em_on_order_four_finds_three():
    for code in range(1 << num_pairs(4)):
        assert len(extract_transitive_em(Tournament(4, code))) >= 3


@given(tournaments(min_order=1, max_order=8), st.integers(0, 9))
def test_contains_transitive(t, size):
    found = contains_transitive(t, size)
    assert (found is not None) == (size <= oracles.tt_number(t) or size == 0)
    if found:
        assert len(found) == size and oracles.is_transitive_set(t, found)


def test_transitive_three_not_in_triangle():
    assert not detect_pattern(transitive_tournament(3), triangle())
    assert detect_pattern(triangle(), triangle())


def _check_witness(t, host, w):
    assert len(set(w)) == t.order
    assert are_isomorphic(induced(host, sorted(w)), t)


@given(tournaments(min_order=1, max_order=5), tournaments(min_order=1, max_order=9))
def test_detection_matches_counting(t, host):
    w = detect_pattern_witness(t, host)
    assert (w is not None) == (C.count_indsub_to(t, host) > 0) == (oracles.count_indsub(t, host) > 0)
    if w is not None:
        _check_witness(t, host, w)


@given(tournaments(min_order=2, max_order=6), st.integers(0, 2**64 - 1))
def test_detection_with_every_decomposition(t, seed):
    host = random_tournament(10, seed)
    want = C.decide_indsub_to(t, host)
    for dec in spine_decompositions(t)[:6]:
        assert detect_pattern(t, host, dec) == want


@pytest.mark.parametrize("k0,j", [(2, 5), (3, 5), (3, 6), (4, 7)])
def test_family_with_long_spine(k0, j):
    t0 = random_tournament(k0, k0 + j)
    t = family_Tc(t0, j)
    dec = family_Tc_decomposition(t0, j)
    assert is_spine_decomposition(t, dec.r_plus, dec.r_minus, dec.spine)
    assert core_length(t) >= j >= 5
    host = random_tournament(20, j)
    assert detect_pattern(t, host, dec) == C.decide_indsub_to(t, host)


def test_large_pattern_falls_back():
    t = random_tournament(15, 3)
    assert detect_pattern(t, t)
    with pytest.raises(ValueError):
        core_length(t)


def test_pattern_larger_than_host():
    assert detect_pattern_witness(transitive_tournament(5), transitive_tournament(4)) is None
