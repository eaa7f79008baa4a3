import csv
import io
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from tourpat import counting as C
from tourpat.iso import automorphism_count
from tourpat.structures import (
    ColoredGraph,
    Coloring,
    Graph,
    Tournament,
    induced,
    random_colored_graph,
    random_tournament,
    transitive_tournament,
    triangle,
)
from tourpat.ttunique import (
    CSV_COLUMNS,
    TTUniquePartition,
    check_tt_unique,
    experiment_tt_unique,
    family_Tc,
    has_colorful_clique,
    is_tt_unique,
    reports_to_csv,
    search_local_pattern,
    separating_literal,
    separating_polynomial,
    split_size,
    tt_gadget,
    tt_gadget_colors,
    tvec,
    verify_partition,
)
import oracles
from strategies import tournaments

# found by search_local_pattern(13, 1, seed=0) and frozen
PATTERN_13 = Tournament(13, 258413089179486664555145)
PATTERN_13_Z = {3}


def test_tvec_transitive():
    t = transitive_tournament(6)
    assert tvec(t, 4, {1, 2, 5, 6}) == {1, 2}
    assert tvec(t, 1, {2, 3}) == frozenset()
    with pytest.raises(ValueError):
        tvec(t, 2, {2, 3})


def test_tvec_triangle():
    assert tvec(triangle(), 1, {2, 3}) == {3}


@given(tournaments(min_order=1, max_order=7))
def test_empty_z_is_rigidity(t):
    rep = check_tt_unique(t, t.vertices, [])
    assert rep.separating and rep.unique_copy and rep.delta == t.order
    assert rep.ok == (automorphism_count(t) == 1)


@given(tournaments(min_order=2, max_order=7), st.data())
def test_pair_criterion_matches_literal(t, data):
    z = data.draw(st.sets(st.integers(1, t.order), max_size=2))
    d = set(t.vertices) - z
    for delta in range(-1, len(d) + 2):
        assert separating_polynomial(t, d, delta) == separating_literal(t, d, delta)


def test_reports_every_condition():
    t = transitive_tournament(5)
    rep = check_tt_unique(t, {1, 2, 3, 4}, {5})
    assert not rep.unique_copy and rep.trivial_aut and not rep.separating
    assert rep.tt == 5 and rep.delta == -1


def test_partition_must_cover():
    with pytest.raises(ValueError):
        check_tt_unique(triangle(), {1}, {2})
    with pytest.raises(ValueError):
        verify_partition(triangle(), {1, 2, 3}, [])


def test_frozen_pattern_is_tt_unique():
    d = set(PATTERN_13.vertices) - PATTERN_13_Z
    part = verify_partition(PATTERN_13, d, PATTERN_13_Z)
    assert part.verified and part.tt == oracles.tt_number(PATTERN_13) == 5
    assert part.delta == 12 - 5
    core = induced(PATTERN_13, sorted(d))
    assert automorphism_count(core) == 1
    assert C.count_indsub_to(core, PATTERN_13) == 1


def test_local_search_is_deterministic():
    a = search_local_pattern(13, 1, seed=0, max_steps=5000)
    b = search_local_pattern(13, 1, seed=0, max_steps=5000)
    assert a.tournament == b.tournament == PATTERN_13
    assert a.partition.z == frozenset(PATTERN_13_Z)
    assert a.transcript == b.transcript


def test_local_search_reports_failure():
    res = search_local_pattern(10, 2, seed=1, max_steps=50)
    assert res.partition is None and "no partition" in res.transcript[-1]


def _forward_ok(t, gstar, cstar, verts):
    for a, b in combinations(verts, 2):
        if gstar.has_arc(a, b) != t.has_arc(cstar[a - 1], cstar[b - 1]):
            return False
    return True


@pytest.mark.parametrize("seed", range(8))
def test_gadget(seed):
    part = verify_partition(PATTERN_13, set(PATTERN_13.vertices) - PATTERN_13_Z, PATTERN_13_Z)
    g = random_colored_graph(1 + seed, 1, seed)
    gstar = tt_gadget(PATTERN_13, part, g)
    assert gstar.order == g.order + 12
    cstar = tt_gadget_colors(part, g)
    tail = list(range(g.order + 1, gstar.order + 1))
    for v in g.graph.vertices:
        assert _forward_ok(PATTERN_13, gstar, cstar, [v] + tail)
    assert has_colorful_clique(g)
    assert C.count_indsub_to(PATTERN_13, gstar) == g.order
    assert C.decide_indsub_to(PATTERN_13, gstar)


def test_gadget_needs_verified_partition():
    fake = TTUniquePartition(13, frozenset(range(1, 13)), frozenset({13}), 5, False)
    with pytest.raises(ValueError):
        tt_gadget(PATTERN_13, fake, random_colored_graph(3, 1, 0))


def test_split_sizes():
    assert [split_size(k) for k in (8, 16, 32, 64, 128, 256)] == [0, 0, 0, 1, 2, 3]


@pytest.mark.parametrize("k", range(8, 17))
def test_experiment_well_formed(k):
    rep = experiment_tt_unique(k, 5, 7)
    assert rep.trials == 5 and rep.z == split_size(k)
    assert 0 <= rep.successes <= 5
    assert all(rep.successes + f <= 5 for f in (rep.fail_aut, rep.fail_unique, rep.fail_vec))
    rows = list(csv.reader(io.StringIO(reports_to_csv([rep]))))
    assert tuple(rows[0]) == CSV_COLUMNS and len(rows) == 2
    assert float(rows[1][3]) == pytest.approx(rep.successes / 5, abs=1e-6)


def test_experiment_is_deterministic():
    a = reports_to_csv([experiment_tt_unique(40, 6, 11)])
    b = reports_to_csv([experiment_tt_unique(40, 6, 11)])
    assert a == b


def test_experiment_workers_agree():
    assert experiment_tt_unique(20, 4, 3, workers=2) == experiment_tt_unique(20, 4, 3)


def test_empty_split_successes_are_rigid_patterns():
    rep = experiment_tt_unique(9, 10, 5)
    assert rep.z == 0 and rep.fail_unique == 0 and rep.fail_vec == 0
    assert rep.successes == 10 - rep.fail_aut


def test_family_tc_structure():
    t = family_Tc(triangle(), 5)
    assert t.order == 8
    for v in range(1, 4):
        for w in range(4, 9):
            assert t.has_arc(v, w)
    assert induced(t, range(4, 9)) == transitive_tournament(5)
