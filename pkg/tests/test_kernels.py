"""The compiled kernels and the pure-Python fallback must agree exactly."""

import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tourpat import _pykernels
from tourpat.structures import random_colored_graph, random_tournament
from strategies import tournaments

ck = pytest.importorskip("tourpat._ckernels")


@given(tournaments(max_order=6))
def test_iso_table(t):
    assert ck.iso_table(t.bits, t.order, True) == _pykernels.iso_table(t.bits, t.order, True)
    assert ck.iso_table(t.bits, t.order, False) == _pykernels.iso_table(t.bits, t.order, False)


@given(st.integers(1, 40), st.integers(1, 4), st.integers(0, 2**32))
def test_histograms(n, k, seed):
    t = random_tournament(n, seed)
    assert ck.subset_code_hist(t.out_rows, n, k) == _pykernels.subset_code_hist(t.out_rows, n, k)
    g = random_colored_graph(n, k, seed)
    args = (g.graph.rows, g.coloring.classes, k)
    assert ck.colorful_code_hist(*args) == _pykernels.colorful_code_hist(*args)


@given(st.integers(1, 10), st.integers(0, 2**32))
def test_transforms(m, seed):
    t = random_tournament(12, seed)
    values = [((t.bits >> (i % 60)) & 7) - 3 for i in range(1 << m)]
    assert ck.mobius(list(values), m) == _pykernels.mobius(list(values), m)
    assert ck.superset_sum(list(values), m) == _pykernels.superset_sum(list(values), m)


def test_transforms_beyond_int64():
    values = [3**50, -(2**70), 5, 7]
    assert ck.mobius(list(values), 2) == _pykernels.mobius(list(values), 2)


@given(tournaments(min_order=3, max_order=5), st.integers(0, 2**20))
def test_submask_scans(t, mask_seed):
    table = _pykernels.iso_table(t.bits, t.order, True)
    mask = mask_seed & ((1 << (t.order * (t.order - 1) // 2)) - 1)
    assert ck.alternating_submask_sum(table, t.bits, mask) == _pykernels.alternating_submask_sum(table, t.bits, mask)
    assert ck.first_submask_hit(table, t.bits, mask) == _pykernels.first_submask_hit(table, t.bits, mask)


@pytest.mark.parametrize("n", [5, 31, 32, 33, 64, 70])
def test_max_transitive(n):
    for seed in range(3):
        t = random_tournament(n, seed)
        assert ck.max_transitive(t.out_rows, n, 0, 0)[0] == _pykernels.max_transitive(t.out_rows, n, 0, 0)[0]


@given(st.integers(1, 5), st.integers(1, 12), st.integers(0, 2**32))
def test_embeddings(k, n, seed):
    p = random_tournament(k, seed)
    h = random_tournament(n, seed + 1)
    assert ck.embeddings(p.out_rows, h.out_rows, n, 0) == _pykernels.embeddings(p.out_rows, h.out_rows, n, 0)


def test_backend_selected_by_environment():
    code = "from tourpat import _kernels; print(_kernels.BACKEND)"
    env = dict(os.environ, TOURPAT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    env.pop("TOURPAT_PURE_PYTHON")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "cython"
