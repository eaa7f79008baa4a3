"""Exact counters and deciders for tournament and colored-graph patterns.

Pattern codes are pair bitmasks (see :mod:`tourpat.structures`). For colored
hosts, a colorful vertex choice is read as a code whose positions are the
colors, so a color-prescribed copy of ``H`` is exactly a choice whose code
contains ``H``'s bits.

Counts are Python integers throughout.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from . import _kernels
from .iso import are_isomorphic, automorphism_count, iso_class, iso_class_codes
from .structures import (
    ColoredGraph,
    ColoredTournament,
    Graph,
    Tournament,
    induced,
    num_pairs,
)

# subset enumeration is used while C(n, k) stays below this
SUBSET_LIMIT = 3_000_000
TABLE_ORDER = 7


def _check_palette(pattern_order: int, host) -> None:
    if host.palette != pattern_order:
        raise ValueError(f"palette {host.palette} differs from pattern order {pattern_order}")


# --- histograms -----------------------------------------------------------

def colorful_histogram(host: ColoredGraph | ColoredTournament) -> dict[int, int]:
    """Counts of pair codes over all colorful vertex choices (position = color)."""
    if isinstance(host, ColoredGraph):
        rows = host.graph.rows
    else:
        rows = host.tournament.out_rows
    k = host.palette
    if num_pairs(k) > 24:
        raise ValueError("palette too large for code histograms")
    return _kernels.colorful_code_hist(rows, host.coloring.classes, k)


def subset_histogram(host: Graph | Tournament, k: int) -> dict[int, int]:
    """Counts of induced pair codes over all k-subsets of the host."""
    rows = host.out_rows if isinstance(host, Tournament) else host.rows
    return _kernels.subset_code_hist(rows, host.order, k)


def cp_sub_table(host: ColoredGraph) -> list[int]:
    """``table[h] = cp-Sub(H, host)`` for every labeled H on ``[palette]``, indexed by code."""
    m = num_pairs(host.palette)
    values = [0] * (1 << m)
    for code, cnt in colorful_histogram(host).items():
        values[code] += cnt
    return _kernels.superset_sum(values, m)


# --- uncolored tournaments ------------------------------------------------

def _removed_set_candidates(pattern: Tournament, host: Tournament):
    """Vertex sets whose removal leaves a host part with the pattern's score sequence."""
    n, k = host.order, pattern.order
    z = n - k
    target = np.sort(np.array(pattern.scores(), dtype=np.int64))
    adj = np.zeros((n, n), dtype=np.int64)
    for v, r in enumerate(host.out_rows):
        for u in range(n):
            if (r >> u) & 1:
                adj[v, u] = 1
    scores = adj.sum(axis=1)
    combos = np.array(list(combinations(range(n), z)), dtype=np.int64).reshape(-1, z)
    chunk = max(1, 2_000_000 // max(n, 1))
    for start in range(0, len(combos), chunk):
        part = combos[start:start + chunk]
        # scores after deleting the vertices of each row of ``part``
        left = scores[None, :] - adj[:, part].sum(axis=2).T
        rows = np.arange(len(part))[:, None]
        left[rows, part] = -1
        left.sort(axis=1)
        ok = np.all(left[:, z:] == target[None, :], axis=1)
        for idx in np.nonzero(ok)[0]:
            yield [int(v) for v in part[idx]]


def _count_by_removal(pattern: Tournament, host: Tournament, stop_at: int = 0) -> int:
    if host.order == pattern.order:
        return int(are_isomorphic(host, pattern))
    total = 0
    everyone = set(range(1, host.order + 1))
    for removed in _removed_set_candidates(pattern, host):
        keep = everyone - {v + 1 for v in removed}
        if are_isomorphic(induced(host, keep), pattern):
            total += 1
            if stop_at and total >= stop_at:
                break
    return total


def _strategy(k: int, n: int) -> str:
    if k <= TABLE_ORDER and comb(n, k) <= SUBSET_LIMIT:
        return "subsets"
    if n - k <= 3 and comb(n, n - k) <= SUBSET_LIMIT:
        return "removal"
    return "embeddings"


def count_indsub_to(pattern: Tournament, host: Tournament) -> int:
    """Number of vertex sets of ``host`` inducing a tournament isomorphic to ``pattern``."""
    k, n = pattern.order, host.order
    if k > n:
        return 0
    how = _strategy(k, n)
    if how == "subsets":
        table = iso_class(pattern)
        return sum(cnt for code, cnt in subset_histogram(host, k).items() if table[code])
    if how == "removal":
        return _count_by_removal(pattern, host)
    count, _ = _kernels.embeddings(pattern.out_rows, host.out_rows, n, 0)
    aut = automorphism_count(pattern)
    if count % aut:
        raise ArithmeticError("embedding count not divisible by |Aut|")
    return count // aut


def find_copy(pattern: Tournament, host: Tournament) -> tuple[int, ...] | None:
    """Images (1-based) of pattern vertices 1..k under some embedding, if any."""
    if pattern.order > host.order:
        return None
    _, phi = _kernels.embeddings(pattern.out_rows, host.out_rows, host.order, 1)
    return None if phi is None else tuple(v + 1 for v in phi)


def decide_indsub_to(pattern: Tournament, host: Tournament) -> bool:
    k, n = pattern.order, host.order
    if k > n:
        return False
    if _strategy(k, n) == "removal":
        return _count_by_removal(pattern, host, stop_at=1) > 0
    count, _ = _kernels.embeddings(pattern.out_rows, host.out_rows, n, 1)
    return count > 0


def count_cf_indsub_to(pattern: Tournament, host: ColoredTournament) -> int:
    """Colorful vertex sets of ``host`` inducing a copy of ``pattern`` (any isomorphism)."""
    _check_palette(pattern.order, host)
    table = iso_class(pattern)
    return sum(cnt for code, cnt in colorful_histogram(host).items() if table[code])


def decide_cf_indsub_to(pattern: Tournament, host: ColoredTournament) -> bool:
    return count_cf_indsub_to(pattern, host) > 0


# --- colored graphs -------------------------------------------------------

def count_cp_sub(pattern: Graph, host: ColoredGraph) -> int:
    """Colorful choices whose color pairs carry every edge of ``pattern``."""
    _check_palette(pattern.order, host)
    h = pattern.bits
    return sum(cnt for code, cnt in colorful_histogram(host).items() if code & h == h)


def count_cp_indsub(pattern: Graph, host: ColoredGraph) -> int:
    """Colorful choices whose induced graph equals ``pattern`` under the coloring."""
    _check_palette(pattern.order, host)
    return colorful_histogram(host).get(pattern.bits, 0)


def count_cf_sub(pattern: Graph, host: ColoredGraph) -> int:
    """Pairs (colorful A, edge set S inside A) with (A, S) isomorphic to ``pattern``."""
    _check_palette(pattern.order, host)
    copies = iso_class_codes(pattern)
    total = 0
    for code, cnt in colorful_histogram(host).items():
        total += cnt * sum(1 for h in copies if code & h == h)
    return total


def count_cf_indsub(pattern: Graph, host: ColoredGraph) -> int:
    """Colorful vertex sets inducing a graph isomorphic to ``pattern``."""
    _check_palette(pattern.order, host)
    table = iso_class(pattern)
    return sum(cnt for code, cnt in colorful_histogram(host).items() if table[code])


def decide_cp_sub(pattern: Graph, host: ColoredGraph) -> bool:
    return count_cp_sub(pattern, host) > 0


def decide_cp_indsub(pattern: Graph, host: ColoredGraph) -> bool:
    return count_cp_indsub(pattern, host) > 0


def decide_cf_sub(pattern: Graph, host: ColoredGraph) -> bool:
    return count_cf_sub(pattern, host) > 0


def decide_cf_indsub(pattern: Graph, host: ColoredGraph) -> bool:
    return count_cf_indsub(pattern, host) > 0


# --- cliques --------------------------------------------------------------

def _cliques(rows, pools: list[int], stop_first: bool) -> int:
    # pools[d]: vertices allowed at depth d; a clique picks increasing vertices
    # when all pools are equal, otherwise one vertex per pool
    k = len(pools)
    total = 0

    def rec(depth: int, allowed: int, floor: int) -> bool:
        nonlocal total
        if depth == k:
            total += 1
            return stop_first
        x = allowed & pools[depth] & ~((1 << floor) - 1)
        while x:
            low = x & -x
            v = low.bit_length() - 1
            x ^= low
            if rec(depth + 1, allowed & rows[v], v + 1 if same else 0):
                return True
        return False

    same = all(p == pools[0] for p in pools)
    rec(0, (1 << len(rows)) - 1, 0)
    return total


def count_clique(k: int, host: Graph) -> int:
    """Number of k-vertex cliques in ``host``."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > host.order:
        return 0
    everyone = (1 << host.order) - 1
    return _cliques(host.rows, [everyone] * k, False)


def decide_clique(k: int, host: Graph) -> bool:
    if k > host.order:
        return False
    everyone = (1 << host.order) - 1
    return _cliques(host.rows, [everyone] * k, True) > 0


def _class_masks(host: ColoredGraph) -> list[int]:
    masks = []
    for cls in host.coloring.classes:
        m = 0
        for v in cls:
            m |= 1 << v
        masks.append(m)
    return masks


def count_cf_clique(k: int, host: ColoredGraph) -> int:
    """Colorful k-cliques (one vertex of each of the ``k`` colors)."""
    _check_palette(k, host)
    return _cliques(host.graph.rows, _class_masks(host), False)


def decide_cf_clique(k: int, host: ColoredGraph) -> bool:
    _check_palette(k, host)
    return _cliques(host.graph.rows, _class_masks(host), True) > 0


def color_class_product(host) -> int:
    out = 1
    for cls in host.coloring.classes:
        out *= len(cls)
    return out


__all__ = [
    "colorful_histogram",
    "subset_histogram",
    "cp_sub_table",
    "count_indsub_to",
    "decide_indsub_to",
    "find_copy",
    "count_cf_indsub_to",
    "decide_cf_indsub_to",
    "count_cp_sub",
    "count_cp_indsub",
    "count_cf_sub",
    "count_cf_indsub",
    "decide_cp_sub",
    "decide_cp_indsub",
    "decide_cf_sub",
    "decide_cf_indsub",
    "count_clique",
    "decide_clique",
    "count_cf_clique",
    "decide_cf_clique",
    "color_class_product",
]
