"""Canonical forms, isomorphism tests and automorphism counts.

The canonical form of a labeled tournament or graph is the lexicographically
least pair-bit sequence over all relabelings. It is found by an exact search
that fills positions 1, 2, ... in turn: once the first rows are fixed, the
remaining vertices fall into an ordered partition of cells, and the vertex at
the next position must come from the first cell and minimise its own row.

For larger orders, isomorphism and automorphism questions are answered by
color refinement with individualisation, which is exact but avoids building
the lex-least code.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from . import _kernels
from .structures import Graph, Permutation, Tournament, induced_code

CANONICAL_LIMIT = 16


def _rows(x: Tournament | Graph) -> tuple[int, ...]:
    return x.out_rows if isinstance(x, Tournament) else x.rows


def _canonical_order(rows: Sequence[int], k: int, undirected: bool) -> list[int]:
    # A row is 0^a 1^b per cell, so it is determined by the number of ones in
    # each cell; fewer ones in an earlier cell means a smaller row.
    best_keys: list = []
    best_order: list[int] = []
    current: list = []

    def rec(placed: list[int], cells: list[list[int]], depth: int, better: bool) -> None:
        # better: the current prefix is already strictly below the record
        nonlocal best_keys, best_order
        if not cells:
            if better or not best_order:
                best_keys = current[:depth]
                best_order = placed[:]
            return
        low = None
        ties: list[int] = []
        for x in cells[0]:
            r = rows[x]
            key = tuple(sum(1 for y in cell if (r >> y) & 1) for cell in cells)
            if low is None or key < low:
                low = key
                ties = [x]
            elif key == low:
                ties.append(x)
        if not better and best_order:
            if low > best_keys[depth]:
                return
            if low < best_keys[depth]:
                better = True
        if undirected and len(ties) > 1:
            ties = _drop_twins(rows, ties)
        del current[depth:]
        current.append(low)
        for x in ties:
            r = rows[x]
            new_cells = []
            for cell in cells:
                zeros = [y for y in cell if y != x and not (r >> y) & 1]
                ones = [y for y in cell if y != x and (r >> y) & 1]
                if zeros:
                    new_cells.append(zeros)
                if ones:
                    new_cells.append(ones)
            placed.append(x)
            rec(placed, new_cells, depth + 1, better)
            placed.pop()
            del current[depth + 1:]
            # a leaf below may have become the record; siblings then tie with it
            if better and current == best_keys[: depth + 1]:
                better = False

    rec([], [list(range(k))], 0, False)
    return best_order


def _drop_twins(rows: Sequence[int], ties: list[int]) -> list[int]:
    # swapping two twins is an automorphism fixing everything else, so only
    # one of them needs to be tried
    kept: list[int] = []
    for x in ties:
        for y in kept:
            bx, by = 1 << x, 1 << y
            if rows[x] & ~by == rows[y] & ~bx:
                break
        else:
            kept.append(x)
    return kept


def canonical_labeling(x: Tournament | Graph) -> tuple[int, tuple[int, ...]]:
    """Canonical code and the 1-based vertex placed at each position."""
    rows = _rows(x)
    order = _canonical_order(rows, x.order, isinstance(x, Graph))
    return induced_code(rows, order), tuple(v + 1 for v in order)


def canonical_form(x: Tournament | Graph) -> int:
    """Lexicographically least pair-bit sequence over all relabelings, as a pair bitmask."""
    return _canonical_cached(type(x), x.order, x.bits)


@lru_cache(maxsize=1 << 16)
def _canonical_cached(kind, order: int, bits: int) -> int:
    return canonical_labeling(kind(order, bits))[0]


def canonical_representative(x: Tournament | Graph):
    return type(x)(x.order, canonical_form(x))


# --- refinement based search ---------------------------------------------

def _refine(rows: Sequence[int], k: int, colors: list[int]):
    """Equitable refinement; colors are renamed by rank of their signature.

    Returns the refined colors and the trace of sorted signature lists, which
    must match between two structures for them to be isomorphic.
    """
    trace = []
    num = len(set(colors))
    while True:
        classes: dict[int, int] = {}
        for v in range(k):
            classes[colors[v]] = classes.get(colors[v], 0) | (1 << v)
        keys = sorted(classes)
        sigs = []
        for v in range(k):
            r = rows[v]
            sigs.append((colors[v],) + tuple((r & classes[c]).bit_count() for c in keys))
        distinct = sorted(set(sigs))
        trace.append(sorted(sigs))
        rank = {s: i for i, s in enumerate(distinct)}
        colors = [rank[s] for s in sigs]
        if len(distinct) == num:
            return colors, trace
        num = len(distinct)


def _search(ra, rb, k: int, ca: list[int], cb: list[int], count_all: bool):
    ca, ta = _refine(ra, k, ca)
    cb, tb = _refine(rb, k, cb)
    if ta != tb:
        return 0, None
    if len(set(ca)) == k:
        where = {c: v for v, c in enumerate(cb)}
        phi = [where[ca[v]] for v in range(k)]
        for v in range(k):
            r = ra[v]
            img = 0
            while r:
                low = r & -r
                img |= 1 << phi[low.bit_length() - 1]
                r ^= low
            if img != rb[phi[v]]:
                return 0, None
        return 1, phi
    sizes: dict[int, int] = {}
    for c in ca:
        sizes[c] = sizes.get(c, 0) + 1
    target = min(c for c, s in sizes.items() if s > 1)
    x = next(v for v in range(k) if ca[v] == target)
    fresh = k + 1
    total = 0
    first = None
    for y in range(k):
        if cb[y] != target:
            continue
        na = ca[:]
        nb = cb[:]
        na[x] = fresh
        nb[y] = fresh
        cnt, phi = _search(ra, rb, k, na, nb, count_all)
        if cnt:
            if not count_all:
                return cnt, phi
            total += cnt
            if first is None:
                first = phi
    return total, first


def _aut_refined(rows, k: int, colors: list[int]) -> int:
    # |Aut| = |orbit of x| * |stabiliser of x|, recursively along the
    # individualised vertices; orbit members are found by existence searches.
    colors, _ = _refine(rows, k, colors)
    if len(set(colors)) == k:
        return 1
    sizes: dict[int, int] = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    target = min(c for c, s in sizes.items() if s > 1)
    cell = [v for v in range(k) if colors[v] == target]
    x = cell[0]
    fresh = k + 1
    with_x = colors[:]
    with_x[x] = fresh
    orbit = 1
    for y in cell[1:]:
        with_y = colors[:]
        with_y[y] = fresh
        if _search(rows, rows, k, with_x, with_y, False)[0]:
            orbit += 1
    return orbit * _aut_refined(rows, k, with_x)


def find_isomorphism(a: Tournament | Graph, b: Tournament | Graph) -> Permutation | None:
    """A permutation ``sigma`` with ``a^sigma == b``, or ``None``."""
    if type(a) is not type(b) or a.order != b.order:
        return None
    k = a.order
    _, phi = _search(_rows(a), _rows(b), k, [0] * k, [0] * k, False)
    if phi is None:
        return None
    return Permutation(tuple(p + 1 for p in phi))


def are_isomorphic(a: Tournament | Graph, b: Tournament | Graph) -> bool:
    if type(a) is not type(b) or a.order != b.order:
        return False
    if isinstance(a, Tournament) and sorted(a.scores()) != sorted(b.scores()):
        return False
    if a.order <= CANONICAL_LIMIT:
        return canonical_form(a) == canonical_form(b)
    return find_isomorphism(a, b) is not None


def _count_automorphisms_backtrack(rows: Sequence[int], k: int) -> int:
    img = [0] * k
    used = [False] * k
    degs = [r.bit_count() for r in rows]

    def rec(v: int) -> int:
        if v == k:
            return 1
        total = 0
        rv = rows[v]
        for y in range(k):
            if used[y] or degs[y] != degs[v]:
                continue
            ry = rows[y]
            ok = True
            for u in range(v):
                if ((rv >> u) & 1) != ((ry >> img[u]) & 1):
                    ok = False
                    break
            if ok:
                used[y] = True
                img[v] = y
                total += rec(v + 1)
                used[y] = False
        return total

    return rec(0)


def automorphism_count(x: Tournament | Graph) -> int:
    """|Aut(x)| by exhaustive search; small orders use plain backtracking."""
    return _aut_cached(type(x), x.order, x.bits)


@lru_cache(maxsize=1 << 14)
def _aut_cached(kind, order: int, bits: int) -> int:
    x = kind(order, bits)
    rows = _rows(x)
    if order <= 9:
        return _count_automorphisms_backtrack(rows, order)
    return _aut_refined(rows, order, [0] * order)


def iso_class_table(kind, order: int, bits: int) -> bytearray:
    """Membership table of all labeled copies of a small structure (order <= 8).

    Tables up to order 7 are cached; an order-8 table has 2^28 entries and is
    rebuilt on each call.
    """
    if order > 8:
        raise ValueError("iso-class tables are limited to order 8")
    if order == 8:
        return _kernels.iso_table(bits, order, kind is Tournament)
    return _small_table(kind, order, bits)


@lru_cache(maxsize=256)
def _small_table(kind, order: int, bits: int) -> bytearray:
    return _kernels.iso_table(bits, order, kind is Tournament)


def iso_class(x: Tournament | Graph) -> bytearray:
    return iso_class_table(type(x), x.order, x.bits)


def iso_class_codes(x: Tournament | Graph) -> list[int]:
    table = iso_class(x)
    return [c for c in range(len(table)) if table[c]]
