"""Slow, definition-level reference implementations used only by the tests.

Nothing here touches the package's bitmask kernels or canonical forms:
structures are plain dicts of arcs/edges and isomorphism is tested by trying
every permutation.
"""

from __future__ import annotations

from itertools import combinations, permutations


def arcs_of(t) -> set[tuple[int, int]]:
    return {(u, v) for u in range(1, t.order + 1) for v in range(1, t.order + 1) if u != v and t.has_arc(u, v)}


def edges_of(g) -> set[frozenset]:
    return {frozenset((u, v)) for u, v in combinations(range(1, g.order + 1), 2) if g.has_edge(u, v)}


def sub_arcs(arcs: set, verts) -> set:
    vs = set(verts)
    return {(u, v) for u, v in arcs if u in vs and v in vs}


def iso_arcs(a: set, va, b: set, vb) -> bool:
    """Isomorphism of two arc sets on vertex lists ``va`` and ``vb`` by brute force."""
    va, vb = list(va), list(vb)
    if len(va) != len(vb) or len(a) != len(b):
        return False
    for p in permutations(vb):
        m = dict(zip(va, p))
        if all((m[u], m[v]) in b for u, v in a):
            return True
    return False


def count_indsub(t, host) -> int:
    ta = arcs_of(t)
    ha = arcs_of(host)
    tv = list(range(1, t.order + 1))
    return sum(
        iso_arcs(ta, tv, sub_arcs(ha, s), s) for s in combinations(range(1, host.order + 1), t.order)
    )


def colorful_sets(host):
    colors = host.coloring.colors
    k = host.palette
    for s in combinations(range(1, len(colors) + 1), k):
        if sorted(colors[v - 1] for v in s) == list(range(1, k + 1)):
            yield s


def count_cf_indsub(t, host) -> int:
    ta = arcs_of(t)
    ha = arcs_of(host.tournament)
    tv = list(range(1, t.order + 1))
    return sum(iso_arcs(ta, tv, sub_arcs(ha, s), s) for s in colorful_sets(host))


def count_cp_sub(h, host) -> int:
    """Colorful sets whose color-labeled graph contains every edge of h."""
    colors = host.coloring.colors
    he = edges_of(h)
    total = 0
    for s in colorful_sets(host):
        by_color = {colors[v - 1]: v for v in s}
        if all(host.graph.has_edge(by_color[min(e)], by_color[max(e)]) for e in he):
            total += 1
    return total


def count_cf_sub(h, host) -> int:
    """Pairs (colorful set A, edge set S of the host inside A) with (A, S) isomorphic to h."""
    he = {(min(e), max(e)) for e in edges_of(h)}
    he_sym = he | {(v, u) for u, v in he}
    total = 0
    for s in colorful_sets(host):
        present = [(u, v) for u, v in combinations(s, 2) if host.graph.has_edge(u, v)]
        for r in range(len(present) + 1):
            if r != len(he):
                continue
            for chosen in combinations(present, r):
                sym = set(chosen) | {(v, u) for u, v in chosen}
                if iso_arcs(he_sym, range(1, h.order + 1), sym, s):
                    total += 1
    return total


def count_clique(k: int, g) -> int:
    return sum(
        all(g.has_edge(u, v) for u, v in combinations(s, 2)) for s in combinations(range(1, g.order + 1), k)
    )


def count_cf_clique(k: int, g) -> int:
    return sum(all(g.graph.has_edge(u, v) for u, v in combinations(s, 2)) for s in colorful_sets(g))


def flip(t, h) -> set:
    """Arc set of T_H: pairs outside E(H) reversed."""
    he = edges_of(h)
    out = set()
    for u, v in arcs_of(t):
        out.add((u, v) if frozenset((u, v)) in he else (v, u))
    return out


def alternating_enumerator(t, h) -> int:
    """(-1)^{|E(H)|} sum over H' subset of H of (-1)^{|E(H')|} [T_{H'} ~ T]."""
    from tourpat.structures import Graph

    k = t.order
    he = sorted(edges_of(h), key=sorted)
    ta = arcs_of(t)
    verts = list(range(1, k + 1))
    total = 0
    for r in range(len(he) + 1):
        for sub in combinations(he, r):
            hp = Graph.from_edges(k, [tuple(sorted(e)) for e in sub])
            if iso_arcs(flip(t, hp), verts, ta, verts):
                total += (-1) ** r
    return (-1) ** len(he) * total


def automorphisms(t) -> int:
    ta = arcs_of(t)
    verts = list(range(1, t.order + 1))
    return sum(all((p[u - 1], p[v - 1]) in ta for u, v in ta) for p in permutations(verts))


def is_transitive_set(t, s) -> bool:
    return all(
        not (t.has_arc(a, b) and t.has_arc(b, c) and t.has_arc(c, a)) for a, b, c in permutations(s, 3)
    )


def tt_number(t) -> int:
    for size in range(t.order, 0, -1):
        if any(is_transitive_set(t, s) for s in combinations(range(1, t.order + 1), size)):
            return size
    return 0


def core_length(t) -> int:
    """Maximum spine over all 3^k labelings into (R+, R-, S)."""
    from itertools import product

    k = t.order
    best = -1
    for lab in product((0, 1, 2), repeat=k):
        rp = [v + 1 for v in range(k) if lab[v] == 0]
        rm = [v + 1 for v in range(k) if lab[v] == 1]
        s = {v + 1 for v in range(k) if lab[v] == 2}
        if not is_transitive_set(t, s):
            continue
        common = set(range(1, k + 1))
        for v in rp:
            common &= {u for u in range(1, k + 1) if u != v and t.has_arc(v, u)}
        for v in rm:
            common &= {u for u in range(1, k + 1) if u != v and t.has_arc(u, v)}
        if common == s:
            best = max(best, len(s))
    return best
