"""Gadgets and basis changes linking tournament counts to colored-graph counts.

Hosts are colored with palette ``k`` and pattern vertex ``i`` is identified
with color ``i``. The central identity checked here is

    CFsubs(T, Tour_G(T)) = sum over H of ae(T, H) * cp-Sub(H, G),

where ``Tour_G(T)`` is the biased tournament built below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable

from . import counting
from .enumerator import alternating_enumerator_table, flip_along
from .iso import are_isomorphic, automorphism_count
from .structures import (
    ColoredGraph,
    ColoredTournament,
    Coloring,
    Graph,
    Permutation,
    Tournament,
    full_mask,
    induced,
    num_pairs,
)


@dataclass
class LinearCombination:
    """Integer combination of labeled graphs of one order; zero terms are dropped."""

    order: int
    terms: dict[Graph, int] = field(default_factory=dict)

    def __post_init__(self):
        for g in self.terms:
            if g.order != self.order:
                raise ValueError("all term graphs must share one order")
        self.terms = {g: c for g, c in self.terms.items() if c}

    def add(self, g: Graph, coef: int) -> None:
        if g.order != self.order:
            raise ValueError("all term graphs must share one order")
        c = self.terms.get(g, 0) + coef
        if c:
            self.terms[g] = c
        else:
            self.terms.pop(g, None)

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        out = LinearCombination(self.order, dict(self.terms))
        for g, c in other.terms.items():
            out.add(g, c)
        return out

    def scaled(self, factor: int) -> "LinearCombination":
        return LinearCombination(self.order, {g: c * factor for g, c in self.terms.items()})

    def coefficient(self, g: Graph) -> int:
        return self.terms.get(g, 0)

    def evaluate(self, f: Callable[[Graph], int]) -> int:
        return sum(c * f(g) for g, c in self.terms.items())

    def evaluate_table(self, table) -> int:
        """Evaluate with ``table[code]`` giving the value of each term graph."""
        return sum(c * table[g.bits] for g, c in self.terms.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearCombination) and self.order == other.order and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)


def _check_palette(host, k: int) -> None:
    if host.palette != k:
        raise ValueError(f"palette {host.palette} differs from order {k}")


def biased_tournament(g: ColoredGraph, t: Tournament) -> ColoredTournament:
    """Tour_G(T): pairs of different colors agree with T on edges of G and disagree
    on non-edges; pairs of equal color point from the smaller vertex to the larger."""
    k = t.order
    _check_palette(g, k)
    n = g.order
    colors = g.coloring.colors
    grows = g.graph.rows
    trows = t.out_rows
    rows = [0] * n
    for x in range(n):
        cx = colors[x] - 1
        for y in range(x + 1, n):
            cy = colors[y] - 1
            if cx == cy:
                forward = True
            else:
                agree = bool((grows[x] >> y) & 1)
                t_forward = bool((trows[cx] >> cy) & 1)
                forward = t_forward == agree
            if forward:
                rows[x] |= 1 << y
            else:
                rows[y] |= 1 << x
    return ColoredTournament(Tournament.from_rows(rows), g.coloring)


def pied_graph(host: ColoredTournament, t: Tournament) -> ColoredGraph:
    """Graph_T(G): ``{x, y}`` is an edge iff the colors differ and the host pair
    is oriented like the corresponding pair of T."""
    k = t.order
    _check_palette(host, k)
    n = host.order
    colors = host.coloring.colors
    hrows = host.tournament.out_rows
    trows = t.out_rows
    rows = [0] * n
    for x in range(n):
        cx = colors[x] - 1
        for y in range(x + 1, n):
            cy = colors[y] - 1
            if cx == cy:
                continue
            if bool((hrows[x] >> y) & 1) == bool((trows[cx] >> cy) & 1):
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    return ColoredGraph(Graph.from_rows(rows), host.coloring)


def color_restriction(host: ColoredTournament, colors: Iterable[int]) -> Tournament | None:
    """Uncolored subtournament on the vertices whose color is in ``colors`` (None if empty)."""
    keep = set(colors)
    verts = [v for v in range(1, host.order + 1) if host.coloring.color(v) in keep]
    if not verts:
        return None
    return induced(host.tournament, verts)


def color_removal_terms(t: Tournament, host: ColoredTournament) -> list[tuple[frozenset, int]]:
    """``(S, #IndSub(T, G_S))`` for every color set ``S``, G_S keeping colors in S."""
    k = t.order
    _check_palette(host, k)
    out = []
    for mask in range(1 << k):
        s = frozenset(c + 1 for c in range(k) if (mask >> c) & 1)
        sub = color_restriction(host, s)
        out.append((s, 0 if sub is None else counting.count_indsub_to(t, sub)))
    return out


def cf_from_uncolored(t: Tournament, host: ColoredTournament) -> int:
    """CFsubs(T, G) from uncolored counts only, by inclusion-exclusion over color sets:

        CFsubs(T, G) = sum over S of (-1)^{k - |S|} * #IndSub(T, G_S).

    A copy using color set C is counted in G_S exactly when C is inside S, and
    the signed sum over S containing C vanishes unless C is all of [k]. The
    sign (-1)^{|S|} instead gives (-1)^k times the colorful count.
    """
    k = t.order
    return sum((-1) ** (k - len(s)) * cnt for s, cnt in color_removal_terms(t, host))


def expand_cpindsub_in_cpsub_basis(h: Graph) -> LinearCombination:
    """cp-IndSub(H, .) = sum over edge-supergraphs H' of (-1)^{|E(H')| - |E(H)|} cp-Sub(H', .)."""
    k = h.order
    free = full_mask(k) & ~h.bits
    out = LinearCombination(k)
    sub = free
    while True:
        sign = -1 if sub.bit_count() % 2 else 1
        out.add(Graph(k, h.bits | sub), sign)
        if sub == 0:
            break
        sub = (sub - 1) & free
    return out


def indsub_basis_of_cf(t: Tournament) -> LinearCombination:
    """CFsubs(T, Tour_G(T)) = sum over H with T_H ~ T of cp-IndSub(H, G) (orders up to 6)."""
    k = t.order
    if k > 6:
        raise ValueError("limited to order 6")
    out = LinearCombination(k)
    for code in range(1 << num_pairs(k)):
        h = Graph(k, code)
        if are_isomorphic(flip_along(t, h), t):
            out.add(h, 1)
    return out


def cpsub_basis_of_cf(t: Tournament) -> LinearCombination:
    """Terms ``(H, ae(T, H))`` for every H with a nonzero enumerator (orders up to 5)."""
    k = t.order
    if k > 5:
        raise ValueError("limited to order 5")
    values = alternating_enumerator_table(t)
    return LinearCombination(k, {Graph(k, code): v for code, v in enumerate(values) if v})


def compose_to_cpsub_basis(lc: LinearCombination) -> LinearCombination:
    """Rewrite a combination of cp-IndSub terms in the cp-Sub basis."""
    out = LinearCombination(lc.order)
    for h, c in lc.terms.items():
        for g, d in expand_cpindsub_in_cpsub_basis(h).terms.items():
            out.add(g, c * d)
    return out


def restrict_by_pattern(g: ColoredGraph, f: Graph) -> ColoredGraph:
    """G_F: keep exactly the edges whose color pair is an edge of F."""
    _check_palette(g, f.order)
    colors = g.coloring.colors
    frows = f.rows
    n = g.order
    grows = g.graph.rows
    rows = [0] * n
    for x in range(n):
        cx = colors[x] - 1
        r = grows[x]
        y = 0
        while r:
            low = r & -r
            y = low.bit_length() - 1
            r ^= low
            if (frows[cx] >> (colors[y] - 1)) & 1:
                rows[x] |= low
    return ColoredGraph(Graph.from_rows(rows), g.coloring)


def extract_term(f: Callable[[ColoredGraph], int], h: Graph, g: ColoredGraph) -> int:
    """alpha_H * cp-Sub(H, G) from an oracle ``f`` for a combination of cp-Sub counts:

        sum over F subset of H of (-1)^{|E(H)| - |E(F)|} f(G_F),

    using 2^{|E(H)|} oracle calls.
    """
    total = 0
    sub = h.bits
    while True:
        sign = -1 if (h.bits ^ sub).bit_count() % 2 else 1
        total += sign * f(restrict_by_pattern(g, Graph(h.order, sub)))
        if sub == 0:
            break
        sub = (sub - 1) & h.bits
    return total


def biased_oracle(t: Tournament) -> Callable[[ColoredGraph], int]:
    """The oracle ``G -> CFsubs(T, Tour_G(T))``."""

    def f(g: ColoredGraph) -> int:
        return counting.count_cf_indsub_to(t, biased_tournament(g, t))

    return f


def signature_gadget(t: Tournament, r: Iterable[int], g: ColoredGraph, check: bool = True) -> ColoredTournament:
    """G*: Tour_G(T) on the vertices of T outside R, plus one vertex per element of R.

    Vertex ``i <= |R|`` stands for the i-th smallest element of R and gets it as
    its color; a vertex of G with color ``j`` gets the j-th smallest vertex of
    ``[k] - R`` as color. Pairs touching the R part, and G-edges, agree with T
    under this coloring; G-non-edges disagree; equal colors point from the
    smaller vertex to the larger.
    """
    k = t.order
    rset = sorted(set(r))
    if any(not 1 <= v <= k for v in rset):
        raise ValueError("R must be a subset of [k]")
    rest = [v for v in range(1, k + 1) if v not in set(rset)]
    if g.palette != len(rest):
        raise ValueError(f"palette {g.palette} differs from k - |R| = {len(rest)}")
    if check:
        from .signatures import is_signature

        if not is_signature(t, rset):
            raise ValueError("R is not a signature of T")
    rn = len(rset)
    n = g.order
    colors = list(rset) + [rest[c - 1] for c in g.coloring.colors]
    total = rn + n
    trows = t.out_rows
    grows = g.graph.rows
    rows = [0] * total
    for x in range(total):
        cx = colors[x] - 1
        for y in range(x + 1, total):
            cy = colors[y] - 1
            if cx == cy:
                forward = True
            else:
                t_forward = bool((trows[cx] >> cy) & 1)
                if x < rn:
                    forward = t_forward
                else:
                    edge = bool((grows[x - rn] >> (y - rn)) & 1)
                    forward = t_forward == edge
            if forward:
                rows[x] |= 1 << y
            else:
                rows[y] |= 1 << x
    return ColoredTournament(Tournament.from_rows(rows), Coloring(k, tuple(colors)))


def clique_color_gadget(g: Graph, k: int) -> ColoredGraph:
    """G': vertices ``(v, i)`` for v in V(G), i in [k], colored i; ``(u, i) ~ (v, j)``
    iff ``u < v``, ``i < j`` and ``{u, v}`` is an edge. Vertex ``(v, i)`` is
    number ``(i - 1) * n + v``."""
    if k < 1:
        raise ValueError("k must be positive")
    n = g.order
    grows = g.rows
    rows = [0] * (k * n)
    for i in range(k):
        for j in range(i + 1, k):
            for u in range(n):
                r = grows[u]
                for v in range(u + 1, n):
                    if (r >> v) & 1:
                        a, b = i * n + u, j * n + v
                        rows[a] |= 1 << b
                        rows[b] |= 1 << a
    colors = tuple(i + 1 for i in range(k) for _ in range(n))
    return ColoredGraph(Graph.from_rows(rows), Coloring(k, colors))


def symmetrize_cp_to_cf(h: Graph, g: ColoredGraph) -> int:
    """cf-Sub(H, G) as the sum of cp-Sub(H, (G, sigma o c)) over sigma, divided by |Aut(H)|."""
    k = h.order
    _check_palette(g, k)
    total = 0
    for p in permutations(range(1, k + 1)):
        recolored = ColoredGraph(g.graph, g.coloring.relabel(Permutation(p)))
        total += counting.count_cp_sub(h, recolored)
    aut = automorphism_count(h)
    if total % aut:
        raise ArithmeticError(f"{total} is not divisible by |Aut(H)| = {aut}")
    return total // aut


__all__ = [
    "LinearCombination",
    "biased_tournament",
    "pied_graph",
    "color_restriction",
    "color_removal_terms",
    "cf_from_uncolored",
    "expand_cpindsub_in_cpsub_basis",
    "indsub_basis_of_cf",
    "cpsub_basis_of_cf",
    "compose_to_cpsub_basis",
    "restrict_by_pattern",
    "extract_term",
    "biased_oracle",
    "signature_gadget",
    "clique_color_gadget",
    "symmetrize_cp_to_cf",
]
