"""Edge flips, the alternating enumerator, maximal matchings and anti-matching checks.

For a tournament ``T`` and a graph ``H`` on the same ``[k]``, ``T_H`` reverses
every pair that is *not* an edge of ``H``. The alternating enumerator is

    ae(T, H) = (-1)^{|E(H)|} * sum over H' subset of H of (-1)^{|E(H')|} [T_{H'} ~ T],

an integer. In code terms ``T_{H'}`` has bits ``T.bits ^ (FULL ^ H'.bits)``,
so the sum is a signed submask sum over a membership table of T's
isomorphism class.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

from . import _kernels
from .iso import automorphism_count, iso_class
from .structures import (
    Graph,
    Permutation,
    Tournament,
    apply_permutation,
    full_mask,
    num_pairs,
)

NAIVE_LIMIT = 7
SUPPORT_LIMIT = 5


def _same_order(t: Tournament, h: Graph) -> None:
    if t.order != h.order:
        raise ValueError(f"orders differ: tournament {t.order}, graph {h.order}")


def flip_along(t: Tournament, h: Graph) -> Tournament:
    """``T_H``: reverse every pair of ``t`` that is not an edge of ``h``."""
    _same_order(t, h)
    return Tournament(t.order, t.bits ^ full_mask(t.order) ^ h.bits)


def alternating_enumerator_naive(t: Tournament, h: Graph) -> int:
    """ae(T, H) by summing over all edge subsets of H (orders up to 7).

    Subsets are visited in Gray-code order so each step flips one pair of the
    current tournament, which is then looked up in T's isomorphism-class table.
    """
    _same_order(t, h)
    k = t.order
    if k > NAIVE_LIMIT:
        raise ValueError(f"naive enumerator is limited to order {NAIVE_LIMIT}")
    if k == 1:
        # single vertex: the only term is [T ~ T] (a convention, see README)
        return 1
    table = iso_class(t)
    base = t.bits ^ full_mask(k)
    total = _kernels.alternating_submask_sum(table, base, h.bits)
    return -total if h.num_edges % 2 else total


def alternating_enumerator_table(t: Tournament) -> list[int]:
    """ae(T, H) for every labeled H on ``[k]``, indexed by H's code (orders up to 6).

    Uses the subset Moebius transform of ``f(H') = [T_{H'} ~ T]``.
    """
    k = t.order
    if k > 6:
        raise ValueError("full enumerator tables are limited to order 6")
    m = num_pairs(k)
    if k == 1:
        return [1]
    table = iso_class(t)
    full = full_mask(k)
    base = t.bits ^ full
    values = [table[base ^ hp] for hp in range(1 << m)]
    return _kernels.mobius(values, m)


def ae_permutation_form(t: Tournament, h: Graph) -> int:
    """``|Aut(T)| * ae(T, H)`` as a sum over edge subsets and permutations of ``[k]``."""
    _same_order(t, h)
    k = t.order
    full = full_mask(k)
    images = {}
    for p in permutations(range(1, k + 1)):
        code = apply_permutation(t, Permutation(p)).bits
        images[code] = images.get(code, 0) + 1
    total = 0
    sub = h.bits
    while True:
        flipped = t.bits ^ full ^ sub
        sign = -1 if (h.num_edges + sub.bit_count()) % 2 else 1
        total += sign * images.get(flipped, 0)
        if sub == 0:
            break
        sub = (sub - 1) & h.bits
    return total


def ae_complement_form(t: Tournament, h: Graph) -> int:
    """``|Aut(T)| * ae(T, complement(H))`` via disagreement sets.

    Sums ``(-1)^{|E(H)| + |Delta(T, T^sigma)|}`` over permutations ``sigma``
    whose disagreement set with ``T`` contains every edge of ``H``.
    """
    _same_order(t, h)
    k = t.order
    total = 0
    for p in permutations(range(1, k + 1)):
        diff = t.bits ^ apply_permutation(t, Permutation(p)).bits
        if diff & h.bits == h.bits:
            total += -1 if (h.num_edges + diff.bit_count()) % 2 else 1
    return total


def alternating_enumerator_rational(t: Tournament, h: Graph) -> Fraction:
    """ae(T, H) recovered from the permutation form, as an exact fraction."""
    return Fraction(ae_permutation_form(t, h), automorphism_count(t))


# --- matchings ------------------------------------------------------------

def enumerate_unordered_maximal_matchings(k: int) -> list[tuple[tuple[int, int], ...]]:
    """All maximal matchings of ``K_k`` (``floor(k/2)`` edges), each once.

    Edges are ``(u, v)`` with ``u < v`` sorted by smaller endpoint; the list is
    in lexicographic order.
    """
    if k < 2:
        raise ValueError("maximal matchings need k >= 2")
    out: list[tuple[tuple[int, int], ...]] = []

    def rec(free: list[int], skip_left: int, acc: list[tuple[int, int]]) -> None:
        if len(free) <= skip_left:
            out.append(tuple(acc))
            return
        v = free[0]
        rest = free[1:]
        for i, w in enumerate(rest):
            acc.append((v, w))
            rec(rest[:i] + rest[i + 1:], skip_left, acc)
            acc.pop()
        if skip_left:
            # v is the unmatched vertex
            rec(rest, 0, acc)

    rec(list(range(1, k + 1)), k % 2, [])
    out.sort()
    return out


def enumerate_ordered_maximal_matchings(k: int) -> list[tuple[tuple[int, int], ...]]:
    """Every ordering of every maximal matching (edges kept as ``u < v``)."""
    out = []
    for m in enumerate_unordered_maximal_matchings(k):
        out.extend(permutations(m))
    return out


def matching_permutation(m, t: Tournament) -> Permutation:
    """sigma_M: sends the i-th pair of ``m`` onto ``{2i-1, 2i}`` so that ``T^sigma``
    and ``T`` disagree there; an unmatched vertex goes to ``k``."""
    k = t.order
    pairs = [tuple(p) for p in m]
    used = [v for p in pairs for v in p]
    if len(pairs) != k // 2 or len(set(used)) != len(used) or not set(used) <= set(range(1, k + 1)):
        raise ValueError("not a maximal matching of [k]")
    image = [0] * k
    for i, (u, v) in enumerate(pairs, start=1):
        tail, head = (u, v) if t.has_arc(u, v) else (v, u)
        # T^sigma contains sigma(tail) -> sigma(head); make it the reverse of T's arc
        if t.has_arc(2 * i - 1, 2 * i):
            image[tail - 1], image[head - 1] = 2 * i, 2 * i - 1
        else:
            image[tail - 1], image[head - 1] = 2 * i - 1, 2 * i
    if k % 2:
        (left,) = set(range(1, k + 1)) - set(used)
        image[left - 1] = k
    return Permutation(tuple(image))


def antimatching_parity_sum(t: Tournament) -> int:
    """X = (-1)^{floor(k/2)} * sum over unordered maximal matchings M of (-1)^{|Delta(T, T^{sigma_M})|}."""
    k = t.order
    total = 0
    for m in enumerate_unordered_maximal_matchings(k):
        sigma = matching_permutation(m, t)
        diff = t.bits ^ apply_permutation(t, sigma).bits
        total += -1 if diff.bit_count() % 2 else 1
    return -total if (k // 2) % 2 else total


def alternating_enumerator_antimatching(t: Tournament) -> int:
    """ae(T, anti-matching) from the matching parity sum: X * floor(k/2)! / |Aut(T)|."""
    k = t.order
    if k < 2:
        raise ValueError("needs k >= 2")
    x = antimatching_parity_sum(t)
    num = x * factorial(k // 2)
    aut = automorphism_count(t)
    if num % aut:
        raise ArithmeticError(f"{num} is not divisible by |Aut(T)| = {aut}")
    return num // aut


def nonvanishing_support(t: Tournament) -> set[Graph]:
    """All labeled H on ``[k]`` with ae(T, H) != 0 (orders up to 5)."""
    k = t.order
    if k > SUPPORT_LIMIT:
        raise ValueError(f"support enumeration is limited to order {SUPPORT_LIMIT}")
    values = alternating_enumerator_table(t)
    return {Graph(k, code) for code, val in enumerate(values) if val}


def apices(h: Graph) -> list[int]:
    """Vertices adjacent to every other vertex."""
    k = h.order
    return [v for v in h.vertices if h.degree(v) == k - 1]


# --- structure of anti-matchings ------------------------------------------

TREEWIDTH_LIMIT = 10
MINOR_LIMIT = 9


def treewidth_exact(h: Graph) -> int:
    """Exact treewidth by dynamic programming over vertex subsets.

    ``TW(S) = min over v in S of max(TW(S - v), Q(S - v, v))``, where
    ``Q(S, v)`` counts vertices outside ``S + v`` reachable from ``v`` through
    ``S``; the treewidth is ``TW(V)``.
    """
    n = h.order
    if n > TREEWIDTH_LIMIT:
        raise ValueError(f"treewidth is limited to order {TREEWIDTH_LIMIT}")
    rows = h.rows
    everyone = (1 << n) - 1

    def q(s: int, v: int) -> int:
        seen = 1 << v
        frontier = 1 << v
        reach = 0
        while frontier:
            low = frontier & -frontier
            u = low.bit_length() - 1
            frontier ^= low
            nb = rows[u] & ~seen
            seen |= nb
            reach |= nb & ~s
            frontier |= nb & s
        return (reach & ~(1 << v)).bit_count()

    tw = [0] * (1 << n)
    for s in range(1, 1 << n):
        best = n
        x = s
        while x:
            low = x & -x
            v = low.bit_length() - 1
            x ^= low
            rest = s ^ low
            val = max(tw[rest], q(rest, v))
            if val < best:
                best = val
        tw[s] = best
    return tw[everyone] if n else 0


def _connected(rows, s: int) -> bool:
    if not s:
        return False
    low = s & -s
    seen = low
    frontier = low
    while frontier:
        b = frontier & -frontier
        frontier ^= b
        nb = rows[b.bit_length() - 1] & s & ~seen
        seen |= nb
        frontier |= nb
    return seen == s


def has_clique_minor(h: Graph, t: int) -> bool:
    """Whether ``K_t`` is a minor of ``h``: search for ``t`` disjoint connected
    branch sets that are pairwise joined by an edge."""
    n = h.order
    if n > MINOR_LIMIT:
        raise ValueError(f"minor search is limited to order {MINOR_LIMIT}")
    if t < 1:
        raise ValueError("t must be positive")
    if t > n:
        return False
    rows = h.rows
    sets = [s for s in range(1, 1 << n) if _connected(rows, s)]
    nbhd = {}
    for s in sets:
        nb = 0
        x = s
        while x:
            low = x & -x
            nb |= rows[low.bit_length() - 1]
            x ^= low
        nbhd[s] = nb & ~s
    # branch sets are chosen with increasing lowest vertex to avoid repeats
    by_low: dict[int, list[int]] = {}
    for s in sets:
        by_low.setdefault((s & -s).bit_length() - 1, []).append(s)

    def rec(chosen: list[int], used: int, start: int) -> bool:
        if len(chosen) == t:
            return True
        for low in range(start, n):
            if (used >> low) & 1:
                continue
            for s in by_low.get(low, ()):
                if s & used:
                    continue
                if all(nbhd[c] & s for c in chosen):
                    chosen.append(s)
                    if rec(chosen, used | s, low + 1):
                        return True
                    chosen.pop()
        return False

    return rec([], 0, 0)


__all__ = [
    "flip_along",
    "alternating_enumerator_naive",
    "alternating_enumerator_table",
    "alternating_enumerator_antimatching",
    "alternating_enumerator_rational",
    "ae_permutation_form",
    "ae_complement_form",
    "antimatching_parity_sum",
    "enumerate_unordered_maximal_matchings",
    "enumerate_ordered_maximal_matchings",
    "matching_permutation",
    "nonvanishing_support",
    "apices",
    "treewidth_exact",
    "has_clique_minor",
]
