"""Transitive subtournaments, spine decompositions and pattern detection.

A spine decomposition of ``T`` splits its vertices into ribs ``R+``, ``R-``
and a spine ``S`` such that ``S`` is transitive and equals the set of vertices
dominated by all of ``R+`` and dominating all of ``R-``. The detection routine
guesses images of the ribs and then only has to find a transitive tournament
among their common neighbors, which is guaranteed once that set is large.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import floor, log2

from . import _kernels
from .structures import Tournament, induced

SPINE_LIMIT = 14


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def _verts(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def _is_transitive_mask(rows, mask: int) -> bool:
    # transitive iff the scores inside the set are pairwise distinct
    seen = 0
    x = mask
    while x:
        low = x & -x
        x ^= low
        d = (rows[low.bit_length() - 1] & mask).bit_count()
        if (seen >> d) & 1:
            return False
        seen |= 1 << d
    return True


def _chain_order(rows, mask: int) -> tuple[int, ...]:
    # vertices of a transitive set from its source to its sink (1-based)
    verts = _verts(mask)
    return tuple(sorted(verts, key=lambda v: -(rows[v - 1] & mask).bit_count()))


# --- transitive subtournaments --------------------------------------------

def extract_transitive_em(t: Tournament) -> tuple[int, ...]:
    """A transitive vertex set of size at least floor(log2 n) + 1, source first.

    Takes the lowest remaining vertex and recurses into the larger of its
    out-neighborhood (the vertex becomes the next source) and its
    in-neighborhood (it becomes the next sink).
    """
    rows = t.out_rows
    cand = (1 << t.order) - 1
    head: list[int] = []
    tail: list[int] = []
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        out = rows[v] & cand
        inn = cand & ~out
        if out.bit_count() >= inn.bit_count():
            head.append(v + 1)
            cand = out
        else:
            tail.append(v + 1)
            cand = inn
    chain = tuple(head + tail[::-1])
    bound = floor(log2(t.order)) + 1
    if len(chain) < bound or not _is_transitive_mask(rows, _mask(chain)):
        raise AssertionError("transitive extraction violated its guarantee")
    return chain


def tt_number(t: Tournament) -> tuple[int, tuple[int, ...]]:
    """TT(T), the order of a largest transitive subtournament, with a witness (source first)."""
    rows = t.out_rows
    start = extract_transitive_em(t)
    size, mask = _kernels.max_transitive(rows, t.order, len(start), _mask(start))
    return size, _chain_order(rows, mask)


def contains_transitive(t: Tournament, size: int) -> tuple[int, ...] | None:
    """A transitive vertex set of the given size, or None."""
    if size <= 0:
        return ()
    if size > t.order:
        return None
    rows = t.out_rows
    best, mask = _kernels.max_transitive(rows, t.order, size - 1, 0)
    if best < size:
        return None
    return _chain_order(rows, mask)[:size]


# --- spine decompositions -------------------------------------------------

@dataclass(frozen=True)
class SpineDecomposition:
    """Ribs ``r_plus``, ``r_minus`` and spine ``spine`` partitioning ``[order]``."""

    order: int
    r_plus: frozenset
    r_minus: frozenset
    spine: frozenset

    @property
    def length(self) -> int:
        return len(self.spine)

    @property
    def ribs(self) -> int:
        return len(self.r_plus) + len(self.r_minus)

    def key(self) -> tuple:
        return (tuple(sorted(self.r_plus)), tuple(sorted(self.r_minus)))


def is_spine_decomposition(t: Tournament, r_plus, r_minus, spine) -> bool:
    """Literal check: a partition, transitive spine, and spine equal to the rib intersection."""
    rp, rm, s = set(r_plus), set(r_minus), set(spine)
    k = t.order
    if rp & rm or rp & s or rm & s or rp | rm | s != set(range(1, k + 1)):
        return False
    rows = t.out_rows
    if s and not _is_transitive_mask(rows, _mask(s)):
        return False
    common = set(range(1, k + 1))
    for v in rp:
        common &= t.out_neighbors(v)
    for v in rm:
        common &= t.in_neighbors(v)
    return common == s


def _decompositions_of(t: Tournament, ribs: int):
    # all sign assignments of the rib set ``ribs`` that work with spine V - ribs
    k = t.order
    rows = t.out_rows
    inrows = t.in_rows
    spine = ((1 << k) - 1) & ~ribs
    if spine and not _is_transitive_mask(rows, spine):
        return []
    choices = []
    for v in _verts(ribs):
        opts = []
        if rows[v - 1] & spine == spine:
            opts.append(True)
        if inrows[v - 1] & spine == spine:
            opts.append(False)
        if not opts:
            return []
        choices.append((v, opts))
    out = [(0, 0)]
    for v, opts in choices:
        out = [(p | (1 << (v - 1)), m) if o else (p, m | (1 << (v - 1))) for p, m in out for o in opts]
    return [
        SpineDecomposition(k, frozenset(_verts(p)), frozenset(_verts(m)), frozenset(_verts(spine)))
        for p, m in out
    ]


def _check_cap(t: Tournament) -> None:
    if t.order > SPINE_LIMIT:
        raise ValueError(f"spine decompositions are limited to order {SPINE_LIMIT}")


def spine_decompositions(t: Tournament) -> list[SpineDecomposition]:
    """Every spine decomposition, sorted by rib count and then by (R+, R-)."""
    _check_cap(t)
    found = []
    for ribs in range(1 << t.order):
        found.extend(_decompositions_of(t, ribs))
    found.sort(key=lambda d: (d.ribs, d.key()))
    return found


def best_spine_decomposition(t: Tournament) -> SpineDecomposition:
    """A decomposition of maximum spine length; ties go to the least (R+, R-)."""
    _check_cap(t)
    k = t.order
    for c in range(k + 1):
        found = []
        for ribs in range(1 << k):
            if ribs.bit_count() == c:
                found.extend(_decompositions_of(t, ribs))
        if found:
            return min(found, key=lambda d: d.key())
    raise AssertionError("every tournament has a spine decomposition")


def core_length(t: Tournament) -> int:
    """core(T): the largest spine length."""
    return best_spine_decomposition(t).length


# --- detection ------------------------------------------------------------

def detect_pattern_witness(
    t: Tournament, host: Tournament, decomposition: SpineDecomposition | None = None
) -> tuple[int, ...] | None:
    """A vertex set of ``host`` inducing a copy of ``t``, found by the rib-guessing
    algorithm, or None when there is none.

    Ordered tuples of distinct host vertices are tried as images of the ribs
    (R+ in increasing order, then R-). For each tuple inducing the same
    tournament as the ribs, N' is the set of vertices dominated by all R+
    images and dominating all R- images. A large N' contains a transitive
    tournament of the spine's order by the Erdos-Moser bound; a small one is
    searched exhaustively.
    """
    k, n = t.order, host.order
    if k > n:
        return None
    if k > SPINE_LIMIT and decomposition is None:
        from .counting import find_copy

        return find_copy(t, host)
    dec = decomposition or best_spine_decomposition(t)
    if not is_spine_decomposition(t, dec.r_plus, dec.r_minus, dec.spine):
        raise ValueError("not a spine decomposition of the pattern")
    core = dec.length
    ribs = sorted(dec.r_plus) + sorted(dec.r_minus)
    plus = [v in dec.r_plus for v in ribs]
    c = len(ribs)
    trows = t.out_rows
    hout = host.out_rows
    hin = host.in_rows
    everyone = (1 << n) - 1
    image = [0] * c

    def finish(common: int) -> tuple[int, ...] | None:
        if core == 0:
            return ()
        if common.bit_count() >= 1 << (core - 1):
            sub = _verts(common)
            chain = extract_transitive_em(induced(host, sub))
            return tuple(sub[i - 1] for i in chain[:core])
        if common.bit_count() < core:
            return None
        sub = _verts(common)
        chain = contains_transitive(induced(host, sub), core)
        return None if chain is None else tuple(sub[i - 1] for i in chain)

    def rec(depth: int, used: int, common: int) -> tuple[int, ...] | None:
        if common.bit_count() < core:
            return None
        if depth == c:
            spine = finish(common)
            return None if spine is None else tuple(v + 1 for v in image) + spine
        u = ribs[depth] - 1
        x = everyone & ~used
        while x:
            low = x & -x
            y = low.bit_length() - 1
            x ^= low
            ok = True
            for e in range(depth):
                if ((trows[u] >> (ribs[e] - 1)) & 1) != ((hout[y] >> image[e]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[depth] = y
            nb = hout[y] if plus[depth] else hin[y]
            found = rec(depth + 1, used | low, common & nb)
            if found is not None:
                return found
        return None

    return rec(0, 0, everyone)


def detect_pattern(t: Tournament, host: Tournament, decomposition: SpineDecomposition | None = None) -> bool:
    """Whether ``host`` contains an induced copy of ``t`` (rib-guessing algorithm)."""
    return detect_pattern_witness(t, host, decomposition) is not None


__all__ = [
    "SPINE_LIMIT",
    "extract_transitive_em",
    "tt_number",
    "contains_transitive",
    "SpineDecomposition",
    "is_spine_decomposition",
    "spine_decompositions",
    "best_spine_decomposition",
    "core_length",
    "detect_pattern",
    "detect_pattern_witness",
]
