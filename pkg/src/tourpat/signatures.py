"""Signatures: vertex sets R such that no flip of pairs avoiding R preserves T.

A flip reverses a non-empty set of pairs that lie inside ``V(T) - R``. Flips
are enumerated in Gray-code order so each step reverses a single pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import ceil, log2

from . import _kernels
from .detect import extract_transitive_em
from .iso import are_isomorphic, iso_class
from .structures import Tournament, induced, pair_list

TABLE_LIMIT = 8
FREE_LIMIT = 7


@dataclass(frozen=True)
class Signature:
    """Vertex set ``vertices`` of a tournament of order ``order``."""

    order: int
    vertices: tuple[int, ...]
    verified: bool = False

    @property
    def size(self) -> int:
        return len(self.vertices)


def _free_mask(k: int, rset: set) -> int:
    mask = 0
    for b, (i, j) in enumerate(pair_list(k)):
        if i + 1 not in rset and j + 1 not in rset:
            mask |= 1 << b
    return mask


def _flip_preserving(t: Tournament, rset: set, table=None) -> int:
    """Pair mask of a flip avoiding ``rset`` that keeps ``t`` up to isomorphism, or -1."""
    k = t.order
    mask = _free_mask(k, rset)
    if not mask:
        return -1
    if k <= TABLE_LIMIT:
        if table is None:
            table = iso_class(t)
        return _kernels.first_submask_hit(table, t.bits, mask)
    bits = [1 << b for b in range(mask.bit_length()) if (mask >> b) & 1]
    code = t.bits
    s = 0
    scores = sorted(t.scores())
    for step in range(1, 1 << len(bits)):
        flip = bits[(step & -step).bit_length() - 1]
        code ^= flip
        s ^= flip
        other = Tournament(k, code)
        if sorted(other.scores()) == scores and are_isomorphic(other, t):
            return s
    return -1


def _check_set(t: Tournament, r) -> set:
    rset = set(r)
    if any(not 1 <= v <= t.order for v in rset):
        raise ValueError("R must be a subset of [k]")
    return rset


def is_signature(t: Tournament, r) -> bool:
    """Whether no non-empty flip of pairs inside ``V(T) - R`` gives a tournament isomorphic to T.

    Orders up to 8 use an isomorphism-class table; beyond that at most 7
    vertices may lie outside R.
    """
    rset = _check_set(t, r)
    if t.order > TABLE_LIMIT and t.order - len(rset) > FREE_LIMIT:
        raise ValueError(f"at most {FREE_LIMIT} vertices may lie outside R for orders above {TABLE_LIMIT}")
    return _flip_preserving(t, rset) < 0


def witness_flip(t: Tournament, r) -> list[tuple[int, int]] | None:
    """Pairs of an isomorphism-preserving flip avoiding R, or None if R is a signature."""
    rset = _check_set(t, r)
    if t.order > TABLE_LIMIT and t.order - len(rset) > FREE_LIMIT:
        raise ValueError(f"at most {FREE_LIMIT} vertices may lie outside R for orders above {TABLE_LIMIT}")
    s = _flip_preserving(t, rset)
    if s < 0:
        return None
    return [(i + 1, j + 1) for b, (i, j) in enumerate(pair_list(t.order)) if (s >> b) & 1]


def min_signature(t: Tournament) -> Signature:
    """A smallest signature; among those of equal size, the lexicographically least."""
    k = t.order
    if k > TABLE_LIMIT:
        raise ValueError(f"minimum signatures are limited to order {TABLE_LIMIT}")
    table = iso_class(t)
    for size in range(k + 1):
        for r in combinations(range(1, k + 1), size):
            if _flip_preserving(t, set(r), table) < 0:
                return Signature(k, r, True)
    raise AssertionError("the full vertex set is always a signature")


def min_signature_unpruned(t: Tournament) -> int:
    """sig(T) by testing every vertex subset and every flip with a fresh isomorphism test."""
    k = t.order
    if k > 6:
        raise ValueError("the unpruned search is limited to order 6")
    pairs = pair_list(k)
    best = k
    for bits in product((0, 1), repeat=k):
        rset = {v + 1 for v in range(k) if bits[v]}
        free = [b for b, (i, j) in enumerate(pairs) if i + 1 not in rset and j + 1 not in rset]
        ok = True
        for sel in range(1, 1 << len(free)):
            flip = 0
            for idx, b in enumerate(free):
                if (sel >> idx) & 1:
                    flip |= 1 << b
            if are_isomorphic(Tournament(k, t.bits ^ flip), t):
                ok = False
                break
        if ok:
            best = min(best, len(rset))
    return best


def signature_bound(k: int) -> int:
    """The guaranteed upper bound ``k - ceil(log2(k) / 4)`` on sig(T)."""
    return k - ceil(log2(k) / 4)


def erdos_moser_signature(t: Tournament, p: int) -> Signature:
    """A signature of size ``k - p``: remove a transitive p-set with equal out-degrees mod p.

    Vertices are grouped by out-degree modulo p; the smallest residue whose
    class has at least 2^{p-1} vertices is used, and a transitive set Y of
    size p is extracted from it. The result is checked with
    :func:`is_signature` whenever ``p <= 7``.
    """
    k = t.order
    if p < 1:
        raise ValueError("p must be positive")
    if k < p * 2 ** (p - 1):
        raise ValueError(f"needs k >= p * 2^(p-1) = {p * 2 ** (p - 1)}")
    scores = t.scores()
    need = 2 ** (p - 1)
    chosen = None
    for residue in range(p):
        cls = [v for v in t.vertices if scores[v - 1] % p == residue]
        if len(cls) >= need:
            chosen = cls
            break
    if chosen is None:
        raise AssertionError("pigeonhole guarantees a large residue class")
    chain = extract_transitive_em(induced(t, chosen))
    y = {chosen[i - 1] for i in chain[:p]}
    r = tuple(v for v in t.vertices if v not in y)
    verified = False
    if p <= FREE_LIMIT:
        if not is_signature(t, r):
            raise AssertionError("constructed set is not a signature")
        verified = True
    return Signature(k, r, verified)


__all__ = [
    "Signature",
    "is_signature",
    "witness_flip",
    "min_signature",
    "min_signature_unpruned",
    "signature_bound",
    "erdos_moser_signature",
]
