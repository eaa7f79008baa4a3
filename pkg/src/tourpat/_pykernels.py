"""Pure-Python versions of the hot loops.

The compiled module ``_ckernels`` exports the same functions with the same
signatures and results; ``_kernels`` picks one at import time. Bitsets are
Python integers over 0-based vertex positions.
"""

from __future__ import annotations

from itertools import combinations, permutations

BACKEND = "python"


def _pair_bits(k: int) -> list[list[int]]:
    t = [[-1] * k for _ in range(k)]
    b = 0
    for i in range(k):
        for j in range(i + 1, k):
            t[i][j] = t[j][i] = b
            b += 1
    return t


def iso_table(code: int, k: int, directed: bool) -> bytearray:
    """Membership table over all pair codes: 1 exactly at the relabelings of ``code``."""
    m = k * (k - 1) // 2
    table = bytearray(1 << m)
    idx = _pair_bits(k)
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    present = [b for b in range(m) if (code >> b) & 1]
    for img in permutations(range(k)):
        out = 0
        if directed:
            for b in range(m):
                i, j = pairs[b]
                si, sj = img[i], img[j]
                if ((code >> b) & 1) == (si < sj):
                    out |= 1 << idx[si][sj]
        else:
            for b in present:
                i, j = pairs[b]
                out |= 1 << idx[img[i]][img[j]]
        table[out] = 1
    return table


def subset_code_hist(rows, n: int, k: int) -> dict:
    """Histogram of induced pair codes over all k-subsets of ``range(n)``."""
    hist: dict[int, int] = {}
    for combo in combinations(range(n), k):
        code = 0
        b = 0
        for a in range(k):
            r = rows[combo[a]]
            for c in range(a + 1, k):
                if (r >> combo[c]) & 1:
                    code |= 1 << b
                b += 1
        hist[code] = hist.get(code, 0) + 1
    return hist


def colorful_code_hist(rows, classes, k: int) -> dict:
    """Histogram of pair codes over colorful choices (one vertex per class, position = color)."""
    hist: dict[int, int] = {}
    if k == 0:
        return hist
    if any(len(c) == 0 for c in classes):
        return hist
    # bit offset of pair (a, c) for c > a is base[a] + (c - a - 1)
    base = [a * (2 * k - a - 1) // 2 for a in range(k)]
    chosen = [0] * k

    def rec(depth: int, code: int) -> None:
        if depth == k:
            hist[code] = hist.get(code, 0) + 1
            return
        for x in classes[depth]:
            c = code
            for a in range(depth):
                if (rows[chosen[a]] >> x) & 1:
                    c |= 1 << (base[a] + depth - a - 1)
            chosen[depth] = x
            rec(depth + 1, c)

    rec(0, 0)
    return hist


def mobius(values: list, m: int) -> list:
    """``g[S] = sum over T subset of S of (-1)^{|S - T|} f[T]``, in place."""
    size = 1 << m
    for bit in range(m):
        step = 1 << bit
        for s in range(size):
            if s & step:
                values[s] -= values[s ^ step]
    return values


def superset_sum(values: list, m: int) -> list:
    """``g[S] = sum over T superset of S of f[T]``, in place."""
    size = 1 << m
    for bit in range(m):
        step = 1 << bit
        for s in range(size):
            if not s & step:
                values[s] += values[s | step]
    return values


def alternating_submask_sum(table, base: int, mask: int) -> int:
    """``sum over s subset of mask of (-1)^{|s|} table[base ^ s]``, visiting submasks in Gray order."""
    bits = [1 << b for b in range(mask.bit_length()) if (mask >> b) & 1]
    code = base
    total = table[code]
    parity = 0
    for step in range(1, 1 << len(bits)):
        code ^= bits[(step & -step).bit_length() - 1]
        parity ^= 1
        if table[code]:
            total += -1 if parity else 1
    return total


def first_submask_hit(table, base: int, mask: int) -> int:
    """First non-empty submask ``s`` (Gray order) with ``table[base ^ s]`` set, else -1."""
    bits = [1 << b for b in range(mask.bit_length()) if (mask >> b) & 1]
    code = base
    s = 0
    for step in range(1, 1 << len(bits)):
        flip = bits[(step & -step).bit_length() - 1]
        code ^= flip
        s ^= flip
        if table[code]:
            return s
    return -1


def max_transitive(rows, n: int, best: int, best_mask: int):
    """Largest transitive vertex set, given a known transitive set of size ``best``.

    Every transitive set is reached exactly once through its sequence of
    sources; a branch is cut when even the score bound cannot beat ``best``.
    """
    state = [best, best_mask]

    def search(cand: int, depth: int, chain: int) -> None:
        if cand == 0:
            if depth > state[0]:
                state[0] = depth
                state[1] = chain
            return
        verts = []
        x = cand
        while x:
            low = x & -x
            v = low.bit_length() - 1
            x ^= low
            verts.append(((rows[v] & cand).bit_count(), v))
        verts.sort(reverse=True)
        # a transitive set of size t in cand has its i-th largest score >= t - i
        ub = len(verts)
        for i, (d, _) in enumerate(verts, start=1):
            if d + i < ub:
                ub = d + i
        if depth + ub <= state[0]:
            return
        for d, v in verts:
            if depth + 1 + d <= state[0]:
                break
            search(rows[v] & cand, depth + 1, chain | (1 << v))

    search((1 << n) - 1, 0, 0)
    return state[0], state[1]


def embeddings(prows, hrows, n: int, limit: int):
    """Count induced embeddings of the pattern into the host.

    A map ``phi`` is an embedding when, for every pattern pair ``a < b``,
    ``b in prows[a]`` iff ``phi(b) in hrows[phi(a)]``. Counting stops once
    ``limit`` embeddings are seen (``limit <= 0`` means no limit). Returns the
    count and the first embedding found (or ``None``).
    """
    k = len(prows)
    everyone = (1 << n) - 1
    if k == 0:
        return 1, ()
    if k > n:
        return 0, None
    phi = [0] * k
    found = [0, None]

    def rec(depth: int, cands: list) -> bool:
        if depth == k:
            found[0] += 1
            if found[1] is None:
                found[1] = tuple(phi)
            return 0 < limit <= found[0]
        x = cands[depth]
        while x:
            low = x & -x
            h = low.bit_length() - 1
            x ^= low
            phi[depth] = h
            hr = hrows[h]
            pr = prows[depth]
            nxt = cands[:]
            ok = True
            for a in range(depth + 1, k):
                if (pr >> a) & 1:
                    c = nxt[a] & hr
                else:
                    c = nxt[a] & ~hr
                c &= ~low
                if not c:
                    ok = False
                    break
                nxt[a] = c
            if ok and rec(depth + 1, nxt):
                return True
        return False

    rec(0, [everyone] * k)
    return found[0], found[1]
