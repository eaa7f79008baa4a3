# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pykernels``.

Bitsets are stored as arrays of 64-bit words. Inputs that do not fit the
compiled limits are forwarded to the pure-Python implementation, so every
function accepts exactly what its Python twin accepts.
"""

from libc.stdlib cimport malloc, free, calloc
from libc.stdint cimport uint64_t, int64_t

from . import _pykernels as _py

BACKEND = "cython"

cdef object PYONE = 1

DEF MAXW = 8          # hosts up to 512 vertices
DEF MAXK = 64         # pattern vertices for embeddings


cdef inline int popcount64(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef int _words(int n):
    return (n + 63) >> 6


cdef int _load_rows(object rows, int n, int w, uint64_t* out) except -1:
    cdef int v, i
    cdef object r
    for v in range(n):
        r = rows[v]
        for i in range(w):
            out[v * w + i] = <uint64_t>((r >> (64 * i)) & 0xFFFFFFFFFFFFFFFF)
    return 0


cdef object _to_int(uint64_t* s, int w):
    cdef int i
    out = 0
    for i in range(w - 1, -1, -1):
        out = (out << 64) | s[i]
    return out


def iso_table(code, int k, bint directed):
    """Membership table over all pair codes: 1 exactly at the relabelings of ``code``."""
    if k > 8:
        return _py.iso_table(code, k, directed)
    cdef int m = k * (k - 1) // 2
    cdef uint64_t c = <uint64_t>code
    table = bytearray(1 << m)
    cdef unsigned char[:] tv = table
    cdef int idx[8][8]
    cdef int pi[28]
    cdef int pj[28]
    cdef int i, j, b = 0
    for i in range(k):
        for j in range(i + 1, k):
            idx[i][j] = b
            idx[j][i] = b
            pi[b] = i
            pj[b] = j
            b += 1
    cdef int img[8]
    cdef int cnt[8]
    cdef uint64_t out
    cdef int si, sj, t, tmp
    for i in range(k):
        img[i] = i
        cnt[i] = 0
    # Heap's algorithm
    while True:
        out = 0
        for b in range(m):
            si = img[pi[b]]
            sj = img[pj[b]]
            if directed:
                if ((c >> b) & 1) == (si < sj):
                    out |= (<uint64_t>1) << idx[si][sj]
            elif (c >> b) & 1:
                out |= (<uint64_t>1) << idx[si][sj]
        tv[out] = 1
        t = 1
        while t < k and cnt[t] >= t:
            cnt[t] = 0
            t += 1
        if t >= k:
            break
        if t % 2 == 0:
            tmp = img[0]; img[0] = img[t]; img[t] = tmp
        else:
            tmp = img[cnt[t]]; img[cnt[t]] = img[t]; img[t] = tmp
        cnt[t] += 1
    return table


cdef object _hist_from_counts(int64_t* counts, int m):
    hist = {}
    cdef int64_t s
    for s in range(1 << m):
        if counts[s]:
            hist[s] = counts[s]
    return hist


def subset_code_hist(rows, int n, int k):
    """Histogram of induced pair codes over all k-subsets of ``range(n)``."""
    cdef int m = k * (k - 1) // 2
    if n > 64 or m > 24 or k < 1:
        return _py.subset_code_hist(rows, n, k)
    if k > n:
        return {}
    cdef uint64_t r[64]
    cdef int v
    for v in range(n):
        r[v] = <uint64_t>rows[v]
    cdef int64_t* counts = <int64_t*>calloc(1 << m, sizeof(int64_t))
    cdef int combo[64]
    cdef uint64_t partial[65]   # partial[d]: code contribution of the first d chosen
    cdef int base[64]
    cdef int a, d, x
    cdef uint64_t code
    for a in range(k):
        base[a] = a * (2 * k - a - 1) // 2
    try:
        # iterative lexicographic enumeration with incremental codes
        d = 0
        combo[0] = -1
        partial[0] = 0
        while d >= 0:
            combo[d] += 1
            if combo[d] > n - (k - d):
                d -= 1
                continue
            x = combo[d]
            code = partial[d]
            for a in range(d):
                if (r[combo[a]] >> x) & 1:
                    code |= (<uint64_t>1) << (base[a] + d - a - 1)
            if d == k - 1:
                counts[code] += 1
            else:
                partial[d + 1] = code
                combo[d + 1] = x
                d += 1
        return _hist_from_counts(counts, m)
    finally:
        free(counts)


def colorful_code_hist(rows, classes, int k):
    """Histogram of pair codes over colorful choices (one vertex per class, position = color)."""
    cdef int m = k * (k - 1) // 2
    cdef int n = len(rows)
    if n > 512 or m > 24 or k < 1 or k > 64:
        return _py.colorful_code_hist(rows, classes, k)
    if any(len(cl) == 0 for cl in classes):
        return {}
    cdef int w = _words(n)
    cdef uint64_t* r = <uint64_t*>malloc(n * w * sizeof(uint64_t))
    cdef int64_t* counts = <int64_t*>calloc(1 << m, sizeof(int64_t))
    cdef int* members = <int*>malloc((n + 1) * sizeof(int))
    cdef int start[65]
    cdef int size[64]
    cdef int pos[64]
    cdef int chosen[64]
    cdef uint64_t partial[65]
    cdef int base[64]
    cdef int a, d, x, y, total = 0
    cdef uint64_t code
    try:
        _load_rows(rows, n, w, r)
        for a in range(k):
            base[a] = a * (2 * k - a - 1) // 2
            start[a] = total
            size[a] = len(classes[a])
            for x in classes[a]:
                members[total] = x
                total += 1
        d = 0
        pos[0] = -1
        partial[0] = 0
        while d >= 0:
            pos[d] += 1
            if pos[d] >= size[d]:
                d -= 1
                continue
            x = members[start[d] + pos[d]]
            code = partial[d]
            for a in range(d):
                y = chosen[a]
                if (r[y * w + (x >> 6)] >> (x & 63)) & 1:
                    code |= (<uint64_t>1) << (base[a] + d - a - 1)
            chosen[d] = x
            if d == k - 1:
                counts[code] += 1
            else:
                partial[d + 1] = code
                pos[d + 1] = -1
                d += 1
        return _hist_from_counts(counts, m)
    finally:
        free(r)
        free(counts)
        free(members)


cdef bint _fits_int64(values):
    total = 0
    for v in values:
        total += abs(v)
    return total < (1 << 62)


def mobius(values, int m):
    """``g[S] = sum over T subset of S of (-1)^{|S - T|} f[T]``, in place."""
    if not _fits_int64(values):
        return _py.mobius(values, m)
    cdef int64_t size = 1 << m
    cdef int64_t* a = <int64_t*>malloc(size * sizeof(int64_t))
    cdef int64_t s, step
    cdef int bit
    try:
        for s in range(size):
            a[s] = values[s]
        for bit in range(m):
            step = (<int64_t>1) << bit
            for s in range(size):
                if s & step:
                    a[s] -= a[s ^ step]
        for s in range(size):
            values[s] = a[s]
        return values
    finally:
        free(a)


def superset_sum(values, int m):
    """``g[S] = sum over T superset of S of f[T]``, in place."""
    if not _fits_int64(values):
        return _py.superset_sum(values, m)
    cdef int64_t size = 1 << m
    cdef int64_t* a = <int64_t*>malloc(size * sizeof(int64_t))
    cdef int64_t s, step
    cdef int bit
    try:
        for s in range(size):
            a[s] = values[s]
        for bit in range(m):
            step = (<int64_t>1) << bit
            for s in range(size):
                if not s & step:
                    a[s] += a[s | step]
        for s in range(size):
            values[s] = a[s]
        return values
    finally:
        free(a)


def alternating_submask_sum(table, base, mask):
    """``sum over s subset of mask of (-1)^{|s|} table[base ^ s]``, visiting submasks in Gray order."""
    if mask.bit_length() > 63:
        return _py.alternating_submask_sum(table, base, mask)
    cdef const unsigned char[:] tv = table
    cdef uint64_t bits[64]
    cdef int nb = 0, b
    cdef uint64_t mk = <uint64_t>mask
    for b in range(64):
        if (mk >> b) & 1:
            bits[nb] = (<uint64_t>1) << b
            nb += 1
    cdef uint64_t code = <uint64_t>base
    cdef int64_t total = tv[code]
    cdef int parity = 0
    cdef uint64_t step, limit = (<uint64_t>1) << nb
    step = 1
    while step < limit:
        code ^= bits[__builtin_ctzll(step)]
        parity ^= 1
        if tv[code]:
            total += -1 if parity else 1
        step += 1
    return total


def first_submask_hit(table, base, mask):
    """First non-empty submask ``s`` (Gray order) with ``table[base ^ s]`` set, else -1."""
    if mask.bit_length() > 63:
        return _py.first_submask_hit(table, base, mask)
    cdef const unsigned char[:] tv = table
    cdef uint64_t bits[64]
    cdef int nb = 0, b
    cdef uint64_t mk = <uint64_t>mask
    for b in range(64):
        if (mk >> b) & 1:
            bits[nb] = (<uint64_t>1) << b
            nb += 1
    cdef uint64_t code = <uint64_t>base
    cdef uint64_t s = 0, flip
    cdef uint64_t step, limit = (<uint64_t>1) << nb
    step = 1
    while step < limit:
        flip = bits[__builtin_ctzll(step)]
        code ^= flip
        s ^= flip
        if tv[code]:
            return s
        step += 1
    return -1


# --- largest transitive subtournament ------------------------------------

cdef struct TTState:
    int n
    int w
    uint64_t* rows
    int best
    uint64_t* best_chain
    uint64_t* scratch     # per-depth candidate sets, (n + 2) * w words
    uint64_t* chains      # per-depth chains
    int* degs             # per-depth score buffers, (n + 2) * n
    int* order            # per-depth vertex order buffers


cdef int _popcount_and(uint64_t* a, uint64_t* b, int w) nogil:
    cdef int i, c = 0
    for i in range(w):
        c += popcount64(a[i] & b[i])
    return c


cdef void _tt_search(TTState* st, int depth) nogil:
    cdef int w = st.w
    cdef int n = st.n
    cdef uint64_t* cand = st.scratch + depth * w
    cdef uint64_t* chain = st.chains + depth * w
    cdef uint64_t* child = st.scratch + (depth + 1) * w
    cdef uint64_t* child_chain = st.chains + (depth + 1) * w
    cdef int* degs = st.degs + depth * n
    cdef int* order = st.order + depth * n
    cdef int cnt = 0, i, j, v, d, ub, tmpd, tmpv, word
    cdef uint64_t x
    cdef bint empty = True
    for i in range(w):
        if cand[i]:
            empty = False
            break
    if empty:
        if depth > st.best:
            st.best = depth
            for i in range(w):
                st.best_chain[i] = chain[i]
        return
    for word in range(w):
        x = cand[word]
        while x:
            v = word * 64 + __builtin_ctzll(x)
            x &= x - 1
            d = _popcount_and(st.rows + v * w, cand, w)
            # insertion sort by score, descending; ties by vertex descending
            j = cnt
            while j > 0 and (degs[j - 1] < d or (degs[j - 1] == d and order[j - 1] < v)):
                degs[j] = degs[j - 1]
                order[j] = order[j - 1]
                j -= 1
            degs[j] = d
            order[j] = v
            cnt += 1
    ub = cnt
    for i in range(cnt):
        if degs[i] + i + 1 < ub:
            ub = degs[i] + i + 1
    if depth + ub <= st.best:
        return
    for i in range(cnt):
        if depth + 1 + degs[i] <= st.best:
            break
        v = order[i]
        for j in range(w):
            child[j] = st.rows[v * w + j] & cand[j]
            child_chain[j] = chain[j]
        child_chain[v >> 6] |= (<uint64_t>1) << (v & 63)
        _tt_search(st, depth + 1)


def max_transitive(rows, int n, int best, best_mask):
    """Largest transitive vertex set, given a known transitive set of size ``best``."""
    if n > 64 * MAXW or n < 1:
        return _py.max_transitive(rows, n, best, best_mask)
    cdef TTState st
    cdef int w = _words(n)
    cdef int i
    st.n = n
    st.w = w
    st.best = best
    st.rows = <uint64_t*>malloc(n * w * sizeof(uint64_t))
    st.best_chain = <uint64_t*>calloc(w, sizeof(uint64_t))
    st.scratch = <uint64_t*>calloc((n + 2) * w, sizeof(uint64_t))
    st.chains = <uint64_t*>calloc((n + 2) * w, sizeof(uint64_t))
    st.degs = <int*>malloc((n + 2) * n * sizeof(int))
    st.order = <int*>malloc((n + 2) * n * sizeof(int))
    try:
        _load_rows(rows, n, w, st.rows)
        everyone = (PYONE << n) - 1
        for i in range(w):
            st.scratch[i] = <uint64_t>((everyone >> (64 * i)) & 0xFFFFFFFFFFFFFFFF)
        with nogil:
            _tt_search(&st, 0)
        if st.best > best:
            return st.best, _to_int(st.best_chain, w)
        return best, best_mask
    finally:
        free(st.rows)
        free(st.best_chain)
        free(st.scratch)
        free(st.chains)
        free(st.degs)
        free(st.order)


# --- induced embeddings --------------------------------------------------

cdef struct EmbState:
    int k
    int w
    uint64_t* hrows
    uint64_t* prow_bits   # k words: pattern rows (k <= 64)
    uint64_t* cands       # (k + 1) levels of k * w words
    int* phi
    int* first
    int64_t count
    int64_t limit


cdef bint _emb_rec(EmbState* st, int depth) nogil:
    cdef int k = st.k, w = st.w
    cdef uint64_t* cur = st.cands + depth * k * w
    cdef uint64_t* nxt = st.cands + (depth + 1) * k * w
    cdef uint64_t* hr
    cdef uint64_t x, pr, c, any_bits
    cdef int word, h, a, i, hw
    cdef uint64_t hb
    cdef bint ok
    if depth == k:
        st.count += 1
        if st.count == 1:
            for i in range(k):
                st.first[i] = st.phi[i]
        return st.limit > 0 and st.count >= st.limit
    pr = st.prow_bits[depth]
    for word in range(w):
        x = cur[depth * w + word]
        while x:
            h = word * 64 + __builtin_ctzll(x)
            x &= x - 1
            st.phi[depth] = h
            hr = st.hrows + h * w
            hw = h >> 6
            hb = (<uint64_t>1) << (h & 63)
            ok = True
            for a in range(depth + 1, k):
                any_bits = 0
                for i in range(w):
                    if (pr >> a) & 1:
                        c = cur[a * w + i] & hr[i]
                    else:
                        c = cur[a * w + i] & ~hr[i]
                    if i == hw:
                        c &= ~hb
                    nxt[a * w + i] = c
                    any_bits |= c
                if not any_bits:
                    ok = False
                    break
            if ok and _emb_rec(st, depth + 1):
                return True
    return False


def embeddings(prows, hrows, int n, limit):
    """Count induced embeddings of the pattern into the host (see the Python twin)."""
    cdef int k = len(prows)
    if k == 0:
        return 1, ()
    if k > n:
        return 0, None
    if n > 64 * MAXW or k > MAXK:
        return _py.embeddings(prows, hrows, n, limit)
    cdef EmbState st
    cdef int w = _words(n)
    cdef int a, i
    st.k = k
    st.w = w
    st.count = 0
    st.limit = limit
    st.hrows = <uint64_t*>malloc(n * w * sizeof(uint64_t))
    st.prow_bits = <uint64_t*>malloc(k * sizeof(uint64_t))
    st.cands = <uint64_t*>calloc((k + 1) * k * w, sizeof(uint64_t))
    st.phi = <int*>malloc(k * sizeof(int))
    st.first = <int*>malloc(k * sizeof(int))
    try:
        _load_rows(hrows, n, w, st.hrows)
        for a in range(k):
            st.prow_bits[a] = <uint64_t>prows[a]
        everyone = (PYONE << n) - 1
        for a in range(k):
            for i in range(w):
                st.cands[a * w + i] = <uint64_t>((everyone >> (64 * i)) & 0xFFFFFFFFFFFFFFFF)
        with nogil:
            _emb_rec(&st, 0)
        if st.count == 0:
            return 0, None
        return st.count, tuple(st.first[i] for i in range(k))
    finally:
        free(st.hrows)
        free(st.prow_bits)
        free(st.cands)
        free(st.phi)
        free(st.first)
