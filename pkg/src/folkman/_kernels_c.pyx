# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels: same signatures and search order as _kernels_py."""

BACKEND = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64


cdef inline int _popcount(u64 x) nogil:
    return __builtin_popcountll(x)


cdef inline int _lowbit(u64 x) nogil:
    return __builtin_ctzll(x)


cdef int _load(object adj, u64 *rows) except -1:
    cdef int n = len(adj)
    cdef int v
    if n > 64:
        raise ValueError("more than 64 adjacency rows")
    for v in range(n):
        rows[v] = adj[v]
    return n


cdef bint _edge_within(u64 *rows, u64 mask) nogil:
    cdef u64 m = mask
    cdef u64 b
    while m:
        b = m & (~m + 1)
        m ^= b
        if rows[_lowbit(b)] & m:
            return True
    return False


cdef bint _clique(u64 *rows, u64 mask, int k) nogil:
    cdef u64 m, b
    if k <= 0:
        return True
    if k == 1:
        return mask != 0
    if k == 2:
        return _edge_within(rows, mask)
    if _popcount(mask) < k:
        return False
    m = mask
    while m:
        b = m & (~m + 1)
        m ^= b
        if _popcount(m) + 1 < k:
            return False
        if _clique(rows, rows[_lowbit(b)] & m, k - 1):
            return True
    return False


def has_edge_within(adj, mask):
    """True iff the induced subgraph on ``mask`` has at least one edge."""
    cdef u64 rows[64]
    _load(adj, rows)
    return _edge_within(rows, <u64> mask)


def has_clique(adj, mask, k):
    """True iff the induced subgraph on ``mask`` contains a k-clique."""
    cdef u64 rows[64]
    _load(adj, rows)
    return _clique(rows, <u64> mask, <int> k)


cdef int _color_sort(u64 *rows, u64 mask, int *order, int *bounds) nogil:
    cdef int cnt = 0
    cdef int color = 0
    cdef u64 uncolored = mask
    cdef u64 cand, b
    cdef int v
    while uncolored:
        color += 1
        cand = uncolored
        while cand:
            b = cand & (~cand + 1)
            v = _lowbit(b)
            order[cnt] = v
            bounds[cnt] = color
            cnt += 1
            uncolored ^= b
            cand = (cand ^ b) & ~rows[v]
    return cnt


cdef void _expand(u64 *rows, u64 sub, int size, int *best) nogil:
    cdef int order[64]
    cdef int bounds[64]
    cdef int cnt = _color_sort(rows, sub, order, bounds)
    cdef int i, v
    cdef u64 nxt
    for i in range(cnt - 1, -1, -1):
        if size + bounds[i] <= best[0]:
            return
        v = order[i]
        if size + 1 > best[0]:
            best[0] = size + 1
        nxt = sub & rows[v]
        if nxt:
            _expand(rows, nxt, size + 1, best)
        sub ^= (<u64> 1) << v


def max_clique(adj, mask):
    """Clique number of the induced subgraph on ``mask``."""
    cdef u64 rows[64]
    cdef int best = 0
    _load(adj, rows)
    if mask:
        _expand(rows, <u64> mask, 0, &best)
    return best


cdef void _bk(u64 *rows, u64 r, u64 p, u64 x, list out):
    cdef u64 pool, m, b, a, cand, pivot_adj
    cdef int pivot_cover, c
    if not p and not x:
        out.append(r)
        return
    pool = p | x
    pivot_cover = -1
    pivot_adj = 0
    m = pool
    while m:
        b = m & (~m + 1)
        m ^= b
        a = rows[_lowbit(b)]
        c = _popcount(p & a)
        if c > pivot_cover:
            pivot_cover = c
            pivot_adj = a
    cand = p & ~pivot_adj
    while cand:
        b = cand & (~cand + 1)
        cand ^= b
        a = rows[_lowbit(b)]
        _bk(rows, r | b, p & a, x & a, out)
        p ^= b
        x |= b


def maximal_cliques(adj, mask):
    """All maximal cliques of the induced subgraph on ``mask``, as masks."""
    cdef u64 rows[64]
    _load(adj, rows)
    out = []
    _bk(rows, 0, <u64> mask, 0, out)
    return out


cdef void _mtf(u64 *rows, int n, int v, u64 chosen, u64 full, list out):
    cdef u64 rest, b
    if v == n:
        rest = full & ~chosen
        while rest:
            b = rest & (~rest + 1)
            rest ^= b
            if not _edge_within(rows, rows[_lowbit(b)] & chosen):
                return
        out.append(chosen)
        return
    if not _edge_within(rows, rows[v] & chosen):
        _mtf(rows, n, v + 1, chosen | ((<u64> 1) << v), full, out)
    _mtf(rows, n, v + 1, chosen, full, out)


def maximal_triangle_free(adj, n):
    """All maximal subsets of 0..n-1 inducing a triangle-free subgraph."""
    cdef u64 rows[64]
    cdef u64 full
    _load(adj, rows)
    full = ((<u64> 1) << n) - 1 if n < 64 else <u64> 0xFFFFFFFFFFFFFFFF
    out = []
    _mtf(rows, <int> n, 0, 0, full, out)
    return out


cdef bint _coloring_bt(u64 *rows, int n, int i, int s, int *targets,
                       int *order, u64 *classes, int *colors) nogil:
    cdef int v, c, j
    cdef u64 av, b
    cdef bint skip
    if i == n:
        return True
    v = order[i]
    av = rows[v]
    b = (<u64> 1) << v
    for c in range(s):
        if not classes[c]:
            skip = False
            for j in range(c):
                if targets[j] == targets[c] and not classes[j]:
                    skip = True
                    break
            if skip:
                continue
        if not _clique(rows, classes[c] & av, targets[c] - 1):
            classes[c] |= b
            colors[v] = c
            if _coloring_bt(rows, n, i + 1, s, targets, order, classes, colors):
                return True
            classes[c] ^= b
    return False


def find_good_coloring(adj, n, targets):
    """Coloring with no targets[c]-clique in color c, or None (see _kernels_py)."""
    cdef u64 rows[64]
    cdef int tgt[8]
    cdef int order[64]
    cdef int colors[64]
    cdef u64 classes[8]
    cdef int deg[64]
    cdef int s = len(targets)
    cdef int i, j, v, key, keyd
    if s > 8:
        raise ValueError("more than 8 colors unsupported")
    _load(adj, rows)
    for i in range(s):
        tgt[i] = targets[i]
        classes[i] = 0
    for v in range(n):
        order[v] = v
        deg[v] = _popcount(rows[v])
        colors[v] = 0
    # insertion sort by degree descending, stable (ties keep vertex order)
    for i in range(1, n):
        key = order[i]
        keyd = deg[key]
        j = i - 1
        while j >= 0 and deg[order[j]] < keyd:
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = key
    if _coloring_bt(rows, <int> n, 0, s, tgt, order, classes, colors):
        return [colors[v] for v in range(n)]
    return None
