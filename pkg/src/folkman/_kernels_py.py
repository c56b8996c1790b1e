"""Pure-Python bitset kernels.

Reference implementation of the hot inner loops: clique detection, maximum
clique with a greedy-coloring bound, pivoted maximal-clique enumeration,
maximal triangle-free subset enumeration, and the coloring search behind the
arrowing oracle.  folkman._kernels_c is the compiled twin with the same
signatures and search order; folkman.kernels picks one at import time.

All functions take ``adj`` as a sequence of per-vertex int bitmasks and work
on subsets given as int masks.
"""

from __future__ import annotations

BACKEND = "python"


def has_edge_within(adj, mask: int) -> bool:
    """True iff the induced subgraph on ``mask`` has at least one edge."""
    m = mask
    while m:
        b = m & -m
        m ^= b
        if adj[b.bit_length() - 1] & m:
            return True
    return False


def has_clique(adj, mask: int, k: int) -> bool:
    """True iff the induced subgraph on ``mask`` contains a k-clique.

    Short-circuits; never computes the full clique number.
    """
    if k <= 0:
        return True
    if k == 1:
        return mask != 0
    if k == 2:
        return has_edge_within(adj, mask)
    if mask.bit_count() < k:
        return False
    # smallest-vertex branching: a k-clique whose least member is v lies in
    # N(v) intersected with the later candidates
    m = mask
    while m:
        b = m & -m
        m ^= b
        if m.bit_count() + 1 < k:
            return False
        if has_clique(adj, adj[b.bit_length() - 1] & m, k - 1):
            return True
    return False


def _color_sort(adj, mask: int) -> tuple[list[int], list[int]]:
    # greedy partition of mask into independent color classes; returns the
    # vertices ordered by class with the class index as a clique-size bound
    order: list[int] = []
    bounds: list[int] = []
    uncolored = mask
    color = 0
    while uncolored:
        color += 1
        cand = uncolored
        while cand:
            b = cand & -cand
            v = b.bit_length() - 1
            order.append(v)
            bounds.append(color)
            uncolored ^= b
            cand = (cand ^ b) & ~adj[v]
    return order, bounds


def max_clique(adj, mask: int) -> int:
    """Clique number of the induced subgraph on ``mask``.

    Branch and bound with the greedy-coloring upper bound.
    """
    best = 0

    def expand(sub: int, size: int) -> None:
        nonlocal best
        order, bounds = _color_sort(adj, sub)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            if size + 1 > best:
                best = size + 1
            nxt = sub & adj[v]
            if nxt:
                expand(nxt, size + 1)
            sub ^= 1 << v

    if mask:
        expand(mask, 0)
    return best


def maximal_cliques(adj, mask: int) -> list[int]:
    """All maximal cliques of the induced subgraph on ``mask``, as masks.

    Pivoted Bron-Kerbosch; deterministic emission order.
    """
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pool = p | x
        pivot_cover = -1
        pivot_adj = 0
        m = pool
        while m:
            b = m & -m
            m ^= b
            a = adj[b.bit_length() - 1]
            c = (p & a).bit_count()
            if c > pivot_cover:
                pivot_cover = c
                pivot_adj = a
        cand = p & ~pivot_adj
        while cand:
            b = cand & -cand
            cand ^= b
            a = adj[b.bit_length() - 1]
            bk(r | b, p & a, x & a)
            p ^= b
            x |= b

    bk(0, mask, 0)
    return out


def maximal_triangle_free(adj, n: int) -> list[int]:
    """All maximal subsets of 0..n-1 inducing a triangle-free subgraph.

    Include/exclude branching over vertices; a branch including v is cut as
    soon as v would close a triangle with the chosen set.  Leaves are kept
    only if no outside vertex can still be added.
    """
    out: list[int] = []
    full = (1 << n) - 1

    def rec(v: int, chosen: int) -> None:
        if v == n:
            rest = full & ~chosen
            while rest:
                b = rest & -rest
                rest ^= b
                if not has_edge_within(adj, adj[b.bit_length() - 1] & chosen):
                    return
            out.append(chosen)
            return
        if not has_edge_within(adj, adj[v] & chosen):
            rec(v + 1, chosen | (1 << v))
        rec(v + 1, chosen)

    rec(0, 0)
    return out


def find_good_coloring(adj, n: int, targets: tuple[int, ...]) -> list[int] | None:
    """Search for a vertex coloring with no clique of size targets[c] in color c.

    ``targets`` must be sorted ascending.  Returns the color (0-based) per
    vertex, or None when every coloring has such a monochromatic clique.
    Equal-target colors are interchangeable, so a color is only opened once
    all earlier equal-target colors are in use.
    """
    s = len(targets)
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())
    classes = [0] * s
    colors = [0] * n

    def bt(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        av = adj[v]
        b = 1 << v
        for c in range(s):
            if not classes[c]:
                skip = False
                for j in range(c):
                    if targets[j] == targets[c] and not classes[j]:
                        skip = True
                        break
                if skip:
                    continue
            if not has_clique(adj, classes[c] & av, targets[c] - 1):
                classes[c] |= b
                colors[v] = c
                if bt(i + 1):
                    return True
                classes[c] ^= b
        return False

    if bt(0):
        return colors
    return None
