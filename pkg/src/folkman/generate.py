"""Exhaustive generation of non-isomorphic graphs (the brute-force oracle).

Level-wise vertex augmentation: every (k+1)-vertex graph arises by attaching
a new vertex to some k-vertex graph, so extending each canonical k-vertex
representative by every neighborhood subset and deduplicating by canonical
form yields all (k+1)-vertex isomorphism classes.  Clique and independence
caps are hereditary under vertex deletion, so they prune every level, not
just the last.

Capped at 10 vertices; beyond that this oracle is the wrong tool.
"""

from __future__ import annotations

import random
from typing import Iterator

from .canon import canonical_graph, dedup
from .errors import SizeLimitError
from .graph import Graph, add_vertex, mask_of
from .graph6 import write_graph6
from .kernels import has_clique

GENERATION_CAP = 10


def nonisomorphic_graphs(
    n: int,
    omega_max: int | None = None,
    alpha_max: int | None = None,
) -> list[Graph]:
    """All isomorphism classes on n vertices, optionally restricted to
    clique number <= omega_max and independence number <= alpha_max.

    Output is sorted by canonical form.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > GENERATION_CAP:
        raise SizeLimitError(f"exhaustive generation capped at {GENERATION_CAP} vertices")
    if n == 0:
        return [Graph.empty(0)]
    if (omega_max is not None and omega_max < 1) or (alpha_max is not None and alpha_max < 1):
        return []
    level: dict[bytes, Graph] = {}
    g1 = Graph.empty(1)
    level[write_graph6(g1).encode()] = g1
    for k in range(1, n):
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            comp_rows = g.complement().adj
            gmask = g.vertex_mask
            for nbrs in range(1 << k):
                # only cliques/independent sets through the new vertex need checking
                if omega_max is not None and has_clique(g.adj, nbrs, omega_max):
                    continue
                if alpha_max is not None and has_clique(comp_rows, gmask & ~nbrs, alpha_max):
                    continue
                cand = canonical_graph(add_vertex(g, nbrs))
                nxt.setdefault(write_graph6(cand).encode(), cand)
        level = nxt
    return [level[key] for key in sorted(level)]


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, by edge-subset enumeration.

    2^(n(n-1)/2) graphs; meant for certification at n <= 6.
    """
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n, rows)


def count_isomorphism_classes(n: int) -> int:
    """Number of isomorphism classes on n vertices via labeled enumeration
    plus dedup (independent of the augmentation generator)."""
    return len(dedup(all_labeled_graphs(n)))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """One draw of the Erdos-Renyi model G(n, p)."""
    rows = [0] * n
    for v in range(n):
        for u in range(v):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def random_permutation_of(rng: random.Random, g: Graph) -> Graph:
    """A uniformly random relabeling of g."""
    perm = list(range(g.n))
    rng.shuffle(perm)
    rows = [0] * g.n
    for v in range(g.n):
        rows[perm[v]] = mask_of(perm[u] for u in range(g.n) if g.adj[v] >> u & 1)
    return Graph(g.n, rows)
