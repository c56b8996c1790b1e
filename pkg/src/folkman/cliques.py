"""Clique, independence and triangle machinery on Graph values.

Thin typed layer over the bitset kernels: clique number, independence number,
short-circuit k-clique tests, maximal independent set and maximal
triangle-free subset enumeration, and the saturation predicates used by the
extension search (every-non-edge-closes-a-triangle, every-non-edge-completes
-a-K_q).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import kernels
from .errors import PreconditionError
from .graph import Graph, bits, non_edges


@dataclass(frozen=True)
class SubsetFamily:
    """A duplicate-free family of vertex subsets of one host graph."""

    host_n: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.members


def clique_number(g: Graph) -> int:
    """Size of a maximum clique; 0 for the graph on no vertices."""
    return kernels.max_clique(g.adj, g.vertex_mask)


def independence_number(g: Graph) -> int:
    """Size of a maximum independent set (clique number of the complement)."""
    c = g.complement()
    return kernels.max_clique(c.adj, c.vertex_mask)


def has_kclique(g: Graph, k: int) -> bool:
    """True iff g contains a k-clique; short-circuits without computing omega."""
    if k < 0:
        raise ValueError("clique size must be >= 0")
    if k == 0:
        return True
    if k == 1:
        return g.n > 0
    if k == 2:
        return any(g.adj)
    return kernels.has_clique(g.adj, g.vertex_mask, k)


def has_independent_set(g: Graph, k: int) -> bool:
    """True iff g contains k pairwise non-adjacent vertices; short-circuits."""
    if k <= 0:
        return True
    return kernels.has_clique(g.complement().adj, g.vertex_mask, k)


def maximal_independent_sets(g: Graph) -> Iterator[int]:
    """Every maximal independent set exactly once, as vertex masks.

    These are the maximal cliques of the complement graph.
    """
    comp = g.complement()
    return iter(kernels.maximal_cliques(comp.adj, g.vertex_mask))


def maximal_k3free_subsets(g: Graph) -> SubsetFamily:
    """The family of all maximal subsets inducing a triangle-free subgraph."""
    return SubsetFamily(g.n, tuple(kernels.maximal_triangle_free(g.adj, g.n)))


def is_triangle_free_subset(g: Graph, mask: int) -> bool:
    adj = g.adj
    for v in bits(mask):
        if kernels.has_edge_within(adj, adj[v] & mask & ~((2 << v) - 1)):
            return False
    return True


def is_maximal_k3free_subset(g: Graph, mask: int) -> bool:
    """Membership test for maximal_k3free_subsets without enumerating the family."""
    if not is_triangle_free_subset(g, mask):
        return False
    for v in bits(g.vertex_mask & ~mask):
        if not kernels.has_edge_within(g.adj, g.adj[v] & mask):
            return False  # v could still be added
    return True


def is_plus_k3(g: Graph) -> bool:
    """True iff adding any missing edge closes a triangle.

    Equivalently, every non-adjacent pair has a common neighbor; graphs with
    no non-edges qualify vacuously.
    """
    for u, v in non_edges(g):
        if not g.adj[u] & g.adj[v]:
            return False
    return True


def is_maximal_in_class(g: Graph, q: int) -> bool:
    """True iff adding any single missing edge creates a K_q.

    Precondition: omega(g) < q (reported as PreconditionError).  This is the
    saturation half of class maximality only; arrowing membership is checked
    elsewhere.
    """
    if has_kclique(g, q):
        raise PreconditionError(f"graph already contains K_{q}")
    adj = g.adj
    for u, v in non_edges(g):
        if not kernels.has_clique(adj, adj[u] & adj[v], q - 2):
            return False
    return True


def has_triangle(g: Graph) -> bool:
    return has_kclique(g, 3)
