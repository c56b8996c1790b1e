"""Dense undirected simple graphs on at most 64 vertices.

A graph is stored as one adjacency bitmask per vertex, so every hot operation
(clique search, independent-set enumeration, neighborhood algebra) is plain
integer arithmetic on machine words.  Vertex subsets are passed around as
plain int bitmasks over the host graph's vertex indices.

Graphs are immutable: every editing operation returns a new Graph, so values
can be shared freely across parallel workers.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import SizeLimitError

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph: vertex count ``n`` plus per-vertex bitmasks ``adj``.

    Invariants (checked at construction): adjacency is symmetric and
    irreflexive, and all set bits are below ``n``.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise SizeLimitError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits >= n")
            if row >> v & 1:
                raise ValueError(f"vertex {v} is self-adjacent")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls.from_edges(n, [(v, (v + 1) % n) for v in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(v, v + 1) for v in range(n - 1)])

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # -- basic queries ---------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    def edge_count(self) -> int:
        return sum(self.adj[v].bit_count() for v in range(self.n)) // 2

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple((full ^ self.adj[v]) & ~(1 << v) for v in range(self.n)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"


# -- constructions -------------------------------------------------------


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus all edges between the two parts."""
    n1, n2 = g1.n, g2.n
    if n1 + n2 > MAX_VERTICES:
        raise SizeLimitError(f"join would have {n1 + n2} > {MAX_VERTICES} vertices")
    right = ((1 << n2) - 1) << n1
    left = (1 << n1) - 1
    rows = [g1.adj[v] | right for v in range(n1)]
    rows += [(g2.adj[v] << n1) | left for v in range(n2)]
    return Graph(n1 + n2, rows)


def remove_vertices(g: Graph, drop: int) -> Graph:
    """Induced subgraph on the vertices outside ``drop``, relabeled order-preservingly."""
    if drop & ~g.vertex_mask:
        raise ValueError("vertex set has bits outside the graph")
    keep = [v for v in range(g.n) if not drop >> v & 1]
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v] & ~drop):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(keep), rows)


def add_vertex(g: Graph, nbrs: int) -> Graph:
    """Append a new vertex with neighborhood ``nbrs`` (a bitmask over g's vertices)."""
    if nbrs & ~g.vertex_mask:
        raise ValueError("neighborhood has bits outside the graph")
    if g.n + 1 > MAX_VERTICES:
        raise SizeLimitError(f"cannot grow past {MAX_VERTICES} vertices")
    b = 1 << g.n
    rows = [g.adj[v] | b if nbrs >> v & 1 else g.adj[v] for v in range(g.n)]
    rows.append(nbrs)
    return Graph(g.n + 1, rows)


def duplicate_vertex(g: Graph, v: int) -> Graph:
    """Add a non-adjacent twin of ``v``: the new vertex gets exactly N(v)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return add_vertex(g, g.adj[v])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or g.has_edge(u, v):
        raise ValueError(f"cannot add edge {u}-{v}")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, rows)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"no edge {u}-{v}")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, rows)


def sperner_pair(g: Graph) -> tuple[int, int] | None:
    """Return (u, v) with u != v and N(u) a subset of N(v), or None."""
    adj = g.adj
    for u in range(g.n):
        au = adj[u]
        for v in range(g.n):
            if u != v and au & ~adj[v] == 0:
                return (u, v)
    return None


def is_sperner(g: Graph) -> bool:
    """True iff some vertex's neighborhood is contained in another's."""
    return sperner_pair(g) is not None


def non_edges(g: Graph) -> Iterator[tuple[int, int]]:
    """Yield each unordered non-adjacent pair exactly once."""
    full = g.vertex_mask
    for v in range(g.n):
        rest = full >> (v + 1) << (v + 1)
        for u in bits(rest & ~g.adj[v]):
            yield (v, u)
