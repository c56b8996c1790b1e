"""Canonical labeling and isomorph rejection.

canonical_form(g) returns a byte string that is equal for two graphs exactly
when they are isomorphic: the graph6 encoding of a canonical relabeling of g.
The labeling is found by individualization-refinement: vertices are first
partitioned by (degree, sorted neighbor degrees, triangle count), the
partition is refined to equitability, and non-singleton cells are split by
individualizing each member in turn; among all discrete partitions reached,
the lexicographically smallest adjacency certificate wins.

This is a small certified implementation tuned for dense graphs up to 24
vertices, not a competitor to mature canonical-labeling suites.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, bits
from .graph6 import write_graph6


def _initial_cells(g: Graph) -> list[int]:
    adj = g.adj
    degs = [row.bit_count() for row in adj]
    keys = {}
    for v in range(g.n):
        nb = adj[v]
        tri = sum((adj[u] & nb).bit_count() for u in bits(nb)) // 2
        key = (degs[v], tuple(sorted(degs[u] for u in bits(nb))), tri)
        keys.setdefault(key, 0)
        keys[key] |= 1 << v
    return [keys[k] for k in sorted(keys)]


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    # equitable refinement: split cells by neighbor counts into other cells
    # until stable; split order is by count value, so the refined ordered
    # partition is invariant under relabeling
    while True:
        changed = False
        for splitter in list(cells):
            newcells: list[int] = []
            for cell in cells:
                if cell.bit_count() == 1:
                    newcells.append(cell)
                    continue
                groups: dict[int, int] = {}
                for v in bits(cell):
                    c = (adj[v] & splitter).bit_count()
                    groups[c] = groups.get(c, 0) | (1 << v)
                if len(groups) == 1:
                    newcells.append(cell)
                else:
                    changed = True
                    newcells.extend(groups[c] for c in sorted(groups))
            cells = newcells
            if changed:
                break
        if not changed:
            return cells


def _certificate(adj: tuple[int, ...], order: list[int]) -> int:
    # upper-triangle bits of the relabeled adjacency matrix, column-major,
    # packed into one int (first pair = most significant bit)
    val = 0
    for col in range(1, len(order)):
        oc = order[col]
        for row in range(col):
            val = (val << 1) | (adj[order[row]] >> oc & 1)
    return val


def _search(g: Graph) -> list[int]:
    adj = g.adj
    best_cert: int | None = None
    best_order: list[int] = list(range(g.n))

    def rec(cells: list[int]) -> None:
        nonlocal best_cert, best_order
        target = -1
        for idx, cell in enumerate(cells):
            if cell.bit_count() > 1:
                target = idx
                break
        if target < 0:
            order = [cell.bit_length() - 1 for cell in cells]
            cert = _certificate(adj, order)
            if best_cert is None or cert < best_cert:
                best_cert = cert
                best_order = order
            return
        cell = cells[target]
        for v in bits(cell):
            split = cells[:target] + [1 << v, cell ^ (1 << v)] + cells[target + 1:]
            rec(_refine(adj, split))

    rec(_refine(adj, _initial_cells(g)))
    return best_order


def canonical_graph(g: Graph) -> Graph:
    """A canonical representative of g's isomorphism class (deterministic)."""
    order = _search(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = [0] * g.n
    for i, v in enumerate(order):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << pos[u]
        rows[i] = row
    return Graph(g.n, rows)


def canonical_form(g: Graph) -> bytes:
    """Relabeling-invariant certificate; equal bytes iff isomorphic graphs."""
    return write_graph6(canonical_graph(g)).encode("ascii")


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    return canonical_form(g1) == canonical_form(g2)


def dedup(graphs: Iterable[Graph]) -> list[Graph]:
    """One canonical representative per isomorphism class, sorted by certificate."""
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        cg = canonical_graph(g)
        seen.setdefault(write_graph6(cg).encode("ascii"), cg)
    return [seen[k] for k in sorted(seen)]
