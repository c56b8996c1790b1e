"""Extension search and closure operations over graph classes H_v(2_r,3;4;n).

The central routine grows every maximal non-Sperner graph with independence
number s in H_v(2_r, 3; 4; n) out of the (n-s)-vertex graphs one independence
level down.  For each host graph H it:

  1. enumerates the family of maximal triangle-free vertex subsets of H,
  2. selects the s-element sub-families N = {M_1, ..., M_s} satisfying
       (a) no chosen subset equals a vertex neighborhood of H,
       (b) each pairwise intersection induces at least one edge of H,
       (c) alpha(H minus the union of any sub-collection N') stays at most
           s - |N'| (the empty sub-collection gives alpha(H) <= s),
  3. attaches s new pairwise non-adjacent vertices whose neighborhoods are
     the chosen subsets, keeping the result when it is non-Sperner and every
     missing edge would complete a K4,

then removes isomorph copies and discards graphs that fail the (2_r, 3)
arrowing check.

Companion closures: duplication of vertices to recover the maximal Sperner
graphs one order up, saturation by edge additions (maximalize), the
remove-edges-then-maximalize population round, and single-vertex descent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .arrowing import ArrowTarget, ClassSpec, arrows, arrows_2r3, in_class
from .canon import canonical_form, dedup
from .cliques import (
    clique_number,
    has_kclique,
    independence_number,
    is_maximal_in_class,
    is_maximal_k3free_subset,
    is_plus_k3,
    maximal_k3free_subsets,
)
from .errors import ContractViolation, PreconditionError, ValidationError
from .graph import (
    Graph,
    add_edge,
    add_vertex,
    duplicate_vertex,
    is_sperner,
    non_edges,
    remove_edge,
    remove_vertices,
)


@dataclass(frozen=True)
class ExtendParams:
    """Fixed shape of one extension run: n = |V(H)| + s, target (2_r, 3)."""

    n: int
    r: int
    s: int
    q: int = 4

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ValueError("extension needs r >= 1 and s >= 1")
        if self.q != 4:
            raise ValueError("the extension search is stated for K4-free classes")

    @property
    def host_n(self) -> int:
        return self.n - self.s

    @property
    def spec(self) -> ClassSpec:
        return ClassSpec(ArrowTarget((2,) * self.r + (3,)), self.q, self.n)


def _check_member_sets(h: Graph, sets: Sequence[int]) -> None:
    for mask in sets:
        if not is_maximal_k3free_subset(h, mask):
            raise ContractViolation(
                f"vertex set {mask:#x} is not a maximal triangle-free subset of the host"
            )


def candidate_satisfies(h: Graph, sets: Sequence[int]) -> bool:
    """Full check of the selection conditions (a), (b), (c) for one family.

    Each set must come from maximal_k3free_subsets(h); anything else is a
    contract violation, reported distinctly.
    """
    _check_member_sets(h, sets)
    s = len(sets)
    if len(set(sets)) != s:
        return False
    for mask in sets:  # (a)
        if mask in h.adj:
            return False
    for m1, m2 in itertools.combinations(sets, 2):  # (b)
        if not kernels.has_edge_within(h.adj, m1 & m2):
            return False
    comp = h.complement().adj
    full = h.vertex_mask
    for k in range(s + 1):  # (c), all sub-collections including the empty one
        for sub in itertools.combinations(sets, k):
            union = 0
            for m in sub:
                union |= m
            if kernels.has_clique(comp, full & ~union, s - k + 1):
                return False
    return True


def extend_one(h: Graph, sets: Sequence[int]) -> Graph:
    """Attach one new independent vertex per chosen subset.

    The new vertices are pairwise non-adjacent and K4-freeness is automatic:
    triangle-free neighborhoods cannot complete a K4.
    """
    g = h
    for mask in sets:
        g = add_vertex(g, mask)
    return g


def extend_host(h: Graph, params: ExtendParams) -> list[Graph]:
    """All surviving extensions of one host graph (labeled, pre-dedup).

    Pair compatibility (condition (b)) is precomputed as a bitmask relation
    over the family; condition (c) is rechecked incrementally for every
    sub-collection containing the newest member, and once more in full for
    every emitted candidate.
    """
    s = params.s
    fam = [m for m in maximal_k3free_subsets(h) if m not in h.adj]  # (a) prefilter
    t = len(fam)
    if t < s:
        return []
    comp = h.complement().adj
    full = h.vertex_mask
    # alpha(H) <= s, the empty sub-collection of condition (c)
    if kernels.has_clique(comp, full, s + 1):
        return []
    compat = [0] * t
    for i in range(t):
        for j in range(i + 1, t):
            if kernels.has_edge_within(h.adj, fam[i] & fam[j]):
                compat[i] |= 1 << j
                compat[j] |= 1 << i

    out: list[Graph] = []
    chosen: list[int] = []

    def residual_ok(newest: int) -> bool:
        # condition (c) over sub-collections containing the newest set
        others = chosen
        for k in range(len(others) + 1):
            for sub in itertools.combinations(others, k):
                union = fam[newest]
                for i in sub:
                    union |= fam[i]
                if kernels.has_clique(comp, full & ~union, s - k):
                    return False
        return True

    def grow(start: int, allowed: int) -> None:
        if len(chosen) == s:
            sets = [fam[i] for i in chosen]
            g = extend_one(h, sets)
            if not is_sperner(g) and is_maximal_in_class(g, params.q):
                assert candidate_satisfies(h, sets)
                out.append(g)
            return
        need = s - len(chosen)
        for j in range(start, t - need + 1):
            if allowed >> j & 1 and residual_ok(j):
                chosen.append(j)
                grow(j + 1, allowed & compat[j])
                chosen.pop()

    grow(0, (1 << t) - 1)
    return out


def validate_extension_inputs(inputs: Sequence[Graph], params: ExtendParams) -> None:
    """Reject hosts outside the expected input set: (n-s)-vertex graphs in
    H_v(2_{r-1}, 3; 4) that gain a triangle on every edge addition and have
    independence number at most s."""
    for idx, h in enumerate(inputs):
        if h.n != params.host_n:
            raise ValidationError(idx, f"order {params.host_n}")
        if has_kclique(h, params.q):
            raise ValidationError(idx, f"K{params.q}-free")
        if not arrows_2r3(h, params.r - 1):
            raise ValidationError(idx, f"arrows (2_{params.r - 1},3)")
        if not is_plus_k3(h):
            raise ValidationError(idx, "every added edge closes a triangle")
        if independence_number(h) > params.s:
            raise ValidationError(idx, f"independence number <= {params.s}")


def algorithm_extend(
    inputs: Sequence[Graph],
    params: ExtendParams,
    validate: bool = True,
    workers: int = 1,
) -> list[Graph]:
    """Run the full extension: per-host growth, isomorph rejection, arrowing
    filter.  Output is every maximal non-Sperner graph with independence
    number s in H_v(2_r, 3; 4; n) whose host lies in ``inputs``, sorted by
    canonical form."""
    if validate:
        validate_extension_inputs(inputs, params)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_extend_host_worker, [(h, params) for h in inputs], chunksize=8)
            raw = [g for chunk in chunks for g in chunk]
    else:
        raw = [g for h in inputs for g in extend_host(h, params)]
    survivors = [g for g in dedup(raw) if arrows_2r3(g, params.r)]
    for g in survivors:  # post-hoc sanity on every run
        assert clique_number(g) == 3
        assert independence_number(g) == params.s
        assert not is_sperner(g)
        assert is_maximal_in_class(g, params.q)
    return survivors


def _extend_host_worker(job: tuple[Graph, ExtendParams]) -> list[Graph]:
    h, params = job
    return extend_host(h, params)


def sperner_closure(maximal_prev: Sequence[Graph], spec: ClassSpec) -> list[Graph]:
    """All maximal Sperner members of the class obtained by duplicating one
    vertex in the given maximal (n-1)-vertex graphs, deduplicated."""
    out = []
    for g in maximal_prev:
        for v in range(g.n):
            d = duplicate_vertex(g, v)
            if d.n != spec.n or has_kclique(d, spec.q):
                continue
            if not is_maximal_in_class(d, spec.q):
                continue
            if arrows(d, spec.target):
                out.append(d)
    return dedup(out)


def maximalize(g: Graph, q: int) -> list[Graph]:
    """Every K_{q-1}-saturated supergraph of g on the same vertex set that is
    reachable by adding edges without creating a K_q, deduplicated.

    Any such supergraph is reachable with edges added in a fixed order, since
    all intermediate graphs are its subgraphs and hence stay K_q-free.
    """
    if has_kclique(g, q):
        raise PreconditionError(f"graph already contains K_{q}")
    missing = list(non_edges(g))
    found: list[Graph] = []

    def rec(cur: Graph, start: int) -> None:
        saturated = True
        for i in range(start, len(missing)):
            u, v = missing[i]
            if cur.has_edge(u, v):
                continue
            if kernels.has_clique(cur.adj, cur.adj[u] & cur.adj[v], q - 2):
                continue  # this edge is no longer addable
            saturated = False
            rec(add_edge(cur, u, v), i + 1)
        if saturated and is_maximal_in_class(cur, q):
            found.append(cur)

    rec(g, 0)
    return dedup(found)


def populate(
    seed: Sequence[Graph],
    spec: ClassSpec,
    fixpoint: bool = False,
    validate: bool = True,
) -> list[Graph]:
    """One round (or the fixpoint) of: strip edges off known maximal class
    members while the class membership survives, then saturate everything
    found back up and keep the new maximal members.

    Output always contains the seed.  Every output graph is rechecked for
    class membership and maximality.
    """
    if validate:
        for idx, g in enumerate(seed):
            if not in_class(g, spec):
                raise ValidationError(idx, f"member of {spec}")
            if not is_maximal_in_class(g, spec.q):
                raise ValidationError(idx, "maximal in class")

    known: dict[bytes, Graph] = {}
    for g in dedup(seed):
        known[canonical_form(g)] = g

    frontier = list(known.values())
    while frontier:
        shrunk: dict[bytes, Graph] = {}
        for g in frontier:
            _strip_edges(g, spec, shrunk, set())
        new_maximal: list[Graph] = []
        for h in shrunk.values():
            for m in maximalize(h, spec.q):
                key = canonical_form(m)
                if key not in known and in_class(m, spec):
                    known[key] = m
                    new_maximal.append(m)
        for m in new_maximal:
            assert is_maximal_in_class(m, spec.q) and arrows(m, spec.target)
        frontier = new_maximal if fixpoint else []
    return [known[k] for k in sorted(known)]


def _strip_edges(g: Graph, spec: ClassSpec, acc: dict[bytes, Graph], seen: set) -> None:
    # depth-first edge removal while the graph keeps arrowing; every proper
    # subgraph reached is non-maximal (the removed edge is addable back)
    for u, v in list(g.edges()):
        h = remove_edge(g, u, v)
        lkey = (h.n, h.adj)
        if lkey in seen:
            continue
        seen.add(lkey)
        if arrows(h, spec.target):
            acc.setdefault(canonical_form(h), h)
            _strip_edges(h, spec, acc, seen)


def descend_vertices(graphs: Sequence[Graph], spec: ClassSpec) -> list[Graph]:
    """All single-vertex deletions that land in the target class, deduplicated."""
    out = []
    for g in graphs:
        for v in range(g.n):
            h = remove_vertices(g, 1 << v)
            if in_class(h, spec):
                out.append(h)
    return dedup(out)
