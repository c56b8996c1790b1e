"""Vertex arrowing: does every s-coloring of V(G) contain a monochromatic
a_i-clique in some color i?

Two deciders are provided and kept deliberately independent of each other:

* arrows_oracle — exhaustive coloring search with pruning, for any target on
  small graphs (n <= 14, s <= 4).  When the answer is no, the witness
  coloring is re-verified by a separate combinations-based check before it
  is returned.
* arrows_2r3 — exact specialized decider for targets (2,...,2,3) with r twos,
  usable at search scale.  It recurses on maximal independent sets: G arrows
  (2_r, 3) iff for every maximal independent set A the graph G - A arrows
  (2_{r-1}, 3); at r = 0 the question is whether a triangle is present.
  Restricting to maximal sets is sound because the first color class of any
  triangle-avoiding partition extends to a maximal independent set, and
  removing more vertices only makes the remainder easier to keep
  triangle-free.

Recursion results are memoized by the canonical form of the residual graph
(residuals repeat heavily across branches), behind a cheap exact-labeling
front cache.
"""

from __future__ import annotations

import itertools
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import kernels
from .canon import canonical_form
from .cliques import has_kclique, has_triangle, maximal_independent_sets
from .errors import SizeLimitError
from .graph import Graph, bits, join, mask_of, remove_vertices

ORACLE_MAX_VERTICES = 14
ORACLE_MAX_COLORS = 4


@dataclass(frozen=True)
class ArrowTarget:
    """A sorted tuple of clique sizes (a_1 <= ... <= a_s), all >= 2.

    Entries equal to 1 are dropped at construction: a color that only needs a
    1-clique is satisfied by any nonempty class, so it never constrains a
    coloring, and an all-ones target degenerates to requiring a vertex.
    """

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        given = tuple(entries)
        if any(a < 1 for a in given):
            raise ValueError("target entries must be positive")
        kept = tuple(sorted(a for a in given if a != 1))
        if not kept:
            raise ValueError("target reduces to the empty tuple")
        object.__setattr__(self, "entries", kept)

    @property
    def s(self) -> int:
        return len(self.entries)

    @property
    def m(self) -> int:
        """Order of the smallest complete graph that arrows this target."""
        return sum(a - 1 for a in self.entries) + 1

    @property
    def p(self) -> int:
        """Largest entry."""
        return self.entries[-1]

    @property
    def twos(self) -> int:
        """Number of entries equal to 2."""
        return sum(1 for a in self.entries if a == 2)

    def as_2r3(self) -> int | None:
        """r if the target is (2_r, 3) for some r >= 0, else None."""
        r = self.twos
        if self.entries == (2,) * r + (3,):
            return r
        return None

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.entries) + ")"


def target_is_valid(t: ArrowTarget, q: int) -> bool:
    """Existence of K_q-free graphs arrowing t: holds exactly when q > max entry."""
    return q > t.p


@dataclass(frozen=True)
class ClassSpec:
    """The class of n-vertex K_q-free graphs arrowing ``target``."""

    target: ArrowTarget
    q: int
    n: int

    def __post_init__(self):
        if not target_is_valid(self.target, self.q):
            raise ValueError(
                f"no K_{self.q}-free graph arrows {self.target}: need q > {self.target.p}"
            )

    def __str__(self) -> str:
        return f"H_v({','.join(map(str, self.target.entries))};{self.q};{self.n})"


# -- exhaustive oracle ----------------------------------------------------


def find_good_coloring(g: Graph, t: ArrowTarget) -> tuple[int, ...] | None:
    """A coloring (1-based color per vertex) with no monochromatic a_i-clique
    in color i, or None if every coloring has one."""
    if g.n > ORACLE_MAX_VERTICES:
        raise SizeLimitError(f"oracle capped at {ORACLE_MAX_VERTICES} vertices, got {g.n}")
    if t.s > ORACLE_MAX_COLORS:
        raise SizeLimitError(f"oracle capped at {ORACLE_MAX_COLORS} colors, got {t.s}")
    res = kernels.find_good_coloring(g.adj, g.n, t.entries)
    if res is None:
        return None
    return tuple(c + 1 for c in res)


def coloring_is_good(g: Graph, t: ArrowTarget, coloring: Sequence[int]) -> bool:
    """Combinations-based recheck that ``coloring`` defeats the target.

    Deliberately independent of the kernel clique search.
    """
    if len(coloring) != g.n:
        return False
    for i, a in enumerate(t.entries, start=1):
        cls = [v for v in range(g.n) if coloring[v] == i]
        for combo in itertools.combinations(cls, a):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                return False
    return True


def arrows_oracle(g: Graph, t: ArrowTarget) -> tuple[bool, tuple[int, ...] | None]:
    """(True, None) if g arrows t, else (False, verified witness coloring)."""
    witness = find_good_coloring(g, t)
    if witness is None:
        return True, None
    assert coloring_is_good(g, t, witness), "oracle produced an invalid witness"
    return False, witness


# -- specialized (2_r, 3) decider ------------------------------------------


class _BoundedCache:
    """Insert-ordered cache with FIFO eviction; value-identical entries make
    concurrent overwrites benign."""

    def __init__(self, maxsize: int):
        self.maxsize = maxsize
        self._data: OrderedDict = OrderedDict()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        val = self._data.get(key)
        if val is None:
            self.misses += 1
        else:
            self.hits += 1
        return val

    def put(self, key, value) -> None:
        if len(self._data) >= self.maxsize:
            self._data.popitem(last=False)
        self._data[key] = value

    def clear(self) -> None:
        self._data.clear()
        self.hits = self.misses = 0


_canon_cache = _BoundedCache(1 << 18)
_label_cache = _BoundedCache(1 << 18)


def clear_arrowing_cache() -> None:
    _canon_cache.clear()
    _label_cache.clear()


def set_arrowing_cache_size(maxsize: int) -> None:
    _canon_cache.maxsize = maxsize
    _label_cache.maxsize = maxsize


def arrows_2r3(g: Graph, r: int) -> bool:
    """Decide g arrows (2_r, 3) exactly, for any r >= 0."""
    if r < 0:
        raise ValueError("r must be >= 0")
    if not has_triangle(g):
        return False  # park every vertex in the triangle color
    if r == 0:
        return True
    # K_{r+3} forces the arrowing outright (pigeonhole over the color sizes)
    if has_kclique(g, r + 3):
        return True
    lkey = (g.n, g.adj, r)
    cached = _label_cache.get(lkey)
    if cached is not None:
        return cached == 1
    ckey = (canonical_form(g), r)
    cached = _canon_cache.get(ckey)
    if cached is not None:
        _label_cache.put(lkey, cached)
        return cached == 1
    result = 1
    for a in maximal_independent_sets(g):
        if not arrows_2r3(remove_vertices(g, a), r - 1):
            result = 0
            break
    _canon_cache.put(ckey, result)
    _label_cache.put(lkey, result)
    return result == 1


def find_bad_partition(g: Graph, r: int) -> tuple[list[int], int] | None:
    """A witness that g does not arrow (2_r, 3): r independent sets (vertex
    masks in g's labeling, possibly empty) whose removal leaves a
    triangle-free remainder.  None if g arrows."""
    if arrows_2r3(g, r):
        return None

    def rec(sub: Graph, ids: list[int], rr: int) -> tuple[list[int], int]:
        if not has_triangle(sub):
            return [0] * rr, mask_of(ids)
        for a in maximal_independent_sets(sub):
            rest = remove_vertices(sub, a)
            if not arrows_2r3(rest, rr - 1):
                kept = [ids[v] for v in range(sub.n) if not a >> v & 1]
                sets, rem = rec(rest, kept, rr - 1)
                return [mask_of(ids[v] for v in bits(a))] + sets, rem
        raise AssertionError("non-arrowing graph has no failing branch")

    sets, rem = rec(g, list(range(g.n)), r)
    assert bad_partition_is_valid(g, sets, rem), "invalid witness partition"
    return sets, rem


def bad_partition_is_valid(g: Graph, sets: Sequence[int], remainder: int) -> bool:
    """Recheck a witness partition by definition (no kernel calls)."""
    union = remainder
    for a in sets:
        if a & union:
            return False
        union |= a
        members = list(bits(a))
        if any(g.has_edge(u, v) for u, v in itertools.combinations(members, 2)):
            return False
    if union != g.vertex_mask:
        return False
    rest = list(bits(remainder))
    for combo in itertools.combinations(rest, 3):
        if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
            return False
    return True


def arrows(g: Graph, t: ArrowTarget) -> bool:
    """Dispatching decider: the specialized path for (2_r, 3) targets, the
    oracle for anything else within its caps."""
    r = t.as_2r3()
    if r is not None:
        return arrows_2r3(g, r)
    ok, _ = arrows_oracle(g, t)
    return ok


def in_class(g: Graph, spec: ClassSpec) -> bool:
    """Membership in H_v(target; q; n): order, clique bound and arrowing."""
    return g.n == spec.n and not has_kclique(g, spec.q) and arrows(g, spec.target)


def join_lift_check(g: Graph, t: ArrowTarget, k: int) -> bool:
    """Directly verify that K_k + g arrows (2_k, t...): the join of a complete
    graph onto an arrowing graph lifts each complete vertex into its own
    2-color.  Used as a consistency check, not as a proof shortcut."""
    if k < 0:
        raise ValueError("k must be >= 0")
    lifted = ArrowTarget((2,) * k + t.entries)
    h = join(Graph.complete(k), g)
    return arrows(h, lifted)


def mp_extremal_graph(t: ArrowTarget) -> Graph:
    """K_{m-p-1} + complement(C_{2p+1}), the minimum-order member of
    H_v(target; m) when m >= p + 1."""
    m, p = t.m, t.p
    if m < p + 1:
        raise ValueError("needs m >= p + 1")
    return join(Graph.complete(m - p - 1), Graph.cycle(2 * p + 1).complement())
