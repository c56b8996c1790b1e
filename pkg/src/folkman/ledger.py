"""Bound records for vertex Folkman numbers and their propagation rules.

A record is either concrete (one target and forbidden clique order, integer
bounds) or a one-parameter family whose upper bound is an affine expression
in the family parameter.  Closure applies:

* exact-large-q: q >= m + 1 gives F_v(target; q) = m,
* exact-q-equals-m: q = m >= p + 1 gives F_v(target; m) = m + p,
* complete-join lift: an upper bound U on F_v(2,2,2,3; 4) gives
  F_v(2_r, 3; r + 1) <= U + r - 3 for every r >= 3 (prepend K_{r-3} to a
  witness, one new 2 per joined vertex),
* triple-drop: an upper bound U on F_v(2,3,3; 4) gives
  F_v(a_1..a_s; m - 2) <= U + m - 6 whenever max a_i = 3 and m >= 6.

Derived records carry the rule name and the record they came from.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrowing import ArrowTarget


@dataclass(frozen=True)
class BoundRecord:
    """Bounds for one concrete class F_v(target; q)."""

    target: ArrowTarget
    q: int
    lower: int | None
    upper: int | None
    provenance: str

    def __post_init__(self):
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(
                f"contradictory record for F_v({self.target};{self.q}): "
                f"{self.lower} > {self.upper}"
            )

    def describe(self) -> str:
        lo = "?" if self.lower is None else str(self.lower)
        hi = "?" if self.upper is None else str(self.upper)
        ts = ",".join(map(str, self.target.entries))
        return f"{lo} <= F_v({ts};{self.q}) <= {hi}  [{self.provenance}]"


@dataclass(frozen=True)
class FamilyBound:
    """A parametric upper bound over an infinite family of classes."""

    family: str  # human-readable family description
    parameter: str  # "r" or "m"
    lower_param: int  # smallest parameter value covered
    offset: int  # upper bound = parameter + offset
    provenance: str

    def describe(self) -> str:
        return (
            f"{self.family} <= {self.parameter}+{self.offset} "
            f"for {self.parameter} >= {self.lower_param}  [{self.provenance}]"
        )


def exact_bounds(target: ArrowTarget, q: int) -> BoundRecord | None:
    """The two closed forms: q >= m+1 pins F_v at m; q = m >= p+1 pins it at m+p."""
    m, p = target.m, target.p
    if q >= m + 1:
        return BoundRecord(target, q, m, m, "exact: q >= m+1 so the complete graph K_m is optimal")
    if q == m and m >= p + 1:
        return BoundRecord(
            target, q, m + p, m + p,
            "exact: q = m, witness K_{m-p-1} joined to the complement of C_{2p+1}",
        )
    return None


_CORNERSTONE = ArrowTarget((2, 2, 2, 3))
_TRIPLE = ArrowTarget((2, 3, 3))


def close_records(records: list[BoundRecord]) -> tuple[list[BoundRecord], list[FamilyBound]]:
    """Propagate the input records through the rules; derived family bounds
    keep only the best (smallest) offset per family."""
    families: dict[str, FamilyBound] = {}
    for rec in records:
        if rec.upper is None:
            continue
        if rec.target == _CORNERSTONE and rec.q == 4:
            fb = FamilyBound(
                family="F_v(2_r,3;r+1)",
                parameter="r",
                lower_param=3,
                offset=rec.upper - 3,
                provenance=f"complete-join lift from F_v(2,2,2,3;4) <= {rec.upper}",
            )
            prev = families.get(fb.family)
            if prev is None or fb.offset < prev.offset:
                families[fb.family] = fb
        if rec.target == _TRIPLE and rec.q == 4:
            fb = FamilyBound(
                family="F_v(a_1..a_s;m-2) with max a_i = 3",
                parameter="m",
                lower_param=6,
                offset=rec.upper - 6,
                provenance=f"triple-drop rule from F_v(2,3,3;4) <= {rec.upper}",
            )
            prev = families.get(fb.family)
            if prev is None or fb.offset < prev.offset:
                families[fb.family] = fb
    return list(records), sorted(families.values(), key=lambda f: f.family)


def evaluate(target: ArrowTarget, q: int, families: list[FamilyBound] | None = None) -> BoundRecord:
    """Best known bounds for one concrete class from the exact formulas plus
    any applicable derived family bounds."""
    if q <= target.p:
        raise ValueError(f"no K_{q}-free graph arrows {target}: need q > {target.p}")
    exact = exact_bounds(target, q)
    if exact is not None:
        return exact
    # fewer than m vertices always admit a partition into classes of size a_i - 1
    lower: int | None = target.m
    upper: int | None = None
    prov = ["trivial lower: m vertices are necessary"]
    for fb in families or ():
        if fb.parameter == "r":
            r = target.as_2r3()
            if r is not None and q == r + 1 and r >= fb.lower_param:
                cand = r + fb.offset
                if upper is None or cand < upper:
                    upper = cand
                    prov.append(fb.provenance)
        elif fb.parameter == "m":
            m = target.m
            if target.p == 3 and q == m - 2 and m >= max(6, fb.lower_param):
                cand = m + fb.offset
                if upper is None or cand < upper:
                    upper = cand
                    prov.append(fb.provenance)
    return BoundRecord(target, q, lower, upper, "; ".join(prov))
