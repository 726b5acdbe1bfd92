"""Exact and greedy minimum hitting sets over a MISFamily.

The solver works on the set family alone, so abstract and geometric
instances share one engine.  The exact optimum is the lexicographically
least vertex set among the minimum-cardinality hitting sets, which keeps
golden tests bit-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bitset import bits, iter_bits, mask_of
from .errors import ExplosionError, HitmisError
from .mis import MISFamily

METHODS = frozenset({
    "exact", "greedy", "sparse-framework", "simplicial", "bipartite",
    "separator", "vc1", "two-order", "circle-layers", "min-degree",
    "fallback",
})


@dataclass(frozen=True)
class HitterReport:
    """A hitting set, how it was built, and the paper bound for that method."""

    set: int
    size: int
    method: str
    bound: Optional[Fraction]
    verified: bool

    def __post_init__(self):
        if self.method not in METHODS:
            raise HitmisError(f"unknown method tag {self.method!r}")
        if self.size != self.set.bit_count():
            raise HitmisError("size field disagrees with set")


def make_report(T: int, method: str, bound: Optional[Fraction],
                verified: bool) -> HitterReport:
    return HitterReport(T, T.bit_count(), method, bound, verified)


def verify_hitting(fam: MISFamily, T: int) -> bool:
    """True iff T meets every maximum independent set in the family."""
    if fam.alpha == 0:
        return True  # n = 0 convention: nothing to hit
    return all(T & s for s in fam.sets)


def _reduce(sets: list[int]) -> list[int]:
    """Drop duplicate sets and supersets of other sets (hitting the subset
    hits the superset)."""
    uniq = sorted(set(sets), key=lambda s: s.bit_count())
    kept: list[int] = []
    for s in uniq:
        if not any(k & s == k for k in kept):
            kept.append(s)
    return kept


def _greedy_size(sets: list[int], allowed: int) -> int:
    """Size of the greedy cover; infinity substitute when infeasible."""
    remaining = list(sets)
    count = 0
    while remaining:
        score: dict[int, int] = {}
        for s in remaining:
            for v in iter_bits(s & allowed):
                score[v] = score.get(v, 0) + 1
        if not score:
            return 1 << 60
        best = max(score.items(), key=lambda kv: (kv[1], -kv[0]))[0]
        remaining = [s for s in remaining if not (s >> best) & 1]
        count += 1
    return count


def _disjoint_lower_bound(sets: list[int]) -> int:
    """Greedy maximum pairwise-disjoint subfamily size."""
    used = 0
    count = 0
    for s in sorted(sets, key=lambda s: s.bit_count()):
        if s & used == 0:
            used |= s
            count += 1
    return count


def _min_hit_size(sets: list[int], allowed: int) -> int:
    """Exact minimum number of vertices from `allowed` hitting all sets."""
    sets = _reduce(sets)
    if any(s & allowed == 0 for s in sets):
        return 1 << 60
    best = _greedy_size(sets, allowed)

    def bnb(remaining: list[int], chosen: int) -> None:
        nonlocal best
        if not remaining:
            if chosen < best:
                best = chosen
            return
        if chosen + _disjoint_lower_bound(remaining) >= best:
            return
        # branch on the set with fewest allowed vertices
        sel = min(remaining, key=lambda s: (s & allowed).bit_count())
        for v in iter_bits(sel & allowed):
            rest = [s for s in remaining if not (s >> v) & 1]
            bnb(rest, chosen + 1)

    bnb(sets, 0)
    return best


def min_hitting_set(fam: MISFamily, *, max_sets: int = 10**5) -> HitterReport:
    """Exact minimum hitting set, lexicographically least among optima.

    Two phases: branch and bound for the optimum size k (lower bound:
    greedy maximum disjoint subfamily), then greedy lexicographic
    reconstruction position by position, each step feasibility-checked
    with the same solver restricted to larger vertex indices.
    """
    if len(fam.sets) > max_sets:
        raise ExplosionError(f"family of {len(fam.sets)} sets exceeds cap")
    if fam.alpha == 0:
        return make_report(0, "exact", Fraction(0), True)
    full = (1 << fam.n) - 1
    k = _min_hit_size(list(fam.sets), full)
    T = 0
    remaining = list(fam.sets)
    start = 0
    for pos in range(k):
        placed = False
        for v in range(start, fam.n):
            rest = [s for s in remaining if not (s >> v) & 1]
            allowed = full & ~((1 << (v + 1)) - 1)
            if _min_hit_size(rest, allowed) <= k - pos - 1:
                T |= 1 << v
                remaining = rest
                start = v + 1
                placed = True
                break
        if not placed:  # cannot happen if phase 1 is correct
            raise HitmisError("lexicographic reconstruction failed")
    return make_report(T, "exact", Fraction(k), verify_hitting(fam, T))


def greedy_hitting_set(fam: MISFamily) -> HitterReport:
    """Pick the vertex covering the most unhit sets (lowest index on ties)."""
    if not fam.sets:
        raise HitmisError("greedy_hitting_set on empty family")
    if fam.alpha == 0:
        return make_report(0, "greedy", None, True)
    remaining = list(fam.sets)
    T = 0
    while remaining:
        count: dict[int, int] = {}
        for s in remaining:
            for v in iter_bits(s):
                count[v] = count.get(v, 0) + 1
        best = max(count.items(), key=lambda kv: (kv[1], -kv[0]))[0]
        T |= 1 << best
        remaining = [s for s in remaining if not (s >> best) & 1]
    return make_report(T, "greedy", None, True)


# --- serialization -------------------------------------------------------

def report_to_json(r: HitterReport) -> str:
    return json.dumps({
        "method": r.method,
        "size": r.size,
        "set": bits(r.set),
        "bound": None if r.bound is None else f"{r.bound.numerator}/{r.bound.denominator}",
        "verified": r.verified,
    })


def report_from_json(text: str) -> HitterReport:
    obj = json.loads(text)
    bound = None
    if obj.get("bound") is not None:
        p, q = obj["bound"].split("/")
        bound = Fraction(int(p), int(q))
    return make_report(mask_of(obj["set"]), obj["method"], bound, obj["verified"])
