"""Exact-arithmetic geometric arrangements and their intersection graphs.

Everything runs on fractions.Fraction: closed-object conventions make
tangency semantically meaningful (tangent disks ARE adjacent), so there
are no epsilon comparisons anywhere.  The only irrational quantity that
ever appears is one square root inside the tangent-disk membership
predicate, and that comparison is resolved exactly by squaring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .bitset import iter_bits
from .errors import (GeneralPositionError, HitmisError, InternalGeometryError,
                     PreconditionError)
from .graph import Graph, induced_subgraph
from .mis import independence_number

Rat = Fraction


@dataclass(frozen=True)
class DiskSet:
    """Closed disks (cx, cy, r) with exact rational coordinates, r > 0."""

    disks: tuple[tuple[Rat, Rat, Rat], ...]

    def __post_init__(self):
        for cx, cy, r in self.disks:
            if r <= 0:
                raise HitmisError(f"disk radius {r} not positive")

    def __len__(self):
        return len(self.disks)


@dataclass(frozen=True)
class IntervalSet:
    """Open-circle chord model: intervals (l, r) with l < r and all 2n
    endpoint values pairwise distinct (general position)."""

    intervals: tuple[tuple[Rat, Rat], ...]

    def __post_init__(self):
        ends = []
        for l, r in self.intervals:
            if not l < r:
                raise GeneralPositionError(f"interval ({l},{r}) not increasing")
            ends += [l, r]
        if len(set(ends)) != len(ends):
            raise GeneralPositionError("coincident interval endpoints")

    def __len__(self):
        return len(self.intervals)


@dataclass(frozen=True)
class ArcSet:
    """Circular arcs (start, length) with angles as rationals in [0,1)."""

    arcs: tuple[tuple[Rat, Rat], ...]

    def __post_init__(self):
        ends = []
        for s, ln in self.arcs:
            if not (0 <= s < 1):
                raise HitmisError(f"arc start {s} outside [0,1)")
            if not (0 < ln < 1):
                raise HitmisError(f"arc length {ln} outside (0,1)")
            ends += [s, (s + ln) % 1]
        if len(set(ends)) != len(ends):
            raise GeneralPositionError("coincident arc endpoints")

    def __len__(self):
        return len(self.arcs)


# --- intersection graphs -------------------------------------------------

def disk_graph(D: DiskSet) -> Graph:
    """Closed-disk intersection graph: tangency counts as an edge."""
    n = len(D)
    adj = [0] * n
    for i in range(n):
        xi, yi, ri = D.disks[i]
        for j in range(i + 1, n):
            xj, yj, rj = D.disks[j]
            if (xi - xj) ** 2 + (yi - yj) ** 2 <= (ri + rj) ** 2:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def overlap_graph(S: IntervalSet) -> Graph:
    """Edges are proper overlaps: intersecting, neither nested in the other."""
    n = len(S)
    adj = [0] * n
    for i in range(n):
        li, ri = S.intervals[i]
        for j in range(i + 1, n):
            lj, rj = S.intervals[j]
            if (li < lj < ri < rj) or (lj < li < rj < ri):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def interval_graph(S: IntervalSet) -> Graph:
    """Edges whenever the closed intervals intersect at all."""
    n = len(S)
    adj = [0] * n
    for i in range(n):
        li, ri = S.intervals[i]
        for j in range(i + 1, n):
            lj, rj = S.intervals[j]
            if li <= rj and lj <= ri:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def _angle_in_arc(p: Rat, start: Rat, length: Rat) -> bool:
    return (p - start) % 1 <= length


def circular_arc_graph(A: ArcSet) -> Graph:
    """Closed circular arcs intersect iff one contains the other's start."""
    n = len(A)
    adj = [0] * n
    for i in range(n):
        si, li = A.arcs[i]
        for j in range(i + 1, n):
            sj, lj = A.arcs[j]
            if _angle_in_arc(sj, si, li) or _angle_in_arc(si, sj, lj):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


# --- disk structure ------------------------------------------------------

def larger_neighbor_independence(D: DiskSet, G: Graph, v: int) -> int:
    """alpha of G restricted to neighbors of v with radius >= rho(v).

    Guaranteed <= 5 for disk graphs: a disk cannot meet six pairwise
    disjoint disks that are all at least as large.
    """
    rv = D.disks[v][2]
    S = 0
    for u in iter_bits(G.adj[v]):
        if D.disks[u][2] >= rv:
            S |= 1 << u
    H, _ = induced_subgraph(G, S)
    return independence_number(H)


def _tan_half_angle_point(radius: Rat, t: Rat) -> tuple[Rat, Rat]:
    den = 1 + t * t
    return radius * (1 - t * t) / den, radius * 2 * t / den


def _piercing_points() -> tuple[tuple[Rat, Rat], ...]:
    """Origin plus ten points exactly on the radius-3/2 circle.

    The spokes sit within 1e-9 degrees of k*36: rational tan-half-angle
    parameters keep every later membership test exact, and the covering
    argument has ~0.26 distance slack at its worst case, so the tiny
    angular perturbation cannot break it.
    """
    r = Fraction(3, 2)
    tans = [
        Fraction(0),                      # 0
        Fraction(161643, 497486),         # ~36
        Fraction(46041, 63370),           # ~72
        Fraction(63370, 46041),           # ~108
        Fraction(497486, 161643),         # ~144
        None,                             # 180 exactly
        Fraction(-497486, 161643),        # ~216
        Fraction(-63370, 46041),          # ~252
        Fraction(-46041, 63370),          # ~288
        Fraction(-161643, 497486),        # ~324
    ]
    pts: list[tuple[Rat, Rat]] = [(Fraction(0), Fraction(0))]
    for t in tans:
        if t is None:
            pts.append((-r, Fraction(0)))
        else:
            pts.append(_tan_half_angle_point(r, t))
    return tuple(pts)


PIERCING_POINTS = _piercing_points()


def _le_times_sqrt(X: Rat, q: Rat, Y: Rat) -> bool:
    """Decide X*sqrt(q) <= Y exactly (q >= 0, all rational)."""
    if X <= 0:
        if Y >= 0:
            return True
        return X * X * q >= Y * Y
    if Y < 0:
        return False
    return X * X * q <= Y * Y


def _point_in_tangent_unit_disk(p: tuple[Rat, Rat], c: tuple[Rat, Rat],
                                r: Rat) -> bool:
    """Membership of p in the unit disk internally tangent to the disk
    (c, r) at the boundary point nearest the origin along the center line.

    Works in the v0-normalized frame (rho(v0) = 1, v0 centered at the
    origin); requires |c|^2 > (r-1)^2 so the tangency direction exists.
    """
    q = c[0] * c[0] + c[1] * c[1]
    m = r - 1
    dx, dy = p[0] - c[0], p[1] - c[1]
    X = dx * dx + dy * dy + m * m - 1
    Y = 2 * m * (-(dx * c[0] + dy * c[1]))
    return _le_times_sqrt(X, q, Y)


def unit_disk_contains(center: tuple[Rat, Rat], p: tuple[Rat, Rat]) -> bool:
    dx, dy = p[0] - center[0], p[1] - center[1]
    return dx * dx + dy * dy <= 1


def find_11_simplicial(D: DiskSet, G: Optional[Graph] = None
                       ) -> tuple[int, list[int]]:
    """The minimum-radius disk v0 and a partition of N(v0) into <= 11
    cliques, one per piercing point.

    Each neighbor's disk is replaced by a unit disk (v0-normalized)
    hugging the side of the original that faces v0; disks sharing a
    piercing point pairwise intersect, hence form cliques.  When a
    neighbor's disk swallows v0's disk whole the tangent construction
    would drift away, so that neighbor joins the origin class directly
    (its disk contains v0's own unit disk).  Every class is re-verified
    as a clique in G; failure raises InternalGeometryError because the
    construction proves it cannot happen.
    """
    if len(D) == 0:
        raise PreconditionError("find_11_simplicial on empty DiskSet")
    if G is None:
        G = disk_graph(D)
    v0 = min(range(len(D)), key=lambda i: (D.disks[i][2], i))
    x0, y0, r0 = D.disks[v0]
    classes = [0] * len(PIERCING_POINTS)
    for v in iter_bits(G.adj[v0]):
        cx, cy, r = D.disks[v]
        # normalize: v0 at origin with radius 1
        c = ((cx - x0) / r0, (cy - y0) / r0)
        rr = r / r0
        q = c[0] * c[0] + c[1] * c[1]
        if q <= (rr - 1) ** 2:
            classes[0] |= 1 << v  # D(v) contains v0's disk; origin pierces
            continue
        for idx, p in enumerate(PIERCING_POINTS):
            if _point_in_tangent_unit_disk(p, c, rr):
                classes[idx] |= 1 << v
                break
        else:
            raise InternalGeometryError(
                f"neighbor {v}: no piercing point in its tangent disk")
    partition = [m for m in classes if m]
    for m in partition:
        for u in iter_bits(m):
            if m & ~(G.adj[u] | (1 << u)):
                raise InternalGeometryError(
                    f"piercing class {m:#x} is not a clique at vertex {u}")
    return v0, partition


# --- chord cover structure ----------------------------------------------

def chord_cover_relation(S: IntervalSet) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(covers, directly_covers) masks: covers[a] holds b iff interval b
    is strictly nested inside interval a; directly_covers drops pairs
    with a third chord strictly between."""
    n = len(S)
    covers = [0] * n
    for a in range(n):
        la, ra = S.intervals[a]
        for b in range(n):
            if a == b:
                continue
            lb, rb = S.intervals[b]
            if la < lb and rb < ra:
                covers[a] |= 1 << b
    directly = []
    for a in range(n):
        shadow = 0
        for c in iter_bits(covers[a]):
            shadow |= covers[c]
        directly.append(covers[a] & ~shadow)
    return tuple(covers), tuple(directly)


# --- serialization -------------------------------------------------------

def _rat_from_json(v: Union[str, int]) -> Rat:
    if isinstance(v, str):
        if "/" in v:
            p, q = v.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(v))
    if isinstance(v, int):
        return Fraction(v)
    raise HitmisError(f"bad rational literal {v!r}")


def _rat_to_json(x: Rat) -> Union[str, int]:
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


def disks_to_json(D: DiskSet) -> str:
    return json.dumps({"disks": [
        {"cx": _rat_to_json(cx), "cy": _rat_to_json(cy), "r": _rat_to_json(r)}
        for cx, cy, r in D.disks]})


def disks_from_json(text: str) -> DiskSet:
    obj = json.loads(text)
    return DiskSet(tuple(
        (_rat_from_json(d["cx"]), _rat_from_json(d["cy"]), _rat_from_json(d["r"]))
        for d in obj["disks"]))


def intervals_to_json(S: IntervalSet) -> str:
    return json.dumps({"intervals": [
        [_rat_to_json(l), _rat_to_json(r)] for l, r in S.intervals]})


def intervals_from_json(text: str) -> IntervalSet:
    obj = json.loads(text)
    return IntervalSet(tuple(
        (_rat_from_json(l), _rat_from_json(r)) for l, r in obj["intervals"]))


def arcs_to_json(A: ArcSet) -> str:
    return json.dumps({"arcs": [
        [_rat_to_json(s), _rat_to_json(ln)] for s, ln in A.arcs]})


def arcs_from_json(text: str) -> ArcSet:
    obj = json.loads(text)
    return ArcSet(tuple(
        (_rat_from_json(s), _rat_from_json(ln)) for s, ln in obj["arcs"]))
