"""Seeded instance generators, class recognizers, and explicit constructions.

All randomness flows through the documented SplitMix64 stream, so any
instance is reproducible from (params, seed).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .bitset import bits, iter_bits, lowest_bit, mask_of
from .errors import HitmisError, SizeLimitError
from .geometry import ArcSet, DiskSet, IntervalSet
from .graph import Graph, bipartition, build_graph, connected_components
from .rng import SplitMix64


@dataclass(frozen=True)
class GenSpec:
    """Mirror of the CLI `gen` flags: kind, kind-specific params, seed."""

    kind: str
    params: dict = field(default_factory=dict)
    seed: int = 0


# --- random graphs -------------------------------------------------------

def gnp(n: int, p: Fraction, seed: int) -> Graph:
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.chance(p):
                edges.append((u, v))
    return build_graph(n, edges)


def random_chordal(n: int, density: Fraction, seed: int) -> Graph:
    """Iterative construction: each new vertex is joined to a clique of the
    current graph, grown one random common neighbor at a time while a
    density-biased coin keeps coming up heads.  The reversed insertion
    order is a perfect elimination ordering by construction."""
    if n < 1:
        raise HitmisError("random_chordal needs n >= 1")
    rng = SplitMix64(seed)
    adj = [0] * n
    for i in range(1, n):
        anchor = rng.below(i)
        clique = 1 << anchor
        cand = adj[anchor] & ((1 << i) - 1)
        while cand and rng.chance(density):
            members = bits(cand)
            u = members[rng.below(len(members))]
            clique |= 1 << u
            cand &= adj[u]
        for u in iter_bits(clique):
            adj[i] |= 1 << u
            adj[u] |= 1 << i
    return Graph(n, tuple(adj))


def random_bipartite(n: int, p: Fraction, seed: int) -> Graph:
    """Random bipartite graph: even/odd index split, cross edges iid."""
    rng = SplitMix64(seed)
    A = [v for v in range(n) if v % 2 == 0]
    B = [v for v in range(n) if v % 2 == 1]
    edges = []
    for a in A:
        for b in B:
            if rng.chance(p):
                edges.append((a, b))
    return build_graph(n, edges)


# --- random geometry -----------------------------------------------------

_GRID = 8  # rational coordinate granularity 1/8


def random_disks(n: int, seed: int, *, box: int = 12, rmin: int = 1,
                 rmax: int = 3, unit: bool = False) -> DiskSet:
    rng = SplitMix64(seed)
    disks = []
    for _ in range(n):
        cx = Fraction(rng.below(box * _GRID), _GRID)
        cy = Fraction(rng.below(box * _GRID), _GRID)
        if unit:
            r = Fraction(1)
        else:
            r = Fraction(rmin * _GRID + rng.below((rmax - rmin) * _GRID + 1), _GRID)
        disks.append((cx, cy, r))
    return DiskSet(tuple(disks))


def random_intervals(n: int, seed: int) -> IntervalSet:
    """Uniform random chord diagram: a random perfect pairing of the
    endpoint positions 0..2n-1."""
    rng = SplitMix64(seed)
    pos = list(range(2 * n))
    rng.shuffle(pos)
    ivs = []
    for i in range(n):
        a, b = pos[2 * i], pos[2 * i + 1]
        if a > b:
            a, b = b, a
        ivs.append((Fraction(a), Fraction(b)))
    return IntervalSet(tuple(ivs))


def random_arcs(n: int, seed: int) -> ArcSet:
    rng = SplitMix64(seed)
    pos = list(range(2 * n))
    rng.shuffle(pos)
    arcs = []
    for i in range(n):
        a = Fraction(pos[2 * i], 2 * n)
        b = Fraction(pos[2 * i + 1], 2 * n)
        arcs.append((a, (b - a) % 1))
    return ArcSet(tuple(arcs))


# --- explicit constructions ----------------------------------------------

def blowup(H: Graph, sizes: list[int]) -> Graph:
    """Replace vertex i by an independent block of sizes[i] vertices and
    every edge by a complete bipartite join of the blocks."""
    if len(sizes) != H.n:
        raise HitmisError("blowup sizes length must equal |V(H)|")
    if any(s < 1 for s in sizes):
        raise HitmisError("blowup sizes must be >= 1")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    n = starts[-1]
    edges = []
    for u in range(H.n):
        for v in iter_bits(H.adj[u] >> (u + 1)):
            w = u + 1 + v
            for a in range(starts[u], starts[u + 1]):
                for b in range(starts[w], starts[w + 1]):
                    edges.append((a, b))
    return build_graph(n, edges)


def cycle_graph(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_multipartite(sizes: list[int]) -> Graph:
    if any(s < 1 for s in sizes):
        raise HitmisError("part sizes must be >= 1")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for a in range(starts[i], starts[i + 1]):
                for b in range(starts[j], starts[j + 1]):
                    edges.append((a, b))
    return build_graph(starts[-1], edges)


def alon_pairs_graph(k: int) -> Graph:
    """Vertices are ordered pairs (i, j) of distinct elements of
    {1..2k}, listed lexicographically; (a,b) ~ (c,d) iff b = c or a = d."""
    if k < 1:
        raise HitmisError("alon_pairs_graph needs k >= 1")
    verts = [(i, j) for i in range(1, 2 * k + 1)
             for j in range(1, 2 * k + 1) if i != j]
    n = len(verts)
    edges = []
    for x in range(n):
        a, b = verts[x]
        for y in range(x + 1, n):
            c, d = verts[y]
            if b == c or a == d:
                edges.append((x, y))
    return build_graph(n, edges, labels=verts)


# --- recognizers ---------------------------------------------------------

def _mcs_order(G: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties to lowest index)."""
    weight = [0] * G.n
    order = []
    remaining = set(range(G.n))
    for _ in range(G.n):
        v = max(remaining, key=lambda u: (weight[u], -u))
        order.append(v)
        remaining.discard(v)
        for w in iter_bits(G.adj[v]):
            if w in remaining:
                weight[w] += 1
    return order


def is_chordal(G: Graph) -> bool:
    """MCS order reversed is a perfect elimination ordering iff chordal."""
    order = _mcs_order(G)
    peo = list(reversed(order))
    pos = {v: i for i, v in enumerate(peo)}
    for i, v in enumerate(peo):
        later = 0
        for w in iter_bits(G.adj[v]):
            if pos[w] > i:
                later |= 1 << w
        for u in iter_bits(later):
            if later & ~(G.adj[u] | (1 << u)):
                return False
    return True


def _induced_cycle_mask(G: Graph, S: int) -> bool:
    """True iff G[S] is a single cycle (all inner degrees 2, connected)."""
    if S.bit_count() < 3:
        return False
    comp = 0
    for v in iter_bits(S):
        if (G.adj[v] & S).bit_count() != 2:
            return False
        if comp == 0:
            comp = 1 << v
    frontier = comp
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= G.adj[u] & S
        frontier = nxt & ~comp
        comp |= frontier
    return comp == S


def is_even_hole_free(G: Graph, *, cap: int = 16) -> bool:
    """Exhaustive scan over vertex subsets for induced even cycles >= 4."""
    if G.n > cap:
        raise SizeLimitError(f"n={G.n} exceeds even-hole cap {cap}")
    for S in range(1, 1 << G.n):
        k = S.bit_count()
        if k >= 4 and k % 2 == 0 and _induced_cycle_mask(G, S):
            return False
    return True


def find_triangle(G: Graph) -> Optional[tuple[int, int, int]]:
    for u in range(G.n):
        for v in iter_bits(G.adj[u] >> (u + 1)):
            w = u + 1 + v
            common = G.adj[u] & G.adj[w] & ~((1 << (w + 1)) - 1)
            if common:
                return (u, w, lowest_bit(common))
    return None


def has_induced_p5(G: Graph) -> bool:
    """Depth-first search for an induced path on five vertices."""

    def extend(last: int, used: int, length: int) -> bool:
        if length == 5:
            return True
        for v in iter_bits(G.adj[last] & ~used):
            # v may touch only the path's last vertex
            if G.adj[v] & used & ~(1 << last):
                continue
            if extend(v, used | (1 << v), length + 1):
                return True
        return False

    for v in range(G.n):
        if extend(v, 1 << v, 1):
            return True
    return False


def vc_dimension(G: Graph, dmax: int, *, cap: int = 20) -> tuple[int, bool]:
    """Largest d <= dmax with a d-subset of V shattered by the open
    neighborhoods, plus a saturation flag (True when even a (dmax+1)-set
    is shattered, so the true dimension may exceed the returned value)."""
    if G.n > cap and dmax > 4:
        raise SizeLimitError(f"n={G.n} with dmax={dmax} exceeds VC caps")

    def shattered_exists(d: int) -> bool:
        if d == 0:
            return True
        all_patterns = (1 << (1 << d)) - 1
        for S in combinations(range(G.n), d):
            seen = 0
            for v in range(G.n):
                patt = 0
                for i, s in enumerate(S):
                    if (G.adj[v] >> s) & 1:
                        patt |= 1 << i
                seen |= 1 << patt
                if seen == all_patterns:
                    return True
        return False

    best = 0
    for d in range(1, dmax + 2):
        if d > G.n or not shattered_exists(d):
            break
        best = d
    return min(best, dmax), best > dmax


# --- Sumner structure for triangle-free P5-free graphs --------------------

@dataclass(frozen=True)
class SumnerStructure:
    kind: str  # "bipartite" | "c5_blowup" | "neither"
    parts: Optional[tuple[int, ...]] = None
    reason: Optional[str] = None


def _find_induced_c5(G: Graph) -> Optional[list[int]]:
    for S in combinations(range(G.n), 5):
        mask = mask_of(S)
        if _induced_cycle_mask(G, mask):
            # recover cyclic order starting at the lowest vertex
            start = S[0]
            order = [start]
            prev = -1
            cur = start
            for _ in range(4):
                nbrs = [w for w in iter_bits(G.adj[cur] & mask) if w != prev]
                prev, cur = cur, min(nbrs)
                order.append(cur)
            return order
    return None


def sumner_structure(G: Graph) -> SumnerStructure:
    """Classify a connected triangle-free induced-P5-free graph as
    bipartite or a C5 blowup, with an explicit witness partition."""
    if G.n == 0 or len(connected_components(G)) != 1:
        return SumnerStructure("neither", reason="not connected")
    if find_triangle(G) is not None:
        return SumnerStructure("neither", reason="contains a triangle")
    if has_induced_p5(G):
        return SumnerStructure("neither", reason="contains an induced P5")
    parts = bipartition(G)
    if parts is not None:
        return SumnerStructure("bipartite", parts=parts)
    cyc = _find_induced_c5(G)
    if cyc is None:
        return SumnerStructure("neither", reason="no induced C5 found")
    # classify every vertex by its adjacency pattern to the found C5
    blocks = [0] * 5
    for i, c in enumerate(cyc):
        blocks[i] |= 1 << c
    cyc_mask = mask_of(cyc)
    for v in range(G.n):
        if (cyc_mask >> v) & 1:
            continue
        patt = frozenset(i for i, c in enumerate(cyc) if G.has_edge(v, c))
        placed = False
        for i in range(5):
            if patt == {(i - 1) % 5, (i + 1) % 5}:
                blocks[i] |= 1 << v
                placed = True
                break
        if not placed:
            return SumnerStructure("neither", reason=f"vertex {v} fits no block")
    # verify the modular structure
    for i in range(5):
        for v in iter_bits(blocks[i]):
            if G.adj[v] & blocks[i]:
                return SumnerStructure("neither", reason=f"block {i} not independent")
            want = blocks[(i - 1) % 5] | blocks[(i + 1) % 5]
            if G.adj[v] != want:
                return SumnerStructure("neither", reason=f"vertex {v} breaks blowup adjacency")
    # canonical rotation/reflection: lexicographically least part sequence
    candidates = []
    for r in range(5):
        for step in (1, 4):
            seq = tuple(blocks[(r + step * i) % 5] for i in range(5))
            candidates.append(seq)
    best = min(candidates, key=lambda seq: tuple(tuple(bits(m)) for m in seq))
    return SumnerStructure("c5_blowup", parts=best)
