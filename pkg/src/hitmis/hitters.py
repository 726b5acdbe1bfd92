"""Constructive hitting-set procedures, each mirrored from a proof.

Every hitter returns a HitterReport whose `verified` flag is the result
of checking the output against the complete MIS family, never an
assumption.  Asymptotic constants are meaningless at desk scale, so the
procedures carry explicit clamps (recorded in their traces) wherever a
proof-prescribed quantity degenerates below 1 or above its universe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .bitset import bits, iter_bits, lowest_bit, set_key
from .errors import (HitmisError, InvalidCertificateError, PreconditionError,
                     SizeLimitError, TheoremViolationError)
from .generators import find_triangle, sumner_structure, vc_dimension
from .graph import (Graph, bipartition, closed_neighborhood, complement,
                    connected_components, induced_subgraph, min_degree_vertex)
from .hitting import HitterReport, make_report, verify_hitting
from .mis import MISFamily, enumerate_mis, independence_number


@dataclass
class SparseFrameworkTrace:
    """Execution record of the locally-sparse framework run."""

    s: int
    a: float
    b: float
    delta: float
    sequence: list[int] = field(default_factory=list)
    W: int = 0
    branch: str = ""  # "low-degree" | "C-neighborhood"
    C: Optional[int] = None
    clamps: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "s": self.s, "a": self.a, "b": self.b, "delta": self.delta,
            "sequence_sizes": [m.bit_count() for m in self.sequence],
            "w_size": self.W.bit_count(), "branch": self.branch,
            "c_size": None if self.C is None else self.C.bit_count(),
            "clamps": self.clamps,
        }


def locally_sparse_hitter(
        G: Graph, fam: MISFamily, s: int, *,
        a_override: Optional[float] = None,
        b_ratio: Fraction = Fraction(98, 100),
) -> tuple[HitterReport, SparseFrameworkTrace]:
    """Hitting set for graphs whose MIS symmetric differences are sparse
    (every pair satisfies e(G[I1 xor I2]) <= s * |I1 xor I2|).

    Runs the size-5sn/log n argument as an algorithm: greedily select
    maximum independent sets while each adds more than delta*n/(b*k) new
    vertices; if they exhaust V, the minimum-degree closed neighborhood
    hits everything, otherwise a low-cross-degree subset C of the first
    selected set together with its neighbors inside the union does.
    """
    if not fam.sets:
        raise PreconditionError("locally_sparse_hitter needs a family")
    if G.n < 2:
        raise PreconditionError("locally_sparse_hitter needs n >= 2")
    if s < 1:
        raise PreconditionError("sparsity constant s must be >= 1")
    n = G.n
    a = float(a_override) if a_override is not None else 5.0 * s
    b = float(b_ratio) * a
    delta = a / math.log2(n)
    trace = SparseFrameworkTrace(s=s, a=a, b=b, delta=delta)

    W = 0
    k = 1
    while True:
        threshold = delta * n / (b * k)
        best_set, best_gain = None, 0
        for I in fam.sets:
            gain = (I & ~W).bit_count()
            if gain > best_gain:
                best_set, best_gain = I, gain
        if best_set is None or best_gain <= threshold:
            break
        trace.sequence.append(best_set)
        W |= best_set
        k += 1
    if not trace.sequence:
        # alpha <= delta*n/b at desk scale: force the first set in anyway
        # (every MIS has size alpha, so lex-least is the coverage tie-break)
        first = fam.sets[0]
        trace.sequence.append(first)
        W |= first
        trace.clamps.append("forced-I1")
    trace.W = W

    full = (1 << n) - 1
    if W == full:
        v, d = min_degree_vertex(G)
        trace.branch = "low-degree"
        T = closed_neighborhood(G, v)
        report = make_report(T, "min-degree", Fraction(d + 1),
                             verify_hitting(fam, T))
        return report, trace

    trace.branch = "C-neighborhood"
    t = len(trace.sequence)
    I1 = trace.sequence[0]
    rest_union = 0
    for I in trace.sequence[1:]:
        rest_union |= I
    size_goal = math.ceil(delta * n / (4 * s * max(t - 1, 1)))
    clamped = min(max(size_goal, 1), I1.bit_count())
    if clamped != size_goal:
        trace.clamps.append(f"|C| {size_goal} clamped to {clamped}")
    members = sorted(bits(I1),
                     key=lambda v: ((G.adj[v] & rest_union).bit_count(), v))
    C = 0
    for v in members[:clamped]:
        C |= 1 << v
    trace.C = C
    NC = 0
    for v in iter_bits(C):
        NC |= G.adj[v] & W
    T = C | (NC & ~C)
    bound = Fraction(max(math.ceil(5 * s * n / math.log2(n)), 1))
    report = make_report(T, "sparse-framework", bound, verify_hitting(fam, T))
    return report, trace


def simplicial_hitter(G: Graph, v: int, cliques: list[int],
                      fam: Optional[MISFamily] = None) -> HitterReport:
    """Closed neighborhood of a gamma-simplicial vertex.

    `cliques` must partition N(v) and each part must be a clique, else
    InvalidCertificateError.  The closed neighborhood of any vertex hits
    every maximum independent set, so without a family the report is
    marked verified on that ground; with one, it is checked against it.
    """
    union = 0
    for m in cliques:
        if m & union:
            raise InvalidCertificateError("clique classes overlap")
        union |= m
        for u in iter_bits(m):
            if m & ~(G.adj[u] | (1 << u)):
                raise InvalidCertificateError(f"class {m:#x} not a clique")
    if union != G.adj[v]:
        raise InvalidCertificateError("classes do not partition N(v)")
    omega = independence_number(complement(G), cap=max(40, G.n))
    bound = Fraction(sum(min(m.bit_count(), omega) for m in cliques) + 1)
    T = closed_neighborhood(G, v)
    verified = verify_hitting(fam, T) if fam is not None else True
    return make_report(T, "simplicial", bound, verified)


def bipartite_hitter(G: Graph, fam: MISFamily) -> HitterReport:
    """Size <= 2 hitter for bipartite graphs.

    Unbalanced side (alpha > n/2): Hajnal forces a common vertex of all
    maximum independent sets; return the lowest.  Balanced: Hall gives a
    perfect matching; both endpoints of its lexicographically least edge
    hit everything.
    """
    parts = bipartition(G)
    if parts is None:
        raise PreconditionError("graph is not bipartite")
    if 2 * fam.alpha > G.n:
        inter = fam.intersection_mask()
        if inter == 0:
            raise TheoremViolationError("Hajnal intersection empty with alpha > n/2")
        T = 1 << lowest_bit(inter)
        return make_report(T, "bipartite", Fraction(1), verify_hitting(fam, T))
    A, B = parts
    match = _max_bipartite_matching(G, A, B)
    if len(match) * 2 != G.n:
        raise TheoremViolationError("no perfect matching in balanced bipartite case")
    a, b = min((min(e), max(e)) for e in match)
    T = (1 << a) | (1 << b)
    return make_report(T, "bipartite", Fraction(2), verify_hitting(fam, T))


def _max_bipartite_matching(G: Graph, A: int, B: int) -> list[tuple[int, int]]:
    """Kuhn's augmenting paths, vertices processed in index order."""
    mate: dict[int, int] = {}

    def try_augment(a: int, visited: set[int]) -> bool:
        for b in iter_bits(G.adj[a] & B):
            if b in visited:
                continue
            visited.add(b)
            if b not in mate or try_augment(mate[b], visited):
                mate[b] = a
                return True
        return False

    for a in bits(A):
        try_augment(a, set())
    return sorted((a, b) for b, a in mate.items())


def vc1_hitter(G: Graph, fam: MISFamily) -> HitterReport:
    """max(n/alpha, 3)-size hitter for graphs of VC-dimension at most one.

    Triangle-free components are bipartite or C5 blowups (Sumner); with a
    triangle anywhere, all maximum independent sets are pairwise disjoint
    and a transversal works.
    """
    d, saturated = vc_dimension(G, 1)
    if saturated:
        raise PreconditionError("VC-dimension exceeds 1")
    bound = Fraction(max(math.ceil(G.n / fam.alpha) if fam.alpha else 0, 3))

    if find_triangle(G) is not None:
        used = 0
        for I in fam.sets:
            if I & used:
                raise TheoremViolationError(
                    "maximum independent sets not pairwise disjoint despite triangle")
            used |= I
        T = 0
        for I in fam.sets:
            T |= 1 << lowest_bit(I)
        return make_report(T, "vc1", bound, verify_hitting(fam, T))

    candidates = []
    for comp in connected_components(G):
        H, back = induced_subgraph(G, comp)
        fam_H = enumerate_mis(H, cap=max(25, H.n))
        st = sumner_structure(H)
        if st.kind == "bipartite":
            sub = bipartite_hitter(H, fam_H)
            T = _map_back(sub.set, back)
        elif st.kind == "c5_blowup":
            T = _map_back(_c5_blowup_hitter(st.parts), back)
        else:
            raise TheoremViolationError(
                f"Sumner classification failed: {st.reason}")
        candidates.append(T)
    T = min(candidates, key=lambda t: (t.bit_count(), set_key(t)))
    return make_report(T, "vc1", bound, verify_hitting(fam, T))


def _map_back(mask: int, back: tuple[int, ...]) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << back[i]
    return out


def _c5_blowup_hitter(parts: tuple[int, ...]) -> int:
    """Hitter inside one C5-blowup component (local vertex indices).

    Maximum independent sets are unions of non-adjacent part pairs of
    maximum total size.  If some pair is strictly smaller, every MIS
    fully contains one of the two parts opposite it; otherwise all parts
    are equal and one vertex in each of three consecutive parts meets
    every pair.
    """
    pair_sizes = [(parts[i] | parts[(i + 2) % 5]).bit_count() for i in range(5)]
    biggest = max(pair_sizes)
    if min(pair_sizes) < biggest:
        i = pair_sizes.index(min(pair_sizes))
        u = lowest_bit(parts[(i + 3) % 5])
        v = lowest_bit(parts[(i + 4) % 5])
        return (1 << u) | (1 << v)
    return ((1 << lowest_bit(parts[0])) | (1 << lowest_bit(parts[1]))
            | (1 << lowest_bit(parts[2])))


def balanced_separator(G: Graph, *, cap: int = 20) -> int:
    """Minimum vertex set whose removal leaves components of size at most
    floor(2n/3); exhaustive by size, lexicographically least among minima."""
    if G.n > cap:
        raise SizeLimitError(f"n={G.n} exceeds separator cap {cap}")
    limit = (2 * G.n) // 3

    def ok(S: int) -> bool:
        H, _ = induced_subgraph(G, ((1 << G.n) - 1) & ~S)
        return all(c.bit_count() <= limit for c in connected_components(H))

    for k in range(G.n + 1):
        for combo in combinations(range(G.n), k):
            S = 0
            for v in combo:
                S |= 1 << v
            if ok(S):
                return S
    raise HitmisError("unreachable: V itself is always a separator")


def separator_hitter(G: Graph, fam: MISFamily, *, cap: int = 20) -> HitterReport:
    """Recursive separator hitter: a maximum independent set either meets
    the separator or restricts to a maximum independent set of every
    component, so it suffices to recurse into one (the smallest)."""
    if G.n > cap:
        raise SizeLimitError(f"n={G.n} exceeds separator cap {cap}")

    def recurse(H: Graph) -> int:
        if H.n <= 2:
            return (1 << H.n) - 1
        S = balanced_separator(H, cap=cap)
        rest, back_h = induced_subgraph(H, ((1 << H.n) - 1) & ~S)
        comps = connected_components(rest)
        smallest = min(comps, key=lambda c: (c.bit_count(), set_key(c)))
        sub, back_r = induced_subgraph(rest, smallest)
        inner = recurse(sub)
        # map twice: sub -> rest -> H
        return S | _map_back(_map_back(inner, back_r), back_h)

    T = recurse(G)
    return make_report(T, "separator", None, verify_hitting(fam, T))


def circular_arc_prune(G: Graph, A, fam: MISFamily) -> int:
    """Vertices with >= 4 neighbors inside the lexicographically least MIS;
    such vertices can never lie in any maximum independent set, so the
    result must be contained in the family's residual."""
    I = fam.sets[0]
    P = 0
    for v in range(G.n):
        if (I >> v) & 1:
            continue
        if (G.adj[v] & I).bit_count() >= 4:
            P |= 1 << v
    if P & ~fam.residual:
        raise TheoremViolationError(
            "pruned vertex lies in some maximum independent set",
            trace={"pruned": bits(P), "residual": bits(fam.residual)})
    return P


def min_degree_hitter(G: Graph, fam: MISFamily) -> HitterReport:
    """Closed neighborhood of a minimum-degree vertex (delta(G)+1 bound)."""
    v, d = min_degree_vertex(G)
    T = closed_neighborhood(G, v)
    return make_report(T, "min-degree", Fraction(d + 1), verify_hitting(fam, T))
