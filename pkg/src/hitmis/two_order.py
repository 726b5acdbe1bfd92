"""Two-partial-order incomparability framework and its circle instantiation.

A 2-incomparable structure is a graph plus strict partial orders "sub"
(containment) and "prec" (precedence) whose double-incomparability is
exactly adjacency, subject to compatibility axioms.  Overlap graphs of
intervals instantiate it with nesting and left-of.  The layered hitter
and the weak cover-coloring hitter both color a vertex by how many
members of a maximum independent set it contains; that count is
independent of the chosen set, which is asserted (not assumed) here.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .bitset import bits, iter_bits, lowest_bit, mask_of
from .errors import PreconditionError, TheoremViolationError
from .geometry import IntervalSet, chord_cover_relation, overlap_graph
from .graph import Graph, closed_neighborhood, min_degree_vertex
from .hitting import HitterReport, make_report, min_hitting_set, verify_hitting
from .mis import MISFamily


@dataclass(frozen=True)
class TwoOrderStructure:
    """Ground set 0..n-1 with strict relations stored as up-set masks:
    bit b of sub_up[a] means a sub b, likewise prec_up.  The graph is
    derived from double incomparability unless supplied explicitly (only
    useful for constructing deliberate counterexamples in tests)."""

    n: int
    sub_up: tuple[int, ...]
    prec_up: tuple[int, ...]
    graph: Graph

    @property
    def sub_down(self) -> tuple[int, ...]:
        return _transpose(self.n, self.sub_up)

    @property
    def prec_down(self) -> tuple[int, ...]:
        return _transpose(self.n, self.prec_up)


def _transpose(n: int, up: tuple[int, ...]) -> tuple[int, ...]:
    down = [0] * n
    for a in range(n):
        for b in iter_bits(up[a]):
            down[b] |= 1 << a
    return tuple(down)


def _derived_graph(n: int, sub_up, prec_up) -> Graph:
    sub_down = _transpose(n, sub_up)
    prec_down = _transpose(n, prec_up)
    adj = [0] * n
    for a in range(n):
        comparable = (sub_up[a] | sub_down[a] | prec_up[a] | prec_down[a])
        adj[a] = (((1 << n) - 1) & ~comparable) & ~(1 << a)
    return Graph(n, tuple(adj))


def make_two_order(n: int, sub_pairs, prec_pairs,
                   graph: Optional[Graph] = None) -> TwoOrderStructure:
    sub_up = [0] * n
    prec_up = [0] * n
    for a, b in sub_pairs:
        sub_up[a] |= 1 << b
    for a, b in prec_pairs:
        prec_up[a] |= 1 << b
    sub_up, prec_up = tuple(sub_up), tuple(prec_up)
    if graph is None:
        graph = _derived_graph(n, sub_up, prec_up)
    return TwoOrderStructure(n, sub_up, prec_up, graph)


def validate_two_order(T: TwoOrderStructure) -> list[tuple[str, tuple]]:
    """Empty list iff both relations are strict partial orders and the
    five compatibility axioms hold; otherwise each violation names the
    axiom and a witness tuple."""
    out: list[tuple[str, tuple]] = []
    n = T.n
    for name, up in (("sub", T.sub_up), ("prec", T.prec_up)):
        down = _transpose(n, up)
        for a in range(n):
            if (up[a] >> a) & 1:
                out.append((f"{name}-irreflexive", (a,)))
            both = up[a] & down[a]
            if both:
                out.append((f"{name}-antisymmetric", (a, lowest_bit(both))))
            for b in iter_bits(up[a]):
                missing = up[b] & ~up[a]
                if missing:
                    out.append((f"{name}-transitive", (a, b, lowest_bit(missing))))
    sub_down, prec_down = T.sub_down, T.prec_down
    for a in range(n):
        for b in iter_bits(T.sub_up[a]):
            if ((T.prec_up[a] | prec_down[a]) >> b) & 1:
                out.append(("sub-implies-prec-incomparable", (a, b)))
        for b in iter_bits(T.prec_up[a]):
            if ((T.sub_up[a] | sub_down[a]) >> b) & 1:
                out.append(("prec-implies-sub-incomparable", (a, b)))
            # c sub a  =>  c prec b
            bad = sub_down[a] & ~prec_down[b]
            if bad:
                out.append(("prec-lifts-down-left", (a, b, lowest_bit(bad))))
            # c sub b  =>  a prec c
            bad = sub_down[b] & ~T.prec_up[a]
            if bad:
                out.append(("prec-lifts-down-right", (a, b, lowest_bit(bad))))
    derived = _derived_graph(n, T.sub_up, T.prec_up)
    for a in range(n):
        diff = derived.adj[a] ^ T.graph.adj[a]
        if diff:
            out.append(("edge-iff-double-incomparable", (a, lowest_bit(diff))))
    return out


def circle_to_two_order(S: IntervalSet) -> TwoOrderStructure:
    """Overlap-graph instantiation: sub is strict nesting, prec is
    disjoint left-of."""
    n = len(S)
    sub = []
    prec = []
    for a in range(n):
        la, ra = S.intervals[a]
        for b in range(n):
            if a == b:
                continue
            lb, rb = S.intervals[b]
            if lb < la and ra < rb:
                sub.append((a, b))
            if ra < lb:
                prec.append((a, b))
    T = make_two_order(n, sub, prec)
    assert T.graph.adj == overlap_graph(S).adj
    return T


def k_intersecting_value(T: TwoOrderStructure) -> int:
    """Max over vertices x of the longest prec-chain inside N(x)."""
    best = 0
    prec_down = T.prec_down
    for x in range(T.n):
        nbhd = T.graph.adj[x]
        if not nbhd:
            continue
        memo: dict[int, int] = {}

        def depth(v: int) -> int:
            if v in memo:
                return memo[v]
            memo[v] = 1 + max((depth(u) for u in iter_bits(prec_down[v] & nbhd)),
                              default=0)
            return memo[v]

        best = max(best, max(depth(v) for v in iter_bits(nbhd)))
    return best


@dataclass(frozen=True)
class CoverColoring:
    """Global containment-count coloring: colors[x] is None for residual
    vertices; layers[i] is the mask of color-i vertices; z_sets / m_sets
    are per-MIS zero-color sets (local count, global layer)."""

    colors: tuple[Optional[int], ...]
    layers: tuple[int, ...]
    residual: int
    z_sets: tuple[int, ...]
    m_sets: tuple[int, ...]


def cover_coloring(source: Union[TwoOrderStructure, IntervalSet],
                   fam: MISFamily) -> CoverColoring:
    """Color each covered vertex by |{y in I : y sub x}| for the lex-least
    MIS I containing x, then assert the count agrees across every MIS
    containing x (well-definedness is a theorem for valid structures;
    disagreement raises TheoremViolationError)."""
    if isinstance(source, IntervalSet):
        sub_down = chord_cover_relation(source)[0]
        n = len(source)
    else:
        sub_down = source.sub_down
        n = source.n
    colors: list[Optional[int]] = [None] * n
    for x in range(n):
        for I in fam.sets:
            if not (I >> x) & 1:
                continue
            c = (I & sub_down[x]).bit_count()
            if colors[x] is None:
                colors[x] = c
            elif colors[x] != c:
                raise TheoremViolationError(
                    f"vertex {x} colored {colors[x]} and {c} by different sets",
                    trace={"vertex": x, "colors": (colors[x], c)})
    layers = [0] * max(fam.alpha, 1)
    residual = 0
    for x in range(n):
        if colors[x] is None:
            residual |= 1 << x
        else:
            layers[colors[x]] |= 1 << x
    z_sets = []
    m_sets = []
    for I in fam.sets:
        z = 0
        for v in iter_bits(I):
            if (I & sub_down[v]).bit_count() == 0:
                z |= 1 << v
        z_sets.append(z)
        m_sets.append(I & layers[0])
    return CoverColoring(tuple(colors), tuple(layers), residual,
                         tuple(z_sets), tuple(m_sets))


@dataclass
class TwoOrderRun:
    report: HitterReport
    branch: str  # "min-degree" | "two-order"
    chosen_t: Optional[int]
    layer_sizes: list[int]
    clamps: list[str] = field(default_factory=list)


def two_order_hitter(T: TwoOrderStructure, fam: MISFamily,
                     beta: Fraction) -> TwoOrderRun:
    """Layered hitter for K-intersecting 2-incomparable graphs with
    alpha >= beta*n: either some vertex has degree below the target
    bound L (its closed neighborhood hits everything), or the color
    layers taken in arithmetic progressions H_t contain a small hitting
    set for some stride offset t; all offsets are searched and the
    smallest verified one returned."""
    violations = validate_two_order(T)
    if violations:
        raise PreconditionError(f"structure invalid: {violations[:3]}")
    G = T.graph
    n = G.n
    if fam.alpha < beta * n:
        raise PreconditionError(f"alpha {fam.alpha} below beta*n = {beta * n}")
    K = k_intersecting_value(T)
    L = 2 * math.sqrt(float((1 - beta) / beta) * n * K)
    v, d = min_degree_vertex(G)
    clamps: list[str] = []
    if d < L or K == 0:
        if K == 0 and d >= L:
            clamps.append("K=0 degenerate, min-degree branch")
        Tset = closed_neighborhood(G, v)
        rep = make_report(Tset, "min-degree", Fraction(d + 1),
                          verify_hitting(fam, Tset))
        return TwoOrderRun(rep, "min-degree", None, [], clamps)

    coloring = cover_coloring(T, fam)
    layer_sizes = [m.bit_count() for m in coloring.layers]
    P = 2 * math.sqrt(float(beta * (1 - beta)) * n * K)
    m = int(float(beta) * n / (2 * P))
    if m < 1:
        clamps.append(f"m {m} clamped to 1")
        m = 1
    half = m // 2
    if half < 1:
        clamps.append("floor(m/2) = 0, min-degree branch")
        Tset = closed_neighborhood(G, v)
        rep = make_report(Tset, "min-degree", Fraction(d + 1),
                          verify_hitting(fam, Tset))
        return TwoOrderRun(rep, "min-degree", None, layer_sizes, clamps)

    if not clamps:
        for I, MI in zip(fam.sets, coloring.m_sets):
            if not (0 < MI.bit_count() <= P):
                raise TheoremViolationError(
                    "claim |M_I| in (0, P] failed",
                    trace={"I": bits(I), "M_I": bits(MI), "P": P})

    best: Optional[tuple[int, int]] = None  # (mask, t)
    for t in range(1, half + 1):
        H = 0
        i = 0
        while i * m + t < len(coloring.layers):
            H |= coloring.layers[i * m + t]
            i += 1
        if verify_hitting(fam, H):
            if best is None or H.bit_count() < best[0].bit_count():
                best = (H, t)
    if best is None:
        raise TheoremViolationError(
            "no layer union H_t hits all maximum independent sets",
            trace={"layer_sizes": layer_sizes, "m": m, "K": K, "L": L})
    bound = Fraction(math.ceil(L))
    rep = make_report(best[0], "two-order", bound, True)
    return TwoOrderRun(rep, "two-order", best[1], layer_sizes, clamps)


@dataclass(frozen=True)
class WeakLayerRecord:
    """Per-MIS claim outcomes for the weak circle-graph argument."""

    set_index: int
    z_size: int
    z_nonempty: bool
    max_layer_intersection: int
    layer_bound_ok: bool
    max_direct_cover: int
    direct_cover_ok: bool


@dataclass
class WeakCircleRun:
    report: HitterReport
    branch: str  # "min-degree" | "circle-layers" | "fallback"
    records: list[WeakLayerRecord]
    candidate_sizes: list[int]


def weak_circle_layers(S: IntervalSet, fam: MISFamily, M: int) -> WeakCircleRun:
    """Weak circle-graph hitter driven by the chord cover relation.

    If some maximum independent set has more than M zero-color chords,
    one of them has low degree and its closed neighborhood is returned.
    Otherwise the color layers are grouped: V_1..V_M, then geometric
    windows (2M)^j+1..(2M)^(j+1); the smallest verified candidate wins.
    With no verified candidate the exact solver is used and tagged
    "fallback" (legitimate: the layer claims hold only under the proof's
    case assumptions).
    """
    if M < 1:
        raise PreconditionError("M must be >= 1")
    covers, directly = chord_cover_relation(S)
    G = overlap_graph(S)
    coloring = cover_coloring(S, fam)

    records = []
    for idx, I in enumerate(fam.sets):
        z = coloring.z_sets[idx]
        inter_max = max(((I & layer).bit_count() for layer in coloring.layers[1:]),
                        default=0)
        direct_max = max(((directly[v] & I).bit_count() for v in iter_bits(I)),
                         default=0)
        records.append(WeakLayerRecord(
            set_index=idx,
            z_size=z.bit_count(),
            z_nonempty=z != 0,
            max_layer_intersection=inter_max,
            layer_bound_ok=inter_max <= M,
            max_direct_cover=direct_max,
            direct_cover_ok=direct_max <= M,
        ))

    for idx, I in enumerate(fam.sets):
        z = coloring.z_sets[idx]
        if z.bit_count() > M:
            v = min(iter_bits(z), key=lambda u: (G.degree(u), u))
            T = closed_neighborhood(G, v)
            rep = make_report(T, "min-degree", Fraction(G.degree(v) + 1),
                              verify_hitting(fam, T))
            return WeakCircleRun(rep, "min-degree", records, [])

    candidates = []
    first = 0
    for i in range(1, min(M + 1, len(coloring.layers))):
        first |= coloring.layers[i]
    candidates.append(first)
    j = 0
    while (2 * M) ** (j + 1) <= fam.alpha // (M + 1):
        window = 0
        for k in range((2 * M) ** j + 1,
                       min((2 * M) ** (j + 1), len(coloring.layers) - 1) + 1):
            window |= coloring.layers[k]
        candidates.append(window)
        j += 1

    candidate_sizes = [c.bit_count() for c in candidates]
    best = None
    for c in candidates:
        if verify_hitting(fam, c):
            if best is None or c.bit_count() < best.bit_count():
                best = c
    if best is not None:
        rep = make_report(best, "circle-layers", None, True)
        return WeakCircleRun(rep, "circle-layers", records, candidate_sizes)
    exact = min_hitting_set(fam)
    rep = make_report(exact.set, "fallback", exact.bound, exact.verified)
    return WeakCircleRun(rep, "fallback", records, candidate_sizes)


# --- serialization -------------------------------------------------------

def two_order_to_json(T: TwoOrderStructure) -> str:
    sub = [[a, b] for a in range(T.n) for b in bits(T.sub_up[a])]
    prec = [[a, b] for a in range(T.n) for b in bits(T.prec_up[a])]
    return json.dumps({"n": T.n, "sub": sub, "prec": prec})


def two_order_from_json(text: str) -> TwoOrderStructure:
    obj = json.loads(text)
    return make_two_order(int(obj["n"]),
                          [(int(a), int(b)) for a, b in obj["sub"]],
                          [(int(a), int(b)) for a, b in obj["prec"]])


def weak_run_report_json(run: WeakCircleRun) -> str:
    return json.dumps({
        "branch": run.branch,
        "candidate_sizes": run.candidate_sizes,
        "records": [{
            "set_index": r.set_index, "z_size": r.z_size,
            "z_nonempty": r.z_nonempty,
            "max_layer_intersection": r.max_layer_intersection,
            "layer_bound_ok": r.layer_bound_ok,
            "max_direct_cover": r.max_direct_cover,
            "direct_cover_ok": r.direct_cover_ok,
        } for r in run.records],
    })
