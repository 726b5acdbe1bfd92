"""Simple undirected graphs on dense integer vertices.

Adjacency is stored as one n-bit mask per vertex.  All types are
immutable after construction and every operation is a pure function, so
everything here is safe to call from concurrent tasks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .bitset import bits, iter_bits, lowest_bit, mask_of
from .errors import HitmisError, OutOfRangeError, SelfLoopError


@dataclass(frozen=True)
class Graph:
    """Immutable graph: `n` vertices, `adj[v]` = neighbor mask of v.

    Invariants: adjacency symmetric, irreflexive, all set bits < n.
    `labels`, when present, carries one opaque tag per vertex (used by
    geometry constructors to point back at source objects).
    """

    n: int
    adj: tuple[int, ...]
    labels: Optional[tuple] = None

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def vertices_mask(self) -> int:
        return (1 << self.n) - 1


def build_graph(n: int, edges, labels=None) -> Graph:
    """Graph with exactly the given edges; duplicates are dropped.

    Raises OutOfRangeError for endpoints outside 0..n-1 and
    SelfLoopError for (u, u) pairs.
    """
    if n < 0:
        raise OutOfRangeError(f"negative vertex count {n}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"edge ({u},{v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def induced_subgraph(G: Graph, S: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by mask S plus the map new-index -> old-index."""
    if S >> G.n:
        raise OutOfRangeError("subset mask has bits >= n")
    old = bits(S)
    pos = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        row = 0
        for w in iter_bits(G.adj[v] & S):
            row |= 1 << pos[w]
        adj.append(row)
    labels = tuple(G.labels[v] for v in old) if G.labels is not None else None
    return Graph(len(old), tuple(adj), labels), tuple(old)


def connected_components(G: Graph) -> list[int]:
    """Vertex masks of the components, ordered by smallest contained vertex."""
    seen = 0
    comps = []
    for v in range(G.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= G.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def is_acyclic(G: Graph) -> bool:
    """True iff G is a forest (each component has exactly size-1 edges)."""
    for comp in connected_components(G):
        size = comp.bit_count()
        inner = sum((G.adj[v] & comp).bit_count() for v in iter_bits(comp)) // 2
        if inner != size - 1:
            return False
    return True


def min_degree_vertex(G: Graph) -> tuple[int, int]:
    """Vertex attaining the minimum degree, lowest index on ties."""
    if G.n == 0:
        raise HitmisError("min_degree_vertex on empty graph")
    best_v, best_d = 0, G.adj[0].bit_count()
    for v in range(1, G.n):
        d = G.adj[v].bit_count()
        if d < best_d:
            best_v, best_d = v, d
    return best_v, best_d


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, tuple((full & ~a) & ~(1 << v) for v, a in enumerate(G.adj)), G.labels)


def count_edges_within(G: Graph, S: int) -> int:
    return sum((G.adj[v] & S).bit_count() for v in iter_bits(S)) // 2


def bipartition(G: Graph) -> Optional[tuple[int, int]]:
    """(A, B) masks of a 2-coloring, or None if G has an odd cycle.

    Each component's lowest vertex is colored into A, so the result is
    deterministic.
    """
    color = {}
    A = B = 0
    for comp in connected_components(G):
        root = lowest_bit(comp)
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            for w in iter_bits(G.adj[u]):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    for v, c in color.items():
        if c == 0:
            A |= 1 << v
        else:
            B |= 1 << v
    return A, B


def closed_neighborhood(G: Graph, v: int) -> int:
    return G.adj[v] | (1 << v)


# --- serialization -------------------------------------------------------

def graph_to_json(G: Graph) -> str:
    return json.dumps({"n": G.n, "edges": [[u, v] for u, v in G.edges()]})


def graph_from_json(text: str) -> Graph:
    obj = json.loads(text)
    return build_graph(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])


def graph_from_dimacs(text: str) -> Graph:
    """Edge-list format: first line "p <n> <m>", then 1-indexed "e u v" lines.

    A literal "edge" token after "p" (classic DIMACS) is tolerated.
    """
    n = None
    edges = []
    for line in text.splitlines():
        tok = line.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            rest = [t for t in tok[1:] if t.lstrip("-").isdigit()]
            if len(rest) < 2:
                raise HitmisError(f"bad problem line: {line!r}")
            n = int(rest[0])
        elif tok[0] == "e":
            edges.append((int(tok[1]) - 1, int(tok[2]) - 1))
    if n is None:
        raise HitmisError("missing 'p' line")
    return build_graph(n, edges)


def graph_to_dimacs(G: Graph) -> str:
    lines = [f"p {G.n} {G.edge_count()}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"
