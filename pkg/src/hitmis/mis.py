"""Exact independence number and exhaustive maximum-independent-set listing.

This is the oracle every constructive procedure in the package is
verified against, so the design goal is trustworthiness: one
branch-and-bound core for the independence number, one
Bron-Kerbosch-with-pivot enumeration (run on the non-adjacency relation,
i.e. maximal cliques of the complement) filtered to maximum size, and
deterministic lexicographic output ordering throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .bitset import bits, iter_bits, lowest_bit, mask_of, set_key
from .errors import ExplosionError, PreconditionError, SizeLimitError
from .graph import Graph


@dataclass(frozen=True)
class MISFamily:
    """Independence number, the complete list of maximum independent sets
    (lexicographically sorted vertex-set masks), and the residual set of
    vertices lying in no maximum independent set."""

    n: int
    alpha: int
    sets: tuple[int, ...]
    residual: int

    def union_mask(self) -> int:
        u = 0
        for s in self.sets:
            u |= s
        return u

    def intersection_mask(self) -> int:
        it = iter(self.sets)
        m = next(it)
        for s in it:
            m &= s
        return m


def _clique_cover_bound(adj: tuple[int, ...], P: int) -> int:
    """Greedy clique cover size of G[P]: an upper bound on alpha(G[P])."""
    count = 0
    while P:
        v = lowest_bit(P)
        P &= ~(1 << v)
        common = adj[v] & P
        while common:
            u = lowest_bit(common)
            P &= ~(1 << u)
            common &= adj[u] & P
        count += 1
    return count


def independence_number(G: Graph, *, cap: int = 40) -> int:
    """Exact alpha(G) by branch and bound with greedy clique-cover bounds."""
    if G.n > cap:
        raise SizeLimitError(f"n={G.n} exceeds independence cap {cap}")
    adj = G.adj
    best = 0

    def search(P: int, size: int) -> None:
        nonlocal best
        # sweep vertices isolated inside P straight into the solution
        while P:
            scan = P
            grabbed = False
            while scan:
                v = lowest_bit(scan)
                scan &= scan - 1
                if adj[v] & P == 0:
                    P &= ~(1 << v)
                    size += 1
                    grabbed = True
            if not grabbed:
                break
        if size > best:
            best = size
        if not P:
            return
        if size + _clique_cover_bound(adj, P) <= best:
            return
        # branch on a maximum-degree vertex within P
        v, dmax = -1, -1
        for u in iter_bits(P):
            d = (adj[u] & P).bit_count()
            if d > dmax:
                v, dmax = u, d
        search(P & ~(adj[v] | (1 << v)), size + 1)
        search(P & ~(1 << v), size)

    search((1 << G.n) - 1, 0)
    return best


def enumerate_mis(G: Graph, *, cap: int = 25, max_sets: int = 10**6) -> MISFamily:
    """Complete MISFamily of G.

    Pre-pass computes alpha, then Bron-Kerbosch with pivoting runs over
    the non-adjacency relation (its maximal cliques are exactly the
    maximal independent sets of G), pruned to branches still able to
    reach size alpha.
    """
    if G.n > cap:
        raise SizeLimitError(f"n={G.n} exceeds enumeration cap {cap}")
    n = G.n
    full = (1 << n) - 1
    if n == 0:
        # Degenerate convention: the unique MIS of the empty graph is the
        # empty set.
        return MISFamily(0, 0, (0,), 0)
    alpha = independence_number(G, cap=max(cap, G.n))
    inb = tuple((full & ~a) & ~(1 << v) for v, a in enumerate(G.adj))
    found: list[int] = []

    def bk(R: int, rsize: int, P: int, X: int) -> None:
        if rsize + P.bit_count() < alpha:
            return
        if P == 0 and X == 0:
            if rsize == alpha:
                found.append(R)
                if len(found) > max_sets:
                    raise ExplosionError(
                        f"more than {max_sets} maximum independent sets")
            return
        # pivot maximizing |P & inb[u]|
        pivot, hit = -1, -1
        for u in iter_bits(P | X):
            h = (P & inb[u]).bit_count()
            if h > hit:
                pivot, hit = u, h
        cand = P & ~inb[pivot]
        for v in iter_bits(cand):
            vb = 1 << v
            bk(R | vb, rsize + 1, P & inb[v], X & inb[v])
            P &= ~vb
            X |= vb

    bk(0, 0, full, 0)
    found.sort(key=set_key)
    union = 0
    for s in found:
        union |= s
    return MISFamily(n, alpha, tuple(found), full & ~union)


@dataclass(frozen=True)
class HajnalResult:
    holds: bool
    lhs: int
    intersection: int
    union: int
    forced_single: Optional[bool]  # alpha > n/2 branch: intersection nonempty?


def hajnal_check(fam: MISFamily) -> HajnalResult:
    """Check |A_1 cap ... cap A_s| + |A_1 cup ... cup A_s| >= 2*alpha.

    When alpha > n/2 it also reports whether the intersection is
    nonempty (which forces h(G) = 1).
    """
    if not fam.sets:
        raise PreconditionError("hajnal_check on empty family")
    inter = fam.intersection_mask()
    union = fam.union_mask()
    lhs = inter.bit_count() + union.bit_count()
    forced = (inter != 0) if 2 * fam.alpha > fam.n else None
    return HajnalResult(lhs >= 2 * fam.alpha, lhs, inter, union, forced)


def pairwise_symmetric_difference_stats(
        G: Graph, fam: MISFamily) -> list[tuple[int, int]]:
    """(|I1 xor I2|, edge count of G[I1 xor I2]) per unordered MIS pair."""
    out = []
    sets = fam.sets
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            D = sets[i] ^ sets[j]
            e = sum((G.adj[v] & D).bit_count() for v in iter_bits(D)) // 2
            out.append((D.bit_count(), e))
    return out


# --- serialization -------------------------------------------------------

def family_to_json(fam: MISFamily) -> str:
    return json.dumps({
        "alpha": fam.alpha,
        "sets": [bits(s) for s in fam.sets],
        "residual": bits(fam.residual),
    })


def family_from_json(text: str) -> MISFamily:
    obj = json.loads(text)
    sets = tuple(sorted((mask_of(s) for s in obj["sets"]), key=set_key))
    residual = mask_of(obj["residual"])
    union = 0
    for s in sets:
        union |= s
    # every vertex is in some MIS or in the residual, so n is recoverable
    n = (union | residual).bit_length()
    return MISFamily(n, int(obj["alpha"]), sets, residual)
