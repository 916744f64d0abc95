"""Acceptable and tight set machinery for bipartite edge polytopes.

A non-empty subset T of one side is *acceptable* when the bipartite
graph B(T) spanned by the edges between T and N(T) is connected and
the induced graph on the complementary pair (side minus T, other side
minus N(T)) is connected with at least one edge.  Acceptable sets
index the non-coordinate facets of the edge polytope.  T is *tight*
when delta(T) = |N(T)| - |T| = 1.

This module provides enumeration of acceptable sets, separation
queries for non-edges, Fill sets (non-edges separated by no tight
acceptable set), the uncrossing of tight sets, the mirror involution
between tight acceptable sets of the two sides, and the internal
tight cover construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import bits, members, popcount
from .errors import CapacityError, ContractError
from .graph import Bipartition, Graph, neighborhood, restricted_connected

DEFAULT_MAX_SIDE = 16


@dataclass(frozen=True)
class AcceptableSet:
    """An acceptable subset of one side, with cached neighborhood data."""

    side: str          # "X" or "Y"
    members: int       # bitmask T
    nbhd: int          # bitmask N(T)
    delta: int         # |N(T)| - |T|

    @property
    def tight(self) -> bool:
        return self.delta == 1


@dataclass(frozen=True)
class FillSet:
    """Cross-bipartition non-edges that no tight acceptable set separates."""

    non_edges: tuple[tuple[int, int], ...]  # (x, y) pairs, x on the X side

    def __len__(self) -> int:
        return len(self.non_edges)


def _has_internal_edge(g: Graph, vmask: int) -> bool:
    for v in bits(vmask):
        if g.adj[v] & vmask:
            return True
    return False


def is_acceptable(g: Graph, bip: Bipartition, t: int, side: str) -> bool:
    """Acceptability test for t as a subset of the given side."""
    side_mask = bip.side_mask(side)
    other_mask = bip.y_mask if side == "X" else bip.x_mask
    if t == 0 or t & ~side_mask:
        return False
    n = neighborhood(g, t)
    # B(t): the graph on t | n uses exactly the edges between t and n,
    # which in a bipartite graph is the whole induced graph on t | n.
    if not restricted_connected(g, t | n):
        return False
    comp = (side_mask & ~t) | (other_mask & ~n)
    if not _has_internal_edge(g, comp):
        return False
    return restricted_connected(g, comp)


def is_tight(g: Graph, bip: Bipartition, t: int, side: str) -> bool:
    """delta(t) = 1."""
    side_mask = bip.side_mask(side)
    if t & ~side_mask:
        raise ContractError("is_tight: set not contained in the stated side")
    return popcount(neighborhood(g, t)) - popcount(t) == 1


def _make_set(g: Graph, side: str, t: int) -> AcceptableSet:
    n = neighborhood(g, t)
    return AcceptableSet(side=side, members=t, nbhd=n, delta=popcount(n) - popcount(t))


def enumerate_acceptable(
    g: Graph,
    bip: Bipartition,
    side: str,
    tight_only: bool = False,
    max_side: int = DEFAULT_MAX_SIDE,
) -> list[AcceptableSet]:
    """All acceptable (optionally tight) subsets of a side.

    Deterministic order: ascending numeric encoding of the member
    bitmask.  Sides larger than ``max_side`` raise a capacity error
    (the scan is exponential in the side size).
    """
    side_mask = bip.side_mask(side)
    other_mask = bip.y_mask if side == "X" else bip.x_mask
    side_vertices = members(side_mask)
    n = len(side_vertices)
    if n > max_side:
        raise CapacityError(f"side size {n} exceeds subset-enumeration cap {max_side}")
    out = []
    adj = g.adj
    for code in range(1, 1 << n):
        t = 0
        c = code
        i = 0
        nbhd = 0
        size = 0
        while c:
            if c & 1:
                v = side_vertices[i]
                t |= 1 << v
                nbhd |= adj[v]
                size += 1
            c >>= 1
            i += 1
        dlt = popcount(nbhd) - size
        if tight_only and dlt != 1:
            continue
        if not restricted_connected(g, t | nbhd):
            continue
        comp = (side_mask & ~t) | (other_mask & ~nbhd)
        if not _has_internal_edge(g, comp):
            continue
        if not restricted_connected(g, comp):
            continue
        out.append(AcceptableSet(side=side, members=t, nbhd=nbhd, delta=dlt))
    return out


def separates(t: AcceptableSet, x: int, y: int) -> bool:
    """Does t separate the non-edge (x, y): x in T and y outside N(T)?"""
    return bool((t.members >> x) & 1) and not ((t.nbhd >> y) & 1)


def non_edges(g: Graph, bip: Bipartition) -> list[tuple[int, int]]:
    """Cross-bipartition non-edges (x, y), x on the X side, sorted."""
    out = []
    for x in bip.X:
        missing = bip.y_mask & ~g.adj[x]
        for y in bits(missing):
            out.append((x, y))
    return out


def fill_set(
    g: Graph,
    bip: Bipartition,
    max_side: int = DEFAULT_MAX_SIDE,
    tight_sets: list[AcceptableSet] | None = None,
) -> FillSet:
    """Non-edges separated by no tight acceptable subset of X.

    Caller guarantees the ambient graph is 2-connected, bipartite and
    matching-covered.  ``tight_sets`` may supply a precomputed
    enumeration of the tight acceptable X-subsets.
    """
    if tight_sets is None:
        tight_sets = enumerate_acceptable(g, bip, "X", tight_only=True, max_side=max_side)
    kept = []
    for (x, y) in non_edges(g, bip):
        if not any(separates(t, x, y) for t in tight_sets):
            kept.append((x, y))
    return FillSet(non_edges=tuple(kept))


def uncross(g: Graph, bip: Bipartition, u: int, v: int, side: str) -> int:
    """Union of two tight sets with intersecting neighborhoods.

    Requires u, v tight, u | v a proper subset of the side, and
    N(u) & N(v) non-empty; the ambient graph must be 2-connected,
    matching-covered and bipartite (caller guarantees).  The union is
    again tight; a failed tightness check is reported as a contract
    error since it means a precondition was violated.
    """
    side_mask = bip.side_mask(side)
    if (u | v) & ~side_mask:
        raise ContractError("uncross: sets not contained in the stated side")
    nu = neighborhood(g, u)
    nv = neighborhood(g, v)
    if popcount(nu) - popcount(u) != 1 or popcount(nv) - popcount(v) != 1:
        raise ContractError("uncross: both sets must be tight")
    if (u | v) == side_mask:
        raise ContractError("uncross: union must be a proper subset of the side")
    if nu & nv == 0:
        raise ContractError("uncross: neighborhoods must intersect")
    w = u | v
    if popcount(nu | nv) - popcount(w) != 1:
        raise ContractError("uncross: union failed to be tight (precondition violated)")
    return w


def mirror_tight_set(g: Graph, bip: Bipartition, t: AcceptableSet) -> AcceptableSet:
    """The mirror S = other side minus N(T) of a tight acceptable set.

    S is again tight acceptable with N(S) = side minus T, so the map
    is an involution.  Requires |X| = |Y| (matching-covered ambient).
    """
    if popcount(bip.x_mask) != popcount(bip.y_mask):
        raise ContractError("mirror_tight_set requires |X| = |Y|")
    side_mask = bip.side_mask(t.side)
    other_side = "Y" if t.side == "X" else "X"
    other_mask = bip.side_mask(other_side)
    if not t.tight or not is_acceptable(g, bip, t.members, t.side):
        raise ContractError("mirror_tight_set requires a tight acceptable input")
    s = other_mask & ~t.nbhd
    ns = neighborhood(g, s)
    if ns != side_mask & ~t.members:
        raise ContractError("mirror_tight_set: N(S) != complement of T")
    mirrored = AcceptableSet(side=other_side, members=s, nbhd=ns,
                             delta=popcount(ns) - popcount(s))
    if not mirrored.tight or not is_acceptable(g, bip, s, other_side):
        raise ContractError("mirror_tight_set: mirror failed to be tight acceptable")
    return mirrored


def component_separator(g: Graph, bip: Bipartition, x: int, y: int) -> AcceptableSet:
    """Acceptable separator of a non-edge built from a component trace.

    T is the X-part of the connected component of x in the induced
    graph on (X minus N(y)) plus (Y minus {y}).  Requires the ambient
    graph 2-connected bipartite and (x, y) a cross non-edge; T is
    acceptable, contains x, and avoids y in its neighborhood.
    """
    if bip.side_of(x) != "X" or bip.side_of(y) != "Y":
        raise ContractError("component_separator expects x on X and y on Y")
    if g.has_edge(x, y):
        raise ContractError(f"component_separator: ({x}, {y}) is an edge")
    hmask = (bip.x_mask & ~g.adj[y]) | (bip.y_mask & ~(1 << y))
    comp = _component_of(g, x, hmask)
    t = comp & bip.x_mask
    result = _make_set(g, "X", t)
    if not ((t >> x) & 1) or (result.nbhd >> y) & 1:
        raise ContractError("component_separator: trace failed to separate")
    if not is_acceptable(g, bip, t, "X"):
        raise ContractError("component_separator: trace is not acceptable")
    return result


def _component_of(g: Graph, v: int, allowed: int) -> int:
    reached = 1 << v
    frontier = reached
    while frontier:
        new = 0
        for u in bits(frontier):
            new |= g.adj[u]
        frontier = new & allowed & ~reached
        reached |= frontier
    return reached


def internal_tight_cover(
    g: Graph,
    bip: Bipartition,
    a: AcceptableSet,
    x: int,
    tight_y_sets: list[AcceptableSet] | None = None,
    max_side: int = DEFAULT_MAX_SIDE,
) -> int:
    """Tight subset R of the acceptable set ``a`` containing ``x``.

    Follows the uncrossing construction: for each y in C (the other
    side minus N(A)) pick a tight acceptable set S_y containing y whose
    neighborhood avoids x, uncross them into a tight U with C inside U
    and x outside N(U), then peel Q = N(U minus C) & A off A.

    The ambient graph must be 2-connected, matching-covered and
    bipartite, and every non-edge must be separated by a tight
    acceptable set of the Y side (hypothesis; violations surface as
    contract errors naming the offending non-edge).  ``tight_y_sets``
    may supply the precomputed tight acceptable Y-sets; candidates are
    scanned in ascending member-mask order.
    """
    if a.side != "X":
        raise ContractError("internal_tight_cover expects an acceptable set on X")
    if not (a.members >> x) & 1:
        raise ContractError("internal_tight_cover: x must lie in the acceptable set")
    if tight_y_sets is None:
        tight_y_sets = enumerate_acceptable(g, bip, "Y", tight_only=True, max_side=max_side)

    d_mask = a.nbhd
    c_mask = bip.y_mask & ~d_mask
    if c_mask == 0:
        raise ContractError("internal_tight_cover: empty complement C "
                            "(input set cannot be acceptable)")

    xbit = 1 << x
    chosen: dict[int, AcceptableSet] = {}
    for y in bits(c_mask):
        for s in tight_y_sets:  # ascending encoding; first hit wins
            if (s.members >> y) & 1 and not (s.nbhd & xbit):
                chosen[y] = s
                break
        else:
            raise ContractError(
                f"internal_tight_cover: hypothesis fails at non-edge ({x}, {y})")

    pending = sorted(chosen)
    u_mask = 0
    u_nbhd = 0
    while pending:
        pick = None
        for i, y in enumerate(pending):
            if (u_mask >> y) & 1:
                pick = i  # already covered, drop without uncrossing
                break
            if u_mask == 0 or chosen[y].nbhd & u_nbhd:
                pick = i
                break
        if pick is None:
            raise ContractError("internal_tight_cover: no uncrossable candidate "
                                "(connectivity of the complement was violated)")
        y = pending.pop(pick)
        if (u_mask >> y) & 1:
            continue
        s = chosen[y]
        if u_mask == 0:
            u_mask, u_nbhd = s.members, s.nbhd
        else:
            u_mask = uncross(g, bip, u_mask, s.members, "Y")
            u_nbhd |= s.nbhd
        if u_nbhd & xbit:
            raise ContractError("internal_tight_cover: union neighborhood reached x")

    if c_mask & ~u_mask:
        raise ContractError("internal_tight_cover: C not covered by the union")
    p_mask = u_mask & ~c_mask
    q_mask = neighborhood(g, p_mask) & a.members
    r_mask = a.members & ~q_mask
    if not (r_mask >> x) & 1:
        raise ContractError("internal_tight_cover: x fell out of R")
    nr = neighborhood(g, r_mask)
    if popcount(nr) - popcount(r_mask) != 1 or nr != d_mask & ~p_mask:
        raise ContractError("internal_tight_cover: R failed the tightness check")
    return r_mask
