"""Bipartite matching: maximum matchings, perfect-matching tests,
matching-covered graphs and the strict Hall property."""

from __future__ import annotations

from dataclasses import dataclass

from .bits import bits, popcount
from .errors import CapacityError, ContractError
from .graph import Bipartition, Graph, is_connected

DEFAULT_MAX_SIDE = 16


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges."""

    pairs: tuple[tuple[int, int], ...]

    def size(self) -> int:
        return len(self.pairs)


def _augment(g: Graph, x: int, match_of: list[int], banned: int, visited: list[bool]) -> bool:
    for y in bits(g.adj[x] & ~banned):
        if visited[y]:
            continue
        visited[y] = True
        if match_of[y] == -1 or _augment(g, match_of[y], match_of, banned, visited):
            match_of[y] = x
            match_of[x] = y
            return True
    return False


def _max_matching(g: Graph, xs, banned: int = 0) -> list[int]:
    """Kuhn augmenting-path matching from the X side; returns match_of
    (partner vertex or -1), ignoring vertices in ``banned``."""
    match_of = [-1] * g.d
    for x in xs:
        if (banned >> x) & 1 or match_of[x] != -1:
            continue
        visited = [False] * g.d
        _augment(g, x, match_of, banned, visited)
    return match_of


def maximum_matching(g: Graph, bip: Bipartition) -> Matching:
    """A maximum-cardinality matching of a bipartite graph."""
    match_of = _max_matching(g, bip.X)
    pairs = tuple(
        (x, match_of[x]) for x in bip.X if match_of[x] != -1
    )
    return Matching(pairs=pairs)


def _matching_size(g: Graph, bip: Bipartition, banned: int = 0) -> int:
    match_of = _max_matching(g, bip.X, banned)
    return sum(1 for x in bip.X if not (banned >> x) & 1 and match_of[x] != -1)


def has_perfect_matching(g: Graph, bip: Bipartition) -> bool:
    """True iff some matching covers every vertex (needs |X| = |Y|)."""
    if popcount(bip.x_mask) != popcount(bip.y_mask):
        return False
    return 2 * _matching_size(g, bip) == g.d


def is_matching_covered(g: Graph, bip: Bipartition) -> bool:
    """Every edge lies in some perfect matching.

    Tested edge by edge: {x, y} extends to a perfect matching exactly
    when the graph minus {x, y} has one.  A single edge (K2) passes.
    """
    if not is_connected(g):
        raise ContractError("is_matching_covered requires a connected graph")
    nx = popcount(bip.x_mask)
    if nx != popcount(bip.y_mask):
        return False
    if _matching_size(g, bip) != nx:
        return False
    for u, v in g.edges:
        banned = (1 << u) | (1 << v)
        if _matching_size(g, bip, banned) != nx - 1:
            return False
    return True


def strict_hall_holds(g: Graph, bip: Bipartition, max_side: int = DEFAULT_MAX_SIDE) -> bool:
    """Every non-empty proper subset A of either side has |N(A)| >= |A| + 1.

    Exhaustive subset scan with early exit; sides larger than
    ``max_side`` are rejected as a capacity error.
    """
    if popcount(bip.x_mask) != popcount(bip.y_mask):
        raise ContractError("strict_hall_holds requires |X| = |Y|")
    for side_mask in (bip.x_mask, bip.y_mask):
        side = list(bits(side_mask))
        n = len(side)
        if n > max_side:
            raise CapacityError(f"side size {n} exceeds subset-enumeration cap {max_side}")
        for code in range(1, (1 << n) - 1):
            nbr = 0
            size = 0
            c = code
            i = 0
            while c:
                if c & 1:
                    nbr |= g.adj[side[i]]
                    size += 1
                c >>= 1
                i += 1
            if popcount(nbr) < size + 1:
                return False
    return True
