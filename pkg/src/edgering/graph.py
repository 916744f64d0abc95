"""Immutable finite simple graphs.

Vertices are dense 0-based integers.  Adjacency is stored as one
bitmask per vertex, so neighborhoods of whole vertex sets are a few
OR operations and all derived computations (bipartition, blocks,
connectivity, the delta statistic) run on machine words.  Every value
in this module is immutable after construction; all operations are
pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bits import bits, lowest, members, popcount
from .errors import ContractError, InputError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..d-1."""

    d: int
    edges: tuple[tuple[int, int], ...]  # sorted, each (u, v) with u < v
    adj: tuple[int, ...]                # adj[v] = bitmask of neighbors

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.d) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def isolated_mask(self) -> int:
        m = 0
        for v in range(self.d):
            if self.adj[v] == 0:
                m |= 1 << v
        return m

    def add_edges(self, extra: list[tuple[int, int]]) -> "Graph":
        """New graph on the same vertices with ``extra`` edges adjoined."""
        return build_graph(self.d, list(self.edges) + list(extra))

    def __repr__(self) -> str:
        return f"Graph(d={self.d}, edges={list(self.edges)})"


@dataclass(frozen=True)
class Subgraph:
    """A relabeled subgraph together with its labels back into the parent:
    vertex i of ``graph`` is vertex ``labels[i]`` of the parent."""

    graph: Graph
    labels: tuple[int, ...]


@dataclass(frozen=True)
class Bipartition:
    """Ordered 2-coloring (X, Y) of a graph; every edge crosses it."""

    x_mask: int
    y_mask: int

    @property
    def X(self) -> tuple[int, ...]:
        return members(self.x_mask)

    @property
    def Y(self) -> tuple[int, ...]:
        return members(self.y_mask)

    def side_mask(self, side: str) -> int:
        if side == "X":
            return self.x_mask
        if side == "Y":
            return self.y_mask
        raise ContractError(f"unknown side {side!r}")

    def side_of(self, v: int) -> str:
        if (self.x_mask >> v) & 1:
            return "X"
        if (self.y_mask >> v) & 1:
            return "Y"
        raise ContractError(f"vertex {v} is on neither side")


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs / single edges) of a graph."""

    blocks: tuple[Subgraph, ...]
    block_of_edge: dict[tuple[int, int], int] = field(compare=False)


def build_graph(d: int, edge_list) -> Graph:
    """Build a simple graph; duplicate pairs collapse, loops are rejected."""
    if d < 0:
        raise InputError(f"vertex count must be non-negative, got {d}")
    adj = [0] * d
    for (i, j) in edge_list:
        if not (0 <= i < d and 0 <= j < d):
            raise InputError(f"edge ({i}, {j}) out of range for d={d}")
        if i == j:
            raise InputError(f"self-loop at vertex {i}")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    edges = []
    for u in range(d):
        m = adj[u] >> (u + 1)
        v = u + 1
        while m:
            if m & 1:
                edges.append((u, v))
            m >>= 1
            v += 1
    return Graph(d=d, edges=tuple(edges), adj=tuple(adj))


def _spread(adj, seed: int, allowed: int) -> int:
    """Vertices reachable from the seed mask inside ``allowed``."""
    reached = seed & allowed
    frontier = reached
    while frontier:
        new = 0
        for v in bits(frontier):
            new |= adj[v]
        frontier = new & allowed & ~reached
        reached |= frontier
    return reached


def restricted_connected(g: Graph, vmask: int) -> bool:
    """Is the induced graph on ``vmask`` connected (empty mask counts)?"""
    if vmask == 0:
        return True
    return _spread(g.adj, 1 << lowest(vmask), vmask) == vmask


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, lowest vertex first.
    Isolated vertices form singleton components."""
    comps = []
    seen = 0
    for v in range(g.d):
        if (seen >> v) & 1:
            continue
        comp = _spread(g.adj, 1 << v, g.full_mask)
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.d == 0:
        return True
    return _spread(g.adj, 1, g.full_mask) == g.full_mask


def bipartition_of(g: Graph) -> Bipartition | None:
    """BFS 2-coloring, or None if the graph has an odd cycle.

    Per connected component, the side containing the smallest-index
    vertex is X; isolated vertices go to X.
    """
    x_mask = 0
    y_mask = 0
    seen = 0
    for v in range(g.d):
        if (seen >> v) & 1:
            continue
        # v is the smallest vertex of its component: color it X
        side = [1 << v, 0]
        seen |= 1 << v
        frontier = 1 << v
        color = 0
        while frontier:
            new = 0
            for u in bits(frontier):
                new |= g.adj[u]
            new &= ~seen
            color ^= 1
            side[color] |= new
            seen |= new
            frontier = new
        cx, cy = side
        for u in bits(cx):
            if g.adj[u] & cx:
                return None
        for u in bits(cy):
            if g.adj[u] & cy:
                return None
        x_mask |= cx
        y_mask |= cy
    return Bipartition(x_mask=x_mask, y_mask=y_mask)


def neighborhood(g: Graph, t: int) -> int:
    """Union of the adjacency masks of the members of ``t``."""
    n = 0
    for v in bits(t):
        n |= g.adj[v]
    return n


def delta(g: Graph, bip: Bipartition, t: int) -> int:
    """|N(t)| - |t| for a subset of one side of the bipartition."""
    if not (t & ~bip.x_mask == 0 or t & ~bip.y_mask == 0):
        raise ContractError("delta: set is not contained in one side")
    return popcount(neighborhood(g, t)) - popcount(t)


def is_ordinary(g: Graph, v: int) -> bool:
    """Does deleting v leave the graph connected?"""
    if g.d < 2 or not is_connected(g):
        raise ContractError("is_ordinary requires a connected graph with >= 2 vertices")
    rest = g.full_mask & ~(1 << v)
    return restricted_connected(g, rest)


def is_two_connected(g: Graph) -> bool:
    """Connected with every vertex ordinary.  Graphs on fewer than 3
    vertices (K2, K1) are not 2-connected by convention."""
    if g.d < 3 or not is_connected(g):
        return False
    full = g.full_mask
    for v in range(g.d):
        if not restricted_connected(g, full & ~(1 << v)):
            return False
    return True


def induced_subgraph(g: Graph, s: int) -> Subgraph:
    """Induced subgraph on mask ``s``, relabeled densely; the label map
    back to the parent is retained."""
    if s & ~g.full_mask:
        raise InputError("induced_subgraph: mask out of vertex range")
    labels = members(s)
    index = {old: new for new, old in enumerate(labels)}
    edges = []
    for u_new, u_old in enumerate(labels):
        m = g.adj[u_old] & s
        for v_old in bits(m):
            if v_old > u_old:
                edges.append((u_new, index[v_old]))
    return Subgraph(graph=build_graph(len(labels), edges), labels=labels)


def _subgraph_from_edges(edge_list: list[tuple[int, int]]) -> Subgraph:
    verts = sorted({v for e in edge_list for v in e})
    index = {old: new for new, old in enumerate(verts)}
    return Subgraph(
        graph=build_graph(len(verts), [(index[u], index[v]) for u, v in edge_list]),
        labels=tuple(verts),
    )


def blocks(g: Graph) -> BlockDecomposition:
    """Block decomposition by depth-first lowpoint search.

    Every edge lands in exactly one block; blocks are 2-connected or
    single edges; isolated vertices yield no blocks.
    """
    d = g.d
    disc = [-1] * d
    low = [0] * d
    timer = 0
    estack: list[tuple[int, int]] = []
    block_edge_lists: list[list[tuple[int, int]]] = []

    for root in range(d):
        if disc[root] != -1 or g.adj[root] == 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        work = [(root, -1, bits(g.adj[root]))]
        while work:
            u, pu, it = work[-1]
            descended = False
            for v in it:
                if v == pu:
                    continue
                if disc[v] == -1:
                    estack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    work.append((v, u, bits(g.adj[v])))
                    descended = True
                    break
                if disc[v] < disc[u]:
                    estack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            if not descended:
                work.pop()
                if work:
                    p = work[-1][0]
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] >= disc[p]:
                        block = []
                        while True:
                            e = estack.pop()
                            block.append(e)
                            if e == (p, u):
                                break
                        block_edge_lists.append(block)
        assert not estack, "block decomposition left edges on the stack"

    subgraphs = []
    block_of_edge: dict[tuple[int, int], int] = {}
    for idx, block in enumerate(block_edge_lists):
        canon = [(min(u, v), max(u, v)) for u, v in block]
        for e in canon:
            block_of_edge[e] = idx
        subgraphs.append(_subgraph_from_edges(canon))
    return BlockDecomposition(blocks=tuple(subgraphs), block_of_edge=block_of_edge)
