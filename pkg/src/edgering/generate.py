"""Graph families: seeded random models and exhaustive enumeration.

Random generation is deterministic for a fixed seed via numpy's PCG64
generator.  The exhaustive enumerator streams every cross-edge subset
of a complete bipartite template on fixed sides; no isomorphism
reduction is attempted.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .bits import bits
from .errors import CapacityError, GenerationError
from .graph import Bipartition, Graph, is_connected, is_two_connected
from .matching import is_matching_covered

RNG_NAME = "numpy-pcg64"
DEFAULT_MAX_CELLS = 25
DEFAULT_RETRIES = 500


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def natural_sides(nx: int, ny: int) -> Bipartition:
    """X = vertices 0..nx-1, Y = nx..nx+ny-1."""
    return Bipartition(x_mask=(1 << nx) - 1, y_mask=((1 << ny) - 1) << nx)


def _graph_from_cell_mask(nx: int, ny: int, mask: int) -> Graph:
    d = nx + ny
    adj = [0] * d
    edges = []
    for cell in bits(mask):
        i, j = divmod(cell, ny)
        u, v = i, nx + j
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        edges.append((u, v))
    return Graph(d=d, edges=tuple(sorted(edges)), adj=tuple(adj))


def random_bipartite(nx: int, ny: int, p: float, rng: np.random.Generator,
                     max_retries: int = DEFAULT_RETRIES) -> Graph:
    """Each cross pair independently with probability p, resampled until
    connected."""
    cells = nx * ny
    for _ in range(max_retries):
        flips = rng.random(cells) < p
        mask = 0
        for idx in np.flatnonzero(flips):
            mask |= 1 << int(idx)
        g = _graph_from_cell_mask(nx, ny, mask)
        if is_connected(g):
            return g
    raise GenerationError(
        f"no connected erdos-bipartite({nx},{ny},{p}) sample in {max_retries} tries")


def random_matching_union(n: int, k: int, rng: np.random.Generator,
                          max_retries: int = DEFAULT_RETRIES) -> Graph:
    """Union of k uniform random perfect matchings on sides of size n,
    resampled until connected.  Every edge lies in one of the source
    matchings, so connected samples are matching-covered."""
    for _ in range(max_retries):
        edges = set()
        for _ in range(k):
            perm = rng.permutation(n)
            for i in range(n):
                edges.add((i, n + int(perm[i])))
        adj = [0] * (2 * n)
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        g = Graph(d=2 * n, edges=tuple(sorted(edges)), adj=tuple(adj))
        if is_connected(g):
            return g
    raise GenerationError(
        f"no connected matching-union({n},{k}) sample in {max_retries} tries")


def exhaustive_bipartite(
    nx: int,
    ny: int,
    connected: bool = True,
    two_connected: bool = False,
    matching_covered: bool = False,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> Iterator[Graph]:
    """Stream all bipartite graphs on fixed sides, filtered by the
    requested constraints.  No isomorphism reduction."""
    cells = nx * ny
    if cells > max_cells:
        raise CapacityError(f"{cells} cross cells exceed the enumeration cap {max_cells}")
    sides = natural_sides(nx, ny)
    for mask in range(1 << cells):
        g = _graph_from_cell_mask(nx, ny, mask)
        if connected and not is_connected(g):
            continue
        if two_connected and not is_two_connected(g):
            continue
        if matching_covered:
            if not is_connected(g) or not is_matching_covered(g, sides):
                continue
        yield g


def side_pairs(max_vertices: int, max_cells: int = DEFAULT_MAX_CELLS) -> list[tuple[int, int]]:
    """(nx, ny) pairs with nx <= ny, nx + ny <= max_vertices, within the
    cell cap, ordered by total size then nx."""
    out = []
    for total in range(2, max_vertices + 1):
        for nx in range(1, total // 2 + 1):
            ny = total - nx
            if nx * ny <= max_cells:
                out.append((nx, ny))
    return out
