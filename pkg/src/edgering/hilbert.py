"""Hilbert functions and h-vectors of graph edge rings.

The degree-k component of the edge ring is spanned by the distinct
sums of k edge vectors rho(e) = e_i + e_j, so its dimension H(k) is
computed by an iterated-sumset dynamic program with deduplication.
Points are packed into integers (one fixed-width field per vertex
coordinate) so the working set is a flat array of int64 keys whenever
it fits, with arbitrary-precision Python integers as the fallback.

From the window H(0..d) the h-vector is extracted by the binomial
transform against (1 - t)^D, where D is the Krull dimension (d - 1
for connected bipartite graphs, d for connected non-bipartite ones).
Interior lattice points of dilates come either from the facet
description (coordinate hyperplanes plus acceptable-set inequalities)
or from reciprocity applied to the h-vector; the two routes are kept
independent so they can cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bits import bits
from .errors import CapacityError, ComputationError, ContractError
from .facets import enumerate_acceptable
from .graph import Bipartition, Graph, bipartition_of, is_connected, is_two_connected

DEFAULT_MEMORY_BUDGET = 2 << 30          # 2 GiB
_CHUNK_ELEMS = 1 << 22                   # 4M int64 keys = 32 MiB per work block


@dataclass(frozen=True)
class HVector:
    """h-polynomial coefficients h_0..h_s (h_0 = 1, h_s != 0) plus the
    Krull dimension of the ring they belong to."""

    coefficients: tuple[int, ...]
    krull_dim: int

    @property
    def s(self) -> int:
        return len(self.coefficients) - 1

    def get(self, i: int) -> int:
        if 0 <= i <= self.s:
            return self.coefficients[i]
        return 0


def _field_width(k_max: int) -> int:
    # every coordinate of a degree-k point is at most k
    return max(1, k_max.bit_length())


def _packed_increments(g: Graph, w: int) -> list[int]:
    return [(1 << (w * u)) + (1 << (w * v)) for u, v in g.edges]


class _SumsetDP:
    """Iterated sumset of the edge vectors, one dilation level at a time."""

    def __init__(self, g: Graph, k_max: int, memory_budget: int):
        self.g = g
        self.k_max = k_max
        self.budget = memory_budget
        self.w = _field_width(max(1, k_max))
        self.use_numpy = g.d * self.w <= 62 and g.edge_count > 0
        incs = _packed_increments(g, self.w)
        if self.use_numpy:
            self.incs = np.array(incs, dtype=np.int64)
            self.pts: np.ndarray | set[int] = np.zeros(1, dtype=np.int64)
        else:
            self.incs = incs
            self.pts = {0}
        self.level = 0

    def count(self) -> int:
        return len(self.pts)

    def step(self) -> None:
        self.level += 1
        if self.g.edge_count == 0:
            self.pts = np.zeros(0, dtype=np.int64) if self.use_numpy else set()
            return
        if self.use_numpy:
            self._step_numpy()
        else:
            self._step_python()

    def _fail(self, what: str) -> None:
        raise CapacityError(
            f"memory budget exceeded at degree {self.level} ({what})")

    def _step_numpy(self) -> None:
        pts, incs = self.pts, self.incs
        total = pts.size * incs.size
        if total <= _CHUNK_ELEMS:
            if total * 24 > self.budget:
                self._fail(f"{total} candidate points")
            cand = (pts[:, None] + incs[None, :]).ravel()
            self.pts = np.unique(cand)
            return
        # chunked: merge sorted unique slices to bound peak memory
        rows = max(1, _CHUNK_ELEMS // incs.size)
        res: np.ndarray | None = None
        for start in range(0, pts.size, rows):
            block = (pts[start:start + rows, None] + incs[None, :]).ravel()
            block = np.unique(block)
            if res is None:
                res = block
            else:
                if (res.size + block.size) * 24 > self.budget:
                    self._fail(f"{res.size} merged points")
                res = np.union1d(res, block)
        self.pts = res if res is not None else np.zeros(0, dtype=np.int64)

    def _step_python(self) -> None:
        est = len(self.pts) * len(self.incs) * 120
        if est > self.budget:
            self._fail(f"{len(self.pts)}x{len(self.incs)} candidates")
        nxt: set[int] = set()
        for inc in self.incs:
            nxt.update(p + inc for p in self.pts)
        self.pts = nxt

    def coordinates(self) -> np.ndarray:
        """Current points as an (n, d) integer coordinate matrix."""
        d, w = self.g.d, self.w
        mask = (1 << w) - 1
        if self.use_numpy:
            out = np.empty((self.pts.size, d), dtype=np.int64)
            for i in range(d):
                out[:, i] = (self.pts >> (w * i)) & mask
            return out
        rows = sorted(self.pts)
        out = np.empty((len(rows), d), dtype=np.int64)
        for r, p in enumerate(rows):
            for i in range(d):
                out[r, i] = (p >> (w * i)) & mask
        return out


def monomial_counts(g: Graph, k_max: int,
                    memory_budget: int = DEFAULT_MEMORY_BUDGET) -> list[int]:
    """H(0..k_max): number of distinct degree-k monomials of the edge ring."""
    if k_max < 0:
        raise ContractError("monomial_counts: negative degree")
    dp = _SumsetDP(g, k_max, memory_budget)
    counts = [1]
    for _ in range(k_max):
        dp.step()
        counts.append(dp.count())
    return counts


def monomial_count(g: Graph, k: int,
                   memory_budget: int = DEFAULT_MEMORY_BUDGET) -> int:
    return monomial_counts(g, k, memory_budget)[k]


def lattice_point_coordinates(g: Graph, k: int,
                              memory_budget: int = DEFAULT_MEMORY_BUDGET) -> np.ndarray:
    """Coordinate matrix of the degree-k sumset points, ascending key order."""
    dp = _SumsetDP(g, k, memory_budget)
    for _ in range(k):
        dp.step()
    return dp.coordinates()


def h_vector(g: Graph, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> HVector:
    """h-vector of the edge ring of a connected graph with at least one edge.

    Computes H(0..d), applies the binomial transform against
    (1 - t)^D, and insists that the numerator tail beyond the expected
    degree bound vanishes and that no coefficient is negative; either
    failure raises a computation error rather than returning a wrong
    answer.
    """
    if g.edge_count == 0 or not is_connected(g):
        raise ContractError("h_vector requires a connected graph with >= 1 edge")
    bip = bipartition_of(g)
    d = g.d
    dim = d - 1 if bip is not None else d
    counts = monomial_counts(g, d, memory_budget)
    coeffs = []
    for j in range(d + 1):
        c = 0
        for i in range(min(j, dim) + 1):
            term = math.comb(dim, i) * counts[j - i]
            c += -term if i & 1 else term
        coeffs.append(c)
    cap = d - 2 if bip is not None else d
    s = 0
    for j in range(min(cap, d) + 1):
        if coeffs[j] != 0:
            s = j
    for j in range(d + 1):
        if j > s and coeffs[j] != 0:
            raise ComputationError(
                f"Hilbert numerator does not vanish at degree {j} "
                f"(c_{j} = {coeffs[j]}); window d={d} too small or ring not CM")
        if coeffs[j] < 0:
            raise ComputationError(f"negative Hilbert numerator coefficient c_{j} = {coeffs[j]}")
    return HVector(coefficients=tuple(coeffs[: s + 1]), krull_dim=dim)


def h1_formula(g: Graph, bip: Bipartition) -> int:
    """Linear coefficient of the h-polynomial: |E| - d + 1."""
    if not is_connected(g):
        raise ContractError("h1_formula requires a connected graph")
    return g.edge_count - g.d + 1


def is_palindromic(h) -> bool:
    """h_i = h_{s-i} for all i."""
    coeffs = h.coefficients if isinstance(h, HVector) else tuple(h)
    return coeffs == coeffs[::-1]


def interior_count_via_reciprocity(h: HVector, k: int) -> int:
    """Number of interior lattice points of the k-th dilate, read off the
    reciprocity series t^D h(1/t) / (1-t)^D."""
    if k < 0:
        raise ContractError("interior_count_via_reciprocity: negative degree")
    dim = h.krull_dim
    total = 0
    for i in range(max(0, dim - k), h.s + 1):
        total += h.coefficients[i] * math.comb(k + i - 1, dim - 1)
    return total


def _acceptable_weights(g: Graph, bip: Bipartition, max_side: int) -> np.ndarray:
    """Column per acceptable X-subset T: +1 on N(T), -1 on T."""
    acc = enumerate_acceptable(g, bip, "X", tight_only=False, max_side=max_side)
    weights = np.zeros((g.d, len(acc)), dtype=np.int64)
    for col, t in enumerate(acc):
        for v in bits(t.nbhd):
            weights[v, col] = 1
        for v in bits(t.members):
            weights[v, col] = -1
    return weights


def interior_lattice_points(
    g: Graph,
    bip: Bipartition,
    k: int,
    max_side: int = 16,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
) -> list[tuple[int, ...]]:
    """Lattice points interior to the k-th dilate of the edge polytope.

    Enumerates the points of the dilate by the sumset DP (the ring is
    normal for bipartite graphs) and keeps those with every coordinate
    >= 1 and every acceptable-set inequality strict.  Requires a
    2-connected bipartite graph so that all coordinate hyperplanes
    support facets.
    """
    if bip is None or not is_two_connected(g):
        raise ContractError("interior_lattice_points requires a 2-connected bipartite graph")
    coords = lattice_point_coordinates(g, k, memory_budget)
    if coords.shape[0] == 0:
        return []
    keep = (coords >= 1).all(axis=1)
    weights = _acceptable_weights(g, bip, max_side)
    if weights.shape[1]:
        keep &= (coords @ weights >= 1).all(axis=1)
    return [tuple(int(c) for c in row) for row in coords[keep]]


def interior_nonedge_points(
    g: Graph,
    bip: Bipartition,
    max_side: int = 16,
) -> tuple[tuple[int, int], ...]:
    """Cross non-edges (x, y) with 1 + e_x + e_y interior to the
    (n+1)-st dilate.

    The candidate point has all coordinates positive and the right
    coordinate sums, so membership reduces to the acceptable-facet
    forms being strict: delta(T) + [y in N(T)] - [x in T] >= 1 for
    every acceptable X-subset T.  Caller guarantees a 2-connected
    matching-covered bipartite graph.
    """
    if bip is None or not is_two_connected(g):
        raise ContractError("interior_nonedge_points requires a 2-connected bipartite graph")
    acc = enumerate_acceptable(g, bip, "X", tight_only=False, max_side=max_side)
    out = []
    for x in bip.X:
        missing = bip.y_mask & ~g.adj[x]
        for y in bits(missing):
            interior = True
            for t in acc:
                eps_y = (t.nbhd >> y) & 1
                eps_x = (t.members >> x) & 1
                if t.delta + eps_y - eps_x < 1:
                    interior = False
                    break
            if interior:
                out.append((x, y))
    return tuple(out)
