"""Gorenstein classification of bipartite edge rings and the blockwise
Gorenstein closure.

Two independent routes decide Gorensteinness:

* combinatorial: every block has a perfect matching and all of its
  acceptable sets are tight (single-edge blocks pass trivially);
* palindromic: the h-vector, computed by the lattice-point dynamic
  program, is symmetric.

The two must agree (the edge ring of a bipartite graph is a normal,
hence Cohen-Macaulay, domain); keeping the code paths disjoint makes
the agreement a meaningful machine check rather than a tautology.

The closure adjoins, inside each block, every cross non-edge that no
tight acceptable set separates.  The result is the minimal Gorenstein
bipartite supergraph blockwise, has the same h-polynomial degree, and
preserves the next-to-leading coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, ContractError
from .facets import FillSet, enumerate_acceptable, fill_set, non_edges
from .graph import (Bipartition, Graph, Subgraph, bipartition_of, blocks,
                    connected_components, induced_subgraph, is_two_connected)
from .hilbert import (DEFAULT_MEMORY_BUDGET, HVector, h_vector, is_palindromic)
from .matching import DEFAULT_MAX_SIDE, has_perfect_matching, is_matching_covered


def poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return tuple(out)


def drop_isolated(g: Graph) -> Subgraph:
    keep = g.full_mask & ~g.isolated_mask()
    return induced_subgraph(g, keep)


def h_vector_product(g: Graph, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> HVector:
    """h-vector of an arbitrary graph: isolated vertices are dropped and
    the h-polynomials of the connected components are multiplied (the
    edge ring is the tensor product over components)."""
    core = drop_isolated(g).graph
    if core.edge_count == 0:
        return HVector(coefficients=(1,), krull_dim=0)
    coeffs: tuple[int, ...] = (1,)
    dim = 0
    for comp_mask in connected_components(core):
        comp = induced_subgraph(core, comp_mask).graph
        h = h_vector(comp, memory_budget)
        coeffs = poly_mul(coeffs, h.coefficients)
        dim += h.krull_dim
    return HVector(coefficients=coeffs, krull_dim=dim)


@dataclass(frozen=True)
class BlockRecord:
    """Per-block classification data."""

    subgraph: Subgraph
    two_connected: bool
    matching_covered: bool
    hvec: HVector
    acceptable_count: int   # acceptable X-subsets of the block
    tight_count: int        # tight acceptable X-subsets


@dataclass(frozen=True)
class Classification:
    hvec: HVector
    pseudo_gorenstein: bool
    gorenstein_combinatorial: bool
    gorenstein_palindromic: bool
    per_block: tuple[BlockRecord, ...]


@dataclass(frozen=True)
class ClosureResult:
    closed_graph: Graph
    per_block_fill: dict[int, FillSet]
    added_edges: tuple[tuple[int, int], ...]   # parent labels
    original_h: HVector
    closed_h: HVector


@dataclass(frozen=True)
class MainTheoremVerdict:
    hvec: HVector
    hypothesis_holds: bool
    conclusion_holds: bool | None   # None when the hypothesis fails


def _block_bipartition(block: Graph) -> Bipartition:
    bip = bipartition_of(block)
    if bip is None:
        raise ContractError("block of a bipartite graph failed to 2-color")
    return bip


def is_pseudo_gorenstein(g: Graph, bip: Bipartition) -> bool:
    """Every block is matching-covered (trailing h-coefficient 1)."""
    for block in blocks(g).blocks:
        bg = block.graph
        if bg.edge_count == 1:
            continue
        if not is_matching_covered(bg, _block_bipartition(bg)):
            return False
    return True


def is_gorenstein_combinatorial(g: Graph, bip: Bipartition,
                                max_side: int = DEFAULT_MAX_SIDE) -> bool:
    """Blockwise perfect matching plus tightness of all acceptable sets."""
    for block in blocks(g).blocks:
        bg = block.graph
        if bg.edge_count == 1:
            continue
        bbip = _block_bipartition(bg)
        if not has_perfect_matching(bg, bbip):
            return False
        for t in enumerate_acceptable(bg, bbip, "X", max_side=max_side):
            if not t.tight:
                return False
    return True


def is_gorenstein_palindromic(g: Graph,
                              memory_budget: int = DEFAULT_MEMORY_BUDGET) -> bool:
    """Symmetry of the h-vector, computed by the lattice DP."""
    return is_palindromic(h_vector_product(g, memory_budget))


def verify_main_theorem(g: Graph, bip: Bipartition,
                        max_side: int = DEFAULT_MAX_SIDE,
                        memory_budget: int = DEFAULT_MEMORY_BUDGET) -> MainTheoremVerdict:
    """If h_s = 1 and h_1 = h_{s-1} then the ring must be Gorenstein by
    both routes; a hypothesis-true/conclusion-false outcome would be a
    counterexample to the classification and is reported as such."""
    hvec = h_vector_product(g, memory_budget)
    s = hvec.s
    hypothesis = hvec.coefficients[-1] == 1 and (s <= 1 or hvec.get(1) == hvec.get(s - 1))
    if not hypothesis:
        return MainTheoremVerdict(hvec=hvec, hypothesis_holds=False, conclusion_holds=None)
    conclusion = (is_gorenstein_combinatorial(g, bip, max_side)
                  and is_palindromic(hvec))
    return MainTheoremVerdict(hvec=hvec, hypothesis_holds=True, conclusion_holds=conclusion)


def gorenstein_closure(g: Graph, bip: Bipartition,
                       max_side: int = DEFAULT_MAX_SIDE,
                       memory_budget: int = DEFAULT_MEMORY_BUDGET) -> ClosureResult:
    """Blockwise Gorenstein closure of a pseudo-Gorenstein bipartite graph.

    Single-edge blocks are kept; every other block gets its Fill set
    (computed against the block's own bipartition) adjoined.  The
    result is verified on the spot: it must be Gorenstein by both
    routes, have the same h-degree, and preserve the next-to-leading
    coefficient; any failure is an internal contract error.
    """
    if bip is None:
        raise ContractError("gorenstein_closure requires a bipartite graph")
    if not is_pseudo_gorenstein(g, bip):
        raise ContractError("gorenstein_closure requires a pseudo-Gorenstein input")
    original_h = h_vector_product(g, memory_budget)

    per_block_fill: dict[int, FillSet] = {}
    added: list[tuple[int, int]] = []
    for idx, block in enumerate(blocks(g).blocks):
        bg = block.graph
        if bg.edge_count == 1:
            per_block_fill[idx] = FillSet(non_edges=())
            continue
        bbip = _block_bipartition(bg)
        local = fill_set(bg, bbip, max_side=max_side)
        lifted = tuple((block.labels[x], block.labels[y]) for x, y in local.non_edges)
        per_block_fill[idx] = FillSet(non_edges=lifted)
        added.extend(lifted)

    closed = g.add_edges([(min(x, y), max(x, y)) for x, y in added])
    if not is_gorenstein_combinatorial(closed, bip, max_side):
        raise ContractError("closure verification failed: filled graph is not "
                            "Gorenstein by the combinatorial test")
    closed_h = h_vector_product(closed, memory_budget)
    if not is_palindromic(closed_h):
        raise ContractError("closure verification failed: filled graph h-vector "
                            f"{closed_h.coefficients} is not palindromic")
    s = original_h.s
    if closed_h.s != s:
        raise ContractError(f"closure verification failed: degree changed {s} -> {closed_h.s}")
    if s >= 1 and closed_h.get(s - 1) != original_h.get(s - 1):
        raise ContractError("closure verification failed: next-to-leading coefficient "
                            f"{original_h.get(s - 1)} -> {closed_h.get(s - 1)}")
    return ClosureResult(closed_graph=closed, per_block_fill=per_block_fill,
                         added_edges=tuple(added), original_h=original_h,
                         closed_h=closed_h)


def verify_closure_minimality(b: Graph, bip: Bipartition,
                              missing_budget: int = 12,
                              max_side: int = DEFAULT_MAX_SIDE) -> bool:
    """Brute-force minimality of the filled block: every Gorenstein
    bipartite supergraph on the same bipartition contains the Fill set.

    Enumerates all 2^m cross-edge supersets (m = number of missing
    cross edges, capped by ``missing_budget``)."""
    if not is_two_connected(b) or not is_matching_covered(b, bip):
        raise ContractError("verify_closure_minimality requires a 2-connected "
                            "matching-covered block")
    missing = non_edges(b, bip)
    m = len(missing)
    if m > missing_budget:
        raise CapacityError(f"{m} missing cross edges exceed the supergraph "
                            f"enumeration budget {missing_budget}")
    fill = set(fill_set(b, bip, max_side=max_side).non_edges)
    for code in range(1 << m):
        selected = {missing[i] for i in range(m) if (code >> i) & 1}
        if fill <= selected:
            continue  # contains the fill set, cannot be a counterexample
        k = b.add_edges([(min(x, y), max(x, y)) for x, y in selected])
        if is_gorenstein_combinatorial(k, bip, max_side):
            return False
    return True


def block_product_check(g: Graph, bip: Bipartition,
                        memory_budget: int = DEFAULT_MEMORY_BUDGET) -> bool:
    """Direct DP h-vector equals the product of the block h-vectors,
    checked per connected component."""
    core = drop_isolated(g).graph
    for comp_mask in connected_components(core):
        if comp_mask == 0:
            continue
        comp = induced_subgraph(core, comp_mask).graph
        if comp.edge_count == 0:
            continue
        direct = h_vector(comp, memory_budget)
        coeffs: tuple[int, ...] = (1,)
        for block in blocks(comp).blocks:
            coeffs = poly_mul(coeffs, h_vector(block.graph, memory_budget).coefficients)
        if direct.coefficients != coeffs:
            return False
    return True


def classify(g: Graph, bip: Bipartition,
             max_side: int = DEFAULT_MAX_SIDE,
             memory_budget: int = DEFAULT_MEMORY_BUDGET) -> Classification:
    """Full classification record for reporting."""
    records = []
    pseudo = True
    combinatorial = True
    for block in blocks(g).blocks:
        bg = block.graph
        two_conn = bg.edge_count > 1
        bbip = _block_bipartition(bg)
        if two_conn:
            mc = is_matching_covered(bg, bbip)
            acc = enumerate_acceptable(bg, bbip, "X", max_side=max_side)
            n_tight = sum(1 for t in acc if t.tight)
            ok = has_perfect_matching(bg, bbip) and all(t.tight for t in acc)
            records.append(BlockRecord(
                subgraph=block, two_connected=True, matching_covered=mc,
                hvec=h_vector(bg, memory_budget),
                acceptable_count=len(acc), tight_count=n_tight))
        else:
            mc, ok = True, True
            records.append(BlockRecord(
                subgraph=block, two_connected=False, matching_covered=True,
                hvec=HVector((1,), krull_dim=1),
                acceptable_count=0, tight_count=0))
        pseudo &= mc
        combinatorial &= ok
    hvec = h_vector_product(g, memory_budget)
    return Classification(
        hvec=hvec,
        pseudo_gorenstein=pseudo,
        gorenstein_combinatorial=combinatorial,
        gorenstein_palindromic=is_palindromic(hvec),
        per_block=tuple(records),
    )
