import pytest

from edgering import (InputError, bipartition_of, blocks, build_graph,
                      connected_components, delta, induced_subgraph,
                      is_connected, is_ordinary, is_two_connected,
                      neighborhood)
from edgering.bits import mask_of, members
from edgering.errors import ContractError

from helpers import (complete_bipartite, cycle, oracle_two_colorable, path,
                     petersen, two_c4_shared_vertex)


def all_graphs(d):
    """Every labeled simple graph on d vertices."""
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    for code in range(1 << len(pairs)):
        yield build_graph(d, [pairs[i] for i in range(len(pairs)) if (code >> i) & 1])


def test_build_k2():
    g = build_graph(2, [(0, 1)])
    assert g.edges == ((0, 1),)
    assert g.degree(0) == 1


def test_build_c4():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.edge_count == 4
    assert g.has_edge(3, 0) and not g.has_edge(0, 2)


def test_build_duplicates_collapse():
    g = build_graph(4, [(0, 1), (0, 1), (1, 0)])
    assert g.edges == ((0, 1),)


def test_build_errors():
    with pytest.raises(InputError):
        build_graph(2, [(0, 2)])
    with pytest.raises(InputError):
        build_graph(2, [(1, 1)])


def test_bipartition_c4():
    bip = bipartition_of(cycle(4))
    assert bip.X == (0, 2) and bip.Y == (1, 3)


def test_bipartition_triangle_absent():
    assert bipartition_of(cycle(3)) is None


def test_bipartition_petersen_absent():
    g = petersen()
    assert bipartition_of(g) is None
    assert not oracle_two_colorable(g)


def test_bipartition_isolated_to_x():
    g = build_graph(3, [(1, 2)])
    bip = bipartition_of(g)
    assert 0 in bip.X and 1 in bip.X and 2 in bip.Y


def test_bipartition_soundness_small():
    for g in all_graphs(5):
        bip = bipartition_of(g)
        if bip is None:
            assert not oracle_two_colorable(g)
        else:
            assert oracle_two_colorable(g)
            assert bip.x_mask & bip.y_mask == 0
            assert bip.x_mask | bip.y_mask == g.full_mask
            for u, v in g.edges:
                assert bip.side_of(u) != bip.side_of(v)


def test_connectivity():
    assert is_connected(cycle(6))
    two_edges = build_graph(4, [(0, 1), (2, 3)])
    assert not is_connected(two_edges)
    assert len(connected_components(two_edges)) == 2
    empty = build_graph(3, [])
    assert connected_components(empty) == [1, 2, 4]


def test_blocks_shared_vertex():
    decomp = blocks(two_c4_shared_vertex())
    assert len(decomp.blocks) == 2
    for b in decomp.blocks:
        assert b.graph.edge_count == 4 and b.graph.d == 4


def test_blocks_path():
    decomp = blocks(path(3))
    assert len(decomp.blocks) == 2
    assert all(b.graph.edge_count == 1 for b in decomp.blocks)


def test_blocks_cycle_single():
    decomp = blocks(cycle(6))
    assert len(decomp.blocks) == 1
    assert decomp.blocks[0].graph.edge_count == 6


def test_block_partition_exhaustive():
    """Block edge sets partition E(g), blocks are 2-connected or single
    edges, two blocks share at most one vertex."""
    for d in range(1, 7):
        for g in all_graphs(d):
            decomp = blocks(g)
            seen = []
            for b in decomp.blocks:
                lifted = {tuple(sorted((b.labels[u], b.labels[v])))
                          for u, v in b.graph.edges}
                seen.append(lifted)
                assert b.graph.edge_count == 1 or is_two_connected(b.graph)
            flat = [e for s in seen for e in s]
            assert sorted(flat) == sorted(g.edges)
            assert set(decomp.block_of_edge) == set(g.edges)
            for i in range(len(seen)):
                for j in range(i + 1, len(seen)):
                    vi = set(decomp.blocks[i].labels)
                    vj = set(decomp.blocks[j].labels)
                    assert len(vi & vj) <= 1


def test_block_partition_random_seven_vertices():
    """Randomized continuation of the partition property at 7 vertices."""
    from edgering.generate import make_rng
    rng = make_rng(1234)
    pairs = [(i, j) for i in range(7) for j in range(i + 1, 7)]
    for _ in range(3000):
        code = int(rng.integers(0, 1 << len(pairs)))
        g = build_graph(7, [pairs[i] for i in range(len(pairs)) if (code >> i) & 1])
        decomp = blocks(g)
        flat = sorted(tuple(sorted((b.labels[u], b.labels[v])))
                      for b in decomp.blocks for u, v in b.graph.edges)
        assert flat == sorted(g.edges)


def test_two_connected_iff_single_spanning_block():
    for d in range(2, 7):
        for g in all_graphs(d):
            if g.isolated_mask():
                continue
            decomp = blocks(g)
            rhs = (len(decomp.blocks) == 1
                   and len(decomp.blocks[0].labels) == d
                   and d >= 3)
            assert is_two_connected(g) == rhs


def test_ordinary():
    c6 = cycle(6)
    assert all(is_ordinary(c6, v) for v in range(6))
    p3 = path(3)
    assert not is_ordinary(p3, 1)
    assert is_ordinary(p3, 0)
    with pytest.raises(ContractError):
        is_ordinary(build_graph(3, [(0, 1)]), 0)  # disconnected


def test_two_connected_tiny_convention():
    assert not is_two_connected(build_graph(2, [(0, 1)]))   # K2
    assert not is_two_connected(build_graph(1, []))
    assert is_two_connected(cycle(3))
    assert is_two_connected(cycle(4))
    assert not is_two_connected(path(3))


def test_neighborhood_delta():
    c6 = cycle(6)
    bip = bipartition_of(c6)
    assert neighborhood(c6, mask_of([0])) == mask_of([1, 5])
    assert delta(c6, bip, mask_of([0])) == 1
    k33 = complete_bipartite(3, 3)
    bip33 = bipartition_of(k33)
    assert delta(k33, bip33, mask_of([0, 1])) == 1
    assert delta(c6, bip, 0) == 0
    with pytest.raises(ContractError):
        delta(c6, bip, mask_of([0, 1]))  # mixes sides


def test_delta_monotone_under_edge_addition():
    g = cycle(6)
    bigger = g.add_edges([(0, 3)])
    for t_code in range(1, 8):
        t = mask_of([v for i, v in enumerate([0, 2, 4]) if (t_code >> i) & 1])
        assert neighborhood(g, t) & ~neighborhood(bigger, t) == 0


def test_induced_subgraph():
    c6 = cycle(6)
    sub = induced_subgraph(c6, mask_of([0, 1, 2, 3, 4]))
    assert sub.graph.edge_count == 4  # path on 5 vertices
    assert sub.labels == (0, 1, 2, 3, 4)
    empty = induced_subgraph(c6, 0)
    assert empty.graph.d == 0
    k33 = complete_bipartite(3, 3)
    xside = induced_subgraph(k33, mask_of([0, 1, 2]))
    assert xside.graph.edge_count == 0 and xside.graph.d == 3


def test_members_roundtrip():
    assert members(mask_of([5, 1, 3])) == (1, 3, 5)
