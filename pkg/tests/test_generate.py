import pytest

from edgering import is_connected, is_matching_covered, is_two_connected
from edgering.errors import CapacityError, GenerationError
from edgering.generate import (exhaustive_bipartite, make_rng, natural_sides,
                               random_bipartite, random_matching_union,
                               side_pairs)

from helpers import complete_bipartite


def test_exhaustive_counts_2x2():
    graphs = list(exhaustive_bipartite(2, 2, connected=True))
    assert len(graphs) == 5


def test_exhaustive_counts_1x1():
    all_graphs = list(exhaustive_bipartite(1, 1, connected=False))
    assert len(all_graphs) == 2
    connected = list(exhaustive_bipartite(1, 1, connected=True))
    assert len(connected) == 1


def test_exhaustive_contains_k33_and_hexagon():
    fam = list(exhaustive_bipartite(3, 3, connected=True,
                                    two_connected=True, matching_covered=True))
    edge_sets = {g.edges for g in fam}
    assert complete_bipartite(3, 3).edges in edge_sets
    hexagons = [g for g in fam
                if g.edge_count == 6 and all(g.degree(v) == 2 for v in range(6))]
    assert hexagons


def test_exhaustive_capacity():
    with pytest.raises(CapacityError):
        next(exhaustive_bipartite(6, 5))


def test_side_pairs():
    pairs = side_pairs(10)
    assert (5, 5) in pairs and (4, 6) in pairs
    assert all(nx <= ny and nx + ny <= 10 and nx * ny <= 25 for nx, ny in pairs)


def test_random_bipartite_deterministic():
    a = random_bipartite(4, 4, 0.5, make_rng(123))
    b = random_bipartite(4, 4, 0.5, make_rng(123))
    assert a.edges == b.edges
    c = random_bipartite(4, 4, 0.5, make_rng(124))
    assert is_connected(a) and is_connected(c)


def test_random_bipartite_full_probability():
    g = random_bipartite(3, 3, 1.0, make_rng(0))
    assert g.edges == complete_bipartite(3, 3).edges


def test_random_bipartite_generation_error():
    with pytest.raises(GenerationError):
        random_bipartite(1, 8, 0.01, make_rng(5), max_retries=5)


def test_matching_union_matching_covered():
    rng = make_rng(42)
    for _ in range(10):
        g = random_matching_union(3, 2, rng)
        assert is_connected(g)
        assert is_matching_covered(g, natural_sides(3, 3))


def test_matching_union_deterministic():
    a = random_matching_union(5, 3, make_rng(7))
    b = random_matching_union(5, 3, make_rng(7))
    assert a.edges == b.edges


def test_natural_sides():
    bip = natural_sides(2, 3)
    assert bip.X == (0, 1) and bip.Y == (2, 3, 4)


def test_exhaustive_two_connected_filter():
    fam = list(exhaustive_bipartite(2, 2, connected=True, two_connected=True))
    assert len(fam) == 1 and fam[0].edge_count == 4   # only C4
    for g in fam:
        assert is_two_connected(g)
