"""Shared graph constructors and independent brute-force oracles.

The oracles deliberately avoid the library's own machinery (bitmask
spreads, the sumset DP, the facet description) so that agreement with
them is a meaningful check and not a tautology.
"""

from itertools import combinations, combinations_with_replacement
from math import comb

from edgering import build_graph


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a, b):
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cube_q3():
    edges = [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)]
    return build_graph(8, edges)


def petersen():
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, edges)


def star(leaves):
    return build_graph(leaves + 1, [(0, i + 1) for i in range(leaves)])


def two_c4_shared_vertex():
    # squares 0-1-2-3 and 3-4-5-6 meeting at the cut vertex 3
    return build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 3)])


def two_c6_shared_vertex():
    return build_graph(11, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
                            (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 5)])


def two_c4_bridge():
    # disjoint squares joined by a single bridge edge: not matching-covered
    return build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0),
                           (4, 5), (5, 6), (6, 7), (7, 4), (3, 4)])


def brace_counterexample():
    """2-connected bipartite (4,4) graph that is not matching-covered:
    A = {x1, x2} has N(A) = {y1, y2}, so the cross edges y1-x3, y2-x4
    lie in no perfect matching."""
    x1, x2, x3, x4, y1, y2, y3, y4 = range(8)
    edges = [(x1, y1), (x1, y2), (x2, y1), (x2, y2),
             (x3, y3), (x3, y4), (x4, y3), (x4, y4),
             (y1, x3), (y2, x4)]
    return build_graph(8, edges)


def c6_with_pendant_path():
    return build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7)])


# ---------------------------------------------------------------- oracles


def oracle_monomial_count(g, k):
    """Distinct sums of k edge vectors by direct multiset enumeration."""
    if k == 0:
        return 1
    seen = set()
    for combo in combinations_with_replacement(g.edges, k):
        coords = [0] * g.d
        for (u, v) in combo:
            coords[u] += 1
            coords[v] += 1
        seen.add(tuple(coords))
    return len(seen)


def oracle_two_colorable(g):
    """Bipartiteness by scanning all 2-colorings (tiny graphs only)."""
    for code in range(1 << g.d):
        if all((code >> u) & 1 != (code >> v) & 1 for u, v in g.edges):
            return True
    return g.edge_count == 0


def oracle_perfect_matchings(g):
    """All perfect matchings by recursive edge selection."""
    if g.d % 2:
        return []
    out = []

    def extend(mask, chosen):
        if mask == (1 << g.d) - 1:
            out.append(tuple(sorted(chosen)))
            return
        v = next(i for i in range(g.d) if not (mask >> i) & 1)
        for u in range(g.d):
            if u != v and not (mask >> u) & 1 and g.has_edge(u, v):
                extend(mask | (1 << u) | (1 << v), chosen + [(min(u, v), max(u, v))])

    extend(0, [])
    return out


def oracle_matching_covered(g):
    pms = oracle_perfect_matchings(g)
    covered = {e for pm in pms for e in pm}
    return covered == set(g.edges)


def oracle_max_matching_size(g):
    """Maximum matching by brute force over edge subsets (small graphs)."""
    best = 0
    edges = g.edges
    for r in range(len(edges), 0, -1):
        if r <= best:
            break
        for combo in combinations(edges, r):
            used = 0
            ok = True
            for u, v in combo:
                m = (1 << u) | (1 << v)
                if used & m:
                    ok = False
                    break
                used |= m
            if ok:
                best = r
                break
    return best


def oracle_interior_points_by_halfspaces(g, bip, k, acceptable_sets):
    """Interior lattice points of the k-th dilate by enumerating every
    integer vector with the right side sums and testing all facet
    inequalities strictly.  Independent of the sumset DP."""
    xs, ys = list(bip.X), list(bip.Y)
    out = []
    for xpart in compositions(k, len(xs)):
        if 0 in xpart:
            continue
        for ypart in compositions(k, len(ys)):
            if 0 in ypart:
                continue
            coords = [0] * g.d
            for v, c in zip(xs, xpart):
                coords[v] = c
            for v, c in zip(ys, ypart):
                coords[v] = c
            if all(sum(coords[y] for y in t_n) - sum(coords[x] for x in t_m) >= 1
                   for t_m, t_n in acceptable_sets):
                out.append(tuple(coords))
    return sorted(out)


def oracle_lattice_points_by_halfspaces(g, bip, k, acceptable_sets):
    """All lattice points of the k-th dilate: side sums k, coordinates
    >= 0, all acceptable inequalities >= 0."""
    xs, ys = list(bip.X), list(bip.Y)
    out = []
    for xpart in compositions(k, len(xs)):
        for ypart in compositions(k, len(ys)):
            coords = [0] * g.d
            for v, c in zip(xs, xpart):
                coords[v] = c
            for v, c in zip(ys, ypart):
                coords[v] = c
            if all(sum(coords[y] for y in t_n) - sum(coords[x] for x in t_m) >= 0
                   for t_m, t_n in acceptable_sets):
                out.append(tuple(coords))
    return sorted(out)


def compositions(total, parts):
    """All tuples of ``parts`` non-negative integers summing to total."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def binomial_transform_h(counts, dim, cap):
    """Independent h-vector extraction from a Hilbert-function window."""
    coeffs = []
    for j in range(len(counts)):
        c = 0
        for i in range(min(j, dim) + 1):
            c += (-1) ** i * comb(dim, i) * counts[j - i]
        coeffs.append(c)
    s = max(j for j in range(cap + 1) if coeffs[j] != 0 or j == 0)
    assert all(c == 0 for c in coeffs[s + 1:]), coeffs
    return tuple(coeffs[: s + 1])
