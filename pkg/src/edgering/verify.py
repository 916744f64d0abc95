"""Machine verification of the classification theorems over graph families.

Each named check takes one graph instance, decides whether the
statement's preconditions apply (if not, the instance is *skipped*),
and otherwise tests the statement, usually against two independently
computed routes.  Runners sweep the checks over exhaustive or seeded
random families and aggregate per-check counts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import facets, generate, hilbert, matching
from .classify import (block_product_check, gorenstein_closure,
                       h_vector_product, is_gorenstein_combinatorial,
                       is_pseudo_gorenstein, verify_closure_minimality)
from .bits import bits, members, popcount
from .errors import (CapacityError, ComputationError, ContractError,
                     GenerationError)
from .graph import bipartition_of, blocks, is_connected, is_two_connected


class CheckContext:
    """Lazily computed, shared per-instance data for the checkers."""

    def __init__(self, g, max_side=16, memory_budget=hilbert.DEFAULT_MEMORY_BUDGET,
                 minimality_budget=12):
        self.g = g
        self.max_side = max_side
        self.memory_budget = memory_budget
        self.minimality_budget = minimality_budget
        self._cache = {}

    def _get(self, key, fn):
        if key not in self._cache:
            try:
                self._cache[key] = ("ok", fn())
            except Exception as exc:  # cache failures too: budget errors repeat
                self._cache[key] = ("err", exc)
        kind, value = self._cache[key]
        if kind == "err":
            raise value
        return value

    @property
    def bip(self):
        return self._get("bip", lambda: bipartition_of(self.g))

    @property
    def connected(self):
        return self._get("conn", lambda: is_connected(self.g))

    @property
    def two_connected(self):
        return self._get("2conn", lambda: is_two_connected(self.g))

    @property
    def matching_covered(self):
        return self._get("mc", lambda: matching.is_matching_covered(self.g, self.bip))

    @property
    def mc2c(self):
        """2-connected matching-covered bipartite: the standing assumption
        of the facet lemmas."""
        return (self.bip is not None and self.connected
                and self.two_connected and self.matching_covered)

    @property
    def h(self):
        return self._get("h", lambda: h_vector_product(self.g, self.memory_budget))

    @property
    def gorenstein_combinatorial(self):
        return self._get("gcomb", lambda: is_gorenstein_combinatorial(
            self.g, self.bip, self.max_side))

    @property
    def pseudo_gorenstein(self):
        return self._get("pseudo", lambda: is_pseudo_gorenstein(self.g, self.bip))

    @property
    def acceptable_x(self):
        return self._get("accx", lambda: facets.enumerate_acceptable(
            self.g, self.bip, "X", max_side=self.max_side))

    @property
    def acceptable_y(self):
        return self._get("accy", lambda: facets.enumerate_acceptable(
            self.g, self.bip, "Y", max_side=self.max_side))

    @property
    def tight_acc_x(self):
        return [t for t in self.acceptable_x if t.tight]

    @property
    def tight_acc_y(self):
        return [t for t in self.acceptable_y if t.tight]

    @property
    def non_edges(self):
        return self._get("ne", lambda: facets.non_edges(self.g, self.bip))

    def x_separated(self, x, y):
        return any(facets.separates(t, x, y) for t in self.tight_acc_x)

    def y_separated(self, x, y):
        return any(facets.separates(t, y, x) for t in self.tight_acc_y)


OK = "ok"
SKIP = "skip"
FAIL = "fail"


def _tight_subsets(ctx, side):
    """All tight subsets of a side (not only acceptable ones)."""
    side_mask = ctx.bip.side_mask(side)
    verts = members(side_mask)
    n = len(verts)
    if n > ctx.max_side:
        raise CapacityError(f"side size {n} exceeds cap {ctx.max_side}")
    out = []
    g = ctx.g
    for code in range(1, 1 << n):
        t = 0
        nbhd = 0
        size = 0
        c = code
        i = 0
        while c:
            if c & 1:
                t |= 1 << verts[i]
                nbhd |= g.adj[verts[i]]
                size += 1
            c >>= 1
            i += 1
        if popcount(nbhd) - size == 1:
            out.append((t, nbhd))
    return out


def check_strict_hall(ctx) -> tuple[str, str]:
    if not ctx.mc2c:
        return SKIP, "needs 2-connected matching-covered bipartite"
    if matching.strict_hall_holds(ctx.g, ctx.bip, ctx.max_side):
        return OK, ""
    return FAIL, "a proper subset has |N(A)| <= |A|"


def check_h1(ctx) -> tuple[str, str]:
    if ctx.bip is None or not ctx.connected:
        return SKIP, "needs connected bipartite"
    expect = hilbert.h1_formula(ctx.g, ctx.bip)
    got = ctx.h.get(1)
    if got == expect:
        return OK, ""
    return FAIL, f"h_1 = {got}, |E|-d+1 = {expect}"


def check_reciprocity(ctx) -> tuple[str, str]:
    """Interior counts by reciprocity vs. facet enumeration, and the
    next-to-leading coefficient identity."""
    if not ctx.mc2c:
        return SKIP, "needs 2-connected matching-covered bipartite"
    h = ctx.h
    n = popcount(ctx.bip.x_mask)
    for k in range(1, n + 3):
        via_h = hilbert.interior_count_via_reciprocity(h, k)
        via_facets = len(hilbert.interior_lattice_points(
            ctx.g, ctx.bip, k, ctx.max_side, ctx.memory_budget))
        if via_h != via_facets:
            return FAIL, f"interior count at k={k}: reciprocity {via_h} != facets {via_facets}"
    lhs = h.get(h.s - 1) if h.s >= 1 else 0
    rhs = hilbert.interior_count_via_reciprocity(h, n + 1) - 2 * n + 1
    if lhs != rhs:
        return FAIL, f"h_(s-1) = {lhs} but interior((n+1)P) - 2n + 1 = {rhs}"
    return OK, ""


def check_nonedge_interior(ctx) -> tuple[str, str]:
    """h_{s-1} - h_1 equals the number of non-edges whose shifted point
    is interior, with the interior set confirmed by the dilate DP."""
    if not ctx.mc2c:
        return SKIP, "needs 2-connected matching-covered bipartite"
    h = ctx.h
    pts = hilbert.interior_nonedge_points(ctx.g, ctx.bip, ctx.max_side)
    diff = (h.get(h.s - 1) if h.s >= 1 else 0) - h.get(1)
    if diff != len(pts):
        return FAIL, f"h_(s-1) - h_1 = {diff} but {len(pts)} interior non-edge points"
    # every interior point of (n+1)P is 1 + e_x + e_y for an edge or a
    # counted non-edge; confirm against the dilate enumeration
    n = popcount(ctx.bip.x_mask)
    all_interior = set(hilbert.interior_lattice_points(
        ctx.g, ctx.bip, n + 1, ctx.max_side, ctx.memory_budget))

    def shifted(x, y):
        coords = [1] * ctx.g.d
        coords[x] += 1
        coords[y] += 1
        return tuple(coords)

    expected = {shifted(u, v) for u, v in ctx.g.edges}
    expected.update(shifted(x, y) for x, y in pts)
    if all_interior != expected:
        return FAIL, "interior non-edge points disagree with the dilate enumeration"
    return OK, ""


def check_unique_interior(ctx) -> tuple[str, str]:
    """The n-th dilate has exactly one interior lattice point: all-ones."""
    if not ctx.mc2c:
        return SKIP, "needs 2-connected matching-covered bipartite"
    n = popcount(ctx.bip.x_mask)
    pts = hilbert.interior_lattice_points(ctx.g, ctx.bip, n, ctx.max_side, ctx.memory_budget)
    if pts == [tuple([1] * ctx.g.d)]:
        return OK, ""
    return FAIL, f"interior(nP) = {pts}"


def check_separation_symmetry(ctx) -> tuple[str, str]:
    """Tight-separation of a non-edge on the X side, on the Y side, and
    the coefficient condition h_1 = h_{s-1} all agree."""
    if not ctx.mc2c:
        return SKIP, "needs 2-connected matching-covered bipartite"
    x_sep = {(x, y) for (x, y) in ctx.non_edges if ctx.x_separated(x, y)}
    y_sep = {(x, y) for (x, y) in ctx.non_edges if ctx.y_separated(x, y)}
    if x_sep != y_sep:
        return FAIL, f"X-separated {sorted(x_sep)} != Y-separated {sorted(y_sep)}"
    h = ctx.h
    coeff = h.get(1) == (h.get(h.s - 1) if h.s >= 1 else 0)
    all_sep = len(x_sep) == len(ctx.non_edges)
    if coeff != all_sep:
        return FAIL, f"h_1 = h_(s-1) is {coeff} but full separation is {all_sep}"
    return OK, ""


def check_acceptable_tight(ctx) -> tuple[str, str]:
    """Full X-side separation holds iff every acceptable set (both
    sides) is tight; the separator construction is also exercised."""
    if not ctx.mc2c:
        return SKIP, "needs 2-connected matching-covered bipartite"
    all_sep = all(ctx.x_separated(x, y) for (x, y) in ctx.non_edges)
    all_tight = (all(t.tight for t in ctx.acceptable_x)
                 and all(t.tight for t in ctx.acceptable_y))
    if all_sep != all_tight:
        return FAIL, f"separation {all_sep} vs all-acceptable-tight {all_tight}"
    if all_tight:
        for (x, y) in ctx.non_edges:
            try:
                t = facets.component_separator(ctx.g, ctx.bip, x, y)
            except ContractError as exc:
                return FAIL, f"component separator failed at ({x},{y}): {exc}"
            if not t.tight or not facets.separates(t, x, y):
                return FAIL, f"component separator at ({x},{y}) is not a tight separator"
    return OK, ""


def check_uncross(ctx) -> tuple[str, str]:
    """Unions of tight sets with intersecting neighborhoods stay tight."""
    if not ctx.mc2c:
        return SKIP, "needs 2-connected matching-covered bipartite"
    for side in ("X", "Y"):
        tight = _tight_subsets(ctx, side)
        if len(tight) ** 2 > 1_000_000:
            raise CapacityError(f"{len(tight)} tight sets: pair scan too large")
        side_mask = ctx.bip.side_mask(side)
        for u, nu in tight:
            for v, nv in tight:
                if (u | v) == side_mask or nu & nv == 0:
                    continue
                try:
                    w = facets.uncross(ctx.g, ctx.bip, u, v, side)
                except ContractError as exc:
                    return FAIL, f"uncross({members(u)}, {members(v)}) on {side}: {exc}"
                if w != (u | v):
                    return FAIL, "uncross returned a wrong union"
    return OK, ""


def check_internal_cover(ctx) -> tuple[str, str]:
    """Where every non-edge is Y-separated, every acceptable set A and
    x in A admit a verified tight subset of A through x."""
    if not ctx.mc2c:
        return SKIP, "needs 2-connected matching-covered bipartite"
    if not all(ctx.y_separated(x, y) for (x, y) in ctx.non_edges):
        return SKIP, "hypothesis (Y-side tight separation) not satisfied"
    tight_y = ctx.tight_acc_y
    for a in ctx.acceptable_x:
        for x in bits(a.members):
            try:
                r = facets.internal_tight_cover(
                    ctx.g, ctx.bip, a, x, tight_y_sets=tight_y, max_side=ctx.max_side)
            except ContractError as exc:
                return FAIL, f"internal cover failed for A={members(a.members)}, x={x}: {exc}"
            if not (r >> x) & 1 or r & ~a.members:
                return FAIL, "internal cover returned a set violating x in R subset A"
    return OK, ""


def check_pseudo_trailing(ctx) -> tuple[str, str]:
    """Trailing h-coefficient 1 iff every block is matching-covered."""
    if ctx.bip is None:
        return SKIP, "needs bipartite"
    blockwise = ctx.pseudo_gorenstein
    trailing = ctx.h.coefficients[-1] == 1
    if blockwise == trailing:
        return OK, ""
    return FAIL, f"blocks matching-covered = {blockwise} but h_s = {ctx.h.coefficients[-1]}"


def check_main(ctx) -> tuple[str, str]:
    """h_s = 1 and h_1 = h_{s-1} must force Gorenstein by both routes."""
    if ctx.bip is None:
        return SKIP, "needs bipartite"
    h = ctx.h
    s = h.s
    hypothesis = h.coefficients[-1] == 1 and (s <= 1 or h.get(1) == h.get(s - 1))
    if not hypothesis:
        return OK, "hypothesis not applicable"
    if ctx.gorenstein_combinatorial and hilbert.is_palindromic(h):
        return OK, ""
    return FAIL, (f"COUNTEREXAMPLE: h = {h.coefficients} has h_s=1 and "
                  "h_1=h_(s-1) but the ring is not Gorenstein")


def check_stanley(ctx) -> tuple[str, str]:
    """The combinatorial Gorenstein test agrees with h-vector symmetry."""
    if ctx.bip is None:
        return SKIP, "needs bipartite"
    comb = ctx.gorenstein_combinatorial
    palin = hilbert.is_palindromic(ctx.h)
    if comb == palin:
        return OK, ""
    return FAIL, (f"combinatorial {comb} != palindromic {palin} "
                  f"(h = {ctx.h.coefficients})")


def check_block_product(ctx) -> tuple[str, str]:
    if ctx.bip is None or ctx.g.edge_count == 0:
        return SKIP, "needs bipartite with an edge"
    if block_product_check(ctx.g, ctx.bip, ctx.memory_budget):
        return OK, ""
    return FAIL, "direct h-vector differs from the product over blocks"


def check_closure(ctx) -> tuple[str, str]:
    """Closure assertions, Fill cardinality per block, and preservation
    of 2-connectedness and matching-coveredness of filled blocks."""
    if ctx.bip is None:
        return SKIP, "needs bipartite"
    if not ctx.pseudo_gorenstein:
        return SKIP, "not pseudo-Gorenstein"
    try:
        result = gorenstein_closure(ctx.g, ctx.bip, ctx.max_side, ctx.memory_budget)
    except ContractError as exc:
        return FAIL, f"closure assertions failed: {exc}"
    for idx, block in enumerate(blocks(ctx.g).blocks):
        bg = block.graph
        if bg.edge_count == 1:
            if result.per_block_fill[idx].non_edges:
                return FAIL, "single-edge block got fill edges"
            continue
        bh = hilbert.h_vector(bg, ctx.memory_budget)
        expect = (bh.get(bh.s - 1) if bh.s >= 1 else 0) - bh.get(1)
        if len(result.per_block_fill[idx]) != expect:
            return FAIL, (f"block {idx}: |Fill| = {len(result.per_block_fill[idx])} "
                          f"but h_(s-1) - h_1 = {expect}")
    for filled_block in blocks(result.closed_graph).blocks:
        fg = filled_block.graph
        if fg.edge_count == 1:
            continue
        fbip = bipartition_of(fg)
        if not is_two_connected(fg) or not matching.is_matching_covered(fg, fbip):
            return FAIL, "a filled block is not 2-connected matching-covered"
    return OK, ""


def check_closure_minimality(ctx) -> tuple[str, str]:
    if ctx.bip is None or not ctx.mc2c:
        return SKIP, "needs 2-connected matching-covered bipartite"
    missing = len(ctx.non_edges)
    if missing > ctx.minimality_budget:
        raise CapacityError(f"{missing} missing cross edges exceed budget")
    if verify_closure_minimality(ctx.g, ctx.bip, ctx.minimality_budget, ctx.max_side):
        return OK, ""
    return FAIL, "a Gorenstein supergraph misses a fill edge"


CHECKS = {
    "strict-hall": check_strict_hall,
    "h1": check_h1,
    "reciprocity": check_reciprocity,
    "nonedge-interior": check_nonedge_interior,
    "unique-interior": check_unique_interior,
    "separation": check_separation_symmetry,
    "acceptable-tight": check_acceptable_tight,
    "uncross": check_uncross,
    "internal-cover": check_internal_cover,
    "main": check_main,
    "pseudo-trailing": check_pseudo_trailing,
    "stanley": check_stanley,
    "block-product": check_block_product,
    "closure": check_closure,
    "closure-minimality": check_closure_minimality,
}


class DeadlineExceeded(Exception):
    """A budgeted sweep ran out of wall-clock time; carries progress."""

    def __init__(self, instances_done: int, elapsed: float, summaries):
        self.instances_done = instances_done
        self.elapsed = elapsed
        self.summaries = summaries
        super().__init__(
            f"deadline exceeded after {instances_done} instances in {elapsed:.1f}s")


@dataclass
class TheoremSummary:
    name: str
    checked: int = 0
    skipped: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, status, detail, instance):
        if status == OK:
            self.checked += 1
        elif status == SKIP:
            self.skipped += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(f"{instance}: {detail}")


def select_checks(theorem: str) -> dict:
    if theorem == "all":
        return dict(CHECKS)
    if theorem not in CHECKS:
        raise ContractError(
            f"unknown theorem {theorem!r}; choose from {', '.join(sorted(CHECKS))} or 'all'")
    return {theorem: CHECKS[theorem]}


def _run_instance(g, checks, summaries, max_side, memory_budget, minimality_budget):
    ctx = CheckContext(g, max_side=max_side, memory_budget=memory_budget,
                       minimality_budget=minimality_budget)
    label = f"d={g.d} edges={list(g.edges)}"
    for name, fn in checks.items():
        try:
            status, detail = fn(ctx)
        except CapacityError as exc:
            status, detail = SKIP, f"capacity: {exc}"
        except ComputationError as exc:
            status, detail = FAIL, f"computation error: {exc}"
        summaries[name].record(status, detail, label)


def _merge_summaries(dst: dict[str, TheoremSummary], src: dict[str, TheoremSummary]):
    for name, s in src.items():
        d = dst[name]
        d.checked += s.checked
        d.skipped += s.skipped
        d.failed += s.failed
        for f in s.failures:
            if len(d.failures) < 20:
                d.failures.append(f)


def _sweep_chunk(args):
    """Worker: run the checks over one mask range of one side family."""
    (nx, ny, start, stop, theorem, max_side, memory_budget, minimality_budget) = args
    checks = select_checks(theorem)
    summaries = {name: TheoremSummary(name) for name in checks}
    done = 0
    for mask in range(start, stop):
        g = generate._graph_from_cell_mask(nx, ny, mask)
        if not generate.is_connected(g):
            continue
        _run_instance(g, checks, summaries, max_side, memory_budget, minimality_budget)
        done += 1
    return done, summaries


def _sweep_tasks(max_vertices, max_cells, theorem, max_side, memory_budget,
                 minimality_budget, jobs):
    tasks = []
    for nx, ny in generate.side_pairs(max_vertices, max_cells):
        total = 1 << (nx * ny)
        span = max(4096, total // (8 * jobs))
        for start in range(0, total, span):
            tasks.append((nx, ny, start, min(start + span, total), theorem,
                          max_side, memory_budget, minimality_budget))
    return tasks


def run_exhaustive(theorem: str, max_vertices: int,
                   max_side: int = 16,
                   memory_budget: int = hilbert.DEFAULT_MEMORY_BUDGET,
                   minimality_budget: int = 12,
                   max_cells: int = generate.DEFAULT_MAX_CELLS,
                   deadline_seconds: float | None = None,
                   jobs: int = 1,
                   progress=None) -> dict[str, TheoremSummary]:
    """Sweep the selected checks over all connected bipartite graphs on
    fixed sides with nx + ny <= max_vertices.

    With ``jobs`` > 1 the mask ranges are fanned out to a process pool
    and the per-range tallies merged back in input order, so the result
    is identical to the sequential run.  With a deadline, raises
    DeadlineExceeded (carrying partial tallies) on overrun.
    """
    checks = select_checks(theorem)
    summaries = {name: TheoremSummary(name) for name in checks}
    start = time.monotonic()
    if jobs > 1:
        import multiprocessing as mp
        tasks = _sweep_tasks(max_vertices, max_cells, theorem, max_side,
                             memory_budget, minimality_budget, jobs)
        count = 0
        with mp.get_context("fork").Pool(jobs) as pool:
            for done, part in pool.imap(_sweep_chunk, tasks):
                _merge_summaries(summaries, part)
                count += done
                elapsed = time.monotonic() - start
                if deadline_seconds is not None and elapsed > deadline_seconds:
                    pool.terminate()
                    raise DeadlineExceeded(count, elapsed, summaries)
                if progress:
                    progress(count, elapsed)
        return summaries
    count = 0
    for nx, ny in generate.side_pairs(max_vertices, max_cells):
        for g in generate.exhaustive_bipartite(nx, ny, connected=True, max_cells=max_cells):
            _run_instance(g, checks, summaries, max_side, memory_budget, minimality_budget)
            count += 1
            if count % 200 == 0:
                elapsed = time.monotonic() - start
                if deadline_seconds is not None and elapsed > deadline_seconds:
                    raise DeadlineExceeded(count, elapsed, summaries)
                if progress and count % 5000 == 0:
                    progress(count, elapsed)
    return summaries


def _check_chunk(args):
    """Worker: run the checks over a pre-generated list of graphs."""
    graphs, theorem, max_side, memory_budget, minimality_budget = args
    checks = select_checks(theorem)
    summaries = {name: TheoremSummary(name) for name in checks}
    for g in graphs:
        _run_instance(g, checks, summaries, max_side, memory_budget, minimality_budget)
    return summaries


def run_random(theorem: str, trials: int, seed: int, model: str,
               max_vertices: int = 14,
               max_side: int = 16,
               memory_budget: int = hilbert.DEFAULT_MEMORY_BUDGET,
               minimality_budget: int = 12,
               jobs: int = 1,
               progress=None) -> dict[str, TheoremSummary]:
    """Sweep the selected checks over seeded random instances.

    The instance stream depends only on (seed, model, trials), never on
    the job count: instances are generated sequentially and only the
    checking is fanned out.
    """
    checks = select_checks(theorem)
    summaries = {name: TheoremSummary(name) for name in checks}
    rng = generate.make_rng(seed)
    start = time.monotonic()
    if jobs > 1:
        import multiprocessing as mp
        instances = [_sample(model, rng, max_vertices) for _ in range(trials)]
        span = max(25, trials // (8 * jobs))
        tasks = [(instances[i:i + span], theorem, max_side, memory_budget,
                  minimality_budget) for i in range(0, trials, span)]
        done = 0
        with mp.get_context("fork").Pool(jobs) as pool:
            for part in pool.imap(_check_chunk, tasks):
                _merge_summaries(summaries, part)
                done += span
                if progress:
                    progress(min(done, trials), time.monotonic() - start)
        return summaries
    for trial in range(trials):
        g = _sample(model, rng, max_vertices)
        _run_instance(g, checks, summaries, max_side, memory_budget, minimality_budget)
        if progress and (trial + 1) % 500 == 0:
            progress(trial + 1, time.monotonic() - start)
    return summaries


def _sample(model: str, rng, max_vertices: int):
    """Draw one connected instance; parameter combinations that fail to
    produce a connected sample (tiny p on lopsided sides) are redrawn."""
    if model not in ("erdos-bipartite", "matching-union"):
        raise ContractError(f"unknown random model {model!r}")
    for _ in range(50):
        try:
            if model == "erdos-bipartite":
                total = int(rng.integers(2, max_vertices + 1))
                nx = int(rng.integers(1, total))
                p = float(rng.uniform(0.15, 0.95))
                return generate.random_bipartite(nx, total - nx, p, rng, max_retries=60)
            n = int(rng.integers(1, max_vertices // 2 + 1))
            # one matching alone is disconnected for n >= 2
            k = int(rng.integers(2, 5)) if n > 1 else 1
            return generate.random_matching_union(n, k, rng, max_retries=60)
        except GenerationError:
            continue
    raise GenerationError(f"could not draw a connected {model} instance")
