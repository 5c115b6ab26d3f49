"""Graphicality tests, realization builders, and realizations carrying a k-factor.

``kundu_realize`` produces a realization of pi whose edges split into a
k-regular spanning "residual" class plus black leftovers: it realizes pi - k
deterministically, then fills the complement with a k-regular spanning
subgraph.  The fill runs in stages: a greedy pairing pass and a circulant
sweep for the common cases, an exact complement search via a degree-capacity
gadget reduced to maximum matching, a two-switch hill-climb on the pi - k
realization, and finally exhaustive backtracking over realizations, which
must succeed whenever pi and pi - k are both graphic.
"""

from __future__ import annotations

import random

from .coloring import (
    BLACK,
    RESIDUAL,
    WHITE,
    ColoredRealization,
    DegreeSequence,
    make_colored_realization,
)
from .errors import NotGraphic, NotGraphicMinusK, SearchExhausted
from .graphs import SimpleGraph, all_pairs, edge
from .matching import maximum_matching


def erdos_gallai_graphic(seq) -> bool:
    """True iff the non-negative integer list is the degree sequence of a simple graph."""
    if isinstance(seq, DegreeSequence):
        d = list(seq.degrees)
    else:
        d = sorted((int(x) for x in seq), reverse=True)
    n = len(d)
    if n == 0:
        return True
    if d[0] > n - 1 or d[-1] < 0:
        return False
    if sum(d) % 2 != 0:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        tail = sum(min(k, d[i]) for i in range(k, n))
        if prefix > k * (k - 1) + tail:
            return False
    return True


def degree_sequence_checked(pi) -> DegreeSequence:
    """Normalize to a DegreeSequence, raising NotGraphic for anything unrealizable."""
    if isinstance(pi, DegreeSequence):
        if not erdos_gallai_graphic(pi):
            raise NotGraphic(f"{list(pi.degrees)} is not graphic")
        return pi
    values = [int(x) for x in pi]
    if not erdos_gallai_graphic(values):
        raise NotGraphic(f"{values} is not graphic")
    return DegreeSequence.of(values)


def havel_hakimi_realize(seq) -> SimpleGraph:
    """Deterministic realization: highest-degree vertex first, ties by lowest id."""
    ds = degree_sequence_checked(seq)
    n = ds.n
    remaining = list(ds.degrees)
    edges: set[tuple[int, int]] = set()
    while True:
        v = max(range(n), key=lambda i: (remaining[i], -i))
        if remaining[v] == 0:
            break
        need = remaining[v]
        remaining[v] = 0
        partners = sorted(
            (w for w in range(n) if w != v and remaining[w] > 0),
            key=lambda w: (-remaining[w], w),
        )
        if len(partners) < need:
            raise NotGraphic(f"{list(ds.degrees)} is not graphic")  # unreachable after the test
        for w in partners[:need]:
            edges.add(edge(v, w))
            remaining[w] -= 1
    return SimpleGraph(n, edges)


def switch_randomize(g: SimpleGraph, steps: int, seed: int) -> SimpleGraph:
    """Apply up to `steps` random degree-preserving two-switches; seed-deterministic."""
    rng = random.Random(seed)
    out = g.copy()
    edges = sorted(out.edges)
    for _ in range(steps):
        if len(edges) < 2:
            break
        i = rng.randrange(len(edges))
        j = rng.randrange(len(edges))
        if i == j:
            continue
        (a, b), (c, d) = edges[i], edges[j]
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4:
            continue
        e1, e2 = edge(a, d), edge(c, b)
        if e1 in out.edges or e2 in out.edges:
            continue
        out.edges.discard(edges[i])
        out.edges.discard(edges[j])
        out.edges.add(e1)
        out.edges.add(e2)
        edges[i], edges[j] = e1, e2
    return out


# --- k-regular fills of a graph's complement ---


def max_degree_bounded_subgraph(h: SimpleGraph, k: int) -> tuple[int, set[tuple[int, int]]]:
    """Largest edge set of h with every vertex degree <= k.

    Reduction to maximum matching: k copies per vertex, two stub nodes per
    edge; an edge enters the subgraph exactly when both of its stubs get
    matched to copies of their endpoints.
    """
    if k <= 0 or not h.edges:
        return 0, set()
    n = h.n
    edges = h.sorted_edges()
    stub_base = n * k
    gadget_n = stub_base + 2 * len(edges)
    gadget_edges: set[tuple[int, int]] = set()
    for j, (u, v) in enumerate(edges):
        su, sv = stub_base + 2 * j, stub_base + 2 * j + 1
        gadget_edges.add((su, sv))
        for i in range(k):
            gadget_edges.add(edge(u * k + i, su))
            gadget_edges.add(edge(v * k + i, sv))
    gadget = SimpleGraph(gadget_n, gadget_edges)
    from .matching import Matching

    seed_matching = Matching.from_edges((stub_base + 2 * j, stub_base + 2 * j + 1)
                                        for j in range(len(edges)))
    mm = maximum_matching(gadget, seed_matching)
    mate = mm.mate_map()
    chosen: set[tuple[int, int]] = set()
    for j, (u, v) in enumerate(edges):
        su, sv = stub_base + 2 * j, stub_base + 2 * j + 1
        mu, mv = mate.get(su), mate.get(sv)
        if mu is not None and mu < stub_base and mv is not None and mv < stub_base:
            chosen.add((u, v))
    return len(chosen), chosen


def find_k_factor(h: SimpleGraph, k: int) -> set[tuple[int, int]] | None:
    """A k-regular spanning subgraph of h, or None if h has none."""
    if k == 0:
        return set()
    if h.n * k % 2 != 0 or any(d < k for d in h.degrees()):
        return None
    size, chosen = max_degree_bounded_subgraph(h, k)
    return chosen if size == h.n * k // 2 else None


def _greedy_fill(r: SimpleGraph, k: int) -> set[tuple[int, int]] | None:
    """Pair off deficits greedily, avoiding r's edges; may fail, never lies."""
    n = r.n
    deficit = [k] * n
    fill: set[tuple[int, int]] = set()
    while True:
        v = max(range(n), key=lambda i: (deficit[i], -i))
        if deficit[v] == 0:
            return fill
        need = deficit[v]
        deficit[v] = 0
        partners = sorted(
            (w for w in range(n)
             if w != v and deficit[w] > 0 and edge(v, w) not in r.edges and edge(v, w) not in fill),
            key=lambda w: (-deficit[w], w),
        )
        if len(partners) < need:
            return None
        for w in partners[:need]:
            fill.add(edge(v, w))
            deficit[w] -= 1


def _circulant_fill(r: SimpleGraph, k: int) -> set[tuple[int, int]] | None:
    """Assemble the fill from whole circulant offset classes that avoid r."""
    n = r.n
    need = k
    fill: set[tuple[int, int]] = set()
    if k % 2 == 1:
        if n % 2 != 0:
            return None
        half = {edge(i, i + n // 2) for i in range(n // 2)}
        if half & r.edges:
            return None
        fill |= half
        need -= 1
    for off in range(1, (n - 1) // 2 + 1):
        if need < 2:
            break
        ring = {edge(i, (i + off) % n) for i in range(n)}
        if ring & r.edges or ring & fill:
            continue
        fill |= ring
        need -= 2
    if need != 0:
        return None
    return fill


def _enumerate_realizations(degrees: tuple[int, ...], visit, node_budget: int | None = None):
    """DFS over labeled realizations (vertex i gets degrees[i]); calls visit(edges).

    Rows are chosen vertex by vertex among later vertices, pruned by residual
    graphicality.  visit returns a non-None value to stop the search; that
    value is returned.  Returns None when the space is exhausted.
    """
    n = len(degrees)
    residual = list(degrees)
    edges: set[tuple[int, int]] = set()
    nodes = 0

    def feasible(start: int) -> bool:
        rest = sorted(residual[start:], reverse=True)
        return erdos_gallai_graphic_raw(rest)

    def rec(i: int):
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            from .errors import BudgetExceeded

            raise BudgetExceeded(nodes, node_budget)
        if i == n:
            if all(x == 0 for x in residual):
                return visit(set(edges))
            return None
        need = residual[i]
        candidates = [j for j in range(i + 1, n) if residual[j] > 0]
        if need > len(candidates):
            return None
        if need == 0:
            return rec(i + 1) if feasible(i + 1) else None
        from itertools import combinations

        for pick in combinations(candidates, need):
            for j in pick:
                residual[j] -= 1
                edges.add((i, j))
            residual[i] = 0
            if feasible(i + 1):
                result = rec(i + 1)
                if result is not None:
                    return result
            residual[i] = need
            for j in pick:
                residual[j] += 1
                edges.discard((i, j))
        return None

    return rec(0)


def erdos_gallai_graphic_raw(sorted_desc: list[int]) -> bool:
    """Erdos-Gallai on an already sorted non-increasing list (no normalization)."""
    n = len(sorted_desc)
    if n == 0:
        return True
    if sorted_desc[-1] < 0 or sum(sorted_desc) % 2 != 0:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += sorted_desc[k - 1]
        tail = sum(min(k, sorted_desc[i]) for i in range(k, n))
        if prefix > k * (k - 1) + tail:
            return False
    return True


_HILL_CLIMB_BUDGET = 200


def kundu_realize(pi, k: int, seed: int = 0, exact_fallback: bool = True) -> ColoredRealization:
    """Realization of pi with a k-regular residual class; black = the rest, white = non-edges."""
    ds = degree_sequence_checked(pi)
    if k < 0:
        raise NotGraphicMinusK("k must be non-negative")
    reduced_list = [d - k for d in ds.degrees]
    if any(d < 0 for d in reduced_list) or not erdos_gallai_graphic_raw(reduced_list):
        raise NotGraphicMinusK(f"{list(ds.degrees)} minus {k} is not graphic")
    reduced = DegreeSequence.of(reduced_list)
    r = havel_hakimi_realize(reduced)

    fill = _greedy_fill(r, k)
    if fill is None:
        fill = _circulant_fill(r, k)
    if fill is None:
        fill = find_k_factor(r.complement(), k)
    if fill is None:
        rng = random.Random(seed)
        target = ds.n * k // 2
        best, _ = max_degree_bounded_subgraph(r.complement(), k)
        for _ in range(_HILL_CLIMB_BUDGET):
            trial = switch_randomize(r, 1, rng.randrange(1 << 30))
            if trial.edges == r.edges:
                continue
            size, chosen = max_degree_bounded_subgraph(trial.complement(), k)
            if size > best:
                r, best = trial, size
                if best == target:
                    fill = chosen
                    break
        if fill is None and exact_fallback:
            found = _enumerate_realizations(
                reduced.degrees,
                lambda edges: _fill_or_none(ds.n, edges, k),
            )
            if found is None:
                raise SearchExhausted(
                    "no realization of pi - k admits a k-regular complement fill; "
                    "this contradicts the existence guarantee and indicates a bug"
                )
            r_edges, fill = found
            r = SimpleGraph(ds.n, r_edges)
        elif fill is None:
            raise SearchExhausted("heuristic fill failed and the exact fallback is disabled")

    assignments = []
    for p in all_pairs(ds.n):
        if p in fill:
            assignments.append((p, RESIDUAL))
        elif p in r.edges:
            assignments.append((p, BLACK))
        else:
            assignments.append((p, WHITE))
    return make_colored_realization(ds.n, assignments, {RESIDUAL: k})


def _fill_or_none(n: int, r_edges: set[tuple[int, int]], k: int):
    h = SimpleGraph(n, r_edges).complement()
    fill = find_k_factor(h, k)
    if fill is None:
        return None
    return (set(r_edges), fill)
