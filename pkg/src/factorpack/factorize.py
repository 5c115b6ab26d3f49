"""Pipelines that pack edge-disjoint regular factors into a realization.

``four_ones`` peels perfect matchings out of the k-regular residual class one
at a time.  Each peel drives the residual's maximum matching to perfection by
repeatedly merging two of the leftover odd cycles: a residual edge between
them bridges directly; otherwise a monotone degree triple on each cycle
yields four cross edges, and a case analysis (white switch, black switch, or
a parallel same-class pair resolved by a plain two-switch) always produces a
bridge while preserving every class's regularity.  With at most three peeled
1-factors present, the pigeonhole over the four cross edges makes the case
table total.

``half_k`` trades the residual away: it splits the even-degree residual into
2-factors (Euler orientation plus repeated bipartite matchings), then turns
each 2-factor into a 1-factor by matching inside it, bridging odd cycles with
black edges, manufacturing a black bridge with a black-mode multi-switch when
none exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .coloring import (
    BLACK,
    RESIDUAL,
    WHITE,
    Color,
    ColoredRealization,
    DegreeSequence,
    FactorCertificate,
    certificate_from_realization,
    one_factor,
    two_factor,
)
from .errors import (
    CaseAnalysisExhausted,
    ChainStuck,
    EvenCycle,
    InternalInvariantError,
    KTooSmall,
    NoResidual,
    NotEvenRegular,
    NotGraphic,
    NotGraphicMinusK,
    OddVertexCount,
    PreconditionViolated,
    TooManyOneFactors,
)
from .graphs import SimpleGraph, connected_components, cycles_of_two_regular, edge, euler_circuit
from .matching import Matching, lemma_odd_certificate, maximum_matching
from .realize import erdos_gallai_graphic, erdos_gallai_graphic_raw, kundu_realize
from .switching import multi_switch, parallel_two_switch

CONTEXT_RESIDUAL = "residual"
CONTEXT_TEMP_BLACK = "temp-black"


@dataclass(frozen=True)
class TripleChoice:
    """Three consecutive cycle vertices with non-increasing realization degrees."""

    cycle: tuple[int, ...]
    vertices: tuple[int, int, int]
    direction: int  # +1 along the stored order, -1 against it


@dataclass(frozen=True)
class CrossEdgeCase:
    """Resolution of the four cross edges between two monotone triples."""

    edges: tuple[tuple[int, int], tuple[int, int], tuple[int, int], tuple[int, int]]
    colors: tuple[Color, Color, Color, Color]
    resolution: str  # "bridge" | "white-e<i>" | "black-e<i>" | "parallel-e1e4" | "parallel-e2e3"


def monotone_triple(cycle, degrees) -> TripleChoice:
    """First consecutive triple (a, b, c) along the cycle with d_a >= d_b >= d_c.

    Scans the stored direction start by start, then the reverse direction. An
    odd cycle always has one: strict alternation of the comparison direction
    is impossible at odd length.
    """
    cycle = tuple(cycle)
    size = len(cycle)
    if size % 2 == 0:
        raise EvenCycle(f"cycle of length {size}")
    if size < 3:
        raise PreconditionViolated(f"cycle of length {size} is too short")
    for direction in (1, -1):
        for s in range(size):
            a = cycle[s]
            b = cycle[(s + direction) % size]
            c = cycle[(s + 2 * direction) % size]
            if degrees[a] >= degrees[b] >= degrees[c]:
                return TripleChoice(cycle, (a, b, c), direction)
    raise InternalInvariantError(f"odd cycle {cycle} has no monotone triple")


def _cycle_neighbors(cycle: tuple[int, ...], x: int) -> tuple[int, int]:
    i = cycle.index(x)
    return cycle[(i - 1) % len(cycle)], cycle[(i + 1) % len(cycle)]


def _cycle_edge_at(cycle: tuple[int, ...], x: int, avoid: set[int]) -> tuple[int, int]:
    """The cycle edge at x whose far endpoint is outside `avoid` (unique by construction)."""
    for t in _cycle_neighbors(cycle, x):
        if t not in avoid:
            return edge(x, t)
    raise InternalInvariantError(f"no cycle edge at {x} avoiding {sorted(avoid)}")


def merge_odd_cycle_pair(real: ColoredRealization, matching: Matching,
                         c1, c2, factor: Color, context: str = CONTEXT_RESIDUAL):
    """Extend the matching to cover both odd cycles; returns (real, matching).

    In the residual context the matching lives in `factor`; in the temp-black
    context the cycles' edges have already been recolored black and the
    matching lives in black.  Cycles other than c1 and c2 are never touched.
    """
    if context not in (CONTEXT_RESIDUAL, CONTEXT_TEMP_BLACK):
        raise PreconditionViolated(f"unknown context {context!r}")
    work = factor if context == CONTEXT_RESIDUAL else BLACK
    c1, c2 = tuple(c1), tuple(c2)
    for cyc in (c1, c2):
        if len(cyc) % 2 == 0 or len(cyc) < 3:
            raise PreconditionViolated(f"{cyc} is not an odd cycle")
        for i in range(len(cyc)):
            e = edge(cyc[i], cyc[(i + 1) % len(cyc)])
            if real.color_of(*e) != work:
                raise PreconditionViolated(f"cycle edge {e} has color {real.color_of(*e)}, not {work}")
    vs = set(c1) | set(c2)
    if len(vs) != len(c1) + len(c2):
        raise PreconditionViolated("cycles share vertices")
    for (a, b) in matching.edges:
        if (a in vs) != (b in vs):
            raise PreconditionViolated(f"matching edge ({a}, {b}) straddles the cycle pair")

    outside_before = {e for e in real.edges_of(work) if e[0] not in vs and e[1] not in vs}

    cross = sorted(edge(a, b) for a in c1 for b in c2 if real.color_of(a, b) == work)
    if cross:
        case = CrossEdgeCase(edges=(cross[0],) * 4, colors=(work,) * 4, resolution="bridge")
    elif context == CONTEXT_RESIDUAL:
        case = _switch_residual_pair(real, c1, c2)
    else:
        case = _switch_temp_black_pair(real, c1, c2)

    sub_edges = {edge(a, b) for a, b in combinations(sorted(vs), 2) if real.color_of(a, b) == work}
    sub = maximum_matching(SimpleGraph(real.n, sub_edges))
    if sub.covered != frozenset(vs):
        raise ChainStuck(
            f"perfect matching over the merged cycles is missing {sorted(vs - set(sub.covered))}")

    outside_after = {e for e in real.edges_of(work) if e[0] not in vs and e[1] not in vs}
    if outside_before != outside_after:
        raise InternalInvariantError("edges of untouched cycles changed during a merge")

    kept = {e for e in matching.edges if e[0] not in vs}
    merged = Matching.from_edges(kept | sub.edges)
    if merged.size <= matching.size:
        raise InternalInvariantError("merge did not grow the matching")
    return real, merged, case


def _switch_residual_pair(real: ColoredRealization, c1, c2) -> CrossEdgeCase:
    degrees = real.degrees
    t1 = monotone_triple(c1, degrees)
    t2 = monotone_triple(c2, degrees)
    if degrees[t1.vertices[1]] < degrees[t2.vertices[1]]:
        c1, c2, t1, t2 = c2, c1, t2, t1
    u1, u2, _u3 = t1.vertices
    v1, v2, v3 = t2.vertices
    quad = (edge(u1, v2), edge(u1, v3), edge(u2, v2), edge(u2, v3))
    colors = tuple(real.color_of(*e) for e in quad)

    for mode in (WHITE, BLACK):
        for pos, et in enumerate(quad):
            if colors[pos] != mode:
                continue
            a = u1 if u1 in et else u2
            b = v2 if v2 in et else v3
            if mode == WHITE:
                uu, ww = a, b
                vv = v3 if b == v2 else v2
                z3 = _cycle_edge_at(t2.cycle, vv, {v2, v3})
                z2 = _cycle_edge_at(t1.cycle, a, {u1, u2} - {a})
            else:
                uu, ww = b, a
                vv = u2 if a == u1 else u1
                z3 = _cycle_edge_at(t1.cycle, vv, {u1, u2})
                z2 = _cycle_edge_at(t2.cycle, b, {v2, v3} - {b})
            multi_switch(real, uu, vv, ww, mode, z3_hint=z3, z2_hint=z2)
            return CrossEdgeCase(quad, colors, f"{mode.kind}-e{pos + 1}")

    if not all(c.kind == "one" for c in colors):
        raise CaseAnalysisExhausted(
            f"cross edges carry {[str(c) for c in colors]}: not covered by the case table")
    if colors[0] == colors[3]:
        pair, name = (quad[0], quad[3]), "parallel-e1e4"
    elif colors[1] == colors[2]:
        pair, name = (quad[1], quad[2]), "parallel-e2e3"
    else:
        raise CaseAnalysisExhausted(
            f"four 1-factor cross edges {[str(c) for c in colors]} with no parallel pair; "
            "unreachable with at most three 1-factors")
    parallel_two_switch(real, pair[0], pair[1], edge(u1, u2), edge(v2, v3))
    return CrossEdgeCase(quad, colors, name)


def _switch_temp_black_pair(real: ColoredRealization, c1, c2) -> CrossEdgeCase:
    degrees = real.degrees
    pick = None
    for ca, cb in ((c1, c2), (c2, c1)):
        for uu in sorted(ca):
            for vv in sorted(cb):
                if degrees[uu] <= degrees[vv]:
                    pick = (ca, cb, uu, vv)
                    break
            if pick:
                break
        if pick:
            break
    if pick is None:
        raise InternalInvariantError("no degree-ordered vertex pair across two cycles")
    ca, _cb, uu, vv = pick
    ww = min(_cycle_neighbors(tuple(ca), uu))
    x1 = edge(uu, ww)
    multi_switch(real, uu, vv, ww, BLACK)
    return CrossEdgeCase((x1,) * 4, (BLACK,) * 4, "black-switch")


def peel_one_factor(real: ColoredRealization) -> ColoredRealization:
    """Move one perfect matching out of the residual class into a new 1-factor."""
    if RESIDUAL not in real.declared or real.declared[RESIDUAL] < 1:
        raise NoResidual("no residual class of degree >= 1")
    if real.one_factor_count() >= 4:
        raise TooManyOneFactors("already four 1-factors: the cross-edge pigeonhole expires")
    if real.n % 2 != 0:
        raise OddVertexCount(f"n={real.n} is odd")
    residual_degree = real.declared[RESIDUAL]
    m = Matching.from_edges([])
    while True:
        cert = lemma_odd_certificate(real.class_graph(RESIDUAL), initial=m)
        m = cert.matching
        if m.is_perfect(real.n):
            break
        hosts = sorted(cert.cycles)
        if len(hosts) < 2:
            raise InternalInvariantError("odd number of uncovered vertices on an even vertex count")
        real, m, _case = merge_odd_cycle_pair(
            real, m, cert.cycles[hosts[0]], cert.cycles[hosts[1]], RESIDUAL, CONTEXT_RESIDUAL)
    idx = real.one_factor_count()
    real.apply_swap_batch(
        [(e, one_factor(idx)) for e in m.sorted_edges()],
        expect_conservation=False,
        op="peel_one_factor",
        params={"index": idx},
        declared_updates={RESIDUAL: residual_degree - 1, one_factor(idx): 1},
    )
    return real


def petersen_two_factorize(g: SimpleGraph, r: int) -> list[list[tuple[int, int]]]:
    """Split a 2r-regular graph into r edge-disjoint spanning 2-regular subgraphs."""
    degrees = g.degrees()
    if any(d != 2 * r for d in degrees) or r < 0:
        raise NotEvenRegular(f"degrees {sorted(set(degrees))} are not constant 2r with r={r}")
    if r == 0:
        return []
    factors: list[set[tuple[int, int]]] = [set() for _ in range(r)]
    for comp in connected_components(g):
        comp_set = set(comp)
        sub = SimpleGraph(g.n, {e for e in g.edges if e[0] in comp_set})
        circuit = euler_circuit(sub, comp[0])
        arcs = [(circuit[i], circuit[i + 1]) for i in range(len(circuit) - 1)]
        remaining: dict[int, list[int]] = {x: [] for x in comp}
        for (a, b) in arcs:
            remaining[a].append(b)
        for row in remaining.values():
            row.sort()
        for j in range(r):
            pm = _bipartite_perfect_matching(comp, remaining)
            for a, b in sorted(pm.items()):
                factors[j].add(edge(a, b))
                remaining[a].remove(b)
    return [sorted(f) for f in factors]


def _bipartite_perfect_matching(vertices: list[int], adj: dict[int, list[int]]) -> dict[int, int]:
    """Perfect matching from out-sides to in-sides of an orientation (Kuhn's algorithm)."""
    match_right: dict[int, int] = {}

    def try_augment(a: int, seen: set[int]) -> bool:
        for b in adj[a]:
            if b in seen:
                continue
            seen.add(b)
            if b not in match_right or try_augment(match_right[b], seen):
                match_right[b] = a
                return True
        return False

    for a in sorted(vertices):
        if not try_augment(a, set()):
            raise InternalInvariantError(
                f"regular orientation lost its perfect matching at vertex {a}")
    return {a: b for b, a in match_right.items()}


def convert_two_factor(real: ColoredRealization, f: Color) -> ColoredRealization:
    """Replace a 2-factor class by a 1-factor, shedding the rest of it to black."""
    if f.kind != "two" or f not in real.declared:
        raise PreconditionViolated(f"{f} is not a declared 2-factor class")
    if real.n % 2 != 0:
        raise OddVertexCount(f"n={real.n} is odd")
    f_edges = real.edges_of(f)
    cycles = cycles_of_two_regular(real.n, set(f_edges))
    real.apply_swap_batch(
        [(e, BLACK) for e in f_edges],
        expect_conservation=False,
        op="temp_black",
        params={"factor": str(f)},
        declared_updates={f: None},
    )
    m_edges: set[tuple[int, int]] = set()
    odd_cycles = []
    for cyc in cycles:
        if len(cyc) % 2 == 0:
            m_edges |= {edge(cyc[i], cyc[i + 1]) for i in range(0, len(cyc), 2)}
        else:
            odd_cycles.append(cyc)
    if len(odd_cycles) % 2 != 0:
        raise InternalInvariantError("odd number of odd cycles on an even vertex count")
    m = Matching.from_edges(m_edges)
    for i in range(0, len(odd_cycles), 2):
        real, m, _case = merge_odd_cycle_pair(
            real, m, odd_cycles[i], odd_cycles[i + 1], f, CONTEXT_TEMP_BLACK)
        for e in m.edges:
            if real.color_of(*e) != BLACK:
                raise InternalInvariantError(f"matching edge {e} lost its black color mid-conversion")
    if not m.is_perfect(real.n):
        raise InternalInvariantError("conversion finished with an imperfect matching")
    idx = real.one_factor_count()
    real.apply_swap_batch(
        [(e, one_factor(idx)) for e in m.sorted_edges()],
        expect_conservation=False,
        op="convert_two_factor",
        params={"factor": str(f), "index": idx},
        declared_updates={one_factor(idx): 1},
    )
    higher = sorted((c for c in real.declared if c.kind == "two" and c.index > f.index),
                    key=Color.sort_key)
    for c in higher:
        real.apply_swap_batch(
            [(e, two_factor(c.index - 1)) for e in real.edges_of(c)],
            expect_conservation=False,
            op="renumber_two_factor",
            params={"from": str(c)},
            declared_updates={c: None, two_factor(c.index - 1): 2},
        )
    return real


def _validated_inputs(pi, k: int) -> DegreeSequence:
    ds = pi if isinstance(pi, DegreeSequence) else DegreeSequence.of(pi)
    if not erdos_gallai_graphic(ds):
        raise NotGraphic(f"{list(ds.degrees)} is not graphic")
    reduced = [d - k for d in ds.degrees]
    if any(d < 0 for d in reduced) or not erdos_gallai_graphic_raw(reduced):
        raise NotGraphicMinusK(f"{list(ds.degrees)} minus {k} is not graphic")
    if ds.n % 2 != 0:
        raise OddVertexCount(f"n={ds.n} must be even")
    return ds


def four_ones_realization(pi, k: int, seed: int = 0) -> ColoredRealization:
    """Realization with min(k, 4) peeled 1-factors and a max(k-4, 0)-regular residual."""
    if k < 1:
        raise PreconditionViolated(f"k must be >= 1, got {k}")
    ds = _validated_inputs(pi, k)
    real = kundu_realize(ds, k, seed)
    for _ in range(min(k, 4)):
        peel_one_factor(real)
    return real


def four_ones(pi, k: int, seed: int = 0) -> FactorCertificate:
    """Certificate packing min(k, 4) 1-factors plus a (k-4)-regular residual into pi."""
    real = four_ones_realization(pi, k, seed)
    return certificate_from_realization(real, "four-ones", k)


def half_k(pi, k: int, seed: int = 0) -> FactorCertificate:
    """Certificate packing floor(k/2) + 2 edge-disjoint 1-factors into pi (k >= 4)."""
    return certificate_from_realization(half_k_realization(pi, k, seed), "half-k", k)


def half_k_realization(pi, k: int, seed: int = 0) -> ColoredRealization:
    """The realization behind ``half_k``, with its full recoloring trace."""
    if k < 4:
        raise KTooSmall(f"k must be >= 4 (got {k}); below that the target exceeds k itself")
    real = four_ones_realization(pi, k, seed)
    if k % 2 == 1:
        last = one_factor(3)
        real.apply_swap_batch(
            [(e, RESIDUAL) for e in real.edges_of(last)],
            expect_conservation=False,
            op="fold_back",
            params={"factor": str(last)},
            declared_updates={last: None, RESIDUAL: real.declared[RESIDUAL] + 1},
        )
    residual_degree = real.declared[RESIDUAL]
    if residual_degree % 2 != 0:
        raise InternalInvariantError(f"residual degree {residual_degree} should be even here")
    if residual_degree > 0:
        parts = petersen_two_factorize(real.class_graph(RESIDUAL), residual_degree // 2)
        declared_updates: dict[Color, int | None] = {RESIDUAL: 0}
        batch = []
        for j, part in enumerate(parts):
            declared_updates[two_factor(j)] = 2
            batch.extend((e, two_factor(j)) for e in part)
        real.apply_swap_batch(batch, expect_conservation=False, op="petersen_split",
                              params={"parts": len(parts)}, declared_updates=declared_updates)
        for j in reversed(range(len(parts))):
            convert_two_factor(real, two_factor(j))
    return real
