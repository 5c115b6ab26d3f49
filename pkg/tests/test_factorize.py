import pytest

from factorpack import (
    Matching,
    SimpleGraph,
    bf_disjoint_one_factors,
    convert_two_factor,
    four_ones,
    half_k,
    kundu_realize,
    merge_odd_cycle_pair,
    monotone_triple,
    peel_one_factor,
    petersen_two_factorize,
    verify_certificate,
)
from factorpack.coloring import BLACK, RESIDUAL, WHITE, make_colored_realization, one_factor, two_factor
from factorpack.errors import (
    EvenCycle,
    KTooSmall,
    NoResidual,
    NotEvenRegular,
    OddVertexCount,
    TooManyOneFactors,
)
from factorpack.factorize import CONTEXT_RESIDUAL, CONTEXT_TEMP_BLACK
from factorpack.graphs import all_pairs, cycles_of_two_regular, edge
from tests.conftest import recount_colors


# --- monotone triples ---

def test_monotone_triple_triangle():
    choice = monotone_triple((0, 1, 2), {0: 1, 1: 2, 2: 3})
    assert choice.vertices == (2, 1, 0)


def test_monotone_triple_c5_unique_reverse():
    cycle = (0, 1, 2, 3, 4)
    degrees = {0: 5, 1: 1, 2: 4, 3: 2, 4: 3}
    # oracle: scan all 10 directed consecutive triples by hand
    monotone = []
    for direction in (1, -1):
        for s in range(5):
            a, b, c = (cycle[s], cycle[(s + direction) % 5], cycle[(s + 2 * direction) % 5])
            if degrees[a] >= degrees[b] >= degrees[c]:
                monotone.append((a, b, c))
    assert monotone == [(0, 4, 3)]
    choice = monotone_triple(cycle, degrees)
    assert choice.vertices == (0, 4, 3)
    assert choice.direction == -1


def test_monotone_triple_all_equal_and_even_rejection():
    assert monotone_triple((0, 1, 2, 3, 4), {v: 2 for v in range(5)}).vertices == (0, 1, 2)
    with pytest.raises(EvenCycle):
        monotone_triple((0, 1, 2, 3), {v: 1 for v in range(4)})


# --- merge_odd_cycle_pair ---

def prism_with_partial_matching():
    prism = {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)}
    asg = [(e, RESIDUAL if e in prism else WHITE) for e in all_pairs(6)]
    real = make_colored_realization(6, asg, {RESIDUAL: 3})
    return real, Matching.from_edges([(1, 2), (4, 5)])


def test_merge_direct_bridge():
    real, m = prism_with_partial_matching()
    real, merged, case = merge_odd_cycle_pair(real, m, (0, 1, 2), (3, 4, 5), RESIDUAL,
                                              CONTEXT_RESIDUAL)
    assert case.resolution == "bridge"
    assert merged.size == 3
    assert merged.covered == frozenset(range(6))


def test_merge_white_switch_two_triangles():
    tri = {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
    asg = [(e, RESIDUAL if e in tri else WHITE) for e in all_pairs(6)]
    real = make_colored_realization(6, asg, {RESIDUAL: 2})
    m = Matching.from_edges([(1, 2), (4, 5)])
    before = recount_colors(real)
    real, merged, case = merge_odd_cycle_pair(real, m, (0, 1, 2), (3, 4, 5), RESIDUAL,
                                              CONTEXT_RESIDUAL)
    assert case.resolution.startswith("white")
    assert merged.is_perfect(6)
    assert recount_colors(real) == before
    assert real.class_graph(RESIDUAL).degrees() == [2] * 6
    for e in merged.edges:
        assert real.color_of(*e) == RESIDUAL


def k6_parallel_pair_instance():
    res = {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
    of0 = {(0, 4), (1, 5), (2, 3)}
    of1 = {(0, 5), (1, 3), (2, 4)}
    of2 = {(1, 4), (0, 3), (2, 5)}
    asg = []
    for e in all_pairs(6):
        if e in res:
            asg.append((e, RESIDUAL))
        elif e in of0:
            asg.append((e, one_factor(0)))
        elif e in of1:
            asg.append((e, one_factor(1)))
        else:
            asg.append((e, one_factor(2)))
    return make_colored_realization(6, asg, {RESIDUAL: 2, one_factor(0): 1,
                                             one_factor(1): 1, one_factor(2): 1})


def test_merge_parallel_pair_case():
    real = k6_parallel_pair_instance()
    m = Matching.from_edges([(1, 2), (4, 5)])
    before = recount_colors(real)
    real, merged, case = merge_odd_cycle_pair(real, m, (0, 1, 2), (3, 4, 5), RESIDUAL,
                                              CONTEXT_RESIDUAL)
    assert case.resolution.startswith("parallel")
    assert merged.is_perfect(6)
    assert recount_colors(real) == before
    for i in range(3):
        edges = real.edges_of(one_factor(i))
        assert len(edges) == 3 and len({x for e in edges for x in e}) == 6


# --- peel_one_factor ---

def test_peel_k4():
    real = kundu_realize([3, 3, 3, 3], 3)
    peel_one_factor(real)
    assert real.declared[RESIDUAL] == 2
    assert real.declared[one_factor(0)] == 1
    assert real.class_graph(one_factor(0)).degrees() == [1] * 4


def test_peel_two_triangle_residual_uses_a_switch():
    tri = {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
    asg = [(e, RESIDUAL if e in tri else WHITE) for e in all_pairs(6)]
    real = make_colored_realization(6, asg, {RESIDUAL: 2})
    peel_one_factor(real)
    assert real.declared[RESIDUAL] == 1
    assert real.class_graph(one_factor(0)).degrees() == [1] * 6
    assert real.class_graph(RESIDUAL).degrees() == [1] * 6
    assert any(b.op == "multi_switch" for b in real.trace.batches)


def test_peel_residual_already_perfect_matching():
    pm = {(0, 1), (2, 3)}
    asg = [(e, RESIDUAL if e in pm else WHITE) for e in all_pairs(4)]
    real = make_colored_realization(4, asg, {RESIDUAL: 1})
    peel_one_factor(real)
    assert real.declared[RESIDUAL] == 0
    assert real.edges_of(RESIDUAL) == []
    assert sorted(real.edges_of(one_factor(0))) == [(0, 1), (2, 3)]


def test_peel_guards():
    pm = {(0, 1), (2, 3)}
    asg = [(e, RESIDUAL if e in pm else WHITE) for e in all_pairs(4)]
    real = make_colored_realization(4, asg, {RESIDUAL: 1})
    peel_one_factor(real)
    with pytest.raises(NoResidual):
        peel_one_factor(real)
    tri = {(0, 1), (0, 2), (1, 2)}
    asg = [(e, RESIDUAL if e in tri else WHITE) for e in all_pairs(3)]
    odd = make_colored_realization(3, asg, {RESIDUAL: 2})
    with pytest.raises(OddVertexCount):
        peel_one_factor(odd)


def test_peel_too_many_one_factors():
    real = kundu_realize([5, 5, 5, 5, 5, 5], 5)
    for _ in range(4):
        peel_one_factor(real)
    with pytest.raises(TooManyOneFactors):
        peel_one_factor(real)


# --- four_ones ---

def test_four_ones_k4_fully_factorized():
    cert = four_ones([3, 3, 3, 3], 3)
    assert len(cert.one_factors) == 3
    assert cert.residual == (0, ())
    assert verify_certificate([3, 3, 3, 3], 3, cert).passed


def test_four_ones_two_triangle_realization_path():
    cert = four_ones([2, 2, 2, 2, 2, 2], 2, seed=0)
    assert len(cert.one_factors) == 2
    assert verify_certificate([2, 2, 2, 2, 2, 2], 2, cert).passed


def test_four_ones_k6_with_residual_matching_left():
    # oracle first: K6 splits into five disjoint perfect matchings
    k6 = SimpleGraph.from_edges(6, list(all_pairs(6)))
    assert bf_disjoint_one_factors(k6, 5) is not None
    cert = four_ones([5, 5, 5, 5, 5, 5], 5)
    assert len(cert.one_factors) == 4
    assert cert.residual[0] == 1
    assert verify_certificate([5, 5, 5, 5, 5, 5], 5, cert).passed


def test_four_ones_propagates_parity_error():
    with pytest.raises(OddVertexCount):
        four_ones([2, 2, 2, 2, 2], 2)


# --- petersen_two_factorize ---

def test_petersen_c5_is_its_own_two_factor():
    c5 = SimpleGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    parts = petersen_two_factorize(c5, 1)
    assert parts == [c5.sorted_edges()]


def _check_two_factorization(g, parts, r):
    assert len(parts) == r
    seen = set()
    for part in parts:
        deg = [0] * g.n
        for (u, v) in part:
            assert (u, v) in g.edges
            assert (u, v) not in seen
            seen.add((u, v))
            deg[u] += 1
            deg[v] += 1
        assert all(d == 2 for d in deg)
    assert seen == g.edges


def test_petersen_k5():
    k5 = SimpleGraph.from_edges(5, list(all_pairs(5)))
    _check_two_factorization(k5, petersen_two_factorize(k5, 2), 2)


def test_petersen_circulant_c8():
    edges = {edge(i, (i + 1) % 8) for i in range(8)} | {edge(i, (i + 2) % 8) for i in range(8)}
    g = SimpleGraph(8, edges)
    _check_two_factorization(g, petersen_two_factorize(g, 2), 2)


def test_petersen_rejects_odd_regular():
    k4 = SimpleGraph.from_edges(4, list(all_pairs(4)))
    with pytest.raises(NotEvenRegular):
        petersen_two_factorize(k4, 1)


# --- convert_two_factor ---

def hamiltonian_two_factor_instance():
    cyc = {edge(i, (i + 1) % 6) for i in range(6)}
    asg = [(e, two_factor(0) if e in cyc else WHITE) for e in all_pairs(6)]
    return make_colored_realization(6, asg, {two_factor(0): 2})


def test_convert_even_cycle_no_switches():
    real = hamiltonian_two_factor_instance()
    convert_two_factor(real, two_factor(0))
    assert two_factor(0) not in real.declared
    assert real.class_graph(one_factor(0)).degrees() == [1] * 6
    assert not any(b.op == "multi_switch" for b in real.trace.batches)
    # every former cycle edge is now in the new 1-factor or black
    for e in [edge(i, (i + 1) % 6) for i in range(6)]:
        assert real.color_of(*e) in (one_factor(0), BLACK)


def two_triangle_two_factor(with_black_bridge: bool):
    tri = {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
    black = {(0, 3), (1, 4), (2, 5)} if with_black_bridge else set()
    asg = []
    for e in all_pairs(6):
        if e in tri:
            asg.append((e, two_factor(0)))
        elif e in black:
            asg.append((e, BLACK))
        else:
            asg.append((e, WHITE))
    return make_colored_realization(6, asg, {two_factor(0): 2})


def test_convert_odd_cycles_with_black_bridge():
    real = two_triangle_two_factor(with_black_bridge=True)
    convert_two_factor(real, two_factor(0))
    assert real.class_graph(one_factor(0)).degrees() == [1] * 6
    assert not any(b.op == "multi_switch" for b in real.trace.batches)


def test_convert_odd_cycles_without_bridge_uses_black_switch():
    real = two_triangle_two_factor(with_black_bridge=False)
    degrees_before = real.degrees
    convert_two_factor(real, two_factor(0))
    assert real.degrees == degrees_before
    assert real.class_graph(one_factor(0)).degrees() == [1] * 6
    switches = [b for b in real.trace.batches if b.op == "multi_switch"]
    assert len(switches) == 1
    assert switches[0].params["mode"] == "black"


def test_convert_reroutes_one_factor_on_cross_edge_but_keeps_it_perfect():
    # the chain's first hop lands on a 1-factor edge; that class must be rerouted,
    # not broken: it stays a perfect matching with the same declared degree
    tri = {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
    of0 = {(1, 3), (0, 4), (2, 5)}
    asg = []
    for e in all_pairs(6):
        if e in tri:
            asg.append((e, two_factor(0)))
        elif e in of0:
            asg.append((e, one_factor(0)))
        else:
            asg.append((e, WHITE))
    real = make_colored_realization(6, asg, {two_factor(0): 2, one_factor(0): 1})
    before_of0 = set(real.edges_of(one_factor(0)))
    convert_two_factor(real, two_factor(0))
    after_of0 = set(real.edges_of(one_factor(0)))
    assert after_of0 != before_of0  # rerouted through the chain
    assert real.class_graph(one_factor(0)).degrees() == [1] * 6
    assert real.class_graph(one_factor(1)).degrees() == [1] * 6
    # locality of the rerouting: changed one-factor edges touch the switch endpoints
    switch = next(b for b in real.trace.batches if b.op == "multi_switch")
    endpoints = {switch.params["u"], switch.params["v"]}
    for e in before_of0 ^ after_of0:
        assert endpoints & set(e)


def test_convert_renumbers_higher_two_factors():
    c1 = {edge(i, (i + 1) % 6) for i in range(6)}
    c2 = {edge(i, (i + 2) % 6) for i in range(6)}
    asg = []
    for e in all_pairs(6):
        if e in c1:
            asg.append((e, two_factor(0)))
        elif e in c2:
            asg.append((e, two_factor(1)))
        else:
            asg.append((e, BLACK))
    real = make_colored_realization(6, asg, {two_factor(0): 2, two_factor(1): 2})
    old_high = set(real.edges_of(two_factor(1)))
    convert_two_factor(real, two_factor(0))
    assert two_factor(1) not in real.declared
    assert set(real.edges_of(two_factor(0))) == old_high


# --- half_k ---

def test_half_k_examples_verified():
    from factorpack import bf_conjecture_search

    assert bf_conjecture_search([4, 4, 4, 4, 4, 4], 4) is not None  # oracle first
    for pi, k, expect in [([4] * 6, 4, 4), ([5] * 6, 5, 4), ([6] * 8, 6, 5)]:
        cert = half_k(pi, k)
        assert len(cert.one_factors) == expect == k // 2 + 2
        assert cert.two_factors == ()
        assert cert.residual is None
        assert verify_certificate(pi, k, cert).passed


def test_half_k_rejects_small_k():
    with pytest.raises(KTooSmall):
        half_k([2, 2, 2, 2], 2)


def test_pipeline_switch_reports_respect_chain_bound():
    real = kundu_realize([5, 5, 5, 5, 5, 5], 5)
    for _ in range(4):
        peel_one_factor(real)
    for b in real.trace.batches:
        if b.op == "multi_switch":
            assert 2 <= b.params["r"] <= real.n - 1
