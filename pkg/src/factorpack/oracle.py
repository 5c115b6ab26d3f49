"""Independent brute-force ground truth, the conjecture checker, and the verifier.

Everything here is deliberately separate from the constructive machinery:
plain backtracking with explicit node budgets, so a "not found" answer is an
exhausted search, never a timeout.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import DegreeSequence, FactorCertificate
from .errors import BudgetExceeded, NotGraphic, NotGraphicMinusK
from .graphs import SimpleGraph, edge
from .matching import Matching
from .realize import erdos_gallai_graphic, erdos_gallai_graphic_raw, _enumerate_realizations


class _Budget:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int):
        self.nodes = 0
        self.limit = limit

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceeded(self.nodes, self.limit)


def bf_max_matching(g: SimpleGraph, budget: int = 2_000_000) -> tuple[int, Matching]:
    """Exact maximum matching by branch and bound over the lowest uncovered vertex."""
    n = g.n
    adj = g.adjacency()
    counter = _Budget(budget)
    covered = [False] * n
    best_size = -1
    best_edges: list[tuple[int, int]] = []
    chosen: list[tuple[int, int]] = []

    def rec(v: int):
        nonlocal best_size, best_edges
        counter.tick()
        while v < n and covered[v]:
            v += 1
        if v == n:
            if len(chosen) > best_size:
                best_size, best_edges = len(chosen), list(chosen)
            return
        free_tail = sum(1 for x in range(v, n) if not covered[x])
        if len(chosen) + free_tail // 2 <= best_size:
            return
        for w in adj[v]:
            if not covered[w]:
                covered[v] = covered[w] = True
                chosen.append(edge(v, w))
                rec(v + 1)
                chosen.pop()
                covered[v] = covered[w] = False
        rec(v + 1)

    rec(0)
    return max(best_size, 0), Matching.from_edges(best_edges)


def bf_disjoint_one_factors(g: SimpleGraph, t: int,
                            budget: int = 5_000_000) -> list[Matching] | None:
    """t pairwise edge-disjoint perfect matchings inside g, or None after exhaustion.

    Matchings are forced lexicographically increasing, which cuts the t!
    orderings of any witness without losing completeness.
    """
    n = g.n
    if n % 2 != 0:
        return None
    if t == 0:
        return []
    adj = g.adjacency()
    counter = _Budget(budget)
    used: set[tuple[int, int]] = set()
    found: list[list[tuple[int, int]]] = []

    def build(current: list[tuple[int, int]], prev_key):
        counter.tick()
        covered = {x for e in current for x in e}
        if len(covered) == n:
            key = tuple(sorted(current))
            if prev_key is not None and key <= prev_key:
                return None
            found.append(sorted(current))
            if len(found) == t:
                return found
            result = build([], key)
            if result is None:
                found.pop()
            return result
        v = min(x for x in range(n) if x not in covered)
        for w in adj[v]:
            if w in covered:
                continue
            e = edge(v, w)
            if e in used:
                continue
            used.add(e)
            current.append(e)
            result = build(current, prev_key)
            if result is not None:
                return result
            current.pop()
            used.discard(e)
        return None

    result = build([], None)
    if result is None:
        return None
    return [Matching.from_edges(m) for m in result]


def bf_conjecture_search(pi, k: int, realization_budget: int = 2_000_000,
                         matching_budget: int = 2_000_000):
    """Some realization of pi with k edge-disjoint perfect matchings, or None.

    The realization space is searched exhaustively (depth-first over adjacency
    rows with residual-graphicality pruning), so a None return is an
    exhaustively verified absence: a counterexample to the packing conjecture.
    """
    ds = pi if isinstance(pi, DegreeSequence) else DegreeSequence.of(pi)
    if not erdos_gallai_graphic(ds):
        raise NotGraphic(f"{list(ds.degrees)} is not graphic")
    reduced = [d - k for d in ds.degrees]
    if any(d < 0 for d in reduced) or not erdos_gallai_graphic_raw(reduced):
        raise NotGraphicMinusK(f"{list(ds.degrees)} minus {k} is not graphic")

    def visit(edges: set[tuple[int, int]]):
        g = SimpleGraph(ds.n, set(edges))
        ms = bf_disjoint_one_factors(g, k, budget=matching_budget)
        if ms is None:
            return None
        return (g, ms)

    return _enumerate_realizations(ds.degrees, visit, node_budget=realization_budget)


def enumerate_graphic(n: int, d_max: int) -> list[DegreeSequence]:
    """All non-increasing graphic sequences of length n with entries <= d_max, ascending."""
    from itertools import combinations_with_replacement

    bound = min(d_max, n - 1) if n > 0 else 0
    out = []
    for asc in combinations_with_replacement(range(bound + 1), n):
        desc = tuple(reversed(asc))
        if erdos_gallai_graphic_raw(list(desc)):
            out.append(desc)
    out.sort()
    return [DegreeSequence.of(t) for t in out]


@dataclass
class VerifyReport:
    """Result of certificate verification; passed iff violations is empty."""

    passed: bool
    violations: list[tuple[str, object]] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)


def verify_certificate(pi, k: int, cert: FactorCertificate) -> VerifyReport:
    """Check a certificate against the packing statements, reporting every violation."""
    ds = pi if isinstance(pi, DegreeSequence) else DegreeSequence.of(pi)
    violations: list[tuple[str, object]] = []
    n = cert.n

    if n != ds.n or tuple(cert.pi) != ds.degrees or cert.k != k:
        violations.append(("MetadataMismatch", {"n": cert.n, "pi": list(cert.pi), "k": cert.k}))

    classes: list[tuple[str, tuple[tuple[int, int], ...]]] = []
    for i, m in enumerate(cert.one_factors):
        classes.append((f"one:{i}", tuple(m)))
    for i, f in enumerate(cert.two_factors):
        classes.append((f"two:{i}", tuple(f)))
    residual_degree = 0
    if cert.residual is not None:
        residual_degree = cert.residual[0]
        classes.append(("residual", tuple(cert.residual[1])))
    classes.append(("black", tuple(cert.black_edges)))

    seen: dict[tuple[int, int], str] = {}
    degree = [0] * n
    for name, edges in classes:
        for (u, v) in edges:
            if not (0 <= u < v < n):
                violations.append(("BadEdge", (name, (u, v))))
                continue
            if (u, v) in seen:
                violations.append(("ClassOverlap", ((u, v), seen[(u, v)], name)))
                continue
            seen[(u, v)] = name
            degree[u] += 1
            degree[v] += 1

    for v in range(n):
        if degree[v] != ds.degrees[v]:
            violations.append(("DegreeMismatch", (v, degree[v], ds.degrees[v])))

    for i, m in enumerate(cert.one_factors):
        touched: set[int] = set()
        bad = False
        for (u, v) in m:
            if u in touched or v in touched:
                violations.append(("NotPerfectMatching", (f"one:{i}", "vertex reused", (u, v))))
                bad = True
            touched.update((u, v))
        if not bad and len(touched) != n:
            missing = sorted(set(range(n)) - touched)
            violations.append(("NotPerfectMatching", (f"one:{i}", "uncovered", missing)))

    for i, f in enumerate(cert.two_factors):
        deg = [0] * n
        for (u, v) in f:
            if 0 <= u < v < n:
                deg[u] += 1
                deg[v] += 1
        bad_vertices = [v for v in range(n) if deg[v] != 2]
        if bad_vertices:
            violations.append(("NotTwoRegular", (f"two:{i}", bad_vertices)))

    if cert.residual is not None:
        deg = [0] * n
        for (u, v) in cert.residual[1]:
            if 0 <= u < v < n:
                deg[u] += 1
                deg[v] += 1
        bad_vertices = [v for v in range(n) if deg[v] != residual_degree]
        if bad_vertices:
            violations.append(("ResidualNotRegular", (residual_degree, bad_vertices)))

    ones, twos = len(cert.one_factors), len(cert.two_factors)
    if cert.mode == "kundu":
        if ones or twos or residual_degree != k:
            violations.append(("CountMismatch", ("kundu", ones, twos, residual_degree)))
    elif cert.mode == "four-ones":
        if ones != min(k, 4) or twos != 0 or residual_degree != max(k - 4, 0):
            violations.append(("CountMismatch", ("four-ones", ones, twos, residual_degree)))
    elif cert.mode == "half-k":
        if ones != k // 2 + 2 or twos != 0 or cert.residual is not None:
            violations.append(("CountMismatch", ("half-k", ones, twos)))
    else:
        violations.append(("UnknownMode", cert.mode))

    counts = {
        "one_factors": ones,
        "two_factors": twos,
        "residual_degree": residual_degree,
        "residual_edges": len(cert.residual[1]) if cert.residual else 0,
        "black_edges": len(cert.black_edges),
    }
    return VerifyReport(passed=not violations, violations=violations, counts=counts)
