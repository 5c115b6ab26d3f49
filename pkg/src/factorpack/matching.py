"""Maximum matchings and odd-cycle certificates for regular graphs.

In a regular graph a maximum matching can always be arranged so that every
uncovered vertex sits on its own odd cycle whose remaining vertices are
matched to cycle neighbours, alternating around the cycle, and the cycles of
distinct uncovered vertices are vertex-disjoint.  ``lemma_odd_certificate``
constructs that arrangement: it grows an alternating tree from each uncovered
vertex, locates a non-matching edge between two even-level vertices (one must
exist by a counting argument on regular graphs), closes the odd cycle at the
last common tree vertex, and relocates the uncovered vertex onto the cycle by
toggling the tree path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    InternalInvariantError,
    InvalidInitial,
    NotAlternating,
    NotRegular,
    OddLengthPath,
)
from .graphs import SimpleGraph, edge


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, edges) -> "Matching":
        canon = frozenset(edge(u, v) for (u, v) in edges)
        seen: set[int] = set()
        for (u, v) in canon:
            if u in seen or v in seen:
                raise InvalidInitial(f"vertex reused at edge ({u}, {v})")
            seen.add(u)
            seen.add(v)
        return cls(canon)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)

    def mate_map(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for (u, v) in self.edges:
            m[u] = v
            m[v] = u
        return m

    def is_perfect(self, n: int) -> bool:
        return 2 * self.size == n

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class OddCycleCertificate:
    """A maximum matching plus one fully matched odd cycle per uncovered vertex.

    ``cycles`` maps each uncovered vertex to its cycle, written starting at
    that vertex; consecutive pairs after it are matching edges.
    """

    matching: Matching
    cycles: dict[int, tuple[int, ...]]
    graph: SimpleGraph


def toggle_alternating_path(m: Matching, path) -> Matching:
    """Complement the matching along an even alternating path.

    The path starts at an uncovered vertex with a non-matching edge; the
    uncovered endpoint migrates to the far end.  Paths with no edges are a
    no-op.
    """
    path = list(path)
    if len(path) <= 1:
        return m
    if (len(path) - 1) % 2 != 0:
        raise OddLengthPath(f"path has {len(path) - 1} edges, need an even count")
    covered = m.covered
    if path[0] in covered:
        raise NotAlternating(f"path start {path[0]} is covered")
    edges = set(m.edges)
    for i in range(len(path) - 1):
        e = edge(path[i], path[i + 1])
        if i % 2 == 0:
            if e in edges:
                raise NotAlternating(f"edge {e} at offset {i} should be outside the matching")
            edges.add(e)
        else:
            if e not in edges:
                raise NotAlternating(f"edge {e} at offset {i} should be in the matching")
            edges.remove(e)
    return Matching.from_edges(edges)


def maximum_matching(g: SimpleGraph, initial: Matching | None = None) -> Matching:
    """Maximum matching via alternating search with odd-cycle contraction."""
    n = g.n
    adj = g.adjacency()
    match = [-1] * n
    if initial is not None:
        for (u, v) in initial.edges:
            if (u, v) not in g.edges:
                raise InvalidInitial(f"initial edge ({u}, {v}) is not in the graph")
            if match[u] != -1 or match[v] != -1:
                raise InvalidInitial(f"initial matching reuses a vertex on ({u}, {v})")
            match[u] = v
            match[v] = u
    for v in range(n):
        if match[v] == -1:
            _augment_from(v, adj, match)
    return Matching.from_edges((v, match[v]) for v in range(n) if match[v] > v)


def _augment_from(root: int, adj: list[list[int]], match: list[int]) -> bool:
    n = len(adj)
    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    q: deque[int] = deque([root])

    def lca(a: int, b: int) -> int:
        walked = [False] * n
        x = a
        while True:
            x = base[x]
            walked[x] = True
            if match[x] == -1:
                break
            x = p[match[x]]
        y = b
        while True:
            y = base[y]
            if walked[y]:
                return y
            y = p[match[y]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    while q:
        v = q.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and p[match[to]] != -1):
                cur = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur, to, in_blossom)
                mark_path(to, cur, v, in_blossom)
                for x in range(n):
                    if in_blossom[base[x]]:
                        base[x] = cur
                        if not used[x]:
                            used[x] = True
                            q.append(x)
            elif p[to] == -1:
                p[to] = v
                if match[to] == -1:
                    while to != -1:
                        pv = p[to]
                        ppv = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = ppv
                    return True
                used[match[to]] = True
                q.append(match[to])
    return False


def _alternating_tree(adj: list[list[int]], mate: dict[int, int], root: int):
    """Grow the full alternating tree from an uncovered root, no contraction.

    Returns (parent, depth, outer).  Outer vertices are exactly the possible
    new homes for the uncovered vertex under alternating-path toggles within
    this tree.
    """
    parent: dict[int, int] = {root: -1}
    depth: dict[int, int] = {root: 0}
    outer: set[int] = {root}
    inner: set[int] = set()
    q: deque[int] = deque([root])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if y in outer or y in inner:
                continue
            if y not in mate:
                raise InternalInvariantError(
                    f"augmenting path from {root} to uncovered {y}: matching was not maximum"
                )
            z = mate[y]
            inner.add(y)
            parent[y] = x
            depth[y] = depth[x] + 1
            outer.add(z)
            parent[z] = y
            depth[z] = depth[x] + 2
            q.append(z)
    return parent, depth, outer


def _tree_path(parent: dict[int, int], frm: int) -> list[int]:
    out = [frm]
    while parent[out[-1]] != -1:
        out.append(parent[out[-1]])
    out.reverse()  # root ... frm
    return out


def lemma_odd_certificate(g: SimpleGraph, initial: Matching | None = None) -> OddCycleCertificate:
    """Build the disjoint fully-matched-odd-cycle arrangement for a regular graph."""
    deg = g.degrees()
    if g.n == 0 or any(d != deg[0] for d in deg) or deg[0] < 1:
        raise NotRegular(f"graph degrees {sorted(set(deg))} are not r-regular with r >= 1")
    adj = g.adjacency()
    m = maximum_matching(g, initial)
    cycles: dict[int, tuple[int, ...]] = {}
    claimed: set[int] = set()
    while True:
        mate = m.mate_map()
        uncovered = [v for v in range(g.n) if v not in mate and v not in cycles]
        if not uncovered:
            break
        v = uncovered[0]
        parent, depth, outer = _alternating_tree(adj, mate, v)
        overlap = claimed.intersection(parent)
        if overlap:
            raise InternalInvariantError(
                f"alternating tree from {v} entered finished cycles at {sorted(overlap)}"
            )
        best = None
        for x in sorted(outer):
            for y in adj[x]:
                if y <= x or y not in outer:
                    continue
                # last common tree vertex of the two root paths
                px, py = _tree_path(parent, x), _tree_path(parent, y)
                j = 0
                while j < min(len(px), len(py)) and px[j] == py[j]:
                    j += 1
                z = px[j - 1]
                cycle = tuple(px[j - 1:]) + tuple(reversed(py[j:]))
                key = (depth[z], tuple(px[:j]), cycle)
                if best is None or key < best[0]:
                    best = (key, z, cycle)
        if best is None:
            raise InternalInvariantError(
                f"no odd cycle reachable from uncovered vertex {v} in a regular graph"
            )
        _, z, cycle = best
        m = toggle_alternating_path(m, _tree_path(parent, z))
        cycles[z] = _canonical_cycle(cycle, z)
        claimed.update(cycle)
    return OddCycleCertificate(matching=m, cycles=cycles, graph=g)


def _canonical_cycle(cycle: tuple[int, ...], start: int) -> tuple[int, ...]:
    """Rotate to `start` and orient toward its smaller cycle neighbour."""
    i = cycle.index(start)
    rot = cycle[i:] + cycle[:i]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def check_odd_cycle_certificate(cert: OddCycleCertificate) -> list[str]:
    """Linear-scan soundness check; returns a list of violation strings."""
    g, m = cert.graph, cert.matching
    problems: list[str] = []
    mate = m.mate_map()
    for (u, v) in m.edges:
        if (u, v) not in g.edges:
            problems.append(f"matching edge ({u}, {v}) not in host graph")
    uncovered = {v for v in range(g.n) if v not in mate}
    if uncovered != set(cert.cycles):
        problems.append(f"cycle map keys {sorted(cert.cycles)} != uncovered {sorted(uncovered)}")
    seen: set[int] = set()
    for z, cycle in cert.cycles.items():
        if len(cycle) < 3 or len(cycle) % 2 == 0:
            problems.append(f"cycle at {z} has even or short length {len(cycle)}")
            continue
        if cycle[0] != z:
            problems.append(f"cycle at {z} does not start at it")
        if seen.intersection(cycle):
            problems.append(f"cycle at {z} overlaps another cycle")
        seen.update(cycle)
        for i in range(len(cycle)):
            e = edge(cycle[i], cycle[(i + 1) % len(cycle)])
            if e not in g.edges:
                problems.append(f"cycle at {z} uses non-edge {e}")
        for i in range(1, len(cycle) - 1, 2):
            e = edge(cycle[i], cycle[i + 1])
            if e not in m.edges:
                problems.append(f"cycle at {z}: pair {e} not matched along the cycle")
    return problems
