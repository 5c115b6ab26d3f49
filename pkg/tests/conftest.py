"""Shared builders: structured colorings of K_n, random regular graphs, recounts."""

from __future__ import annotations

import random

import pytest

from factorpack import SimpleGraph, make_colored_realization
from factorpack.coloring import BLACK, RESIDUAL, WHITE, one_factor, two_factor
from factorpack.graphs import all_pairs, edge


def one_factorization(n: int) -> list[list[tuple[int, int]]]:
    """Round-robin split of K_n (n even) into n-1 perfect matchings."""
    assert n % 2 == 0
    m = n - 1
    rounds = []
    for r in range(m):
        pairs = [edge(r, n - 1)]
        for i in range(1, n // 2):
            pairs.append(edge((r + i) % m, (r - i) % m))
        rounds.append(sorted(pairs))
    return rounds


def circulant_rings(n: int) -> list[list[tuple[int, int]]]:
    """Split of K_n (n odd) into (n-1)/2 spanning 2-regular offset classes."""
    assert n % 2 == 1
    return [sorted({edge(i, (i + off) % n) for i in range(n)})
            for off in range(1, (n - 1) // 2 + 1)]


def random_colored_realization(rng: random.Random, n: int):
    """A valid coloring of K_n with up to 5 declared classes and random black/white rest."""
    assignments = {}
    declared = {}
    if n % 2 == 0:
        parts = one_factorization(n)
        rng.shuffle(parts)
        while True:
            n_one = rng.randint(0, 3)
            n_two = rng.randint(0, 2)
            n_res = rng.randint(0, 2)
            classes = n_one + n_two + (1 if n_res else 0)
            if 0 < classes <= 5 and n_one + 2 * n_two + n_res <= len(parts):
                break
        pos = 0
        for i in range(n_one):
            declared[one_factor(i)] = 1
            for e in parts[pos]:
                assignments[e] = one_factor(i)
            pos += 1
        for i in range(n_two):
            declared[two_factor(i)] = 2
            for e in parts[pos] + parts[pos + 1]:
                assignments[e] = two_factor(i)
            pos += 2
        if n_res:
            declared[RESIDUAL] = n_res
            for j in range(n_res):
                for e in parts[pos + j]:
                    assignments[e] = RESIDUAL
            pos += n_res
        rest = parts[pos:]
    else:
        parts = circulant_rings(n)
        rng.shuffle(parts)
        while True:
            n_two = rng.randint(0, 2)
            n_res = rng.randint(0, 2)
            classes = n_two + (1 if n_res else 0)
            if 0 < classes <= 5 and n_two + n_res <= len(parts):
                break
        pos = 0
        for i in range(n_two):
            declared[two_factor(i)] = 2
            for e in parts[pos]:
                assignments[e] = two_factor(i)
            pos += 1
        if n_res:
            declared[RESIDUAL] = 2 * n_res
            for j in range(n_res):
                for e in parts[pos + j]:
                    assignments[e] = RESIDUAL
            pos += n_res
        rest = parts[pos:]
    for part in rest:
        for e in part:
            assignments[e] = BLACK if rng.random() < 0.5 else WHITE
    return make_colored_realization(n, list(assignments.items()), declared)


def random_regular_graph(rng: random.Random, n: int, r: int) -> SimpleGraph:
    """Random simple r-regular graph: circulant base scrambled by two-switches."""
    from factorpack import switch_randomize

    assert n * r % 2 == 0 and r < n
    edges: set[tuple[int, int]] = set()
    k = r
    if k % 2 == 1:
        edges |= {edge(i, i + n // 2) for i in range(n // 2)}
        k -= 1
    for off in range(1, k // 2 + 1):
        edges |= {edge(i, (i + off) % n) for i in range(n)}
    g = SimpleGraph(n, edges)
    return switch_randomize(g, steps=4 * len(edges) + 20, seed=rng.randrange(1 << 30))


def recount_colors(real) -> dict[tuple[int, object], int]:
    """Per-vertex per-color degree table recomputed straight from the coloring."""
    table: dict[tuple[int, object], int] = {}
    for (u, v) in all_pairs(real.n):
        c = real.color_of(u, v)
        table[(u, c)] = table.get((u, c), 0) + 1
        table[(v, c)] = table.get((v, c), 0) + 1
    return table


@pytest.fixture
def rng():
    return random.Random(20240811)
