"""Independent brute-force oracles used to cross-check the library.

Everything here is written the dumbest correct way (itertools over subsets),
on purpose: these are the second route of every dual-route check, so they
must not share logic with the implementations they gate.
"""

from __future__ import annotations

import random
from itertools import combinations

from rainbowlab import Graph


def is_disjoint_edge_set(g: Graph, edge_indices) -> bool:
    touched = set()
    for i in edge_indices:
        u, v = g.edge(i)
        if u in touched or v in touched:
            return False
        touched.update((u, v))
    return True


def brute_matchings_of_size(g: Graph, size: int):
    for combo in combinations(range(1, g.edge_count + 1), size):
        if is_disjoint_edge_set(g, combo):
            yield combo


def brute_max_matching_size(g: Graph) -> int:
    for size in range(g.edge_count, 0, -1):
        for _ in brute_matchings_of_size(g, size):
            return size
    return 0


def brute_has_rainbow_matching(g: Graph, coloring, m: int) -> bool:
    for combo in brute_matchings_of_size(g, m):
        colors = [coloring.color_of(i) for i in combo]
        if len(set(colors)) == m:
            return True
    return False


def brute_ext(g: Graph, m: int) -> int:
    """Largest edge subset with no m-matching, by trying subsets largest first."""
    edge_ids = list(range(1, g.edge_count + 1))
    for size in range(g.edge_count, -1, -1):
        for subset in combinations(edge_ids, size):
            if not any(
                is_disjoint_edge_set(g, combo) for combo in combinations(subset, m)
            ):
                return size
    return 0


def brute_best_saturation(g: Graph, size: int) -> int:
    """Most maximum-degree vertices any matching of the given size covers."""
    deg = g.degrees()
    top = max(deg)
    specials = {v for v in range(g.vertex_count) if deg[v] == top}
    best = -1
    for combo in brute_matchings_of_size(g, size):
        covered = set()
        for i in combo:
            covered.update(g.edge(i))
        best = max(best, len(covered & specials))
    return best


def brute_deficiency(g: Graph, side) -> int:
    """max over S of |S| - |N(S)|, enumerating every subset of the side."""
    side = sorted(side)
    best = 0
    for size in range(len(side) + 1):
        for subset in combinations(side, size):
            neighborhood = set()
            for v in subset:
                neighborhood |= g.neighbors(v)
            best = max(best, len(subset) - len(neighborhood))
    return best


def random_bipartite(rng: random.Random, max_side: int = 6, p: float = 0.4) -> Graph:
    """Seeded random bipartite graph with sides up to max_side (so at most
    2 * max_side vertices), possibly with isolated vertices or no edges."""
    nx = rng.randint(1, max_side)
    ny = rng.randint(1, max_side)
    edges = []
    for x in range(nx):
        for y in range(ny):
            if rng.random() < p:
                edges.append((x, nx + y))
    return Graph(nx + ny, tuple(edges),
                 (frozenset(range(nx)), frozenset(range(nx, nx + ny))))
