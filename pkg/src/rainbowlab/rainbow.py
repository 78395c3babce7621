"""Deciding whether an edge-colored graph contains a rainbow matching.

The decision procedure is an exact backtracking search over edges in index
order.  A second, independently coded oracle (enumerate_representative_choices)
answers the same question by brute force over color subsets so the two can be
cross-checked on small instances.

Vertex sets are manipulated as bitmasks throughout; the graphs this package
targets have at most a few dozen edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .colorings import Coloring
from .graphs import Graph
from .matching import maximum_matching

__all__ = [
    "RainbowWitness",
    "find_rainbow_matching",
    "representative_subgraph",
    "enumerate_representative_choices",
    "max_matching_size",
]

REPRESENTATIVE_ORACLE_MAX_EDGES = 20


@dataclass(frozen=True)
class RainbowWitness:
    """m pairwise disjoint edges with pairwise distinct colors."""

    edges: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.edges) != len(self.colors):
            raise ValueError("witness edges and colors must align")
        if len(set(self.colors)) != len(self.colors):
            raise ValueError("witness colors must be pairwise distinct")

    @property
    def size(self) -> int:
        return len(self.edges)

    def verify(self, g: Graph, coloring: Coloring) -> bool:
        """Re-check the witness against its host graph and coloring."""
        touched: set[int] = set()
        for i, c in zip(self.edges, self.colors):
            u, v = g.edge(i)
            if u in touched or v in touched:
                return False
            if coloring.color_of(i) != c:
                return False
            touched.update((u, v))
        return len(set(self.colors)) == len(self.colors)


def _matching_number_masks(vmasks: list[int]) -> int:
    """Exact maximum matching size of an arbitrary small graph given edge
    vertex-masks.  Branches on the lowest-index edge; exponential but fine at
    this package's scale."""
    memo: dict[tuple[int, ...], int] = {}

    def solve(active: tuple[int, ...]) -> int:
        if not active:
            return 0
        if active in memo:
            return memo[active]
        head = active[0]
        rest = active[1:]
        best = solve(rest)  # skip head
        with_head = 1 + solve(tuple(m for m in rest if not m & head))
        best = max(best, with_head)
        memo[active] = best
        return best

    return solve(tuple(vmasks))


def max_matching_size(g: Graph) -> int:
    """Matching number of any graph: augmenting paths when bipartite, exact
    branching otherwise."""
    if g.bipartition is not None:
        return maximum_matching(g).size
    return _matching_number_masks(g.edge_vertex_masks())


def find_rainbow_matching(g: Graph, coloring: Coloring, m: int) -> RainbowWitness | None:
    """Exact decision: a rainbow matching of size m, or None if there is none.

    Backtracks over edges in ascending index order, skipping edges that touch
    a used vertex or repeat a used color.  Two admissible prunes cut the
    tree: the maximum matching size of the still-available edges, and the
    number of still-available distinct colors.  The returned witness is the
    lexicographically smallest edge-index sequence, so results are stable
    across runs.
    """
    if m < 1:
        raise ValueError(f"matching size must be positive, got {m}")
    if coloring.edge_count != g.edge_count:
        raise ValueError(
            f"coloring covers {coloring.edge_count} edges but graph has {g.edge_count}"
        )
    if m > max_matching_size(g):
        return None
    vmasks = g.edge_vertex_masks()
    colors = coloring.assignment
    edge_count = g.edge_count
    matching_cache: dict[tuple[int, ...], int] = {}

    def available_matching_bound(start: int, used_vertices: int) -> int:
        active = tuple(
            vmasks[j] for j in range(start, edge_count) if not vmasks[j] & used_vertices
        )
        if active not in matching_cache:
            matching_cache[active] = _matching_number_masks(list(active))
        return matching_cache[active]

    chosen: list[int] = []

    def search(start: int, used_vertices: int, used_colors: frozenset[int]) -> bool:
        if len(chosen) == m:
            return True
        need = m - len(chosen)
        remaining_colors = {
            colors[j]
            for j in range(start, edge_count)
            if colors[j] not in used_colors and not vmasks[j] & used_vertices
        }
        if len(remaining_colors) < need:
            return False
        if available_matching_bound(start, used_vertices) < need:
            return False
        for j in range(start, edge_count):
            if vmasks[j] & used_vertices or colors[j] in used_colors:
                continue
            chosen.append(j)
            if search(j + 1, used_vertices | vmasks[j], used_colors | {colors[j]}):
                return True
            chosen.pop()
        return False

    if search(0, 0, frozenset()):
        edges = tuple(j + 1 for j in chosen)
        return RainbowWitness(edges, tuple(colors[j] for j in chosen))
    return None


def representative_subgraph(g: Graph, coloring: Coloring) -> Graph:
    """Spanning subgraph keeping one edge per color: the smallest edge index
    of each color class."""
    if coloring.edge_count != g.edge_count:
        raise ValueError(
            f"coloring covers {coloring.edge_count} edges but graph has {g.edge_count}"
        )
    first_of_color: dict[int, int] = {}
    for i, c in enumerate(coloring.assignment, start=1):
        first_of_color.setdefault(c, i)
    picked = sorted(first_of_color.values())
    return Graph(g.vertex_count, tuple(g.edges[i - 1] for i in picked), g.bipartition)


def enumerate_representative_choices(g: Graph, coloring: Coloring, m: int) -> bool:
    """Independent rainbow-matching oracle: try every m-subset of colors and
    every choice of one edge per chosen color, and report whether some choice
    is pairwise disjoint.  Deliberately brute force; refuses graphs with more
    than REPRESENTATIVE_ORACLE_MAX_EDGES edges."""
    if m < 1:
        raise ValueError(f"matching size must be positive, got {m}")
    if coloring.edge_count != g.edge_count:
        raise ValueError(
            f"coloring covers {coloring.edge_count} edges but graph has {g.edge_count}"
        )
    if g.edge_count > REPRESENTATIVE_ORACLE_MAX_EDGES:
        raise ValueError(
            f"representative oracle is limited to {REPRESENTATIVE_ORACLE_MAX_EDGES} edges, "
            f"got {g.edge_count}"
        )
    if m > coloring.color_count:
        return False
    classes = coloring.color_classes()
    for color_subset in combinations(range(1, coloring.color_count + 1), m):
        for choice in product(*(classes[c] for c in color_subset)):
            touched: set[int] = set()
            ok = True
            for i in choice:
                u, v = g.edge(i)
                if u in touched or v in touched:
                    ok = False
                    break
                touched.update((u, v))
            if ok:
                return True
    return False
