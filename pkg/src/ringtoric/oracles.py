"""Brute-force references and graph corpora for exhaustive checking.

Nothing here shares code with the fast paths it is used to check; the
cycle search is a plain simple-path DFS and the K4 search tries every
quadruple of branch vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .binomial import BudgetExceeded
from .graph import Graph, bits


def oracle_all_cycles(g: Graph, max_cycles: int | None = None) -> list[tuple[int, ...]]:
    """Every cycle as a vertex tuple: minimum vertex first, then the smaller
    of its two cycle neighbours."""
    nbrs = [sorted(g.neighbors(v)) for v in range(g.n)]
    out = []
    for s in range(g.n):
        stack = [(s, [s], {s})]
        while stack:
            v, path, used = stack.pop()
            for w in nbrs[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                    if max_cycles is not None and len(out) > max_cycles:
                        raise BudgetExceeded(f"more than {max_cycles} cycles")
                elif w > s and w not in used:
                    stack.append((w, path + [w], used | {w}))
    return sorted(out)


def has_chord(g: Graph, cycle) -> bool:
    r = len(cycle)
    for i in range(r):
        for j in range(i + 2, r):
            if i == 0 and j == r - 1:
                continue
            if g.has_edge(cycle[i], cycle[j]):
                return True
    return False


def oracle_frank(g: Graph) -> int:
    return sum(1 for c in oracle_all_cycles(g) if not has_chord(g, c))


def _disjoint_paths(g: Graph, pairs, free: set[int]) -> bool:
    if not pairs:
        return True
    (a, b), rest = pairs[0], pairs[1:]
    if g.has_edge(a, b) and _disjoint_paths(g, rest, free):
        return True
    # paths a -> ... -> b through at least one free vertex
    stack = [(a, [])]
    while stack:
        v, inner = stack.pop()
        for w in g.neighbors(v):
            if w == b and inner:
                if _disjoint_paths(g, rest, free - set(inner)):
                    return True
            elif w in free and w not in inner:
                stack.append((w, inner + [w]))
    return False


def oracle_k4_subdivision(g: Graph, max_n: int = 9) -> bool:
    """True iff some four branch vertices are pairwise joined by six
    internally disjoint paths."""
    if g.n > max_n:
        raise BudgetExceeded(f"K4 search limited to {max_n} vertices")
    candidates = [v for v in range(g.n) if g.degree(v) >= 3]
    for quad in combinations(candidates, 4):
        free = set(range(g.n)) - set(quad)
        if _disjoint_paths(g, list(combinations(quad, 2)), free):
            return True
    return False


def oracle_cycle_rank(g: Graph) -> int:
    """dim of the cycle space by counting: 2^dim = number of even subgraphs."""
    count = 0
    for mask in range(1 << g.q):
        deg = [0] * g.n
        for k in bits(mask):
            u, v = g.edges[k]
            deg[u] ^= 1
            deg[v] ^= 1
        if not any(deg):
            count += 1
    return count.bit_length() - 1


# -- corpora -----------------------------------------------------------------

def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(n) for u in range(v)]


def graph_from_mask(n: int, mask: int, pairs=None) -> Graph:
    pairs = pairs or vertex_pairs(n)
    return Graph(n, tuple(pairs[k] for k in bits(mask)))


def _connected_mask(n: int, pairs, mask: int) -> bool:
    adj = [0] * n
    for k in bits(mask):
        u, v = pairs[k]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def all_graphs(n: int, connected: bool = False) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices, each exactly once."""
    pairs = vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        if connected and not _connected_mask(n, pairs, mask):
            continue
        yield Graph(n, tuple(pairs[k] for k in bits(mask)))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, tuple(e for e in vertex_pairs(n) if rng.random() < p))


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for e in vertex_pairs(n):
        if e not in edges and rng.random() < p:
            edges.add(e)
    edges = sorted(edges, key=lambda e: (rng.random(), e))
    return Graph(n, tuple(edges))


def bipartite_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected bipartite graph on ``n`` vertices, once each.

    A connected bipartite graph has exactly one 2-colouring with vertex 0
    on side 0, so iterating colourings of the other vertices and edge
    subsets between the sides hits each graph once.
    """
    if n == 1:
        yield Graph(1, ())
        return
    for colouring in range(1 << (n - 1)):
        side1 = [v for v in range(1, n) if (colouring >> (v - 1)) & 1]
        if not side1:
            continue
        side0 = [0] + [v for v in range(1, n) if not (colouring >> (v - 1)) & 1]
        cross = [(min(a, b), max(a, b)) for a in side0 for b in side1]
        cross.sort(key=lambda e: (e[1], e[0]))
        for mask in range(1 << len(cross)):
            if mask.bit_count() < n - 1 or not _connected_mask(n, cross, mask):
                continue
            yield Graph(n, tuple(cross[k] for k in bits(mask)))


@dataclass(frozen=True)
class GraphIterator:
    """``mode`` is ``all``, ``all-connected`` or ``random``."""

    n: int
    mode: str = "all-connected"
    seed: int = 0
    count: int = 0
    edge_probability: float = 0.5

    def __iter__(self) -> Iterator[Graph]:
        if self.mode == "all":
            return all_graphs(self.n)
        if self.mode == "all-connected":
            return all_graphs(self.n, connected=True)
        if self.mode == "random":
            rng = random.Random(self.seed)
            return (random_graph(rng, self.n, self.edge_probability) for _ in range(self.count))
        raise ValueError(f"unknown mode {self.mode!r}")


def fan(n: int) -> Graph:
    """Hub 0 joined to every vertex of the path 1..n-1."""
    edges = [(0, v) for v in range(1, n)] + [(v, v + 1) for v in range(1, n - 1)]
    return Graph(n, tuple(edges))


def polygon_with_chords(rng: random.Random, n: int, max_chords: int | None = None) -> Graph:
    """Cycle 0..n-1 plus random pairwise non-crossing chords; ``max_chords``
    of ``None`` keeps adding until the polygon is triangulated."""
    edges = {(i, (i + 1) % n) for i in range(n)}
    edges = {(min(e), max(e)) for e in edges}
    chords: list[tuple[int, int]] = []
    candidates = [(a, b) for a in range(n) for b in range(a + 2, n) if not (a == 0 and b == n - 1)]
    rng.shuffle(candidates)
    limit = n - 3 if max_chords is None else min(max_chords, n - 3)
    for a, b in candidates:
        if len(chords) >= limit:
            break
        if all(not _crosses((a, b), c) for c in chords):
            chords.append((a, b))
    return Graph(n, tuple(sorted(edges)) + tuple(chords))


def _crosses(c1, c2) -> bool:
    a, b = c1
    c, d = c2
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def acyclic_tournaments(n: int) -> Iterator[tuple[Graph, tuple[int, ...]]]:
    """K_n with each transitive orientation, given by its topological order."""
    g = Graph(n, tuple(vertex_pairs(n)))
    for order in permutations(range(n)):
        yield g, order


def connected_graphs_upto(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from all_graphs(n, connected=True)


def random_corpus(seed: int, count: int, n_max: int, n_min: int = 1) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        out.append(random_graph(rng, n, rng.uniform(0.15, 0.7)))
    return out

