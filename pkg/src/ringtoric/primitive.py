"""Primitive (chordless) cycles, the primitive cycle property, K4-subdivisions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .binomial import BudgetExceeded
from .cyclespace import ChainVector
from .graph import Graph, bits, blocks


@dataclass(frozen=True)
class PrimitiveCycle:
    vertices: tuple[int, ...]
    edge_ids: frozenset[int]
    q: int

    @cached_property
    def mask(self) -> int:
        m = 0
        for k in self.edge_ids:
            m |= 1 << k
        return m

    @property
    def chain(self) -> ChainVector:
        return ChainVector(self.mask, self.q)

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self, g: Graph | None = None) -> dict:
        return {
            "vertices": [g.label(v) if g else v for v in self.vertices],
            "edges": sorted(self.edge_ids),
        }


def canonical_cycle(vertices) -> tuple[int, ...]:
    """Rotate to start at the minimum vertex, then pick the direction whose
    second vertex is smaller."""
    vs = list(vertices)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


def cycle_edge_ids(g: Graph, vertices) -> frozenset[int]:
    idx = g.edge_index
    return frozenset(idx[a, b] for a, b in zip(vertices, vertices[1:] + vertices[:1]))


def chordless_cycles(n: int, adj) -> list[tuple[int, ...]]:
    """Chordless cycles of the graph with neighbor bitmasks ``adj``.

    Each cycle is grown as a chordless path from its minimum vertex ``s``;
    a candidate may not touch ``s`` or any interior path vertex, except that
    touching ``s`` closes the cycle. Orientation is fixed by requiring the
    second vertex to be smaller than the last.
    """
    out = []
    for s in range(n):
        higher = ~((2 << s) - 1)
        ns = adj[s]
        for u1 in bits(ns & higher):
            stack = [(u1, (1 << s) | (1 << u1), 0, (s, u1))]
            while stack:
                last, on_path, interior, path = stack.pop()
                cand = adj[last] & higher & ~on_path & ~interior
                while cand:
                    low = cand & -cand
                    cand ^= low
                    v = low.bit_length() - 1
                    if ns & low:
                        if u1 < v:
                            out.append(path + (v,))
                    else:
                        stack.append((v, on_path | low, interior | adj[last], path + (v,)))
    return out


def simple_cycles(n: int, adj, max_cycles: int | None = None) -> list[tuple[int, ...]]:
    """Every cycle, chorded or not, in the same orientation convention as
    :func:`chordless_cycles`. Exponential; meant for small graphs.

    Finding more than ``max_cycles`` cycles raises :class:`BudgetExceeded`.
    """
    out = []
    for s in range(n):
        higher = ~((2 << s) - 1)
        ns = adj[s]
        for u1 in bits(ns & higher):
            stack = [(u1, (1 << s) | (1 << u1), (s, u1))]
            while stack:
                last, on_path, path = stack.pop()
                cand = adj[last] & higher & ~on_path
                while cand:
                    low = cand & -cand
                    cand ^= low
                    v = low.bit_length() - 1
                    if ns & low and u1 < v:
                        out.append(path + (v,))
                        if max_cycles is not None and len(out) > max_cycles:
                            raise BudgetExceeded(f"more than {max_cycles} cycles")
                    stack.append((v, on_path | low, path + (v,)))
    return out


def enumerate_primitive_cycles(g: Graph) -> list[PrimitiveCycle]:
    cycles = sorted(chordless_cycles(g.n, g.adj))
    return [PrimitiveCycle(c, cycle_edge_ids(g, c), g.q) for c in cycles]


def frank(g: Graph) -> int:
    return len(chordless_cycles(g.n, g.adj))


def pcp(g: Graph, cycles: list[PrimitiveCycle] | None = None):
    """Primitive cycle property. Returns ``(True, None)`` or ``(False, (c1, c2))``
    for the first pair of primitive cycles sharing two or more edges."""
    if cycles is None:
        cycles = enumerate_primitive_cycles(g)
    for a, b in combinations(cycles, 2):
        if (a.mask & b.mask).bit_count() > 1:
            return False, (a, b)
    return True, None


def series_parallel_reducible(adj: dict[int, int]) -> bool:
    """Suppress degree-2 vertices until none remain; parallel edges collapse
    automatically because adjacency is a set. ``adj`` is consumed."""
    todo = [v for v, m in adj.items() if m.bit_count() == 2]
    while todo:
        v = todo.pop()
        m = adj.get(v)
        if m is None or m.bit_count() != 2:
            continue
        a = (m & -m).bit_length() - 1
        b = (m ^ (1 << a)).bit_length() - 1
        del adj[v]
        vb = 1 << v
        adj[a] = (adj[a] & ~vb) | (1 << b)
        adj[b] = (adj[b] & ~vb) | (1 << a)
        if len(adj) <= 2:
            break
        for w in (a, b):
            if adj[w].bit_count() == 2:
                todo.append(w)
    return len(adj) == 2


def block_adjacency(g: Graph, edge_ids) -> dict[int, int]:
    adj: dict[int, int] = {}
    for k in edge_ids:
        u, v = g.edges[k]
        adj[u] = adj.get(u, 0) | (1 << v)
        adj[v] = adj.get(v, 0) | (1 << u)
    return adj


def k4_subdivision_free(g: Graph) -> bool:
    """True iff no block reduces to something other than a single edge under
    series-parallel reduction."""
    for block in blocks(g).blocks:
        if len(block) < 6:
            continue
        if not series_parallel_reducible(block_adjacency(g, block)):
            return False
    return True
