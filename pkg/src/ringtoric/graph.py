"""Undirected simple graphs on dense vertex indices.

Edge order is part of the contract: edge ``k`` is the toric variable
``t_{k+1}`` everywhere downstream, so it is never re-sorted after parsing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Domain error on graph input. ``kind`` is a short machine-readable tag."""

    def __init__(self, kind: str, message: str, line: int | None = None):
        super().__init__(message)
        self.kind = kind
        self.line = line

    def to_json(self) -> dict:
        out = {"error": self.kind, "message": str(self)}
        if self.line is not None:
            out["line"] = self.line
        return out


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError("loop", f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError("unknown-vertex", f"edge ({u}, {v}) out of range")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError("multi-edge", f"duplicate edge {key}")
            seen.add(key)
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels", "label count does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> Graph:
        return cls(n, tuple((int(u), int(v)) for u, v in edges),
                   tuple(labels) if labels is not None else None)

    @property
    def q(self) -> int:
        return len(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbor bitmask per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        index = {}
        for k, (u, v) in enumerate(self.edges):
            index[u, v] = k
            index[v, u] = k
        return index

    @cached_property
    def component_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(_components(self))

    @cached_property
    def block_decomposition(self) -> BlockDecomposition:
        return _decompose(self)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_index

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def to_json(self) -> dict:
        return {
            "vertices": [self.label(v) for v in range(self.n)],
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        vertices = data["vertices"]
        labels = [str(x) for x in vertices]
        if labels == [str(i) for i in range(len(labels))]:
            labels = None
        return cls.from_edges(len(vertices), data["edges"], labels)


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def parse_graph(text: str) -> Graph:
    """Parse ``u v`` edge-list text; vertices are numbered by first appearance."""
    index: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError("parse", f"line {lineno}: expected 'u v', got {raw!r}", lineno)
        ends = []
        for name in parts:
            if name not in index:
                index[name] = len(labels)
                labels.append(name)
            ends.append(index[name])
        u, v = ends
        if u == v:
            raise GraphError("loop", f"line {lineno}: loop at {parts[0]!r}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError("multi-edge", f"line {lineno}: duplicate of line {seen[key]}", lineno)
        seen[key] = lineno
        edges.append((u, v))
    return Graph(len(labels), tuple(edges), tuple(labels))


def format_graph(g: Graph) -> str:
    """Inverse of :func:`parse_graph` for graphs without isolated vertices."""
    return "".join(f"{g.label(u)} {g.label(v)}\n" for u, v in g.edges)


def components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by minimum vertex."""
    return list(g.component_sets)


def _components(g: Graph) -> list[frozenset[int]]:
    adj = g.adj
    unseen = (1 << g.n) - 1
    out = []
    while unseen:
        root = unseen & -unseen
        comp = frontier = root
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        unseen &= ~comp
        out.append(frozenset(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    block_vertices: tuple[frozenset[int], ...]
    cutvertices: frozenset[int]
    bridges: frozenset[int]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected decomposition; isolated vertices come out as edge-free blocks.
    Computed once per graph."""
    return g.block_decomposition


def _decompose(g: Graph) -> BlockDecomposition:
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    eidx = g.edge_index
    disc = [-1] * n
    low = [0] * n
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    counter = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = counter
        counter += 1
        if not nbrs[root]:
            found.append(frozenset())
            continue
        edge_stack: list[int] = []
        root_children = 0
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append(eidx[v, w])
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(nbrs[w])))
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(eidx[v, w])
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if parent == -1:
                    continue
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    tree_edge = eidx[parent, v]
                    comp = []
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == tree_edge:
                            break
                    found.append(frozenset(comp))
                    if parent == root:
                        root_children += 1
                    else:
                        cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    # isolated vertices were appended in discovery order; keep edge blocks first
    vertex_sets = []
    isolated = iter(v for v in range(n) if not nbrs[v])
    for comp in found:
        if comp:
            vs = set()
            for e in comp:
                vs.update(g.edges[e])
            vertex_sets.append(frozenset(vs))
        else:
            vertex_sets.append(frozenset([next(isolated)]))
    bridges = frozenset(next(iter(c)) for c in found if len(c) == 1)
    return BlockDecomposition(tuple(found), tuple(vertex_sets), frozenset(cuts), bridges)


def spanning_forest(g: Graph) -> frozenset[int]:
    """Edge indices of a BFS spanning forest, roots taken in index order."""
    adj_edges: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for k, (u, v) in enumerate(g.edges):
        adj_edges[u].append((v, k))
        adj_edges[v].append((u, k))
    seen = [False] * g.n
    tree = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        for v in queue:
            for w, k in sorted(adj_edges[v]):
                if not seen[w]:
                    seen[w] = True
                    tree.append(k)
                    queue.append(w)
    return frozenset(tree)


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        for v in queue:
            for w in bits(g.adj[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = frozenset(v for v in range(g.n) if color[v] == 0)
    side1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return side0, side1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, re-indexed in increasing vertex order.

    Edges keep their relative order from ``g``.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError("unknown-vertex", f"vertex {v} not in graph")
    new = {v: i for i, v in enumerate(keep)}
    edges = tuple((new[u], new[v]) for u, v in g.edges if u in new and v in new)
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Graph(len(keep), edges, labels)


def edge_subgraph_vertices(g: Graph, edge_ids: Iterable[int]) -> set[int]:
    out = set()
    for k in edge_ids:
        out.update(g.edges[k])
    return out
