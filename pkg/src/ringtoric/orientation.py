"""The nested spanning-tree construction and the acyclic orientation whose
fundamental-cycle binomials generate the toric ideal."""

from __future__ import annotations

from dataclasses import dataclass

from .binomial import Binomial
from .graph import Graph, GraphError, bits, components, induced_subgraph, is_connected
from .oriented import (
    OrientedCycleBinomial,
    OrientedGraph,
    cycle_binomial,
    toric_generators_oriented,
)


def neighbor_set(g: Graph, s) -> frozenset[int]:
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError("unknown-vertex", f"vertex {v} not in graph")
        mask |= g.adj[v]
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Stage:
    tree_edges: frozenset[int]
    labeling: tuple[int, ...]
    i: int
    a: int | None
    attached: tuple[int, ...] | None

    def to_json(self, g: Graph) -> dict:
        return {
            "labeling": [g.label(v) for v in self.labeling],
            "tree_edges": sorted(self.tree_edges),
            "i": self.i,
            "a": None if self.a is None else g.label(self.a),
            "attached_path": None if self.attached is None else [g.label(v) for v in self.attached],
        }


@dataclass(frozen=True)
class TreeSequence:
    stages: tuple[Stage, ...]

    @property
    def final_tree(self) -> frozenset[int]:
        return self.stages[-1].tree_edges

    @property
    def final_labeling(self) -> tuple[int, ...]:
        return self.stages[-1].labeling


def maximal_path(g: Graph, start: int, allowed: int | None = None) -> list[int]:
    """Greedy maximal path through ``start``: grow the far end with the
    smallest free neighbour until stuck, then grow the start end the same way."""
    adj = g.adj
    free = ((1 << g.n) - 1 if allowed is None else allowed) & ~(1 << start)
    forward = [start]
    while cand := adj[forward[-1]] & free:
        v = (cand & -cand).bit_length() - 1
        forward.append(v)
        free &= ~(1 << v)
    backward = []
    tip = start
    while cand := adj[tip] & free:
        tip = (cand & -cand).bit_length() - 1
        backward.append(tip)
        free &= ~(1 << tip)
    return backward[::-1] + forward


def build_tree_sequence(g: Graph) -> TreeSequence:
    """Nested trees A_1 ⊂ ... ⊂ A_m ending in a spanning tree.

    A_1 is a maximal path from the minimum vertex. At each stage i is the
    longest prefix of the labeling whose neighbourhood stays inside the
    current tree; the next vertex a receives a maximal path L grown away
    from the tree, and L is spliced into the labeling right after the prefix.
    """
    if not is_connected(g):
        raise GraphError("disconnected", "tree sequence needs a connected graph")
    idx = g.edge_index
    adj = g.adj
    labels = maximal_path(g, 0)
    tree = {idx[a, b] for a, b in zip(labels, labels[1:])}
    stages = []
    while True:
        inside = 0
        for v in labels:
            inside |= 1 << v
        i = 0
        for v in labels:
            if adj[v] & ~inside:
                break
            i += 1
        if i == len(labels):
            stages.append(Stage(frozenset(tree), tuple(labels), i, None, None))
            return TreeSequence(tuple(stages))
        a = labels[i]
        grown = [a]
        free = ((1 << g.n) - 1) & ~inside
        while cand := adj[grown[-1]] & free:
            v = (cand & -cand).bit_length() - 1
            grown.append(v)
            free &= ~(1 << v)
        path = tuple(grown[::-1])  # z_1 ... z_s = a
        stages.append(Stage(frozenset(tree), tuple(labels), i, a, path))
        tree |= {idx[x, y] for x, y in zip(path, path[1:])}
        labels = labels[:i] + list(path) + labels[i + 1:]


def orient_by_labeling(g: Graph, labeling) -> OrientedGraph:
    labeling = tuple(labeling)
    if sorted(labeling) != list(range(g.n)):
        raise GraphError("labeling", "labeling must list every vertex exactly once")
    return OrientedGraph.by_labeling(g, labeling)


@dataclass(frozen=True)
class OrientationCertificate:
    oriented: OrientedGraph
    labeling: tuple[int, ...]
    tree: frozenset[int]
    fundamental: tuple[OrientedCycleBinomial, ...]
    generators: tuple[Binomial, ...]
    sequences: tuple[TreeSequence, ...]
    connected: bool

    @property
    def nontree_edges(self) -> list[int]:
        return [k for k in range(self.oriented.base.q) if k not in self.tree]

    def to_json(self, with_primitive: bool = True) -> dict:
        g = self.oriented.base
        out = {
            "labeling": [g.label(v) for v in self.labeling],
            "directed_edges": self.oriented.to_json(),
            "tree_edges": sorted(self.tree),
            "generators": [
                dict(b.to_json(), cycle=[g.label(v) for v in f.cycle])
                for f, b in zip(self.fundamental, self.generators)
            ],
            "stages": [[s.to_json(g) for s in seq.stages] for seq in self.sequences],
            "connected": self.connected,
        }
        if with_primitive:
            out["primitive_generators"] = [
                b.to_json(g) for b in toric_generators_oriented(self.oriented)]
        return out


def fundamental_binomials(d: OrientedGraph, tree) -> tuple[list[OrientedCycleBinomial], list[Binomial]]:
    """c(tree, f) and its binomial written as t_f - t^beta, for every non-tree f.

    Raises ``ValueError`` when some fundamental cycle is not oriented with
    all tree edges one way and f the other way.
    """
    g = d.base
    tree = frozenset(tree)
    parent, depth = _root_forest(g, tree)
    cycles, gens = [], []
    for k, (u, v) in enumerate(g.edges):
        if k in tree:
            continue
        cb = cycle_binomial(d, _forest_path(parent, depth, v, u))
        if cb.minus_edges == {k}:
            b = cb.binomial.negated()
        elif cb.plus_edges == {k}:
            b = cb.binomial
        else:
            raise ValueError(f"fundamental cycle of edge {k} is not coherently oriented")
        cycles.append(cb)
        gens.append(b)
    return cycles, gens


def _root_forest(g: Graph, tree):
    nbrs: list[list[int]] = [[] for _ in range(g.n)]
    for k in tree:
        a, b = g.edges[k]
        nbrs[a].append(b)
        nbrs[b].append(a)
    parent = [-1] * g.n
    depth = [-1] * g.n
    for root in range(g.n):
        if depth[root] != -1:
            continue
        depth[root] = 0
        queue = [root]
        for x in queue:
            for y in nbrs[x]:
                if depth[y] == -1:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    queue.append(y)
    return parent, depth


def _forest_path(parent, depth, u: int, v: int) -> list[int]:
    head, tail = [u], [v]
    while head[-1] != tail[-1]:
        if depth[head[-1]] >= depth[tail[-1]]:
            if parent[head[-1]] == -1:
                raise GraphError("not-spanning", f"{u} and {v} lie in different trees")
            head.append(parent[head[-1]])
        else:
            tail.append(parent[tail[-1]])
    return head + tail[-2::-1]


def ci_generators(g: Graph) -> OrientationCertificate:
    """Orient ``g`` by the tree-sequence labeling and return the q-n+r
    fundamental binomials. Components are handled separately and their
    labelings concatenated."""
    seqs = []
    labeling: list[int] = []
    tree: set[int] = set()
    for comp in sorted(components(g), key=min):
        verts = sorted(comp)
        if len(verts) == 1:
            labeling.append(verts[0])
            continue
        sub = induced_subgraph(g, verts)
        seq = build_tree_sequence(sub)
        seq = _lift(seq, verts, sub, g)
        seqs.append(seq)
        labeling.extend(seq.final_labeling)
        tree |= seq.final_tree
    d = orient_by_labeling(g, labeling)
    cycles, gens = fundamental_binomials(d, tree)
    return OrientationCertificate(d, tuple(labeling), frozenset(tree), tuple(cycles),
                                  tuple(gens), tuple(seqs), len(components(g)) == 1)


def _lift(seq: TreeSequence, verts: list[int], sub: Graph, g: Graph) -> TreeSequence:
    """Map a tree sequence of an induced component back to ``g``'s indices."""
    if verts == list(range(g.n)) and sub.edges == g.edges:
        return seq
    idx = g.edge_index
    out = []
    for s in seq.stages:
        out.append(Stage(
            frozenset(idx[verts[a], verts[b]] for a, b in (sub.edges[k] for k in s.tree_edges)),
            tuple(verts[v] for v in s.labeling),
            s.i,
            None if s.a is None else verts[s.a],
            None if s.attached is None else tuple(verts[v] for v in s.attached),
        ))
    return TreeSequence(tuple(out))
