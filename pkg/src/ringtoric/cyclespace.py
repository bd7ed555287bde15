"""Chains over GF(2): boundary map, fundamental cycle bases, ranks.

Chains are packed into Python ints (bit ``k`` is edge ``k``), so XOR is the
vector sum and elimination runs a word at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, bits, components


@dataclass(frozen=True)
class ChainVector:
    bits: int
    length: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("chain has bits beyond its length")

    @classmethod
    def from_edges(cls, q: int, edge_ids: Iterable[int]) -> ChainVector:
        mask = 0
        for k in edge_ids:
            mask ^= 1 << k
        return cls(mask, q)

    def __add__(self, other: ChainVector) -> ChainVector:
        if self.length != other.length:
            raise ValueError("length mismatch")
        return ChainVector(self.bits ^ other.bits, self.length)

    __xor__ = __add__

    @property
    def support(self) -> list[int]:
        return bits(self.bits)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def to_list(self) -> list[int]:
        return [(self.bits >> k) & 1 for k in range(self.length)]


@dataclass(frozen=True)
class CycleBasis:
    vectors: tuple[ChainVector, ...]
    witness_cycles: tuple[tuple[int, ...], ...]


def boundary_mask(g: Graph, chain_bits: int) -> int:
    out = 0
    for k in bits(chain_bits):
        u, v = g.edges[k]
        out ^= (1 << u) ^ (1 << v)
    return out


def boundary(g: Graph, c: ChainVector) -> list[int]:
    """Image of a 1-chain under the boundary map, as a 0/1 list over vertices."""
    if c.length != g.q:
        raise ValueError(f"chain length {c.length} != edge count {g.q}")
    mask = boundary_mask(g, c.bits)
    return [(mask >> v) & 1 for v in range(g.n)]


def gf2_rank_masks(masks: Iterable[int]) -> int:
    # pivot table keyed by leading bit
    pivots: dict[int, int] = {}
    for m in masks:
        while m:
            top = m.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = m
                break
            m ^= p
    return len(pivots)


def gf2_rank(vectors: Iterable[ChainVector]) -> int:
    vectors = list(vectors)
    if vectors and len({v.length for v in vectors}) != 1:
        raise ValueError("vectors of unequal length")
    return gf2_rank_masks(v.bits for v in vectors)


def kernel_dimension(g: Graph) -> int:
    """dim ker(boundary), by elimination on the edge columns."""
    return g.q - gf2_rank_masks((1 << u) | (1 << v) for u, v in g.edges)


def cycle_rank(g: Graph, check: bool = __debug__) -> int:
    rank = g.q - g.n + len(components(g))
    if check:
        assert rank == kernel_dimension(g), "cycle rank formula disagrees with ker dimension"
    return rank


def tree_path(g: Graph, tree: Iterable[int], u: int, v: int) -> list[int]:
    """Vertex path from ``u`` to ``v`` inside the forest given by edge ids."""
    adj: dict[int, list[int]] = {}
    for k in tree:
        a, b = g.edges[k]
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    parent = {u: u}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for y in adj.get(x, ()):
            if y not in parent:
                parent[y] = x
                stack.append(y)
    if v not in parent:
        raise GraphError("not-spanning", f"{u} and {v} are not joined in the forest")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def check_spanning_forest(g: Graph, tree: Iterable[int]) -> None:
    tree = set(tree)
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in tree:
        if not 0 <= k < g.q:
            raise GraphError("not-forest", f"edge {k} out of range")
        a, b = (find(x) for x in g.edges[k])
        if a == b:
            raise GraphError("not-forest", f"edge {k} closes a cycle in the forest")
        parent[a] = b
    if len(tree) != g.n - len(components(g)):
        raise GraphError("not-spanning", "forest does not span every component")


def fundamental_basis(g: Graph, tree: Iterable[int]) -> CycleBasis:
    """One cycle per non-tree edge: the edge plus the tree path joining its ends."""
    tree = frozenset(tree)
    check_spanning_forest(g, tree)
    vectors = []
    witnesses = []
    for k, (u, v) in enumerate(g.edges):
        if k in tree:
            continue
        path = tree_path(g, tree, v, u)  # v ... u, closed by edge k
        ids = [g.edge_index[a, b] for a, b in zip(path, path[1:])] + [k]
        vectors.append(ChainVector.from_edges(g.q, ids))
        witnesses.append(tuple(path))
    return CycleBasis(tuple(vectors), tuple(witnesses))
