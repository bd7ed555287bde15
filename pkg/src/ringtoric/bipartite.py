"""Toric ideals of bipartite graphs: generators, height, complete
intersections and foliations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .binomial import Binomial, MonomialOrder, oriented
from .graph import Graph, GraphError, bipartition, blocks, components
from .oriented import integer_rank
from .primitive import PrimitiveCycle, enumerate_primitive_cycles
from .ring import certify_ring, is_ring_by_rank


def _require_bipartite(g: Graph) -> None:
    if bipartition(g) is None:
        raise GraphError("not-bipartite", "graph has an odd cycle")


def even_cycle_binomial(g: Graph, cycle) -> Binomial:
    """t_1 t_3 ... t_{r-1} - t_2 t_4 ... t_r for edges taken in cycle order,
    starting with the edge from the first listed vertex to the second."""
    vertices = cycle.vertices if isinstance(cycle, PrimitiveCycle) else tuple(cycle)
    if len(vertices) % 2:
        raise GraphError("odd-cycle", "odd cycle has no bipartite binomial")
    idx = g.edge_index
    ring = vertices + vertices[:1]
    ids = [idx[a, b] for a, b in zip(ring, ring[1:])]
    return Binomial.from_supports(g.q, ids[0::2], ids[1::2])


def toric_generators_bipartite(g: Graph) -> list[Binomial]:
    _require_bipartite(g)
    return [even_cycle_binomial(g, c) for c in enumerate_primitive_cycles(g)]


def unoriented_incidence(g: Graph) -> np.ndarray:
    M = np.zeros((g.n, g.q), dtype=np.int64)
    for k, (u, v) in enumerate(g.edges):
        M[u, k] = M[v, k] = 1
    return M


def height_toric(g: Graph, check: bool = True) -> int:
    """Height of P(G), summed over components: q_c - n_c, plus one for each
    bipartite component."""
    total = 0
    for comp in components(g):
        bip = bipartition_of(g, comp)
        q_c = sum(1 for u, v in g.edges if u in comp)
        total += q_c - len(comp) + (1 if bip else 0)
    if check and g.q:
        assert total == g.q - integer_rank(unoriented_incidence(g)), "height cross-check failed"
    return total


def bipartition_of(g: Graph, comp) -> bool:
    colour = {}
    for root in comp:
        if root in colour:
            continue
        colour[root] = 0
        queue = [root]
        for v in queue:
            for w in g.neighbors(v):
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def is_complete_intersection_bipartite(g: Graph) -> bool:
    _require_bipartite(g)
    return is_ring_by_rank(g)


@dataclass(frozen=True)
class Foliation:
    members: tuple[Binomial, ...]
    variable_order: tuple[int, ...]

    @property
    def order(self) -> MonomialOrder:
        return MonomialOrder.lex(len(self.variable_order), self.variable_order)

    def to_json(self) -> dict:
        return {"members": [m.to_json() for m in self.members],
                "variable_order": list(self.variable_order)}


def build_foliation(g: Graph) -> Foliation | None:
    """Foliation of P(G) read off a ring certificate, or ``None`` when ``g``
    is not a ring graph.

    Members are the base cycle, then one cycle per attached path (the path
    closed by the edge joining its ends). Each new path's variables rank
    above everything before it, and the side without the closing edge leads.
    """
    _require_bipartite(g)
    if g.n < 4:
        raise GraphError("precondition", "foliations need at least four vertices")
    dec = blocks(g)
    if len(dec.blocks) != 1 or dec.cutvertices or len(dec.blocks[0]) < 3:
        raise GraphError("precondition", "graph must be 2-connected")
    cert = certify_ring(g)
    if cert is None:
        return None
    (block,) = cert.blocks
    idx = g.edge_index
    base = block.base_cycle.vertices
    groups: list[list[int]] = []
    members = []
    b0 = even_cycle_binomial(g, base)
    groups.append(sorted(b0.plus_support) + sorted(b0.minus_support))
    members.append(b0)
    for path in block.attachments:
        closing = idx[path[-1], path[0]]
        b = even_cycle_binomial(g, path)
        if closing in b.plus_support:
            b = b.negated()
        new = [idx[x, y] for x, y in zip(path, path[1:])]
        groups.append(sorted(k for k in new if k in b.plus_support)
                      + sorted(k for k in new if k not in b.plus_support))
        members.append(b)
    ranking = [k for grp in reversed(groups) for k in grp]
    ranking += [k for k in range(g.q) if k not in set(ranking)]
    return Foliation(tuple(members), tuple(ranking))


def validate_foliation(f: Foliation) -> tuple[bool, str | None]:
    """Check conditions (a) square-free, (b) disjoint sides, homogeneity of
    degree >= 2, (c) one-variable overlaps, and coprime lex leading terms.
    Returns ``(ok, first failed condition)``."""
    for m in f.members:
        if max(m.plus + m.minus) > 1:
            return False, "a"
    for m in f.members:
        if not m.is_pure:
            return False, "b"
    for m in f.members:
        dp, dm = m.degrees()
        if dp != dm or dp < 2:
            return False, "degree"
    seen: set[int] = set()
    for j, m in enumerate(f.members):
        if j and len(seen & m.support) != 1:
            return False, "c"
        seen |= m.support
    if sorted(f.variable_order) != list(range(f.members[0].q if f.members else 0)):
        return False, "order"
    order = f.order
    leads = [oriented(m, order).plus for m in f.members]
    for a, b in combinations(leads, 2):
        if any(x and y for x, y in zip(a, b)):
            return False, "coprime"
    return True, None

