"""Ring-graph recognition: by cycle counts, by PCP plus K4-freeness, and by
an explicit construction certificate."""

from __future__ import annotations

from dataclasses import dataclass

from .cyclespace import cycle_rank
from .graph import Graph, bits, blocks, induced_subgraph  # noqa: F401  (re-export)
from .primitive import (
    PrimitiveCycle,
    block_adjacency,
    canonical_cycle,
    cycle_edge_ids,
    frank,
    k4_subdivision_free,
    pcp,
)


@dataclass(frozen=True)
class BlockCertificate:
    base_cycle: PrimitiveCycle
    attachments: tuple[tuple[int, ...], ...]

    def to_json(self, g: Graph | None = None) -> dict:
        name = g.label if g else (lambda v: v)
        return {
            "base_cycle": [name(v) for v in self.base_cycle.vertices],
            "attachments": [[name(v) for v in p] for p in self.attachments],
        }


@dataclass(frozen=True)
class RingCertificate:
    blocks: tuple[BlockCertificate, ...]

    def to_json(self, g: Graph | None = None) -> dict:
        return {"blocks": [b.to_json(g) for b in self.blocks]}

    @classmethod
    def from_json(cls, g: Graph, data: dict) -> RingCertificate:
        lookup = {g.label(v): v for v in range(g.n)}
        out = []
        for b in data["blocks"]:
            base = tuple(lookup[str(x)] for x in b["base_cycle"])
            paths = tuple(tuple(lookup[str(x)] for x in p) for p in b["attachments"])
            out.append(BlockCertificate(PrimitiveCycle(base, cycle_edge_ids(g, base), g.q), paths))
        return cls(tuple(out))


def is_ring_by_rank(g: Graph) -> bool:
    return cycle_rank(g) == frank(g)


def is_ring_by_pcp_sp(g: Graph) -> bool:
    return pcp(g)[0] and k4_subdivision_free(g)


def _peel_block(adj: dict[int, int]):
    """Reverse-peel a 2-connected block given as vertex -> neighbor mask.

    Returns ``(base_cycle_vertices, removed_paths)`` with paths in removal
    order, or ``None`` when no removable chain exists.
    """
    removed = []
    while any(m.bit_count() != 2 for m in adj.values()):
        for v in sorted(adj):
            if adj[v].bit_count() != 2:
                continue
            # walk both ways to the ends of the maximal degree-2 chain
            ends = []
            chain = [v]
            for start in bits(adj[v]):
                prev, cur, side = v, start, []
                while adj[cur].bit_count() == 2:
                    side.append(cur)
                    nxt = adj[cur] & ~(1 << prev)
                    prev, cur = cur, nxt.bit_length() - 1
                ends.append((cur, side))
            (a, left), (b, right) = ends
            if not (adj[a] >> b) & 1:
                continue
            path = [a] + left[::-1] + chain + right + [b]
            if b < a:
                path.reverse()
            for w in path[1:-1]:
                del adj[w]
            x, y = path[0], path[-1]
            adj[x] &= ~(1 << path[1])
            adj[y] &= ~(1 << path[-2])
            removed.append(tuple(path))
            break
        else:
            return None
    start = min(adj)
    cycle = [start]
    prev, cur = start, bits(adj[start])[0]
    while cur != start:
        cycle.append(cur)
        nxt = adj[cur] & ~(1 << prev)
        prev, cur = cur, nxt.bit_length() - 1
    return canonical_cycle(cycle), removed


def certify_ring_with_status(g: Graph) -> tuple[RingCertificate | None, bool]:
    """Certificate plus a flag telling whether peeling stalled on some block."""
    out = []
    for block in blocks(g).blocks:
        if len(block) < 3:
            continue
        peeled = _peel_block(block_adjacency(g, block))
        if peeled is None:
            return None, True
        base, removed = peeled
        out.append(BlockCertificate(
            PrimitiveCycle(base, cycle_edge_ids(g, base), g.q), tuple(reversed(removed))))
    return RingCertificate(tuple(out)), False


def certify_ring(g: Graph) -> RingCertificate | None:
    return certify_ring_with_status(g)[0]


def replay_block(g: Graph, cert: BlockCertificate) -> set[int]:
    """Rebuild a block from its certificate, checking every attachment rule.

    Returns the edge ids of the rebuilt block; raises ``ValueError`` on any
    violated rule.
    """
    base = cert.base_cycle.vertices
    if len(base) < 3 or len(set(base)) != len(base):
        raise ValueError("base cycle is not a cycle")
    built_v = set(base)
    built_e = set(cycle_edge_ids(g, base))
    for path in cert.attachments:
        if len(path) < 3:
            raise ValueError(f"attachment {path} has length < 2")
        a, b = path[0], path[-1]
        inner = path[1:-1]
        if a not in built_v or b not in built_v:
            raise ValueError(f"attachment {path} does not start and end on the built graph")
        if not g.has_edge(a, b) or g.edge_index[a, b] not in built_e:
            raise ValueError(f"attachment ends {a}, {b} are not adjacent in the built graph")
        if any(w in built_v for w in inner) or len(set(inner)) != len(inner):
            raise ValueError(f"attachment {path} reuses vertices")
        for x, y in zip(path, path[1:]):
            built_e.add(g.edge_index[x, y])
        built_v.update(inner)
    return built_e


def replay_certificate(g: Graph, cert: RingCertificate) -> bool:
    """True iff the certificate rebuilds every non-trivial block of ``g`` exactly."""
    wanted = sorted((b for b in blocks(g).blocks if len(b) >= 3), key=min)
    try:
        got = sorted((frozenset(replay_block(g, b)) for b in cert.blocks), key=min)
    except (ValueError, KeyError):
        return False
    return got == wanted
