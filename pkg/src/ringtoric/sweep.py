"""Run a per-graph check over a stream of graphs and merge the outcomes.

Workers each own a slice of the stream; results merge as a count plus a
bounded failure list, so a sweep over millions of graphs stays small.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cyclespace import cycle_rank, gf2_rank_masks
from .graph import Graph, blocks, induced_subgraph
from .oracles import connected_graphs_upto, oracle_frank, random_corpus
from .primitive import chordless_cycles, enumerate_primitive_cycles, k4_subdivision_free, pcp
from .ring import certify_ring_with_status, replay_certificate

Check = Callable[[Graph], list[str]]


@dataclass
class SweepResult:
    checked: int = 0
    failures: list[tuple[dict, str]] = field(default_factory=list)
    failure_count: int = 0
    keep: int = 20

    def record(self, g: Graph, messages: list[str]) -> None:
        self.checked += 1
        for msg in messages:
            self.failure_count += 1
            if len(self.failures) < self.keep:
                self.failures.append((g.to_json(), msg))

    def merge(self, other: SweepResult) -> None:
        self.checked += other.checked
        self.failure_count += other.failure_count
        room = self.keep - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def to_json(self) -> dict:
        return {"checked": self.checked, "failures": self.failure_count,
                "examples": [{"graph": g, "message": m} for g, m in self.failures]}


def _run_chunk(check: Check, graphs: list[Graph]) -> SweepResult:
    res = SweepResult()
    for g in graphs:
        res.record(g, check(g))
    return res


def run_sweep(graphs: Iterable[Graph], check: Check, workers: int = 1,
              chunk: int = 5000) -> SweepResult:
    """Apply ``check`` to every graph. ``check`` must be a module-level
    function when ``workers > 1``."""
    if workers <= 1:
        return _run_chunk(check, graphs)
    total = SweepResult()
    it = iter(graphs)
    with ProcessPoolExecutor(workers) as pool:
        futures = []
        while batch := list(itertools.islice(it, chunk)):
            futures.append(pool.submit(_run_chunk, check, batch))
        for fut in futures:
            total.merge(fut.result())
    return total


def ring_agreement(g: Graph) -> list[str]:
    """All ring-graph checks that are cheap enough for exhaustive sweeps:
    the three recognizers agree, rank <= frank, primitive cycles span the
    cycle space, the block reduction holds and certificates replay."""
    out = []
    rank = cycle_rank(g, check=False)
    cycles = enumerate_primitive_cycles(g)
    fr = len(cycles)
    by_rank = rank == fr
    has_pcp = pcp(g, cycles)[0]
    by_pcp = has_pcp and k4_subdivision_free(g)
    cert, stalled = certify_ring_with_status(g)
    if not by_rank == by_pcp == (cert is not None):
        out.append(f"recognizers disagree: rank={by_rank} pcp_sp={by_pcp} "
                   f"certificate={cert is not None} stalled={stalled}")
    if cert is not None and not replay_certificate(g, cert):
        out.append("certificate does not replay")
    if rank > fr:
        out.append(f"rank {rank} > frank {fr}")
    if gf2_rank_masks(c.mask for c in cycles) != rank:
        out.append("primitive cycles do not span the cycle space")
    blockwise = True
    for block in blocks(g).blocks:
        if len(block) < 3:
            continue
        verts = sorted({v for k in block for v in g.edges[k]})
        sub = induced_subgraph(g, verts)
        # induced subgraph of a block's vertex set is the block itself
        if sub.q != len(block):
            out.append("block is not induced")
        if cycle_rank(sub, check=False) != len(chordless_cycles(sub.n, sub.adj)):
            blockwise = False
    if blockwise != by_rank:
        out.append(f"blockwise rank==frank is {blockwise} but global is {by_rank}")
    return out


def oracle_agreement(g: Graph) -> list[str]:
    out = []
    fr = len(chordless_cycles(g.n, g.adj))
    if fr != oracle_frank(g):
        out.append(f"frank {fr} != oracle {oracle_frank(g)}")
    return out


def selftest(max_n: int = 6, random_count: int = 200, seed: int = 0,
             random_max_n: int = 9, workers: int = 1) -> dict:
    exhaustive = run_sweep(connected_graphs_upto(max_n), ring_agreement, workers)
    oracle = run_sweep(connected_graphs_upto(min(max_n, 6)), oracle_agreement, workers)
    rng_graphs = random_corpus(seed, random_count, random_max_n)
    randomized = run_sweep(rng_graphs, ring_agreement, workers)
    ok = exhaustive.ok and oracle.ok and randomized.ok
    return {"ok": ok, "seed": seed, "max_n": max_n,
            "exhaustive": exhaustive.to_json(), "oracle": oracle.to_json(),
            "random": randomized.to_json()}

