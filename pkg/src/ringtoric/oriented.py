"""Oriented graphs: incidence matrices, cycle binomials and their algebra."""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from itertools import combinations

import numpy as np

from .binomial import Binomial, BudgetExceeded, MonomialOrder, buchberger
from .graph import Graph, GraphError, bits, components
from .primitive import canonical_cycle, chordless_cycles


@dataclass(frozen=True)
class OrientedGraph:
    base: Graph
    direction: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.direction) != self.base.q:
            raise GraphError("orientation", "one direction per edge required")
        for (u, v), (a, b) in zip(self.base.edges, self.direction):
            if {u, v} != {a, b}:
                raise GraphError("orientation", f"({a}, {b}) does not orient edge ({u}, {v})")

    @classmethod
    def as_listed(cls, g: Graph) -> OrientedGraph:
        """Each edge directed the way it is written in the edge list."""
        return cls(g, g.edges)

    @classmethod
    def from_arcs(cls, g: Graph, arcs) -> OrientedGraph:
        """Orient ``g`` from a collection of (tail, head) pairs covering every edge once."""
        chosen: dict[int, tuple[int, int]] = {}
        for a, b in arcs:
            if not g.has_edge(a, b):
                raise GraphError("orientation", f"arc ({g.label(a)}, {g.label(b)}) is not an edge")
            k = g.edge_index[a, b]
            if k in chosen:
                raise GraphError("orientation", f"edge {k} oriented twice")
            chosen[k] = (a, b)
        if len(chosen) != g.q:
            missing = sorted(set(range(g.q)) - set(chosen))
            raise GraphError("orientation", f"edges {missing} have no orientation")
        return cls(g, tuple(chosen[k] for k in range(g.q)))

    @classmethod
    def by_labeling(cls, g: Graph, labeling) -> OrientedGraph:
        pos = {v: i for i, v in enumerate(labeling)}
        return cls(g, tuple((u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges))

    def to_json(self) -> list[list[str]]:
        return [[self.base.label(a), self.base.label(b)] for a, b in self.direction]

    @cached_property
    def arcs(self) -> dict[tuple[int, int], tuple[int, bool]]:
        """(a, b) -> (edge id, whether the edge points from a to b)."""
        out = {}
        for k, (a, b) in enumerate(self.direction):
            out[a, b] = (k, True)
            out[b, a] = (k, False)
        return out


def parse_orientation(g: Graph, text: str) -> OrientedGraph:
    lookup = {g.label(v): v for v in range(g.n)}
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError("parse", f"line {lineno}: expected 'u v'", lineno)
        try:
            arcs.append((lookup[parts[0]], lookup[parts[1]]))
        except KeyError as exc:
            raise GraphError("unknown-vertex", f"line {lineno}: unknown vertex {exc.args[0]!r}",
                             lineno) from None
    return OrientedGraph.from_arcs(g, arcs)


def incidence(d: OrientedGraph) -> np.ndarray:
    """n x q matrix; column k has -1 at the tail and +1 at the head of edge k."""
    A = np.zeros((d.base.n, d.base.q), dtype=np.int64)
    for k, (tail, head) in enumerate(d.direction):
        A[tail, k] = -1
        A[head, k] = 1
    return A


def integer_rank(M) -> int:
    """Exact rank by Gaussian elimination over the rationals."""
    rows = [[Fraction(int(x)) for x in row] for row in np.asarray(M)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class OrientedCycleBinomial:
    cycle: tuple[int, ...]
    binomial: Binomial

    @property
    def plus_edges(self) -> frozenset[int]:
        """Edges pointing along the walk."""
        return self.binomial.plus_support

    @property
    def minus_edges(self) -> frozenset[int]:
        return self.binomial.minus_support

    def to_json(self, g: Graph | None = None) -> dict:
        out = self.binomial.to_json()
        out["cycle"] = [g.label(v) if g else v for v in self.cycle]
        return out


def _check_cycle(g: Graph, cycle) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise GraphError("not-a-cycle", f"{cycle} is not a cycle")
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        if not g.has_edge(a, b):
            raise GraphError("not-a-cycle", f"{a} and {b} are not adjacent")


def _check_walk(cycle) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise GraphError("not-a-cycle", f"{cycle} is not a cycle")


def _signed_edges(d: OrientedGraph, walk) -> tuple[list[int], list[int]]:
    """Edges along a closed walk, split by agreement with the walk direction."""
    arcs = d.arcs
    fwd, back = [], []
    for a, b in zip(walk, (*walk[1:], walk[0])):
        k, ahead = arcs[a, b]
        (fwd if ahead else back).append(k)
    return fwd, back


def _walk_binomial(d: OrientedGraph, walk: tuple[int, ...]) -> OrientedCycleBinomial:
    fwd, back = _signed_edges(d, walk)
    plus = [0] * d.base.q
    minus = [0] * d.base.q
    for k in fwd:
        plus[k] = 1
    for k in back:
        minus[k] = 1
    # 0/1 sides with disjoint nonempty supports: valid by construction
    return OrientedCycleBinomial(walk, Binomial._trusted(tuple(plus), tuple(minus)))


def cycle_binomial(d: OrientedGraph, cycle) -> OrientedCycleBinomial:
    """t^{c+} - t^{c-} with the cycle walked from its minimum vertex toward
    the smaller of that vertex's two cycle neighbours."""
    cycle = tuple(cycle)
    _check_walk(cycle)
    try:
        return _walk_binomial(d, canonical_cycle(cycle))
    except KeyError as exc:
        raise GraphError("not-a-cycle", f"{exc.args[0]} is not an edge") from None


def universal_groebner_basis(d: OrientedGraph, max_edges: int | None = None,
                             max_cycles: int | None = None) -> list[OrientedCycleBinomial]:
    """One binomial per cycle of the underlying graph. Exponential in general."""
    if max_edges is not None and d.base.q > max_edges:
        raise BudgetExceeded(f"{d.base.q} edges exceeds the cap of {max_edges}")
    return _all_cycle_binomials(d, max_cycles)


_BYTE_BITS = [tuple((x >> i) & 1 for i in range(8)) for x in range(256)]


def _bit_tuple(mask: int, q: int) -> tuple[int, ...]:
    out: tuple[int, ...] = ()
    for shift in range(0, q, 8):
        out += _BYTE_BITS[(mask >> shift) & 255]
    return out[:q]


def _all_cycle_binomials(d: OrientedGraph, max_cycles: int | None) -> list[OrientedCycleBinomial]:
    """The DFS of :func:`simple_cycles`, carrying the forward and backward
    edge sets of the current path as bitmasks so each cycle is signed as
    soon as it closes."""
    g = d.base
    adj, arcs, q = g.adj, d.arcs, g.q
    out = []
    for s in range(g.n):
        higher = ~((2 << s) - 1)
        ns = adj[s]
        for u1 in bits(ns & higher):
            k, ahead = arcs[s, u1]
            stack = [(u1, (1 << s) | (1 << u1), (s, u1), (1 << k) * ahead, (1 << k) * (not ahead))]
            while stack:
                last, on_path, path, fwd, back = stack.pop()
                cand = adj[last] & higher & ~on_path
                while cand:
                    low = cand & -cand
                    cand ^= low
                    v = low.bit_length() - 1
                    k, ahead = arcs[last, v]
                    f, b = (fwd | 1 << k, back) if ahead else (fwd, back | 1 << k)
                    if ns & low and u1 < v:
                        k2, ahead2 = arcs[v, s]
                        cf, cb = (f | 1 << k2, b) if ahead2 else (f, b | 1 << k2)
                        # 0/1 sides with disjoint nonempty supports: valid by construction
                        out.append(OrientedCycleBinomial(
                            path + (v,), Binomial._trusted(_bit_tuple(cf, q), _bit_tuple(cb, q))))
                        if max_cycles is not None and len(out) > max_cycles:
                            raise BudgetExceeded(f"more than {max_cycles} cycles")
                    stack.append((v, on_path | low, path + (v,), f, b))
    return out


def toric_generators_oriented(d: OrientedGraph) -> list[OrientedCycleBinomial]:
    cycles = sorted(canonical_cycle(c) for c in chordless_cycles(d.base.n, d.base.adj))
    return [cycle_binomial(d, c) for c in cycles]


@dataclass(frozen=True)
class ChordSplit:
    cycle: tuple[int, ...]
    chord: int
    first: tuple[int, ...]
    second: tuple[int, ...]
    first_binomial: Binomial
    second_binomial: Binomial
    first_cofactor: tuple[int, ...]
    second_cofactor: tuple[int, ...]
    holds: bool


def _poly_mul(mono, b: Binomial) -> Counter:
    out = Counter()
    out[tuple(x + y for x, y in zip(mono, b.plus))] += 1
    out[tuple(x + y for x, y in zip(mono, b.minus))] -= 1
    return out


def split_on_chord(d: OrientedGraph, cycle, chord) -> ChordSplit:
    """Split ``cycle`` along ``chord`` (edge id or vertex pair) into two
    shorter cycles and check

        t_c = (t^{b+}/t_k) t_{c1} - (t^{a+}/t_k) t_{c2}

    by expanding both sides as polynomials. Both pieces are walked in the
    direction of ``cycle`` and then signed so the chord variable sits in
    the positive side.
    """
    g = d.base
    cycle = tuple(cycle)
    _check_cycle(g, cycle)
    if isinstance(chord, int):
        k = chord
        x, y = g.edges[k]
    else:
        x, y = chord
        if not g.has_edge(x, y):
            raise GraphError("not-a-chord", f"{chord} is not an edge")
        k = g.edge_index[x, y]
    r = len(cycle)
    if x not in cycle or y not in cycle:
        raise GraphError("not-a-chord", "chord ends must lie on the cycle")
    i, j = sorted((cycle.index(x), cycle.index(y)))
    if j == i + 1 or (i == 0 and j == r - 1):
        raise GraphError("not-a-chord", "edge joins consecutive cycle vertices")
    first = cycle[: i + 1] + cycle[j:]
    second = cycle[i: j + 1]
    q = g.q

    def signed(walk):
        fwd, back = _signed_edges(d, list(walk))
        b = Binomial.from_supports(q, fwd, back)
        return b if k in fwd else b.negated()

    b1, b2 = signed(first), signed(second)
    fwd, back = _signed_edges(d, list(cycle))
    target = Binomial.from_supports(q, fwd, back)
    e_k = tuple(int(t == k) for t in range(q))
    cof1 = tuple(a - e for a, e in zip(b2.plus, e_k))
    cof2 = tuple(a - e for a, e in zip(b1.plus, e_k))
    combo = _poly_mul(cof1, b1)
    combo.subtract(_poly_mul(cof2, b2))
    combo = {m: c for m, c in combo.items() if c}
    want = {target.plus: 1, target.minus: -1}
    holds = combo == want or combo == {m: -c for m, c in want.items()}
    return ChordSplit(cycle, k, canonical_cycle(first), canonical_cycle(second),
                      b1, b2, cof1, cof2, holds)


def topological_order(d: OrientedGraph) -> list[int] | None:
    """Smallest-index-first topological order, or ``None`` if there is a
    directed cycle."""
    n = d.base.n
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for a, b in d.direction:
        out[a].append(b)
        indeg[b] += 1
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order if len(order) == n else None


def directed_cycle(d: OrientedGraph) -> tuple[int, ...] | None:
    n = d.base.n
    out: list[list[int]] = [[] for _ in range(n)]
    for a, b in d.direction:
        out[a].append(b)
    state = [0] * n  # 0 new, 1 on stack, 2 done
    for root in range(n):
        if state[root]:
            continue
        path = [root]
        iters = [iter(sorted(out[root]))]
        state[root] = 1
        while iters:
            for w in iters[-1]:
                if state[w] == 1:
                    return tuple(path[path.index(w):])
                if state[w] == 0:
                    state[w] = 1
                    path.append(w)
                    iters.append(iter(sorted(out[w])))
                    break
            else:
                state[path.pop()] = 2
                iters.pop()
    return None


def is_acyclic(d: OrientedGraph) -> tuple[list[int] | None, tuple[int, ...] | None]:
    """``(order, None)`` for an acyclic orientation, else ``(None, directed cycle)``."""
    order = topological_order(d)
    if order is not None:
        return order, None
    return None, directed_cycle(d)


def grading_degrees(d: OrientedGraph, order) -> list[int]:
    """deg(t_k) = position(head) - position(tail) along a topological order."""
    pos = {v: i for i, v in enumerate(order)}
    if len(pos) != d.base.n or set(pos) != set(range(d.base.n)):
        raise GraphError("order", "order must list every vertex once")
    degs = []
    for tail, head in d.direction:
        deg = pos[head] - pos[tail]
        if deg <= 0:
            raise GraphError("order", f"arc ({tail}, {head}) goes backwards in the order")
        degs.append(deg)
    return degs


def _generated_by(subset, targets, order) -> bool:
    gb = buchberger(subset, order)
    red = gb.reducer()
    return all(red.normal_form(*_lead_first(t, order)) is None for t in targets)


def _lead_first(b: Binomial, order: MonomialOrder):
    if order.key(b.plus) > order.key(b.minus):
        return b.plus, b.minus
    return b.minus, b.plus


def binomial_ci_by_primitive_subset(d: OrientedGraph) -> bool | None:
    """Whether some q-n+r primitive-cycle binomials generate the toric ideal.

    True: such a subset exists. False: none exists and the orientation is
    acyclic, where that rules out the complete intersection property. None:
    no subset found but the orientation has a directed cycle, so the answer
    is left open.
    """
    g = d.base
    height = g.q - g.n + len(components(g))
    prims = [b.binomial for b in toric_generators_oriented(d)]
    if len(prims) == height:
        return True
    order = MonomialOrder.grevlex(g.q)
    for subset in combinations(prims, height):
        if _generated_by(list(subset), prims, order):
            return True
    return False if topological_order(d) is not None else None


def orientation_survey(g: Graph, max_edges: int = 10) -> dict:
    """Run :func:`binomial_ci_by_primitive_subset` over all 2^q orientations.

    Tiny graphs only; an experiment hook with no completeness claim.
    """
    if g.q > max_edges:
        raise BudgetExceeded(f"{g.q} edges exceeds the cap of {max_edges}")
    tally = {"ci": 0, "not_ci": 0, "undecided": 0}
    for mask in range(1 << g.q):
        arcs = tuple((v, u) if (mask >> k) & 1 else (u, v) for k, (u, v) in enumerate(g.edges))
        verdict = binomial_ci_by_primitive_subset(OrientedGraph(g, arcs))
        tally[{True: "ci", False: "not_ci", None: "undecided"}[verdict]] += 1
    tally["orientations"] = 1 << g.q
    return tally
