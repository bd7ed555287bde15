import random

import numpy as np
import pytest

from conftest import complete, cycle, path, two_squares
from ringtoric.binomial import kernel_member
from ringtoric.graph import Graph, GraphError
from ringtoric.oracles import all_graphs, oracle_all_cycles, random_connected_graph, random_graph
from ringtoric.oriented import (
    OrientedGraph,
    binomial_ci_by_primitive_subset,
    cycle_binomial,
    directed_cycle,
    grading_degrees,
    incidence,
    integer_rank,
    is_acyclic,
    orientation_survey,
    parse_orientation,
    split_on_chord,
    toric_generators_oriented,
    universal_groebner_basis,
)


def random_orientation(rng, g):
    return OrientedGraph(g, tuple((v, u) if rng.random() < 0.5 else (u, v) for u, v in g.edges))


def test_incidence_single_edge():
    d = OrientedGraph.as_listed(Graph(2, ((0, 1),)))
    assert incidence(d).tolist() == [[-1], [1]]


def test_incidence_ranks():
    tri = OrientedGraph.as_listed(Graph(3, ((0, 1), (1, 2), (2, 0))))
    A = incidence(tri)
    assert A.shape == (3, 3) and integer_rank(A) == 2 == np.linalg.matrix_rank(A)
    two = OrientedGraph.as_listed(Graph(5, ((0, 1), (1, 2), (3, 4))))
    assert integer_rank(incidence(two)) == 5 - 2


def test_orientation_validation():
    g = path(3)
    with pytest.raises(GraphError):
        OrientedGraph(g, ((0, 1),))
    with pytest.raises(GraphError):
        OrientedGraph(g, ((0, 1), (0, 2)))
    with pytest.raises(GraphError):
        OrientedGraph.from_arcs(g, [(0, 1)])
    with pytest.raises(GraphError):
        OrientedGraph.from_arcs(g, [(0, 1), (1, 0), (1, 2)])


def test_parse_orientation():
    from ringtoric.graph import parse_graph

    g = parse_graph("a b\nb c\n")
    d = parse_orientation(g, "b a\nb c\n")
    assert d.direction == ((1, 0), (1, 2))
    with pytest.raises(GraphError) as err:
        parse_orientation(g, "a z\n")
    assert err.value.kind == "unknown-vertex"
    with pytest.raises(GraphError) as err:
        parse_orientation(g, "a c\nb c\n")
    assert err.value.kind == "orientation"


def test_cycle_binomial_examples():
    tri = OrientedGraph.as_listed(Graph(3, ((0, 1), (1, 2), (2, 0))))
    cb = cycle_binomial(tri, (0, 1, 2))
    assert cb.minus_edges == frozenset() or cb.plus_edges == frozenset()
    assert {str(cb.binomial), str(cb.binomial.negated())} >= {"t1*t2*t3 - 1"}
    c4 = OrientedGraph(cycle(4), ((0, 1), (2, 1), (2, 3), (0, 3)))
    b = cycle_binomial(c4, (0, 1, 2, 3)).binomial
    assert {str(b), str(b.negated())} >= {"t1*t3 - t2*t4"}


def test_cycle_binomials_in_kernel():
    rng = random.Random(1)
    for _ in range(50):
        g = random_connected_graph(rng, rng.randint(3, 7), 0.5)
        d = random_orientation(rng, g)
        A = incidence(d)
        for c in universal_groebner_basis(d):
            assert kernel_member(A, c.binomial)


def test_not_a_cycle():
    d = OrientedGraph.as_listed(path(4))
    with pytest.raises(GraphError):
        cycle_binomial(d, (0, 1, 2))


def test_universal_basis_sizes():
    assert len(universal_groebner_basis(OrientedGraph.as_listed(cycle(5)))) == 1
    assert len(universal_groebner_basis(OrientedGraph.as_listed(complete(4)))) == 7
    assert universal_groebner_basis(OrientedGraph.as_listed(path(4))) == []
    from ringtoric.binomial import BudgetExceeded

    with pytest.raises(BudgetExceeded):
        universal_groebner_basis(OrientedGraph.as_listed(complete(5)), max_edges=8)


def test_primitive_generators():
    assert len(toric_generators_oriented(OrientedGraph.as_listed(complete(4)))) == 4
    rng = random.Random(6)
    assert len(toric_generators_oriented(random_orientation(rng, cycle(6)))) == 1
    g = two_squares()
    for _ in range(10):
        assert len(toric_generators_oriented(random_orientation(rng, g))) == g.q - g.n + 1


def test_split_on_chord_examples():
    g = Graph(4, cycle(4).edges + ((0, 2),))
    rng = random.Random(0)
    for _ in range(8):
        split = split_on_chord(random_orientation(rng, g), (0, 1, 2, 3), (0, 2))
        assert split.holds
        assert sorted(map(len, (split.first, split.second))) == [3, 3]
    c6 = Graph(6, cycle(6).edges + ((0, 3),))
    split = split_on_chord(random_orientation(rng, c6), tuple(range(6)), (0, 3))
    assert split.holds and sorted(map(len, (split.first, split.second))) == [4, 4]


def test_split_on_chord_rejects_cycle_edge():
    g = Graph(4, cycle(4).edges + ((0, 2),))
    d = OrientedGraph.as_listed(g)
    with pytest.raises(GraphError) as err:
        split_on_chord(d, (0, 1, 2, 3), (0, 1))
    assert err.value.kind == "not-a-chord"


def test_acyclicity_examples():
    tri = OrientedGraph.as_listed(Graph(3, ((0, 1), (1, 2), (2, 0))))
    order, witness = is_acyclic(tri)
    assert order is None and sorted(witness) == [0, 1, 2]
    up = OrientedGraph.by_labeling(complete(5), range(5))
    assert is_acyclic(up) == ([0, 1, 2, 3, 4], None)
    edge = OrientedGraph.as_listed(Graph(2, ((1, 0),)))
    assert is_acyclic(edge)[0] == [1, 0]


def test_acyclic_iff_no_pure_power_binomial():
    for n in range(3, 6):
        for g in all_graphs(n, connected=True):
            rng = random.Random(g.q * 31 + n)
            d = random_orientation(rng, g)
            acyclic = is_acyclic(d)[0] is not None
            one_sided = any(not c.plus_edges or not c.minus_edges
                            for c in universal_groebner_basis(d))
            assert acyclic != one_sided
            assert acyclic == (directed_cycle(d) is None)


def test_grading_degrees():
    g = Graph(5, ((0, 3),))
    d = OrientedGraph.as_listed(g)
    assert grading_degrees(d, [4, 0, 1, 2, 3]) == [3]
    p = OrientedGraph.as_listed(path(5))
    assert grading_degrees(p, range(5)) == [1] * 4
    with pytest.raises(GraphError):
        grading_degrees(p, [1, 0, 2, 3, 4])


def test_cycle_binomials_homogeneous_under_grading():
    rng = random.Random(12)
    for _ in range(80):
        g = random_connected_graph(rng, rng.randint(3, 8), 0.35)
        perm = list(range(g.n))
        rng.shuffle(perm)
        d = OrientedGraph.by_labeling(g, perm)
        order, _ = is_acyclic(d)
        degs = grading_degrees(d, order)
        for c in oracle_all_cycles(g, max_cycles=2000):
            assert cycle_binomial(d, c).binomial.is_homogeneous(degs)


def test_orientation_survey_small():
    tally = orientation_survey(cycle(4))
    assert tally["orientations"] == 16 and tally["ci"] == 16
    out = orientation_survey(complete(4), max_edges=6)
    assert sum(out[k] for k in ("ci", "not_ci", "undecided")) == 64
    d = OrientedGraph.by_labeling(two_squares(), range(6))
    assert binomial_ci_by_primitive_subset(d) is True


def test_universal_basis_matches_cycle_binomials():
    rng = random.Random(21)
    graphs = [g for n in range(1, 7) for g in all_graphs(n, connected=True)]
    graphs += [random_graph(rng, rng.randint(7, 9), 0.35) for _ in range(100)]
    for g in graphs:
        d = random_orientation(rng, g)
        want = sorted((cycle_binomial(d, c) for c in oracle_all_cycles(g)), key=lambda c: c.cycle)
        got = sorted(universal_groebner_basis(d), key=lambda c: c.cycle)
        assert got == want
