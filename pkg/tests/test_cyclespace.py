import random

import pytest

from conftest import complete, cycle, k23, path
from ringtoric.cyclespace import (
    ChainVector,
    boundary,
    check_spanning_forest,
    cycle_rank,
    fundamental_basis,
    gf2_rank,
    gf2_rank_masks,
    kernel_dimension,
)
from ringtoric.graph import Graph, GraphError, spanning_forest
from ringtoric.oracles import all_graphs, oracle_cycle_rank, random_graph
from ringtoric.primitive import cycle_edge_ids


def test_boundary_of_triangle_is_zero():
    tri = cycle(3)
    assert boundary(tri, ChainVector.from_edges(3, range(3))) == [0, 0, 0]


def test_boundary_of_single_edge():
    g = path(3)
    assert boundary(g, ChainVector.from_edges(2, [1])) == [0, 1, 1]


def test_two_disjoint_triangles_sum_to_zero_boundary():
    g = Graph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)))
    a = ChainVector.from_edges(6, [0, 1, 2])
    b = ChainVector.from_edges(6, [3, 4, 5])
    assert boundary(g, a + b) == [0] * 6


def test_boundary_length_mismatch():
    with pytest.raises(ValueError):
        boundary(cycle(3), ChainVector.from_edges(4, [0]))


def test_chain_vector_basics():
    v = ChainVector.from_edges(5, [0, 3])
    assert v.support == [0, 3] and v.weight == 2
    assert v.to_list() == [1, 0, 0, 1, 0]
    assert (v ^ v).weight == 0
    with pytest.raises(ValueError):
        ChainVector(1 << 5, 5)


def test_cycle_rank_examples():
    assert cycle_rank(path(6)) == 0
    assert cycle_rank(Graph(5, ((0, 1), (2, 3)))) == 0
    assert cycle_rank(complete(4)) == 3
    assert cycle_rank(k23()) == 2


def test_cycle_rank_matches_even_subgraph_count():
    rng = random.Random(5)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 7), rng.uniform(0.2, 0.7))
        if g.q > 14:
            continue
        assert cycle_rank(g) == oracle_cycle_rank(g) == kernel_dimension(g)


def test_fundamental_basis_c5():
    g = cycle(5)
    basis = fundamental_basis(g, [0, 1, 2, 3])
    assert len(basis.vectors) == 1
    assert basis.vectors[0].to_list() == [1] * 5


def test_fundamental_basis_k4_star():
    g = complete(4)
    star = [g.edge_index[0, v] for v in (1, 2, 3)]
    basis = fundamental_basis(g, star)
    assert len(basis.vectors) == 3
    for vec, witness in zip(basis.vectors, basis.witness_cycles):
        assert vec.weight == 3 and 0 in witness
        assert not any(boundary(g, vec))
        assert vec.bits == sum(1 << k for k in cycle_edge_ids(g, list(witness)))
    assert gf2_rank(basis.vectors) == 3


def test_fundamental_basis_of_forest_is_empty():
    g = path(4)
    assert fundamental_basis(g, range(3)).vectors == ()


def test_spanning_forest_validation():
    g = cycle(4)
    with pytest.raises(GraphError) as err:
        fundamental_basis(g, [0, 1, 2, 3])
    assert err.value.kind == "not-forest"
    with pytest.raises(GraphError) as err:
        check_spanning_forest(g, [0, 1])
    assert err.value.kind == "not-spanning"


def test_gf2_rank_examples():
    assert gf2_rank_masks([]) == 0
    assert gf2_rank_masks([0b101, 0b101]) == 1
    k4 = complete(4)
    triangles = [cycle_edge_ids(k4, t) for t in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))]
    assert gf2_rank(ChainVector.from_edges(6, t) for t in triangles) == 3


def test_fundamental_basis_exhaustive_small():
    for n in range(1, 7):
        for g in all_graphs(n, connected=True):
            basis = fundamental_basis(g, spanning_forest(g))
            assert gf2_rank(basis.vectors) == len(basis.vectors) == cycle_rank(g)
            assert all(not any(boundary(g, v)) for v in basis.vectors)
