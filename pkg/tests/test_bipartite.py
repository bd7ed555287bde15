import numpy as np
import pytest

from conftest import complete, cycle, k23, path, two_squares
from ringtoric.binomial import Binomial, MonomialOrder, buchberger
from ringtoric.bipartite import (
    Foliation,
    build_foliation,
    even_cycle_binomial,
    height_toric,
    is_complete_intersection_bipartite,
    toric_generators_bipartite,
    unoriented_incidence,
    validate_foliation,
)
from ringtoric.graph import Graph, GraphError
from ringtoric.oracles import bipartite_connected_graphs


def test_even_cycle_binomial_c4_c6():
    assert str(even_cycle_binomial(cycle(4), (0, 1, 2, 3))) == "t1*t3 - t2*t4"
    c6 = Graph(6, tuple((i, i + 1) for i in range(5)) + ((5, 0),))
    assert str(even_cycle_binomial(c6, range(6))) == "t1*t3*t5 - t2*t4*t6"


def test_even_cycle_binomial_rejects_odd():
    with pytest.raises(GraphError):
        even_cycle_binomial(cycle(3), (0, 1, 2))


def test_generator_counts():
    assert len(toric_generators_bipartite(cycle(4))) == 1
    assert len(toric_generators_bipartite(k23())) == 3
    assert toric_generators_bipartite(path(5)) == []
    with pytest.raises(GraphError):
        toric_generators_bipartite(complete(3))


def test_generators_in_kernel():
    for n in range(2, 7):
        for g in bipartite_connected_graphs(n):
            M = unoriented_incidence(g)
            for b in toric_generators_bipartite(g):
                assert not np.any(M @ b.vector())


def test_height():
    assert height_toric(cycle(6)) == 1
    assert height_toric(complete(4)) == 2
    assert height_toric(k23()) == 2
    # two components, one bipartite and one not
    g = Graph(7, cycle(4).edges + ((4, 5), (5, 6), (6, 4)))
    assert height_toric(g) == 1 + 0


def test_is_complete_intersection():
    assert is_complete_intersection_bipartite(cycle(6))
    assert not is_complete_intersection_bipartite(k23())
    assert is_complete_intersection_bipartite(two_squares())
    with pytest.raises(GraphError):
        is_complete_intersection_bipartite(complete(3))


def test_foliation_c4():
    f = build_foliation(cycle(4))
    assert len(f.members) == 1
    assert validate_foliation(f) == (True, None)


def test_foliation_two_squares():
    g = two_squares()
    f = build_foliation(g)
    assert len(f.members) == 2
    a, b = f.members
    assert len(a.support & b.support) == 1
    assert validate_foliation(f) == (True, None)
    gb = buchberger(f.members, f.order)
    assert gb.elements == tuple(f.members)


def test_foliation_absent_or_rejected():
    assert build_foliation(k23()) is None
    with pytest.raises(GraphError) as err:
        build_foliation(path(4))
    assert err.value.kind == "precondition"


def test_validate_foliation_violations():
    q = 6
    two_overlap = Foliation((
        Binomial.from_supports(q, [0, 2], [1, 3]),
        Binomial.from_supports(q, [2, 4], [3, 5]),
    ), tuple(range(q)))
    assert validate_foliation(two_overlap) == (False, "c")
    square = Foliation((Binomial.from_supports(2, [0, 0], [1]),), (0, 1))
    assert validate_foliation(square) == (False, "a")
    mixed = Foliation((Binomial.from_supports(3, [0, 1], [1, 2]),), (0, 1, 2))
    assert validate_foliation(mixed) == (False, "b")


def test_foliation_exhaustive_small():
    for n in range(4, 7):
        for g in bipartite_connected_graphs(n):
            try:
                f = build_foliation(g)
            except GraphError:
                continue
            if f is None:
                continue
            assert validate_foliation(f) == (True, None)
            assert len(f.members) == g.q - g.n + 1
            order = MonomialOrder.lex(g.q, f.variable_order)
            assert buchberger(f.members, order).elements == f.members
