import random
from itertools import combinations

from conftest import complete, cycle, k23, path, two_squares
from ringtoric.graph import Graph
from ringtoric.oracles import all_graphs, fan, polygon_with_chords, random_connected_graph
from ringtoric.cyclespace import cycle_rank
from ringtoric.primitive import frank
from ringtoric.ring import (
    BlockCertificate,
    RingCertificate,
    certify_ring,
    certify_ring_with_status,
    induced_subgraph,
    is_ring_by_pcp_sp,
    is_ring_by_rank,
    replay_block,
    replay_certificate,
)


def test_rank_recognizer_examples():
    assert is_ring_by_rank(path(5))
    assert is_ring_by_rank(Graph(6, ((0, 1), (2, 3), (3, 4))))
    assert not is_ring_by_rank(complete(4))
    assert not is_ring_by_rank(k23())


def test_pcp_sp_recognizer_examples():
    assert is_ring_by_pcp_sp(two_squares())
    assert not is_ring_by_pcp_sp(complete(4))
    assert not is_ring_by_pcp_sp(k23())


def test_certificate_cycle():
    cert = certify_ring(cycle(6))
    (block,) = cert.blocks
    assert block.base_cycle.vertices == (0, 1, 2, 3, 4, 5)
    assert block.attachments == ()


def test_certificate_two_squares():
    g = two_squares()
    cert = certify_ring(g)
    (block,) = cert.blocks
    assert len(block.base_cycle) == 4
    assert [len(p) - 1 for p in block.attachments] == [3]
    assert replay_certificate(g, cert)


def test_certificate_absent_for_k4():
    cert, stalled = certify_ring_with_status(complete(4))
    assert cert is None and stalled


def test_forest_has_empty_certificate():
    cert = certify_ring(path(4))
    assert cert is not None and cert.blocks == ()
    assert replay_certificate(path(4), cert)


def test_certificate_json_roundtrip():
    g = two_squares()
    cert = certify_ring(g)
    again = RingCertificate.from_json(g, cert.to_json(g))
    assert again.to_json(g) == cert.to_json(g)
    assert replay_certificate(g, again)


def test_replay_rejects_bad_attachment():
    g = two_squares()
    cert = certify_ring(g)
    (block,) = cert.blocks
    bad = BlockCertificate(block.base_cycle, ((0, 1, 2),))
    try:
        replay_block(g, bad)
    except ValueError:
        pass
    else:
        raise AssertionError("replay accepted a path through built vertices")
    assert not replay_certificate(g, RingCertificate((bad,)))
    assert not replay_certificate(g, RingCertificate(()))


def test_induced_subgraph_examples():
    k4 = complete(4)
    tri = induced_subgraph(k4, [1, 2, 3])
    assert (tri.n, tri.q) == (3, 3)
    c5 = cycle(5)
    assert induced_subgraph(c5, [0, 1, 2]).q == 2
    assert induced_subgraph(c5, range(5)) == c5


def test_three_way_agreement_small_exhaustive():
    for n in range(1, 7):
        for g in all_graphs(n, connected=True):
            cert = certify_ring(g)
            by_rank = is_ring_by_rank(g)
            assert by_rank == is_ring_by_pcp_sp(g) == (cert is not None)
            if cert is not None:
                assert replay_certificate(g, cert)


def test_agreement_random_disconnected():
    rng = random.Random(2)
    for _ in range(300):
        parts = [random_connected_graph(rng, rng.randint(1, 5), rng.uniform(0.2, 0.8))
                 for _ in range(rng.randint(1, 3))]
        edges, n = [], 0
        for part in parts:
            edges += [(u + n, v + n) for u, v in part.edges]
            n += part.n
        g = Graph(n, tuple(edges))
        assert is_ring_by_rank(g) == is_ring_by_pcp_sp(g) == (certify_ring(g) is not None)
        assert is_ring_by_rank(g) == all(is_ring_by_rank(p) for p in parts)


def test_hereditary_small():
    for n in range(1, 6):
        for g in all_graphs(n, connected=True):
            if not is_ring_by_rank(g):
                continue
            for k in range(1, n + 1):
                for s in combinations(range(n), k):
                    assert is_ring_by_rank(induced_subgraph(g, s))


def test_outerplanar_families():
    for n in range(3, 12):
        g = fan(n)
        assert cycle_rank(g) == frank(g)
    rng = random.Random(9)
    for _ in range(50):
        g = polygon_with_chords(rng, rng.randint(3, 11))
        assert cycle_rank(g) == frank(g)
        assert certify_ring(g) is not None
