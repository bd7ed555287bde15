from ringtoric.graph import Graph
from ringtoric.oracles import all_graphs, connected_graphs_upto
from ringtoric.sweep import SweepResult, oracle_agreement, ring_agreement, run_sweep


def odd_edge_count(g: Graph) -> list[str]:
    return ["odd"] if g.q % 2 else []


def test_run_sweep_counts_failures():
    res = run_sweep(all_graphs(4), odd_edge_count)
    assert res.checked == 64
    assert res.failure_count == 32
    assert len(res.failures) == res.keep


def test_parallel_matches_serial():
    serial = run_sweep(all_graphs(5), odd_edge_count)
    parallel = run_sweep(all_graphs(5), odd_edge_count, workers=2, chunk=100)
    assert (serial.checked, serial.failure_count) == (parallel.checked, parallel.failure_count)


def test_merge_respects_keep():
    a, b = SweepResult(keep=3), SweepResult(keep=3)
    g = Graph(1, ())
    for _ in range(2):
        a.record(g, ["x"])
        b.record(g, ["y"])
    a.merge(b)
    assert a.checked == 4 and a.failure_count == 4 and len(a.failures) == 3
    assert a.to_json()["failures"] == 4


def test_agreement_checks_clean_small():
    assert run_sweep(connected_graphs_upto(5), ring_agreement).ok
    assert run_sweep(connected_graphs_upto(5), oracle_agreement).ok
