import pytest

from dagsched.dag import DataEdge, TaskNode, build_graph, is_valid_order
from dagsched.evaluator import CommMode, evaluate, lower_bound
from dagsched.minmin import min_min_schedule
from dagsched.platform import LinkSpec, Machine, build_platform

from _oracles import random_graph


def platform(speeds, bandwidth=10.0):
    machines = [Machine(f"M{i}", f"Machine{i}", s) for i, s in enumerate(speeds, start=1)]
    return build_platform(machines, default_link=LinkSpec("*", "*", bandwidth=bandwidth))


def oracle_min_min(g, p, mode):
    """Independent re-statement of the greedy rule, recomputed from scratch."""
    from dagsched.platform import execution_time, transfer_time
    include = mode is CommMode.INCLUDE_TRANSFER
    done = {}
    host = {}
    avail = {m: 0.0 for m in p.machine_ids}
    committed = []
    while len(committed) < len(g):
        candidates = []
        for tid in g.task_ids:
            if tid in host or any(q not in host for q in g.parents(tid)):
                continue
            for mid in p.machine_ids:
                ready = max((done[q] + (transfer_time(p, g.edge_bytes(q, tid), host[q], mid)
                                        if include else 0.0)
                             for q in g.parents(tid)), default=0.0)
                start = max(ready, avail[mid])
                candidates.append((start + execution_time(p, g.task(tid), mid), tid, mid))
        fin = min(c[0] for c in candidates)
        # first candidate achieving the min, in task-then-machine declaration order
        _, tid, mid = next(c for c in candidates if c[0] == fin)
        done[tid] = fin
        host[tid] = mid
        avail[mid] = fin
        committed.append((tid, mid))
    return committed, max(done.values())


class TestMinMin:
    def test_single_task_picks_fastest(self):
        g = build_graph([TaskNode("a", "a", 10.0)], [])
        c, tl = min_min_schedule(g, platform([1.0, 2.0]))
        assert c.machines == ["M2"]
        assert tl.makespan == 5.0

    def test_two_equal_tasks_spread(self):
        g = build_graph([TaskNode("a", "a", 4.0), TaskNode("b", "b", 4.0)], [])
        c, tl = min_min_schedule(g, platform([1.0, 1.0]))
        assert set(c.machines) == {"M1", "M2"}
        assert tl.makespan == 4.0

    def test_diamond_matches_oracle(self):
        tasks = [TaskNode("a", "a", 6.0), TaskNode("b", "b", 4.0),
                 TaskNode("c", "c", 8.0), TaskNode("d", "d", 5.0)]
        edges = [DataEdge("a", "b", 3.0), DataEdge("a", "c", 5.0),
                 DataEdge("b", "d", 2.0), DataEdge("c", "d", 4.0)]
        g = build_graph(tasks, edges)
        p = platform([1.0, 2.5], bandwidth=2.0)
        for mode in CommMode:
            c, tl = min_min_schedule(g, p, mode)
            committed, makespan = oracle_min_min(g, p, mode)
            assert list(zip(c.order, c.machines)) == committed
            assert tl.makespan == pytest.approx(makespan, abs=1e-9)

    @pytest.mark.parametrize("seed", range(10))
    def test_random_instances_match_oracle(self, seed):
        g = random_graph(n_tasks=10, edge_prob=0.3, seed=seed + 700)
        p = platform([1.0, 1.6, 2.2], bandwidth=3.0)
        for mode in CommMode:
            c, tl = min_min_schedule(g, p, mode)
            committed, makespan = oracle_min_min(g, p, mode)
            assert list(zip(c.order, c.machines)) == committed
            assert tl.makespan == pytest.approx(makespan, abs=1e-9)

    @pytest.mark.parametrize("seed", range(10))
    def test_invariants(self, seed):
        g = random_graph(n_tasks=12, edge_prob=0.25, seed=seed + 800)
        p = platform([1.0, 2.0], bandwidth=4.0)
        c, tl = min_min_schedule(g, p)
        assert is_valid_order(g, c.order)
        assert tl.makespan >= lower_bound(g, p) - 1e-9
        # self-consistency with the evaluator
        again = evaluate(g, p, c.copy())
        assert again == tl

    def test_deterministic(self, ref_graph):
        p = platform([1.0, 1.5], bandwidth=5.0)
        c1, t1 = min_min_schedule(ref_graph, p)
        c2, t2 = min_min_schedule(ref_graph, p)
        assert c1.order == c2.order and c1.machines == c2.machines
        assert t1 == t2
