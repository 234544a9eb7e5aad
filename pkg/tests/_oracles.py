"""Independent brute-force oracles, deliberately naive.

Nothing here shares code with the library's scheduling path: heights come
from exhaustive path enumeration, reachability from plain DFS, and optimal
makespans from enumerating every valid order and machine assignment.
"""

import itertools
import random

from dagsched.dag import DataEdge, TaskNode, build_graph
from dagsched.evaluator import CommMode
from dagsched.platform import execution_time, transfer_time


def all_paths_from_entries(g):
    """Every root-to-anywhere path, by recursive extension."""
    paths = []

    def extend(path):
        paths.append(path)
        for c in g.children(path[-1]):
            extend(path + [c])

    for e in g.entry_tasks():
        extend([e])
    return paths


def heights_by_path_enumeration(g):
    """Height = number of nodes on the longest entry-to-task path."""
    best = {}
    for path in all_paths_from_entries(g):
        tid = path[-1]
        best[tid] = max(best.get(tid, 0), len(path))
    return best


def reachable_by_dfs(g, a):
    seen = set()

    def visit(t):
        for c in g.children(t):
            if c not in seen:
                seen.add(c)
                visit(c)

    visit(a)
    return seen


def brute_force_evaluate(g, p, order, machines, include_transfer=True):
    """Makespan of one chromosome, recomputed from scratch each call."""
    finish = {}
    host = {}
    avail = {}
    for tid, mid in zip(order, machines):
        ready = 0.0
        for q in g.parents(tid):
            t = finish[q]
            if include_transfer:
                t += transfer_time(p, g.edge_bytes(q, tid), host[q], mid)
            ready = max(ready, t)
        start = max(ready, avail.get(mid, 0.0))
        finish[tid] = start + execution_time(p, g.task(tid), mid)
        host[tid] = mid
        avail[mid] = finish[tid]
    return max(finish.values())


def all_valid_orders(g):
    """Every topological order, generated recursively."""
    orders = []
    indeg = {t: len(g.parents(t)) for t in g.task_ids}

    def rec(prefix):
        ready = [t for t in g.task_ids if t not in prefix and indeg[t] == 0]
        if not ready:
            orders.append(list(prefix))
            return
        for t in ready:
            for c in g.children(t):
                indeg[c] -= 1
            prefix.append(t)
            rec(prefix)
            prefix.pop()
            for c in g.children(t):
                indeg[c] += 1

    rec([])
    return orders


def brute_force_optimum(g, p, mode=CommMode.INCLUDE_TRANSFER):
    """Minimum makespan over ALL valid orders x machine assignments."""
    include = mode is CommMode.INCLUDE_TRANSFER
    mids = p.machine_ids
    best = None
    for order in all_valid_orders(g):
        for assignment in itertools.product(mids, repeat=len(order)):
            ms = brute_force_evaluate(g, p, order, assignment, include)
            if best is None or ms < best:
                best = ms
    return best


def random_graph(n_tasks, edge_prob, seed, max_bytes=20.0):
    """Random DAG on declaration order: edges only go forward."""
    rng = random.Random(seed)
    tasks = [TaskNode(f"t{i}", f"job{i}", rng.uniform(1.0, 30.0)) for i in range(n_tasks)]
    edges = []
    for i in range(n_tasks):
        for j in range(i + 1, n_tasks):
            if rng.random() < edge_prob:
                edges.append(DataEdge(f"t{i}", f"t{j}", rng.uniform(0.0, max_bytes)))
    return build_graph(tasks, edges)
