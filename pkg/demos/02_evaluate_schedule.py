"""Walkthrough: simulating a schedule and reading the timeline.

A chromosome is a valid task order plus one machine per position. The
evaluator walks positions in order: a task starts once its parents' data
has arrived and its machine is free; the makespan is the last finish time.
"""

from dagsched import (
    Chromosome,
    CommMode,
    DataEdge,
    LinkSpec,
    Machine,
    TaskNode,
    build_graph,
    build_platform,
    evaluate,
    lower_bound,
)

g = build_graph(
    [TaskNode("a", "stage-in", 3.0), TaskNode("b", "compute", 8.0),
     TaskNode("c", "reduce", 4.0)],
    [DataEdge("a", "b", 10.0), DataEdge("b", "c", 6.0)],
)
p = build_platform(
    [Machine("m1", "fast", 2.0), Machine("m2", "slow", 1.0)],
    default_link=LinkSpec("*", "*", bandwidth=5.0, latency=0.1),
)

c = Chromosome(["a", "b", "c"], ["m2", "m1", "m1"])
for mode in (CommMode.INCLUDE_TRANSFER, CommMode.IGNORE_TRANSFER):
    tl = evaluate(g, p, c, mode)
    print(f"\n{mode.name}")
    for tid in c.order:
        print(f"  {g.task(tid).name:10s} on {p.machine(tl.machine[tid]).name:5s}"
              f" [{tl.start[tid]:6.2f}, {tl.finish[tid]:6.2f}]")
    print(f"  makespan {tl.makespan:.2f}  (lower bound {lower_bound(g, p):.2f})")
