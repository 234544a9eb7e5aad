"""Walkthrough: task heights and how they generate dependency-safe orders.

The height of a task is 1 for entry tasks and 1 + the deepest parent
otherwise. Zeroing out a scheduled task and recomputing ("adjusting")
exposes the tasks that just became ready, which is how random but always
valid schedule orders are grown.
"""

import random

from dagsched import (
    DataEdge,
    TaskNode,
    adjust_heights,
    build_graph,
    compute_heights,
    is_valid_order,
    ready_tasks,
)

EDGES = [(1, 2), (1, 3), (1, 4), (3, 6), (4, 8), (2, 5), (6, 5), (8, 7), (5, 9), (7, 9), (9, 10)]
WORKS = [21, 12, 18, 12, 9, 21, 15, 24, 11, 10]

tasks = [TaskNode(f"t{i}", f"job{i}", WORKS[i - 1]) for i in range(1, 11)]
g = build_graph(tasks, [DataEdge(f"t{a}", f"t{b}", 0.0) for a, b in EDGES])

heights = compute_heights(g)
print("heights:", [heights[f"t{i}"] for i in range(1, 11)])

adjusted = adjust_heights(g, heights, "t1")
print("after scheduling t1:", [adjusted[f"t{i}"] for i in range(1, 11)])
print("now ready:", ready_tasks(g, adjusted))

# grow a full random order by repeating the pick-and-adjust step
rng = random.Random(7)
working, order = heights, []
while True:
    ready = ready_tasks(g, working)
    if not ready:
        break
    pick = rng.choice(ready)
    order.append(pick)
    working = adjust_heights(g, working, pick)

print("random order:", order)
print("valid?", is_valid_order(g, order))
