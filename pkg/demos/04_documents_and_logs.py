"""Walkthrough: the JSON document formats and the schedule log.

Everything the CLI consumes and produces is shown here end to end:
DAG document in, platform document in, schedule log out.
"""

import io

from dagsched import CommMode, min_min_schedule
from dagsched.dagio import dag_to_json, parse_dag, parse_platform, write_schedule_log

DAG_DOC = """
{
  "tasks": [
    {"id": "t1", "name": "job1", "work": 21},
    {"id": "t2", "name": "job2", "work": 12},
    {"id": "t3", "name": "job3", "work": 18}
  ],
  "edges": [
    {"src": "t1", "dst": "t2", "bytes": 30},
    {"src": "t1", "dst": "t3", "bytes": 12}
  ]
}
"""

PLATFORM_DOC = """
{
  "machines": [
    {"id": "m1", "name": "Machine1", "speed": 1},
    {"id": "m2", "name": "Machine2", "speed": 1}
  ],
  "default_link": {"bandwidth": 10, "latency": 0}
}
"""

g = parse_dag(DAG_DOC)
p = parse_platform(PLATFORM_DOC)
print("parsed:", len(g), "tasks;", len(p.machines), "machines")
print("round-trips cleanly:", parse_dag(dag_to_json(g)).tasks == g.tasks)

chromo, tl = min_min_schedule(g, p, CommMode.INCLUDE_TRANSFER)
sink = io.StringIO()
write_schedule_log(g, p, tl, chromo, sink)
print("\nschedule log:")
print(sink.getvalue())
