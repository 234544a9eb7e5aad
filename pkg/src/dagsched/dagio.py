"""Document formats, schedule logging, benchmark CSV, and instance generation.

DAG and platform documents are plain JSON; the schemas capture exactly the
fields the algorithms consume. The random-DAG generator stands in for
benchmark inputs: layered graphs with a single entry and a single exit,
reproducible from a seed.
"""

from __future__ import annotations

import csv
import json
import random
import statistics
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .dag import DataEdge, TaskGraph, TaskId, TaskNode, build_graph
from .errors import DocumentSyntaxError, InfeasibleSpec, SchemaError
from .evaluator import Chromosome, Timeline
from .platform import LinkSpec, Machine, Platform, build_platform


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None


def _require(obj: dict, what: str, required: Dict[str, type], optional: Dict[str, type] = {}):
    if not isinstance(obj, dict):
        raise SchemaError(f"{what} must be an object, got {type(obj).__name__}")
    for key, typ in required.items():
        if key not in obj:
            raise SchemaError(f"{what} is missing field {key!r}")
        if not isinstance(obj[key], typ):
            raise SchemaError(f"{what} field {key!r} must be {typ}, got {type(obj[key]).__name__}")
    for key in obj:
        if key not in required and key not in optional:
            raise SchemaError(f"{what} has unexpected field {key!r}")
    for key, typ in optional.items():
        if key in obj and not isinstance(obj[key], typ):
            raise SchemaError(f"{what} field {key!r} must be {typ}")


_NUM = (int, float)


def parse_dag(text: str) -> TaskGraph:
    """Parse a DAG document (JSON text) into a validated TaskGraph."""
    doc = _loads(text)
    _require(doc, "DAG document", {"tasks": list}, {"edges": list})
    if not doc["tasks"]:
        raise SchemaError("DAG document has an empty tasks array")
    tasks = []
    for raw in doc["tasks"]:
        _require(raw, "task", {"id": str, "work": _NUM}, {"name": str})
        tasks.append(TaskNode(id=raw["id"], name=raw.get("name", raw["id"]), work=float(raw["work"])))
    edges = []
    for raw in doc.get("edges", []):
        _require(raw, "edge", {"src": str, "dst": str}, {"bytes": _NUM})
        edges.append(DataEdge(src=raw["src"], dst=raw["dst"], bytes=float(raw.get("bytes", 0.0))))
    return build_graph(tasks, edges)


def dag_to_json(g: TaskGraph) -> str:
    doc = {
        "tasks": [{"id": t.id, "name": t.name, "work": t.work} for t in g.tasks],
        "edges": [{"src": e.src, "dst": e.dst, "bytes": e.bytes} for e in g.edges],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_platform(text: str) -> Platform:
    """Parse a platform document (JSON text) into a validated Platform."""
    doc = _loads(text)
    _require(doc, "platform document", {"machines": list},
             {"default_link": dict, "links": list, "etc": dict})
    if not doc["machines"]:
        raise SchemaError("platform document has an empty machines array")
    machines = []
    for raw in doc["machines"]:
        _require(raw, "machine", {"id": str, "speed": _NUM}, {"name": str})
        machines.append(Machine(id=raw["id"], name=raw.get("name", raw["id"]), speed=float(raw["speed"])))
    links = []
    for raw in doc.get("links", []):
        _require(raw, "link", {"src": str, "dst": str, "bandwidth": _NUM}, {"latency": _NUM})
        links.append(LinkSpec(src=raw["src"], dst=raw["dst"],
                              bandwidth=float(raw["bandwidth"]), latency=float(raw.get("latency", 0.0))))
    default = None
    if "default_link" in doc:
        raw = doc["default_link"]
        _require(raw, "default_link", {"bandwidth": _NUM}, {"latency": _NUM})
        default = LinkSpec(src="*", dst="*", bandwidth=float(raw["bandwidth"]),
                           latency=float(raw.get("latency", 0.0)))
    etc = doc.get("etc")
    if etc is not None:
        for tid, row in etc.items():
            if not isinstance(row, dict) or not all(isinstance(v, _NUM) for v in row.values()):
                raise SchemaError(f"etc row for task {tid!r} must map machine ids to numbers")
    return build_platform(machines, links, default, etc)


def platform_to_json(p: Platform) -> str:
    doc: dict = {
        "machines": [{"id": m.id, "name": m.name, "speed": m.speed} for m in p.machines],
    }
    if p.default_link is not None:
        doc["default_link"] = {"bandwidth": p.default_link.bandwidth, "latency": p.default_link.latency}
    if p.links:
        doc["links"] = [{"src": ln.src, "dst": ln.dst, "bandwidth": ln.bandwidth, "latency": ln.latency}
                        for ln in p.links.values()]
    if p.etc_override is not None:
        doc["etc"] = p.etc_override
    return json.dumps(doc, indent=2) + "\n"


def write_schedule_log(g: TaskGraph, p: Platform, timeline: Timeline,
                       chromosome: Chromosome, sink) -> None:
    """One `Schedule <task> on <machine>` line per task, by ascending start time.

    Start-time ties fall back to chromosome position. The final line reports
    the makespan with exactly six decimals.
    """
    pos = {tid: i for i, tid in enumerate(chromosome.order)}
    for tid in sorted(timeline.start, key=lambda t: (timeline.start[t], pos[t])):
        task_name = g.task(tid).name
        machine_name = p.machine(timeline.machine[tid]).name
        sink.write(f"Schedule {task_name} on {machine_name}\n")
    sink.write(f"Simulation Time: {timeline.makespan:.6f}\n")


BENCH_CSV_HEADER = ("instance", "n_tasks", "n_machines", "width", "ccr", "comm_mode",
                    "seed", "ga_makespan", "minmin_makespan", "lower_bound", "ga_runtime_ms")


def write_bench_csv(rows, sink) -> None:
    """Benchmark results as CSV; makespan-like columns carry six decimals."""
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(BENCH_CSV_HEADER)
    for r in rows:
        w.writerow([
            r.instance, r.n_tasks, r.n_machines, r.width, r.ccr, r.comm_mode,
            r.seed, f"{r.ga_makespan:.6f}", f"{r.minmin_makespan:.6f}",
            f"{r.lower_bound:.6f}", f"{r.ga_runtime_ms:.1f}",
        ])


@dataclass(frozen=True)
class GenSpec:
    n_tasks: int
    width: int
    ccr: float = 0.0
    work_range: Tuple[float, float] = (10.0, 30.0)
    seed: int = 0

    def validate(self) -> None:
        lo, hi = self.work_range
        if self.n_tasks < 1 or self.width < 1 or self.ccr < 0 or not (0 < lo <= hi):
            raise InfeasibleSpec(f"invalid generator spec: {self}")


def generate_random_dag(spec: GenSpec, ref_bandwidth: float = 1.0) -> Tuple[TaskGraph, Dict[TaskId, int]]:
    """Seeded layered DAG with one entry and one exit.

    Middle layers have at most `width` tasks; each middle task draws 1..3
    parents from the previous layer. Edge byte volumes are scaled so the mean
    transfer time at `ref_bandwidth` over the mean execution time is about
    the requested communication-to-computation ratio.
    """
    spec.validate()
    rng = random.Random(spec.seed)
    n = spec.n_tasks
    ids = [f"t{i}" for i in range(1, n + 1)]
    works = [rng.uniform(*spec.work_range) for _ in range(n)]
    tasks = [TaskNode(id=ids[i], name=f"job{i + 1}", work=works[i]) for i in range(n)]

    layers: List[List[str]] = [[ids[0]]]
    if n >= 2:
        middle = ids[1:-1]
        at = 0
        while at < len(middle):
            size = min(len(middle) - at, rng.randint(1, spec.width))
            layers.append(middle[at:at + size])
            at += size
        layers.append([ids[-1]])

    edge_pairs: List[Tuple[str, str]] = []
    has_child = set()
    for k in range(1, len(layers) - 1):
        prev = layers[k - 1]
        for tid in layers[k]:
            n_parents = min(len(prev), rng.randint(1, 3))
            for parent in sorted(rng.sample(prev, n_parents), key=prev.index):
                edge_pairs.append((parent, tid))
                has_child.add(parent)
    if n >= 2:
        # the single exit collects every task left childless
        exit_id = ids[-1]
        for tid in ids[:-1]:
            if tid not in has_child:
                edge_pairs.append((tid, exit_id))

    if spec.ccr == 0 or not edge_pairs:
        volumes = [0.0] * len(edge_pairs)
    else:
        mean_bytes = spec.ccr * statistics.fmean(works) * ref_bandwidth
        volumes = [rng.uniform(0.0, 2.0 * mean_bytes) for _ in edge_pairs]
    edges = [DataEdge(src=a, dst=b, bytes=v) for (a, b), v in zip(edge_pairs, volumes)]

    g = build_graph(tasks, edges)
    layer_of = {tid: k for k, layer in enumerate(layers) for tid in layer}
    return g, layer_of


def generate_platform(n_machines: int, seed: int = 0, bandwidth: float = 1.0,
                      speed_range: Tuple[float, float] = (1.0, 1.0)) -> Platform:
    """Seeded benchmark platform with a uniform default link.

    Speeds default to 1 (the per-task execution-time table's convention);
    widen speed_range for heterogeneous-speed experiments.
    """
    if n_machines < 1:
        raise ValueError("n_machines must be >= 1")
    rng = random.Random(seed)
    machines = [Machine(id=f"m{i}", name=f"Machine{i}", speed=rng.uniform(*speed_range))
                for i in range(1, n_machines + 1)]
    default = LinkSpec(src="*", dst="*", bandwidth=bandwidth, latency=0.0)
    return build_platform(machines, default_link=default)
