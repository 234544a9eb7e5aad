"""Walkthrough: the genetic algorithm against the min-min baseline.

Generates a random layered instance, schedules it with both algorithms,
and prints the convergence of the GA's best makespan.
"""

from dagsched import CommMode, GaConfig, lower_bound, min_min_schedule, run
from dagsched.dagio import GenSpec, generate_platform, generate_random_dag

g, layer_of = generate_random_dag(GenSpec(n_tasks=25, width=10, ccr=0.3, seed=11))
p = generate_platform(7, seed=11)
print(f"instance: {len(g)} tasks in {max(layer_of.values()) + 1} layers, "
      f"{len(p.machines)} machines")

mm_chromo, mm_tl = min_min_schedule(g, p, CommMode.INCLUDE_TRANSFER)
print(f"min-min makespan: {mm_tl.makespan:.3f}")

cfg = GaConfig(pop_size=100, max_iters=50, rng_seed=11)
best, tl, stats = run(g, p, cfg, CommMode.INCLUDE_TRANSFER)
print(f"GA makespan:      {tl.makespan:.3f}  ({stats.iterations} iterations, "
      f"{stats.wall_time_s * 1000:.0f} ms)")
print(f"lower bound:      {lower_bound(g, p):.3f}")

print("\nbest makespan by generation:")
series = stats.best_series
for i in range(0, len(series), 10):
    print(f"  gen {i:3d}: {series[i]:.3f}")
print(f"  gen {len(series) - 1:3d}: {series[-1]:.3f}")
