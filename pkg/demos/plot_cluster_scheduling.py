"""
Scheduling platoons as jobs
===========================

The schedule-driven controller groups approaching vehicles into clusters and
searches over service orders. Here the search is checked against plain
enumeration of every interleaving.
"""

import itertools

from tscbench.baselines import Cluster, merge_arrivals, schedule_clusters, schedule_cost

###############################################################################
# Arrivals closer than the gap threshold (3 s) join the same platoon.

clusters = merge_arrivals([10.0, 11.0, 30.0], gap_threshold=3.0, headway=2.0)
for c in clusters:
    print(c)

###############################################################################
# Two approaches, each served by its own stage. North-south is green now;
# a heavy east-west platoon is already waiting.

ns = [Cluster(0.0, 4.0, 2), Cluster(12.0, 2.0, 1)]
ew = [Cluster(0.0, 10.0, 5)]
res = schedule_clusters([ns, ew], approach_stages=[0, 1], current_stage=0)
print(f"serve stage {res.stage} first, waiting {res.cost:.1f} veh*s, order {res.order}")

###############################################################################
# Enumerate every interleaving that keeps each approach's order.

best = min(
    schedule_cost(order, [ns, ew], [0, 1], 0, 5.0)
    for order in set(itertools.permutations([0, 0, 1]))
)
print(f"brute force minimum: {best:.1f} veh*s")
assert best == res.cost
