"""
A single junction under fixed-time control
==========================================

Build the two-stage crossroads, feed it a constant demand and watch queues
form on red and discharge on green.
"""

import matplotlib.pyplot as plt
import numpy as np

from tscbench.baselines import CyclicController
from tscbench.bench.demand import flat_profile
from tscbench.bench.scenarios import get_scenario
from tscbench.netsim import command_stage, exited_vehicle_log, measure_queues, new_world, spawn, step

sc = get_scenario("cross_straight")
net = sc.network
print(f"{net.num_stages} stages, monitored lanes: {net.monitored}")

###############################################################################
# Ten minutes at 400 veh/h on each entry lane. The cyclic controller gives each
# stage 30 s of green; the world is stepped at 0.5 s.

profile = flat_profile(400.0, [net.lanes[i].id for i in net.entry_lanes], 600.0)
ctl = CyclicController.from_network(net)
world = new_world(net, seed=1)

queues = []
for _ in range(1200):
    spawn(world, profile)
    command_stage(world, ctl.decide(world))
    step(world)
    queues.append(measure_queues(world))
queues = np.array(queues)

###############################################################################
# Each monitored lane's queue saw-tooths with the 70 s cycle.

t = np.arange(1, len(queues) + 1) * net.physics.dt
fig, ax = plt.subplots()
for k, lanes in enumerate(net.monitored):
    ax.plot(t, queues[:, k], label="+".join(lanes))
ax.set_xlabel("time [s]")
ax.set_ylabel("queue [m]")
ax.legend()

###############################################################################
# Every vehicle that left the network is logged with its free-flow time, which
# is what delay is measured against.

log = exited_vehicle_log(world)
extra = np.array([r.exit_time - r.entry_time - r.free_flow_time for r in log])
print(f"{len(log)} vehicles exited, mean delay {extra.mean():.1f} s, worst {extra.max():.1f} s")
print(f"conservation: spawned {world.spawned} = exited {world.exited} + in network {world.in_network}")

plt.show()
