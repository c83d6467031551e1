"""
Trained agents against the actuated controller
==============================================

Load the checkpoints shipped in ``checkpoints/`` and run them through the same
two-peak hour as the actuated controller. The agents were trained under flat
demand only, so this is also a check that they cope with the peaks.
"""

from pathlib import Path

import matplotlib.pyplot as plt
import numpy as np

from tscbench.agents import AgentController, load_checkpoint
from tscbench.baselines import ActuatedController
from tscbench.bench.demand import standard_profile
from tscbench.bench.runner import run_episode
from tscbench.bench.seeds import EVAL_MASTER, SeedLedger
from tscbench.bench.scenarios import get_scenario

root = Path(__file__).resolve().parent.parent / "checkpoints"
seed = SeedLedger(EVAL_MASTER).seed(0)

###############################################################################
# A checkpoint carries the observation settings it was trained with, so the
# controller rebuilds exactly the inputs the network expects.

agent = load_checkpoint(root / "cross_straight" / "dddqn")
print(type(agent).__name__, "selected at episode", agent.metadata.get("selected_at_episode"))
print("env settings:", agent.metadata["env"])

###############################################################################
# Cumulative delay on one seed for the single-lane crossroads and the
# eight-stage junction.

fig, axes = plt.subplots(1, 2, figsize=(10, 4))
for ax, (sid, kinds) in zip(axes, [("cross_straight", ("ddqn", "dddqn", "a2c")), ("cross_triple_8", ("dddqn",))]):
    sc = get_scenario(sid)
    profile = standard_profile(sid)
    runs = {"actuated": ActuatedController.from_network(sc.network)}
    runs.update({k: AgentController(load_checkpoint(root / sid / k)) for k in kinds})
    for name, ctl in runs.items():
        rec = run_episode(sc, ctl, profile, seed)
        t = np.arange(1, len(rec.delay_trace) + 1) * sc.network.physics.dt
        ax.plot(t, rec.delay_trace, label=f"{name} ({rec.delay:.0f} s)")
        print(f"{sid:15s} {name:9s} {rec.delay:9.0f} s")
    ax.set_title(sid)
    ax.set_xlabel("time [s]")
    ax.legend()
axes[0].set_ylabel("cumulative delay [s]")
plt.show()
