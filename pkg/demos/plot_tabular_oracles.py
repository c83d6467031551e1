"""
Learners on problems with a known answer
========================================

A five-state corridor and a 2x2 grid are small enough to solve exactly by
value iteration. Each learner should end up with a greedy policy the exact
solution agrees with.
"""

import numpy as np

from tscbench.agents import chain_mdp, gridworld_2x2, make_agent, train, value_iteration

###############################################################################
# The exact solution. In the corridor every state should step right.

mdp = chain_mdp(5)
v, q, policy = value_iteration(mdp, gamma=0.95)
print("values:", np.round(v, 3))
print("policy:", policy)

###############################################################################
# Train each agent kind and compare its greedy choice with the optimal action
# set in every non-terminal state (the grid has ties).

for make in (chain_mdp, gridworld_2x2):
    mdp = make()
    _, q, _ = value_iteration(mdp, 0.95)
    for kind in ("ddqn", "dddqn", "a2c"):
        if kind == "a2c":
            agent = make_agent(kind, mdp.obs_dim, mdp.n_actions, seed=0, rollout=8, lr=3e-3, hidden=(32, 32))
            train(mdp, agent, 300)
        else:
            agent = make_agent(kind, mdp.obs_dim, mdp.n_actions, seed=0, episodes=150, batch_size=32,
                               replay_capacity=5000, target_sync=50, hidden=(32, 32))
            train(mdp, agent, 150)
        agree = all(np.isclose(q[s, agent.greedy(o)], q[s].max())
                    for s, o in enumerate(mdp.observations()) if not mdp.terminal[s])
        print(f"{make.__name__:14s} {kind:6s} matches value iteration: {agree}")
