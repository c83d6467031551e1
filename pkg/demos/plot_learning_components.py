"""
Replay memory, dueling heads and gradient checks
================================================

The pieces the value-based agents are built from, each checked against an
independent computation.
"""

import numpy as np

from tscbench.agents import SumTree, per_sample, td_target_double, td_target_dqn
from tscbench.neuralnet import DuelingQNetwork, dueling_combine

rng = np.random.default_rng(0)

###############################################################################
# A sum tree with priorities 3 and 1 returns the first leaf three times as
# often as the second.

tree = SumTree(2)
tree.add(3.0)
tree.add(1.0)
counts = np.zeros(2)
for _ in range(1000):
    leaves, weights = per_sample(tree, 100, beta=0.4, rng=rng)
    counts += np.bincount(leaves, minlength=2)
print("sampling frequencies:", counts / counts.sum())

###############################################################################
# The dueling head subtracts the mean advantage, so adding a constant to all
# advantages leaves Q unchanged.

v, a = 1.5, rng.normal(size=4)
print(dueling_combine(v, a))
print(dueling_combine(v, a + 100.0))

###############################################################################
# With identical online and target weights, the double-Q target reduces to the
# ordinary one.

net = DuelingQNetwork(5, 2, rng=rng)
s_next = rng.normal(size=(8, 5))
r = -rng.exponential(size=8)
done = np.zeros(8, dtype=bool)
print(np.max(np.abs(td_target_dqn(r, s_next, done, net, 0.95)
                    - td_target_double(r, s_next, done, net, net, 0.95))))

###############################################################################
# Backpropagation against central differences on one weight.

x = rng.normal(size=(3, 5))
upstream = rng.normal(size=(3, 2))
net.forward(x)
net.backward(upstream)
grad = net.grads()[0][0, 0]
w = net.params()[0]
h = 1e-5
w[0, 0] += h
up = (net.forward(x) * upstream).sum()
w[0, 0] -= 2 * h
down = (net.forward(x) * upstream).sum()
w[0, 0] += h
print(f"analytic {grad:.8f}  finite difference {(up - down) / (2 * h):.8f}")
