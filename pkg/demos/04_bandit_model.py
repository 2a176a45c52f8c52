"""
The bandit model
================

Each coordinate is a bandit.  An arm exchanges two outputs that differ
only in that coordinate's bit, so pulling it never disturbs the other
coordinates.  The optimizer keeps pulling arms of the weakest coordinate.
"""

# %%
from sboxopt import SBox, BanditConfig, BanditModel, bandit_optimize
from sboxopt.sbox import arm_outputs

x = SBox([15, 14, 9, 2, 11, 3, 12, 4, 1, 13, 7, 8, 6, 10, 5, 0])
m = BanditModel(x)
print(m.n_bandits, "bandits with", m.n_arms, "arms each")

# %%
# Arm 010 of bandit 1 pairs the outputs 0010 and 1010.
v0, v1 = arm_outputs(4, 1, 0b010)
x0, x1 = m.arm_inputs(1, 0b010)
print(v0, v1, "found at 1-based positions", x0 + 1, x1 + 1)

# %%
# A pull is kept only if that bandit's share of E(S) falls.
print(m.nonlinearities)
for arm in range(m.n_arms):
    print(arm, m.activate(1, arm), m.nonlinearities)
m.check_coherence()

# %%
# A full run from a random 8-bit start takes well under a second.
from sboxopt.hill import random_sbox
for seed in range(1, 4):
    t = bandit_optimize(random_sbox(8, seed), BanditConfig(seed=seed))
    print(seed, t.iterations, t.final_metrics.coordinate_nls, float(t.final_metrics.acnv))
