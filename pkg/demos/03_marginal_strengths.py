"""Games where each win has a margin: the extended choice."""

import numpy as np

from hodgepc.fixtures import x5_marginal
from hodgepc.gen import GenConfig, random_marginal
from hodgepc.hodge import MarginalGame, divergence, ehpc

mg = x5_marginal()
labels = mg.alternatives
print("margins (row beat column by) =\n", mg.margins)

# The margin form is M^T - M; its divergence plays the role of Copeland scores.
print("net margins:", divergence(mg.margin_form()))

res = ehpc(mg)
np.set_printoptions(precision=4, suppress=True)
print("potential relative to x5:", res.potential - res.potential[4])
print("winners:", [labels[k] for k in res.winners], "tenseness:", round(res.tenseness, 4))

# Scaling every margin scales the potential and leaves the winners alone.
scaled = ehpc(MarginalGame(mg.w, 10 * mg.margins))
print("x10 margins -> potential / 10:", scaled.potential / 10, "winners:", scaled.winners)

# A random marginal game from the generator.
rg = random_marginal(GenConfig(8, 0.6, seed=3), margin_max=5.0)
print("random marginal game winners:", ehpc(rg).winners)
