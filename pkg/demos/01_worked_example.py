"""Five players, ten dominances: Copeland ties, the Hodge potential does not.

Run with ``python demos/01_worked_example.py``.
"""

import numpy as np

from hodgepc import copeland_choice, copeland_scores, hpc, to_form
from hodgepc.core import completeness
from hodgepc.fixtures import x5

game = x5()
fg = to_form(game)
labels = fg.alternatives

print("dominances:", [(labels[i], labels[j]) for i, j in game.sorted_dominances()])
print("completeness:", completeness(fg))

# The game as matrices. w is the base space (who met whom),
# r[i, j] = -1 when i beat j outright and 0 on a mutual dominance.
print("w =\n", fg.w)
print("r =\n", fg.r)

# Copeland scores are net wins, i.e. the divergence of r.
cs = copeland_scores(fg)
print("copeland scores:", cs.astype(int), "winners:", [labels[k] for k in copeland_choice(fg)])

# HPC fits r by a gradient d(P) in the least-squares sense.
res = hpc(fg)
np.set_printoptions(precision=4, suppress=True)
print("potential (mean zero):", res.potential)
print("relative to x3:", res.potential - res.potential[2])
print("HPC winners:", [labels[k] for k in res.winners])

# What the gradient cannot explain is the harmonic part: pure circulation.
print("harmonic part =\n", res.harmonic.values)
print("tenseness (harmonic share of the energy):", res.tenseness, "= 4/15 ->", 4 / 15)

# x1 and x5 both have net score 2, but x1's wins come over stronger opponents.
