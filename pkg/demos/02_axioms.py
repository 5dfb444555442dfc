"""The axiomatic behaviour of HPC, checked on random games.

Neutrality, the effect of flipping one result, independence from reversing a
cycle, and sensitivity to mutual dominances.
"""

import numpy as np

from hodgepc import copeland_choice, copeland_scores, hpc, to_form
from hodgepc.core import AbstractGame, find_cycle, flip_dominance, from_form, permute, remove_mutual, reverse_cycle
from hodgepc.fixtures import x5
from hodgepc.gen import GenConfig, random_game

rng = np.random.default_rng(2024)
fg = random_game(GenConfig(12, 0.5, seed=7))
game = from_form(fg)
res = hpc(fg)
print("random game, n=12: HPC winners", res.winners, "Copeland winners", copeland_choice(fg))

# Neutrality: relabelling the alternatives relabels the winners.
p = rng.permutation(game.n)
moved = hpc(to_form(permute(game, p))).winners
print("after permutation:", moved, "expected:", tuple(sorted(int(p[x]) for x in res.winners)))

# Reversing a cycle of outright wins changes neither the gradient nor the winners.
cycle = find_cycle(game, asymmetric_only=True, seed=1)
if cycle is not None:
    rev = hpc(to_form(reverse_cycle(game, cycle)))
    print("reversed cycle", cycle.edges, "-> winners", rev.winners,
          "max gradient change", np.abs(rev.gradient.values - res.gradient.values).max())

# Flipping a loss of a winner into a win usually makes it the sole winner ...
x = res.winners[0]
y = next(v for v in range(game.n) if (v, x) in game.dominances)
print(f"flip {y}->{x}:", hpc(to_form(flip_dominance(game, y, x))).winners)

# ... but not always. A player hanging off the winner by a drawn round
# rises together with it, so the tie survives.
path = AbstractGame.from_pairs(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
print("all-draw path:", hpc(to_form(path)).winners, "-> after flip 0->1:",
      hpc(to_form(flip_dominance(path, 0, 1))).winners)

# Mutual dominances matter to HPC even though they do not move Copeland scores.
g = x5()
h = remove_mutual(remove_mutual(g, 0, 4), 1, 4)
print("with draws:   HPC", hpc(to_form(g)).winners, "Copeland", copeland_choice(to_form(g)))
print("draws removed: HPC", hpc(to_form(h)).winners, "Copeland", copeland_choice(to_form(h)))
print("Copeland scores unchanged:", np.array_equal(copeland_scores(to_form(g)), copeland_scores(to_form(h))))
