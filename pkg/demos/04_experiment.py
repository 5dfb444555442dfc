"""A small HPC versus Copeland experiment.

For each (n, eta) cell, draw random connected games and tally how the two
winner sets relate: T (HPC coarser), E (equal), R (HPC refines), X (neither).
The full desk grid is ``hodgepc experiment --grid grid.json``.
"""

from hodgepc.experiment import Grid, run_grid, summarize

grid = Grid(n=(10, 20), eta=(0.4, 0.7, 1.0), samples=50, seed=0)
stats = run_grid(grid)
csv_text, plot_json = summarize(stats)
print(csv_text)

for s in stats:
    print(f"n={s.n:3d} eta={s.eta:.1f}  refine={s.f_r:.2f} equal={s.f_e:.2f} "
          f"|HPC|={s.mean_card_hpc:.2f} |Copeland|={s.mean_card_cp:.2f}")

# On complete games (eta = 1) the two rules always agree.
