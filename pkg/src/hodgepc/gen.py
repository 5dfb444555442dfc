"""Seeded random connected games.

Procedure for a game of size ``n`` and target completeness ``eta``:

1. draw a uniform random labelled spanning tree (a uniform Prüfer sequence);
2. add uniformly chosen non-tree pairs until the base space has
   ``floor(eta * n(n-1)/2 + 1/2)`` edges;
3. orient every edge independently: mutual with probability ``p_mutual``,
   otherwise each direction with probability 1/2;
4. if ``require_irregular`` and all Copeland scores are equal, redraw the
   orientations only (the base space is kept) up to ``max_retries`` times.

All randomness comes from a ``numpy.random.Generator(PCG64(seed))``.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .core import FormGame
from .errors import InvalidConfig, RetriesExhausted
from .hodge import MarginalGame


@dataclass(frozen=True)
class GenConfig:
    n: int
    eta_target: float = 0.5
    p_mutual: float = 0.2
    seed: int = 0
    require_irregular: bool = True
    max_retries: int = 100

    def __post_init__(self):
        if self.n < 2:
            raise InvalidConfig("n must be at least 2")
        if not 0.0 < self.eta_target <= 1.0:
            raise InvalidConfig("eta_target must lie in (0, 1]")
        if not 0.0 <= self.p_mutual <= 1.0:
            raise InvalidConfig("p_mutual must lie in [0, 1]")
        if self.max_retries < 0:
            raise InvalidConfig("max_retries must be non-negative")
        if self.eta_target * self.n * (self.n - 1) / 2 < (self.n - 1) - 1e-9:
            raise InvalidConfig(
                f"eta_target={self.eta_target} leaves fewer than n-1={self.n - 1} edges; "
                "no connected base space exists"
            )

    @property
    def edge_budget(self) -> int:
        pairs = self.n * (self.n - 1) // 2
        return min(pairs, max(self.n - 1, math.floor(self.eta_target * pairs + 0.5)))


def cell_seed(base_seed: int, n: int, eta: float, replicate: int) -> int:
    """Sub-seed for one replicate of one experiment cell.

    The cell coordinates are fed to ``numpy.random.SeedSequence`` as
    ``[base_seed, n, round(eta * 1e6), replicate]`` and the first 64-bit word
    of its state is the seed. Results therefore do not depend on the order in
    which cells are scheduled.
    """
    ss = np.random.SeedSequence([int(base_seed), int(n), int(round(eta * 1e6)), int(replicate)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def random_tree_edges(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Edges ``(i, j)``, ``i < j``, of a uniformly random labelled tree on ``n`` vertices."""
    if n == 2:
        return [(0, 1)]
    prufer = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in prufer:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def random_base(n: int, n_edges: int, rng: np.random.Generator) -> np.ndarray:
    w = np.zeros((n, n), dtype=np.int8)
    for i, j in random_tree_edges(n, rng):
        w[i, j] = w[j, i] = 1
    extra = n_edges - (n - 1)
    if extra > 0:
        iu, ju = np.triu_indices(n, 1)
        free = np.flatnonzero(w[iu, ju] == 0)
        pick = np.sort(rng.choice(free, size=extra, replace=False))
        w[iu[pick], ju[pick]] = 1
        w[ju[pick], iu[pick]] = 1
    return w


def random_orientation(w: np.ndarray, p_mutual: float, rng: np.random.Generator) -> np.ndarray:
    n = w.shape[0]
    iu, ju = np.nonzero(np.triu(w, 1))
    draws = rng.random((iu.size, 2))
    # r[i, j] = -1 when i beats j outright, 0 on mutual dominance
    vals = np.where(draws[:, 1] < 0.5, -1, 1).astype(np.int8)
    vals[draws[:, 0] < p_mutual] = 0
    r = np.zeros((n, n), dtype=np.int8)
    r[iu, ju] = vals
    r[ju, iu] = -vals
    return r


def _random_game(cfg: GenConfig, rng: np.random.Generator) -> FormGame:
    w = random_base(cfg.n, cfg.edge_budget, rng)
    for _ in range(cfg.max_retries + 1):
        r = random_orientation(w, cfg.p_mutual, rng)
        if not cfg.require_irregular:
            return FormGame(w, r)
        cs = -r.sum(axis=1)
        if np.any(cs != cs[0]):
            return FormGame(w, r)
    raise RetriesExhausted(
        f"no irregular orientation after {cfg.max_retries} retries (n={cfg.n}, p_mutual={cfg.p_mutual})"
    )


def random_game(cfg: GenConfig) -> FormGame:
    return _random_game(cfg, np.random.Generator(np.random.PCG64(cfg.seed)))


def random_marginal(cfg: GenConfig, margin_max: float = 1.0) -> MarginalGame:
    """A :func:`random_game` with margins uniform on ``(0, margin_max]`` for each outright win."""
    if not margin_max > 0:
        raise InvalidConfig("margin_max must be positive")
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    fg = _random_game(cfg, rng)
    n = fg.n
    winners = fg.r == -1
    draws = margin_max * (1.0 - rng.random((n, n)))
    m = np.where(winners, draws, 0.0)
    return MarginalGame(fg.w, m, fg.alternatives)

