"""The five-alternative worked games and their known answers.

``x5`` is the running example: x1 beats x2 and x3, x3 beats x2 and x4,
x5 beats x3 and x4, and x5 is in mutual dominance with both x1 and x2.
The other games are edits of it.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import AbstractGame, FormGame, from_form, remove_mutual, reverse_cycle, to_form
from .hodge import MarginalGame
from .io import game_to_json, marginal_to_json

# x2 -> x5 -> x3 -> x2, drawn with the first edge taken from the x2/x5 mutual pair
GREEN_CYCLE = ((1, 4), (4, 2), (2, 1))


def x5() -> AbstractGame:
    return AbstractGame.from_pairs(
        5,
        [(0, 1), (0, 2), (0, 4), (4, 0), (1, 4), (4, 1), (2, 1), (2, 3), (4, 2), (4, 3)],
    )


def x5_cycle_reversed() -> AbstractGame:
    return reverse_cycle(x5(), GREEN_CYCLE)


def x5_cycle_replaced() -> AbstractGame:
    """Drop the cycle x2->x5->x3->x2 and add x2->x1->x4->x2.

    Built from the matrices rather than by set edits so the stored game is
    exactly the printed (W', R') with the stray r[2, 4] entry set to 0.
    """
    w = np.array([
        [0, 1, 1, 1, 1],
        [1, 0, 0, 1, 1],
        [1, 0, 0, 1, 0],
        [1, 1, 1, 0, 1],
        [1, 1, 0, 1, 0],
    ])
    r = np.array([
        [0, 0, -1, -1, 0],
        [0, 0, 0, 1, 1],
        [1, 0, 0, -1, 0],
        [1, -1, 1, 0, 1],
        [0, -1, 0, -1, 0],
    ])
    return from_form(FormGame(w, r))


def x5_mutual_removed() -> AbstractGame:
    return remove_mutual(remove_mutual(x5(), 0, 4), 1, 4)


def x5_marginal() -> MarginalGame:
    m = np.array([
        [0, 2, 1, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 3, 0, 5, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 2, 2, 0],
    ], dtype=float)
    return MarginalGame(to_form(x5()).w, m)


GAMES = {
    "x5.json": x5,
    "x5_cycle_reversed.json": x5_cycle_reversed,
    "x5_cycle_replaced.json": x5_cycle_replaced,
    "x5_mutual_removed.json": x5_mutual_removed,
}
MARGINAL = {"x5_marginal.json": x5_marginal}


def write_examples(out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, build in GAMES.items():
        path = out / name
        path.write_text(game_to_json(build()))
        written.append(path)
    for name, build in MARGINAL.items():
        path = out / name
        path.write_text(marginal_to_json(build()))
        written.append(path)
    return written
