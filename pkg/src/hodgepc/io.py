"""Reading and writing games and results.

Formats
-------
game JSON
    ``{"alternatives": [...], "dominances": [[i, j], ...]}`` with dominances
    sorted lexicographically.
matrix pair (``.csv``)
    the rows of ``W``, one blank line, the rows of ``R``; integer entries
    separated by commas.
marginal JSON
    ``{"alternatives": [...], "rounds": [[i, j, margin], ...]}``; ``margin > 0``
    means ``i`` beat ``j`` by ``margin``, ``margin == 0`` is a drawn round
    (written with ``i < j``). Rounds are sorted by ``(i, j)``.
result JSON
    ``{"potential", "winners", "tenseness", "copeland", "copeland_winners"}``;
    floats rounded to 12 significant digits, winner sets as labels in
    alternative order.

Every writer emits one top-level key per line so output is diff-stable.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .core import AbstractGame, FormGame, from_form, to_form
from .errors import FormatError, InvalidGame
from .hodge import HodgeResult, MarginalGame, copeland_choice, copeland_scores


def fmt12(x: float) -> float:
    v = float(f"{float(x):.12g}")
    return v + 0.0


def dumps(obj: dict) -> str:
    lines = [f"  {json.dumps(k)}: {json.dumps(v, separators=(', ', ': '))}" for k, v in obj.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def _load_json(text: str, what: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid {what} JSON: {exc.msg}", exc.lineno) from exc
    if not isinstance(obj, dict):
        raise FormatError(f"{what} JSON must be an object", 1)
    return obj


# --- game JSON -------------------------------------------------------------

def game_to_json(game: AbstractGame) -> str:
    return dumps({
        "alternatives": list(game.alternatives),
        "dominances": [list(p) for p in game.sorted_dominances()],
    })


def game_from_json(text: str) -> AbstractGame:
    obj = _load_json(text, "game")
    try:
        alts = obj["alternatives"]
        pairs = [tuple(int(v) for v in p) for p in obj["dominances"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"game JSON needs 'alternatives' and 'dominances' pair lists ({exc})") from exc
    if any(len(p) != 2 for p in pairs):
        raise FormatError("each dominance must be a pair [i, j]")
    return AbstractGame.from_pairs(list(alts), pairs)


# --- matrix pair -----------------------------------------------------------

def form_to_csv(fg: FormGame) -> str:
    rows = [",".join(str(int(v)) for v in row) for row in fg.w]
    rows.append("")
    rows += [",".join(str(int(v)) for v in row) for row in fg.r]
    return "\n".join(rows) + "\n"


def matrices_from_csv(text: str) -> tuple[np.ndarray, np.ndarray]:
    """Parse the two integer blocks without checking the form conditions."""
    blocks: list[list[list[int]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        try:
            blocks[-1].append([int(tok) for tok in line.split(",")])
        except ValueError as exc:
            raise FormatError(f"non-integer entry in {line!r}", lineno) from exc
        if len(blocks[-1][-1]) != len(blocks[-1][0]):
            raise FormatError("ragged row", lineno)
    blocks = [b for b in blocks if b]
    if len(blocks) != 2:
        raise FormatError(f"expected two matrix blocks (W, R), found {len(blocks)}")
    w, r = (np.array(b) for b in blocks)
    n = w.shape[0]
    if w.shape != (n, n) or r.shape != (n, n):
        raise FormatError(f"W {w.shape} and R {r.shape} must both be square and equal in size")
    return w, r


def form_from_csv(text: str) -> FormGame:
    return FormGame(*matrices_from_csv(text))


# --- marginal JSON ---------------------------------------------------------

def _num(x: float):
    return int(x) if float(x).is_integer() else float(x)


def marginal_to_json(mg: MarginalGame) -> str:
    rounds = []
    iu, ju = np.nonzero(mg.w)
    for i, j in zip(iu.tolist(), ju.tolist()):
        m = mg.margins[i, j]
        if m > 0:
            rounds.append([i, j, _num(m)])
        elif i < j and mg.margins[j, i] == 0:
            rounds.append([i, j, 0])
    rounds.sort(key=lambda t: (t[0], t[1]))
    return dumps({"alternatives": list(mg.alternatives), "rounds": rounds})


def marginal_from_json(text: str) -> MarginalGame:
    obj = _load_json(text, "marginal game")
    try:
        alts = list(obj["alternatives"])
        rounds = [(int(i), int(j), float(m)) for i, j, m in obj["rounds"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"marginal JSON needs 'alternatives' and [i, j, margin] 'rounds' ({exc})") from exc
    n = len(alts)
    w = np.zeros((n, n), dtype=np.int8)
    m = np.zeros((n, n))
    for i, j, margin in rounds:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise InvalidGame(f"round {(i, j)} out of range or reflexive")
        if w[i, j]:
            raise InvalidGame(f"duplicate round between {i} and {j}")
        if not math.isfinite(margin):
            raise InvalidGame(f"non-finite margin on round {(i, j)}")
        w[i, j] = w[j, i] = 1
        m[i, j] = margin
    return MarginalGame(w, m, tuple(alts))


# --- results ---------------------------------------------------------------

def _snap(a) -> np.ndarray:
    # solver round-off around exact zeros would otherwise print as 1e-16
    a = np.asarray(a, dtype=float)
    return np.where(np.abs(a) <= 1e-12 * max(1.0, float(np.max(np.abs(a), initial=0.0))), 0.0, a)


def result_dict(fg: FormGame, result: HodgeResult | None) -> dict:
    labels = fg.alternatives
    out: dict = {}
    if result is not None:
        out["potential"] = [fmt12(v) for v in _snap(result.potential)]
        out["winners"] = [labels[k] for k in sorted(result.winners)]
        out["tenseness"] = fmt12(result.tenseness)
    out["copeland"] = [int(v) for v in copeland_scores(fg)]
    out["copeland_winners"] = [labels[k] for k in copeland_choice(fg)]
    return out


def result_to_json(fg: FormGame, result: HodgeResult | None) -> str:
    return dumps(result_dict(fg, result))


def decomposition_dict(fg: FormGame, result: HodgeResult) -> dict:
    out = result_dict(fg, result)
    out["gradient"] = [[fmt12(v) for v in row] for row in _snap(result.gradient.values)]
    out["harmonic"] = [[fmt12(v) for v in row] for row in _snap(result.harmonic.values)]
    return out


# --- files -----------------------------------------------------------------

def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc


def read_form(path: str | Path, fmt: str | None = None) -> FormGame:
    """Load a game as a :class:`FormGame`; format from ``fmt`` or the file extension."""
    fmt = fmt or Path(path).suffix.lstrip(".").lower()
    text = read_text(path)
    if fmt == "json":
        return to_form(game_from_json(text))
    if fmt == "csv":
        return form_from_csv(text)
    raise FormatError(f"unknown game format {fmt!r} (expected json or csv)")


def write_form(fg: FormGame, fmt: str = "json") -> str:
    if fmt == "json":
        return game_to_json(from_form(fg))
    if fmt == "csv":
        return form_to_csv(fg)
    raise FormatError(f"unknown game format {fmt!r} (expected json or csv)")
