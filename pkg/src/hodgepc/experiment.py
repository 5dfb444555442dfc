"""Grid experiments comparing HPC and Copeland winner sets.

Each cell ``(n, eta)`` draws ``samples`` games with :func:`hodgepc.gen.random_game`,
seeded per replicate by :func:`hodgepc.gen.cell_seed`, and tallies how the two
winner sets relate:

``T``  Copeland winners are a strict subset of HPC winners (HPC is coarser)
``E``  the sets are equal
``R``  HPC winners are a strict subset of Copeland winners (HPC refines)
``X``  neither contains the other
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .core import AbstractGame, FormGame, from_form, to_form
from .errors import EmptySet, GameError, InvalidConfig
from .gen import GenConfig, cell_seed, random_game
from .hodge import copeland_choice, hpc
from .solver import SolverOptions

RELATIONS = ("T", "E", "R", "X")
CSV_COLUMNS = (
    "n", "eta", "samples", "f_t", "f_e", "f_r", "f_x",
    "mean_card_hpc", "mean_card_cp", "mean_tenseness", "mean_solve_ms", "failed",
)


def classify(cp: Iterable[int], hp: Iterable[int]) -> str:
    cp, hp = set(cp), set(hp)
    if not cp or not hp:
        raise EmptySet("winner sets must be nonempty")
    if cp == hp:
        return "E"
    if cp < hp:
        return "T"
    if hp < cp:
        return "R"
    return "X"


@dataclass(frozen=True)
class Grid:
    n: tuple[int, ...]
    eta: tuple[float, ...]
    samples: int = 200
    seed: int = 0
    p_mutual: float = 0.2
    max_retries: int = 100

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(v) for v in self.n))
        object.__setattr__(self, "eta", tuple(float(v) for v in self.eta))
        if not self.n or not self.eta:
            raise InvalidConfig("grid needs at least one n and one eta")
        if self.samples < 1:
            raise InvalidConfig("samples must be at least 1")

    @classmethod
    def from_json(cls, text: str) -> "Grid":
        obj = json.loads(text)
        unknown = set(obj) - {"n", "eta", "samples", "seed", "p_mutual", "max_retries"}
        if unknown:
            raise InvalidConfig(f"unknown grid keys: {sorted(unknown)}")
        return cls(**obj)


@dataclass(frozen=True)
class CellStats:
    n: int
    eta: float
    samples: int
    f_t: float
    f_e: float
    f_r: float
    f_x: float
    mean_card_hpc: float
    mean_card_cp: float
    mean_tenseness: float
    mean_solve_ms: float
    failed: int = 0
    counts: dict = field(default_factory=dict, compare=False)

    def row(self) -> list[str]:
        return [_fmt(getattr(self, c)) for c in CSV_COLUMNS]


def _fmt(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v):.12g}"


def play_one(n: int, eta: float, replicate: int, grid: Grid, opts: SolverOptions | None = None,
             timing: bool = False) -> dict:
    """Generate and solve one game; returns its audit record."""
    seed = cell_seed(grid.seed, n, eta, replicate)
    rec = {"n": n, "eta": eta, "replicate": replicate, "seed": seed}
    try:
        cfg = GenConfig(n, eta, grid.p_mutual, seed, True, grid.max_retries)
        fg = random_game(cfg)
        cp = copeland_choice(fg)
        t0 = time.perf_counter()
        res = hpc(fg, opts)
        elapsed = (time.perf_counter() - t0) * 1e3
    except GameError as exc:
        rec["failed"] = f"{type(exc).__name__}: {exc}"
        return rec
    rec.update(
        dominances=[list(p) for p in from_form(fg).sorted_dominances()],
        copeland_winners=list(cp),
        hpc_winners=list(res.winners),
        relation=classify(cp, res.winners),
        tenseness=res.tenseness,
    )
    if timing:
        rec["solve_ms"] = elapsed
    return rec


def _cell_task(args) -> tuple[CellStats, list[dict]]:
    n, eta, grid, opts, timing = args
    records = [play_one(n, eta, k, grid, opts, timing) for k in range(grid.samples)]
    return cell_stats(n, eta, grid.samples, records), records


def cell_stats(n: int, eta: float, samples: int, records: Sequence[dict]) -> CellStats:
    ok = [r for r in records if "failed" not in r]
    failed = len(records) - len(ok)
    counts = {k: sum(r["relation"] == k for r in ok) for k in RELATIONS}
    m = len(ok)

    def mean(vals):
        vals = list(vals)
        return float(np.mean(vals)) if vals else math.nan

    freqs = {k: (counts[k] / m if m else math.nan) for k in RELATIONS}
    return CellStats(
        n=n,
        eta=eta,
        samples=samples,
        f_t=freqs["T"],
        f_e=freqs["E"],
        f_r=freqs["R"],
        f_x=freqs["X"],
        mean_card_hpc=mean(len(r["hpc_winners"]) for r in ok),
        mean_card_cp=mean(len(r["copeland_winners"]) for r in ok),
        mean_tenseness=mean(r["tenseness"] for r in ok),
        mean_solve_ms=mean(r["solve_ms"] for r in ok) if ok and "solve_ms" in ok[0] else math.nan,
        failed=failed,
        counts=counts,
    )


def _audit_name(n: int, eta: float) -> str:
    return f"cell_n{n}_eta{eta:g}.jsonl"


def run_grid(grid: Grid, opts: SolverOptions | None = None, workers: int = 1,
             audit_dir: str | Path | None = None, timing: bool = False) -> list[CellStats]:
    """Run every ``(n, eta)`` cell; output order is ``n``-major, then ``eta``.

    ``timing`` records per-solve wall time in ``mean_solve_ms``; it is off by
    default because it makes the CSV nondeterministic.
    """
    tasks = [(n, eta, grid, opts, timing) for n in grid.n for eta in grid.eta]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_cell_task, tasks))
    else:
        results = [_cell_task(t) for t in tasks]
    if audit_dir is not None:
        audit = Path(audit_dir)
        audit.mkdir(parents=True, exist_ok=True)
        for stats, records in results:
            with open(audit / _audit_name(stats.n, stats.eta), "w") as fh:
                for rec in records:
                    fh.write(json.dumps(rec, sort_keys=True) + "\n")
    return [stats for stats, _ in results]


def replay_audit(path: str | Path, opts: SolverOptions | None = None) -> list[int]:
    """Re-solve every game in an audit file; return replicates whose winners differ."""
    bad = []
    for line in Path(path).read_text().splitlines():
        rec = json.loads(line)
        if "failed" in rec:
            continue
        game = AbstractGame.from_pairs(rec["n"], [tuple(p) for p in rec["dominances"]])
        fg: FormGame = to_form(game)
        if (list(copeland_choice(fg)) != rec["copeland_winners"]
                or list(hpc(fg, opts).winners) != rec["hpc_winners"]):
            bad.append(rec["replicate"])
    return bad


def to_csv(stats: Sequence[CellStats]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for s in stats:
        writer.writerow(s.row())
    return buf.getvalue()


_SERIES = ("f_t", "f_e", "f_r", "f_x", "mean_card_hpc", "mean_card_cp", "mean_tenseness")


def plot_data(stats: Sequence[CellStats]) -> dict:
    """Conditional averages along ``n`` (over eta) and along ``eta`` (over n)."""
    def along(key):
        xs = sorted({getattr(s, key) for s in stats})
        series = {key: xs}
        for name in _SERIES:
            series[name] = [
                float(np.nanmean([getattr(s, name) for s in stats if getattr(s, key) == x]))
                for x in xs
            ]
        return series

    return {"along_size": along("n"), "along_completeness": along("eta")}


def summarize(stats: Sequence[CellStats]) -> tuple[str, str]:
    """CSV text and plot-data JSON text for a finished grid."""
    if not stats:
        raise InvalidConfig("nothing to summarize")
    return to_csv(stats), json.dumps(plot_data(stats), indent=2) + "\n"
