"""``hodgepc`` command line.

Exit codes: 0 success, 1 domain error (invalid or disconnected game, solver
failure), 2 usage or I/O error (bad flags, unreadable or malformed files).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .core import completeness, connected_components, to_form, validate
from .errors import FormatError, GameError, InvalidConfig
from .experiment import Grid, run_grid, summarize
from .fixtures import write_examples
from .gen import GenConfig, random_game, random_marginal
from .hodge import ehpc, hpc
from .io import (
    dumps,
    decomposition_dict,
    game_from_json,
    marginal_from_json,
    marginal_to_json,
    matrices_from_csv,
    read_form,
    read_text,
    result_dict,
    write_form,
)
from .solver import SolverOptions

_SECTION_ALIASES = {
    "solver.method": "solver_method",
    "gen.eta": "eta",
    "gen.eta_target": "eta",
}


def _emit(text: str, out: str | None):
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise FormatError(f"cannot write {out}: {exc.strerror}") from exc
    else:
        sys.stdout.write(text)


def _solver_opts(args) -> SolverOptions:
    return SolverOptions(args.solver_method, args.tol_abs, args.tol_rel, args.max_iter_factor)


def cmd_validate(args) -> int:
    fmt = args.format or Path(args.input).suffix.lstrip(".").lower()
    if fmt == "csv":
        w, r = matrices_from_csv(read_text(args.input))
        problems = validate(w, r)
        fg = None if problems else read_form(args.input, "csv")
    elif fmt == "json":
        fg = to_form(game_from_json(read_text(args.input)))
        problems = []
    else:
        raise FormatError(f"unknown game format {fmt!r} (expected json or csv)")
    report: dict = {"valid": not problems, "violations": problems}
    if fg is not None:
        parts = connected_components(fg)
        report["n"] = fg.n
        report["completeness"] = completeness(fg) if fg.n >= 2 else None
        report["components"] = len(parts)
        report["connected"] = len(parts) == 1
    _emit(dumps(report), args.out)
    return 0 if not problems else 1


def cmd_solve(args) -> int:
    fg = read_form(args.input, args.format)
    result = None if args.copeland_only else hpc(fg, _solver_opts(args))
    _emit(dumps(result_dict(fg, result)), args.out)
    return 0


def cmd_decompose(args) -> int:
    fg = read_form(args.input, args.format)
    result = hpc(fg, _solver_opts(args))
    _emit(dumps(decomposition_dict(fg, result)), args.out)
    return 0


def cmd_ehpc(args) -> int:
    mg = marginal_from_json(read_text(args.input))
    result = ehpc(mg, _solver_opts(args))
    _emit(dumps(result_dict(mg.form_game(), result)), args.out)
    return 0


def cmd_gen(args) -> int:
    cfg = GenConfig(args.n, args.eta, args.p_mutual, args.seed, not args.allow_regular, args.max_retries)
    if args.margin_max is not None:
        _emit(marginal_to_json(random_marginal(cfg, args.margin_max)), args.out)
    else:
        _emit(write_form(random_game(cfg), args.format or "json"), args.out)
    return 0


def cmd_experiment(args) -> int:
    try:
        grid = Grid.from_json(read_text(args.grid))
    except (json.JSONDecodeError, TypeError) as exc:
        raise FormatError(f"bad grid file {args.grid}: {exc}") from exc
    if args.seed is not None:
        grid = Grid(grid.n, grid.eta, grid.samples, args.seed, grid.p_mutual, grid.max_retries)
    stats = run_grid(grid, _solver_opts(args), workers=args.workers,
                     audit_dir=args.audit_dir, timing=args.timing)
    csv_text, plot_text = summarize(stats)
    _emit(csv_text, args.out)
    if args.plot_data:
        _emit(plot_text, args.plot_data)
    return 0


def cmd_examples(args) -> int:
    try:
        paths = write_examples(args.out)
    except OSError as exc:
        raise FormatError(f"cannot write examples to {args.out}: {exc.strerror}") from exc
    for p in paths:
        print(p)
    return 0


def _add_solver_flags(p: argparse.ArgumentParser):
    g = p.add_argument_group("solver")
    g.add_argument("--solver-method", choices=["auto", "direct", "iterative"], default="auto")
    g.add_argument("--tol-abs", type=float, default=1e-10)
    g.add_argument("--tol-rel", type=float, default=1e-10)
    g.add_argument("--max-iter-factor", type=int, default=10)


def _add_common(p: argparse.ArgumentParser, fmt=True):
    p.add_argument("--config", help="key=value file; command-line flags take precedence")
    p.add_argument("--out", help="output file (default: stdout)")
    if fmt:
        p.add_argument("--format", choices=["json", "csv"], help="override extension-based detection")


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(prog="hodgepc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    subs = {}

    p = sub.add_parser("validate", help="check a game file against the form conditions")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(func=cmd_validate)
    subs["validate"] = p

    p = sub.add_parser("solve", help="HPC and Copeland winners of a game")
    p.add_argument("input")
    p.add_argument("--copeland-only", action="store_true")
    _add_common(p)
    _add_solver_flags(p)
    p.set_defaults(func=cmd_solve)
    subs["solve"] = p

    p = sub.add_parser("decompose", help="full Hodge decomposition of a game")
    p.add_argument("input")
    _add_common(p)
    _add_solver_flags(p)
    p.set_defaults(func=cmd_decompose)
    subs["decompose"] = p

    p = sub.add_parser("ehpc", help="extended HPC of a marginal-strength game (JSON)")
    p.add_argument("input")
    _add_common(p, fmt=False)
    _add_solver_flags(p)
    p.set_defaults(func=cmd_ehpc)
    subs["ehpc"] = p

    p = sub.add_parser("gen", help="generate a random connected game")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eta", type=float, default=0.5)
    p.add_argument("--p-mutual", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-retries", type=int, default=100)
    p.add_argument("--allow-regular", action="store_true")
    p.add_argument("--margin-max", type=float, help="emit a marginal game with margins in (0, M]")
    _add_common(p)
    p.set_defaults(func=cmd_gen)
    subs["gen"] = p

    p = sub.add_parser("experiment", help="run an HPC-vs-Copeland grid")
    p.add_argument("--grid", required=True)
    p.add_argument("--plot-data")
    p.add_argument("--audit-dir")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, help="override the grid file's seed")
    p.add_argument("--timing", action="store_true", help="record solve times (output no longer deterministic)")
    _add_common(p, fmt=False)
    _add_solver_flags(p)
    p.set_defaults(func=cmd_experiment)
    subs["experiment"] = p

    p = sub.add_parser("examples", help="write the worked example games")
    p.add_argument("--out", default="worked_examples")
    p.add_argument("--config")
    p.set_defaults(func=cmd_examples)
    subs["examples"] = p
    return parser, subs


def load_config(path: str, sub: argparse.ArgumentParser) -> dict:
    """Read ``key = value`` lines into argparse defaults for ``sub``."""
    actions = {a.dest: a for a in sub._actions}
    defaults = {}
    for lineno, raw in enumerate(read_text(path).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise FormatError(f"expected key=value in {path}", lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        dest = _SECTION_ALIASES.get(key, key.rsplit(".", 1)[-1]).replace("-", "_")
        action = actions.get(dest)
        if action is None or dest in ("help", "config", "func"):
            raise FormatError(f"unknown config key {key!r} in {path}", lineno)
        if isinstance(action, argparse._StoreTrueAction):
            defaults[dest] = value.lower() in ("1", "true", "yes", "on")
        else:
            try:
                defaults[dest] = action.type(value) if action.type else value
            except ValueError as exc:
                raise FormatError(f"bad value for {key!r}: {value!r}", lineno) from exc
            if action.choices and defaults[dest] not in action.choices:
                raise FormatError(f"{key} must be one of {list(action.choices)}", lineno)
    return defaults


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser, subs = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    command = next((a for a in argv if a in subs), None)
    try:
        if known.config and command:
            # config values become defaults, so flags given on the command line still win
            sub = subs[command]
            defaults = load_config(known.config, sub)
            for action in sub._actions:
                if action.dest in defaults:
                    action.required = False
            sub.set_defaults(**defaults)
        args = parser.parse_args(argv)
        return args.func(args)
    except (GameError, InvalidConfig) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

if __name__ == "__main__":
    sys.exit(main())
