"""Command-line front end; a thin client over the library.

Subcommands: dist, bound, rank, check-lemma1, check-theorem,
select-leaders, gen, experiment, serve. Results go to stdout as JSON
(CSV for experiment), diagnostics to stderr. Exit codes: 0 success,
1 domain error (disconnected input, infeasible selection, exhausted
sampling), 2 usage error (bad flags, malformed edge list).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .bounds import delta_bound, dl_vectors, report_json
from .ctrb import check_lemma1, check_theorem, ctrb_matrix, input_matrix, rank, verdict_json
from .errors import DomainError, EdgeListParseError
from .experiments import ExperimentSpec, emit_csv, rows_json, run_experiment
from .generators import GenSpec, generate, resample_until_connected
from .graph import bfs_distances, format_edge_list, laplacian, load_graph
from .select import SelectionProblem, select_leaders, selection_json

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


def _parse_leaders(text: str) -> list[int]:
    try:
        ids = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise SystemExit2(f"invalid leader list {text!r}; expected comma-separated ids")
    if not ids:
        raise SystemExit2("leader list is empty")
    return ids


class SystemExit2(Exception):
    """Usage error discovered after argparse."""


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _load(args):
    return load_graph(args.input, force_directed=getattr(args, "directed", False))


def _cmd_dist(args) -> int:
    g = _load(args)
    dist = bfs_distances(g)
    _emit({"n": g.n, "directed": g.directed, "dist": dist})
    return EXIT_OK


def _cmd_bound(args) -> int:
    g = _load(args)
    dl = dl_vectors(g, _parse_leaders(args.leaders))
    _emit(report_json(g, dl, delta_bound(dl)))
    return EXIT_OK


def _cmd_rank(args) -> int:
    g = _load(args)
    leaders = sorted(set(_parse_leaders(args.leaders)))
    gamma = ctrb_matrix(laplacian(g), input_matrix(g.n, leaders))
    rep = rank(gamma, mode=args.mode, tolerance=args.tolerance)
    out = {"n": g.n, "leaders": leaders, "rank": rep.rank, "method": rep.method}
    if rep.tolerance is not None:
        out["tolerance"] = rep.tolerance
    _emit(out)
    return EXIT_OK


def _cmd_check_lemma1(args) -> int:
    g = _load(args)
    v = check_lemma1(g, trials=args.trials, seed=args.seed)
    _emit(verdict_json(v))
    # a found counterexample is a result, not a failure of the command
    return EXIT_OK


def _cmd_check_theorem(args) -> int:
    g = _load(args)
    v = check_theorem(g, _parse_leaders(args.leaders), trials=args.trials, seed=args.seed)
    _emit(verdict_json(v))
    return EXIT_OK


def _cmd_select(args) -> int:
    g = _load(args)
    problem = SelectionProblem(g, k=args.k, mode=args.mode, budget=args.budget)
    _emit(selection_json(select_leaders(problem)))
    return EXIT_OK


def _cmd_gen(args) -> int:
    spec = GenSpec(args.family, args.n, args.param, seed=args.seed)
    if args.connected:
        g, attempts = resample_until_connected(spec, max_attempts=args.max_attempts)
        print(f"connected after {attempts} attempt(s)", file=sys.stderr)
    else:
        g = generate(spec)
    sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def _cmd_experiment(args) -> int:
    grid = None
    if args.grid:
        toks = [t for t in args.grid.split(",") if t.strip()]
        grid = tuple(int(t) if args.family in ("ba", "barabasi-albert") else float(t)
                     for t in toks)
    spec = ExperimentSpec(
        family=args.family, grid=grid or (), n=args.n, trials=args.trials,
        leaders_per_trial=args.leaders, seed=args.seed,
    )
    rows = run_experiment(spec, threads=args.threads)
    text = json.dumps(rows_json(rows), indent=2) + "\n" if args.json else emit_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("ctrlbound.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctrlbound",
        description="Distance-based controllability bounds for leader-follower networks",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("--input", required=True, help="edge-list file")
        p.add_argument("--directed", action="store_true",
                       help="read each edge line as directed regardless of header")
        return p

    p = with_input(sub.add_parser("dist", help="hop-count distance matrix"))
    p.set_defaults(func=_cmd_dist)

    p = with_input(sub.add_parser("bound", help="delta/mu/upsilon bound report"))
    p.add_argument("--leaders", required=True, help="comma-separated 1-based ids")
    p.set_defaults(func=_cmd_bound)

    p = with_input(sub.add_parser("rank", help="controllability matrix rank"))
    p.add_argument("--leaders", required=True)
    p.add_argument("--mode", choices=["auto", "exact", "numerical"], default="auto")
    p.add_argument("--tolerance", type=float, default=None,
                   help="numerical rank threshold (default n*eps*sigma_max)")
    p.set_defaults(func=_cmd_rank)

    p = with_input(sub.add_parser("check-lemma1",
                                  help="zero pattern of Laplacian powers vs distances"))
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_check_lemma1)

    p = with_input(sub.add_parser("check-theorem",
                                  help="rank >= delta over sampled weightings"))
    p.add_argument("--leaders", required=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_check_theorem)

    p = with_input(sub.add_parser("select-leaders", help="minimal leaders for delta >= k"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "greedy"], default="exhaustive")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_select)

    p = sub.add_parser("gen", help="generate a graph, edge list to stdout")
    p.add_argument("--family", required=True,
                   help="path|cycle|complete|star|erdos-renyi|barabasi-albert (er/ba ok)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--param", type=float, default=None, help="p for er, m for ba")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connected", action="store_true",
                   help="resample random families until connected")
    p.add_argument("--max-attempts", type=int, default=100)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("experiment", help="delta vs mu over a random-graph grid")
    p.add_argument("--family", required=True, help="er|ba")
    p.add_argument("--grid", default=None, help="comma list; default 0.1..0.9 / 1..10")
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--leaders", type=int, default=2, help="leaders drawn per trial")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write to file instead of stdout")
    p.add_argument("--json", action="store_true", help="JSON rows instead of CSV")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EdgeListParseError as exc:
        print(f"error: malformed edge list: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
