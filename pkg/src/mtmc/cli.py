"""Command-line entry point.

Subcommands wire the pipeline together::

    mtmc synth    # generate a synthetic run log + combination specs
    mtmc criteria # run log + specs -> evaluation matrix JSON
    mtmc pareto   # list the matrix's Pareto front (table or JSON)
    mtmc select   # pick one combination for a significance vector
    mtmc sweep    # one selection per weight row of a CSV file
    mtmc serve    # HTTP API (and optional static UI) over a matrix

Diagnostics go to stderr; data goes to stdout or ``--out`` files.  Exit
codes: 0 success, 1 data/validation error, 2 usage error.  The environment
variable ``MTMC_LOG_LEVEL`` (error, warn, info, debug) controls logging.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import socket
import sys
from importlib.resources import files as resource_files
from pathlib import Path
from typing import Sequence

from . import core, synth
from .errors import MTMCError
from .evaluation import build_matrix, load_combination_specs, load_run_log
from .matrix import EvaluationMatrix

_LOG_LEVELS = {
    "error": logging.ERROR,
    "warn": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}

#: Significance-weight rows used by ``sweep`` when --phi-file is omitted:
#: the midpoint vector, every one-at-a-time deviation of a single component
#: to 0 or 1, paired deviations, and the four single-criterion vectors.
DEFAULT_PHI_FILE = resource_files("mtmc").joinpath("data/default_phi_sweep.csv")


def _configure_logging() -> None:
    name = os.environ.get("MTMC_LOG_LEVEL", "warn").lower()
    level = _LOG_LEVELS.get(name)
    if level is None:
        print(
            f"warning: MTMC_LOG_LEVEL {name!r} not in {sorted(_LOG_LEVELS)}; using 'warn'",
            file=sys.stderr,
        )
        level = logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr)


def _parse_phi(text: str) -> list[float]:
    values = []
    for i, token in enumerate(text.split(",")):
        try:
            values.append(float(token))
        except ValueError:
            raise MTMCError(f"phi component {i} ({token!r}) is not a number") from None
    return values


def _format_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for j, cell in enumerate(row):
            widths[j] = max(widths[j], len(cell))
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _selection_payload(matrix: EvaluationMatrix, result: core.SelectionResult) -> dict:
    member_ids = [matrix.combinations[i].id for i in result.front.member_indices]
    return {
        "selected_id": result.selected_id,
        "selected_index": result.selected_index,
        "hyperparameters": result.hyperparameters,
        "resolved_phi": list(result.resolved_weights),
        "projections": [
            {"combination_id": member_ids[pos], "score": score}
            for pos, score in enumerate(result.projections)
        ],
        "front_member_ids": member_ids,
    }


# -- subcommands ----------------------------------------------------------


def cmd_criteria(args: argparse.Namespace) -> int:
    records = load_run_log(args.runs)
    specs = load_combination_specs(Path(args.combos))
    matrix = build_matrix(records, specs)
    matrix.save(args.out)
    print(
        f"combinations={matrix.n_combinations} tasks={matrix.n_tasks} "
        f"criteria={matrix.n_criteria}"
    )
    return 0


def cmd_pareto(args: argparse.Namespace) -> int:
    matrix = EvaluationMatrix.load(args.matrix)
    front = core.pareto_front(matrix)
    if args.format == "json":
        members = [
            {
                "combination_id": matrix.combinations[index].id,
                "index": index,
                "hyperparameters": dict(matrix.combinations[index].hyperparameters),
                "raw": list(front.raw[pos]),
                "scaled": list(front.scaled[pos]),
            }
            for pos, index in enumerate(front.member_indices)
        ]
        print(json.dumps({"criteria_names": list(matrix.criteria_names), "members": members}))
        return 0
    hp_names = matrix.hyperparameter_names()
    headers = (
        ["id", *hp_names]
        + list(matrix.criteria_names)
        + [f"scaled_{name}" for name in matrix.criteria_names]
    )
    rows = []
    for pos, index in enumerate(front.member_indices):
        combo = matrix.combinations[index]
        rows.append(
            [combo.id]
            + [combo.hyperparameters.get(name, "") for name in hp_names]
            + [format(v, ".6g") for v in front.raw[pos]]
            + [format(v, ".6g") for v in front.scaled[pos]]
        )
    print(_format_table(headers, rows))
    print(f"{front.size} of {matrix.n_combinations} combinations are Pareto-optimal")
    return 0


def cmd_select(args: argparse.Namespace) -> int:
    matrix = EvaluationMatrix.load(args.matrix)
    result = core.select(matrix, _parse_phi(args.phi))
    if args.json:
        print(json.dumps(_selection_payload(matrix, result), indent=2))
        return 0
    print(f"selected combination: {result.selected_id} (matrix index {result.selected_index})")
    for name in sorted(result.hyperparameters):
        print(f"  {name}={result.hyperparameters[name]}")
    print("resolved phi: " + ", ".join(repr(w) for w in result.resolved_weights))
    print("projection scores over the Pareto front:")
    for pos, index in enumerate(result.front.member_indices):
        marker = "*" if index == result.selected_index else " "
        combo_id = matrix.combinations[index].id
        print(f"{marker} {combo_id}  {result.projections[pos]:.6f}")
    return 0


def _read_phi_rows(path: str | Path, n_criteria: int) -> list[list[float]]:
    from .validation import check_weights

    rows: list[list[float]] = []
    with open(path, newline="", encoding="utf-8") as handle:
        for lineno, row in enumerate(csv.reader(handle), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != n_criteria:
                raise MTMCError(
                    f"phi file line {lineno}: expected {n_criteria} components, got {len(row)}"
                )
            try:
                values = [float(cell) for cell in row]
            except ValueError as exc:
                raise MTMCError(f"phi file line {lineno}: {exc}") from None
            try:
                check_weights(values, n_criteria, name="phi")
            except MTMCError as exc:
                raise MTMCError(f"phi file line {lineno}: {exc}") from exc
            rows.append(values)
    return rows


def cmd_sweep(args: argparse.Namespace) -> int:
    matrix = EvaluationMatrix.load(args.matrix)
    phi_file = args.phi_file if args.phi_file is not None else DEFAULT_PHI_FILE
    phi_rows = _read_phi_rows(phi_file, matrix.n_criteria)
    results = core.sweep(matrix, phi_rows)
    hp_names = matrix.hyperparameter_names()
    header = [f"phi_{j}" for j in range(matrix.n_criteria)] + ["selected_id", *hp_names]
    with open(args.out, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for phi, result in results:
            writer.writerow(
                [repr(v) for v in phi]
                + [result.selected_id]
                + [result.hyperparameters.get(name, "") for name in hp_names]
            )
    print(f"wrote {len(results)} selection row(s) to {args.out}")
    return 0


def cmd_synth(args: argparse.Namespace) -> int:
    config = synth.SynthConfig(
        n_combinations=args.combinations,
        n_folds=args.folds,
        n_epochs=args.epochs,
        n_tasks=args.tasks,
        seed=args.seed,
        noise_sd=args.noise_sd,
    )
    specs, records = synth.generate(config)
    synth.write_run_log(records, args.out_runs)
    synth.write_combination_specs(specs, args.out_combos)
    print(
        f"wrote {len(records)} records to {args.out_runs} and "
        f"{len(specs)} combination specs to {args.out_combos}"
    )
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    matrix = EvaluationMatrix.load(args.matrix)
    static_dir = args.static
    if static_dir is not None and not Path(static_dir).is_dir():
        print(f"error: static directory {static_dir} does not exist", file=sys.stderr)
        return 1
    # Fail fast on an occupied port instead of letting the server loop exit.
    try:
        probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        probe.bind((args.host, args.port))
        probe.close()
    except OSError as exc:
        print(f"error: cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 1
    app = create_app(matrix, static_dir=static_dir)
    level = os.environ.get("MTMC_LOG_LEVEL", "warn").lower()
    uvicorn.run(
        app,
        host=args.host,
        port=args.port,
        log_level={"warn": "warning"}.get(level, level if level in _LOG_LEVELS else "warning"),
    )
    return 0


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtmc",
        description="Multi-task multi-criteria hyperparameter selection",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("criteria", help="build an evaluation matrix from run logs")
    p.add_argument("--runs", required=True, help="run-log CSV path")
    p.add_argument("--combos", required=True, help="combination-spec JSON path")
    p.add_argument("--out", required=True, help="output matrix JSON path")
    p.set_defaults(func=cmd_criteria)

    p = sub.add_parser("pareto", help="list the Pareto front of a matrix")
    p.add_argument("--matrix", required=True, help="matrix JSON path")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_pareto)

    p = sub.add_parser("select", help="select one combination for a phi vector")
    p.add_argument("--matrix", required=True, help="matrix JSON path")
    p.add_argument("--phi", required=True, help="comma-separated weights in [0, 1]")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("sweep", help="run select for every phi row of a CSV file")
    p.add_argument("--matrix", required=True, help="matrix JSON path")
    p.add_argument(
        "--phi-file",
        default=None,
        help="CSV with one phi per row (default: packaged sweep of 17 rows)",
    )
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("synth", help="generate a synthetic run log")
    p.add_argument("--combinations", type=int, default=100)
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--epochs", type=int, default=15)
    p.add_argument("--tasks", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--noise-sd", type=float, default=0.02)
    p.add_argument("--out-runs", required=True, help="output run-log CSV path")
    p.add_argument("--out-combos", required=True, help="output combination-spec JSON path")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("serve", help="serve a matrix over HTTP")
    p.add_argument("--matrix", required=True, help="matrix JSON path")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", default=None, help="directory of UI assets to serve at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    _configure_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MTMCError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
