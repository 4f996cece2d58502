"""Command line front end.

stdout is reserved for machine-readable payloads (documents, changeset
and report JSON, DOT text); everything meant for humans goes to stderr.
Exit codes: 0 ok, 1 verification failure, 2 input error, 3 conflict.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import bench as bench_module
from . import document, engine
from . import verify as verify_module
from .bitset import BitVec
from .context import AttributeColumn
from .cxt import parse_cxt
from .errors import (DocumentError, NameCollision, NotFound, ParseError,
                     UniverseMismatch)


def _env_seed() -> int:
    raw = os.environ.get("LATFOX_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise DocumentError(f"LATFOX_SEED must be an integer, got {raw!r}")


def _size(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(\d+)x(\d+)", text)
    if not match:
        raise argparse.ArgumentTypeError("size must look like 12x10")
    return int(match.group(1)), int(match.group(2))


def _load_state(path: str) -> engine.DiagramState:
    return document.parse_document(Path(path).read_text())


def _emit_document(state, change, path: str | None) -> None:
    text = document.export_json(state, change)
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _parse_extent(arg: str, ctx) -> BitVec:
    if arg.startswith("@"):
        names = [t for t in re.split(r"[,\s]+", Path(arg[1:]).read_text())
                 if t]
    else:
        names = [t for t in arg.split(",") if t]
    return ctx.object_set(names)


def cmd_build(args) -> int:
    state = engine.build_state(parse_cxt(Path(args.cxt).read_text()))
    _emit_document(state, None, args.output)
    return 0


def cmd_insert(args) -> int:
    state = _load_state(args.document)
    extent = _parse_extent(args.extent, state.context)
    new, change = engine.insert_column(state, AttributeColumn(args.name, extent))
    _emit_document(new, change, args.output or args.document)
    json.dump(document.changeset_to_json(change), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def cmd_remove(args) -> int:
    state = _load_state(args.document)
    new, change = engine.remove_column(state, args.name)
    _emit_document(new, change, args.output or args.document)
    json.dump(document.changeset_to_json(change), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def cmd_export(args) -> int:
    state = _load_state(args.document)
    if args.format == "json":
        sys.stdout.write(document.export_json(state))
    else:
        sys.stdout.write(document.export_dot(state))
    return 0


def cmd_verify(args) -> int:
    table = None
    if args.cxt is not None:
        table = parse_cxt(Path(args.cxt).read_text())
    max_objects, max_attributes = args.max_size
    report = verify_module.run_trials(
        args.trials, seed=args.seed, max_objects=max_objects,
        max_attributes=max_attributes, table=table,
        log=lambda line: print(line, file=sys.stderr))
    json.dump(report.as_dict(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if report.ok else 1


def cmd_bench(args) -> int:
    n_objects, n_attributes = args.size
    report = bench_module.run_bench(n_objects, n_attributes, ops=args.ops,
                                    seed=args.seed, density=args.density)
    print(bench_module.format_report(report), file=sys.stderr)
    if args.json:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    uvicorn.run(create_app(snapshot_dir=args.snapshot_dir),
                host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latfox",
        description="incremental concept lattice diagrams over cross tables")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="batch-build a diagram from a CXT table")
    p.add_argument("cxt")
    p.add_argument("-o", "--output", help="target path (default: stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("insert", help="insert an attribute column")
    p.add_argument("document", help="diagram JSON path, updated in place")
    p.add_argument("name")
    p.add_argument("extent",
                   help="comma-separated object names, or @file with names")
    p.add_argument("-o", "--output", help="write here instead of in place")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("remove", help="remove an attribute column")
    p.add_argument("document", help="diagram JSON path, updated in place")
    p.add_argument("name")
    p.add_argument("-o", "--output", help="write here instead of in place")
    p.set_defaults(func=cmd_remove)

    p = sub.add_parser("export", help="re-serialize a diagram document")
    p.add_argument("document")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify",
                       help="random edits through the engine vs. the oracle")
    p.add_argument("cxt", nargs="?",
                   help="optional fixed CXT table to edit in every trial")
    p.add_argument("--trials", "--random", type=int, default=200,
                   dest="trials")
    p.add_argument("--max-size", type=_size, default=(12, 10),
                   help="largest random table, e.g. 12x10")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="incremental vs. rebuild timings")
    p.add_argument("--size", type=_size, default=(60, 40))
    p.add_argument("--ops", type=int, default=40)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--density", type=float,
                   default=bench_module.DEFAULT_DENSITY)
    p.add_argument("--json", action="store_true",
                   help="print the report as JSON on stdout")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--snapshot-dir",
                   help="dump session documents here on shutdown")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None and hasattr(args, "seed"):
        try:
            args.seed = _env_seed()
        except DocumentError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except NameCollision as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, DocumentError, NotFound, UniverseMismatch,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())
