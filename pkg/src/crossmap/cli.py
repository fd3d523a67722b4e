"""Command line entry points: serve, validate, bench, export."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .bench import run_bench
from .ingest import build_app, load_config, load_dataset, validate_config


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import service_from_configs

    port = args.port if args.port is not None else int(os.environ.get("PORT", 8000))
    service = service_from_configs(args.config, session_ttl=args.session_ttl,
                                   static_dir=args.static)
    uvicorn.run(service, host=args.host, port=port)
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    failed = False
    for path in args.config:
        config = load_config(path)
        dataset = load_dataset(config) if Path(config.base_dir, config.dataset.path).exists() else None
        diagnostics = validate_config(config, dataset)
        for d in diagnostics:
            print(f"{path}: {d.severity}: {d.rule}: {d.message} [{d.location}]")
        if any(d.severity == "error" for d in diagnostics):
            failed = True
        if not diagnostics:
            print(f"{path}: ok")
    return 1 if failed else 0


def _cmd_bench(args: argparse.Namespace) -> int:
    result = run_bench(records=args.records, dims=args.dims, iters=args.iters)
    print(f"records={result.records} dims={result.dims} iters={result.iters}")
    print(f"build: {result.build_s:.2f}s")
    print(f"median: {result.median_ms:.2f}ms")
    print(f"p95: {result.p95_ms:.2f}ms")
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    app = build_app(load_config(args.config))
    payload = app.engine.export_records()
    if args.out == "-":
        sys.stdout.buffer.write(payload)
    else:
        Path(args.out).write_bytes(payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crossmap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="serve one or more app configs over HTTP")
    p.add_argument("--config", action="append", required=True,
                   help="app config file (repeatable)")
    p.add_argument("--port", type=int, default=None,
                   help="overrides the PORT env var (default 8000)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--session-ttl", type=float, default=1800.0)
    p.add_argument("--static", default=None, help="UI bundle directory to serve at /")
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("validate", help="lint app configs; exit 0 iff no errors")
    p.add_argument("--config", action="append", required=True)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("bench", help="measure per-mutation latency")
    p.add_argument("--records", type=int, default=1_000_000)
    p.add_argument("--dims", type=int, default=8)
    p.add_argument("--iters", type=int, default=50)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("export", help="export an app's dataset as canonical CSV")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True, help="output path, or - for stdout")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
