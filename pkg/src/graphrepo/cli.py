"""Command-line interface.

Subcommands mirror the library modules: stats, dist, generate, sample,
communities, roles, layout, ingest, serve. Machine-readable output goes to
stdout, diagnostics to stderr. Exit codes: 0 success, 1 input error,
2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import jsonio
from .clustering import detect_communities, discover_roles, extract_role_features
from .generators import ConfigError, GeneratorConfig, PatternSpec, generate
from .graph import Graph, GraphParseError, build_graph, parse_edge_list
from .layout import compute_layout
from .sampling import SampleConfig, sample
from .stats import NODE_COLUMNS, compute_all, distribution

__all__ = ["main"]


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return build_graph(parse_edge_list(text))


def _emit(text: str, output: str | None) -> None:
    if output and output != "-":
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _cmd_stats(args) -> int:
    g = _read_graph(args.input)
    stats, table = compute_all(g, workers=args.workers)
    if args.per_node:
        lines = ["node," + ",".join(NODE_COLUMNS)]
        cols = [table.column(c) for c in NODE_COLUMNS]
        for v in range(g.n):
            lines.append(f"{v}," + ",".join(repr(col[v].item()) for col in cols))
        _emit("\n".join(lines) + "\n", args.output)
    elif args.format == "csv":
        d = stats.to_dict()
        rows = "\n".join(f"{k},{'' if v is None else v}" for k, v in d.items())
        _emit("stat,value\n" + rows + "\n", args.output)
    else:
        _emit(jsonio.to_json(stats.to_dict()), args.output)
    return 0


def _cmd_dist(args) -> int:
    g = _read_graph(args.input)
    _, table = compute_all(g)
    dist = distribution(table, args.stat)
    if args.format == "csv":
        lines = ["value,pdf,cdf,ccdf"]
        for i in range(len(dist.values)):
            lines.append(",".join(repr(x.item()) for x in
                                  (dist.values[i], dist.pdf[i], dist.cdf[i], dist.ccdf[i])))
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(jsonio.to_json(dist.to_dict()), args.output)
    return 0


def _parse_pattern(text: str) -> PatternSpec:
    parts = text.split(":")
    if not parts[0]:
        raise ConfigError(f"bad pattern spec {text!r}")
    size = int(parts[1]) if len(parts) > 1 and parts[1] else None
    count = int(parts[2]) if len(parts) > 2 and parts[2] else 1
    return PatternSpec(pattern=parts[0], size=size, count=count)


def _config_from_args(args) -> GeneratorConfig:
    if args.config:
        return GeneratorConfig.from_dict(jsonio.read_json(args.config))
    weights = [float(x) for x in args.weights.split(",")] if args.weights else None
    sizes = [int(x) for x in args.block_sizes.split(",")] if args.block_sizes else None
    return GeneratorConfig(
        kind=args.kind or "",
        seed=args.seed,
        n=args.n,
        p=args.p,
        m_attach=args.m_attach,
        weights=weights,
        block_sizes=sizes,
        mu=args.mu,
        patterns=[_parse_pattern(p) for p in args.pattern or []],
        wiring=args.wiring,
    )


def _cmd_generate(args) -> int:
    cfg = _config_from_args(args)
    g = generate(cfg)
    if args.format == "json":
        _emit(jsonio.to_json({"config": cfg.to_dict(), "n": g.n, "m": g.m}), args.output)
    else:
        _emit(g.dump(), args.output)
    return 0


def _cmd_sample(args) -> int:
    g = _read_graph(args.input)
    result = sample(g, SampleConfig(method=args.method, fraction=args.fraction,
                                    seed=args.seed))
    if args.format == "json":
        _emit(jsonio.to_json(result.to_dict()), args.output)
    else:
        _emit(result.graph.dump(), args.output)
    return 0


def _cmd_communities(args) -> int:
    g = _read_graph(args.input)
    labeling = detect_communities(g, seed=args.seed)
    if args.format == "csv":
        lines = ["node,community"] + [f"{v},{labeling.labels[v]}" for v in range(g.n)]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(jsonio.to_json(labeling.to_dict()), args.output)
    return 0


def _cmd_roles(args) -> int:
    g = _read_graph(args.input)
    _, table = compute_all(g)
    k = None if args.k in (None, "auto") else int(args.k)
    labeling = discover_roles(extract_role_features(g, table), k=k, seed=args.seed)
    if args.format == "csv":
        lines = ["node,role"] + [f"{v},{labeling.labels[v]}" for v in range(g.n)]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(jsonio.to_json(labeling.to_dict()), args.output)
    return 0


def _cmd_layout(args) -> int:
    g = _read_graph(args.input)
    pos = compute_layout(g, seed=args.seed, iterations=args.iterations)
    if args.format == "csv":
        lines = ["node,x,y"] + [f"{v},{pos[v, 0].item()!r},{pos[v, 1].item()!r}"
                                for v in range(g.n)]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(jsonio.to_json({"positions": [[float(x), float(y)] for x, y in pos]}),
              args.output)
    return 0


def _cmd_ingest(args) -> int:
    from .store import DatasetStore

    store = DatasetStore(args.store)
    text = (sys.stdin.read() if args.input == "-"
            else Path(args.input).read_text(encoding="utf-8"))
    name = args.name or (Path(args.input).stem if args.input != "-" else "graph")
    result = store.ingest_dataset(name, args.collection, text,
                                  {"description": args.description})
    _emit(jsonio.to_json(result), args.output)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    from .store import DatasetStore

    app = create_app(DatasetStore(args.store), frontend_dir=args.frontend)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphrepo",
                                     description="graph analytics and repository toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("json", "csv")):
        p.add_argument("--output", "-o", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=fmt, default=fmt[0])

    p = sub.add_parser("stats", help="graph-level statistics")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--per-node", action="store_true", help="emit the per-node table as CSV")
    common(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("dist", help="distribution of one node statistic")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--stat", required=True, choices=NODE_COLUMNS)
    common(p)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("generate", help="generate a synthetic graph")
    p.add_argument("--config", help="JSON config file (overrides other flags)")
    p.add_argument("--kind", choices=("erdos_renyi", "preferential_attachment",
                                      "chung_lu", "block_chung_lu", "pattern", "hybrid"))
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--m-attach", type=int, dest="m_attach")
    p.add_argument("--weights", help="comma-separated weights")
    p.add_argument("--block-sizes", dest="block_sizes", help="comma-separated sizes")
    p.add_argument("--mu", type=float)
    p.add_argument("--pattern", action="append",
                   help="pattern as kind[:size[:count]]; repeatable")
    p.add_argument("--wiring", choices=("bridge", "disjoint"), default="bridge")
    p.add_argument("--seed", type=int, default=0)
    common(p, fmt=("edgelist", "json"))
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("sample", help="sample a subgraph")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--method", choices=("node", "edge", "induced_edge"), required=True)
    p.add_argument("--fraction", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    common(p, fmt=("edgelist", "json"))
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("communities", help="label propagation communities")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_communities)

    p = sub.add_parser("roles", help="structural role labels")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--k", default="auto", help="role count or 'auto'")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_roles)

    p = sub.add_parser("layout", help="2D force-directed positions")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=int, default=100)
    common(p)
    p.set_defaults(func=_cmd_layout)

    p = sub.add_parser("ingest", help="add a dataset to a local store")
    p.add_argument("--store", required=True, help="store root directory")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--name", default=None)
    p.add_argument("--collection", default="miscellaneous")
    p.add_argument("--description", default="")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--store", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--frontend", default=None, help="static UI directory to mount")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as exc:
        where = f" (line {exc.line})" if exc.line is not None else ""
        print(f"error: {exc}{where}", file=sys.stderr)
        return 1
    except (ConfigError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
