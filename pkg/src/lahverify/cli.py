"""Command-line front end: single values, triangles, and grid verification."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .numbers import lah, lah_triangle, stirling1, stirling1_triangle
from .verify import ROUTE_NAMES, VerificationReport, verify_grid

R6_MAX_K = 8
R6_MAX_N = 10


@dataclass(frozen=True)
class RunConfig:
    command: str
    fmt: str = "text"
    n: int | None = None
    k: int | None = None
    kind: str | None = None
    max_n: int | None = None
    k_min: int | None = None
    k_max: int | None = None
    n_min: int | None = None
    n_max: int | None = None
    routes: tuple[str, ...] = field(default_factory=tuple)
    jobs: int = 1


def emit_report(reports: Sequence[VerificationReport], fmt: str = "text") -> str:
    """Render verification reports; identical inputs give identical bytes.

    JSON keeps k and n as numbers but serializes the unbounded reference
    and route values as decimal strings. CSV columns are k, n, reference,
    one column per route entry, all_match.
    """
    if fmt == "json":
        payload = [
            {
                "k": r.instance.k,
                "n": r.instance.n,
                "reference": str(r.reference),
                "routes": {name: str(v) for name, v in r.route_values.items()},
                "all_match": r.all_match,
            }
            for r in reports
        ]
        return json.dumps(payload, separators=(",", ":"))
    if fmt == "csv":
        names = list(reports[0].route_values) if reports else []
        lines = [",".join(["k", "n", "reference", *names, "all_match"])]
        for r in reports:
            lines.append(
                ",".join(
                    [
                        str(r.instance.k),
                        str(r.instance.n),
                        str(r.reference),
                        *(str(r.route_values[name]) for name in names),
                        "true" if r.all_match else "false",
                    ]
                )
            )
        return "\n".join(lines)
    if fmt == "text":
        lines = []
        for r in reports:
            parts = [f"k={r.instance.k}", f"n={r.instance.n}", f"reference={r.reference}"]
            parts.extend(f"{name}={v}" for name, v in r.route_values.items())
            parts.append(f"all_match={'true' if r.all_match else 'false'}")
            lines.append(" ".join(parts))
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")


def _parse_routes(raw: str, k_max: int, n_max: int) -> tuple[str, ...]:
    if raw == "all":
        names = ["r1", "r2", "r3", "r4", "r5"]
        # r6 is symbolically expensive; include it by default only on grids
        # inside its cost bound, never silently on larger ones
        if k_max <= R6_MAX_K and n_max <= R6_MAX_N:
            names.append("r6")
        return tuple(names)
    names = [tok.strip() for tok in raw.split(",") if tok.strip()]
    if not names:
        raise ValueError("--routes must name at least one route or be 'all'")
    for name in names:
        if name not in ROUTE_NAMES:
            raise ValueError(f"unknown route {name!r} (choose from {', '.join(ROUTE_NAMES)})")
    return tuple(dict.fromkeys(names))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lahverify",
        description="Exact Lah/Stirling numbers and multi-route identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_lah = sub.add_parser("lah", help="print the Lah number L(n, k)")
    p_lah.add_argument("--n", type=int, required=True)
    p_lah.add_argument("--k", type=int, required=True)

    p_stirling = sub.add_parser("stirling1", help="print the signed Stirling number s(n, k)")
    p_stirling.add_argument("--n", type=int, required=True)
    p_stirling.add_argument("--k", type=int, required=True)

    p_table = sub.add_parser("table", help="print a full number triangle")
    p_table.add_argument("kind", choices=("lah", "stirling1"))
    p_table.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_table.add_argument("--format", choices=("text", "csv"), default="text", dest="fmt")

    p_verify = sub.add_parser("verify", help="verify the identity over a (k, n) grid")
    p_verify.add_argument("--k-min", type=int, required=True, dest="k_min")
    p_verify.add_argument("--k-max", type=int, required=True, dest="k_max")
    p_verify.add_argument("--n-min", type=int, required=True, dest="n_min")
    p_verify.add_argument("--n-max", type=int, required=True, dest="n_max")
    p_verify.add_argument("--routes", default="all")
    p_verify.add_argument("--format", choices=("text", "json", "csv"), default="text", dest="fmt")
    p_verify.add_argument("--jobs", type=int, default=1)
    return parser


def _config_from_args(ns: argparse.Namespace) -> RunConfig:
    if ns.command in ("lah", "stirling1"):
        if ns.n < 0 or ns.k < 0:
            raise ValueError("--n and --k must be non-negative")
        return RunConfig(command=ns.command, n=ns.n, k=ns.k)
    if ns.command == "table":
        if ns.max_n < 0:
            raise ValueError("--max-n must be non-negative")
        return RunConfig(command="table", kind=ns.kind, max_n=ns.max_n, fmt=ns.fmt)
    if ns.command == "verify":
        if ns.k_min < 2:
            raise ValueError("verify requires --k-min >= 2")
        if ns.k_max < ns.k_min:
            raise ValueError("empty k range: --k-max must be >= --k-min")
        if ns.n_min < 0:
            raise ValueError("verify requires --n-min >= 0")
        if ns.n_max < ns.n_min:
            raise ValueError("empty n range: --n-max must be >= --n-min")
        if ns.jobs < 1:
            raise ValueError("--jobs must be at least 1")
        routes = _parse_routes(ns.routes, ns.k_max, ns.n_max)
        return RunConfig(
            command="verify",
            fmt=ns.fmt,
            k_min=ns.k_min,
            k_max=ns.k_max,
            n_min=ns.n_min,
            n_max=ns.n_max,
            routes=routes,
            jobs=ns.jobs,
        )
    raise ValueError(f"unknown command {ns.command!r}")


def _run_table(config: RunConfig) -> int:
    builder = lah_triangle if config.kind == "lah" else stirling1_triangle
    triangle = builder(config.max_n)
    if config.fmt == "csv":
        lines = ["n,k,value"]
        for n in range(config.max_n + 1):
            lines.extend(f"{n},{k},{triangle.value(n, k)}" for k in range(n + 1))
        print("\n".join(lines))
    else:
        print("\n".join(" ".join(str(v) for v in triangle.row(n)) for n in range(config.max_n + 1)))
    return 0


def _run_verify(config: RunConfig) -> int:
    reports = verify_grid(
        range(config.k_min, config.k_max + 1),
        range(config.n_min, config.n_max + 1),
        config.routes,
        jobs=config.jobs,
    )
    print(emit_report(reports, config.fmt))
    matched = sum(1 for r in reports if r.all_match)
    print(f"{matched}/{len(reports)} instances verified", file=sys.stderr)
    return 0 if matched == len(reports) else 1


def run(argv: Sequence[str] | None = None) -> int:
    """Execute one CLI invocation; returns the process exit code.

    0 means success (all instances verified for the verify command), 1
    means at least one verification mismatch, 2 means a usage or domain
    error.
    """
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return 0 if code == 0 else 2
    try:
        config = _config_from_args(ns)
        if config.command == "lah":
            print(lah(config.n, config.k))
            return 0
        if config.command == "stirling1":
            print(stirling1(config.n, config.k))
            return 0
        if config.command == "table":
            return _run_table(config)
        return _run_verify(config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
