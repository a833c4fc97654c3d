"""Command-line client.

Each subcommand builds an ExperimentConfig and either executes it in-process
through the same dispatch layer the service uses, or posts it to a running
service when --server is given. File outputs are written client-side:
{out}.json (aggregate), {out}.csv (tables), {out}.jsonl (per-instance
records; a {"truncated": true} line marks an interrupted run).
"""

from __future__ import annotations

import argparse
import json
import sys

from .harness.config import ExperimentConfig, ScheduleRow
from .harness.runner import EXIT_VALIDATION, RunResult, ValidationFailure, execute


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sclab",
        description="Exact-arithmetic Schubert calculus laboratory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, kn=True, problem=True):
        if kn:
            p.add_argument("--k", type=int, default=None)
            p.add_argument("--n", type=int, default=None)
        if problem:
            p.add_argument("--problem", default=None, help="e.g. '1^4' or '2,2^4'")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--jobs", type=int, default=None)
        p.add_argument("--out", default=None, help="output base path")
        p.add_argument("--format", choices=["json", "csv"], default=None)
        p.add_argument("--config", default=None, help="JSON config file; flags override")
        p.add_argument("--server", default=None, help="service URL for remote runs")

    p = sub.add_parser("degree", help="number of solutions of a Schubert problem")
    common(p)

    p = sub.add_parser("tableaux", help="standard tableau count and sign-imbalance")
    p.add_argument("--outer", default=None)
    p.add_argument("--inner", default=None)
    common(p, kn=False, problem=False)

    p = sub.add_parser("real", help="real-solution frequency table (osculating)")
    common(p)
    p.add_argument("--type", dest="type_", default=None,
                   help="rho per distinct partition, e.g. '4' or '1,5'")
    p.add_argument("--instances", type=int, default=None)
    p.add_argument("--backend", choices=["modular", "rational", "auto"],
                   default=None)

    p = sub.add_parser("galois", help="Frobenius cycle-type sampling verdict")
    common(p)
    p.add_argument("--budget", type=int, default=None, help="default 2*degree")
    p.add_argument("--prime", type=int, default=None, help="fixed sampling prime")

    p = sub.add_parser("family", help="box-family counts nu(k,n,rho) and bounds")
    common(p, problem=False)
    p.add_argument("--rho", type=int, default=None)

    p = sub.add_parser("vakil", help="at-least-alternating certificate in Gr(2,n)")
    common(p)

    p = sub.add_parser("secant-check", help="disjoint secant flag real counts")
    common(p)
    p.add_argument("--instances", type=int, default=None)
    p.add_argument("--backend", choices=["modular", "rational", "auto"],
                   default=None)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8137)
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    values = {}
    if args.config:
        with open(args.config) as fh:
            values = json.load(fh)
    values["command"] = args.command
    for key in ("k", "n", "problem", "seed", "jobs", "out", "format",
                "budget", "prime", "rho", "outer", "inner", "backend"):
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    type_ = getattr(args, "type_", None)
    instances = getattr(args, "instances", None)
    if type_ is not None or instances is not None:
        values["schedule"] = [
            {"type": type_ or "-", "instances": instances or 50}
        ]
    if args.command == "secant-check" and "schedule" not in values:
        values["schedule"] = [{"type": "-", "instances": 50}]
    values.pop("server", None)
    return ExperimentConfig(**values)


_ENDPOINTS = {
    "degree": "/degree",
    "tableaux": "/tableaux",
    "real": "/real",
    "galois": "/galois",
    "family": "/family",
    "vakil": "/vakil",
    "secant-check": "/secant-check",
}


def run_remote(server: str, config: ExperimentConfig) -> RunResult:
    import httpx

    body = _request_body(config)
    url = server.rstrip("/") + _ENDPOINTS[config.command]
    resp = httpx.post(url, json=body, timeout=None)
    if resp.status_code == 400:
        raise ValidationFailure(resp.json().get("detail", "validation error"))
    resp.raise_for_status()
    data = resp.json()
    if config.command in ("real", "secant-check"):
        return RunResult(payload=data["table"], records=data["records"],
                         csv=data["csv"], exit_code=data["exit_code"])
    if config.command == "galois":
        return RunResult(payload=data["result"], exit_code=data["exit_code"])
    if config.command == "family":
        return RunResult(payload=data["result"])
    return RunResult(payload=data)


def _request_body(config: ExperimentConfig) -> dict:
    c = config
    if c.command == "degree":
        return {"k": c.k, "n": c.n, "problem": c.problem}
    if c.command == "tableaux":
        return {"outer": c.outer, "inner": c.inner}
    if c.command == "real":
        return {"k": c.k, "n": c.n, "problem": c.problem,
                "schedule": [r.model_dump() for r in c.schedule],
                "seed": c.seed, "jobs": c.jobs, "backend": c.backend}
    if c.command == "galois":
        return {"k": c.k, "n": c.n, "problem": c.problem, "budget": c.budget,
                "seed": c.seed, "jobs": c.jobs, "prime": c.prime}
    if c.command == "family":
        return {"k": c.k, "n": c.n, "rho": c.rho}
    if c.command == "vakil":
        return {"n": c.n, "problem": c.problem}
    if c.command == "secant-check":
        instances = c.schedule[0].instances if c.schedule else 50
        return {"k": c.k, "n": c.n, "problem": c.problem,
                "instances": instances, "seed": c.seed, "backend": c.backend}
    raise ValidationFailure(f"unknown command {c.command!r}")


def write_outputs(result: RunResult, config: ExperimentConfig,
                  jsonl_lines: list[str] | None = None):
    base = config.out
    if not base:
        return
    with open(base + ".json", "w") as fh:
        json.dump(result.payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    if result.csv is not None:
        with open(base + ".csv", "w") as fh:
            fh.write(result.csv)
    if result.records or jsonl_lines:
        with open(base + ".jsonl", "w") as fh:
            for rec in result.records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
            if result.truncated:
                fh.write(json.dumps({"truncated": True}) + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        uvicorn.run("sclab.service.app:app", host=args.host, port=args.port)
        return 0
    try:
        config = config_from_args(args)
    except (ValueError, OSError) as e:
        print(json.dumps({"error": str(e), "exit_code": EXIT_VALIDATION}),
              file=sys.stderr)
        return EXIT_VALIDATION
    try:
        if args.server:
            result = run_remote(args.server, config)
        else:
            result = execute(config)
    except ValidationFailure as e:
        print(json.dumps({"error": str(e), "exit_code": EXIT_VALIDATION}),
              file=sys.stderr)
        return EXIT_VALIDATION
    except KeyboardInterrupt:
        print(json.dumps({"error": "interrupted", "truncated": True}),
              file=sys.stderr)
        if config.out:
            with open(config.out + ".jsonl", "a") as fh:
                fh.write(json.dumps({"truncated": True}) + "\n")
        return 130
    if args.command == "degree":
        print(result.payload["degree"])
    elif config.format == "csv" and result.csv is not None:
        print(result.csv, end="")
    else:
        print(json.dumps(result.payload, indent=2, sort_keys=True))
    write_outputs(result, config)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
