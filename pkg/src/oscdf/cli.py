"""Command-line client.

All domain work lives in the core package; the subcommands only parse
arguments, dispatch, and format output. ``eval``, ``count``, and ``verify``
can target a running service instead via ``--server URL``; ``bench`` always
runs locally so wall times are not polluted by transport. ``serve`` starts
the HTTP service.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import urllib.error
import urllib.request

from .bench import default_metadata, run_sweep, write_csv
from .combinatorics import count_index_vectors
from .errors import SizeCapError, SpecError
from .problems import evaluate_problem, load_problem
from .verification import run_verification

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_INVALID = 2


def _post_json(server: str, route: str, payload: dict) -> dict:
    url = server.rstrip("/") + route
    data = json.dumps(payload).encode("utf-8")
    request = urllib.request.Request(url, data=data, headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(request) as response:
            return json.loads(response.read().decode("utf-8"))
    except urllib.error.HTTPError as exc:
        body = exc.read().decode("utf-8", errors="replace")
        raise RuntimeError(f"server returned {exc.code}: {body}") from exc


def _emit(doc: dict, output: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _cmd_eval(args) -> int:
    if args.server:
        with open(args.spec, encoding="utf-8") as handle:
            payload = json.load(handle)
        if args.algorithm:
            payload["algorithm"] = args.algorithm
        route = "/eval?parallel=true" if args.parallel else "/eval"
        _emit(_post_json(args.server, route, payload), args.output)
        return EXIT_OK
    problem = load_problem(args.spec)
    start = time.perf_counter()
    result = evaluate_problem(problem, algorithm=args.algorithm, parallel=args.parallel)
    elapsed = time.perf_counter() - start
    _emit(
        {
            "value": result.value,
            "algorithm": result.algorithm,
            "term_count": result.term_count,
            "elapsed_seconds": elapsed,
        },
        args.output,
    )
    return EXIT_OK


def _cmd_count(args) -> int:
    if args.server:
        doc = _post_json(args.server, "/count", {"indices": args.indices, "m": args.m})
        print(doc["count"])
        return EXIT_OK
    print(count_index_vectors(args.indices, args.m))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.server:
        doc = _post_json(
            args.server,
            "/verify",
            {"max_m": args.max_m, "trials": args.trials, "seed": args.seed, "samples": args.samples},
        )
        print(doc["report"])
        return EXIT_OK if doc["ok"] else EXIT_FAILURES
    report = run_verification(max_m=args.max_m, trials=args.trials, seed=args.seed, samples=args.samples)
    print(report.format())
    return EXIT_OK if report.ok else EXIT_FAILURES


def _cmd_bench(args) -> int:
    k_values = [int(v) for v in args.k.split(",")]
    m_values = list(range(args.m_min, args.m_max + 1, args.m_step))
    algorithms = args.algorithms.split(",")
    records, skipped = run_sweep(
        k_values, m_values, args.n, algorithms, repetitions=args.repetitions
    )
    write_csv(args.output, records, metadata=default_metadata(args.n, args.repetitions))
    for note in skipped:
        print(note, file=sys.stderr)
    print(f"wrote {len(records)} rows to {args.output} ({len(skipped)} cells skipped)")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscdf",
        description="Exact joint CDFs of order statistics from one or more populations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a problem spec file, print a JSON result")
    p_eval.add_argument("spec", help="path to a problem JSON file")
    p_eval.add_argument(
        "--algorithm",
        choices=["auto", "bapat_beg", "single_pop", "two_pop", "multi_pop"],
        default=None,
        help="override the spec's algorithm tag",
    )
    p_eval.add_argument("--parallel", action="store_true", help="allow multi-process term summation")
    p_eval.add_argument("--output", default=None, help="write the JSON result here instead of stdout")
    p_eval.add_argument("--server", default=None, help="POST to a running service instead of computing locally")
    p_eval.set_defaults(func=_cmd_eval)

    p_count = sub.add_parser("count", help="print the exact number of summation terms")
    p_count.add_argument("indices", nargs="+", type=int, help="order-statistic indices n_1 < ... < n_k")
    p_count.add_argument("--m", type=int, required=True, help="total number of variables")
    p_count.add_argument("--server", default=None)
    p_count.set_defaults(func=_cmd_count)

    p_verify = sub.add_parser("verify", help="randomized cross-strategy and oracle agreement suite")
    p_verify.add_argument("--max-m", type=int, default=6, dest="max_m")
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument(
        "--samples",
        type=int,
        default=0,
        help="if >= 1000, also check a Monte Carlo estimate per trial",
    )
    p_verify.add_argument("--server", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser("bench", help="time the general formula against the specialized ones; write CSV")
    p_bench.add_argument("--k", default="1,2,3", help="comma-separated k values")
    p_bench.add_argument("--m-min", type=int, default=4, dest="m_min")
    p_bench.add_argument("--m-max", type=int, default=14, dest="m_max")
    p_bench.add_argument("--m-step", type=int, default=1, dest="m_step")
    p_bench.add_argument("--n", type=int, default=1, help="variables drawn from the first population")
    p_bench.add_argument("--algorithms", default="bapat_beg,two_pop")
    p_bench.add_argument("--repetitions", type=int, default=3)
    p_bench.add_argument("--output", default="bench.csv")
    p_bench.set_defaults(func=_cmd_bench)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: invalid problem spec at {exc.field}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, RuntimeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
