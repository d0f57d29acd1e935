"""``hc``: evaluate, cross-verify and benchmark Z_{a,b} from the shell.

All results go to stdout as JSON; log lines go to stderr.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 degenerate point.
"""

from __future__ import annotations

import argparse
import json
import logging
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from .arith import as_rational, format_rational
from .errors import BudgetExceeded, DegeneratePoint, DivisionByCoincidence, SamplerExhausted
from .representations import (
    RepresentationId,
    default_reps,
    evaluate,
    evaluate_with_stats,
)
from .sampler import sample_point
from .verify import SUITES, run_suite
from .zhc import PointConfig

log = logging.getLogger("hcoef")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DEGENERATE = 0, 1, 2, 3


class InputError(ValueError):
    pass


@dataclass
class EvalRequest:
    c: object
    t: tuple
    x: tuple
    s: tuple
    y: tuple
    representation: str | None = None

    @classmethod
    def from_json(cls, data) -> "EvalRequest":
        if not isinstance(data, dict):
            raise InputError("request must be a JSON object")
        unknown = set(data) - {"c", "t", "x", "s", "y", "representation"}
        if unknown:
            raise InputError(f"unknown fields: {sorted(unknown)}")
        try:
            c = _rational(data.get("c", "1"))
            sets = {}
            for key in "txsy":
                raw = data.get(key, [])
                if not isinstance(raw, list):
                    raise InputError(f"{key!r} must be a list")
                sets[key] = tuple(_rational(v) for v in raw)
        except (TypeError, ValueError) as exc:
            raise InputError(str(exc)) from exc
        if len(sets["t"]) != len(sets["x"]) or len(sets["s"]) != len(sets["y"]):
            raise InputError("need #t = #x and #s = #y")
        rep = data.get("representation")
        if rep is not None:
            if not isinstance(rep, str):
                raise InputError("representation must be a string")
            if rep.lower() != "all":
                try:
                    RepresentationId.parse(rep)
                except ValueError as exc:
                    raise InputError(f"unknown representation {rep!r}") from exc
        return cls(c, sets["t"], sets["x"], sets["s"], sets["y"], rep)

    def point(self) -> PointConfig:
        return PointConfig.build(t=self.t, x=self.x, s=self.s, y=self.y, c=self.c)


def _rational(value):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InputError(f"expected a rational literal, got {value!r}")
    return as_rational(value)


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_eval(args) -> int:
    try:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        request = EvalRequest.from_json(json.loads(text))
    except (OSError, json.JSONDecodeError, InputError) as exc:
        _emit({"error": f"bad request: {exc}"})
        return EXIT_INPUT
    try:
        pt = request.point()
        if request.representation and request.representation.lower() == "all":
            reps = default_reps(pt.a, pt.b)
            values = {rep.value: evaluate(rep, pt) for rep in reps}
            _emit({
                "a": pt.a,
                "b": pt.b,
                "values": {k: format_rational(v) for k, v in values.items()},
                "agree": len(set(values.values())) == 1,
            })
            return EXIT_OK
        rep = RepresentationId.parse(request.representation or RepresentationId.RHC_IHC.value)
        value = evaluate(rep, pt)
    except (DegeneratePoint, DivisionByCoincidence) as exc:
        _emit({"error": f"degenerate point: {exc}"})
        return EXIT_DEGENERATE
    except BudgetExceeded as exc:
        _emit({"error": str(exc)})
        return EXIT_INPUT
    _emit({"representation": rep.value, "value": format_rational(value)})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 1 or args.max_a < 0 or args.max_b < 0:
        _emit({"error": "trials must be >= 1 and max sizes >= 0"})
        return EXIT_INPUT
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = []
    for suite in suites:
        log.info("running suite %s (%d trials, seed %d)", suite, args.trials, args.seed)
        report = run_suite(suite, args.seed, args.trials, args.max_a, args.max_b)
        log.info("%s: %d/%d passed in %.2fs", suite, report.passed, report.attempted, report.seconds)
        reports.append(report)
    ok = all(r.ok for r in reports)
    if len(reports) == 1:
        _emit(reports[0].to_json())
    else:
        _emit({"suite": "all", "ok": ok, "reports": [r.to_json() for r in reports]})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bench(args) -> int:
    if args.a < 0 or args.b < 0 or args.trials < 1:
        _emit({"error": "a, b must be >= 0 and trials >= 1"})
        return EXIT_INPUT
    try:
        if args.rep.lower() == "all":
            reps = default_reps(args.a, args.b)
        else:
            reps = [RepresentationId.parse(args.rep)]
    except ValueError:
        _emit({"error": f"unknown representation {args.rep!r}"})
        return EXIT_INPUT
    try:
        pt = sample_point(args.seed, args.a, args.b)
    except SamplerExhausted as exc:
        _emit({"error": str(exc)})
        return EXIT_INPUT
    results = []
    for rep in reps:
        times = []
        try:
            for _ in range(args.trials):
                start = time.perf_counter()
                value, terms = evaluate_with_stats(rep, pt)
                times.append(time.perf_counter() - start)
        except BudgetExceeded as exc:
            _emit({"error": f"{rep.value} not available at (a, b) = ({args.a}, {args.b}): {exc}"})
            return EXIT_INPUT
        results.append({
            "representation": rep.value,
            "median_seconds": statistics.median(times),
            "term_count": terms,
            "value": format_rational(value),
        })
        log.info("%s: %.4fs", rep.value, results[-1]["median_seconds"])
    _emit({"a": args.a, "b": args.b, "trials": args.trials, "results": results})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hc", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate Z_{a,b} at a point given as a JSON file ('-' for stdin)")
    p.add_argument("file")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run a seeded property suite")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--max-a", type=int, default=2)
    p.add_argument("--max-b", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time one representation (or 'all') at size (a, b)")
    p.add_argument("--rep", default="all")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
