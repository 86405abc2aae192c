"""Command-line client over the report layer.

Exit codes: 0 success, 2 input error, 3 property violation (a failing fuzz
trial or selfcheck), 1 internal error.
"""

from __future__ import annotations

import argparse
import sys

from . import reports
from .gauss import GaussCodeError, IndexOutOfRange
from .words import BadLetter

_INPUT_ERRORS = (GaussCodeError, BadLetter, IndexOutOfRange)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cylknot",
        description=(
            "Sliceness obstruction for homologically trivial knots in the "
            "solid torus, computed from Gauss codes."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("human", "machine"),
            default="human",
            help="output format (machine = canonical JSON)",
        )

    p = sub.add_parser("invariant", help="obstruction value of a Gauss code")
    p.add_argument("code", help="Gauss code, e.g. O1+U2+O3+U1+O2+U3+")
    p.add_argument("--ref", type=int, default=1, help="reference arc (default 1)")
    add_format(p)

    p = sub.add_parser("reduce", help="normal form and verdict for a letter word")
    p.add_argument("word", help="letter word, e.g. \"B' a B' B^-1 b'\"")
    add_format(p)

    p = sub.add_parser("equal", help="decide equality of two letter words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="also run the bounded relator-rewriting prover and print its trace",
    )
    p.add_argument("--max-len", type=int, default=16, help="prover word-length cap")
    p.add_argument("--budget", type=int, default=200000, help="prover expansion cap")
    add_format(p)

    p = sub.add_parser("orbit", help="compare obstruction values of two codes")
    p.add_argument("code1")
    p.add_argument("code2")
    add_format(p)

    p = sub.add_parser("fuzz", help="seeded move-invariance trials")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-chords", type=int, default=8)
    p.add_argument("--steps", type=int, default=10, help="walk length cap per trial")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--loose", action="store_true", help="drop sign checks on R2 deletions"
    )
    add_format(p)

    p = sub.add_parser("selfcheck", help="run the internal consistency battery")
    p.add_argument("--budget", type=int, default=200000, help="prover expansion cap")
    add_format(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _dispatch(args: argparse.Namespace) -> dict:
    if args.command == "invariant":
        return reports.invariant_report(args.code, args.ref)
    if args.command == "reduce":
        return reports.reduce_report(args.word)
    if args.command == "equal":
        return reports.equal_report(
            args.word1,
            args.word2,
            use_oracle=args.oracle,
            max_len=args.max_len,
            budget=args.budget,
        )
    if args.command == "orbit":
        return reports.orbit_report(args.code1, args.code2)
    if args.command == "fuzz":
        return reports.fuzz_report(
            args.trials, args.max_chords, args.steps, args.seed, args.loose
        )
    if args.command == "selfcheck":
        return reports.selfcheck_report(args.budget)
    raise ValueError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        uvicorn.run("cylknot.service:app", host=args.host, port=args.port)
        return 0
    try:
        report = _dispatch(args)
    except _INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    if args.format == "machine":
        sys.stdout.write(reports.render_machine(report))
    else:
        sys.stdout.write(reports.render_human(report))
    if report.get("passed") is False:
        return 3
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
