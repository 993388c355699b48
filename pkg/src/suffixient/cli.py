"""Command-line front end.

Positions in set files and in every output are 1-based into the
sentinel-prepended text: position 1 is the sentinel, position ``k + 1`` is the
``k``-th byte of the text file. Exit codes: 0 accept, 1 reject, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

from . import oracle
from .corpus import generate
from .errors import BadParameter, ParseError, PositionOutOfRange, SuffixientError
from .slpr import compute_slpr
from .text import SuffixContext, Text, build_context, prepare_text, run_breaks, text_pos
from .verifier import (
    CandidateSet,
    MinimalityWitness,
    SufficiencyWitness,
    Verdict,
    build_candidates,
    candidate_set,
    test_minimal,
    test_suffixient_linear,
    test_suffixient_quadratic,
)

log = logging.getLogger("suffixient")

EXIT_ACCEPT, EXIT_REJECT, EXIT_ERROR = 0, 1, 2


@dataclass
class RunReport:
    command: str
    accepted: Optional[bool] = None
    witness: Optional[dict] = None
    algorithm: Optional[str] = None
    n: Optional[int] = None
    sigma: Optional[int] = None
    run_breaks: Optional[int] = None
    runs: Optional[int] = None
    set_size: Optional[int] = None
    chi: Optional[int] = None
    positions: Optional[list[int]] = None
    note: Optional[str] = None
    timings_ms: dict[str, float] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, payload: str) -> "RunReport":
        return cls(**json.loads(payload))


class _Timer:
    def __init__(self, report: RunReport):
        self.report = report

    def __call__(self, phase: str, fn, *args, **kwargs):
        start = time.perf_counter()
        out = fn(*args, **kwargs)
        self.report.timings_ms[phase] = (time.perf_counter() - start) * 1e3
        return out


def read_text(path: str) -> Text:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise FileNotFoundError(f"{path}: {exc.strerror}") from exc
    return prepare_text(raw)


def read_set(path: str, n: int) -> CandidateSet:
    """Parse one decimal position per line; blank lines and ``#`` comments are skipped."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise FileNotFoundError(f"{path}: {exc.strerror}") from exc
    seen: dict[int, int] = {}
    for lineno, line in enumerate(lines, 1):
        item = line.strip()
        if not item or item.startswith("#"):
            continue
        try:
            x = int(item, 10)
        except ValueError:
            raise ParseError(f"{path}:{lineno}: not an integer: {item!r}") from None
        if not 1 <= x <= n:
            raise PositionOutOfRange(f"{path}:{lineno}: position {x} outside [1, {n}]")
        if x in seen:
            log.warning("%s:%d: duplicate position %d (first on line %d) ignored", path, lineno, x, seen[x])
            continue
        seen[x] = lineno
    return candidate_set(seen, n)


def display(t: Text, i: int, j: int) -> str:
    return "".join(t.symbol_repr(s) for s in t.chars[i : j + 1].tolist())


def sufficiency_witness(ctx: SuffixContext, w: SufficiencyWitness) -> dict:
    side = w.row - 1 if ctx.bwt_r[w.row - 1] == w.symbol else w.row
    end = text_pos(ctx, side)
    start = max(1, end - int(ctx.lcp_r[w.row]))
    return {
        "kind": "not-suffixient",
        "row": w.row,
        "symbol": ctx.text.symbol_repr(w.symbol),
        "extension": display(ctx.text, start, end),
        "end": end,
    }


def minimality_witness(ctx: SuffixContext, w: MinimalityWitness) -> dict:
    return {
        "kind": "not-minimal",
        "symbol": ctx.text.symbol_repr(w.symbol),
        "entries": [w.first, w.second],
        "positions": list(w.positions),
    }


def _describe(report: RunReport) -> str:
    w = report.witness
    if w is None:
        return ""
    if w["kind"] == "not-suffixient":
        return f"witness: extension '{w['extension']}' (ending at {w['end']}) suffixes no T[1,x] with x in S"
    return (
        f"witness: positions {w['positions'][0]} and {w['positions'][1]} carry "
        f"suffix-comparable '{w['symbol']}'-extensions"
    )


def emit(report: RunReport, args: argparse.Namespace) -> None:
    if args.json:
        print(report.to_json())
        return
    verdict = "ACCEPT" if report.accepted else "REJECT"
    print(
        f"{verdict} {report.command}: n={report.n} sigma={report.sigma} "
        f"|S|={report.set_size} algo={report.algorithm}"
    )
    if args.witness and report.witness:
        print(_describe(report))


def _prepare(args, report: RunReport):
    timer = _Timer(report)
    t = read_text(args.text)
    s = read_set(args.set, t.n)
    ctx = timer("context", build_context, t)
    report.n, report.sigma, report.set_size = t.n, t.sigma, len(s)
    report.run_breaks = int(run_breaks(ctx).size)
    return timer, t, s, ctx


def cmd_test(args) -> int:
    report = RunReport("test", algorithm=args.algo)
    timer, t, s, ctx = _prepare(args, report)
    if args.algo == "oracle":
        catalog = timer("catalog", oracle.build_catalog, t, args.cap)
        missing = timer("verify", oracle.uncovered_extensions, catalog, s)
        report.accepted = not missing
        if missing:
            e = missing[0]
            report.witness = {
                "kind": "not-suffixient",
                "extension": display(t, e.start, e.symbol_end),
                "end": int(e.ends[-1]),
            }
    else:
        tables = timer("slpr", compute_slpr, ctx)
        tester = test_suffixient_linear if args.algo == "linear" else test_suffixient_quadratic
        verdict: Verdict = timer("verify", tester, ctx, tables, s)
        report.accepted = verdict.accepted
        if verdict.witness is not None:
            report.witness = sufficiency_witness(ctx, verdict.witness)
    emit(report, args)
    return EXIT_ACCEPT if report.accepted else EXIT_REJECT


def cmd_test_min(args) -> int:
    report = RunReport("test-min", algorithm="linear")
    timer, t, s, ctx = _prepare(args, report)
    tables = timer("slpr", compute_slpr, ctx)
    lists = timer("candidates", build_candidates, ctx, tables, s)
    verdict = timer("verify", test_suffixient_linear, ctx, tables, s, lists=lists)
    if verdict.accepted:
        verdict = timer("minimal", test_minimal, ctx, tables, s, lists=lists)
        if verdict.witness is not None:
            report.witness = minimality_witness(ctx, verdict.witness)
    else:
        report.witness = sufficiency_witness(ctx, verdict.witness)
    report.accepted = verdict.accepted
    emit(report, args)
    return EXIT_ACCEPT if report.accepted else EXIT_REJECT


def cmd_build_min(args) -> int:
    report = RunReport("build-min", algorithm="oracle")
    t = read_text(args.text)
    timer = _Timer(report)
    catalog = timer("catalog", oracle.build_catalog, t, args.cap)
    s = oracle.smallest_set_bruteforce(catalog)
    report.n, report.sigma, report.chi = t.n, t.sigma, catalog.chi
    report.positions = [int(x) for x in s]
    report.set_size = len(s)
    if args.json:
        print(report.to_json())
    else:
        sys.stdout.write("".join(f"{x}\n" for x in report.positions))
    return EXIT_ACCEPT


def cmd_stats(args) -> int:
    report = RunReport("stats")
    timer = _Timer(report)
    t = read_text(args.text)
    ctx = timer("context", build_context, t)
    breaks = int(run_breaks(ctx).size)
    report.n, report.sigma, report.run_breaks, report.runs = t.n, t.sigma, breaks, breaks + 1
    if t.n <= args.cap:
        report.chi = timer("catalog", oracle.build_catalog, t, args.cap).chi
    else:
        report.note = f"chi omitted: n={t.n} exceeds oracle cap {args.cap}"
    if args.json:
        print(report.to_json())
    else:
        print(f"n={report.n} sigma={report.sigma} runs={report.runs} run_breaks={breaks}")
        print(f"chi={report.chi}" if report.chi is not None else report.note)
    return EXIT_ACCEPT


def cmd_gen(args) -> int:
    if args.n is None:
        raise BadParameter("gen requires --n")
    sys.stdout.buffer.write(generate(args.kind, args.n, args.sigma, args.seed))
    sys.stdout.flush()
    return EXIT_ACCEPT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="suffixient", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_set=True):
        p.add_argument("--text", required=True, help="raw text file (byte 0x00 is reserved)")
        if with_set:
            p.add_argument("--set", required=True, help="candidate positions, one per line")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--witness", action="store_true", help="print the failure witness")
        p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help="oracle length cap")

    p = sub.add_parser("test", help="is S suffixient for T?")
    common(p)
    p.add_argument("--algo", choices=("linear", "quadratic", "oracle"), default="linear")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("test-min", help="is S a suffixient set of minimum size?")
    common(p)
    p.set_defaults(func=cmd_test_min)

    p = sub.add_parser("build-min", help="print a smallest suffixient set (brute force)")
    common(p, with_set=False)
    p.set_defaults(func=cmd_build_min)

    p = sub.add_parser("stats", help="n, sigma, BWT runs and chi")
    common(p, with_set=False)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gen", help="write a synthetic text to standard output")
    p.add_argument("--kind", choices=("random", "fibonacci", "periodic"), default="random")
    p.add_argument("--n", type=int)
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    logging.basicConfig(format="%(name)s: warning: %(message)s", level=logging.WARNING)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SuffixientError, FileNotFoundError) as exc:
        print(f"suffixient: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
