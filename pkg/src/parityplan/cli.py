"""Command line front end.

Subcommands: construct, verify, answer, decode, simulate, bounds,
baseline. Structured output is canonical JSON (sorted keys, 2-space
indent); identical inputs produce byte-identical files. Timings go to
stderr only. Exit codes: 0 success / property holds, 1 property fails
with a witness or a simulated decode mismatches, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Optional

from . import construction, decode, verify
from .f2linalg import BitVector
from .verify import DEFAULT_WORK_CAP, WorkCapExceeded


def _canonical(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _parse_marked(text: str) -> list[int]:
    """Comma-separated 1-based indices; empty string is the empty set."""
    text = text.strip()
    if not text:
        return []
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            out.append(int(part))
        except ValueError:
            raise ValueError(f"marked set entry {part!r} is not an integer") from None
    return out


def _cmd_construct(args: argparse.Namespace) -> int:
    plan = construction.build_query_plan(args.n, args.d, m=args.m)
    construction.save_plan(plan, args.out)
    assert plan.field is not None
    print(f"m={plan.field.m} dm={plan.d * plan.field.m} f={plan.f}")
    print(f"plan written to {args.out}")
    if plan.in_guaranteed_range is False:
        print(
            f"note: n={plan.n} < d*m={plan.d * plan.field.m}; "
            "singleton queries would be cheaper in this range",
            file=sys.stderr,
        )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    plan = construction.load_plan(args.plan)
    witness = verify.separating_witness(plan, plan.d, work_cap=args.work_cap)
    if witness is None:
        print("SEPARATING")
        return 0
    first, second = witness
    print("NOT SEPARATING")
    print(_canonical({"X": list(first), "Y": list(second)}), end="")
    return 1


def _cmd_answer(args: argparse.Namespace) -> int:
    plan = construction.load_plan(args.plan)
    marked = decode.normalize_marked(_parse_marked(args.marked), plan.n)
    syndrome = decode.answer_queries(plan, marked)
    print(syndrome.to_string())
    if args.out:
        _write_text(
            args.out,
            _canonical({"marked": list(marked), "n": plan.n, "syndrome": syndrome.to_string()}),
        )
    return 0


def _run_decoder(plan, syndrome: BitVector, which: str, work_cap: int):
    if which == "algebraic":
        return decode.decode_algebraic(plan, syndrome)
    return decode.decode_brute(plan, syndrome, work_cap=work_cap)


def _cmd_decode(args: argparse.Namespace) -> int:
    plan = construction.load_plan(args.plan)
    syndrome = BitVector.from_string(args.syndrome)
    if syndrome.length != plan.f:
        raise ValueError(f"syndrome length {syndrome.length} does not match f={plan.f}")
    result = _run_decoder(plan, syndrome, args.decoder, args.work_cap)
    payload = {
        "decoded": list(result) if result is not None else None,
        "decoder": args.decoder,
        "syndrome": syndrome.to_string(),
    }
    print(_canonical(payload), end="")
    if args.out:
        _write_text(args.out, _canonical(payload))
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    plan = construction.load_plan(args.plan)
    if args.marked is not None:
        hidden = decode.normalize_marked(_parse_marked(args.marked), plan.n)
        if len(hidden) > plan.d:
            print(
                f"note: hidden set has {len(hidden)} items, above d={plan.d}; "
                "decoding is expected to fail or mismatch",
                file=sys.stderr,
            )
    else:
        rng = random.Random(args.seed)
        size = rng.randint(0, min(plan.d, plan.n))
        hidden = tuple(sorted(rng.sample(range(1, plan.n + 1), size)))
    t0 = time.perf_counter()
    syndrome = decode.answer_queries(plan, hidden)
    t1 = time.perf_counter()
    result = _run_decoder(plan, syndrome, args.decoder, args.work_cap)
    t2 = time.perf_counter()
    record = {
        "d": plan.d,
        "decoded": list(result) if result is not None else None,
        "decoder": args.decoder,
        "hidden": list(hidden),
        "match": result == hidden,
        "n": plan.n,
        "plan": args.plan,
        "seed": args.seed,
        "syndrome": syndrome.to_string(),
    }
    print(_canonical(record), end="")
    print(f"timings: answer={t1 - t0:.6f}s decode={t2 - t1:.6f}s", file=sys.stderr)
    if args.out:
        _write_text(args.out, _canonical(record))
    return 0 if record["match"] else 1


def _cmd_bounds(args: argparse.Namespace) -> int:
    report = verify.bounds_report(args.n, args.d)
    print(f"{'n':>8} {'d':>4} {'lower':>6} {'constructed':>12} {'gap':>4}")
    print(f"{report.n:>8} {report.d:>4} {report.lower:>6} {report.constructed:>12} {report.gap:>4}")
    if args.out:
        _write_text(args.out, _canonical(report.as_dict()))
    return 0


def _cmd_baseline(args: argparse.Namespace) -> int:
    result = verify.baseline_search(
        args.n,
        args.d,
        seed=args.seed,
        trials_per_f=args.trials,
        max_f=args.max_f,
        work_cap=args.work_cap,
    )
    constructed = verify.bounds_report(args.n, args.d).constructed
    print(f"{'f':>4} {'trials':>7} {'successes':>10}")
    for st in result.per_f:
        print(f"{st.f:>4} {st.trials:>7} {st.successes:>10}")
    print(f"random plans reach f={result.f_found}; construction gives f={constructed}")
    if args.out:
        payload = result.as_dict()
        payload["constructed"] = constructed
        _write_text(args.out, _canonical(payload))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parityplan",
        description="Construct, certify and decode parity query plans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_work_cap(p):
        p.add_argument(
            "--work-cap",
            type=int,
            default=DEFAULT_WORK_CAP,
            help="nominal subset-evaluation budget for brute-force steps",
        )

    p = sub.add_parser("construct", help="build a plan and write it to a file")
    p.add_argument("--n", type=int, required=True, help="number of items")
    p.add_argument("--d", type=int, required=True, help="maximum number of marked items")
    p.add_argument("--m", type=int, default=None, help="field degree override (upward only)")
    p.add_argument("--out", required=True, help="output plan file")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("verify", help="certify the separating property by enumeration")
    p.add_argument("--plan", required=True, help="plan file")
    add_work_cap(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("answer", help="compute the answer vector for a marked set")
    p.add_argument("--plan", required=True, help="plan file")
    p.add_argument("--marked", required=True, help="comma-separated 1-based indices ('' for empty)")
    p.add_argument("--out", default=None, help="optional JSON output file")
    p.set_defaults(handler=_cmd_answer)

    p = sub.add_parser("decode", help="recover the marked set from an answer vector")
    p.add_argument("--plan", required=True, help="plan file")
    p.add_argument("--syndrome", required=True, help="0/1 answer string, query 1 first")
    p.add_argument("--decoder", choices=("brute", "algebraic"), default="brute")
    p.add_argument("--out", default=None, help="optional JSON output file")
    add_work_cap(p)
    p.set_defaults(handler=_cmd_decode)

    p = sub.add_parser("simulate", help="answer and decode a hidden set end to end")
    p.add_argument("--plan", required=True, help="plan file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--seed", type=int, default=None, help="sample the hidden set")
    group.add_argument("--marked", default=None, help="explicit hidden set, comma-separated")
    p.add_argument("--decoder", choices=("brute", "algebraic"), default="brute")
    p.add_argument("--out", default=None, help="optional JSON record file")
    add_work_cap(p)
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("bounds", help="counting lower bound vs constructed query count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", default=None, help="optional JSON output file")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("baseline", help="random-plan search compared with the construction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=50, help="random plans per query count")
    p.add_argument("--max-f", type=int, default=None, help="stop after this many queries")
    p.add_argument("--out", default=None, help="optional JSON output file")
    add_work_cap(p)
    p.set_defaults(handler=_cmd_baseline)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except WorkCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
