"""Command-line front end.

Every command prints a deterministic report; `--json` emits a versioned
machine-readable document, `--csv` a flat projection of the same records.
Exit codes: 0 success, 1 selftest mismatch, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from itertools import combinations

from . import __version__, errors
from .green import (
    green_characterized,
    green_oracle,
    is_regular_characterized,
    is_regular_oracle,
)
from .iso import bruteforce_isomorphism, decide_isomorphic
from .rank import deletion_test, semigroup_rank, top_rank_factorization
from .semigroup import RangeContext, cardinality_formula, closure, enumerate_semigroup
from .transform import PartialInjection

SCHEMA = 1


def _parse_points(text: str) -> tuple[int, ...]:
    try:
        pts = [int(p) for p in text.split(",") if p != ""]
    except ValueError:
        raise errors.BadParameters("point list %r is not comma-separated integers" % text)
    if len(pts) != len(set(pts)):
        raise errors.BadParameters("point list %r has duplicates" % text)
    return tuple(sorted(pts))


def _fmt_elem(a: PartialInjection) -> str:
    if a.is_empty():
        return "empty"
    return " ".join("%d>%d" % (x, a(x)) for x in a.domain)


def _elem_record(i: int, a: PartialInjection) -> dict:
    return {
        "index": i,
        "rank": a.rank,
        "domain": list(a.domain),
        "image": list(a.image_seq),
    }


def _emit(args, report: dict, records: list[dict] | None = None) -> None:
    """Write the report; records drive the CSV projection when given."""
    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    elif args.format == "csv":
        rows = records if records is not None else [_flatten(report)]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        for row in rows:
            writer.writerow(
                {k: (",".join(map(str, v)) if isinstance(v, list) else v) for k, v in row.items()}
            )
        text = buf.getvalue()
    else:
        text = _text_report(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _flatten(report: dict) -> dict:
    flat = {}
    for k, v in report.items():
        if isinstance(v, dict):
            for k2, v2 in v.items():
                flat["%s.%s" % (k, k2)] = v2
        elif not isinstance(v, list):
            flat[k] = v
    return flat


def _text_report(report: dict, indent: str = "") -> str:
    lines = []
    for k, v in report.items():
        if isinstance(v, dict):
            lines.append("%s%s:" % (indent, k))
            lines.append(_text_report(v, indent + "  ").rstrip("\n"))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append("%s%s:" % (indent, k))
            for row in v:
                lines.append(
                    indent + "  " + "  ".join("%s=%s" % (k2, v2) for k2, v2 in row.items())
                )
        else:
            lines.append("%s%s: %s" % (indent, k, v))
    return "\n".join(lines) + "\n"


def _base_report(command: str, config: dict) -> dict:
    return {
        "schema": SCHEMA,
        "version": __version__,
        "command": command,
        "config": config,
    }


# -- commands ---------------------------------------------------------------


def cmd_enumerate(args) -> int:
    ctx = RangeContext(args.n, _parse_points(args.y))
    S = enumerate_semigroup(ctx)
    records = [_elem_record(i, a) for i, a in enumerate(S)]
    report = _base_report("enumerate", {"n": ctx.n, "y": list(ctx.points)})
    report["count"] = len(S)
    report["elements"] = records
    _emit(args, report, records)
    return 0


def cmd_card(args) -> int:
    if args.y is not None:
        pts = _parse_points(args.y)
    elif args.r is not None:
        pts = tuple(range(1, args.r + 1))
    else:
        raise errors.BadParameters("card needs --y or --r")
    ctx = RangeContext(args.n, pts)
    formula = cardinality_formula(ctx.n, ctx.r)
    enumerated = len(enumerate_semigroup(ctx))
    report = _base_report("card", {"n": ctx.n, "y": list(ctx.points)})
    report.update(
        {"formula": formula, "enumerated": enumerated, "match": formula == enumerated}
    )
    _emit(args, report)
    return 0


def cmd_green(args) -> int:
    ctx = RangeContext(args.n, _parse_points(args.y))
    S = enumerate_semigroup(ctx)
    part = green_characterized(ctx, S, args.rel)
    report = _base_report(
        "green", {"n": ctx.n, "y": list(ctx.points), "rel": args.rel, "check": args.check}
    )
    report["class_count"] = len(part.classes)
    report["class_sizes"] = [len(c) for c in part.classes]
    if args.check:
        oracle = green_oracle(S, args.rel)
        report["oracle_agrees"] = part.same_partition(oracle)
    _emit(args, report)
    return 0


def cmd_rank(args) -> int:
    ctx = RangeContext(args.n, _parse_points(args.y))
    cert = semigroup_rank(ctx)
    S = enumerate_semigroup(ctx)
    closed = closure(ctx, list(cert.generating_set))
    deletions = deletion_test(ctx, list(cert.generating_set))
    report = _base_report("rank", {"n": ctx.n, "y": list(ctx.points)})
    report["claimed_rank"] = cert.claimed_rank
    report["generators"] = [_fmt_elem(a) for a in cert.generating_set]
    report["closure_ok"] = len(closed) == len(S)
    report["deletion_test"] = (
        "all-shrink" if all(deletions) else "kept:" + ",".join(
            str(i) for i, d in enumerate(deletions) if not d
        )
    )
    _emit(args, report)
    return 0


def cmd_iso(args) -> int:
    y = _parse_points(args.y)
    z = _parse_points(args.z)
    witness = decide_isomorphic(args.n, y, z)
    report = _base_report("iso", {"n": args.n, "y": list(y), "z": list(z)})
    report["verdict"] = witness.verdict
    report["reason"] = witness.reason
    if witness.delta is not None:
        report["delta"] = _fmt_elem(witness.delta)
    if args.oracle:
        S = enumerate_semigroup(RangeContext(args.n, y))
        T = enumerate_semigroup(RangeContext(args.n, z))
        found = bruteforce_isomorphism(S, T)
        report["oracle"] = found is not None
        report["agree"] = (found is not None) == witness.verdict
        if found is not None:
            report["element_map"] = [[i, j] for i, j in sorted(found.items())]
    _emit(args, report)
    return 0


def cmd_decompose(args) -> int:
    ctx = RangeContext(args.n, _parse_points(args.y))
    elem = PartialInjection.from_json_dict(json.loads(args.element))
    steps: list = []
    factors = top_rank_factorization(ctx, elem, steps)
    report = _base_report(
        "decompose", {"n": ctx.n, "y": list(ctx.points), "element": _fmt_elem(elem)}
    )
    report["factors"] = [_fmt_elem(f) for f in factors]
    report["steps"] = [
        {
            "op": s["op"],
            "case": s["case"] or "",
            "shift": s["shift"],
            "input": _fmt_elem(s["input"]),
            "beta": _fmt_elem(s["beta"]),
            "gamma": _fmt_elem(s["gamma"]),
        }
        for s in steps
    ]
    _emit(args, report, report["steps"] or None)
    return 0


def cmd_selftest(args) -> int:
    failures = []
    for n in range(1, args.max_n + 1):
        for size in range(1, n + 1):
            for pts in combinations(range(1, n + 1), size):
                ctx = RangeContext(n, pts)
                S = enumerate_semigroup(ctx)
                if len(S) != cardinality_formula(n, ctx.r):
                    failures.append("cardinality n=%d y=%s" % (n, pts))
                for i in range(len(S)):
                    if is_regular_oracle(S, i) != is_regular_characterized(ctx, S[i]):
                        failures.append("regularity n=%d y=%s i=%d" % (n, pts, i))
                        break
                for rel in ("L", "R", "H", "D"):
                    if not green_characterized(ctx, S, rel).same_partition(
                        green_oracle(S, rel)
                    ):
                        failures.append("green-%s n=%d y=%s" % (rel, n, pts))
    report = _base_report("selftest", {"max_n": args.max_n})
    report["failures"] = failures
    report["ok"] = not failures
    _emit(args, report)
    return 0 if not failures else 1


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="popi",
        description="Orientation-preserving partial injections with restricted range.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_y=True):
        p.add_argument("--n", type=int, required=True)
        if need_y:
            p.add_argument("--y", type=str, required=True, help="comma-separated points")
        p.add_argument(
            "--json", dest="format", action="store_const", const="json", default="text"
        )
        p.add_argument("--csv", dest="format", action="store_const", const="csv")
        p.add_argument("--out", type=str, default=None)

    p = sub.add_parser("enumerate", help="list every element")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("card", help="formula vs enumerated count")
    common(p, need_y=False)
    p.add_argument("--y", type=str, default=None)
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(func=cmd_card)

    p = sub.add_parser("green", help="Green's relation classes")
    common(p)
    p.add_argument("--rel", choices=["L", "R", "H", "D"], required=True)
    p.add_argument("--check", action="store_true", help="compare against the oracle")
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("rank", help="rank certificate")
    common(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("iso", help="isomorphism decision")
    common(p)
    p.add_argument("--z", type=str, required=True)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force search")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("decompose", help="factor an element into top-rank products")
    common(p)
    p.add_argument("--element", type=str, required=True, help='e.g. {"n":3,"pairs":[[3,1]]}')
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("selftest", help="oracle-vs-characterization sweep")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument(
        "--json", dest="format", action="store_const", const="json", default="text"
    )
    p.add_argument("--csv", dest="format", action="store_const", const="csv")
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except errors.PopiError as exc:
        sys.stderr.write("error: %s: %s\n" % (type(exc).__name__, exc))
        return 2
    except (ValueError, KeyError) as exc:
        sys.stderr.write("error: %s: %s\n" % (type(exc).__name__, exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
