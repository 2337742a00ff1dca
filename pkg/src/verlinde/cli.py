"""Command-line front end.

Group specs are ``sl:<r>`` for SL_r (r >= 2) and ``spin:<m>`` for Spin_m
(m >= 3).  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import core, heights, identities, prym
from .errors import ResourceBoundError

SCHEMA_VERSION = 1
DEFAULT_MAX_TERMS = 2_000_000

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

GROUP_HELP = (
    "group spec: sl:<r> is SL_r with r >= 2 (rank r-1); spin:<m> is Spin_m with m >= 3 "
    "(spin:2n+1 is type B_n, spin:2n is type D_n; spin:3 is evaluated as sl:2)"
)


class UsageError(Exception):
    pass


def parse_group(spec: str) -> core.GroupId:
    family, _, rank = spec.partition(":")
    try:
        value = int(rank)
    except ValueError:
        raise UsageError(f"malformed group spec {spec!r}; expected sl:<r> or spin:<m>") from None
    try:
        if family == "sl":
            return core.GroupId.sl(value)
        if family == "spin":
            if value < 3:
                raise ValueError("spin:<m> needs m >= 3")
            return core.GroupId.spin(value)
    except ValueError as exc:
        raise UsageError(f"invalid group spec {spec!r}: {exc}") from None
    raise UsageError(f"malformed group spec {spec!r}; expected sl:<r> or spin:<m>")


# result cache


def default_cache_path() -> Path:
    env = os.environ.get("VERLINDE_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "verlinde" / "values.jsonl"


class ResultCache:
    """Append-only JSON-lines store keyed by (group, level, genus).

    Each record is written as one complete line, so an interrupted run can at
    worst leave a trailing partial line, which is skipped on load.
    """

    def __init__(self, path: Path):
        self.path = Path(path)
        self._values: Optional[Dict[Tuple[str, int, int], int]] = None

    def _load(self) -> Dict[Tuple[str, int, int], int]:
        if self._values is None:
            self._values = {}
            if self.path.exists():
                with self.path.open(encoding="utf-8") as fh:
                    for line in fh:
                        try:
                            rec = json.loads(line)
                            key = (rec["group"], int(rec["level"]), int(rec["genus"]))
                            self._values[key] = int(rec["value"])
                        except (ValueError, KeyError, TypeError):
                            continue
        return self._values

    def get(self, group: str, level: int, genus: int) -> Optional[int]:
        return self._load().get((group, level, genus))

    def put(self, group: str, level: int, genus: int, value: int) -> None:
        values = self._load()
        key = (group, level, genus)
        if key in values:
            return
        values[key] = value
        self.path.parent.mkdir(parents=True, exist_ok=True)
        line = json.dumps(
            {"group": group, "level": level, "genus": genus, "value": str(value)},
            sort_keys=True,
        )
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(line + "\n")


# output


def emit(records: List[Dict[str, object]], fmt: str, fields: Sequence[str], out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        body = [{**r, "schema_version": SCHEMA_VERSION} for r in records]
        payload = body[0] if len(body) == 1 else body
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(fields), extrasaction="ignore",
                                lineterminator="\n")
        writer.writeheader()
        for r in records:
            writer.writerow(r)
        out.write(buf.getvalue())
    else:
        for r in records:
            out.write(" ".join(str(r[f]) for f in fields if f in r and f.startswith("value")) + "\n")


# commands


def _compute_value(group, level, genus, args) -> int:
    q = core.VerlindeQuery(group, level, genus)
    cache = None if args.no_cache else ResultCache(args.cache or default_cache_path())
    if cache is not None:
        hit = cache.get(group.tag, level, genus)
        if hit is not None:
            return hit
    value = core.verlinde_number(q, max_terms=args.max_terms)
    if cache is not None:
        cache.put(group.tag, level, genus, value)
    return value


def cmd_compute(args) -> int:
    group = parse_group(args.group)
    value = _compute_value(group, args.level, args.genus, args)
    rec = {"group": group.tag, "level": args.level, "genus": args.genus, "value": str(value)}
    emit([rec], args.format, ["group", "level", "genus", "value"])
    return EXIT_OK


def cmd_split(args) -> int:
    group = parse_group(args.group)
    if group.family != core.SPIN_ODD:
        raise UsageError("split is defined only for spin:<m> with m odd")
    plus, minus = core.verlinde_split(
        core.VerlindeQuery(group, args.level, args.genus), max_terms=args.max_terms)
    rec = {"group": group.tag, "level": args.level, "genus": args.genus,
           "value_plus": str(plus), "value_minus": str(minus)}
    emit([rec], args.format, ["group", "level", "genus", "value_plus", "value_minus"])
    return EXIT_OK


def cmd_table(args) -> int:
    group = parse_group(args.group)
    records = []
    for level in range(args.level_min, args.level_max + 1):
        for genus in range(args.genus_min, args.genus_max + 1):
            value = _compute_value(group, level, genus, args)
            records.append({"group": group.tag, "level": level, "genus": genus,
                            "value": str(value)})
    fields = ["group", "level", "genus", "value"]
    if args.format == "text":
        for r in records:
            print(f"{r['group']}\tlevel={r['level']}\tgenus={r['genus']}\t{r['value']}")
    elif args.format == "json":
        print(json.dumps([{**r, "schema_version": SCHEMA_VERSION} for r in records],
                         sort_keys=True))
    else:
        emit(records, "csv", fields)
    return EXIT_OK


def cmd_theta(args) -> int:
    value = prym.theta_dim(args.genus, args.level, args.parity)
    emit([{"genus": args.genus, "level": args.level, "parity": args.parity,
           "value": str(value)}], args.format, ["genus", "level", "parity", "value"])
    return EXIT_OK


def cmd_prym_sum(args) -> int:
    value = prym.prym_sum(args.genus, args.level, args.parity)
    emit([{"genus": args.genus, "level": args.level, "parity": args.parity,
           "value": str(value)}], args.format, ["genus", "level", "parity", "value"])
    return EXIT_OK


def cmd_height(args) -> int:
    group = parse_group(args.group)
    try:
        value = heights.integral_height(group, args.rep)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    emit([{"group": group.tag, "rep": args.rep, "value": str(value)}], args.format,
         ["group", "rep", "value"])
    return EXIT_OK


def _parse_pairs(text: Optional[str]) -> Optional[Tuple[Tuple[int, int], ...]]:
    if not text:
        return None
    pairs = []
    for chunk in text.split(";"):
        try:
            l, m = (int(x) for x in chunk.split(","))
        except ValueError:
            raise UsageError(f"malformed pair {chunk!r}; expected l,m") from None
        if l % 2 == 0 or m % 2 == 0:
            raise UsageError(f"reciprocity pairs must be odd, got {chunk!r}")
        pairs.append((l, m))
    return tuple(pairs)


def cmd_verify(args) -> int:
    suites = identities.SUITES if args.suite == "all" else (args.suite,)
    config = identities.SuiteConfig(
        genus_max=args.genus_max,
        rank_max=args.rank_max,
        level_max=args.level_max,
        suites=suites,
        clifford_samples=args.samples,
        seed=args.seed,
        reciprocity_pairs=_parse_pairs(args.pairs),
    )
    result = identities.run_all(config)
    if args.format == "json":
        print(json.dumps([{**r.to_dict(args.timings), "schema_version": SCHEMA_VERSION}
                          for r in result.reports], indent=2, sort_keys=True))
    elif args.format == "csv":
        fields = ["name", "parameters", "lhs", "rhs", "status"]
        if args.timings:
            fields.append("elapsed_ms")
        writer = csv.DictWriter(sys.stdout, fieldnames=fields, extrasaction="ignore",
                                lineterminator="\n")
        writer.writeheader()
        for r in result.reports:
            row = r.to_dict(args.timings)
            row["parameters"] = json.dumps(r.parameters, sort_keys=True)
            writer.writerow(row)
    else:
        for r in result.reports:
            params = ", ".join(f"{k}={v}" for k, v in r.parameters.items())
            line = f"{r.status.upper():4}  {r.name}({params})  lhs={r.lhs} rhs={r.rhs}"
            if args.timings:
                line += f"  [{r.elapsed_ms:.1f} ms]"
            print(line)
        npass = sum(r.passed for r in result.reports)
        print(f"{npass}/{len(result.reports)} checks passed")
    return EXIT_OK if result.passed else EXIT_FAIL


# argument parsing


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verlinde",
        description="Exact Verlinde numbers, heights, Prym theta counts and identity checks.",
        epilog=GROUP_HELP,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json", "csv")):
        p.add_argument("--format", choices=choices, default="text")

    def cache_opts(p):
        p.add_argument("--cache", type=Path, help="cache file (default: $VERLINDE_CACHE)")
        p.add_argument("--no-cache", action="store_true", help="bypass the result cache")
        p.add_argument("--max-terms", type=_positive, default=DEFAULT_MAX_TERMS,
                       help="refuse queries with more weight vectors than this")

    p = sub.add_parser("compute", help="one Verlinde number N_l(G)", epilog=GROUP_HELP)
    p.add_argument("--group", required=True, help="sl:<r> or spin:<m>")
    p.add_argument("--level", type=_positive, required=True)
    p.add_argument("--genus", type=_positive, required=True)
    fmt(p)
    cache_opts(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("split", help="(N+, N-) for an odd spin group", epilog=GROUP_HELP)
    p.add_argument("--group", required=True, help="spin:<m> with m odd")
    p.add_argument("--level", type=_positive, required=True)
    p.add_argument("--genus", type=_positive, required=True)
    fmt(p)
    p.add_argument("--max-terms", type=_positive, default=DEFAULT_MAX_TERMS)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("table", help="Verlinde numbers over ranges of level and genus",
                       epilog=GROUP_HELP)
    p.add_argument("--group", required=True)
    p.add_argument("--level-min", type=_positive, default=1)
    p.add_argument("--level-max", type=_positive, default=4)
    p.add_argument("--genus-min", type=_positive, default=1)
    p.add_argument("--genus-max", type=_positive, default=4)
    fmt(p)
    cache_opts(p)
    p.set_defaults(func=cmd_table)

    for name, func, helptext in (
        ("theta", cmd_theta, "even/odd theta functions of level m on a ppav of dimension g"),
        ("prym-sum", cmd_prym_sum, "theta counts summed over the Jacobian and all Pryms"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--genus", type=_positive, required=True)
        p.add_argument("--level", type=_positive, required=True)
        p.add_argument("--parity", choices=prym.PARITIES, default="total")
        fmt(p)
        p.set_defaults(func=func)

    p = sub.add_parser("height", help="height m_V of a representation", epilog=GROUP_HELP)
    p.add_argument("--group", required=True)
    p.add_argument("--rep", choices=heights.REPS, required=True)
    fmt(p)
    p.set_defaults(func=cmd_height)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--suite", choices=("all",) + identities.SUITES, default="all")
    p.add_argument("--genus-max", type=int, default=4)
    p.add_argument("--rank-max", type=int, default=9)
    p.add_argument("--level-max", type=int, default=7)
    p.add_argument("--pairs", help="reciprocity pairs, e.g. '5,7;5,9'")
    p.add_argument("--samples", type=int, default=50, help="random samples per Clifford law")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true", help="include per-check timings")
    fmt(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"verlinde: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBoundError as exc:
        print(f"verlinde: resource bound: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
