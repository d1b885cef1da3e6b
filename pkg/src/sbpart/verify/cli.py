"""Command line front end: ``sbpart <command> ...``.

Exit status is 0 on success, 1 when a counterexample is found, 2 on bad usage
or malformed input.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from .. import bijmaps, srgf, typea, typeb
from ..errors import InvalidPartition, InvalidWord, LimitExceeded
from .cache import DistributionCache, default_cache_dir
from .claims import CLAIMS, COUNTEREXAMPLE, check, dualmaj_scan, format_scan
from .distribution import ALIASES, FAMILIES, DistributionKey, distribution, statistic

MAPS = ("foata", "srgf-encode", "srgf-decode", "matrix", "complement", "f")


class UsageError(Exception):
    pass


def _cache(args) -> DistributionCache | None:
    if getattr(args, "no_cache", True):
        return None
    return DistributionCache(args.cache_dir or default_cache_dir())


def _add_engine_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--workers", type=int, default=1, help="processes for enumeration fan-out")
    p.add_argument("--no-cache", action="store_true", help="recompute instead of reading the cache")
    p.add_argument("--cache-dir", default=None, help="cache directory (default: ~/.cache/sbpart)")
    p.add_argument("--limit", type=int, default=None,
                   help="override the enumeration ceiling on n (logs a warning)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sbpart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list partitions")
    p.add_argument("--family", choices=FAMILIES, default="standard")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="number of pairs (blocks for type A); all if omitted")
    p.add_argument("--ordered", action="store_true", help="all block orderings")

    p = sub.add_parser("stat", help="evaluate one statistic on one partition")
    p.add_argument("--which", required=True)
    p.add_argument("--partition", required=True)

    p = sub.add_parser("dist", help="generating polynomial of a statistic")
    p.add_argument("--family", choices=FAMILIES, default="standard")
    p.add_argument("--which", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    _add_engine_flags(p)

    p = sub.add_parser("map", help="apply a bijection or involution")
    p.add_argument("--which", choices=MAPS, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="check claims exhaustively")
    p.add_argument("--claim", required=True, help="claim id or 'all'")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--report", default=None, help="write JSON report here")
    p.add_argument("-v", "--verbose", action="store_true", help="print observed distributions")
    _add_engine_flags(p)

    p = sub.add_parser("scan-dualmaj", help="dual major index vs recurrence, every reading")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--report", default=None)
    _add_engine_flags(p)

    p = sub.add_parser("srgf", help="signed restricted growth words")
    p.add_argument("verb", choices=("encode", "decode", "validate", "vector"))
    p.add_argument("input", help="partition text (encode) or comma-separated word")
    p.add_argument("--which", choices=srgf.VECTORS, default=None)
    return parser


def _is_type_a(text: str) -> bool:
    tokens = text.replace("/", " ").split()
    return "0" not in tokens and all(t.lstrip().isdigit() for t in tokens)


def _enumerate(args) -> int:
    fam = args.family
    if args.ordered:
        fam = "typeA-ordered" if fam.startswith("typeA") else "ordered"
    ks = range(args.n + 1) if args.k is None else [args.k]
    for k in ks:
        if fam == "standard":
            stream = typeb.enumerate_b(args.n, k)
        elif fam == "ordered":
            stream = typeb.enumerate_b(args.n, k, ordered=True)
        else:
            stream = typea.enumerate_a(args.n, k, ordered=fam == "typeA-ordered")
        for p in stream:
            print(p)
    return 0


def _stat(args) -> int:
    text = args.partition
    which = ALIASES.get(args.which, args.which)
    if _is_type_a(text):
        p = typea.parse_partition_a(text)
        fam = "typeA-standard" if p.standard_form else "typeA-ordered"
    else:
        p = typeb.parse_partition(text)
        fam = "standard" if p.standard_form else "ordered"
    if which == "inv" and fam == "ordered":
        value = typeb.stat_b(p, "ros")
    else:
        value = statistic(fam, which)(p)
    print(value)
    return 0


def _dist(args) -> int:
    key = DistributionKey(args.family, args.which, args.n, args.k)
    poly = distribution(key, cache=_cache(args), workers=args.workers, limit=args.limit)
    if args.json:
        print(json.dumps(poly.to_json()))
    elif args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["power", "coefficient"])
        w.writerows(poly.to_csv_rows())
    else:
        print(poly)
    return 0


def _map(args) -> int:
    which, text = args.which, args.input
    if which == "srgf-decode":
        out = srgf.decode(srgf.parse_word(text))
    else:
        p = typeb.parse_partition(text)
        if which == "foata":
            out = bijmaps.foata(p)
        elif which == "srgf-encode":
            out = srgf.encode(p)
        elif which == "matrix":
            m = bijmaps.reduced_matrix(p)
            print(json.dumps(m.to_json()) if args.json else m)
            return 0
        elif which == "complement":
            out = typeb.complement(p)
        else:
            out = typeb.f_map(p)
    print(json.dumps(str(out)) if args.json else out)
    return 0


def _write_report(path: str | None, payload) -> None:
    if path:
        Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def _verify(args) -> int:
    ids = sorted(CLAIMS) if args.claim == "all" else [args.claim]
    for cid in ids:
        if cid not in CLAIMS:
            raise UsageError(f"unknown claim {cid!r}; expected 'all' or one of {', '.join(sorted(CLAIMS))}")
    cache = _cache(args)
    reports = []
    for cid in ids:
        rep = check(cid, args.max_n, args.max_k, cache=cache, workers=args.workers, limit=args.limit)
        reports.append(rep)
        print(rep.summary())
        if args.verbose:
            for nk, values in rep.observed.get("distributions", {}).items():
                for quantity, value in values.items():
                    print(f"  (n,k)=({nk}) {quantity}: {value}")
    payload = [r.to_json() for r in reports]
    _write_report(args.report, payload[0] if len(payload) == 1 else payload)
    return 1 if any(r.verdict == COUNTEREXAMPLE for r in reports) else 0


def _scan(args) -> int:
    rep = dualmaj_scan(args.max_n, cache=_cache(args), workers=args.workers, limit=args.limit)
    print(format_scan(rep))
    _write_report(args.report, rep.to_json())
    return 0


def _srgf(args) -> int:
    if args.verb == "encode":
        print(srgf.encode(typeb.parse_partition(args.input)))
        return 0
    if args.verb == "validate":
        try:
            word = [int(t) for t in args.input.replace(",", " ").split()]
        except ValueError:
            raise UsageError(f"non-integer letter in {args.input!r}") from None
        clause = srgf.validate(word)
        print("valid" if clause is None else f"violation({clause}): {srgf.CLAUSES[clause]}")
        return 0
    w = srgf.parse_word(args.input)
    if args.verb == "decode":
        print(srgf.decode(w))
        return 0
    if args.which is None:
        raise UsageError("srgf vector needs --which")
    print(",".join(str(d) for d in srgf.stat_vector(w, args.which)))
    return 0


COMMANDS = {
    "enumerate": _enumerate,
    "stat": _stat,
    "dist": _dist,
    "map": _map,
    "verify": _verify,
    "scan-dualmaj": _scan,
    "srgf": _srgf,
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (InvalidPartition, InvalidWord, LimitExceeded, UsageError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"sbpart: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
