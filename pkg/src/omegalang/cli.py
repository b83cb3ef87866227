"""Command-line interface: membership checks, generation, counting, the
dissection demo, and the oracle cross-check.

Exit codes work as shell predicates: 0 = success or membership, 1 = clean
negative (non-member, empty partition, mismatches found), 2 = usage or
input error.  All verdicts come straight from library calls; this module
only parses arguments and formats output.
"""

from __future__ import annotations

import argparse
import sys

from .core_words import height, parse_word
from .dissection import (
    BUILTIN_LANGUAGES,
    DissectionReport,
    UnaryLanguage,
    dissect_geometric,
    parse_cap,
    parse_ratio,
)
from .grammar_engine import balanced_grammar, enw_grammar, oracle_diff, recognize
from .omega import (
    MAX_ENUM_WORDS,
    MAX_ENUM_Z,
    construct_omega,
    count_omega,
    is_omega,
    iter_omega,
)
from .recognizers import catalan, enumerate_enw, is_balanced, is_enw

CHECKERS = {
    "enw": is_enw,
    "balanced": is_balanced,
    "omega": is_omega,
    "grammar-enw": lambda w: recognize(enw_grammar(), w).accepted,
    "grammar-balanced": lambda w: recognize(balanced_grammar(), w).accepted,
}


def cmd_check(args) -> int:
    w = parse_word(args.word)
    member = CHECKERS[args.lang](w)
    if not member:
        print("non-member")
        return 1
    if args.lang == "omega":
        print(f"height={height(w)} z={w.count('z')}")
    else:
        print("member")
    return 0


def cmd_gen(args) -> int:
    if not args.all:
        print(construct_omega(args.n))
        return 0
    if args.n > MAX_ENUM_Z:
        raise ValueError(f"full enumeration supports z-counts 2..{MAX_ENUM_Z}")
    total = count_omega(args.n)
    if total > MAX_ENUM_WORDS:
        raise ValueError(
            f"{total} words with z-count {args.n} exceed the enumeration limit {MAX_ENUM_WORDS}"
        )
    for w in iter_omega(args.n):
        print(w)
    return 0


def cmd_count(args) -> int:
    if args.kind == "enw-leaves":
        if not 2 <= args.value <= 8:
            raise ValueError("leaf counts 2..8 are supported")
        enumerated = len(enumerate_enw(args.value))
        formula = (1 << args.value) * catalan(args.value - 1)
        print(f"enumerated={enumerated} formula={formula}")
        return 0 if enumerated == formula else 1
    if args.value > MAX_ENUM_Z:
        raise ValueError(f"enumeration supports z-counts 2..{MAX_ENUM_Z}")
    total = count_omega(args.value)
    if total > MAX_ENUM_WORDS:
        raise ValueError(
            f"{total} words with z-count {args.value} exceed the enumeration limit {MAX_ENUM_WORDS}"
        )
    enumerated = sum(1 for _ in iter_omega(args.value))
    print(enumerated)
    return 0 if enumerated == total else 1


def _read_lengths_file(path: str) -> UnaryLanguage:
    lengths = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            text = line.partition("#")[0].strip()
            if not text:
                continue
            try:
                lengths.append(int(text))
            except ValueError:
                raise ValueError(f"lengths file {path}: {text!r} is not a decimal length") from None
    return UnaryLanguage.explicit(lengths)


def _report_table(report: DissectionReport) -> str:
    lines = [
        f"alpha={report.alpha} g={report.g} cap={report.cap}",
        f"in={report.in_count} out={report.out_count}",
        "samples_in=" + ",".join(str(m) for m in report.samples_in),
        "samples_out=" + ",".join(str(m) for m in report.samples_out),
    ]
    return "\n".join(lines)


def cmd_dissect(args) -> int:
    if args.builtin:
        lang = BUILTIN_LANGUAGES[args.builtin]()
    else:
        lang = _read_lengths_file(args.lengths_file)
    report = dissect_geometric(lang, parse_ratio(args.c), parse_cap(args.cap))
    print(report.to_json() if args.json else _report_table(report))
    if report.in_count == 0 or report.out_count == 0:
        print("one partition is empty; raise --cap to see both sides", file=sys.stderr)
        return 1
    return 0


def cmd_oracle_diff(args) -> int:
    mismatches = oracle_diff(args.max_exhaustive, args.random_samples, args.seed)
    print(f"mismatches={len(mismatches)}")
    for w in mismatches[:20]:
        print(f"disagree: {w!r}", file=sys.stderr)
    return 0 if not mismatches else 1


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("omegalang.service.app:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omegalang",
        description="Balanced tree-word languages and unary-language dissection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test membership of a word")
    p.add_argument("lang", choices=sorted(CHECKERS))
    p.add_argument("word")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="emit a member with the given z-count")
    p.add_argument("n", type=int)
    p.add_argument("--all", action="store_true", help="enumerate every member")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count", help="count words by leaves or z-count")
    p.add_argument("kind", choices=["enw-leaves", "omega"])
    p.add_argument("value", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("dissect", help="run the dissection pipeline")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--builtin", choices=sorted(BUILTIN_LANGUAGES))
    group.add_argument("--lengths-file")
    p.add_argument("--c", required=True, help="growth ratio, e.g. 2 or 3/2")
    p.add_argument("--cap", required=True, help="length cap, decimal or a^b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dissect)

    p = sub.add_parser("oracle-diff", help="cross-check recognizers against the chart oracle")
    p.add_argument("max_exhaustive", type=int)
    p.add_argument("random_samples", type=int)
    p.add_argument("seed", type=int)
    p.set_defaults(func=cmd_oracle_diff)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
