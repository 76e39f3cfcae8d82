"""Command-line front end.

    bhfix validate --system phi --base fin:2 "p[_](0)+p[_](0)"
    bhfix cmp --system w --base fin:2 "w^0" "w^1"
    bhfix theta --system phi --base fin:2 "xpair(0,0)"
    bhfix verify --suite collapse --system gamma --base fin:1 --max-len 3

Exit status is 0 on success, 1 when a verification suite fails and 2 on
usage, parse or validity errors.  Diagnostics go to stderr as
``error[<code>]: <message>``.  With ``--format structured`` every result
is a single JSON object per line with a fixed key order.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .base import BaseOrder
from .collapse import SYSTEM_OF, TAG_OF, self_embedding, theta
from .enumeration import EnumSpec, enumerate_terms
from .errors import NotationError, UsageError
from .harness import SUITES, format_report
from .syntax import parse_telem, parse_term_with_notices, print_term
from .systems import SYSTEMS, get_system

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_LEN = 3
DEFAULT_MAX_Y = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--system", choices=sorted(SYSTEMS), help="notation system")
    common.add_argument("--base", default="fin:2", help="base order: fin:N or omega (default fin:2)")
    common.add_argument("--format", choices=("text", "structured"), default="text")

    parser = _Parser(prog="bhfix", description="Relativized ordinal notation systems and their collapses.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="parse a term and print its canonical form")
    p.add_argument("term")
    p = sub.add_parser("cmp", parents=[common], help="compare two terms, printing <, = or >")
    p.add_argument("left")
    p.add_argument("right")
    p = sub.add_parser("add", parents=[common], help="ordinal sum of two terms")
    p.add_argument("left")
    p.add_argument("right")
    p = sub.add_parser("mul", parents=[common],
                       help="ω^a · t (for w2 the exponent a is a term of w)")
    p.add_argument("exponent")
    p.add_argument("term")
    p = sub.add_parser("succ", parents=[common], help="successor t+1")
    p.add_argument("term")
    p = sub.add_parser("theta", parents=[common], help="apply the collapse θ to an element of T")
    p.add_argument("element")
    p = sub.add_parser("embed", parents=[common], help="apply the self-embedding f to a term")
    p.add_argument("term")
    p = sub.add_parser("enumerate", parents=[common], help="list all terms up to a length bound")
    p.add_argument("--max-len", type=int, required=True)
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", action="append", required=True, choices=sorted(SUITES),
                   help="suite to run; repeatable")
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    p.add_argument("--max-y", type=int, default=DEFAULT_MAX_Y,
                   help="largest finite Y for the supports suite")
    return parser


def _need_system(args) -> str:
    if args.system is None:
        raise UsageError(f"{args.verb} needs --system")
    return args.system


def _tag(args):
    name = _need_system(args)
    if name not in TAG_OF:
        raise UsageError(f"system {name} has no collapse; use one of {', '.join(sorted(TAG_OF))}")
    return TAG_OF[name]


def _term(args, text: str, system: Optional[str] = None, notices: Optional[list] = None):
    t, found = parse_term_with_notices(system or args.system, args.base, text)
    if notices is not None:
        notices.extend(found)
    return t


def _emit(args, verb: str, text: str, **extra) -> None:
    if args.format == "structured":
        print(json.dumps({"verb": verb, "result": text, **extra}, ensure_ascii=False))
    else:
        print(text)


def _arith(args, name: str):
    system = get_system(_need_system(args))
    op = getattr(system, name)
    if op is None:
        raise UsageError(f"system {system.name} has no {name}")
    return system, op


def dispatch(args) -> int:
    verb = args.verb
    args.base = BaseOrder.parse(args.base)
    if verb == "validate":
        notices: list = []
        t = _term(args, args.term, _need_system(args), notices)
        _emit(args, verb, print_term(args.system, t), notices=notices)
    elif verb == "cmp":
        system = get_system(_need_system(args))
        c = system.compare(_term(args, args.left), _term(args, args.right))
        _emit(args, verb, "<" if c < 0 else ">" if c > 0 else "=")
    elif verb == "add":
        system, op = _arith(args, "add")
        _emit(args, verb, print_term(system.name, op(_term(args, args.left), _term(args, args.right))))
    elif verb == "succ":
        system, op = _arith(args, "succ")
        _emit(args, verb, print_term(system.name, op(_term(args, args.term))))
    elif verb == "mul":
        system, op = _arith(args, "mul")
        exp_system = "w" if system.name == "w2" else system.name
        a = _term(args, args.exponent, exp_system)
        _emit(args, verb, print_term(system.name, op(a, _term(args, args.term))))
    elif verb == "theta":
        tag = _tag(args)
        e = parse_telem(tag, args.base, args.element)
        _emit(args, verb, print_term(SYSTEM_OF[tag], theta(tag, args.base, e)))
    elif verb == "embed":
        tag = _tag(args)
        f = self_embedding(tag, args.base)
        _emit(args, verb, print_term(SYSTEM_OF[tag], f(_term(args, args.term))))
    elif verb == "enumerate":
        name = _need_system(args)
        terms = enumerate_terms(EnumSpec(name, args.base, args.max_len))
        shown = [print_term(name, t) for t in terms]
        if args.format == "structured":
            print(json.dumps({"verb": verb, "count": len(shown), "result": shown}, ensure_ascii=False))
        else:
            print("\n".join(shown))
    elif verb == "verify":
        if args.system is None and any(s not in ("cross-embedding", "diagnostics") for s in args.suite):
            raise UsageError("verify needs --system for this suite")
        results = [SUITES[s](args) for s in args.suite]
        print(format_report(results, args.format))
        return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return dispatch(args)
    except NotationError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
