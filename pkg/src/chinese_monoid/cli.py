"""Command line interface.

Results go to stdout one per line; diagnostics go to stderr.

Exit codes: 0 success, 1 negative answer (not congruent, not a basis,
completion did not converge), 2 the rewriting and insertion normal forms
disagree, 64 bad usage or unparsable input.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from typing import Sequence, TextIO

from . import __version__
from .gsbasis import CompletionBounds, complete, verify_gs
from .insertion import (
    is_staircase_word,
    staircase_to_word,
    word_to_staircase,
    word_to_staircase_counting,
)
from .oracle import OracleLimitError, all_classes, congruent
from .rewriting import RewriteSystem, chinese_rules, is_irreducible, normalize, normalize_counting
from .ruleio import RuleFileError, format_rules, read_rules
from .words import Alphabet, WordParseError, format_word, parse_word

EXIT_OK = 0
EXIT_NO = 1
EXIT_MISMATCH = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chinese-monoid", description="Normal forms in the Chinese monoid.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_n(p, required=True):
        p.add_argument("-n", dest="n", type=_positive, required=required, help="alphabet size")
        return p

    p = with_n(sub.add_parser("normalize", help="print normal forms"))
    p.add_argument("words", nargs="+", metavar="WORD")
    p.add_argument("--via", choices=("rewriting", "insertion", "both"), default="rewriting")

    p = with_n(sub.add_parser("staircase", help="print the staircase of a word"))
    p.add_argument("word", metavar="WORD")

    p = with_n(sub.add_parser("equal", help="decide equality in the monoid"))
    p.add_argument("u", metavar="U")
    p.add_argument("v", metavar="V")
    p.add_argument("--oracle", action="store_true", help="use breadth-first closure")

    p = with_n(sub.add_parser("irr", help="irreducible words of a given length"))
    p.add_argument("--len", dest="length", type=_nonnegative, required=True)
    p.add_argument("--count", action="store_true")

    p = with_n(sub.add_parser("verify", help="check all compositions are trivial"), required=False)
    p.add_argument("--rules", metavar="FILE")

    p = with_n(sub.add_parser("complete", help="run Shirshov completion"), required=False)
    p.add_argument("--rules", metavar="FILE", required=True)
    defaults = CompletionBounds()
    p.add_argument("--max-rules", type=_positive, default=defaults.max_rules)
    p.add_argument("--max-len", type=_positive, default=defaults.max_word_len)
    p.add_argument("--max-iters", type=_positive, default=defaults.max_iterations)

    p = with_n(sub.add_parser("classes", help="count congruence classes by brute force"))
    p.add_argument("--len", dest="length", type=_nonnegative, required=True)
    p.add_argument("--check", action="store_true", help="also check one normal form per class")

    p = with_n(sub.add_parser("bench", help="time rewriting against insertion"))
    p.add_argument("--len", dest="length", type=_nonnegative, required=True)
    p.add_argument("--count", type=_positive, default=1000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _rules_for(args) -> tuple[RewriteSystem, Alphabet]:
    if args.rules is None:
        if args.n is None:
            raise UsageError("-n is required without --rules")
        alphabet = Alphabet(args.n)
        return chinese_rules(alphabet), alphabet
    rules, alphabet = read_rules(args.rules, args.n)
    return RewriteSystem(rules, alphabet), alphabet


def _cmd_normalize(args, out, err) -> int:
    alphabet = Alphabet(args.n)
    sys_ = chinese_rules(alphabet)
    status = EXIT_OK
    for text in args.words:
        w = parse_word(text, alphabet)
        if args.via == "insertion":
            nf = staircase_to_word(word_to_staircase(w))
        else:
            nf = normalize(w, sys_)
            if args.via == "both":
                other = staircase_to_word(word_to_staircase(w))
                if other != nf:
                    print(
                        f"MISMATCH {text!r}: rewriting {format_word(nf, alphabet)!r} "
                        f"insertion {format_word(other, alphabet)!r}",
                        file=err,
                    )
                    status = EXIT_MISMATCH
        print(format_word(nf, alphabet), file=out)
    return status


def _cmd_staircase(args, out, err) -> int:
    alphabet = Alphabet(args.n)
    s = word_to_staircase(parse_word(args.word, alphabet))
    if s.rows:
        print(s.render(alphabet), file=out)
    print(format_word(staircase_to_word(s), alphabet), file=out)
    return EXIT_OK


def _cmd_equal(args, out, err) -> int:
    alphabet = Alphabet(args.n)
    u, v = parse_word(args.u, alphabet), parse_word(args.v, alphabet)
    if args.oracle:
        same = congruent(u, v)
    else:
        sys_ = chinese_rules(alphabet)
        same = normalize(u, sys_) == normalize(v, sys_)
    print("true" if same else "false", file=out)
    return EXIT_OK if same else EXIT_NO


def _cmd_irr(args, out, err) -> int:
    alphabet = Alphabet(args.n)
    sys_ = chinese_rules(alphabet)
    count = 0
    for w in alphabet.words(args.length):
        if is_irreducible(w, sys_):
            count += 1
            if not args.count:
                print(format_word(w, alphabet), file=out)
    if args.count:
        print(count, file=out)
    return EXIT_OK


def _cmd_verify(args, out, err) -> int:
    sys_, alphabet = _rules_for(args)
    report = verify_gs(sys_)
    print(report.summary(), file=out)
    for amb, p, q in report.nontrivial:
        print(
            "NONTRIVIAL "
            + " ".join(format_word(x, alphabet) or "1" for x in (amb.overlap_word, p, q)),
            file=out,
        )
    return EXIT_OK if report.is_gs_basis else EXIT_NO


def _cmd_complete(args, out, err) -> int:
    rules, alphabet = read_rules(args.rules, args.n)
    bounds = CompletionBounds(args.max_rules, args.max_len, args.max_iters)
    res = complete(rules, bounds, alphabet)
    out.write(format_rules(res.result, alphabet))
    state = "converged" if res.converged else "did not converge"
    print(f"{state} after {res.iterations} passes, {len(res.result)} rules", file=err)
    return EXIT_OK if res.converged else EXIT_NO


def _cmd_classes(args, out, err) -> int:
    alphabet = Alphabet(args.n)
    classes = all_classes(alphabet, args.length)
    print(len(classes), file=out)
    if not args.check:
        return EXIT_OK
    sys_ = chinese_rules(alphabet)
    ok = True
    for cls in classes:
        irreducible = [w for w in cls.members if is_irreducible(w, sys_)]
        forms = {normalize(w, sys_) for w in cls.members}
        if len(irreducible) != 1 or forms != set(irreducible):
            ok = False
            print(f"class of {format_word(cls.representative, alphabet)!r} fails", file=err)
    staircases = sum(1 for w in alphabet.words(args.length) if is_staircase_word(w))
    ok = ok and staircases == len(classes)
    print("transversal ok" if ok else "transversal FAILED", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


def _cmd_bench(args, out, err) -> int:
    alphabet = Alphabet(args.n)
    sys_ = chinese_rules(alphabet)
    rng = random.Random(args.seed)
    words = [tuple(rng.choices(alphabet.letters, k=args.length)) for _ in range(args.count)]

    t0 = time.perf_counter()
    rewritten = [normalize_counting(w, sys_) for w in words]
    t1 = time.perf_counter()
    inserted = [word_to_staircase_counting(w) for w in words]
    t2 = time.perf_counter()

    mismatches = sum(
        nf != staircase_to_word(s) for (nf, _), (s, _) in zip(rewritten, inserted)
    )
    print(f"{'method':<10} {'words':>8} {'seconds':>10} {'words/sec':>12} {'mean steps':>11}", file=out)
    for name, results, secs in (("rewriting", rewritten, t1 - t0), ("insertion", inserted, t2 - t1)):
        rate = len(words) / secs if secs > 0 else float("inf")
        steps = sum(s for _, s in results) / len(results)
        print(f"{name:<10} {len(words):>8} {secs:>10.4f} {rate:>12.1f} {steps:>11.2f}", file=out)
    if mismatches:
        print(f"{mismatches} normal forms disagree", file=err)
        return EXIT_MISMATCH
    return EXIT_OK


COMMANDS = {
    "normalize": _cmd_normalize,
    "staircase": _cmd_staircase,
    "equal": _cmd_equal,
    "irr": _cmd_irr,
    "verify": _cmd_verify,
    "complete": _cmd_complete,
    "classes": _cmd_classes,
    "bench": _cmd_bench,
}


def main(
    argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None
) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out, err)
    except (UsageError, WordParseError, RuleFileError, OracleLimitError, OSError) as exc:
        print(exc, file=err)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())
