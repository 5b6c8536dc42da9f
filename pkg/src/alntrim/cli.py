"""Command-line interface: ``alntrim {trim,patterns,analyze,compare}``."""

from __future__ import annotations

import argparse
import contextlib
import logging
import sys

from .alignment import Skeleton
from .corrpat import write_patterns
from .pipeline import (
    ExperimentConfig,
    compare,
    export_distribution,
    run_pipeline,
    write_distribution,
)
from .regularity import RegularityConfig, write_reports_json, write_reports_tsv
from .trimming import Strategy, TrimConfig
from .wordlist import WordlistError, read_wordlist, write_wordlist

EXIT_INPUT = 2
EXIT_CONFIG = 3

log = logging.getLogger("alntrim")


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _strategy(text):
    try:
        return Strategy(text.strip().lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown strategy {text!r} (use none, core, gap)") from None


def _strategies(text):
    items = [_strategy(t) for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("no strategies given")
    return tuple(dict.fromkeys(items))


def _fraction(text):
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 1]")
    return value


def _skeleton(text):
    try:
        return Skeleton.parse(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle


def build_parser():
    trim_flags = argparse.ArgumentParser(add_help=False)
    trim_flags.add_argument("--input", required=True, help="aligned wordlist (TSV)")
    trim_flags.add_argument("--gap-threshold", type=_fraction, default=0.5)
    trim_flags.add_argument("--skeleton", type=_skeleton, default=Skeleton(), help='e.g. "CV" or "CVC"')

    reg_flags = argparse.ArgumentParser(add_help=False)
    reg_flags.add_argument("--pattern-threshold", type=int, default=3)
    reg_flags.add_argument("--cognate-threshold", type=_fraction, default=0.75)
    reg_flags.add_argument("--report", choices=("tsv", "json"), default="tsv")
    reg_flags.add_argument("--output", default=None, help="output file (default: stdout)")

    parser = _Parser(prog="alntrim", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("trim", parents=[trim_flags], help="trim alignments and write the wordlist")
    p.add_argument("--strategy", type=_strategy, default=Strategy.GAP)
    p.add_argument("--output", default=None)

    p = sub.add_parser("patterns", parents=[trim_flags], help="infer and export correspondence patterns")
    p.add_argument("--strategy", type=_strategy, default=Strategy.GAP)
    p.add_argument("--export", required=True)
    p.add_argument("--distribution", default=None)

    p = sub.add_parser("analyze", parents=[trim_flags, reg_flags], help="regularity report for one strategy")
    p.add_argument("--strategy", type=_strategy, default=Strategy.GAP)

    p = sub.add_parser("compare", parents=[trim_flags, reg_flags], help="compare strategies against the random baseline")
    p.add_argument("--strategies", type=_strategies, default=(Strategy.NONE, Strategy.CORE, Strategy.GAP))
    p.add_argument("--random-iterations", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1, help="threads for random iterations")
    return parser


def _config(args):
    try:
        return ExperimentConfig(
            trim=TrimConfig(gap_threshold=args.gap_threshold, skeleton=args.skeleton),
            regularity=RegularityConfig(
                pattern_threshold=getattr(args, "pattern_threshold", 3),
                cognate_threshold=getattr(args, "cognate_threshold", 0.75),
            ),
            random_iterations=getattr(args, "random_iterations", 100),
            base_seed=getattr(args, "seed", 42),
            strategies=getattr(args, "strategies", None) or (args.strategy,),
        )
    except ValueError as err:
        raise ConfigError(str(err)) from None


def _write_records(records, args):
    with _output(args.output) as out:
        if args.report == "json":
            write_reports_json(records, out)
        else:
            columns = list(dict.fromkeys(key for rec in records for key in rec))
            write_reports_tsv(records, out, columns)


def run(args):
    config = _config(args)
    if getattr(args, "jobs", 1) < 1:
        raise ConfigError("--jobs must be at least 1")
    wordlist = read_wordlist(args.input)

    if args.command == "trim":
        result = run_pipeline(wordlist, args.strategy, config)
        with _output(args.output) as out:
            write_wordlist(wordlist, out, result.trims)
    elif args.command == "patterns":
        result = run_pipeline(wordlist, args.strategy, config)
        with _output(args.export) as out:
            write_patterns(result.assignment, wordlist.doculects, out)
        if args.distribution:
            with _output(args.distribution) as out:
                write_distribution(export_distribution({args.strategy: result.assignment}), out)
    elif args.command == "analyze":
        result = run_pipeline(wordlist, args.strategy, config)
        _write_records([result.report.record(str(args.strategy))], args)
    elif args.command == "compare":
        _write_records(compare(wordlist, config, jobs=args.jobs).records(), args)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        run(args)
    except ConfigError as err:
        print(f"alntrim: configuration error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except (OSError, WordlistError, UnicodeDecodeError) as err:
        print(f"alntrim: input error: {err}", file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
