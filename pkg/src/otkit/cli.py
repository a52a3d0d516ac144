"""Command line: ``otkit gen|con|eval|prune|tree|count|show|run``.

Every subcommand except ``gen`` and ``run`` is a filter from standard input
to standard output, so the stages compose with ordinary pipes::

    otkit gen "hessian, [t,a], 2" | otkit con PARSE-SEG NO-STRUC | otkit eval | otkit tree

Upper-case aliases (GEN, CON, EVAL, PRUNE, TREE, COUNT, SHOW_PAGEWISE) are
installed as separate executables taking the same arguments.
"""

from __future__ import annotations

import argparse
import os
import shutil
import sys

from . import __version__
from .constraints import load_scripts, run_constraints
from .errors import OtkitError
from .evaluate import eval_sort, prune
from .gen import generate
from .pipeline import RunConfig, load_checked_grammar, parse_gen_argument, run
from .render import count_format, paginate, render_line

DEFAULT_PAGE_HEIGHT = 24


def _stdin_lines():
    for line in sys.stdin:
        yield line[:-1] if line.endswith("\n") else line


def _emit(lines):
    out = sys.stdout
    for line in lines:
        out.write(line)
        out.write("\n")


def cmd_gen(args):
    name, markers, budget = parse_gen_argument(args.argument)
    grammar = load_checked_grammar(name)
    for note in grammar.diagnostics:
        print(note, file=sys.stderr)
    _emit(generate(grammar, markers, budget))


def cmd_con(args):
    scripts = load_scripts(args.scripts, wrap=args.wrap)
    _emit(run_constraints(scripts, _stdin_lines()))


def cmd_eval(args):
    _emit(eval_sort(_stdin_lines()))


def cmd_prune(args):
    _emit(prune(_stdin_lines()))


def cmd_tree(args):
    lines = _stdin_lines()
    first = next(lines, None)
    if first is None:
        raise OtkitError("no candidate on standard input")
    text = render_line(first)
    for _ in lines:
        pass
    sys.stdout.write(text)


def cmd_count(args):
    _emit(count_format(_stdin_lines()))


def _terminal_key_reader():
    """Single-keypress reader on the controlling terminal, or None."""
    try:
        import termios
        import tty

        fd = os.open("/dev/tty", os.O_RDONLY)
    except (ImportError, OSError):
        return None

    def read_key():
        old = termios.tcgetattr(fd)
        try:
            tty.setcbreak(fd)
            return os.read(fd, 1).decode("ascii", "replace")
        finally:
            termios.tcsetattr(fd, termios.TCSADRAIN, old)

    return read_key


def default_page_height():
    if sys.stdout.isatty():
        return max(1, shutil.get_terminal_size((80, DEFAULT_PAGE_HEIGHT + 1)).lines - 1)
    return DEFAULT_PAGE_HEIGHT


def cmd_show(args):
    height = args.page_height or default_page_height()
    read_key = _terminal_key_reader() if sys.stdout.isatty() else None
    paginate(_stdin_lines(), height, sys.stdout.write, read_key)


def cmd_run(args):
    config = RunConfig.from_argument(
        args.argument, args.scripts, wrap_mode=args.wrap, prune_each=args.prune_each
    )
    sys.stdout.write(run(config).format())


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="otkit", description="Optimality Theory construction kit: GEN | CON | EVAL."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate the candidate set")
    p.add_argument("argument", help='"GrammarName, [m1,...,mn], MaxEpenthetics"')
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("con", help="annotate candidates with constraint scripts")
    p.add_argument("scripts", nargs="*", help="constraint scripts, highest ranked first")
    p.add_argument("--wrap", action="store_true", help="add the common prologue/epilogue")
    p.set_defaults(func=cmd_con)

    p = sub.add_parser("eval", help="stable sort by violation vector")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("prune", help="keep only candidates with the minimal vector")
    p.set_defaults(func=cmd_prune)

    p = sub.add_parser("tree", help="draw the first candidate as a tree")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("count", help="number candidates, vector on its own line")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("show", help="page through standard input")
    p.add_argument("--page-height", type=_positive_int, default=None)
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("run", help="GEN, CON and EVAL in one go")
    p.add_argument("argument", help='"GrammarName, [m1,...,mn], MaxEpenthetics"')
    p.add_argument("scripts", nargs="*", help="constraint scripts, highest ranked first")
    p.add_argument("--wrap", action="store_true")
    p.add_argument("--prune-each", action="store_true", help="prune after every constraint")
    p.set_defaults(func=cmd_run)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed early (e.g. `| head`); not an error of ours
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except (OtkitError, FileNotFoundError, ValueError) as exc:
        print(f"otkit {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


def _alias(command):
    def entry():
        sys.exit(main([command] + sys.argv[1:]))

    entry.__name__ = f"{command}_main"
    return entry


gen_main = _alias("gen")
con_main = _alias("con")
eval_main = _alias("eval")
prune_main = _alias("prune")
tree_main = _alias("tree")
count_main = _alias("count")
show_main = _alias("show")


if __name__ == "__main__":
    sys.exit(main())
