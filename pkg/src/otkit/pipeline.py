"""In-process GEN -> CON -> EVAL runs and parsing of the GEN argument string."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .constraints import load_scripts, run_constraints
from .errors import LeftRecursionError, OtkitError
from .evaluate import eval_sort, prune, split_annotated
from .gen import InputSpec, generate
from .grammar import check_left_recursion, load_grammar, resolve_label
from .render import render_line

_GEN_ARG = re.compile(
    r"""^\s*(?P<grammar>'[^']+'|[^,\[\]'\s][^,\[\]]*?)\s*,
        \s*\[(?P<markers>[^\]]*)\]\s*,
        \s*(?P<budget>[+-]?\d+)\s*\.?\s*$""",
    re.VERBOSE,
)
_MARKER = re.compile(r"'([A-Za-z0-9_]+)'|([a-z][A-Za-z0-9_]*)\Z")


class ArgumentError(OtkitError):
    pass


def parse_gen_argument(text):
    """Split ``"grammar, [m1,...,mn], max"`` into its three parts.

    Quoted markers such as ``'O'`` lose their quotes.
    """
    m = _GEN_ARG.match(text)
    if not m:
        raise ArgumentError(
            f"malformed GEN argument {text!r}; expected \"GrammarName, [m1,...,mn], MaxEpenthetics\""
        )
    grammar = m.group("grammar").strip().strip("'")
    markers = []
    raw = m.group("markers").strip()
    if raw:
        for item in raw.split(","):
            item = item.strip()
            mm = _MARKER.match(item)
            if not mm:
                raise ArgumentError(f"malformed input marker {item!r}")
            markers.append(mm.group(1) or mm.group(2))
    budget = int(m.group("budget"))
    if budget < 0:
        raise ArgumentError(f"maximum number of epenthetic positions must be >= 0, got {budget}")
    return grammar, markers, budget


def load_checked_grammar(name):
    """Load a grammar and refuse it if it is left-recursive."""
    grammar = load_grammar(name)
    cycles = check_left_recursion(grammar)
    if cycles:
        shown = "; ".join(" -> ".join(c) for c in cycles)
        raise LeftRecursionError(f"grammar {name!r} is left-recursive: {shown}")
    return grammar


@dataclass
class RunConfig:
    grammar_name: str
    input_markers: list[str]
    max_epenthesis: int = 0
    constraint_files: list[str] = field(default_factory=list)  # highest ranked first
    wrap_mode: bool = False
    prune_each: bool = False

    @classmethod
    def from_argument(cls, argument, constraint_files=(), **kw):
        grammar, markers, budget = parse_gen_argument(argument)
        return cls(grammar, markers, budget, list(constraint_files), **kw)


@dataclass
class RunReport:
    winner: str
    vector: str
    candidate_count: int
    ties: int
    ranked: list[str]

    @property
    def tree(self):
        return render_line(self.winner)

    def format(self):
        return (
            self.tree
            + f"winner: {self.winner}\n"
            + f"vector: {self.vector}\n"
            + f"candidates: {self.candidate_count}\n"
            + f"tied winners: {self.ties}\n"
        )


def run(config: RunConfig) -> RunReport:
    grammar = load_checked_grammar(config.grammar_name)
    spec = InputSpec(config.input_markers, config.max_epenthesis)
    for marker in spec.markers:
        resolve_label(grammar, marker)
    scripts = load_scripts(config.constraint_files, wrap=config.wrap_mode)

    lines = list(generate(grammar, spec))
    count = len(lines)
    if not lines:
        raise OtkitError("GEN produced no candidates for this input")
    if config.prune_each:
        for script in scripts:
            lines = prune(run_constraints([script], lines))
    else:
        lines = list(run_constraints(scripts, lines))
    ranked = eval_sort(lines)
    best = split_annotated(ranked[0])[1]
    ties = sum(1 for line in ranked if split_annotated(line)[1] == best)
    return RunReport(ranked[0], best, count, ties, ranked)
