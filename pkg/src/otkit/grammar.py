"""Reader and compiler for labelled GEN grammars (``.gen`` files).

A grammar file is a sequence of period-terminated statements::

    startsymbol word.
    word ---> ft, ft.          % a comment
    'Rt' ---> [].
    a # 'Rt' ---> "SONORANT", "DORSAL".

Bare atoms start lowercase; anything else is written in single quotes.
Double-quoted tokens are terminals and ``[]`` is the built-in empty
terminal. A ``label #`` prefix makes a rule triggerable from GEN input.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .errors import GrammarSyntaxError, UnknownMarkerError

DEFAULT_STARTSYMBOL = "word"
GRAMMAR_SUFFIX = ".gen"
GRAMMAR_PATH_ENV = "OTKIT_GRAMMAR_PATH"

NONTERMINAL = "nonterminal"
TERMINAL = "terminal"
EMPTY = "empty"

# Names end up verbatim in flat candidate lines, so they must not contain
# any of the flat format's punctuation.
_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_BARE_ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Symbol:
    kind: str
    name: str | None = None

    def __str__(self):
        if self.kind == EMPTY:
            return "[]"
        if self.kind == TERMINAL:
            return f'"{self.name}"'
        return quote_atom(self.name)


EMPTY_SYMBOL = Symbol(EMPTY)


def nonterminal(name):
    return Symbol(NONTERMINAL, name)


def terminal(name):
    return Symbol(TERMINAL, name)


@dataclass(frozen=True)
class Rule:
    lhs: str
    rhs: tuple[Symbol, ...]
    label: str | None = None
    source_line: int = field(default=0, compare=False)

    def __str__(self):
        body = f"{quote_atom(self.lhs)} ---> {', '.join(str(s) for s in self.rhs)}."
        if self.label is not None:
            return f"{quote_atom(self.label)} # {body}"
        return body


@dataclass
class GenGrammar:
    rules: tuple[Rule, ...]
    startsymbol: str = DEFAULT_STARTSYMBOL
    defaulted_start: bool = True
    labels: dict[str, list[Rule]] = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list, compare=False)
    source_name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        self.rules = tuple(self.rules)
        if not self.labels:
            for rule in self.rules:
                if rule.label is not None:
                    self.labels.setdefault(rule.label, []).append(rule)
        self._plain = {}
        for rule in self.rules:
            if rule.label is None:
                self._plain.setdefault(rule.lhs, []).append(rule)

    def plain_rules(self, lhs):
        """Unlabelled rules rewriting ``lhs``, in file order."""
        return self._plain.get(lhs, [])

    def resolve_label(self, marker):
        return resolve_label(self, marker)

    @property
    def nonterminals(self):
        names = []
        for rule in self.rules:
            for name in [rule.lhs] + [s.name for s in rule.rhs if s.kind == NONTERMINAL]:
                if name not in names:
                    names.append(name)
        return names


def quote_atom(name):
    if _BARE_ATOM_RE.match(name) and name != "startsymbol":
        return name
    return f"'{name}'"


def resolve_label(grammar, marker):
    """All rules labelled ``marker``, in file order."""
    rules = grammar.labels.get(marker)
    if not rules:
        raise UnknownMarkerError(marker)
    return list(rules)


# -- tokenizer -------------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str  # atom, qatom, string, empty, arrow, hash, comma, period, eof
    text: str
    line: int


def _tokenize(source, source_name=None):
    tokens = []
    i, line, n = 0, 1, len(source)

    def fail(msg):
        raise GrammarSyntaxError(msg, line, source_name)

    while i < n:
        c = source[i]
        if ord(c) > 127:
            fail(f"non-ASCII character {c!r}")
        if c == "\n":
            line += 1
            i += 1
        elif c.isspace():
            i += 1
        elif c == "%":
            while i < n and source[i] != "\n":
                i += 1
        elif c == "-":
            if source.startswith("--->", i):
                tokens.append(_Token("arrow", "--->", line))
                i += 4
            else:
                fail("malformed arrow (expected exactly '--->')")
        elif c == "#":
            tokens.append(_Token("hash", "#", line))
            i += 1
        elif c == ",":
            tokens.append(_Token("comma", ",", line))
            i += 1
        elif c == ".":
            tokens.append(_Token("period", ".", line))
            i += 1
        elif c == "[":
            j = i + 1
            while j < n and source[j] in " \t":
                j += 1
            if j < n and source[j] == "]":
                tokens.append(_Token("empty", "[]", line))
                i = j + 1
            else:
                fail("'[' must be followed by ']' (the empty terminal [])")
        elif c in "'\"":
            j = source.find(c, i + 1)
            nl = source.find("\n", i + 1)
            if j < 0 or (0 <= nl < j):
                fail(f"unbalanced quote {c}")
            text = source[i + 1:j]
            if not _NAME_RE.match(text):
                fail(f"name {c}{text}{c} may only contain letters, digits and '_'")
            tokens.append(_Token("qatom" if c == "'" else "string", text, line))
            i = j + 1
        elif c.isalnum() or c == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_") and ord(source[j]) < 128:
                j += 1
            text = source[i:j]
            if not _BARE_ATOM_RE.match(text):
                fail(f"symbol {text!r} must be enclosed in single quotes")
            tokens.append(_Token("atom", text, line))
            i = j
        else:
            fail(f"unexpected character {c!r}")
    tokens.append(_Token("eof", "", line))
    return tokens


# -- parser ----------------------------------------------------------------

def parse_gen_grammar(source, source_name=None):
    """Parse the text of a ``.gen`` file into a :class:`GenGrammar`."""
    tokens = _tokenize(source, source_name)
    pos = 0
    rules = []
    startsymbol = None
    diagnostics = []

    def fail(msg, tok):
        raise GrammarSyntaxError(msg, tok.line, source_name)

    def expect_period(tok):
        if tok.kind == "eof":
            fail("missing period at end of statement", tok)
        if tok.kind != "period":
            fail(f"expected ',' or '.' before {tok.text!r} (missing period?)", tok)

    while tokens[pos].kind != "eof":
        tok = tokens[pos]
        nxt = tokens[pos + 1]
        if tok.kind == "atom" and tok.text == "startsymbol" and nxt.kind in ("atom", "qatom"):
            expect_period(tokens[pos + 2])
            if startsymbol is not None:
                diagnostics.append(
                    f"warning: line {tok.line}: repeated startsymbol declaration; "
                    f"'{nxt.text}' replaces '{startsymbol}'"
                )
            startsymbol = nxt.text
            pos += 3
            continue

        label = None
        if tok.kind == "hash":
            fail("'#' without a label", tok)
        if nxt.kind == "hash":
            if tok.kind not in ("atom", "qatom"):
                fail("rule label must be an atom", tok)
            label = tok.text
            pos += 2
            tok = tokens[pos]
            if tok.kind in ("eof", "period"):
                fail(f"'#' after label '{label}' is not followed by a rule", tok)
        if tok.kind not in ("atom", "qatom"):
            fail(f"expected a nonterminal on the left-hand side, got {tok.text or 'end of file'!r}", tok)
        lhs = tok.text
        line = tok.line
        arrow = tokens[pos + 1]
        if arrow.kind != "arrow":
            if arrow.kind == "eof":
                fail("missing '--->' at end of file", arrow)
            fail(f"expected '--->' after {lhs!r}", arrow)
        pos += 2
        rhs = []
        while True:
            tok = tokens[pos]
            if tok.kind in ("atom", "qatom"):
                rhs.append(nonterminal(tok.text))
            elif tok.kind == "string":
                rhs.append(terminal(tok.text))
            elif tok.kind == "empty":
                rhs.append(EMPTY_SYMBOL)
            elif tok.kind == "period" and not rhs:
                fail("empty right-hand side", tok)
            elif tok.kind == "eof":
                fail("missing period at end of rule", tok)
            else:
                fail(f"expected a symbol, got {tok.text!r}", tok)
            pos += 1
            sep = tokens[pos]
            if sep.kind == "comma":
                pos += 1
                continue
            expect_period(sep)
            pos += 1
            break
        rules.append(Rule(lhs, tuple(rhs), label, line))

    defaulted = startsymbol is None
    if defaulted:
        startsymbol = DEFAULT_STARTSYMBOL
        diagnostics.append(f"warning: no startsymbol declared; assuming '{DEFAULT_STARTSYMBOL}'")
    return GenGrammar(
        rules=tuple(rules),
        startsymbol=startsymbol,
        defaulted_start=defaulted,
        diagnostics=diagnostics,
        source_name=source_name,
    )


def format_grammar(grammar):
    """Pretty-print a grammar in ``.gen`` syntax (reparses to an equal grammar)."""
    lines = []
    if not grammar.defaulted_start:
        lines.append(f"startsymbol {quote_atom(grammar.startsymbol)}.")
    lines.extend(str(rule) for rule in grammar.rules)
    return "\n".join(lines) + "\n"


# -- left recursion ---------------------------------------------------------

def _reachable(grammar):
    seen = {grammar.startsymbol}
    stack = [grammar.startsymbol]
    by_lhs = {}
    for rule in grammar.rules:
        by_lhs.setdefault(rule.lhs, []).append(rule)
    while stack:
        name = stack.pop()
        for rule in by_lhs.get(name, ()):
            for sym in rule.rhs:
                if sym.kind == NONTERMINAL and sym.name not in seen:
                    seen.add(sym.name)
                    stack.append(sym.name)
    return seen


def check_left_recursion(grammar):
    """Return every left-recursive cycle among nonterminals reachable from the start.

    A step N -> M exists when M is the first right-hand-side symbol of some
    rule for N. Each cycle is reported once as a list ``[N1, ..., Nk, N1]``
    starting from its alphabetically smallest member.
    """
    reachable = _reachable(grammar)
    edges = {}
    for rule in grammar.rules:
        first = rule.rhs[0]
        if rule.lhs in reachable and first.kind == NONTERMINAL:
            targets = edges.setdefault(rule.lhs, [])
            if first.name not in targets:
                targets.append(first.name)

    nodes = sorted(reachable)
    cycles = []
    for start in nodes:
        # only enumerate cycles whose smallest node is `start`
        path = [start]

        def walk(node):
            for succ in edges.get(node, ()):
                if succ == start:
                    cycles.append(path + [start])
                elif succ > start and succ not in path:
                    path.append(succ)
                    walk(succ)
                    path.pop()

        walk(start)
    return cycles


# -- loading ----------------------------------------------------------------

def grammar_search_path(extra: Iterable[str] = ()):
    dirs = [Path(".")]
    env = os.environ.get(GRAMMAR_PATH_ENV)
    if env:
        dirs.extend(Path(p) for p in env.split(os.pathsep) if p)
    dirs.extend(Path(p) for p in extra)
    dirs.append(Path(__file__).parent / "data")
    return dirs


def find_grammar_file(name, search_path=None):
    """Locate ``name`` (``.gen`` appended when missing) along the search path."""
    filename = name if name.endswith(GRAMMAR_SUFFIX) else name + GRAMMAR_SUFFIX
    candidate = Path(filename)
    if candidate.is_absolute():
        return candidate if candidate.is_file() else None
    for directory in search_path or grammar_search_path():
        path = directory / candidate
        if path.is_file():
            return path
    return None


def load_grammar(name, search_path=None):
    path = find_grammar_file(name, search_path)
    if path is None:
        raise FileNotFoundError(f"grammar file {name!r} not found")
    raw = path.read_bytes()
    try:
        source = raw.decode("ascii")
    except UnicodeDecodeError as exc:
        line = raw[:exc.start].count(b"\n") + 1
        raise GrammarSyntaxError("non-ASCII byte in grammar file", line, str(path)) from None
    return parse_gen_grammar(source, source_name=str(path))
