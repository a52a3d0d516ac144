"""Candidate generation: exhaustive top-down enumeration of GEN derivations.

Candidates come out in a fixed order. The outer loop raises the number of
epenthetic ``[]`` leaves from 0 to the budget; the middle loop walks the
parsed/underparsed configurations of the input markers by binary counting
(last marker = least significant bit, 0 = parsed); the inner loop is a
depth-first, leftmost derivation search. At each nonterminal the rules
triggered by the pending input marker are tried first, then the ordinary
rules in file order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Union

from .grammar import EMPTY, TERMINAL, GenGrammar, nonterminal, resolve_label


@dataclass(frozen=True)
class Node:
    category: str
    children: tuple["Tree", ...]


@dataclass(frozen=True)
class Leaf:
    name: str


@dataclass(frozen=True)
class EmptyLeaf:
    pass


@dataclass(frozen=True)
class Underparse:
    child: "Tree"


Tree = Union[Node, Leaf, EmptyLeaf, Underparse]

EMPTY_LEAF = EmptyLeaf()


@dataclass(frozen=True)
class InputSpec:
    markers: tuple[str, ...]
    max_epenthesis: int = 0

    def __post_init__(self):
        object.__setattr__(self, "markers", tuple(self.markers))
        if not isinstance(self.max_epenthesis, int) or self.max_epenthesis < 0:
            raise ValueError(
                f"maximum number of epenthetic positions must be a non-negative integer, "
                f"got {self.max_epenthesis!r}"
            )


class Candidate(NamedTuple):
    tree: Tree
    epenthesis: int
    underparsed: tuple[bool, ...]

    @property
    def line(self):
        return flatten(self.tree)


def write_tree(tree):
    """Serialize a tree without the terminating period."""
    if isinstance(tree, Node):
        return f"{tree.category}({','.join(write_tree(c) for c in tree.children)})"
    if isinstance(tree, Leaf):
        return tree.name
    if isinstance(tree, EmptyLeaf):
        return "[]"
    if isinstance(tree, Underparse):
        return "{" + write_tree(tree.child) + "}"
    raise TypeError(f"not a candidate tree: {tree!r}")


def flatten(tree):
    return write_tree(tree) + "."


def configurations(n):
    """Underparsing configurations in enumeration order (all parsed first)."""
    return itertools.product((False, True), repeat=n)


class _Search:
    """Depth-first derivation search for one (budget, configuration) pair."""

    def __init__(self, grammar, marker_rules, underparsed):
        self.grammar = grammar
        self.marker_rules = marker_rules
        self.underparsed = underparsed
        self.n = len(marker_rules)

    def expand(self, sym, pos, emp, guard):
        # guard = (pos, emp, names entered at that state on the current path)
        if sym.kind == TERMINAL:
            yield Leaf(sym.name), pos, emp
        elif sym.kind == EMPTY:
            if emp > 0:
                yield EMPTY_LEAF, pos, emp - 1
        else:
            yield from self.expand_nonterminal(sym.name, pos, emp, guard)

    def expand_nonterminal(self, name, pos, emp, guard):
        if guard[0] == pos and guard[1] == emp:
            if name in guard[2]:
                # re-entering a category without consuming anything: a
                # Prolog-style search would never return from here
                return
            guard = (pos, emp, guard[2] | {name})
        else:
            guard = (pos, emp, frozenset((name,)))

        if pos < self.n:
            for rule in self.marker_rules[pos]:
                if rule.lhs != name:
                    continue
                for children, p, e in self.expand_seq(rule.rhs, 0, pos + 1, emp, guard):
                    tree = Node(name, children)
                    if self.underparsed[pos]:
                        tree = Underparse(tree)
                    yield tree, p, e
        for rule in self.grammar.plain_rules(name):
            for children, p, e in self.expand_seq(rule.rhs, 0, pos, emp, guard):
                yield Node(name, children), p, e

    def expand_seq(self, rhs, i, pos, emp, guard):
        if i == len(rhs):
            yield (), pos, emp
            return
        for tree, p, e in self.expand(rhs[i], pos, emp, guard):
            for rest, p2, e2 in self.expand_seq(rhs, i + 1, p, e, guard):
                yield (tree,) + rest, p2, e2

    def run(self, start, epenthesis):
        for tree, pos, emp in self.expand(nonterminal(start), 0, epenthesis, (-1, -1, frozenset())):
            if pos == self.n and emp == 0:
                yield tree


def _as_input(markers, max_epenthesis):
    if isinstance(markers, InputSpec):
        return markers
    return InputSpec(tuple(markers), max_epenthesis)


def candidates(grammar: GenGrammar, markers, max_epenthesis=0) -> Iterator[Candidate]:
    """Enumerate all candidates with their epenthesis count and configuration.

    ``markers`` is either an :class:`InputSpec` or a sequence of labels, in
    which case ``max_epenthesis`` gives the budget.
    """
    spec = _as_input(markers, max_epenthesis)
    marker_rules = [resolve_label(grammar, m) for m in spec.markers]
    for k in range(spec.max_epenthesis + 1):
        # Derivations that differ only in which rule carried a marker label
        # flatten to the same line (labels are not serialized). Keep the
        # first; lines with different k can never coincide.
        seen = set()
        for config in configurations(len(marker_rules)):
            search = _Search(grammar, marker_rules, config)
            for tree in search.run(grammar.startsymbol, k):
                line = write_tree(tree)
                if line in seen:
                    continue
                seen.add(line)
                yield Candidate(tree, k, config)


def generate(grammar: GenGrammar, markers, max_epenthesis=0) -> Iterator[str]:
    """Stream flat candidate lines (each ending in ``.``) in GEN order."""
    for cand in candidates(grammar, markers, max_epenthesis):
        yield flatten(cand.tree)


def count_candidates(grammar: GenGrammar, markers, max_epenthesis=0) -> int:
    return sum(1 for _ in candidates(grammar, markers, max_epenthesis))
