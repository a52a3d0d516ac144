"""Reading flat candidate lines back into trees and drawing them.

Drawings follow the look of a Prolog term printer: the label sits centred
over its subtree, a unary link is ``|`` ``.`` ``|`` in one column and an
n-ary link is a ``.---.---.`` connector row with a dot above every child::

        syl
         |
     .-------.
     |       |
    rt       m
"""

from __future__ import annotations

import re
import sys
from typing import Callable, Iterable, Iterator

from .errors import FlatParseError
from .evaluate import split_annotated
from .gen import EMPTY_LEAF, EmptyLeaf, Leaf, Node, Tree, Underparse

_NAME = re.compile(r"[A-Za-z0-9_]+")
_GAP = 2


# -- flat line parser --------------------------------------------------------

class _FlatParser:
    def __init__(self, text):
        self.text = text
        self.i = 0

    def error(self, message):
        raise FlatParseError(message, self.i)

    def peek(self):
        return self.text[self.i] if self.i < len(self.text) else ""

    def tree(self):
        c = self.peek()
        if c == "{":
            self.i += 1
            child = self.tree()
            if self.peek() != "}":
                self.error("unbalanced '{'")
            self.i += 1
            return Underparse(child)
        if c == "[":
            if self.text.startswith("[]", self.i):
                self.i += 2
                return EMPTY_LEAF
            self.error("expected '[]'")
        m = _NAME.match(self.text, self.i)
        if not m:
            if c == "(":
                self.error("empty functor")
            self.error(f"unexpected {c!r}" if c else "unexpected end of line")
        self.i = m.end()
        if self.peek() != "(":
            return Leaf(m.group())
        self.i += 1
        if self.peek() == ")":
            self.error("empty argument list")
        children = [self.tree()]
        while self.peek() == ",":
            self.i += 1
            children.append(self.tree())
        if self.peek() != ")":
            self.error("unbalanced '('")
        self.i += 1
        return Node(m.group(), tuple(children))


def parse_flat(line: str) -> Tree:
    """Inverse of :func:`otkit.gen.flatten`; a trailing violation vector is ignored."""
    line = line.rstrip("\n")
    parser = _FlatParser(line)
    tree = parser.tree()
    if parser.peek() != ".":
        parser.error("expected '.' after candidate" if parser.peek() == "" else
                     f"unexpected {parser.peek()!r} (unbalanced brackets or trailing junk)")
    rest = line[parser.i + 1:]
    if rest.strip("'*"):
        parser.i += 1 + len(rest) - len(rest.lstrip("'*"))
        parser.error("trailing junk after candidate")
    return tree


# -- drawing -----------------------------------------------------------------

def node_label(tree):
    if isinstance(tree, Node):
        return tree.category.lower()
    if isinstance(tree, Leaf):
        return tree.name.lower()
    if isinstance(tree, EmptyLeaf):
        return "[]"
    return "{}"


def node_children(tree):
    if isinstance(tree, Node):
        return tree.children
    if isinstance(tree, Underparse):
        return (tree.child,)
    return ()


class _Block:
    """A rectangle of text with the column where its root label's link attaches."""

    def __init__(self, rows, anchor):
        self.rows = rows
        self.anchor = anchor
        self.width = max(len(r) for r in rows)


def _put(row, col, text):
    if len(row) < col + len(text):
        row.extend(" " * (col + len(text) - len(row)))
    row[col:col + len(text)] = text


def _layout(tree):
    label = node_label(tree)
    kids = [_layout(c) for c in node_children(tree)]
    if not kids:
        return _Block([label], len(label) // 2)

    offsets, x = [], 0
    for k in kids:
        offsets.append(x)
        x += k.width + _GAP
    anchors = [o + k.anchor for o, k in zip(offsets, kids)]
    anchor = (anchors[0] + anchors[-1]) // 2
    shift = max(0, len(label) // 2 - anchor)
    anchor += shift
    anchors = [a + shift for a in anchors]
    offsets = [o + shift for o in offsets]

    height = 4 + max(len(k.rows) for k in kids)
    rows = [[] for _ in range(height)]
    _put(rows[0], anchor - len(label) // 2, label)
    _put(rows[1], anchor, "|")
    if len(anchors) > 1:
        _put(rows[2], anchors[0], "-" * (anchors[-1] - anchors[0] + 1))
    for a in anchors:
        _put(rows[2], a, ".")
        _put(rows[3], a, "|")
    for o, k in zip(offsets, kids):
        for r, text in enumerate(k.rows):
            _put(rows[4 + r], o, text)
    return _Block(["".join(r).rstrip() for r in rows], anchor)


def render_tree(tree: Tree) -> str:
    """ASCII drawing of a candidate tree (labels in lower case)."""
    return "\n".join(_layout(tree).rows) + "\n"


def render_line(line: str) -> str:
    return render_tree(parse_flat(line))


def read_diagram(text: str):
    """Recover ``(label, [children...])`` from a drawing made by :func:`render_tree`."""
    grid = text.split("\n")

    def char(r, c):
        if 0 <= r < len(grid) and 0 <= c < len(grid[r]):
            return grid[r][c]
        return " "

    def token_at(r, c):
        row = grid[r]
        s = c
        while s > 0 and row[s - 1] != " ":
            s -= 1
        e = c
        while e < len(row) and row[e] != " ":
            e += 1
        return row[s:e], s, e

    def node(r, c):
        label, s, e = token_at(r, c)
        if not label:
            raise ValueError(f"no label at row {r}, column {c}")
        bars = [x for x in range(s, e) if char(r + 1, x) == "|"]
        if not bars:
            return label, []
        a = bars[0]
        left = right = a
        while char(r + 2, left - 1) in ".-":
            left -= 1
        while char(r + 2, right + 1) in ".-":
            right += 1
        cols = [x for x in range(left, right + 1) if char(r + 2, x) == "."]
        children = []
        for x in cols:
            if char(r + 3, x) != "|":
                raise ValueError(f"broken link under row {r + 2}, column {x}")
            children.append(node(r + 4, x))
        return label, children

    top = next(i for i, row in enumerate(grid) if row.strip())
    first = len(grid[top]) - len(grid[top].lstrip())
    return node(top, first)


def tree_structure(tree: Tree):
    """``(label, [children...])`` straight from a tree, for comparison with drawings."""
    return node_label(tree), [tree_structure(c) for c in node_children(tree)]


# -- COUNT and paging ----------------------------------------------------------

def count_format(lines: Iterable[str]) -> Iterator[str]:
    """Number each candidate and put its vector on a line of its own."""
    for i, line in enumerate(lines, start=1):
        candidate, vector = split_annotated(line.rstrip("\n"), i)
        yield str(i)
        yield candidate[:-1]
        yield vector


def paginate(
    lines: Iterable[str],
    page_height: int,
    write: Callable[[str], object] = sys.stdout.write,
    read_key: Callable[[], str] | None = None,
) -> int:
    """Write lines one page at a time; return how many lines were written.

    ``read_key`` is called after each full page: space (or return) shows the
    next page, ``q`` or end of input stops. Without ``read_key`` (output is
    not a terminal) everything is written straight through.
    """
    if page_height < 1:
        raise ValueError("page height must be at least 1")
    written = 0
    on_page = 0
    for line in lines:
        if read_key is not None and on_page == page_height:
            while True:
                key = read_key()
                if key in ("", "q", "Q"):
                    return written
                if key in (" ", "\n", "\r"):
                    break
            on_page = 0
        write(line if line.endswith("\n") else line + "\n")
        written += 1
        on_page += 1
    return written
