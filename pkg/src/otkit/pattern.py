"""A small regular-expression engine for constraint substitutions.

The dialect is the subset of POSIX basic regular expressions that
constraint scripts need: literal characters, ``.``, bracket classes
(``[abc]``, ``[^(]``, ``[a-z]``, ``]`` first is literal), the Kleene star,
``$`` at the end of a pattern, ``^`` at its start, and ``\\n`` for newline.
Matching is leftmost-longest, as in ``sed``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import PatternSyntaxError

# escapes outside brackets that simply mean the character itself
_LITERAL_ESCAPES = set(".*[]\\/$^")
# escapes accepted inside brackets
_CLASS_ESCAPES = set("[]*().{}\\^-/")


@dataclass(frozen=True)
class Literal:
    char: str

    def matches(self, c):
        return c == self.char


@dataclass(frozen=True)
class CharClass:
    members: frozenset
    negated: bool = False

    def matches(self, c):
        return (c in self.members) != self.negated


@dataclass(frozen=True)
class AnyChar:
    def matches(self, c):
        return True


@dataclass(frozen=True)
class Star:
    atom: Union[Literal, CharClass, AnyChar]


Atom = Union[Literal, CharClass, AnyChar, Star]


@dataclass(frozen=True)
class Pattern:
    """Compiled pattern: a sequence of atoms plus optional line anchors."""

    atoms: tuple[Atom, ...]
    anchored_start: bool = False
    anchored_end: bool = False
    source: str = ""

    def __post_init__(self):
        steps = []
        for atom in self.atoms:
            if isinstance(atom, Star):
                steps.append((atom.atom.matches, True))
            else:
                steps.append((atom.matches, False))
        object.__setattr__(self, "_steps", tuple(steps))
        literal = None
        if not self.anchored_start and not self.anchored_end and all(
            isinstance(a, Literal) for a in self.atoms
        ) and self.atoms:
            literal = "".join(a.char for a in self.atoms)
        object.__setattr__(self, "_literal", literal)
        single = None
        if (not self.anchored_start and not self.anchored_end and len(self.atoms) == 1
                and not isinstance(self.atoms[0], Star)):
            single = self.atoms[0].matches
        object.__setattr__(self, "_single", single)
        first = None
        if self.atoms and isinstance(self.atoms[0], Literal):
            first = self.atoms[0].char
        object.__setattr__(self, "_first", first)

    def _closure(self, states):
        steps = self._steps
        stack = list(states)
        out = set(states)
        while stack:
            j = stack.pop()
            if j < len(steps) and steps[j][1] and j + 1 not in out:
                out.add(j + 1)
                stack.append(j + 1)
        return out

    def match_at(self, subject, start):
        """End offset of the longest match beginning at ``start``, or None."""
        steps = self._steps
        final = len(steps)
        n = len(subject)
        states = self._closure((0,))
        best = None
        if final in states and (not self.anchored_end or start == n):
            best = start
        pos = start
        while states and pos < n:
            c = subject[pos]
            nxt = set()
            for j in states:
                if j < final:
                    test, starred = steps[j]
                    if test(c):
                        nxt.add(j if starred else j + 1)
            pos += 1
            states = self._closure(nxt) if nxt else nxt
            if final in states and (not self.anchored_end or pos == n):
                best = pos
        return best

    def search(self, subject, start=0):
        """Leftmost-longest match at or after ``start`` as ``(begin, end)``."""
        n = len(subject)
        if self.anchored_start:
            if start != 0:
                return None
            end = self.match_at(subject, 0)
            return None if end is None else (0, end)
        if self._literal is not None:
            i = subject.find(self._literal, start)
            return None if i < 0 else (i, i + len(self._literal))
        i = start
        first = self._first
        while i <= n:
            if first is not None:
                i = subject.find(first, i)
                if i < 0:
                    return None
            end = self.match_at(subject, i)
            if end is not None:
                return i, end
            i += 1
        return None


def _parse_class(src, i):
    """Parse a bracket expression starting just after ``[``; return (atom, next_i)."""
    start = i - 1
    negated = False
    if i < len(src) and src[i] == "^":
        negated = True
        i += 1
    members = []
    first = True
    while True:
        if i >= len(src):
            raise PatternSyntaxError("unterminated character class", start)
        c = src[i]
        if c == "]" and not first:
            i += 1
            break
        if c == "\\":
            if i + 1 >= len(src):
                raise PatternSyntaxError("trailing backslash", i)
            e = src[i + 1]
            if e == "n":
                c = "\n"
            elif e in _CLASS_ESCAPES:
                c = e
            else:
                raise PatternSyntaxError(f"unsupported escape \\{e} in character class", i)
            i += 2
        else:
            i += 1
        # range a-z (a '-' right before ']' is literal)
        if i + 1 < len(src) and src[i] == "-" and src[i + 1] != "]":
            hi = src[i + 1]
            j = i + 2
            if hi == "\\":
                if i + 2 >= len(src):
                    raise PatternSyntaxError("trailing backslash", i + 1)
                hi = "\n" if src[i + 2] == "n" else src[i + 2]
                j = i + 3
            if ord(hi) < ord(c):
                raise PatternSyntaxError(f"invalid range {c}-{hi}", i)
            members.extend(chr(k) for k in range(ord(c), ord(hi) + 1))
            i = j
        else:
            members.append(c)
        first = False
    return CharClass(frozenset(members), negated), i


def compile_pattern(src):
    """Compile pattern text (as written between the slashes of ``s///``)."""
    if not src:
        # sed reads an empty pattern as "the previous pattern"; no such state here
        raise PatternSyntaxError("empty pattern", 0)
    atoms = []
    anchored_start = anchored_end = False
    i = 0
    n = len(src)
    if src.startswith("^"):
        anchored_start = True
        i = 1
    while i < n:
        c = src[i]
        if c == "\\":
            if i + 1 >= n:
                raise PatternSyntaxError("trailing backslash", i)
            e = src[i + 1]
            if e == "n":
                atoms.append(Literal("\n"))
            elif e in _LITERAL_ESCAPES:
                atoms.append(Literal(e))
            else:
                raise PatternSyntaxError(f"unsupported escape \\{e}", i)
            i += 2
        elif c == "[":
            atom, i = _parse_class(src, i + 1)
            atoms.append(atom)
        elif c == "*":
            if not atoms:
                # leading star is an ordinary character
                atoms.append(Literal("*"))
            elif not isinstance(atoms[-1], Star):
                atoms[-1] = Star(atoms[-1])
            i += 1
        elif c == "$" and i == n - 1:
            anchored_end = True
            i += 1
        elif c == ".":
            atoms.append(AnyChar())
            i += 1
        else:
            atoms.append(Literal(c))
            i += 1
    return Pattern(tuple(atoms), anchored_start, anchored_end, src)


def substitute(pattern, replacement, subject, global_=False):
    """Replace the leftmost (or, with ``global_``, every) match of ``pattern``.

    Successive global matches do not overlap; an empty match directly after
    a previous match is skipped, otherwise an empty match consumes the next
    character unchanged so the scan always advances.
    """
    if isinstance(pattern, str):
        pattern = compile_pattern(pattern)
    literal = pattern._literal
    if literal is not None:
        return subject.replace(literal, replacement, -1 if global_ else 1)
    single = pattern._single
    if single is not None and global_:
        # one-character pattern: matches never overlap and are never empty
        return "".join(replacement if single(c) else c for c in subject)

    out = []
    n = len(subject)
    pos = 0
    prev_end = -1
    while pos <= n:
        found = pattern.search(subject, pos)
        if found is None:
            break
        begin, end = found
        if begin == end and begin == prev_end:
            if begin >= n:
                break
            out.append(subject[pos:begin + 1])
            pos = begin + 1
            continue
        out.append(subject[pos:begin])
        out.append(replacement)
        prev_end = end
        if not global_:
            pos = end
            break
        if begin == end:
            if begin < n:
                out.append(subject[begin])
            pos = begin + 1
        else:
            pos = end
    out.append(subject[pos:])
    return "".join(out)
