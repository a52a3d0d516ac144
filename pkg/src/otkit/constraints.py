"""Constraint scripts: a minimal stream-editor dialect for annotating candidates.

A script is a list of commands executed over a pattern buffer (the current
line) and a hold buffer:

    h              copy pattern buffer to hold buffer
    x              exchange pattern and hold buffers
    G              append a newline and the hold buffer to the pattern buffer
    s/RE/REPL/[g]  substitute (see :mod:`otkit.pattern` for RE)

Commands are separated by newlines or ``;``; blank lines and ``#`` comments
are ignored. Anything else is rejected so scripts stay portable to ``sed``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .errors import PatternSyntaxError, ScriptSyntaxError
from .pattern import Pattern, compile_pattern, substitute

CONSTRAINT_PATH_ENV = "OTKIT_CONSTRAINT_PATH"

PROLOGUE = """\
# COMMON CONSTRAINT PROLOGUE
# save candidate to buffer

h

# delete violation vector (everything following the dot)
# to get pure candidate

s/\\..*//g

"""

EPILOGUE = """\

# COMMON CONSTRAINT EPILOGUE
# remove all non-violation star material

s/[^\\*]//g

# append violation stars after candidate (creates newline)

x;G

# convert superfluous newline into constraint separator character '

s/\\n/\\'/
"""


@dataclass(frozen=True)
class Command:
    kind: str  # "h", "x", "G" or "s"
    pattern: Pattern | None = None
    replacement: str = ""
    global_: bool = False
    line: int = field(default=0, compare=False)

    def __str__(self):
        if self.kind != "s":
            return self.kind
        return f"s/{self.pattern.source}/{_escape_replacement(self.replacement)}/" + (
            "g" if self.global_ else ""
        )


@dataclass(frozen=True)
class ConstraintScript:
    name: str
    commands: tuple[Command, ...]

    def __call__(self, line):
        return run_script_on_line(self, line)


def _escape_replacement(text):
    return (
        text.replace("\\", "\\\\").replace("/", "\\/").replace("&", "\\&").replace("\n", "\\n")
    )


def _parse_replacement(src, fail):
    out = []
    i = 0
    while i < len(src):
        c = src[i]
        if c == "&":
            fail("'&' in replacement is not supported (write \\& for a literal ampersand)", i)
        if c == "\\":
            if i + 1 >= len(src):
                fail("trailing backslash in replacement", i)
            e = src[i + 1]
            if e == "n":
                out.append("\n")
            elif e.isdigit():
                fail(f"back-reference \\{e} is not supported", i)
            elif e.isalpha():
                fail(f"unsupported escape \\{e} in replacement", i)
            else:
                out.append(e)
            i += 2
        else:
            out.append(c)
            i += 1
    return "".join(out)


def _scan_delimited(text, i, fail):
    """Read up to the next unescaped ``/``; return (raw, index after slash)."""
    out = []
    while i < len(text):
        c = text[i]
        if c == "\\":
            if i + 1 >= len(text):
                fail("unterminated substitution (trailing backslash)", i)
            if text[i + 1] == "/":
                out.append("\\/")
            else:
                out.append(text[i:i + 2])
            i += 2
        elif c == "/":
            return "".join(out), i + 1
        else:
            out.append(c)
            i += 1
    fail("unterminated substitution", i)


def parse_script(name, source, wrap=False):
    """Parse script text into a :class:`ConstraintScript`.

    With ``wrap`` the source is taken to be a main part only and the common
    prologue and epilogue are put around it.
    """
    commands = []
    if wrap:
        commands.extend(parse_script(name + ":prologue", PROLOGUE).commands)
    commands.extend(_parse_commands(name, source))
    if wrap:
        commands.extend(parse_script(name + ":epilogue", EPILOGUE).commands)
    return ConstraintScript(name, tuple(commands))


def _parse_commands(name, source):
    commands = []
    for lineno, text in enumerate(source.split("\n"), start=1):
        def fail(message, col):
            raise ScriptSyntaxError(message, name, lineno, col + 1)

        for col, ch in enumerate(text):
            if ord(ch) > 127:
                fail(f"non-ASCII character {ch!r}", col)
        i = 0
        n = len(text)
        while i < n:
            c = text[i]
            if c in " \t;\r":
                i += 1
                continue
            if c == "#":
                break
            start = i
            if c in "hxG":
                commands.append(Command(c, line=lineno))
                i += 1
            elif c == "s":
                if i + 1 >= n or text[i + 1] != "/":
                    fail("malformed substitution: expected s/pattern/replacement/", i)
                raw_pat, i = _scan_delimited(text, i + 2, fail)
                raw_rep, i = _scan_delimited(text, i, fail)
                global_ = False
                while i < n and text[i].isalnum():
                    if text[i] == "g" and not global_:
                        global_ = True
                    else:
                        fail(f"unsupported substitution flag {text[i]!r}", i)
                    i += 1
                try:
                    pattern = compile_pattern(raw_pat)
                except PatternSyntaxError as exc:
                    col = start + 2 + (exc.position or 0)
                    fail(exc.message, col)
                replacement = _parse_replacement(raw_rep, lambda msg, _j: fail(msg, start))
                commands.append(Command("s", pattern, replacement, global_, lineno))
            else:
                fail(f"unsupported command {c!r} (only h, x, G and s are available)", i)
            # a command must be followed by a separator
            if i < n and text[i] not in " \t;\r#":
                fail(f"extra characters after command: {text[i:]!r}", i)
    return commands


def execute(commands: Iterable[Command], line: str, hold: str = "") -> str:
    pattern_space = line
    for cmd in commands:
        kind = cmd.kind
        if kind == "s":
            pattern_space = substitute(cmd.pattern, cmd.replacement, pattern_space, cmd.global_)
        elif kind == "h":
            hold = pattern_space
        elif kind == "x":
            pattern_space, hold = hold, pattern_space
        elif kind == "G":
            pattern_space = pattern_space + "\n" + hold
    return pattern_space


def run_script_on_line(script: ConstraintScript, line: str) -> str:
    """Run one script over one line with a fresh, empty hold buffer."""
    return execute(script.commands, line)


def run_constraints(scripts, lines: Iterable[str]) -> Iterator[str]:
    """Run the scripts (highest ranked first) over each line of a stream.

    All commands are executed as one concatenated program per line, the way
    a single ``sed -f a -f b ...`` invocation would.
    """
    program = [cmd for script in scripts for cmd in script.commands]
    for line in lines:
        yield execute(program, line) if program else line


def is_shipped_form(script: ConstraintScript) -> bool:
    """True if the script carries the standard prologue and epilogue."""
    cmds = [str(c) for c in script.commands]
    return (
        len(cmds) >= 6
        and cmds[:2] == ["h", "s/\\..*//g"]
        and cmds[-4:] == ["s/[^\\*]//g", "x", "G", "s/\\n/'/"]
    )


def constraint_search_path():
    dirs = [Path(".")]
    env = os.environ.get(CONSTRAINT_PATH_ENV)
    if env:
        dirs.extend(Path(p) for p in env.split(os.pathsep) if p)
    dirs.append(Path(__file__).parent / "data" / "constraints")
    return dirs


def find_script_file(name, search_path=None):
    path = Path(name)
    if path.is_absolute():
        return path if path.is_file() else None
    for directory in search_path or constraint_search_path():
        candidate = directory / path
        if candidate.is_file():
            return candidate
    return None


def load_script(name, wrap=False, search_path=None):
    path = find_script_file(name, search_path)
    if path is None:
        raise FileNotFoundError(f"constraint script {name!r} not found")
    raw = path.read_bytes()
    try:
        source = raw.decode("ascii")
    except UnicodeDecodeError as exc:
        line = raw[:exc.start].count(b"\n") + 1
        raise ScriptSyntaxError("non-ASCII byte in script", name, line) from None
    return parse_script(Path(name).name, source, wrap=wrap)


def load_scripts(names, wrap=False, search_path=None):
    """Load every script before any input is touched (fail fast)."""
    return [load_script(n, wrap=wrap, search_path=search_path) for n in names]
