"""EVAL as sorting: rank annotated candidate lines by their violation vectors.

An annotated line is the flat candidate (ending in its ``.``) followed
directly by the vector, e.g. ``word(ft([])).''*``. Each constraint field of
the vector is a ``'`` followed by one ``*`` per violation. Because ``'``
(39) sorts before ``*`` (42) and a field boundary is always ``'``, plain
byte-wise comparison of vectors is harmony order under strict domination.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import MalformedLineError

NON_VIOLATION = "'"
VIOLATION = "*"


def split_annotated(line, line_number=None):
    """Split a line into ``(candidate, vector)`` at the first ``.``."""
    cut = line.find(".")
    if cut < 0:
        raise MalformedLineError(f"no '.' separator in {line!r}", line_number)
    return line[: cut + 1], line[cut + 1:]


def vector_of(line, line_number=None):
    return split_annotated(line, line_number)[1]


def is_vector(text):
    return text == "" or (text[0] == NON_VIOLATION and set(text) <= {NON_VIOLATION, VIOLATION})


def vector_fields(vector):
    """Violation counts per constraint, e.g. ``"''***"`` -> ``[0, 3]``."""
    if not is_vector(vector):
        raise ValueError(f"not a violation vector: {vector!r}")
    return [len(f) for f in vector.split(NON_VIOLATION)[1:]]


def compare_vectors(a, b):
    """-1, 0 or 1 by byte-wise order (a proper prefix sorts first)."""
    return (a > b) - (a < b)


def _keyed(lines: Iterable[str]):
    for i, line in enumerate(lines, start=1):
        yield vector_of(line, i), line


def eval_sort(lines: Iterable[str]) -> list[str]:
    """Stable ascending sort by violation vector; the winner comes first."""
    keyed = list(_keyed(lines))
    keyed.sort(key=lambda kv: kv[0])
    return [line for _, line in keyed]


def prune(lines: Iterable[str]) -> list[str]:
    """Keep only the lines whose vector is minimal, in input order."""
    keyed = list(_keyed(lines))
    if not keyed:
        return []
    best = min(v for v, _ in keyed)
    return [line for v, line in keyed if v == best]

