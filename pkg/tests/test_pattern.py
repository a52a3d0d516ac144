import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from otkit.errors import PatternSyntaxError
from otkit.pattern import CharClass, Literal, Star, compile_pattern, substitute

from conftest import requires_sed
from oracles import sed_expr


@pytest.mark.parametrize(
    "pattern, replacement, subject, global_, expected",
    [
        ("[^(]", "", "word(ft(syl(", True, "((("),
        ("22*", "2", "12221", True, "121"),
        ("$", "*", "abc", True, "abc*"),
        ("{", "*", "a{b{c", True, "a*b*c"),
        ("{", "*", "a{b{c", False, "a*b{c"),
        ("x*", "-", "abc", True, "-a-b-c-"),
        ("b*", "-", "abc", True, "-a-c-"),
        ("^a", "", "aaa", True, "aa"),
        ("\\..*", "", "word(ft([])).''*", True, "word(ft([]))"),
        ("[]x]", "!", "a]x", True, "a!!"),
        ("\\n", "'", "ab\ncd", False, "ab'cd"),
        ("a.c", "_", "abcaXc", True, "__"),
        ("[a-c]*", "", "abcd", False, "d"),
    ],
)
def test_substitute_examples(pattern, replacement, subject, global_, expected):
    assert substitute(compile_pattern(pattern), replacement, subject, global_) == expected


def test_leftmost_longest():
    assert substitute(compile_pattern("ab*"), "X", "aabbb") == "Xabbb"
    assert substitute(compile_pattern("ab*"), "X", "aabbb", True) == "XX"


def test_compile_shapes():
    p = compile_pattern("a[^b]*")
    assert p.atoms == (Literal("a"), Star(CharClass(frozenset("b"), True)))
    assert compile_pattern("*a").atoms[0] == Literal("*")
    assert compile_pattern("a$").anchored_end
    assert compile_pattern("a$b").atoms[1] == Literal("$")


@pytest.mark.parametrize("bad", ["", "[abc", "a\\", "\\d", "[z-a]", "[\\q]"])
def test_compile_errors(bad):
    with pytest.raises(PatternSyntaxError):
        compile_pattern(bad)


# ---- differential testing against the system sed -------------------------

ATOMS = ["a", "b", "(", "{", "}", "]", "'", ".", "\\.", "\\*", "\\[", "[ab]", "[^(]", "[a-c]",
         "[]a]", "[^*]", "[(){}]"]


@st.composite
def patterns(draw):
    parts = []
    for atom in draw(st.lists(st.sampled_from(ATOMS), min_size=1, max_size=4)):
        parts.append(atom + ("*" if draw(st.booleans()) else ""))
    src = "".join(parts)
    if draw(st.integers(0, 5)) == 0:
        src = "^" + src
    if draw(st.integers(0, 4)) == 0:
        src += "$"
    return src


subjects = st.text(alphabet="ab(){}*.]'c", max_size=14)


@requires_sed
@settings(max_examples=300, deadline=None)
@given(patterns(), st.sampled_from(["", "X", "**"]), subjects, st.booleans())
def test_agrees_with_sed(pattern, replacement, subject, global_):
    expr = f"s/{pattern}/{replacement}/" + ("g" if global_ else "")
    assert substitute(compile_pattern(pattern), replacement, subject, global_) == sed_expr(expr, subject)
