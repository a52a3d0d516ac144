import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from otkit.errors import GrammarSyntaxError, OtkitError, UnknownMarkerError
from otkit.grammar import (
    EMPTY,
    TERMINAL,
    check_left_recursion,
    find_grammar_file,
    format_grammar,
    load_grammar,
    parse_gen_grammar,
    resolve_label,
)

from strategies import grammar_sources


def test_startsymbol_and_single_rule():
    g = parse_gen_grammar("startsymbol word. word ---> ft.")
    assert g.startsymbol == "word"
    assert len(g.rules) == 1
    assert not g.defaulted_start


def test_labelled_rule_with_quoted_lhs():
    g = parse_gen_grammar("""a # 'Rt' ---> "SONORANT", "DORSAL".""")
    (rule,) = g.rules
    assert rule.label == "a"
    assert rule.lhs == "Rt"
    assert [(s.kind, s.name) for s in rule.rhs] == [(TERMINAL, "SONORANT"), (TERMINAL, "DORSAL")]


def test_missing_startsymbol_defaults_to_word_with_warning():
    g = parse_gen_grammar("x ---> y. y ---> \"A\".")
    assert g.startsymbol == "word"
    assert g.defaulted_start
    assert g.diagnostics


def test_repeated_startsymbol_last_wins():
    g = parse_gen_grammar("startsymbol a. a ---> \"A\". startsymbol b. b ---> \"B\".")
    assert g.startsymbol == "b"
    assert any("startsymbol" in d for d in g.diagnostics)


def test_comments_whitespace_and_empty_terminal():
    g = parse_gen_grammar("% a comment\n  'Rt'   --->\n []  .  % trailing\n")
    (rule,) = g.rules
    assert rule.rhs[0].kind == EMPTY


@pytest.mark.parametrize(
    "source, line",
    [
        ("word ---> .", 1),
        ("x ---> y.\nword ---> ft", 2),
        ("word --> ft.", 1),
        ("word ---> \"FT.", 1),
        ("word ---> 'ft.", 1),
        ("# word ---> ft.", 1),
        ("a # .", 1),
        ("x ---> y.\n\nx ---> \"ä\".", 3),
        ("x ---> Y.", 1),
    ],
)
def test_syntax_errors_carry_line_numbers(source, line):
    with pytest.raises(GrammarSyntaxError) as info:
        parse_gen_grammar(source)
    assert info.value.line == line
    assert f":{line}:" in str(info.value)


def test_rule_order_is_source_order(hessian):
    lhs = [r.lhs for r in hessian.rules]
    assert lhs[:3] == ["word", "word", "ft"]


def test_hessian_has_no_left_recursion(hessian):
    assert check_left_recursion(hessian) == []


def test_direct_left_recursion():
    g = parse_gen_grammar("startsymbol x. x ---> x, y. y ---> \"A\".")
    assert check_left_recursion(g) == [["x", "x"]]


def test_indirect_left_recursion():
    g = parse_gen_grammar("startsymbol x. x ---> y. y ---> x.")
    assert check_left_recursion(g) == [["x", "y", "x"]]


def test_right_recursion_is_admitted():
    g = parse_gen_grammar("startsymbol x. x ---> \"A\", x. x ---> \"A\".")
    assert check_left_recursion(g) == []


def test_resolve_label(hessian):
    (rule,) = resolve_label(hessian, "t")
    assert rule.lhs == "Rt"
    assert [s.name for s in rule.rhs] == ["SPREAD_GLOTTIS", "CORONAL"]


def test_resolve_unknown_label(hessian):
    with pytest.raises(UnknownMarkerError, match="z triggers no rule"):
        resolve_label(hessian, "z")


def test_duplicate_labels_resolve_to_all_rules_in_file_order():
    source = "startsymbol s.\ns ---> x.\nl # x ---> \"A\".\nx ---> \"C\".\nl # x ---> \"B\".\n"
    g = parse_gen_grammar(source)
    # oracle: linear scan of the source text
    expected = [i + 1 for i, text in enumerate(source.splitlines()) if text.startswith("l #")]
    assert [r.source_line for r in resolve_label(g, "l")] == expected


def test_label_and_category_namespaces_are_separate():
    g = parse_gen_grammar("startsymbol x. x ---> \"A\". x # x ---> \"B\".")
    assert [r.rhs[0].name for r in resolve_label(g, "x")] == ["B"]
    assert [r.rhs[0].name for r in g.plain_rules("x")] == ["A"]


def _shape(g):
    return g.startsymbol, [(r.label, r.lhs, [(s.kind, s.name) for s in r.rhs]) for r in g.rules]


def test_round_trip_hessian(hessian):
    assert _shape(parse_gen_grammar(format_grammar(hessian))) == _shape(hessian)


@settings(max_examples=200, deadline=None)
@given(grammar_sources())
def test_round_trip_random(source):
    g = parse_gen_grammar(source)
    assert _shape(parse_gen_grammar(format_grammar(g))) == _shape(g)


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="ab'\"#-.>,[]% \n\tstarymbol", max_size=40))
def test_parser_is_total(source):
    try:
        parse_gen_grammar(source)
    except GrammarSyntaxError as exc:
        assert exc.line is not None


def test_load_appends_extension_and_searches_env(tmp_path, monkeypatch):
    (tmp_path / "toy.gen").write_text("startsymbol s. s ---> \"A\".\n")
    monkeypatch.setenv("OTKIT_GRAMMAR_PATH", str(tmp_path))
    monkeypatch.chdir(os.path.dirname(__file__))
    assert str(find_grammar_file("toy")) == str(tmp_path / "toy.gen")
    assert load_grammar("toy").startsymbol == "s"


def test_missing_grammar(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    with pytest.raises((OtkitError, FileNotFoundError)):
        load_grammar("missing")


def test_packaged_hessian_is_found_by_name(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert load_grammar("hessian").startsymbol == "word"
