import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from otkit.constraints import run_constraints
from otkit.errors import MalformedLineError
from otkit.evaluate import compare_vectors, eval_sort, prune, split_annotated, vector_fields

from conftest import HESSIAN_RANKING


def test_split():
    assert split_annotated("word(ft([])).''*") == ("word(ft([])).", "''*")


def test_split_rejects_line_without_dot():
    with pytest.raises(MalformedLineError):
        split_annotated("garbage-without-dot", 7)


@pytest.mark.parametrize("a, b, expected", [("''******", "'*'******", -1), ("'", "'", 0), ("'*", "'**", -1)])
def test_compare_examples(a, b, expected):
    assert compare_vectors(a, b) == expected
    assert compare_vectors(b, a) == -expected


counts = st.lists(st.integers(0, 6), min_size=1, max_size=5)


def render(fields):
    return "".join("'" + "*" * k for k in fields)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(*[st.lists(st.integers(0, 6), min_size=n, max_size=n)] * 2)))
def test_byte_order_is_strict_domination(pair):
    # oracle: lexicographic comparison of the violation counts, constraint by constraint
    a, b = pair
    expected = (a > b) - (a < b)
    assert compare_vectors(render(a), render(b)) == expected
    assert vector_fields(render(a)) == a


lines = st.lists(st.tuples(st.sampled_from(["a.", "b.", "c(d)."]), counts).map(lambda t: t[0] + render(t[1])),
                 max_size=25)


@given(lines)
def test_sort_is_stable_permutation(batch):
    out = eval_sort(batch)
    assert sorted(out) == sorted(batch)
    # oracle: decorate with input position
    ref = [l for _, _, l in sorted((split_annotated(l)[1], i, l) for i, l in enumerate(batch))]
    assert out == ref
    assert eval_sort(out) == out


@given(lines)
def test_prune_keeps_all_minimal_ties_in_order(batch):
    out = prune(batch)
    if not batch:
        assert out == []
        return
    best = min(split_annotated(l)[1] for l in batch)
    assert out == [l for l in batch if split_annotated(l)[1] == best]
    assert out == [l for l in eval_sort(batch) if split_annotated(l)[1] == best]


def test_prune_example():
    assert prune(["x.'", "y.'*", "z.'"]) == ["x.'", "z.'"]
    assert prune([]) == []


def test_eval_empty():
    assert eval_sort([]) == []


def test_hond_sort_ends_and_ties(scripts, hond_corpus):
    annotated = list(run_constraints([scripts[n] for n in HESSIAN_RANKING], hond_corpus))
    ranked = eval_sort(annotated)
    assert split_annotated(ranked[0])[1] == "''''*'*********"
    assert split_annotated(ranked[-1])[1] == "'**'*'*'****'****************"
    worst = split_annotated(ranked[-1])[1]
    tied = [l for l in annotated if split_annotated(l)[1] == worst]
    assert len(tied) == 4
    assert ranked[-4:] == tied
    assert set(prune(annotated)) == {l for l in annotated if split_annotated(l)[1] == "''''*'*********"}


@pytest.mark.parametrize("corpus", ["ta_corpus", "hond_corpus"])
def test_prune_each_equals_sort_at_end(request, scripts, corpus):
    lines = request.getfixturevalue(corpus)
    ranked = [scripts[n] for n in HESSIAN_RANKING]
    staged = lines
    for script in ranked:
        staged = prune(run_constraints([script], staged))
    at_end = prune(run_constraints(ranked, lines))
    assert staged == at_end
