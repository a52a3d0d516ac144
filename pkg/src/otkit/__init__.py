"""otkit: Optimality Theory with a labelled-CFG GEN, stream-editor constraints and EVAL by sorting."""

__version__ = "0.1.0"

from .constraints import ConstraintScript, load_script, parse_script, run_constraints, run_script_on_line
from .errors import OtkitError
from .evaluate import compare_vectors, eval_sort, prune, split_annotated
from .gen import InputSpec, count_candidates, flatten, generate
from .grammar import GenGrammar, check_left_recursion, load_grammar, parse_gen_grammar, resolve_label
from .pipeline import RunConfig, run
from .render import count_format, paginate, parse_flat, render_tree

__all__ = [
    "ConstraintScript",
    "GenGrammar",
    "InputSpec",
    "OtkitError",
    "RunConfig",
    "check_left_recursion",
    "compare_vectors",
    "count_candidates",
    "count_format",
    "eval_sort",
    "flatten",
    "generate",
    "load_grammar",
    "load_script",
    "paginate",
    "parse_flat",
    "parse_gen_grammar",
    "parse_script",
    "prune",
    "render_tree",
    "resolve_label",
    "run",
    "run_constraints",
    "run_script_on_line",
    "split_annotated",
]
