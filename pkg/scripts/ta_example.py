#!/usr/bin/env python3
"""Worked example: /ta/ through GEN, two constraints and EVAL.

Prints the candidate count, the first four and last two candidates in
generation order, the annotated first four, and the winning tree.
"""

import argparse
from dataclasses import dataclass, field

from otkit.constraints import load_scripts, run_constraints
from otkit.evaluate import eval_sort
from otkit.gen import generate
from otkit.pipeline import load_checked_grammar
from otkit.render import count_format, render_line


@dataclass
class TaConfig:
    grammar: str = "hessian"
    markers: list = field(default_factory=lambda: ["t", "a"])
    max_epenthesis: int = 2
    ranking: list = field(default_factory=lambda: ["PARSE-SEG", "NO-STRUC"])


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-epenthesis", type=int, default=TaConfig.max_epenthesis)
    args = parser.parse_args(argv)
    cfg = TaConfig(max_epenthesis=args.max_epenthesis)

    grammar = load_checked_grammar(cfg.grammar)
    lines = list(generate(grammar, cfg.markers, cfg.max_epenthesis))
    print(f"{len(lines)} candidates")
    for line in lines[:4]:
        print(line)
    print("...")
    for line in lines[-2:]:
        print(line)

    annotated = list(run_constraints(load_scripts(cfg.ranking), lines))
    print()
    print("\n".join(count_format(annotated[:4])))
    print()
    print(render_line(eval_sort(annotated)[0]), end="")


if __name__ == "__main__":
    main()
