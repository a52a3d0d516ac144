#!/usr/bin/env python3
"""Upper Hessian plural of /hOnd/ under the five-constraint ranking.

Reports the number of candidate lines, the top three and the bottom line
of the sorted tableau, how many candidates tie for the worst vector, and
the winner drawn as a tree.
"""

import argparse
from dataclasses import dataclass, field

from otkit.constraints import load_scripts, run_constraints
from otkit.evaluate import eval_sort, split_annotated
from otkit.gen import generate
from otkit.pipeline import load_checked_grammar
from otkit.render import count_format, render_line

HESSIAN_RANKING = ["PARSE-FEAT", "FILL", "SON]PL", "PARSE-SEG", "NO-STRUC"]


@dataclass
class HondConfig:
    grammar: str = "hessian"
    markers: list = field(default_factory=lambda: ["h", "O", "n", "d"])
    max_epenthesis: int = 1
    ranking: list = field(default_factory=lambda: list(HESSIAN_RANKING))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("ranking", nargs="*", help="constraint files, highest ranked first")
    args = parser.parse_args(argv)
    cfg = HondConfig(ranking=args.ranking or list(HESSIAN_RANKING))

    grammar = load_checked_grammar(cfg.grammar)
    lines = list(generate(grammar, cfg.markers, cfg.max_epenthesis))
    ranked = eval_sort(run_constraints(load_scripts(cfg.ranking), lines))
    worst = split_annotated(ranked[-1])[1]
    ties = sum(split_annotated(l)[1] == worst for l in ranked)

    print(f"ranking: {' >> '.join(cfg.ranking)}")
    print(f"{len(ranked)} candidate lines, {ties} tie for the worst vector {worst}")
    blocks = list(count_format(ranked))
    print("\n".join(blocks[:9]))
    print("...")
    print(len(ranked))
    print("\n".join(blocks[-2:]))
    print()
    print(render_line(ranked[0]), end="")


if __name__ == "__main__":
    main()
