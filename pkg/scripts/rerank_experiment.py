#!/usr/bin/env python3
"""Reranking experiment for the Standard German plural of /hund/.

Demoting FILL below SON]PL and PARSE-SEG is supposed to favour final schwa
epenthesis. With featureless epenthesis SON]PL cannot be satisfied, so the
Hessian winner survives. Letting epenthetic slots count as sonorant inside
SON]PL (the SON]PL-SONORANT-EPENTHESIS variant) flips the winner to an
epenthesis-final candidate.
"""

import argparse
from dataclasses import dataclass, field

from otkit.pipeline import RunConfig, run

HESSIAN = ["PARSE-FEAT", "FILL", "SON]PL", "PARSE-SEG", "NO-STRUC"]
DEMOTED_FILL = ["PARSE-FEAT", "SON]PL", "PARSE-SEG", "FILL", "NO-STRUC"]
SONORANT_EPENTHESIS = ["PARSE-FEAT", "SON]PL-SONORANT-EPENTHESIS", "PARSE-SEG", "FILL", "NO-STRUC"]


@dataclass
class RerankConfig:
    grammar: str = "hessian"
    inputs: list = field(default_factory=lambda: [["h", "u", "n", "d"], ["h", "O", "n", "d"]])
    max_epenthesis: int = 1


def describe(label, report):
    print(f"  {label:<22} {report.winner}")
    print(f"  {'':<22} vector {report.vector}, {report.ties} tied")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--show-trees", action="store_true", help="also draw each winner")
    args = parser.parse_args(argv)
    cfg = RerankConfig()

    for markers in cfg.inputs:
        print(f"input [{','.join(markers)}], at most {cfg.max_epenthesis} epenthetic slot(s)")
        reports = {}
        for label, ranking in (("Hessian ranking", HESSIAN), ("FILL demoted", DEMOTED_FILL),
                               ("sonorant epenthesis", SONORANT_EPENTHESIS)):
            reports[label] = run(RunConfig(cfg.grammar, markers, cfg.max_epenthesis, ranking))
            describe(label, reports[label])
            if args.show_trees:
                print(reports[label].tree)
        same = reports["FILL demoted"].winner.split(".")[0] == reports["Hessian ranking"].winner.split(".")[0]
        print(f"  demoting FILL keeps the Hessian winner: {same}")
        print()


if __name__ == "__main__":
    main()
