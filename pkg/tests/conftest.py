import shutil
from pathlib import Path

import pytest

import otkit
from otkit.constraints import load_script
from otkit.gen import generate
from otkit.grammar import load_grammar

DATA = Path(otkit.__file__).parent / "data"
CONSTRAINTS = DATA / "constraints"
SHIPPED = ["NO-STRUC", "FILL", "PARSE-SEG", "SON]PL", "PARSE-FEAT"]
HESSIAN_RANKING = ["PARSE-FEAT", "FILL", "SON]PL", "PARSE-SEG", "NO-STRUC"]

requires_sed = pytest.mark.skipif(shutil.which("sed") is None, reason="no reference sed")


@pytest.fixture(scope="session")
def hessian():
    return load_grammar(str(DATA / "hessian.gen"))


@pytest.fixture(scope="session")
def ta_corpus(hessian):
    return list(generate(hessian, ["t", "a"], 2))


@pytest.fixture(scope="session")
def hond_corpus(hessian):
    return list(generate(hessian, ["h", "O", "n", "d"], 1))


@pytest.fixture(scope="session")
def scripts():
    return {name: load_script(str(CONSTRAINTS / name)) for name in SHIPPED + ["SON]PL-SONORANT-EPENTHESIS"]}
