import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize(
    "name, expected",
    [
        ("ta_example.py", "432 candidates"),
        ("hond_plural.py", "2144 candidate lines, 4 tie"),
        ("rerank_experiment.py", "demoting FILL keeps the Hessian winner: True"),
    ],
)
def test_experiment_script_runs(name, expected, tmp_path):
    r = subprocess.run([sys.executable, str(SCRIPTS / name)], capture_output=True, text=True, cwd=tmp_path)
    assert r.returncode == 0, r.stderr
    assert expected in r.stdout
