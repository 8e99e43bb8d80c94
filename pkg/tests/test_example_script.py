import runpy
from pathlib import Path

import pytest

SCRIPT = Path(__file__).parent.parent / "Examples" / "example.py"


@pytest.mark.slow
def test_runs_from_any_directory(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    runpy.run_path(str(SCRIPT), run_name="__main__")
    lines = capsys.readouterr().out.splitlines()

    assert lines[0] == "p = (c', b', c', a', b')"
    assert lines[1] == "P(p) = (c', 1, 1, 1, 1)"
