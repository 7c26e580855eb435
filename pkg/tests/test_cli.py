"""Command-line behavior: flags, formats, exit codes."""

from __future__ import annotations

import json

import pytest

from multitype.cli import main

FIXTURE = "vars: z1 z2 z3\ngens:\nz1 - z2 + z3^2\nz1^2 - z2^2\n"


@pytest.fixture
def fixture_file(tmp_path):
    path = tmp_path / "fixture.txt"
    path.write_text(FIXTURE, encoding="utf-8")
    return str(path)


def test_text_output(fixture_file, capsys):
    assert main(["--input", fixture_file]) == 0
    out = capsys.readouterr().out
    assert "multitype: (2, 6, 6)" in out


def test_json_output(fixture_file, capsys):
    assert main(["--input", fixture_file, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["multitype"] == [
        {"num": "2", "den": "1"},
        {"num": "6", "den": "1"},
        {"num": "6", "den": "1"},
    ]


def test_verify_flag(fixture_file, capsys):
    assert main(["--input", fixture_file, "--verify"]) == 0
    err = capsys.readouterr().err
    assert "verification passed" in err


def test_trace_flag(fixture_file, capsys):
    assert main(["--input", fixture_file, "--trace"]) == 0
    assert "step 1" in capsys.readouterr().out


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("vars: z1\ngens:\nz1 + 1\n", encoding="utf-8")
    assert main(["--input", str(path)]) == 1


def test_infinite_type_exit_code(tmp_path, capsys):
    path = tmp_path / "line.txt"
    path.write_text("vars: z1 z2\ngens:\nz1\n", encoding="utf-8")
    assert main(["--input", str(path)]) == 2


def test_step_cap_exit_code(fixture_file, capsys):
    assert main(["--input", fixture_file, "--max-steps", "1"]) == 3


def test_missing_file_exit_code(capsys):
    assert main(["--input", "/nonexistent/nowhere.txt"]) == 1


def test_exhaustive_strategy(fixture_file, capsys):
    assert main(["--input", fixture_file, "--strategy", "exhaustive"]) == 0
    assert "multitype: (2, 6, 6)" in capsys.readouterr().out


def test_beta_flag(tmp_path, capsys):
    # truncation at degree 2 keeps the fixture intact
    path = tmp_path / "fixture.txt"
    path.write_text(FIXTURE, encoding="utf-8")
    assert main(["--input", str(path), "--beta", "2"]) == 0
    assert "multitype: (2, 6, 6)" in capsys.readouterr().out
