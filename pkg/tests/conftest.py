import io
import json

import pytest

from core_lattice.cli import main

ACCEPTANCE_LINES = []


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""

    def run(*argv):
        out = io.StringIO()
        code = main(list(argv), out=out)
        err = capsys.readouterr().err
        return code, out.getvalue(), err

    return run


@pytest.fixture
def json_lines():
    def parse(text):
        return [json.loads(line) for line in text.splitlines() if line.strip()]

    return parse


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
