"""Acceptance criteria 1-12, one test each, all compared exactly.

Each test records a single PASS/FAIL line; the lines are printed in the
pytest terminal summary and by ``python tests/test_acceptance.py``.
"""

import os
import sys

import pytest

from core_lattice import verify

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []

GAMMA_MAX_N = int(os.environ.get("CORE_LATTICE_GAMMA_N", "20"))

# criterion -> (title, suites, wall-clock limit in seconds or None)
CRITERIA = {
    1: ("Anderson count", ["anderson"], 10),
    2: ("Olsson-Stanton maximum", ["olsson_stanton"], None),
    3: ("Armstrong mean", ["armstrong"], None),
    4: ("partition-level oracle", ["partition_oracle"], 120),
    5: ("oversemigroup counts", ["oversemigroups"], 30),
    6: ("genus stratification", ["stratification"], None),
    7: ("symmetric oversemigroups", ["symmetric"], None),
    8: ("counting propositions", ["counting"], None),
    9: ("bijection and structure", ["bijection"], None),
    10: ("anti-atom suite and tree labels", ["antiatom", "figure2"], 60),
    11: ("gamma_N and S(N)", ["gamma"], None),
    12: ("semigroup tree", ["tree"], None),
}


def evaluate(number):
    title, names, limit = CRITERIA[number]
    results = [verify.SUITES[n](**({"max_n": GAMMA_MAX_N} if n == "gamma" else {})) for n in names]
    elapsed = sum(r.elapsed for r in results)
    problems = [f for r in results for f in r.failures]
    problems += [f"{c.label}: observed {c.observed}" for r in results for c in r.checks if not c.passed]
    if limit is not None and elapsed > limit:
        problems.append(f"took {elapsed:.1f}s, limit {limit}s")
    checked = sum(r.checked for r in results)
    status = "PASS" if not problems else "FAIL"
    line = f"criterion {number}: {status} {title} ({checked} checks, {elapsed:.2f}s)"
    if problems:
        line += " | " + "; ".join(problems)
    return not problems, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, line = evaluate(number)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        ok, line = evaluate(n)
        failed += not ok
        print(line, flush=True)
    sys.exit(1 if failed else 0)
