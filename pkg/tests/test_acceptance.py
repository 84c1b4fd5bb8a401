"""The thirteen acceptance criteria, one test each, at exact tolerance.

Run directly (``python3 tests/test_acceptance.py``) for one PASS/FAIL line per
criterion; under pytest the same lines are repeated in the terminal summary.
"""
from __future__ import annotations

import sys

import pytest

from colorbraid.acceptance import CRITERIA, run_criterion

RESULTS: dict[int, str] = {}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    crit = run_criterion(number)
    RESULTS[number] = crit.line()
    print(crit.line())
    for note in crit.notes:
        print("    " + note)
    assert crit.passed, crit.line() + "".join("\n    " + n for n in crit.notes)


if __name__ == "__main__":
    failed = 0
    for k in sorted(CRITERIA):
        crit = run_criterion(k)
        failed += not crit.passed
        print(crit.line(), flush=True)
        for note in crit.notes:
            print("    " + note)
    sys.exit(1 if failed else 0)
