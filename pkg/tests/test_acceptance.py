"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines.
"""

import json

import pytest

from intposets.checks import CRITERIA, run_criterion

from .conftest import CRITERION_LINES


def _describe(res) -> str:
    out = [res.line()]
    for rep in res.failures():
        out.append(f"    FAILED  {rep.claim}: {json.dumps(rep.counterexample, sort_keys=True)}")
    for rep in res.expected_failures:
        out.append(f"    expected counterexample  {rep.claim}")
    for rep in res.findings:
        out.append(f"    finding  {rep.claim}: {json.dumps(rep.details, sort_keys=True, default=str)[:300]}")
    return "\n".join(out)


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    res = run_criterion(number)
    CRITERION_LINES[number] = res.line()
    print()
    print(_describe(res))
    assert res.reports, "a criterion with no claims proves nothing"
    assert res.passed, "\n".join(f"{r.claim}: {r.counterexample}" for r in res.failures())
