"""Acceptance criteria 1-12, one test each."""

import pytest

from wittaut.acceptance import CRITERIA, run_criterion

LINES = []


@pytest.mark.parametrize("k", sorted(CRITERIA), ids=lambda k: f"criterion_{k:02d}")
def test_criterion(k):
    r = run_criterion(k)
    line = (f"{'PASS' if r.passed else 'FAIL'} criterion {k:2d} {r.name}: {r.detail} "
            f"[{r.seconds:.2f} s / {r.budget} s]")
    LINES.append(line)
    print(line)
    assert r.passed, line
