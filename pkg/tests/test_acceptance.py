"""Acceptance gate: every recorded criterion must pass at exact equality.

One test per criterion; each prints its own pass/fail line.  The same
criterion functions back the `ptsep verify` command.
"""

import pytest

from ptsep.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize(
    "number,name", [(num, name) for num, name, _ in CRITERIA], ids=lambda v: str(v)
)
def test_criterion(number, name):
    result = run_criterion(number)
    print(result.line)
    detail = "; ".join(result.failures)
    assert result.ok, f"criterion {number} ({name}): {detail}"
