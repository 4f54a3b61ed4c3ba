"""Acceptance battery: one test (and one pass/fail line) per criterion."""

import pytest

from mcfans.verify import CRITERIA


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[n for (n, _f) in CRITERIA])
def test_acceptance(name, fn):
    try:
        detail = fn()
    except Exception as exc:
        print(f"FAIL {name}: {exc}")
        raise
    print(f"PASS {name}: {detail}")
