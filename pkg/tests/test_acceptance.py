"""The acceptance battery: every criterion prints one pass/fail line."""

import pytest

from properads import verify


@pytest.mark.parametrize("key,fn", verify.CRITERIA, ids=[k for k, _ in verify.CRITERIA])
def test_criterion(key, fn, capsys):
    report = fn()
    ok = bool(report.get("ok"))
    with capsys.disabled():
        print(f"criterion {key}: {'PASS' if ok else 'FAIL'}")
    assert ok, report
