"""Acceptance criteria, one test per criterion; each prints a PASS/FAIL line."""

import pytest

from rbhopf.acceptance import CRITERIA, fixtures
from rbhopf.groups import cyclic, enumerate_rb_group, klein_four

from conftest import CRITERION_LINES


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"criterion_{c.number}")
def test_criterion(criterion):
    res = criterion()
    print(res.line())
    CRITERION_LINES.append(res.line())
    for d in res.details:
        print("    " + d)
    assert res.ok, "\n".join(res.details)


def test_oracle_covers_56_monomials():
    assert len(fixtures().U.basis(5)) == 56


def test_enumeration_counts_direct():
    assert len(enumerate_rb_group(cyclic(2))) == 2
    assert len(enumerate_rb_group(klein_four())) == 16


def test_selftest_cli(capsys):
    from rbhopf.cli import main
    assert main(["selftest", "--format", "text"]) == 0
    assert capsys.readouterr().out.rstrip().endswith("OK")
