import json

import pytest

from conjclass import suites


@pytest.mark.parametrize("name", ["tables", "wreath", "oracle"])
def test_suites_pass(name):
    rep = suites.run_suite(name)
    assert rep.passed, rep.to_text()
    assert rep.checks


def test_inequalities_suite_small():
    rep = suites.inequalities_suite(d_max=200)
    assert rep.passed, rep.to_text()


def test_unknown_suite():
    with pytest.raises(ValueError):
        suites.run_suite("nope")


def test_report_json_is_stable():
    a = suites.run_suite("wreath").to_json()
    assert a == suites.run_suite("wreath").to_json()
    assert json.loads(a)["status"] == "pass"
