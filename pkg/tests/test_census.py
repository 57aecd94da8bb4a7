import json

import pytest

from conjclass import census as C
from conjclass.errors import CensusError

HEADER = ",".join(C.FIELDS)


@pytest.fixture(scope="module")
def rows():
    return C.load()


def test_bundled_census_loads(rows):
    assert C.table_counts(rows) == {"final_exceptions": 19, "sporadic": 6, "alt_ex": 10,
                                    "psl_ex": 12, "as_ex": 10}
    assert all(2 * r.class_count >= n for r in rows for n in r.degrees)


def test_json_mirror_matches_csv(rows):
    path = C.default_path().with_suffix(".json")
    assert C.load(path) == rows
    assert C.dumps_json(rows) == path.read_text(encoding="utf-8")


def test_csv_round_trip_is_byte_identical(rows):
    text = C.default_path().read_text(encoding="utf-8")
    assert C.dumps_csv(C.loads_csv(text)) == text
    assert C.loads_json(C.dumps_json(rows)) == rows


def test_empty_files(tmp_path):
    for name in ("empty.csv", "empty.json"):
        p = tmp_path / name
        p.write_text("")
        assert C.load(p) == []


def test_row_violating_half_degree_is_rejected():
    text = HEADER + "\nA5,Alternating,d=5,5,5,60,alt_ex,,\nBad,Alternating,d=7,30,9,2520,alt_ex,,\n"
    with pytest.raises(CensusError) as exc:
        C.loads_csv(text)
    assert exc.value.line == 3
    assert exc.value.row == "alt_ex:Bad"


@pytest.mark.parametrize("line", [
    "X,Alternating,d=5,5,notanint,60,alt_ex,,",
    "X,Alternating,d=5,5,5,60,nosuchtable,,",
    "X,Alternating,d=5,,5,60,alt_ex,,",
    "X,Nope,d=5,5,5,60,alt_ex,,",
    ",Alternating,d=5,5,5,60,alt_ex,,",
])
def test_malformed_rows(line):
    with pytest.raises(CensusError):
        C.loads_csv(HEADER + "\n" + line + "\n")


def test_bad_header_and_duplicates():
    with pytest.raises(CensusError):
        C.loads_csv("label,k\nA5,5\n")
    row = "A5,Alternating,d=5,5,5,60,alt_ex,,"
    with pytest.raises(CensusError):
        C.loads_csv("\n".join([HEADER, row, row]) + "\n")
    with pytest.raises(CensusError):
        C.loads_json("{not json")
    with pytest.raises(CensusError):
        C.loads_json(json.dumps({"label": "A5"}))


def test_exception_rows_recompute(rows):
    rep = C.verify_exception_rows(rows)
    assert rep.passed, rep.to_text()
    assert rep.summary


def test_recompute_routes_agree():
    for label, routes in C.RECOMPUTE.items():
        values = {C.recompute(r) for r in routes}
        assert len(values) == 1, label
    with pytest.raises(ValueError):
        C.recompute("guess:A5")


def test_k_greater_than_m(rows):
    assert C.k_greater_than_m(rows) == C.EXPECTED_K_GREATER_THAN_M
    assert C.verify_k_greater_than_m(rows).passed


def test_4k2_scan(rows):
    rep = C.verify_4k2_exceptions(rows)
    assert rep.passed
    assert set(rep.summary["violating_socles"]) == C.ALLOWED_4K2_SOCLES


def test_power_bounds_and_cross_tables(rows):
    assert C.verify_power_bounds(rows).passed
    assert C.verify_cross_tables(rows).passed
    assert C.verify_orders(rows).passed
    assert C.minimal_degree_consistency(rows).passed


def test_tampered_k_is_caught(rows):
    bad = [C.CensusRow(r.label, r.socle, r.degrees, r.class_count + 1, r.source_table,
                       r.socle_order, r.provenance, r.alias_of) if r.label == "M11" else r
           for r in rows]
    rep = C.verify_all(bad)
    assert not rep.passed
    assert any("M11" in c.id for c in rep.failures)


def test_report_serialisation(rows):
    rep = C.verify_orders(rows)
    d = json.loads(rep.to_json())
    assert d["status"] == "pass" and d["n_checks"] == len(rep.checks)
    assert "\x1b[" not in rep.to_text(color=False)
    assert "\x1b[32m" in rep.to_text(color=True)
    merged = C.merge("m", [rep, rep])
    assert len(merged.checks) == 2 * len(rep.checks)
