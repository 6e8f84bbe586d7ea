import json

import pytest

from hampair.core import LabeledWalk, cayley
from hampair.family_one import realize_disjoint_pair
from hampair.family_two import build_family_two
from hampair.products import build_three_factor
from hampair.witness import (
    FORMAT_VERSION,
    MalformedWitness,
    WitnessFile,
    witness_from_json,
)


def _family_two_witness() -> WitnessFile:
    p1, p2 = build_family_two(1, 3)
    return WitnessFile("two", {"a": 1, "L": 3}, p1.digraph, p1, p2)


def test_round_trip_bit_exact():
    wf = _family_two_witness()
    text = wf.to_json()
    again = witness_from_json(text)
    assert again.to_json() == text
    assert again.family == "two"
    assert again.params == {"a": 1, "L": 3}
    assert again.path1 == wf.path1 and again.path2 == wf.path2


def test_verify_ok():
    wf = _family_two_witness()
    ok, reason = wf.verify()
    assert ok and reason == "ok"


def test_verify_catches_broken_path():
    wf = _family_two_witness()
    bad = LabeledWalk(wf.digraph, wf.path1.start, wf.path1.labels[:-1])
    broken = WitnessFile(wf.family, wf.params, wf.digraph, bad, wf.path2)
    ok, reason = broken.verify()
    assert not ok and "path1" in reason


def test_verify_catches_arc_overlap():
    wf = _family_two_witness()
    clash = WitnessFile(wf.family, wf.params, wf.digraph, wf.path1, wf.path1)
    ok, reason = clash.verify()
    assert not ok and "overlap" in reason


def test_three_generator_round_trip():
    w1, w2 = build_three_factor(2, 3, 2)
    wf = WitnessFile("product", {"m": 2, "n": 3, "l": 2}, w1.digraph, w1, w2)
    text = wf.to_json()
    assert "gen_c" in json.loads(text)
    again = witness_from_json(text)
    assert again.to_json() == text
    assert again.verify() == (True, "ok")


def test_field_order_is_stable():
    doc = json.loads(_family_two_witness().to_json())
    assert list(doc) == [
        "version",
        "family",
        "params",
        "group_orders",
        "gen_a",
        "gen_b",
        "path1",
        "path2",
    ]
    assert doc["version"] == FORMAT_VERSION


def test_malformed_json_rejected():
    with pytest.raises(MalformedWitness):
        witness_from_json("{not json")


def test_missing_field_rejected():
    doc = json.loads(_family_two_witness().to_json())
    del doc["path2"]
    with pytest.raises(MalformedWitness):
        witness_from_json(json.dumps(doc))


def test_unsupported_version_rejected():
    doc = json.loads(_family_two_witness().to_json())
    doc["version"] = FORMAT_VERSION + 1
    with pytest.raises(MalformedWitness):
        witness_from_json(json.dumps(doc))


def test_bad_label_rejected():
    doc = json.loads(_family_two_witness().to_json())
    doc["path1"]["labels"] = "AXB"
    with pytest.raises(MalformedWitness):
        witness_from_json(json.dumps(doc))


def test_swapped_generators_fail_verification():
    # same label data, but the labels now mean the wrong steps
    r = realize_disjoint_pair(10, 4)
    d = cayley([10], 4, 5)
    wf = WitnessFile("one", {"k": 10, "a": 4}, d, r.path1, r.path2)
    doc = json.loads(wf.to_json())
    doc["gen_a"], doc["gen_b"] = doc["gen_b"], doc["gen_a"]
    ok, _ = witness_from_json(json.dumps(doc)).verify()
    assert not ok


def test_family_one_realization_round_trip():
    r = realize_disjoint_pair(10, 4)
    d = cayley([10], 4, 5)
    wf = WitnessFile("one", {"k": 10, "a": 4}, d, r.path1, r.path2)
    assert witness_from_json(wf.to_json()).verify() == (True, "ok")
