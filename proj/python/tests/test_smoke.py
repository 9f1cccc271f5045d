import json

import pytest

import schurring as sr


def test_group_basics():
    g = sr.AbelianGroup([3, 9])
    assert len(g) == 27 and g.exponent == 9
    assert g.element(g.index([2, 5])) == [2, 5]
    assert g.mul(g.index([1, 1]), g.inv(g.index([1, 1]))) == 0
    assert len(g.subgroups()) == 10


def test_enumeration_counts():
    assert len(sr.enumerate_srings(sr.AbelianGroup([3, 3]))) == 40
    rings = sr.enumerate_srings(sr.AbelianGroup([3, 9]), jobs=2)
    assert len(rings) == 391
    classes = sr.classify_up_to_cayley(sr.filter_rings(rings, "regular,trivial-radical"))
    assert len(classes) == 13
    assert sum(size for _, size in classes) == 53
    assert len(sr.cyclotomic_rings(sr.AbelianGroup([8]))) == 5


def test_oracle_on_small_group():
    g = sr.AbelianGroup([2, 4])
    assert sr.enumerate_srings(g) == sr.enumerate_srings_brute(g)


def test_json_round_trip():
    a = sr.table1(6, 2)
    text = a.to_json()
    b = sr.SRing.from_json(text)
    assert a == b and hash(a) == hash(b)
    doc = json.loads(text)
    assert doc["group"] == [3, 9]
    assert len(doc["classes"]) == a.rank


def test_validation_errors():
    g = sr.AbelianGroup([9])
    bad = [[0], [1, 2], [3, 4, 5, 6, 7, 8]]
    assert "inverse" in sr.validate(g, bad).lower()
    with pytest.raises(sr.ValidationError):
        sr.make_sring(g, bad)
    with pytest.raises(sr.MalformedInput):
        sr.SRing.from_json("{")
    assert issubclass(sr.BudgetExceeded, sr.SchurError)


def test_schurity():
    r = sr.is_schurian(sr.table1(6, 2))
    assert r["schurian"] and r["aut_order"] == 81 and r["witness"] is None
    non = [a for a in sr.enumerate_srings(sr.AbelianGroup([5, 5]), jobs=2)
           if not sr.is_schurian(a)["schurian"]]
    assert len(non) == 125
    r = sr.is_schurian(non[0])
    assert r["witness_verified"]
    with pytest.raises(sr.BudgetExceeded):
        sr.is_schurian(sr.table1(9, 3), search_budget=2)


def test_constructions():
    z3 = sr.group_ring(sr.AbelianGroup([3]))
    w = sr.wreath(z3, z3)
    assert w.rank == 5 and w.group.orders == [3, 3]
    assert sr.tensor(z3, z3) == sr.group_ring(sr.AbelianGroup([3, 3]))
    c = sr.cyclotomic_by_powers(sr.AbelianGroup([9]), [8])
    assert c.classes[1] == [1, 8]
    t = sr.table1(1, 2)
    assert sr.is_regular(t) and sr.ring_radical(t) == [0]


def test_single_claims():
    claims = [sr.check_table1(2), sr.check_regular_classification(2), sr.check_all_schurian(2, jobs=2)]
    assert all(c["status"] == "pass" for c in claims), claims
    assert claims[0]["id"] == "table1-n2"
    assert {"id", "status", "detail", "seconds"} <= set(claims[0])
