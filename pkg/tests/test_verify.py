import pytest

from qca import verify as V
from qca.finrep.ar import CCObject
from qca.finrep.rep import FqRep, direct_sum, projective, simple, zero_module


def test_lattice_identities(kron, lat_a3):
    for lat in (kron, lat_a3):
        reps = V.sample_lattice_identities(lat, 50, seed=1)
        assert all(r.passed for r in reps)


def test_hall_kronecker_simples(kron):
    q = kron.quiver
    r = V.verify_hall_multi(simple(q, 2, 2), simple(q, 2, 1), kron)
    assert r.passed
    assert r.details["ext"] == 2


def test_hall_detects_wrong_side(kron):
    q = kron.quiver
    r = V.verify_hall_multi(simple(q, 2, 2), simple(q, 2, 1), kron)
    tampered = V._compare("hall", r.inputs, r.lhs, r.rhs + r.rhs)
    assert tampered.status == V.FAIL and tampered.diff()


def test_onedim_a2(lat_a2):
    q = lat_a2.quiver
    s1, s2 = simple(q, 2, 1), simple(q, 2, 2)
    assert V.verify_onedim(s2, s1, lat_a2).passed
    assert V.verify_onedim(s2, s1, lat_a2, all_classes=True).passed
    assert V.verify_rigid_pair(s2, s1, lat_a2).passed
    assert V.verify_euler_gap(s2, s1, lat_a2).passed


def test_onedim_inapplicable_on_kronecker_simples(kron):
    q = kron.quiver
    r = V.verify_rigid_pair(simple(q, 2, 2), simple(q, 2, 1), kron)
    assert r.status == V.INAPPLICABLE


def test_exchange_instances(kron):
    reps = V.scan_exchange(kron, 2, 3)
    assert V.summarize(reps) == {"PASS": 10, "FAIL": 0, "INAPPLICABLE": 30}


def test_reflection_examples(lat_a2, kron):
    q = lat_a2.quiver
    assert V.verify_reflection(1, CCObject(zero_module(q, 2)), lat_a2).passed
    assert V.verify_reflection(1, CCObject(simple(q, 2, 1)), lat_a2).passed
    assert V.verify_reflection(1, CCObject(simple(q, 2, 2)), lat_a2).passed
    assert V.verify_reflection(1, CCObject(simple(kron.quiver, 3, 2)), kron).passed
    assert V.verify_reflection(2, CCObject(simple(q, 2, 2)), lat_a2).status == V.INAPPLICABLE


def test_reflection_mixed_object_inapplicable(kron):
    q = kron.quiver
    R = FqRep(q, 2, [1, 1, 0, 0], [[[1]], [[1]], None, None])
    r = V.verify_reflection(1, CCObject(R, (1, 0, 0, 0)), kron)
    assert r.status == V.INAPPLICABLE


def test_green_small(lat_a2):
    q = lat_a2.quiver
    s1, s2 = simple(q, 2, 1), simple(q, 2, 2)
    p2 = projective(q, 2, 2)
    assert V.verify_green(s2, s1, s2, s1).passed
    assert V.verify_green(s2, s1, s1, s2).passed
    assert V.verify_green(s1, s2, p2, s1).passed  # dimension mismatch, both sides 0


def test_report_json(lat_a2):
    q = lat_a2.quiver
    r = V.verify_hall_multi(simple(q, 2, 1), simple(q, 2, 2), lat_a2)
    d = r.to_json()
    assert d["status"] == "PASS" and d["identity"] == "hall"
    assert "PASS" in r.line()
