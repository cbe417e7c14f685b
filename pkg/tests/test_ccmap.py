import pytest

from qca.ccmap import (CompatibilityError, as_object, cc, cc_formal, cc_report, cc_shifted, find_grading, in_cone,
                       lambda_vector, support_cone_check, unit_power)
from qca.finrep.ar import CCObject
from qca.finrep.rep import FqRep, projective, simple, zero_module
from qca.lattice import Lattice
from qca.qtorus import parse, render
from qca.scalars import Laurent, SqrtQ, SqrtRing


def test_kronecker_simples(kron):
    q = kron.quiver
    assert render(cc(CCObject(simple(q, 2, 1)), kron)) == "X[(-1,2,1,0)] + X[(-1,0,0,0)]"
    assert render(cc(CCObject(simple(q, 2, 2)), kron)) == "X[(2,-1,0,0)] + X[(0,-1,0,1)]"


def test_a2_frozen_oracles(lat_a2):
    q = lat_a2.quiver
    m11 = FqRep(q, 2, [1, 1, 0, 0], [[[1]], None, None])
    assert render(cc(CCObject(m11), lat_a2)) == "X[(0,-1,0,0)] + X[(-1,0,1,1)] + X[(-1,-1,0,1)]"
    assert render(cc(CCObject(simple(q, 2, 2)), lat_a2)) == "X[(1,-1,0,0)] + X[(0,-1,0,1)]"


def test_shifted_projective_is_monomial(kron):
    obj = CCObject(zero_module(kron.quiver, 3), (1, 0, 0, 0))
    assert cc(obj, kron) == cc_shifted((1, 0, 0, 0), kron, SqrtRing(3))
    assert cc(obj, kron).is_monomial()


def test_lift_from_principal(kron):
    M = simple(kron.quiver.principal(), 2, 1)
    obj = as_object(kron, M)
    assert obj.quiver == kron.quiver


def test_formal_matches_specialized(lat_a2):
    q = lat_a2.quiver
    P2 = projective(q, 5, 2)
    obj = CCObject(P2)
    formal = cc_formal(obj, lat_a2)
    spec = cc(obj, lat_a2)
    for e, c in formal.terms.items():
        assert c.ev(5) == spec.coefficient(e)


def test_report_rows(kron):
    rows = cc_report(CCObject(simple(kron.quiver, 2, 1)), kron)
    assert [r["e"] for r in rows] == [[0, 0], [1, 0]]
    assert all(r["count"] == 1 for r in rows)


def test_requires_unit_compatibility(kron):
    doubled = Lattice(kron.quiver, 2 * kron.lam)
    with pytest.raises(CompatibilityError):
        cc(CCObject(simple(kron.quiver, 2, 1)), doubled)


def test_field_mismatch(kron):
    with pytest.raises(ValueError):
        cc(CCObject(simple(kron.quiver, 2, 1)), kron, q0=3)


def test_unit_power():
    assert unit_power(SqrtQ(2, 0, 1)) == 1
    assert unit_power(SqrtQ(2, 4)) == 4
    assert unit_power(SqrtQ(3, -1, 0)) == 0
    assert unit_power(SqrtQ(2, 3)) is None
    assert unit_power(Laurent.monomial(-3)) == -3


def test_grading_search(kron, lat_a2, lat_a3):
    assert find_grading(kron.btilde) == (-1, 1)
    assert find_grading(lat_a2.btilde) == (-1, 1)
    assert find_grading(lat_a3.btilde) is None


def test_cone():
    assert in_cone((1, 1), [(1, 0), (0, 1)])
    assert not in_cone((-1, 0), [(1, 0), (0, 1)])
    assert in_cone((0, 0), [])


def test_support_cone(lat_a2, kron):
    q = lat_a2.quiver
    for M in (simple(q, 2, 1), simple(q, 2, 2), projective(q, 2, 2)):
        obj = CCObject(M)
        chk = support_cone_check(obj, cc(obj, lat_a2), lat_a2)
        assert chk.ok, chk.reason
    obj = CCObject(simple(kron.quiver, 2, 1))
    assert lambda_vector(obj, kron) == (-1, 2)
