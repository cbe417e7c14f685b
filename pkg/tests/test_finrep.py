import numpy as np
import pytest

from qca.finrep import ar, fp, grass
from qca.finrep.ar import CCObject
from qca.finrep.rep import (BudgetExceeded, FqRep, dim_ext, dim_hom, direct_sum, dual, euler_char, euler_dims,
                            injective, is_indecomposable, is_iso, is_rigid, projective, simple, socle_vector,
                            top_vector, zero_module)
from qca.lattice import IceQuiver


def regular(q, p, a, b):
    return FqRep(q, p, [1, 1] + [0] * (q.m - 2), [[[a]], [[b]]] + [None] * (len(q.arrows) - 2))


# ------------------------------------------------------------------ F_p algebra

def test_fp_basics():
    A = np.array([[1, 2], [2, 4]])
    assert fp.rank(A, 5) == 1
    assert fp.rank(A, 2) == 1
    N = fp.nullspace(A, 5)
    assert N.shape[1] == 1 and not ((A @ N) % 5).any()
    B = np.array([[1, 1], [0, 1]])
    assert np.array_equal((B @ fp.inv(B, 3)) % 3, np.eye(2, dtype=np.int64))
    assert len(list(fp.subspaces(3, 1, 2))) == 7
    assert fp.complement(fp.zeros(0, 0), 0, 2).shape == (0, 0)


# ------------------------------------------------------------- standard modules

def test_standard_modules_kronecker(kron):
    q = kron.quiver
    assert projective(q, 2, 1).dims == (1, 0, 0, 0)
    assert projective(q, 2, 2).dims == (2, 1, 0, 0)
    assert injective(q, 2, 1).dims == (1, 2, 1, 2)
    assert injective(q.principal(), 2, 1).dims == (1, 2)
    assert top_vector(projective(q, 2, 2)) == (0, 1, 0, 0)
    assert socle_vector(injective(q, 2, 2)) == (0, 1, 0, 0)


def test_hom_ext_simples(kron):
    q = kron.quiver
    s1, s2 = simple(q, 2, 1), simple(q, 2, 2)
    assert dim_ext(s2, s1) == 2 and dim_ext(s1, s2) == 0
    assert euler_dims(q, s2.dims, s1.dims) == -2
    assert euler_char(s2, s1) == -2


def test_euler_law_on_regulars(kron):
    q = kron.quiver
    for p in (2, 3):
        R = regular(q, p, 1, 1)
        S = direct_sum(simple(q, p, 1), simple(q, p, 2))
        for X in (R, S):
            for Y in (R, S, projective(q, p, 2)):
                assert dim_hom(X, Y) - dim_ext(X, Y) == euler_dims(q, X.dims, Y.dims)


def test_rigidity_and_indecomposability(kron):
    q = kron.quiver
    R = regular(q, 2, 1, 0)
    assert is_indecomposable(R) and not is_rigid(R)
    assert is_rigid(projective(q, 2, 2))
    assert not is_indecomposable(direct_sum(simple(q, 2, 1), simple(q, 2, 2)))


def test_iso_and_conjugation(kron):
    q = kron.quiver
    R = regular(q, 3, 1, 2)
    g = [np.array([[2]]), np.array([[1]]), np.zeros((0, 0), dtype=np.int64), np.zeros((0, 0), dtype=np.int64)]
    assert is_iso(R, R.conjugate(g))
    assert not is_iso(regular(q, 3, 1, 1), regular(q, 3, 1, 2))
    assert is_iso(regular(q, 3, 1, 1), regular(q, 3, 2, 2))


def test_dual_is_involutive(lat_a3):
    q = lat_a3.quiver
    for M in ar.rigid_indecomposables(q.principal(), 2, 6):
        M = M.on(q)
        assert is_iso(dual(dual(M)).on(q), M)


def test_budget_guard(kron, monkeypatch):
    monkeypatch.setenv("QCA_BUDGET", "10")
    q = kron.quiver
    with pytest.raises(BudgetExceeded):
        ar.modules_with_dims(q, 3, (2, 2, 0, 0))


# ---------------------------------------------------------------- Grassmannians

def test_grassmannian_regular_vs_semisimple(kron):
    q = kron.quiver
    for p in (2, 3, 5):
        R = regular(q, p, 1, p - 1)
        assert grass.grassmannian_counts(R) == {(0, 0, 0, 0): 1, (1, 0, 0, 0): 1, (1, 1, 0, 0): 1}
        S = direct_sum(simple(q, p, 1), simple(q, p, 2))
        assert grass.grassmannian_counts(S)[(0, 1, 0, 0)] == 1


def test_grassmannian_of_projective_cover(kron):
    P2 = projective(kron.quiver, 3, 2)
    # submodules of P2 of dim (1,0): any line in the 2-dim space at vertex 1
    assert grass.grassmannian_count(P2, (1, 0, 0, 0)) == 4


def test_ext_middles_sum_to_ext_size(kron):
    q = kron.quiver
    s1, s2 = simple(q, 2, 1), simple(q, 2, 2)
    mids = grass.ext_middles(s2, s1)
    assert sum(c for _, c in mids) == 2 ** dim_ext(s2, s1)
    assert len(mids) == 4  # split class plus the three regulars R_p(1)


def test_hall_number(kron):
    q = kron.quiver
    R = regular(q, 2, 1, 1)
    assert grass.hall_number(R, simple(q, 2, 2), simple(q, 2, 1)) == 1
    assert grass.hall_number(R, simple(q, 2, 1), simple(q, 2, 2)) == 0


# ------------------------------------------------------------ AR translate

def test_preprojective_orbit(kron):
    P = kron.quiver.principal()
    dims = []
    M = projective(P, 2, 1)
    for _ in range(3):
        dims.append(M.dims)
        M = ar.tau_inv(M)
    assert dims == [(1, 0), (3, 2), (5, 4)]
    assert ar.tau(projective(P, 2, 1)).is_zero()
    assert ar.tau_inv(injective(P, 2, 2)).is_zero()


def test_tau_on_ice_quiver(lat_a2):
    assert ar.tau(simple(lat_a2.quiver, 2, 2)).dims == (1, 0, 1, 0)


@pytest.mark.parametrize("name", ["kron", "lat_a2", "lat_a3"])
def test_ar_duality(name, request):
    lat = request.getfixturevalue(name)
    q = lat.quiver
    mods = [M for M in ar.modules_up_to(q, 2, 2) if not M.is_zero()]
    for M in mods:
        tM = ar.tau(M)
        for N in mods:
            assert dim_ext(M, N) == dim_hom(N, tM)


def test_split_injective(lat_a2):
    q = lat_a2.quiver
    I1 = injective(q, 2, 1)
    X = direct_sum(simple(q, 2, 1), I1)
    rest, mult = ar.split_injective(X)
    assert mult == [1, 0, 0, 0]
    assert is_iso(rest, simple(q, 2, 1))


def test_catalog_counts(kron, lat_a2, lat_a3):
    assert [len(ar.modules_up_to(l.quiver, 2, 3)) for l in (kron, lat_a2, lat_a3)] == [21, 13, 29]
    dims = sorted(M.dims for M in ar.rigid_indecomposables(kron.quiver.principal(), 2, 7))
    assert dims == [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 4), (4, 3)]
    assert len(ar.rigid_indecomposables(lat_a3.quiver.principal(), 2, 6)) == 6


# ----------------------------------------------------------------- reflection

@pytest.mark.parametrize("name", ["kron", "lat_a2", "lat_a3"])
def test_double_reflection(name, request):
    lat = request.getfixturevalue(name)
    q = lat.quiver
    i = 1
    for M in ar.modules_up_to(q, 2, 3):
        if ar.simple_top_count(M, i):
            continue
        back = ar.reflect(i, ar.reflect(i, M))
        assert back.quiver == q
        assert is_iso(back, M)


def test_extended_reflection_rules(kron):
    q = kron.quiver
    s1 = CCObject(simple(q, 2, 1))
    img = ar.extended_reflect(1, s1)
    assert img.module.is_zero() and img.shift == (1, 0, 0, 0)
    back = ar.extended_reflect(1, CCObject(zero_module(q, 2), (1, 0, 0, 0)))
    assert back.module.dims == (1, 0, 0, 0) and back.shift == (0, 0, 0, 0)
    p2 = ar.extended_reflect(1, CCObject(zero_module(q, 2), (0, 1, 0, 0)))
    assert p2.shift == (0, 1, 0, 0)
    assert ar.extended_reflect(1, CCObject(simple(q, 2, 2))).module.dims == (2, 1, 0, 0)


def test_reflect_requires_source(kron):
    with pytest.raises(Exception):
        ar.extended_reflect(2, CCObject(simple(kron.quiver, 2, 2)))


def test_object_requires_principal(kron):
    with pytest.raises(ValueError):
        CCObject(injective(kron.quiver, 2, 1))
