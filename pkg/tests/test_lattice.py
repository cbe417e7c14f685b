import numpy as np
import pytest

from qca.lattice import (IceQuiver, Lattice, QuiverError, check_compatible, framed_quiver, matrices_from_quiver,
                         solve_lambda)


def test_kronecker_matrices(kron):
    assert kron.btilde.tolist() == [[0, 2], [-2, 0], [-1, 0], [0, -1]]
    assert kron.rtilde.tolist() == [[0, 0], [2, 0], [1, 0], [0, 1]]
    assert kron.itilde.tolist() == [[1, 0], [0, 1], [0, 0], [0, 0]]
    assert kron.euler.tolist() == [[1, 0], [-2, 1]]


def test_kronecker_lambda_is_unit_compatible(kron):
    # lambda (-btilde) = itilde, exactly
    assert np.array_equal(kron.lam @ (-kron.btilde), kron.itilde)
    assert check_compatible(kron.lam, kron.btilde).d == (1, 1)


def test_euler_form(kron):
    # <S1, S2> = 0 and <S2, S1> = -2 for the double arrow 1 -> 2
    assert kron.euler_form((1, 0), (0, 1)) == 0
    assert kron.euler_form((0, 1), (1, 0)) == -2
    assert kron.euler_form((1, 1), (1, 1)) == 0


def test_solve_lambda_framed():
    for arrows in ([(1, 2)], [(1, 2), (2, 3)], [(1, 2), (1, 2)], [(2, 1), (3, 2)]):
        q = framed_quiver(max(max(a) for a in arrows), arrows)
        bt, _, it, _ = matrices_from_quiver(q)
        lam = solve_lambda(bt, it)
        assert lam is not None
        assert np.array_equal(np.asarray(lam) @ (-bt), it)
        assert np.array_equal(np.asarray(lam).T, -np.asarray(lam))


def test_incompatible_reports_reason(kron):
    bad = kron.lam.copy()
    bad[0, 2], bad[2, 0] = 2, -2
    comp = check_compatible(bad, kron.btilde)
    assert not comp
    assert comp.reason


def test_quiver_shape():
    q = IceQuiver(4, 2, [(1, 2), (1, 2), (1, 3), (2, 4)])
    assert q.is_source(1) and not q.is_sink(1)
    assert q.topological_order() == [1, 2, 3, 4]
    assert len(q.paths(1, 2)) == 2
    r = q.reflect(1)
    assert r.is_sink(1)
    assert r.reflect(1) == q
    with pytest.raises(QuiverError):
        q.reflect(2)
