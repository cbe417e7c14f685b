import numpy as np
import pytest

from qca.ccmap import cc
from qca.finrep.ar import CCObject
from qca.finrep.rep import simple
from qca.qtorus import parse, render, specialize
from qca.scalars import FORMAL, SqrtRing
from qca.seeds import (QuantumSeed, e_matrix, is_bar_invariant, mutate, mutate_matrix,
                       mutate_sequence, seeds_within)


def test_matrix_mutation_involution(kron):
    for k in (1, 2):
        assert np.array_equal(mutate_matrix(mutate_matrix(kron.btilde, k), k), kron.btilde)


def test_mutated_lambda(kron):
    s = mutate(QuantumSeed.initial(kron), 1)
    E = e_matrix(kron.btilde, 1)
    assert np.array_equal(s.lam, E.T @ kron.lam @ E)


def test_first_mutation_formula(kron):
    s = mutate(QuantumSeed.initial(kron), 1)
    assert render(s.variables[0]) == "X[(-1,2,1,0)] + X[(-1,0,0,0)]"


def test_frozen_oracle_seq12(kron):
    s = mutate_sequence(QuantumSeed.initial(kron), [1, 2])
    expected = "X[(0,-1,0,0)] + X[(-2,3,2,1)] + (v + v^-1)*X[(-2,1,1,1)] + X[(-2,-1,0,1)]"
    assert render(s.variables[1]) == expected
    assert parse(expected, s.torus) == s.variables[1]


@pytest.mark.parametrize("which", ["kron", "lat_a2"])
def test_involution_and_bar_invariance(which, request):
    lat = request.getfixturevalue(which)
    start = QuantumSeed.initial(lat)
    for s in seeds_within(start, 3):
        for k in range(1, s.n + 1):
            back = mutate(mutate(s, k), k)
            assert back.variables == s.variables
            assert np.array_equal(back.lam, s.lam)
        assert all(is_bar_invariant(x) for x in s.cluster())


def test_distance_one_matches_simple_characters(kron):
    for p in (2, 3):
        s0 = QuantumSeed.initial(kron, FORMAL)
        for k in (1, 2):
            y = specialize(mutate(s0, k).variables[k - 1], p)
            assert y == cc(CCObject(simple(kron.quiver, p, k)), kron)


def test_frozen_direction_rejected(kron):
    with pytest.raises(ValueError):
        mutate(QuantumSeed.initial(kron), 3)


def test_seed_dump(kron):
    s = mutate(QuantumSeed.initial(kron, SqrtRing(2)), 2)
    d = s.to_json()
    assert d["history"] == [2]
    assert "frozen X4" in s.to_text()
