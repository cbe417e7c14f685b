"""
Quantum seed mutation
=====================

Mutate the initial Kronecker seed, watch the new variables stay
bar-invariant, and compare the first mutations with characters of simples.
"""

from qca.ccmap import cc
from qca.finrep.ar import CCObject
from qca.finrep.rep import simple
from qca.lattice import kronecker
from qca.qtorus import render, specialize
from qca.scalars import FORMAL
from qca.seeds import QuantumSeed, is_bar_invariant, mutate, mutate_sequence, seeds_within

K = kronecker()
seed = QuantumSeed.initial(K, FORMAL)

s = mutate_sequence(seed, [1, 2, 1])
print(s.to_text())

# mu_k is an involution and every variable is fixed by the bar involution
walk = seeds_within(seed, 4)
print(len(walk), "seeds within 4 steps")
print("involutive:", all(mutate(mutate(t, k), k).variables == t.variables for t in walk for k in (1, 2)))
print("bar-invariant:", all(is_bar_invariant(x) for t in walk for x in t.cluster()))

# Specializing v to sqrt(q) turns the first new variables into characters of simples
for k in (1, 2):
    y = specialize(mutate(seed, k).variables[k - 1], 3)
    print(f"mu_{k}: {render(y)}  == X_S{k}:", y == cc(CCObject(simple(K.quiver, 3, k)), K))
