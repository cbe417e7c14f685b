"""
Characters on the Kronecker ice quiver
======================================

Build the framed Kronecker quiver, check its skew form, and compute the
quantum characters of the two simples and of a degree-one regular module.
"""

from qca.ccmap import cc, cc_report
from qca.finrep.ar import CCObject
from qca.finrep.rep import simple
from qca.formats import check_lambda
from qca.lattice import kronecker
from qca.bases import degree_one_points, regular_point
from qca.qtorus import QuantumTorus, render
from qca.scalars import SqrtRing

K = kronecker()
print("btilde =\n", K.btilde)
print("lambda check:", check_lambda(K))

# Characters over F_2.  Coefficients live in Q(sqrt 2); s stands for sqrt 2.
q0 = 2
x1 = cc(CCObject(simple(K.quiver, q0, 1)), K)
x2 = cc(CCObject(simple(K.quiver, q0, 2)), K)
print("X_S1 =", render(x1))
print("X_S2 =", render(x2))

# The submodule Grassmannians behind the regular character
R = regular_point(K, q0, (1, 1))
for row in cc_report(CCObject(R), K):
    print("  e =", row["e"], " |Gr| =", row["count"], " exponent", row["exponent"])

# X_R = X_S1 X_S2 - q^{-3/2} X1 X2 X3, for every point of P^1 over each field
for q0 in (2, 3, 5):
    T, ring = QuantumTorus(K.lam), SqrtRing(q0)
    xs1 = cc(CCObject(simple(K.quiver, q0, 1)), K)
    xs2 = cc(CCObject(simple(K.quiver, q0, 2)), K)
    rhs = xs1 * xs2 - (T.gen(1, ring) * T.gen(2, ring) * T.gen(3, ring)).vshift(-3)
    same = all(cc(CCObject(regular_point(K, q0, pt)), K) == rhs for pt in degree_one_points(q0))
    print(f"q0={q0}: identity holds at all {q0 + 1} points:", same)
