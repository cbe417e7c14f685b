"""
Multiplication formulas, checked by counting
============================================

Each check computes one side by multiplying characters in the quantum torus
and the other by counting extensions, kernels and cokernels over F_q.
"""

from qca import verify
from qca.finrep.rep import simple
from qca.lattice import a2, a3, kronecker

A = a2()
s1, s2 = simple(A.quiver, 2, 1), simple(A.quiver, 2, 2)

# Product of two characters as a sum over extension middle terms
rep = verify.verify_hall_multi(s2, s1, A)
print(rep.line(), rep.details)

# The two-term formula when the extension group is one-dimensional
rep = verify.verify_onedim(s2, s1, A, all_classes=True)
print(rep.line())
print("  lhs:", rep.to_json()["lhs"])

# Green's formula as an integer identity at q = 2
print(verify.verify_green(s2, s1, s1, s2).line())

# Exhaustive scans over all small modules
for name, lat in (("kronecker", kronecker()), ("a2", A), ("a3", a3())):
    print(name, "hall", verify.summarize(verify.scan_hall(lat, 2, 3)),
          "exchange", verify.summarize(verify.scan_exchange(lat, 2, 3)))
