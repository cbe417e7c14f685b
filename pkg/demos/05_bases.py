"""
Bases with leading terms
========================

List the Kronecker basis in a small box, check that leading terms under
the grading are distinct units, and find every nearby cluster variable in it.
"""

from qca import bases
from qca.lattice import a2, kronecker

K = kronecker()
elems = bases.kronecker_basis(K, 2, 2)
check = bases.triangularity_check(elems, K)
print("grading", check.grading, "triangular:", check.ok)
for label, head, full, coef in check.extremal[:8]:
    print(f"  {label:<22} leading {full}  coefficient {coef}")

big = bases.kronecker_basis(K, 2, 4)
for x, hit in bases.membership(bases.cluster_variables(K, 2, 4), big):
    print("  cluster variable found as", hit)

A = a2()
fin = bases.finite_type_basis(A, 2, 2)
print("A2 rigid objects up to size 2:", len(fin), "triangular:", bases.triangularity_check(fin, A).ok)
