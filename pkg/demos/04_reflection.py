"""
Reflection and mutation
=======================

Reflect objects at a source of the ice quiver and pull the character on
the reflected quiver back through the mutated seed.
"""

from qca import verify
from qca.finrep import ar
from qca.finrep.ar import CCObject
from qca.finrep.rep import simple, zero_module
from qca.lattice import a2, kronecker

K = kronecker()
q = K.quiver
for obj in (CCObject(simple(q, 2, 2)), CCObject(simple(q, 2, 1)), CCObject(zero_module(q, 2), (1, 0, 0, 0))):
    img = ar.extended_reflect(1, obj)
    rep = verify.verify_reflection(1, obj, K)
    print(f"{obj.describe():>10} -> {img.describe():<10} {rep.status}")

for name, lat in (("kronecker", K), ("a2", a2())):
    print(name, verify.summarize(verify.scan_reflection(lat, 2, 3)))
