"""The quantum cluster character of a module plus shifted projectives.

For an object ``M (+) P[1]`` with ``m = dim M`` the character is

    sum_e |Gr_e M| v^(-<e, m-e>) X^(Bt e - (It - Rt) m + top P)

with ``v`` the square root of the field size and ``Bt``, ``Rt``, ``It`` the
ice-quiver matrices.  Coefficients are therefore specialized numbers in
Q(sqrt q0).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from .finrep.ar import CCObject
from .finrep.grass import dimension_vectors_below, grassmannian_count
from .finrep.rep import FqRep
from .lattice import Lattice, euler_form
from .qtorus import QuantumTorus, TorusElement
from .scalars import FORMAL, Laurent, SqrtQ, SqrtRing


class CompatibilityError(ValueError):
    pass


def as_object(lattice: Lattice, module: Optional[FqRep] = None, shift=None) -> CCObject:
    """Build a CCObject on the lattice's ice quiver, lifting principal-quiver modules."""
    q = lattice.quiver
    if module is None:
        raise ValueError("a module is required (use zero_module for the shift-only case)")
    if module.quiver != q:
        module = module.on(q)
    return CCObject(module, shift)


def _prepare(obj: CCObject, lattice: Lattice):
    if not lattice.unit_compatible():
        raise CompatibilityError("the character needs a compatible pair with D = I")
    if obj.quiver != lattice.quiver:
        obj = as_object(lattice, obj.module, obj.shift)
    return obj


def cc_terms(obj: CCObject, lattice: Lattice):
    """[(e, |Gr_e|, v-exponent, torus exponent)] in ascending order of e."""
    obj = _prepare(obj, lattice)
    n = lattice.n
    M = obj.module
    m = list(M.dims[:n])
    base = np.asarray(lattice.i_minus_r(m), dtype=np.int64) * -1 + np.asarray(obj.shift, dtype=np.int64)
    out = []
    for e in dimension_vectors_below(m):
        count = grassmannian_count(M, e)
        if not count:
            continue
        rest = [a - b for a, b in zip(m, e)]
        k = -euler_form(lattice.euler, e, rest)
        expo = tuple(int(t) for t in base + np.asarray(lattice.b_times(e), dtype=np.int64))
        out.append((tuple(e), count, k, expo))
    return out


def cc(obj: CCObject, lattice: Lattice, q0: Optional[int] = None) -> TorusElement:
    """X_{M (+) P[1]} with coefficients in Q(sqrt q0); q0 defaults to the module's field."""
    p = obj.module.p
    if q0 is not None and q0 != p:
        raise ValueError(f"field mismatch: module over F_{p}, requested q0={q0}")
    ring = SqrtRing(p)
    torus = QuantumTorus(lattice.lam)
    terms = {}
    for _, count, k, expo in cc_terms(obj, lattice):
        c = ring.vpow(k, count)
        terms[expo] = terms[expo] + c if expo in terms else c
    return TorusElement(torus, terms, ring)


def cc_formal(obj: CCObject, lattice: Lattice) -> TorusElement:
    """The same sum with |Gr_e| kept as integers and v formal.

    Only meaningful when the Grassmannian counts do not depend on the field
    (e.g. rigid modules over Dynkin quivers); the caller takes responsibility.
    """
    torus = QuantumTorus(lattice.lam)
    terms = {}
    for _, count, k, expo in cc_terms(obj, lattice):
        c = Laurent.monomial(k, count)
        terms[expo] = terms[expo] + c if expo in terms else c
    return TorusElement(torus, terms, FORMAL)


def cc_shifted(shift: Sequence[int], lattice: Lattice, ring=FORMAL) -> TorusElement:
    """X_{P[1]} = X^{top P}, a single monomial."""
    shift = tuple(int(t) for t in shift)
    if len(shift) != lattice.m or any(t < 0 for t in shift):
        raise ValueError("shift must be a nonnegative vector over all vertices")
    return QuantumTorus(lattice.lam).monomial(shift, ring=ring)


def cc_report(obj: CCObject, lattice: Lattice) -> list:
    from .scalars import render_sqrt
    ring = SqrtRing(obj.module.p)
    return [{"e": list(e), "count": count, "exponent": list(expo), "coefficient": render_sqrt(ring.vpow(k, count))}
            for e, count, k, expo in cc_terms(obj, lattice)]


# ------------------------------------------------------------ cone and grading

def lambda_vector(obj: CCObject, lattice: Lattice) -> tuple:
    """(-<alpha_i, dim M0> + <dim P, alpha_i>)_i; the second term is the multiplicity of P_i."""
    n = lattice.n
    m = obj.module.dims[:n]
    left = np.asarray(lattice.euler, dtype=np.int64) @ np.asarray(m, dtype=np.int64)
    return tuple(int(-a + b) for a, b in zip(left, obj.shift[:n]))


def _solve_fraction(A: List[List[Fraction]], b: List[Fraction]):
    """Unique solution of a square-or-tall consistent system, or None."""
    rows, cols = len(A), len(A[0]) if A else 0
    M = [list(A[i]) + [b[i]] for i in range(rows)]
    r = 0
    piv = []
    for c in range(cols):
        k = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if k is None:
            return None
        M[r], M[k] = M[k], M[r]
        f = M[r][c]
        M[r] = [x / f for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                g = M[i][c]
                M[i] = [x - g * y for x, y in zip(M[i], M[r])]
        piv.append(c)
        r += 1
    if any(M[i][cols] != 0 for i in range(r, rows)):
        return None
    return [M[i][cols] for i in range(cols)]


def in_cone(v: Sequence[int], gens: Sequence[Sequence[int]]) -> bool:
    """Whether v is a nonnegative real combination of gens (Caratheodory over independent subsets)."""
    if not any(v):
        return True
    dim = len(v)
    gens = [list(g) for g in gens if any(g)]
    for size in range(1, min(dim, len(gens)) + 1):
        for sub in itertools.combinations(gens, size):
            A = [[Fraction(sub[j][i]) for j in range(size)] for i in range(dim)]
            t = _solve_fraction(A, [Fraction(x) for x in v])
            if t is not None and all(x >= 0 for x in t):
                return True
    return False


def unit_power(c) -> Optional[int]:
    """k if c = +-(sqrt q0)^k (or +-v^k for formal coefficients), else None."""
    if isinstance(c, Laurent):
        return c.terms[0][0] if c.is_unit() else None
    if not isinstance(c, SqrtQ) or not c:
        return None
    if c.a and c.b:
        return None
    x, odd = (abs(c.a), 0) if c.a else (abs(c.b), 1)
    q = c.q0
    j = 0
    if x >= 1:
        while x > 1 and x.denominator == 1 and x.numerator % q == 0:
            x /= q
            j += 1
    else:
        while x < 1 and x.numerator == 1 and x.denominator % q == 0:
            x *= q
            j -= 1
    return 2 * j + odd if x == 1 else None


@dataclass
class ConeCheck:
    ok: bool
    lam: tuple
    outside: list = field(default_factory=list)
    component: list = field(default_factory=list)
    reason: str = ""

    def __bool__(self):
        return self.ok


def support_cone_check(obj: CCObject, x: TorusElement, lattice: Lattice) -> ConeCheck:
    """Principal exponents of x lie in lambda + cone(B alpha_i), and the lambda-component is one unit term."""
    n = lattice.n
    lam = lambda_vector(obj, lattice)
    B = lattice.btilde[:n, :n]
    gens = [tuple(int(t) for t in B[:, i]) for i in range(n)]
    outside = []
    component = []
    for e, c in x.sorted_terms():
        head = e[:n]
        diff = [a - b for a, b in zip(head, lam)]
        if head == lam:
            component.append((e, c))
        elif not in_cone(diff, gens):
            outside.append(e)
    if outside:
        return ConeCheck(False, lam, outside, component, "exponents outside the cone")
    if len(component) != 1:
        return ConeCheck(False, lam, outside, component,
                         f"lambda-component has {len(component)} terms, expected a single monomial")
    if unit_power(component[0][1]) is None:
        return ConeCheck(False, lam, outside, component, "lambda-component coefficient is not a unit")
    return ConeCheck(True, lam, outside, component)


def find_grading(btilde, box: int = 3) -> Optional[tuple]:
    """An integer form eps with eps(B alpha_i) < 0 for every i, smallest sup-norm first; None if absent."""
    B = np.asarray(btilde, dtype=np.int64)
    n = B.shape[1]
    B = B[:n, :n]
    cands = sorted(itertools.product(range(-box, box + 1), repeat=n),
                   key=lambda eps: (max(abs(t) for t in eps), eps))
    for eps in cands:
        vals = np.asarray(eps, dtype=np.int64) @ B
        if all(v < 0 for v in vals):
            return tuple(int(t) for t in eps)
    return None
