"""Bases of the quantum cluster algebra at desk scale.

Three families are built from characters: standard monomials indexed by
d in Z^n, the rigid-object basis of a finite-type quiver, and the Kronecker
basis that adds powers of the regular character X_delta to the rigid objects.
Independence is checked through leading terms of a grading.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from .ccmap import cc, cc_shifted, find_grading, unit_power
from .finrep import ar
from .finrep.ar import CCObject
from .finrep.rep import (FqRep, BudgetExceeded, dim_ext, direct_sum, is_rigid, power, simple,
                         zero_module)
from .lattice import Lattice
from .qtorus import TorusElement, render
from .scalars import SqrtRing
from .seeds import QuantumSeed, seeds_within


@dataclass
class BasisElement:
    label: str
    value: TorusElement
    d: Optional[tuple] = None
    obj: Optional[CCObject] = None


def _split(d):
    plus = tuple(max(t, 0) for t in d)
    minus = tuple(max(-t, 0) for t in d)
    return plus, minus


def _unit_shift(lattice: Lattice, i: int, mult: int = 1) -> tuple:
    s = [0] * lattice.m
    s[i - 1] = mult
    return tuple(s)


def standard_monomial(d: Sequence[int], lattice: Lattice, q0: int) -> TorusElement:
    """prod_i X_{S_i}^{d+_i} X_{P_i[1]}^{d-_i}, factors in ascending vertex order."""
    q = lattice.quiver
    if len(d) != lattice.n:
        raise ValueError(f"d must have length {lattice.n}")
    ring = SqrtRing(q0)
    out = lattice_one(lattice, ring)
    plus, minus = _split(d)
    for i in range(1, lattice.n + 1):
        if plus[i - 1]:
            xs = cc(CCObject(simple(q, q0, i)), lattice)
            for _ in range(plus[i - 1]):
                out = out * xs
        if minus[i - 1]:
            xp = cc_shifted(_unit_shift(lattice, i), lattice, ring)
            for _ in range(minus[i - 1]):
                out = out * xp
    return out


def lattice_one(lattice: Lattice, ring) -> TorusElement:
    return cc_shifted((0,) * lattice.m, lattice, ring)


def standard_monomials(lattice: Lattice, q0: int, bound: int) -> List[BasisElement]:
    """All standard monomials with |d_i| <= bound."""
    out = []
    for d in itertools.product(range(-bound, bound + 1), repeat=lattice.n):
        out.append(BasisElement(f"d={list(d)}", standard_monomial(d, lattice, q0), d=tuple(d)))
    return out


# ------------------------------------------------------------ rigid objects

def _shifts_up_to(lattice: Lattice, total: int, avoid: Sequence[int]):
    """Shift vectors on exchangeable vertices with sum <= total, zero where ``avoid`` is nonzero."""
    free = [i for i in range(lattice.n) if not avoid[i]]
    for mults in itertools.product(range(total + 1), repeat=len(free)):
        if sum(mults) > total:
            continue
        s = [0] * lattice.m
        for i, c in zip(free, mults):
            s[i] = c
        yield tuple(s)


def rigid_objects(lattice: Lattice, p: int, bound: int) -> List[CCObject]:
    """Objects M0 + P[1] with M0 rigid, Hom(P, M0) = 0 and dim M0 + mult P <= bound."""
    q = lattice.quiver
    out = []
    for M in ar.modules_up_to(q, p, bound):
        if not M.is_zero() and not is_rigid(M):
            continue
        for s in _shifts_up_to(lattice, bound - M.total_dim, M.dims):
            out.append(CCObject(M, s))
    return out


def finite_type_basis(lattice: Lattice, p: int, bound: int) -> List[BasisElement]:
    """Characters of the rigid objects up to ``bound`` (extended total dimension)."""
    return [BasisElement(obj.describe(), cc(obj, lattice), obj=obj) for obj in rigid_objects(lattice, p, bound)]


# ----------------------------------------------------------------- Kronecker

def regular_point(lattice: Lattice, p: int, point=(1, 0)) -> FqRep:
    """The degree-one regular module R(point) of the Kronecker quiver: both maps scalars."""
    q = lattice.quiver
    maps = []
    used = 0
    for s, t in q.arrows:
        if s <= lattice.n and t <= lattice.n:
            maps.append(np.array([[point[used] % p]], dtype=np.int64))
            used += 1
        else:
            maps.append(np.zeros((1 if s <= lattice.n else 0, 1 if t <= lattice.n else 0), dtype=np.int64))
    if used != 2:
        raise ValueError("regular_point needs the Kronecker quiver")
    if not any(c % p for c in point):
        raise ValueError("point must be nonzero in P^1(F_p)")
    dims = [1] * lattice.n + [0] * (lattice.m - lattice.n)
    return FqRep(q, p, dims, maps)


def degree_one_points(p: int):
    """Representatives of P^1(F_p)."""
    return [(1, a) for a in range(p)] + [(0, 1)]


def x_delta(lattice: Lattice, p: int, point=(1, 0)) -> TorusElement:
    return cc(CCObject(regular_point(lattice, p, point)), lattice)


def rigid_module(lattice: Lattice, p: int, dims: Sequence[int]) -> Optional[FqRep]:
    """A rigid module of the given dimension vector built from rigid indecomposables, or None."""
    q = lattice.quiver
    dims = tuple(dims) + (0,) * (lattice.m - len(dims))
    total = sum(dims)
    if total == 0:
        return zero_module(q, p)
    cat = [M.on(q) for M in ar.rigid_indecomposables(q.principal(), p, total)]
    cat = [M for M in cat if all(a <= b for a, b in zip(M.dims, dims))]

    def search(start, rest, chosen):
        if not any(rest):
            return chosen
        for k in range(start, len(cat)):
            M = cat[k]
            if any(a > b for a, b in zip(M.dims, rest)):
                continue
            if any(dim_ext(M, N) or dim_ext(N, M) for N in chosen):
                continue
            left = tuple(b - a for a, b in zip(M.dims, rest))
            found = search(k, left, chosen + [M])
            if found is not None:
                return found
        return None

    parts = search(0, dims, [])
    if parts is None:
        return None
    out = parts[0]
    for M in parts[1:]:
        out = direct_sum(out, M)
    return out


def kronecker_basis(lattice: Lattice, p: int, box: int, point=(1, 0)) -> List[BasisElement]:
    """Elements indexed by d with |d_i| <= box: X_delta^n on the diagonal d = (n, n), rigid objects elsewhere."""
    if lattice.n != 2:
        raise ValueError("kronecker_basis needs the Kronecker ice quiver")
    if box > 6:
        raise BudgetExceeded(f"box {box} is beyond desk scale")
    xd = None
    out = []
    for d in itertools.product(range(-box, box + 1), repeat=2):
        if d[0] == d[1] and d[0] >= 1:
            if xd is None:
                xd = x_delta(lattice, p, point)
            val = xd
            for _ in range(d[0] - 1):
                val = val * xd
            out.append(BasisElement(f"X_delta^{d[0]}", val, d=d))
            continue
        plus, minus = _split(d)
        M = rigid_module(lattice, p, plus)
        if M is None:
            raise ValueError(f"no rigid module of dimension {list(plus)}")
        obj = CCObject(M, tuple(minus) + (0,) * (lattice.m - 2))
        out.append(BasisElement(obj.describe(), cc(obj, lattice), d=d, obj=obj))
    return out


# --------------------------------------------------------------- checks

@dataclass
class TriangularityReport:
    ok: bool
    grading: tuple
    extremal: list = field(default_factory=list)
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def extremal_term(x: TorusElement, n: int, grading: Sequence[int]):
    """(principal exponent, full exponent, coefficient) of the unique grading-maximal term, or a reason string."""
    if not x.terms:
        return "zero element"
    eps = np.asarray(grading, dtype=np.int64)
    score = {e: int(eps @ np.asarray(e[:n], dtype=np.int64)) for e in x.terms}
    top = max(score.values())
    heads = [e for e in x.terms if score[e] == top]
    if len(heads) != 1:
        return f"{len(heads)} terms share the top degree {top}"
    e = heads[0]
    return e[:n], e, x.terms[e]


def triangularity_check(elements: Sequence[BasisElement], lattice: Lattice, grading=None) -> TriangularityReport:
    """Unique unit leading term per element; leading principal exponents pairwise distinct."""
    n = lattice.n
    if grading is None:
        grading = find_grading(lattice.btilde)
        if grading is None:
            return TriangularityReport(False, None, problems=["quiver is not graded"])
    grading = tuple(grading)
    seen = {}
    extremal = []
    problems = []
    for el in elements:
        t = extremal_term(el.value, n, grading)
        if isinstance(t, str):
            problems.append(f"{el.label}: {t}")
            continue
        head, full, coef = t
        if unit_power(coef) is None:
            problems.append(f"{el.label}: leading coefficient {coef} is not a unit")
        if head in seen:
            problems.append(f"{el.label}: leading exponent {list(head)} collides with {seen[head]}")
        else:
            seen[head] = el.label
        extremal.append((el.label, head, full, str(coef)))
    return TriangularityReport(not problems, grading, extremal, problems)


def cluster_variables(lattice: Lattice, p: int, depth: int) -> List[TorusElement]:
    """Distinct non-initial exchangeable variables of all seeds within ``depth`` mutations."""
    seed = QuantumSeed.initial(lattice, SqrtRing(p))
    init = set(seed.cluster())
    out = []
    for s in seeds_within(seed, depth):
        for x in s.cluster():
            if x not in init and x not in out:
                out.append(x)
    return out


def membership(variables: Sequence[TorusElement], elements: Sequence[BasisElement]):
    """[(variable, label or None)] matching each variable to a basis element by exact equality."""
    out = []
    for x in variables:
        hit = next((el.label for el in elements if el.value == x), None)
        out.append((x, hit))
    return out


def basis_table(elements: Sequence[BasisElement], lattice: Lattice, grading=None, full: bool = False) -> list:
    grading = grading if grading is not None else find_grading(lattice.btilde)
    rows = []
    for el in elements:
        row = {"label": el.label}
        if grading is not None:
            t = extremal_term(el.value, lattice.n, grading)
            if isinstance(t, str):
                row["extremal"] = None
                row["coefficient"] = t
            else:
                row["extremal"] = list(t[1])
                row["coefficient"] = str(t[2])
        if full:
            row["value"] = render(el.value)
        rows.append(row)
    return rows
