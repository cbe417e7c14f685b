"""Auslander-Reiten translate, BGP reflections and small module catalogs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ..lattice import IceQuiver, QuiverError
from . import fp
from .grass import IsoClasses
from .rep import (FqRep, _check_budget, direct_sum, dual, injective, is_indecomposable, is_rigid, kernel,
                  power, projective, radical_bases, simple, zero_module)


def _path_matrix(M: FqRep, path) -> np.ndarray:
    """M_{a1} ... M_{ar} for a path a1 ... ar, mapping the end space into the start space."""
    out = None
    for idx in path:
        a = M.maps[idx]
        out = a if out is None else (out @ a) % M.p
    return out


def _generators(M: FqRep) -> List[Tuple[int, np.ndarray]]:
    """(vertex, vector) pairs whose classes form a basis of top M = M / rad M."""
    gens = []
    for i, R in enumerate(radical_bases(M)):
        C = fp.complement(R, M.dims[i], M.p)
        gens += [(i + 1, C[:, k].copy()) for k in range(C.shape[1])]
    return gens


def projective_cover(M: FqRep):
    """(P0, pi, gens): P0 the direct sum of P_i over top generators, pi: P0 -> M onto."""
    q, p = M.quiver, M.p
    gens = _generators(M)
    if not gens:
        return zero_module(q, p), tuple(fp.zeros(0, 0) for _ in range(q.m)), gens
    P0 = direct_sum(*[projective(q, p, i) for i, _ in gens])
    pi = []
    for k in range(1, q.m + 1):
        cols = []
        for i, x in gens:
            for path in q.paths(k, i):
                cols.append(x if not path else (_path_matrix(M, path) @ x) % p)
        pi.append(np.stack(cols, axis=1) if cols else fp.zeros(M.dims[k - 1], 0))
    return P0, tuple(pi), gens


def _block_offsets(q: IceQuiver, summands, vertex):
    off, out = 0, []
    for i in summands:
        out.append(off)
        off += len(q.paths(vertex, i))
    return out, off


def _nakayama_of_presentation(M: FqRep):
    """nu of the minimal projective presentation P1 -> P0 of M, as (nuP1, nuP0, map)."""
    q, p = M.quiver, M.p
    P0, pi, gens0 = projective_cover(M)
    if not gens0:
        return None
    K, bases = kernel(pi, P0, M)
    rels = [(j, (bases[j - 1] @ c) % p) for j, c in _generators(K)]
    tops0 = [i for i, _ in gens0]
    nuP0 = direct_sum(*[injective(q, p, i) for i in tops0])
    if not rels:
        return zero_module(q, p), nuP0, None
    nuP1 = direct_sum(*[injective(q, p, j) for j, _ in rels])
    maps = []
    for k in range(1, q.m + 1):
        A = fp.zeros(nuP0.dims[k - 1], nuP1.dims[k - 1])
        col_off = 0
        for j, y in rels:
            cols_jk = {path: t for t, path in enumerate(q.paths(j, k))}
            blocks, _ = _block_offsets(q, tops0, j)
            row_off = 0
            for s, i in enumerate(tops0):
                rows_ik = q.paths(i, k)
                # y restricted to summand s is a combination of paths rho: j ~> i
                for r, rho in enumerate(q.paths(j, i)):
                    c = int(y[blocks[s] + r]) % p
                    if c:
                        for t, sigma in enumerate(rows_ik):
                            A[row_off + t, col_off + cols_jk[rho + sigma]] += c
                row_off += len(rows_ik)
            col_off += len(cols_jk)
        maps.append(A % p)
    return nuP1, nuP0, tuple(maps)


def tau(M: FqRep) -> FqRep:
    """AR translate over the path algebra of the module's quiver."""
    q, p = M.quiver, M.p
    if M.is_zero():
        return zero_module(q, p)
    nuP1, nuP0, g = _nakayama_of_presentation(M)
    if g is None:
        return zero_module(q, p)
    return kernel(g, nuP1, nuP0)[0]


def tau_inv(M: FqRep) -> FqRep:
    return dual(tau(dual(M))).on(M.quiver)


def tau_power(M: FqRep, r: int) -> FqRep:
    for _ in range(abs(r)):
        M = tau(M) if r > 0 else tau_inv(M)
    return M


def _socle_multiplicities(q: IceQuiver, p: int, dimv: Sequence[int], build) -> List[int]:
    """Multiplicities c with sum c_i dim build(i) == dimv, solved along a topological order."""
    dims = {i: build(q, p, i).dims for i in range(1, q.m + 1)}
    rest = list(dimv)
    mult = [0] * q.m
    order = q.topological_order()
    # dim build(i) has a 1 at i and is otherwise supported on one side of i in the order
    pick = order if build is injective else list(reversed(order))
    for i in pick:
        c = rest[i - 1]
        if c < 0:
            raise ValueError("inconsistent dimension vector for the summand split")
        mult[i - 1] = c
        rest = [a - c * b for a, b in zip(rest, dims[i])]
    if any(rest):
        raise ValueError("dimension vector is not a sum of the requested indecomposables")
    return mult


def split_injective(X: FqRep):
    """(X', c): X iso to X' (+) sum_i I_i^{c_i} with X' free of injective summands."""
    Xp = tau(tau_inv(X))
    diff = [a - b for a, b in zip(X.dims, Xp.dims)]
    return Xp, _socle_multiplicities(X.quiver, X.p, diff, injective)


def split_projective(X: FqRep):
    """(X', c): X iso to X' (+) sum_i P_i^{c_i} with X' free of projective summands."""
    Xp = tau_inv(tau(X))
    diff = [a - b for a, b in zip(X.dims, Xp.dims)]
    return Xp, _socle_multiplicities(X.quiver, X.p, diff, projective)


def injective_sum(q: IceQuiver, p: int, mult: Sequence[int]) -> FqRep:
    parts = [power(injective(q, p, i + 1), c) for i, c in enumerate(mult) if c]
    return direct_sum(*parts) if parts else zero_module(q, p)


def projective_sum(q: IceQuiver, p: int, mult: Sequence[int]) -> FqRep:
    parts = [power(projective(q, p, i + 1), c) for i, c in enumerate(mult) if c]
    return direct_sum(*parts) if parts else zero_module(q, p)


# ---------------------------------------------------------------- reflection

def reflect(i: int, M: FqRep) -> FqRep:
    """BGP reflection at ``i``, returning a module on ``quiver.reflect(i)``.

    At a source of the quiver (where S_i is projective) the new space is the
    kernel of the sum of incoming maps; at a sink (S_i injective) it is the
    cokernel of the stacked outgoing maps.
    """
    q, p = M.quiver, M.p
    q2 = q.reflect(i)
    touching = [idx for idx, (s, t) in enumerate(q.arrows) if i in (s, t)]
    dims = list(M.dims)
    maps = list(M.maps)
    if q.is_source(i):
        # arrows i -> t carry M_t -> M_i
        blocks = [M.maps[idx] for idx in touching]
        widths = [b.shape[1] for b in blocks]
        phi = np.concatenate(blocks, axis=1) if blocks else fp.zeros(M.dims[i - 1], 0)
        if phi.shape[1] == 0:
            K = fp.zeros(0, 0)
        elif phi.shape[0] == 0:
            K = fp.eye(phi.shape[1])
        else:
            K = fp.nullspace(phi, p)
        dims[i - 1] = K.shape[1]
        off = 0
        for idx, w in zip(touching, widths):
            maps[idx] = K[off:off + w, :].copy()  # new arrow t -> i carries M'_i -> M_t
            off += w
    else:
        blocks = [M.maps[idx] for idx in touching]
        heights = [b.shape[0] for b in blocks]
        total = sum(heights)
        phi = np.concatenate(blocks, axis=0) if blocks else fp.zeros(0, M.dims[i - 1])
        img = fp.colspace(phi, p) if phi.size else fp.zeros(total, 0)
        C = fp.complement(img, total, p)
        if total:
            Tinv = fp.inv(np.concatenate([img, C], axis=1), p)
            proj = Tinv[img.shape[1]:, :]
        else:
            proj = fp.zeros(0, 0)
        dims[i - 1] = C.shape[1]
        off = 0
        for idx, h in zip(touching, heights):
            maps[idx] = proj[:, off:off + h].copy()  # new arrow i -> s carries M_s -> M'_i
            off += h
    return FqRep(q2, p, dims, maps)


@dataclass(frozen=True)
class CCObject:
    """M0 (+) P[1]: a module on the principal part plus shifted projective multiplicities."""

    module: FqRep
    shift: tuple = None

    def __post_init__(self):
        q = self.module.quiver
        shift = (0,) * q.m if self.shift is None else tuple(int(t) for t in self.shift)
        object.__setattr__(self, "shift", shift)
        if len(shift) != q.m or any(t < 0 for t in shift):
            raise ValueError("shift must be a nonnegative vector over all vertices")
        if not self.module.is_principal():
            raise ValueError("the module part must vanish on frozen vertices")

    @property
    def quiver(self):
        return self.module.quiver

    def is_zero(self):
        return self.module.is_zero() and not any(self.shift)

    def describe(self) -> str:
        parts = []
        if not self.module.is_zero():
            parts.append(f"M{list(self.module.dims[: self.quiver.n])}")
        parts += [f"P{i + 1}[1]^{c}" if c > 1 else f"P{i + 1}[1]" for i, c in enumerate(self.shift) if c]
        return " + ".join(parts) or "0"


def simple_top_count(M: FqRep, i: int) -> int:
    """Multiplicity of S_i as a direct summand when i is a source (S_i projective)."""
    rad = radical_bases(M)[i - 1]
    return M.dims[i - 1] - rad.shape[1]


def extended_reflect(i: int, obj: CCObject) -> CCObject:
    """R_i^+ at a source ``i``: S_i -> P_i[1], P_i[1] -> S_i, P_j[1] fixed, BGP elsewhere."""
    q = obj.quiver
    if not q.is_source(i):
        raise QuiverError(f"vertex {i} is not a source")
    if i > q.n:
        raise QuiverError("cannot reflect at a frozen vertex")
    M = obj.module
    r = simple_top_count(M, i)
    N = reflect(i, M)
    shift = list(obj.shift)
    back = shift[i - 1]
    shift[i - 1] = r
    if back:
        N = direct_sum(N, power(simple(N.quiver, N.p, i), back))
    return CCObject(N, tuple(shift))


# ------------------------------------------------------------------ catalogs

def modules_with_dims(q: IceQuiver, p: int, dims: Sequence[int]) -> List[FqRep]:
    """All modules of the given dimension vector, one per isomorphism class."""
    shapes = [(dims[s - 1], dims[t - 1]) for s, t in q.arrows]
    entries = sum(a * b for a, b in shapes)
    _check_budget(p ** entries, "module enumeration")
    classes = IsoClasses()
    for vals in itertools.product(range(p), repeat=entries):
        maps, off = [], 0
        for a, b in shapes:
            maps.append(np.array(vals[off:off + a * b], dtype=np.int64).reshape(a, b))
            off += a * b
        classes.index(FqRep(q, p, dims, maps))
    return classes.reps


def modules_up_to(q: IceQuiver, p: int, max_total: int, principal_only: bool = True) -> List[FqRep]:
    """Every module (zero included) of total dimension <= max_total, up to isomorphism."""
    support = q.n if principal_only else q.m
    out = []
    for total in range(max_total + 1):
        for head in itertools.product(range(total + 1), repeat=support):
            if sum(head) != total:
                continue
            dims = list(head) + [0] * (q.m - support)
            out += modules_with_dims(q, p, dims)
    return out


def indecomposables_up_to(q: IceQuiver, p: int, max_total: int, principal_only: bool = True):
    return [M for M in modules_up_to(q, p, max_total, principal_only) if not M.is_zero() and is_indecomposable(M)]


def rigid_indecomposables(q: IceQuiver, p: int, max_total: int) -> List[FqRep]:
    """Preprojective and preinjective indecomposables of the principal quiver up to a size.

    Built from tau^{-r} P_i and tau^r I_i, so only the rigid components are
    reached; for finite type this is every indecomposable.
    """
    classes = IsoClasses()
    seeds = [projective(q, p, i) for i in range(1, q.m + 1)] + [injective(q, p, i) for i in range(1, q.m + 1)]
    for k, M in enumerate(seeds):
        step = tau_inv if k < q.m else tau
        while not M.is_zero() and M.total_dim <= max_total:
            if classes.index(M, add=False) is None:
                classes.index(M)
            M = step(M)
    return [M for M in classes.reps if is_rigid(M)]
