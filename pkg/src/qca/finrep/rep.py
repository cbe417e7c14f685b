"""Quiver representations over a prime field.

Arrow convention: an arrow ``a: i -> j`` of the quiver carries a linear map
``M_a : M_j -> M_i`` (from the space at the target to the space at the
source), stored as a ``dims[i] x dims[j]`` matrix acting on column vectors.
With this convention ``dim Ext^1(S_i, S_j)`` is the number of arrows
``j -> i``, and the Kronecker module with both maps nonzero has the simple
at vertex 1 as a submodule.
"""

from __future__ import annotations

import itertools
import os
import random
from typing import List, Optional, Sequence

import numpy as np

from ..lattice import IceQuiver
from . import fp


DEFAULT_BUDGET = 10 ** 6


class BudgetExceeded(RuntimeError):
    pass


def budget() -> int:
    return int(os.environ.get("QCA_BUDGET", DEFAULT_BUDGET))


def _check_budget(count: int, what: str):
    cap = budget()
    if count > cap:
        raise BudgetExceeded(f"{what}: {count} cases exceed the budget of {cap} (set QCA_BUDGET)")


class FqRep:
    """A representation of an ice quiver over F_p."""

    __slots__ = ("quiver", "p", "dims", "maps", "_key")

    def __init__(self, quiver: IceQuiver, p: int, dims: Sequence[int], maps=None):
        self.quiver = quiver
        self.p = int(p)
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != quiver.m:
            raise ValueError(f"dims has length {len(self.dims)}, quiver has {quiver.m} vertices")
        if any(d < 0 for d in self.dims):
            raise ValueError("dimensions must be nonnegative")
        if maps is None:
            maps = [None] * len(quiver.arrows)
        if len(maps) != len(quiver.arrows):
            raise ValueError("need one matrix per arrow")
        out = []
        for (s, t), a in zip(quiver.arrows, maps):
            shape = (self.dims[s - 1], self.dims[t - 1])
            if a is None:
                a = fp.zeros(*shape)
            a = np.array(a, dtype=np.int64).reshape(shape) % self.p
            out.append(a)
        self.maps = tuple(out)
        self._key = None

    # -- basics
    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def principal_dims(self):
        return self.dims[: self.quiver.n]

    def is_principal(self) -> bool:
        return all(d == 0 for d in self.dims[self.quiver.n:])

    def key(self):
        """Exact structural identity (not isomorphism)."""
        if self._key is None:
            self._key = (self.p, self.dims, tuple(a.tobytes() for a in self.maps))
        return self._key

    def __eq__(self, other):
        return isinstance(other, FqRep) and self.quiver == other.quiver and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        maps = {i: a.tolist() for i, a in enumerate(self.maps) if a.size}
        return f"FqRep(p={self.p}, dims={list(self.dims)}, maps={maps})"

    def _same(self, other: "FqRep"):
        if other.p != self.p:
            raise ValueError(f"field mismatch: F_{self.p} vs F_{other.p}")
        if other.quiver != self.quiver:
            raise ValueError("modules live on different quivers")

    def on(self, quiver: IceQuiver) -> "FqRep":
        """Re-home onto another quiver sharing the vertex numbering of our support.

        Used to move a module between an ice quiver and its principal part.
        Arrows missing from the target quiver must carry zero maps.
        """
        dims = list(self.dims[: quiver.m]) + [0] * max(0, quiver.m - len(self.dims))
        if any(self.dims[quiver.m:]):
            raise ValueError("module is supported outside the target quiver")
        pool = {}
        for arrow, a in zip(self.quiver.arrows, self.maps):
            pool.setdefault(arrow, []).append(a)
        maps = []
        for arrow in quiver.arrows:
            s, t = arrow
            if pool.get(arrow):
                maps.append(pool[arrow].pop(0))
            else:
                maps.append(fp.zeros(dims[s - 1], dims[t - 1]))
        for rest in pool.values():
            for a in rest:
                if a.any():
                    raise ValueError("a nonzero map has no matching arrow in the target quiver")
        return FqRep(quiver, self.p, dims, maps)

    def conjugate(self, gs) -> "FqRep":
        """The isomorphic module with basis change ``g_i`` at each vertex."""
        p = self.p
        inv = [fp.inv(g, p) if g.size else g for g in gs]
        maps = []
        for (s, t), a in zip(self.quiver.arrows, self.maps):
            maps.append((gs[s - 1] @ a @ inv[t - 1]) % p if a.size else a)
        return FqRep(self.quiver, p, self.dims, maps)


# ----------------------------------------------------------- standard modules

def zero_module(quiver: IceQuiver, p: int) -> FqRep:
    return FqRep(quiver, p, [0] * quiver.m)


def simple(quiver: IceQuiver, p: int, i: int) -> FqRep:
    dims = [0] * quiver.m
    dims[i - 1] = 1
    return FqRep(quiver, p, dims)


def _path_basis(quiver: IceQuiver, i: int, into: bool):
    """Per-vertex path lists: paths j~>i (into=True) or i~>j (into=False)."""
    return [quiver.paths(j, i) if into else quiver.paths(i, j) for j in range(1, quiver.m + 1)]


def projective(quiver: IceQuiver, p: int, i: int) -> FqRep:
    """P_i: the space at j has the paths j ~> i as a basis."""
    basis = _path_basis(quiver, i, into=True)
    index = [{path: k for k, path in enumerate(b)} for b in basis]
    maps = []
    for idx, (s, t) in enumerate(quiver.arrows):
        a = fp.zeros(len(basis[s - 1]), len(basis[t - 1]))
        for k, path in enumerate(basis[t - 1]):
            a[index[s - 1][(idx,) + path], k] = 1
        maps.append(a)
    return FqRep(quiver, p, [len(b) for b in basis], maps)


def injective(quiver: IceQuiver, p: int, i: int) -> FqRep:
    """I_i: the space at j is dual to the paths i ~> j."""
    basis = _path_basis(quiver, i, into=False)
    index = [{path: k for k, path in enumerate(b)} for b in basis]
    maps = []
    for idx, (s, t) in enumerate(quiver.arrows):
        ext = fp.zeros(len(basis[t - 1]), len(basis[s - 1]))  # paths(i,s) -> paths(i,t)
        for k, path in enumerate(basis[s - 1]):
            ext[index[t - 1][path + (idx,)], k] = 1
        maps.append(ext.T.copy())
    return FqRep(quiver, p, [len(b) for b in basis], maps)


def direct_sum(*mods: FqRep) -> FqRep:
    if not mods:
        raise ValueError("need at least one module")
    M = mods[0]
    for N in mods[1:]:
        M._same(N)
    q, p = M.quiver, M.p
    dims = [sum(X.dims[v] for X in mods) for v in range(q.m)]
    maps = []
    for idx, (s, t) in enumerate(q.arrows):
        a = fp.zeros(dims[s - 1], dims[t - 1])
        r = c = 0
        for X in mods:
            x = X.maps[idx]
            a[r:r + x.shape[0], c:c + x.shape[1]] = x
            r += x.shape[0]
            c += x.shape[1]
        maps.append(a)
    return FqRep(q, p, dims, maps)


def power(M: FqRep, k: int) -> FqRep:
    return direct_sum(*([M] * k)) if k else zero_module(M.quiver, M.p)


def dual(M: FqRep) -> FqRep:
    """The dual representation, living on the opposite quiver."""
    q = M.quiver
    qop = IceQuiver(q.m, q.n, [(t, s) for s, t in q.arrows])
    return FqRep(qop, M.p, M.dims, [a.T.copy() for a in M.maps])


# ---------------------------------------------------------------- Hom and Ext

def _offsets(sizes):
    out, acc = [], 0
    for s in sizes:
        out.append(acc)
        acc += s
    return out, acc


def delta_matrix(M: FqRep, N: FqRep):
    """Matrix of d: (+)_i Hom(M_i, N_i) -> (+)_a Hom(M_t, N_s), g -> (g_s M_a - N_a g_t).

    Unknown g_i is flattened row-major into an N_i x M_i block; the target for
    arrow a: s -> t is an N_s x M_t block.
    """
    M._same(N)
    q, p = M.quiver, M.p
    src_sizes = [N.dims[i] * M.dims[i] for i in range(q.m)]
    tgt_sizes = [N.dims[s - 1] * M.dims[t - 1] for s, t in q.arrows]
    src_off, src_tot = _offsets(src_sizes)
    tgt_off, tgt_tot = _offsets(tgt_sizes)
    D = fp.zeros(tgt_tot, src_tot)
    for i in range(q.m):
        ni, mi = N.dims[i], M.dims[i]
        for r in range(ni):
            for c in range(mi):
                col = src_off[i] + r * mi + c
                for idx, (s, t) in enumerate(q.arrows):
                    blk = np.zeros((N.dims[s - 1], M.dims[t - 1]), dtype=np.int64)
                    if s - 1 == i:
                        blk[r, :] += M.maps[idx][c, :]
                    if t - 1 == i:
                        blk[:, c] -= N.maps[idx][:, r]
                    if blk.any():
                        D[tgt_off[idx]: tgt_off[idx] + blk.size, col] = blk.reshape(-1) % p
    return D % p, src_sizes, tgt_sizes


def _unflatten_hom(vec, M: FqRep, N: FqRep):
    out, off = [], 0
    for i in range(M.quiver.m):
        size = N.dims[i] * M.dims[i]
        out.append(np.array(vec[off:off + size], dtype=np.int64).reshape(N.dims[i], M.dims[i]))
        off += size
    return tuple(out)


def hom_space(M: FqRep, N: FqRep) -> List[tuple]:
    """A basis of Hom(M, N); each element is a tuple of N_i x M_i matrices."""
    D, _, _ = delta_matrix(M, N)
    K = fp.nullspace(D, M.p) if D.shape[0] else fp.eye(D.shape[1])
    return [_unflatten_hom(K[:, j], M, N) for j in range(K.shape[1])]


def dim_hom(M: FqRep, N: FqRep) -> int:
    D, _, _ = delta_matrix(M, N)
    return D.shape[1] - fp.rank(D, M.p)


def dim_ext(M: FqRep, N: FqRep) -> int:
    D, _, _ = delta_matrix(M, N)
    return D.shape[0] - fp.rank(D, M.p)


def euler_char(M: FqRep, N: FqRep) -> int:
    return dim_hom(M, N) - dim_ext(M, N)


def euler_dims(quiver: IceQuiver, e, f) -> int:
    """<e, f> on dimension vectors over all vertices: sum e_i f_i minus one e_t f_s per arrow s -> t."""
    out = sum(int(a) * int(b) for a, b in zip(e, f))
    for s, t in quiver.arrows:
        out -= int(e[t - 1]) * int(f[s - 1])
    return out


def ext_transversal(M: FqRep, N: FqRep):
    """One representative cocycle per class of Ext^1(M, N), zero class first.

    Each representative is a tuple with one ``N_s x M_t`` matrix per arrow.
    """
    D, _, tgt_sizes = delta_matrix(M, N)
    p = M.p
    total = D.shape[0]
    img = fp.colspace(D, p) if D.shape[1] else fp.zeros(total, 0)
    C = fp.complement(img, total, p)
    k = C.shape[1]
    _check_budget(p ** k, "Ext^1 enumeration")
    offs, _ = _offsets(tgt_sizes)
    out = []
    for coeffs in itertools.product(range(p), repeat=k):
        vec = (C @ np.array(coeffs, dtype=np.int64)) % p if k else np.zeros(total, dtype=np.int64)
        f = []
        for idx, (s, t) in enumerate(M.quiver.arrows):
            f.append(vec[offs[idx]: offs[idx] + tgt_sizes[idx]].reshape(N.dims[s - 1], M.dims[t - 1]))
        out.append(tuple(f))
    return out


def extension_module(M: FqRep, N: FqRep, f) -> FqRep:
    """Middle term of 0 -> N -> E -> M -> 0 for the cocycle ``f``; E_i = N_i (+) M_i."""
    q = M.quiver
    dims = [N.dims[i] + M.dims[i] for i in range(q.m)]
    maps = []
    for idx, (s, t) in enumerate(q.arrows):
        a = fp.zeros(dims[s - 1], dims[t - 1])
        ns, nt = N.dims[s - 1], N.dims[t - 1]
        a[:ns, :nt] = N.maps[idx]
        a[:ns, nt:] = f[idx]
        a[ns:, nt:] = M.maps[idx]
        maps.append(a)
    return FqRep(q, M.p, dims, maps)


def hom_elements(M: FqRep, N: FqRep, basis=None):
    """Iterate over every element of Hom(M, N) (guarded by the enumeration budget)."""
    basis = hom_space(M, N) if basis is None else basis
    p = M.p
    _check_budget(p ** len(basis), "Hom enumeration")
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        g = []
        for i in range(M.quiver.m):
            acc = fp.zeros(N.dims[i], M.dims[i])
            for c, b in zip(coeffs, basis):
                if c:
                    acc = acc + c * b[i]
            g.append(acc % p)
        yield tuple(g)


def is_morphism(g, M: FqRep, N: FqRep) -> bool:
    p = M.p
    for idx, (s, t) in enumerate(M.quiver.arrows):
        lhs = g[s - 1] @ M.maps[idx] - N.maps[idx] @ g[t - 1]
        if (lhs % p).any():
            return False
    return True


def _invertible_everywhere(coeffs, basis, verts, p) -> bool:
    for i in verts:
        g = sum(c * b[i] for c, b in zip(coeffs, basis)) % p
        if not fp.is_invertible(g, p):
            return False
    return True


def is_iso(M: FqRep, N: FqRep, tries: int = 64) -> bool:
    """Whether some element of Hom(M, N) is invertible at every vertex.

    A seeded random search runs first (a hit is a proof); only if it misses is
    the whole Hom space enumerated, subject to the budget.
    """
    M._same(N)
    if M.dims != N.dims:
        return False
    if M.key() == N.key():
        return True
    basis = hom_space(M, N)
    h = len(basis)
    if h != dim_hom(M, M) or h != dim_hom(N, N) or h != dim_hom(N, M):
        return False
    p = M.p
    verts = [i for i in range(M.quiver.m) if M.dims[i]]
    rng = random.Random(h * 7919 + p)
    for _ in range(tries if p ** h > tries else 0):
        if _invertible_everywhere([rng.randrange(p) for _ in range(h)], basis, verts, p):
            return True
    _check_budget(p ** h, "isomorphism test")
    return any(_invertible_everywhere(c, basis, verts, p) for c in itertools.product(range(p), repeat=h))


def is_rigid(M: FqRep) -> bool:
    return dim_ext(M, M) == 0


def is_indecomposable(M: FqRep) -> bool:
    """No idempotent endomorphisms other than 0 and 1."""
    if M.is_zero():
        return False
    basis = hom_space(M, M)
    if len(basis) == 1:
        return True
    p = M.p
    _check_budget(p ** len(basis), "endomorphism enumeration")
    verts = [i for i in range(M.quiver.m) if M.dims[i]]
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        g = [sum(c * b[i] for c, b in zip(coeffs, basis)) % p for i in verts]
        if all(not x.any() for x in g):
            continue
        if all((x == fp.eye(x.shape[0])).all() for x in g):
            continue
        if all(((x @ x) % p == x).all() for x in g):
            return False
    return True


# ------------------------------------------------- submodules, kernels, etc.

def submodule(M: FqRep, bases) -> FqRep:
    """The submodule spanned at each vertex by the columns of ``bases[i]`` (assumed closed)."""
    p = M.p
    maps = []
    for idx, (s, t) in enumerate(M.quiver.arrows):
        Bs, Bt = bases[s - 1], bases[t - 1]
        if Bs.shape[1] == 0 or Bt.shape[1] == 0:
            maps.append(fp.zeros(Bs.shape[1], Bt.shape[1]))
            continue
        X = fp.solve(Bs, (M.maps[idx] @ Bt) % p, p)
        if X is None:
            raise ValueError("subspaces are not closed under the arrow maps")
        maps.append(X)
    return FqRep(M.quiver, p, [b.shape[1] for b in bases], maps)


def quotient(M: FqRep, bases) -> FqRep:
    """M / U for the closed subspaces ``bases``, on complement coordinates."""
    p = M.p
    comps, trans = [], []
    for i in range(M.quiver.m):
        B = bases[i]
        C = fp.complement(B, M.dims[i], p)
        comps.append(C)
        T = np.concatenate([B, C], axis=1) if M.dims[i] else fp.zeros(0, 0)
        trans.append(fp.inv(T, p) if M.dims[i] else T)
    maps = []
    for idx, (s, t) in enumerate(M.quiver.arrows):
        ks = bases[s - 1].shape[1]
        Cs, Ct = comps[s - 1], comps[t - 1]
        if Cs.shape[1] == 0 or Ct.shape[1] == 0:
            maps.append(fp.zeros(Cs.shape[1], Ct.shape[1]))
            continue
        coords = (trans[s - 1] @ M.maps[idx] @ Ct) % p
        maps.append(coords[ks:, :])
    return FqRep(M.quiver, p, [c.shape[1] for c in comps], maps)


def sub_quotient(M: FqRep, bases):
    return submodule(M, bases), quotient(M, bases)


def kernel(g, M: FqRep, N: FqRep):
    """Kernel of g: M -> N as (module, bases in M)."""
    p = M.p
    bases = []
    for i in range(M.quiver.m):
        if M.dims[i] == 0:
            bases.append(fp.zeros(0, 0))
        elif N.dims[i] == 0:
            bases.append(fp.eye(M.dims[i]))
        else:
            bases.append(fp.nullspace(g[i], p))
    bases = [b if b.shape[0] == M.dims[i] else fp.zeros(M.dims[i], 0) for i, b in enumerate(bases)]
    return submodule(M, bases), bases


def image_bases(g, M: FqRep, N: FqRep):
    p = M.p
    out = []
    for i in range(M.quiver.m):
        if M.dims[i] == 0 or N.dims[i] == 0:
            out.append(fp.zeros(N.dims[i], 0))
        else:
            out.append(fp.colspace(g[i], p))
    return out


def cokernel(g, M: FqRep, N: FqRep) -> FqRep:
    return quotient(N, image_bases(g, M, N))


def radical_bases(M: FqRep):
    """rad M at each vertex: the span of the images of the arrow maps landing in M_i."""
    p = M.p
    out = []
    for i in range(M.quiver.m):
        cols = [M.maps[idx] for idx, (s, t) in enumerate(M.quiver.arrows) if s - 1 == i and M.maps[idx].size]
        if cols and M.dims[i]:
            out.append(fp.colspace(np.concatenate(cols, axis=1) % p, p))
        else:
            out.append(fp.zeros(M.dims[i], 0))
    return out


def top_vector(M: FqRep) -> tuple:
    return tuple(M.dims[i] - r.shape[1] for i, r in enumerate(radical_bases(M)))


def socle_vector(M: FqRep) -> tuple:
    return top_vector(dual(M))
