"""Submodule enumeration, quiver Grassmannian counts, Hall numbers and extension middles."""

from __future__ import annotations

import itertools
from collections import Counter
from typing import List, Sequence

import numpy as np

from ..scalars import gaussian_binomial
from . import fp
from .rep import (FqRep, _check_budget, dim_hom, ext_transversal, extension_module, is_iso,
                  quotient, socle_vector, submodule, top_vector)


def _order_targets_first(M: FqRep):
    # U_j must be chosen before U_i whenever there is an arrow i -> j
    return list(reversed(M.quiver.topological_order()))


def submodules_with_dim(M: FqRep, e: Sequence[int]) -> List[list]:
    """All submodules U of M with dim U = e, each as a list of per-vertex basis matrices.

    ``e`` may be given on the principal part only; missing entries are zero.
    """
    q, p = M.quiver, M.p
    e = list(e) + [0] * (q.m - len(e))
    if len(e) != q.m or any(not 0 <= e[i] <= M.dims[i] for i in range(q.m)):
        raise ValueError(f"dimension vector {e} is not between 0 and {list(M.dims)}")
    bound = 1
    for d, k in zip(M.dims, e):
        bound *= gaussian_binomial(d, k, p)
    _check_budget(bound, "submodule enumeration")
    order = _order_targets_first(M)
    incoming = {i: [(idx, t - 1) for idx, (s, t) in enumerate(q.arrows) if s - 1 == i] for i in range(q.m)}
    out = []
    chosen = [None] * q.m

    def step(k):
        if k == len(order):
            out.append(list(chosen))
            return
        i = order[k] - 1
        d = M.dims[i]
        parts = [(M.maps[idx] @ chosen[j]) % p for idx, j in incoming[i] if chosen[j].shape[1] and d]
        W = fp.colspace(np.concatenate(parts, axis=1), p) if parts else fp.zeros(d, 0)
        w = W.shape[1]
        if w > e[i]:
            return
        C = fp.complement(W, d, p)
        for S in fp.subspaces(C.shape[1], e[i] - w, p):
            chosen[i] = np.concatenate([W, (C @ S) % p], axis=1) if d else fp.zeros(0, 0)
            step(k + 1)
        chosen[i] = None

    step(0)
    return out


def grassmannian_count(M: FqRep, e: Sequence[int]) -> int:
    return len(submodules_with_dim(M, e))


def dimension_vectors_below(dims: Sequence[int]):
    return itertools.product(*[range(d + 1) for d in dims])


def grassmannian_counts(M: FqRep) -> dict:
    """{e: |Gr_e M|} over every e <= dim M, zero counts omitted."""
    out = {}
    for e in dimension_vectors_below(M.dims):
        c = grassmannian_count(M, e)
        if c:
            out[tuple(e)] = c
    return out


def all_submodules(M: FqRep):
    for e in dimension_vectors_below(M.dims):
        yield from submodules_with_dim(M, e)


def iso_signature(M: FqRep) -> tuple:
    """Cheap isomorphism invariants used to bucket modules before pairwise tests."""
    return (M.dims, dim_hom(M, M), top_vector(M), socle_vector(M))


def hall_number(M: FqRep, A: FqRep, B: FqRep) -> int:
    """F^M_{AB}: submodules U of M with U iso to B and M/U iso to A."""
    if tuple(a + b for a, b in zip(A.dims, B.dims)) != M.dims:
        return 0
    sa, sb = iso_signature(A), iso_signature(B)
    count = 0
    for bases in submodules_with_dim(M, B.dims):
        U = submodule(M, bases)
        if iso_signature(U) != sb or not is_iso(U, B):
            continue
        Q = quotient(M, bases)
        if iso_signature(Q) == sa and is_iso(Q, A):
            count += 1
    return count


class IsoClasses:
    """Running classification of modules up to isomorphism, in first-seen order."""

    def __init__(self):
        self.reps = []
        self.counts = []
        self._sig = []

    def index(self, M: FqRep, add: bool = True):
        sig = iso_signature(M)
        for k, (R, s) in enumerate(zip(self.reps, self._sig)):
            if s == sig and is_iso(M, R):
                return k
        if not add:
            return None
        self.reps.append(M)
        self.counts.append(0)
        self._sig.append(sig)
        return len(self.reps) - 1

    def add(self, M: FqRep, weight: int = 1) -> int:
        k = self.index(M)
        self.counts[k] += weight
        return k

    def items(self):
        return list(zip(self.reps, self.counts))

    def __len__(self):
        return len(self.reps)


def ext_middles(M: FqRep, N: FqRep):
    """[(E, eps^E_{MN})]: middle terms of 0 -> N -> E -> M -> 0 counted per Ext^1 element."""
    classes = IsoClasses()
    for f in ext_transversal(M, N):
        classes.add(extension_module(M, N, f))
    return classes.items()


def submodule_pairs(M: FqRep):
    """Every (U, M/U) for U a submodule of M, as module pairs."""
    for bases in all_submodules(M):
        yield submodule(M, bases), quotient(M, bases)


def hall_table(M: FqRep) -> list:
    """[(A, B, F^M_{AB})] over iso classes, A the quotient and B the submodule."""
    subs, quots = IsoClasses(), IsoClasses()
    tally = Counter()
    for U, Q in submodule_pairs(M):
        tally[(quots.index(Q), subs.index(U))] += 1
    return [(quots.reps[a], subs.reps[b], c) for (a, b), c in sorted(tally.items())]
