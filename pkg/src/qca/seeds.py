"""Quantum seeds and mutation, with cluster variables kept in the initial torus."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .lattice import Lattice, check_compatible
from .qtorus import QuantumTorus, TorusElement, bar, divide_exact, inverse_monomial, normalized, render, to_json
from .scalars import FORMAL, qbinom


class MutationError(RuntimeError):
    pass


def e_matrix(btilde, k: int) -> np.ndarray:
    """The m x m matrix E for mutation in direction ``k`` (1-based)."""
    bt = np.asarray(btilde, dtype=np.int64)
    m, n = bt.shape
    if not 1 <= k <= n:
        raise ValueError(f"direction {k} is not exchangeable (1..{n})")
    E = np.eye(m, dtype=np.int64)
    col = k - 1
    for i in range(m):
        E[i, col] = -1 if i == col else max(0, -int(bt[i, col]))
    return E


def f_matrix(btilde, k: int) -> np.ndarray:
    bt = np.asarray(btilde, dtype=np.int64)
    n = bt.shape[1]
    F = np.eye(n, dtype=np.int64)
    for j in range(n):
        F[k - 1, j] = -1 if j == k - 1 else max(0, int(bt[k - 1, j]))
    return F


def mutate_matrix(btilde, k: int) -> np.ndarray:
    bt = np.asarray(btilde, dtype=np.int64)
    m, n = bt.shape
    c = k - 1
    out = bt.copy()
    for i in range(m):
        for j in range(n):
            if i == c or j == c:
                out[i, j] = -bt[i, j]
            else:
                bik, bkj = int(bt[i, c]), int(bt[c, j])
                out[i, j] = bt[i, j] + (abs(bik) * bkj + bik * abs(bkj)) // 2
    return out


@dataclass(frozen=True)
class QuantumSeed:
    lam: np.ndarray
    btilde: np.ndarray
    variables: tuple
    history: tuple = ()

    @classmethod
    def initial(cls, lattice: Lattice, ring=FORMAL) -> "QuantumSeed":
        if not lattice.compat:
            raise MutationError(f"(lambda, btilde) not compatible: {lattice.compat.reason}")
        torus = QuantumTorus(lattice.lam)
        variables = tuple(torus.gen(i, ring) for i in range(1, lattice.m + 1))
        return cls(lattice.lam.copy(), lattice.btilde.copy(), variables)

    @property
    def m(self):
        return self.btilde.shape[0]

    @property
    def n(self):
        return self.btilde.shape[1]

    @property
    def torus(self) -> QuantumTorus:
        return self.variables[0].torus

    def cluster(self):
        return self.variables[: self.n]

    def frame(self, c: Sequence[int]) -> TorusElement:
        """M(c) in the current frame.  Negative entries need single-term variables."""
        c = [int(t) for t in c]
        pos = [max(t, 0) for t in c]
        neg = [max(-t, 0) for t in c]
        top = normalized(pos, self.variables, self.lam)
        if not any(neg):
            return top
        for i, t in enumerate(neg):
            if t and not self.variables[i].is_monomial():
                raise MutationError(f"M(c) with c_{i + 1} < 0 is not a torus element in this seed")
        bottom = normalized(neg, self.variables, self.lam)
        twist = int(np.asarray(pos) @ self.lam @ np.asarray(neg))
        return (top * inverse_monomial(bottom)).vshift(twist)

    def diagonal(self):
        comp = check_compatible(self.lam, self.btilde)
        if not comp:
            raise MutationError(f"seed lost compatibility: {comp.reason}")
        return comp.d

    def __eq__(self, other):
        return (isinstance(other, QuantumSeed)
                and np.array_equal(self.lam, other.lam)
                and np.array_equal(self.btilde, other.btilde)
                and self.variables == other.variables)

    def __hash__(self):
        return hash((self.lam.tobytes(), self.btilde.tobytes(), self.variables))

    def to_json(self) -> dict:
        return {
            "history": list(self.history),
            "lambda": self.lam.tolist(),
            "btilde": self.btilde.tolist(),
            "variables": [to_json(x) for x in self.variables],
        }

    def to_text(self) -> str:
        lines = [f"history: {','.join(map(str, self.history)) or '(initial)'}",
                 "lambda:"]
        lines += ["  " + " ".join(f"{v:3d}" for v in row) for row in self.lam.tolist()]
        lines.append("btilde:")
        lines += ["  " + " ".join(f"{v:3d}" for v in row) for row in self.btilde.tolist()]
        for i, x in enumerate(self.variables, 1):
            tag = "X" if i <= self.n else "frozen X"
            lines.append(f"{tag}{i} = {render(x)}")
        return "\n".join(lines)


def frame_eval(seed: QuantumSeed, c: Sequence[int], k: int) -> TorusElement:
    """M'(c) for the frame mutated in direction ``k``, as an element of the initial torus."""
    c = [int(t) for t in c]
    if len(c) != seed.m:
        raise ValueError(f"c must have length {seed.m}")
    ck = c[k - 1]
    if ck < 0:
        raise ValueError("frame_eval needs c_k >= 0")
    d_k = seed.diagonal()[k - 1]
    E = e_matrix(seed.btilde, k)
    bk = seed.btilde[:, k - 1]
    ring = seed.variables[0].ring
    base = ring.vpow(d_k)
    Ec = E @ np.asarray(c, dtype=np.int64)
    shift = np.zeros(seed.m, dtype=np.int64)
    shift[k - 1] = ck
    numer = seed.torus.zero(ring)
    for p in range(ck + 1):
        a = Ec + p * bk
        a_top = a + shift  # k-th entry is now zero
        twist = int(a_top @ seed.lam @ shift)
        term = seed.frame(a_top).vshift(twist)
        numer = numer + term.scale(qbinom(ck, p, base))
    if ck == 0:
        return numer
    denom = seed.variables[k - 1] ** ck
    return divide_exact(numer, denom, side="right")


def _quasi_commute(x: TorusElement, y: TorusElement, lam_xy: int) -> bool:
    return x * y == (y * x).vshift(2 * lam_xy)


def mutate(seed: QuantumSeed, k: int, verify: bool = True) -> QuantumSeed:
    """Mutate in direction ``k`` (1-based)."""
    if not 1 <= k <= seed.n:
        raise ValueError(f"direction {k} is not exchangeable (1..{seed.n})")
    new_var = frame_eval(seed, [int(i == k - 1) for i in range(seed.m)], k)
    E = e_matrix(seed.btilde, k)
    lam = E.T @ seed.lam @ E
    bt = mutate_matrix(seed.btilde, k)
    variables = list(seed.variables)
    variables[k - 1] = new_var
    out = QuantumSeed(lam, bt, tuple(variables), seed.history + (k,))
    if verify:
        comp = check_compatible(lam, bt)
        if not comp or comp.d != seed.diagonal():
            raise MutationError(f"mutated pair not compatible: {comp.reason}")
        if not np.array_equal(bt, E @ seed.btilde @ f_matrix(seed.btilde, k)):
            raise MutationError("sign-rule mutation disagrees with E B F")
        for j in range(seed.m):
            if j != k - 1 and not _quasi_commute(new_var, variables[j], int(lam[k - 1, j])):
                raise MutationError(f"new variable does not quasi-commute with X{j + 1} per E^T L E")
    return out


def mutate_sequence(seed: QuantumSeed, seq) -> QuantumSeed:
    for k in seq:
        seed = mutate(seed, k)
    return seed


def is_bar_invariant(x: TorusElement) -> bool:
    return bar(x) == x


def seeds_within(seed: QuantumSeed, depth: int):
    """All seeds reachable by reduced mutation sequences of length <= depth (with repeats)."""
    out = [seed]
    frontier = [seed]
    for _ in range(depth):
        nxt = []
        for s in frontier:
            for k in range(1, s.n + 1):
                if s.history and s.history[-1] == k:
                    continue
                t = mutate(s, k)
                nxt.append(t)
        out.extend(nxt)
        frontier = nxt
    return out
