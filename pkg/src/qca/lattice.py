"""Ice quivers, their integer matrices, and compatible skew forms.

Vertices are 1-based in every public function; ``arrows`` is a list of
``(source, target)`` pairs.  Exchangeable vertices are ``1..n`` and frozen
vertices ``n+1..m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class IceQuiver:
    m: int
    n: int
    arrows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows))
        if not (0 < self.n <= self.m):
            raise QuiverError(f"need 0 < n <= m, got n={self.n}, m={self.m}")
        for s, t in self.arrows:
            if not (1 <= s <= self.m and 1 <= t <= self.m):
                raise QuiverError(f"arrow {s}->{t} has an endpoint outside 1..{self.m}")
            if s == t:
                raise QuiverError(f"loop at vertex {s}")
            if s > self.n and t > self.n:
                raise QuiverError(f"arrow {s}->{t} joins two frozen vertices")
        if self.topological_order() is None:
            raise QuiverError("quiver has a directed cycle")

    def topological_order(self) -> Optional[list]:
        indeg = {v: 0 for v in range(1, self.m + 1)}
        for _, t in self.arrows:
            indeg[t] += 1
        ready = sorted(v for v, d in indeg.items() if d == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
            ready.sort()
        return order if len(order) == self.m else None

    def count(self, i: int, j: int) -> int:
        return sum(1 for s, t in self.arrows if s == i and t == j)

    def is_source(self, i: int) -> bool:
        return all(t != i for _, t in self.arrows)

    def is_sink(self, i: int) -> bool:
        return all(s != i for s, _ in self.arrows)

    def principal(self) -> "IceQuiver":
        """The full subquiver on the exchangeable vertices, with no frozen vertices."""
        arrows = [(s, t) for s, t in self.arrows if s <= self.n and t <= self.n]
        return IceQuiver(self.n, self.n, arrows)

    def reflect(self, i: int) -> "IceQuiver":
        """Reverse every arrow incident to ``i`` (``i`` must be a sink or a source)."""
        if not (self.is_sink(i) or self.is_source(i)):
            raise QuiverError(f"vertex {i} is neither a sink nor a source")
        arrows = [(t, s) if i in (s, t) else (s, t) for s, t in self.arrows]
        return IceQuiver(self.m, self.n, arrows)

    def paths(self, start: int, end: int) -> list:
        """All directed paths from ``start`` to ``end`` as tuples of arrow indices."""
        out = []

        def walk(v, acc):
            if v == end:
                out.append(tuple(acc))
            for idx, (s, t) in enumerate(self.arrows):
                if s == v:
                    walk(t, acc + [idx])

        walk(start, [])
        return out


def matrices_from_quiver(q: IceQuiver):
    """Return ``(btilde, rtilde, itilde, euler)`` as integer numpy arrays.

    ``btilde[i, j] = #(i->j) - #(j->i)`` and ``rtilde[i, j] = #(j->i)`` for
    ``1 <= i <= m``, ``1 <= j <= n``; ``euler = I_n - R`` with ``R`` the
    principal part of ``rtilde``.
    """
    m, n = q.m, q.n
    bt = np.zeros((m, n), dtype=np.int64)
    rt = np.zeros((m, n), dtype=np.int64)
    for s, t in q.arrows:
        if t <= n:
            bt[s - 1, t - 1] += 1
        if s <= n:
            bt[t - 1, s - 1] -= 1
            rt[t - 1, s - 1] += 1
    it = np.zeros((m, n), dtype=np.int64)
    it[:n, :n] = np.eye(n, dtype=np.int64)
    euler = np.eye(n, dtype=np.int64) - rt[:n, :n]
    return bt, rt, it, euler


# ------------------------------------------------------------ integer solver

def _column_echelon(A):
    """Unimodular column reduction: returns (H, U, pivots) with A @ U == H.

    ``pivots`` is a list of (row, col) pairs; H is zero to the right of each
    pivot in the pivot row and columns past the last pivot are zero.
    """
    A = [list(map(int, row)) for row in A]
    r = len(A)
    u = len(A[0]) if r else 0
    H = [row[:] for row in A]
    U = [[int(i == j) for j in range(u)] for i in range(u)]

    def colop(dst, src, k):  # col[dst] += k * col[src]
        for row in H:
            row[dst] += k * row[src]
        for row in U:
            row[dst] += k * row[src]

    def swap(a, b):
        for row in H:
            row[a], row[b] = row[b], row[a]
        for row in U:
            row[a], row[b] = row[b], row[a]

    def negate(a):
        for row in H:
            row[a] = -row[a]
        for row in U:
            row[a] = -row[a]

    pivots = []
    c = 0
    for i in range(r):
        if c >= u:
            break
        while True:
            nz = [j for j in range(c, u) if H[i][j] != 0]
            if not nz:
                break
            j = min(nz, key=lambda jj: (abs(H[i][jj]), jj))
            if j != c:
                swap(j, c)
            done = True
            for jj in range(c + 1, u):
                if H[i][jj]:
                    colop(jj, c, -(H[i][jj] // H[i][c]))
                    if H[i][jj]:
                        done = False
            if done:
                break
        if H[i][c] == 0:
            continue
        if H[i][c] < 0:
            negate(c)
        pivots.append((i, c))
        c += 1
    return H, U, pivots


def solve_integer_system(A, b):
    """Integer solution of ``A x = b``.

    Returns ``(x, kernel)`` where ``kernel`` is a list of integer vectors
    spanning the integer kernel, or ``None`` if no integer solution exists.
    """
    H, U, pivots = _column_echelon(A)
    u = len(U)
    y = [0] * u
    rank = len(pivots)
    for (i, c) in pivots:
        acc = int(b[i]) - sum(H[i][cc] * y[cc] for cc in range(c))
        if acc % H[i][c]:
            return None
        y[c] = acc // H[i][c]
    for i, row in enumerate(H):
        if sum(row[cc] * y[cc] for cc in range(u)) != int(b[i]):
            return None
    x = [sum(U[r][c] * y[c] for c in range(u)) for r in range(u)]
    kernel = [[U[r][c] for r in range(u)] for c in range(rank, u)]
    return x, kernel


def _reduce_against(x, basis):
    """Deterministic size reduction of ``x`` modulo the integer span of ``basis``."""
    if not basis:
        return x
    # Gram-Schmidt on the basis (exact), then nearest-plane from the last vector.
    gs = []
    for b in basis:
        v = [Fraction(t) for t in b]
        for g in gs:
            gg = sum(t * t for t in g)
            mu = sum(Fraction(s) * t for s, t in zip(b, g)) / gg
            v = [s - mu * t for s, t in zip(v, g)]
        gs.append(v)
    x = list(x)
    for b, g in reversed(list(zip(basis, gs))):
        gg = sum(t * t for t in g)
        if gg == 0:
            continue
        k = round(sum(Fraction(s) * t for s, t in zip(x, g)) / gg)
        if k:
            x = [s - k * t for s, t in zip(x, b)]
    return x


def solve_lambda(btilde, itilde=None):
    """Find an integer skew-symmetric ``L`` with ``L @ (-btilde) == itilde``.

    Returns ``None`` when no integer solution exists.
    """
    bt = np.asarray(btilde, dtype=np.int64)
    if bt.ndim != 2:
        raise ValueError("btilde must be a matrix")
    m, n = bt.shape
    if n > m:
        raise ValueError(f"btilde must be m x n with n <= m, got {bt.shape}")
    if itilde is None:
        itilde = np.zeros((m, n), dtype=np.int64)
        itilde[:n, :n] = np.eye(n, dtype=np.int64)
    it = np.asarray(itilde, dtype=np.int64)
    if it.shape != (m, n):
        raise ValueError(f"itilde has shape {it.shape}, expected {(m, n)}")
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    index = {p: k for k, p in enumerate(pairs)}
    rows, rhs = [], []
    for i in range(m):
        for k in range(n):
            # (L @ -B)[i, k] = -sum_j L[i, j] B[j, k]
            row = [0] * len(pairs)
            for j in range(m):
                if i == j or bt[j, k] == 0:
                    continue
                if i < j:
                    row[index[(i, j)]] -= int(bt[j, k])
                else:
                    row[index[(j, i)]] += int(bt[j, k])
            rows.append(row)
            rhs.append(int(it[i, k]))
    if not pairs:
        return None if any(rhs) else np.zeros((m, m), dtype=np.int64)
    sol = solve_integer_system(rows, rhs)
    if sol is None:
        return None
    x, kernel = sol
    x = _reduce_against(x, kernel)
    lam = np.zeros((m, m), dtype=np.int64)
    for (i, j), val in zip(pairs, x):
        lam[i, j] = val
        lam[j, i] = -val
    return lam


@dataclass
class Compatibility:
    ok: bool
    d: Optional[tuple]
    product: np.ndarray
    reason: str = ""

    def __bool__(self):
        return self.ok


def check_compatible(lam, btilde) -> Compatibility:
    """Check ``btilde^T lam == (D | 0)`` with ``D`` diagonal and positive."""
    lam = np.asarray(lam, dtype=np.int64)
    bt = np.asarray(btilde, dtype=np.int64)
    m, n = bt.shape
    if lam.shape != (m, m):
        return Compatibility(False, None, np.zeros((n, m), dtype=np.int64), f"lambda has shape {lam.shape}")
    prod = bt.T @ lam
    if not np.array_equal(lam.T, -lam):
        return Compatibility(False, None, prod, "lambda is not skew-symmetric")
    d = np.diag(prod[:, :n])
    off = prod.copy()
    off[np.arange(n), np.arange(n)] = 0
    if off.any():
        return Compatibility(False, None, prod, "btilde^T lambda is not of the form (D|0)")
    if (d <= 0).any():
        return Compatibility(False, tuple(int(t) for t in d), prod, "diagonal entries are not positive")
    return Compatibility(True, tuple(int(t) for t in d), prod)


@dataclass
class Lattice:
    """An ice quiver together with its matrices and a compatible skew form."""

    quiver: IceQuiver
    lam: np.ndarray
    btilde: np.ndarray = field(init=False)
    rtilde: np.ndarray = field(init=False)
    itilde: np.ndarray = field(init=False)
    euler: np.ndarray = field(init=False)

    def __post_init__(self):
        self.btilde, self.rtilde, self.itilde, self.euler = matrices_from_quiver(self.quiver)
        self.lam = np.asarray(self.lam, dtype=np.int64)
        self.lam_rows = tuple(tuple(int(t) for t in row) for row in self.lam)
        self.compat = check_compatible(self.lam, self.btilde)

    @classmethod
    def from_quiver(cls, q: IceQuiver, lam=None) -> "Lattice":
        if lam is None:
            bt, _, it, _ = matrices_from_quiver(q)
            lam = solve_lambda(bt, it)
            if lam is None:
                raise QuiverError("no integer skew-symmetric lambda with lambda(-B) = I exists")
        return cls(q, lam)

    @property
    def m(self):
        return self.quiver.m

    @property
    def n(self):
        return self.quiver.n

    def unit_compatible(self) -> bool:
        return bool(self.compat) and all(d == 1 for d in self.compat.d)

    def form(self, e: Sequence[int], f: Sequence[int]) -> int:
        """Skew form lambda(e, f) = e^T L f on Z^m."""
        return int(sum(e[i] * self.lam_rows[i][j] * f[j]
                       for i in range(self.m) if e[i] for j in range(self.m) if f[j]))

    def euler_form(self, e: Sequence[int], f: Sequence[int]) -> int:
        return euler_form(self.euler, e, f)

    def i_minus_r(self, dimv: Sequence[int]) -> tuple:
        """(I~ - R~) applied to a principal dimension vector; an m-vector."""
        v = np.asarray(dimv[: self.n], dtype=np.int64)
        return tuple(int(t) for t in (self.itilde - self.rtilde) @ v)

    def b_times(self, e: Sequence[int]) -> tuple:
        v = np.asarray(e[: self.n], dtype=np.int64)
        return tuple(int(t) for t in self.btilde @ v)


def euler_form(euler, e, f) -> int:
    """<e, f> = e^T (I - R) f."""
    euler = np.asarray(euler, dtype=np.int64)
    n = euler.shape[0]
    e = np.asarray(e, dtype=np.int64)
    f = np.asarray(f, dtype=np.int64)
    if e.shape != (n,) or f.shape != (n,):
        raise ValueError(f"vectors must have length {n}")
    return int(e @ euler @ f)


def framed_quiver(n: int, arrows) -> IceQuiver:
    """Principal quiver on ``1..n`` with one frozen vertex ``n+i`` and an arrow ``i -> n+i`` each.

    This framing always admits a compatible ``lambda`` with ``D = I``.
    """
    arrows = list(arrows) + [(i, n + i) for i in range(1, n + 1)]
    return IceQuiver(2 * n, n, arrows)


def kronecker() -> Lattice:
    """The Kronecker ice quiver with frozen vertices 3, 4 and its standard lambda."""
    q = IceQuiver(4, 2, [(1, 2), (1, 2), (1, 3), (2, 4)])
    lam = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, -2], [0, -1, 2, 0]]
    return Lattice(q, lam)


def a2() -> Lattice:
    return Lattice.from_quiver(framed_quiver(2, [(1, 2)]))


def a3() -> Lattice:
    return Lattice.from_quiver(framed_quiver(3, [(1, 2), (2, 3)]))
