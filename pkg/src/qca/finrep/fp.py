"""Dense linear algebra over a prime field F_p on small int64 numpy arrays."""

from __future__ import annotations

import itertools

import numpy as np


def zeros(r, c):
    return np.zeros((r, c), dtype=np.int64)


def eye(n):
    return np.eye(n, dtype=np.int64)


def rref(A, p):
    """Reduced row echelon form and pivot columns."""
    R = np.array(A, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = (R[i] - R[i, c] * R[r]) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A, p) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A, p):
    """Columns spanning {x : A x = 0}, in a canonical (RREF-derived) basis."""
    A = np.asarray(A, dtype=np.int64)
    rows, cols = A.shape
    if rows == 0:
        return eye(cols)
    R, piv = rref(A, p)
    free = [c for c in range(cols) if c not in piv]
    N = zeros(cols, len(free))
    for k, f in enumerate(free):
        N[f, k] = 1
        for i, pc in enumerate(piv):
            N[pc, k] = (-R[i, f]) % p
    return N


def colspace(A, p):
    """A basis of the column space, as the columns of a matrix in RREF-transposed form."""
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return zeros(A.shape[0], 0)
    R, piv = rref(A.T, p)
    return R[: len(piv)].T.copy()


def solve(A, B, p):
    """A solution X of A X = B, or None."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    r, c = A.shape
    k = B.shape[1]
    if r == 0:
        return zeros(c, k)
    aug = np.concatenate([A, B], axis=1)
    R, piv = rref(aug, p)
    if any(pc >= c for pc in piv):
        return None
    X = zeros(c, k)
    for i, pc in enumerate(piv):
        X[pc] = R[i, c:]
    return X


def inv(A, p):
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("matrix is not square")
    X = solve(A, eye(n), p)
    if X is None or (A @ X % p != eye(n)).any():
        raise ValueError("matrix is singular")
    return X


def is_invertible(A, p) -> bool:
    n = A.shape[0]
    return A.shape == (n, n) and rank(A, p) == n


def complement(B, n, p):
    """Standard basis columns completing the columns of B (full column rank) to a basis of F_p^n."""
    if n == 0:
        return zeros(0, 0)
    B = np.asarray(B, dtype=np.int64).reshape(n, -1)
    if B.shape[1] == 0:
        return eye(n)
    _, piv = rref(B.T, p)
    free = [i for i in range(n) if i not in piv]
    C = zeros(n, len(free))
    for k, i in enumerate(free):
        C[i, k] = 1
    return C


def in_span(U, W, p) -> bool:
    """Whether every column of W lies in the column span of U."""
    if W.shape[1] == 0:
        return True
    if U.shape[1] == 0:
        return not (W % p).any()
    return rank(np.concatenate([U, W], axis=1), p) == rank(U, p)


def subspaces(n: int, k: int, p: int):
    """Yield every k-dimensional subspace of F_p^n once, as an n x k basis matrix in RREF form."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield zeros(n, 0)
        return
    for piv in itertools.combinations(range(n), k):
        slots = [(r, c) for r in range(k) for c in range(piv[r] + 1, n) if c not in piv]
        for vals in itertools.product(range(p), repeat=len(slots)):
            R = zeros(k, n)
            for r, c in enumerate(piv):
                R[r, c] = 1
            for (r, c), v in zip(slots, vals):
                R[r, c] = v
            yield R.T.copy()


def all_vectors(n: int, p: int):
    for vals in itertools.product(range(p), repeat=n):
        yield np.array(vals, dtype=np.int64)
