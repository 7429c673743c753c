"""Dense exact linear algebra over a :class:`~thinlie.ffield.GF`."""

from __future__ import annotations

import numpy as np

from .ffield import GF

__all__ = ["rref", "left_nullspace", "rank", "solve_in_span", "inverse"]


def rref(F: GF, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are taken at the lowest possible column, so the result depends
    only on the row space of ``M``.
    """
    A = F.asarray(M).copy()
    if A.ndim != 2:
        raise ValueError("rref expects a matrix")
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = F.inv(A[r, c])
        A[r] = F.mul(A[r], inv)
        col = A[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            A[rows] = F.sub(A[rows], F.mul(col[rows, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: GF, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def left_nullspace(F: GF, M) -> np.ndarray:
    """Rows spanning {v : v @ M = 0}, in reduced echelon form."""
    M = F.asarray(M)
    n = M.shape[0]
    if n == 0:
        return F.zeros((0, 0))
    if M.shape[1] == 0:
        return F.asarray(np.eye(n, dtype=np.int64))
    # null space of M^T, read off from the rref of M^T
    R, piv = rref(F, M.T)
    free = [c for c in range(n) if c not in piv]
    basis = F.zeros((len(free), n))
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(piv):
            basis[i, pc] = F.neg(R[r, f])
    if basis.shape[0]:
        basis = rref(F, basis)[0]
    return basis


def inverse(F: GF, M) -> np.ndarray:
    M = F.asarray(M)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    aug = np.concatenate([M, F.asarray(np.eye(n, dtype=np.int64))], axis=1)
    R, piv = rref(F, aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("singular matrix")
    return R[:, n:]


def solve_in_span(F: GF, rows, v):
    """Coefficients c with c @ rows == v, or None if v is not in the row span."""
    rows = F.asarray(rows)
    v = F.asarray(v)
    k = rows.shape[0]
    if k == 0:
        return F.zeros(0) if not np.any(v) else None
    aug = np.concatenate([rows.T, v[:, None]], axis=1)
    R, piv = rref(F, aug)
    if k in piv:
        return None
    c = F.zeros(k)
    for r, pc in enumerate(piv):
        c[pc] = R[r, k]
    return c
