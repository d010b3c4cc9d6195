"""Exact linear algebra over prime fields on numpy integer arrays.

All matrices are 2-d int64 arrays with entries reduced into [0, p).
Everything here is deterministic: pivots are always the first usable
row/column in index order, so reduced forms are canonical and safe to
compare across runs.

Sizes in this package stay in the low thousands, where vectorized
Gauss-Jordan over F_p is comfortably fast; nothing needs floating point,
so results are exact.
"""

from __future__ import annotations

import numpy as np


def as_fp(a, p: int) -> np.ndarray:
    """Copy input as an int64 array reduced mod p."""
    arr = np.array(a, dtype=np.int64) % p
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    return arr


def _inverse_table(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for i in range(1, p):
        inv[i] = pow(i, p - 2, p)
    return inv


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot column list."""
    m = as_fp(a, p)
    inv = _inverse_table(p)
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        lead = r + nz[0]
        if lead != r:
            m[[r, lead]] = m[[lead, r]]
        m[r] = (m[r] * inv[m[r, c]]) % p
        hit = np.nonzero(m[:, c])[0]
        hit = hit[hit != r]
        if hit.size:
            m[hit] = (m[hit] - np.outer(m[hit, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, p: int) -> int:
    return len(rref(a, p)[1])


def row_basis(a, p: int) -> np.ndarray:
    """Canonical basis of the row space (nonzero RREF rows)."""
    m, pivots = rref(a, p)
    return m[: len(pivots)]


def row_space_equal(a, b, p: int) -> bool:
    ba, bb = row_basis(a, p), row_basis(b, p)
    return ba.shape == bb.shape and bool(np.array_equal(ba, bb))


def row_space_contains(a, v, p: int) -> bool:
    base = row_basis(a, p)
    stacked = row_basis(np.vstack([base, as_fp(v, p)]), p)
    return stacked.shape[0] == base.shape[0]


def kernel(a, p: int) -> np.ndarray:
    """Basis, as rows, of the right null space {x : a @ x = 0}."""
    m, pivots = rref(a, p)
    ncols = m.shape[1]
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for k, c in enumerate(free):
        out[k, c] = 1
        for i, pc in enumerate(pivots):
            out[k, pc] = (-m[i, c]) % p
    return out


def solve(a, b, p: int) -> np.ndarray | None:
    """One solution x of a @ x = b (1-d), or None if inconsistent."""
    m = as_fp(a, p)
    rhs = np.atleast_1d(np.array(b, dtype=np.int64) % p)
    aug = np.hstack([m, rhs.reshape(-1, 1)])
    red, pivots = rref(aug, p)
    ncols = m.shape[1]
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = red[i, ncols]
    return x


def row_space_intersection(a, b, p: int) -> np.ndarray:
    """Canonical basis of rowspace(a) & rowspace(b).

    Left-kernel route: every (u, v) with u @ a == v @ b yields the
    intersection vector u @ a, and all of them arise this way.
    """
    ba, bb = row_basis(a, p), row_basis(b, p)
    if ba.shape[0] == 0 or bb.shape[0] == 0:
        return np.zeros((0, as_fp(a, p).shape[1]), dtype=np.int64)
    stacked = np.vstack([ba, (-bb) % p])
    left = kernel(stacked.T, p)  # rows (u | v) with u @ ba - v @ bb = 0
    cand = (left[:, : ba.shape[0]] @ ba) % p
    return row_basis(cand, p)


def coordinate_restriction(a, coords, p: int) -> np.ndarray:
    """Canonical basis of the vectors in rowspace(a) supported only on
    the given coordinate set.

    Eliminating the complement columns first leaves exactly the rows
    that vanish there, which span the restriction.
    """
    m = as_fp(a, p)
    ncols = m.shape[1]
    inside = sorted(set(int(c) for c in coords))
    outside = [c for c in range(ncols) if c not in set(inside)]
    perm = outside + inside
    red, _ = rref(m[:, perm], p)
    keep = np.all(red[:, : len(outside)] == 0, axis=1) & np.any(red != 0, axis=1)
    rows = red[keep]
    out = np.zeros((rows.shape[0], ncols), dtype=np.int64)
    out[:, perm] = rows
    return row_basis(out, p)
