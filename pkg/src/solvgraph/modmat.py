"""Dense matrix arithmetic over prime fields, on top of numpy int64.

Entries are kept reduced mod p.  With dimensions <= ~250 and p <= ~10**6
all intermediate products fit comfortably in int64 (guarded below).
"""

from __future__ import annotations

import numpy as np

Matrix = np.ndarray

# d * p**2 must stay below 2**63 for an unreduced mat-mul row sum.
_MAX_PRIME = 6_000_000


def _check(p: int, dim: int) -> None:
    if p > _MAX_PRIME:
        raise ValueError(f"modulus {p} too large for int64 matrix kernels")
    if dim * p * p >= 2**63:
        raise ValueError(f"dimension {dim} with modulus {p} risks int64 overflow")


def identity(dim: int) -> Matrix:
    return np.eye(dim, dtype=np.int64)


def from_rows(rows, p: int) -> Matrix:
    m = np.array(rows, dtype=np.int64) % p
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    _check(p, m.shape[0])
    return m


def mat_mul(a: Matrix, b: Matrix, p: int) -> Matrix:
    return (a @ b) % p


def mat_vec(a: Matrix, v: Matrix, p: int) -> Matrix:
    return (a @ v) % p


def mat_pow(a: Matrix, e: int, p: int) -> Matrix:
    result = identity(a.shape[0])
    base = a % p
    while e > 0:
        if e & 1:
            result = (result @ base) % p
        base = (base @ base) % p
        e >>= 1
    return result


def geometric_sum(a: Matrix, n: int, p: int) -> Matrix:
    """I + a + a**2 + ... + a**(n-1) mod p, by halving."""
    dim = a.shape[0]
    if n == 0:
        return np.zeros((dim, dim), dtype=np.int64)
    if n == 1:
        return identity(dim)
    half = geometric_sum(a, n // 2, p)
    total = (half + mat_pow(a, n // 2, p) @ half) % p
    if n % 2:
        total = (total + mat_pow(a, n - 1, p)) % p
    return total


def nullity(a: Matrix, p: int) -> int:
    """dim ker(a) over GF(p), by Gaussian elimination."""
    m = a.copy() % p
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        pivots = np.nonzero(m[rank:, col])[0]
        if pivots.size == 0:
            continue
        pivot = pivots[0] + rank
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        inv = pow(int(m[rank, col]), -1, p)
        m[rank] = m[rank] * inv % p
        for r in range(rows):
            if r != rank and m[r, col]:
                m[r] = (m[r] - m[r, col] * m[rank]) % p
        rank += 1
        if rank == rows:
            break
    return cols - rank


def has_fixed_vector(a: Matrix, p: int) -> bool:
    """True iff a has a nonzero fixed vector, i.e. ker(a - I) != 0."""
    return nullity((a - identity(a.shape[0])) % p, p) > 0


def monomial_parts(a: Matrix) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Decompose a monomial matrix into (perm, scale) with a[perm[j], j] = scale[j].

    Returns None when the matrix is not monomial.  Monomial structure lets
    fixed-space questions be answered per permutation cycle in O(dim).
    """
    dim = a.shape[0]
    perm = []
    scale = []
    for j in range(dim):
        nz = np.nonzero(a[:, j])[0]
        if nz.size != 1:
            return None
        perm.append(int(nz[0]))
        scale.append(int(a[nz[0], j]))
    if len(set(perm)) != dim:
        return None
    return tuple(perm), tuple(scale)


def monomial_has_fixed_vector(perm: tuple[int, ...], scale: tuple[int, ...], p: int) -> bool:
    """Fixed vector exists iff some cycle of perm has scale product 1 mod p."""
    dim = len(perm)
    seen = [False] * dim
    for start in range(dim):
        if seen[start]:
            continue
        prod = 1
        j = start
        while not seen[j]:
            seen[j] = True
            prod = prod * scale[j] % p
            j = perm[j]
        if prod == 1:
            return True
    return False


def monomial_mul(
    a: tuple[tuple[int, ...], tuple[int, ...]],
    b: tuple[tuple[int, ...], tuple[int, ...]],
    p: int,
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Product a @ b of monomial matrices in (perm, scale) form."""
    pa, sa = a
    pb, sb = b
    perm = tuple(pa[pb[j]] for j in range(len(pa)))
    scale = tuple(sb[j] * sa[pb[j]] % p for j in range(len(pa)))
    return perm, scale
