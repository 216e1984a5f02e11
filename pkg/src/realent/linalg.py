"""Dense complex linear algebra kernels: vectorization, realignment, norms,
partial operations on tensor-product spaces, Schmidt coefficients.

Conventions. Vectorization is column-stacking: for an m x n matrix A the
entry A[i, j] lands at position j*m + i (0-based; in 1-based notation the
entry a_ij sits at (j-1)*m + i). The realignment of an (mn) x (mn) matrix Z,
viewed as an m x m grid of n x n blocks Z_ij, is the m^2 x n^2 matrix whose
row for block (i, j) is vec(Z_ij)^T, rows ordered with i fast and j slow.
Subsystem positions in this module are 0-based.

All functions are pure and operate on plain numpy arrays.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "vectorize",
    "kron",
    "realign",
    "singular_values",
    "trace_norm",
    "partial_trace",
    "partial_transpose",
    "permute_systems",
    "schmidt_coefficients",
]


def vectorize(a: np.ndarray) -> np.ndarray:
    """Column-stacked vectorization of a matrix."""
    a = np.asarray(a)
    if a.size == 0:
        raise ValueError("vectorize: empty matrix")
    return a.flatten(order="F")


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with block (i, j) equal to a[i, j] * b."""
    return np.kron(np.asarray(a), np.asarray(b))


def realign(z: np.ndarray, m: int, n: int) -> np.ndarray:
    """Realign an (mn) x (mn) matrix into the m^2 x n^2 matrix of block vecs.

    Row j*m + i holds vec(Z_ij)^T for the n x n block at grid position
    (i, j).  Satisfies realign(kron(A, B)) = outer(vec(A), vec(B)) for
    A m x m and B n x n.
    """
    z = np.asarray(z)
    if z.shape != (m * n, m * n):
        raise ValueError("realign: Z is not (mn)x(mn)")
    return z.reshape(m, n, m, n).transpose(2, 0, 3, 1).reshape(m * m, n * n)


def singular_values(a: np.ndarray) -> np.ndarray:
    """Singular values of a matrix, sorted non-increasing."""
    a = np.asarray(a)
    if not np.all(np.isfinite(a)):
        raise ValueError("singular_values: input has non-finite entries")
    try:
        return np.linalg.svd(a, compute_uv=False)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - depends on LAPACK
        raise np.linalg.LinAlgError(
            f"singular_values: SVD did not converge on shape {a.shape}: {exc}"
        ) from exc


def trace_norm(a: np.ndarray) -> float:
    """Trace norm (sum of singular values)."""
    return float(singular_values(a).sum())


def partial_trace(
    rho: np.ndarray, dims: Sequence[int], traced: Iterable[int]
) -> np.ndarray:
    """Trace out the subsystems at the given 0-based positions.

    Returns the reduced matrix over the kept subsystems in their original
    order.  `traced` must be a non-empty proper subset of positions.
    """
    rho = np.asarray(rho)
    dims = tuple(int(d) for d in dims)
    n = len(dims)
    traced_set = set(int(t) for t in traced)
    if not traced_set or not traced_set.issubset(range(n)) or len(traced_set) >= n:
        raise ValueError(
            f"partial_trace: traced positions {sorted(traced_set)} must be a "
            f"non-empty proper subset of 0..{n - 1}"
        )
    t = rho.reshape(dims + dims)
    # contract row with column axis for each traced subsystem, largest
    # position first so remaining axis numbers stay valid
    offset = n
    for pos in sorted(traced_set, reverse=True):
        t = np.trace(t, axis1=pos, axis2=pos + offset)
        offset -= 1
    keep = [d for i, d in enumerate(dims) if i not in traced_set]
    side = int(np.prod(keep))
    return t.reshape(side, side)


def partial_transpose(rho: np.ndarray, dims: Sequence[int], subsystem: int) -> np.ndarray:
    """Transpose the tensor factor at the given 0-based position."""
    rho = np.asarray(rho)
    dims = tuple(int(d) for d in dims)
    n = len(dims)
    if not 0 <= subsystem < n:
        raise ValueError(f"partial_transpose: subsystem {subsystem} out of range 0..{n - 1}")
    axes = list(range(2 * n))
    axes[subsystem], axes[n + subsystem] = axes[n + subsystem], axes[subsystem]
    side = int(np.prod(dims))
    return rho.reshape(dims + dims).transpose(axes).reshape(side, side)


def permute_systems(
    rho: np.ndarray, dims: Sequence[int], perm: Sequence[int]
) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reorder tensor factors; returns (matrix, new dims).

    `perm[k]` is the old 0-based position of the factor that ends up at
    position k.  Implemented by permuting basis-index digits, so trace,
    eigenvalues and trace norm are untouched.
    """
    rho = np.asarray(rho)
    dims = tuple(int(d) for d in dims)
    n = len(dims)
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"permute_systems: {perm} is not a permutation of 0..{n - 1}")
    axes = list(perm) + [n + p for p in perm]
    new_dims = tuple(dims[p] for p in perm)
    side = int(np.prod(dims))
    return rho.reshape(dims + dims).transpose(axes).reshape(side, side), new_dims


def schmidt_coefficients(psi: np.ndarray, d_a: int, d_b: int) -> np.ndarray:
    """Squared Schmidt coefficients mu_0 >= mu_1 >= ... of a bipartite pure state.

    `psi` is a normalized vector of length d_a*d_b in the lexicographic
    product basis (left factor most significant).  The mu_i are the squared
    singular values of the d_a x d_b matricization and sum to 1.
    """
    psi = np.asarray(psi).reshape(-1)
    if psi.size != d_a * d_b:
        raise ValueError(f"schmidt_coefficients: length {psi.size} != {d_a}*{d_b}")
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"schmidt_coefficients: state not normalized, |psi| = {norm!r}")
    mu = np.linalg.svd(psi.reshape(d_a, d_b), compute_uv=False) ** 2
    return np.sort(mu)[::-1]
