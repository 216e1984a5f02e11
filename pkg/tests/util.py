"""Shared helpers for the test suite: seeded random unitaries, pure
vectors, product states, and biseparable tripartite mixtures."""

import numpy as np

from realent import DensityMatrix


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(g)
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases


def random_vector(rng: np.random.Generator, d: int) -> np.ndarray:
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def random_product_vector(rng: np.random.Generator, dims) -> np.ndarray:
    v = np.ones(1, dtype=complex)
    for d in dims:
        v = np.kron(v, random_vector(rng, d))
    return v


def random_pure_state(rng: np.random.Generator, dims) -> DensityMatrix:
    v = random_vector(rng, int(np.prod(dims)))
    return DensityMatrix(np.outer(v, v.conj()), tuple(dims))


def random_biseparable(
    rng: np.random.Generator, d: int = 2, terms: int = 4
) -> DensityMatrix:
    """Convex mixture of pure states, each a product across some one-vs-two
    bipartition of a d x d x d space (the cut may differ per term)."""
    dims = (d, d, d)
    side = d**3
    weights = rng.dirichlet(np.ones(terms))
    total = np.zeros((side, side), dtype=complex)
    for w in weights:
        cut = int(rng.integers(0, 3))
        single = random_vector(rng, d)
        pair = random_vector(rng, d * d).reshape(d, d)
        if cut == 0:
            t = np.einsum("a,bc->abc", single, pair)
        elif cut == 1:
            t = np.einsum("b,ac->abc", single, pair)
        else:
            t = np.einsum("c,ab->abc", single, pair)
        v = t.reshape(side)
        total += w * np.outer(v, v.conj())
    return DensityMatrix(total, dims)
