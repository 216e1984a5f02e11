"""Entanglement measures: exact values for pure states, computable lower
bounds for mixed states.

Pure-state quantities are evaluated from Schmidt coefficients or reduced
purities.  Mixed-state lower bounds all follow the same pattern: the
amount by which a bordered realignment norm exceeds its separable
ceiling, rescaled by a dimension factor specific to the measure
(concurrence, CREN, or GME concurrence).  Bounds are reported raw and
may be negative, meaning the criterion is vacuous for that state; pass
``clamp=True`` to floor them at zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import linalg
from .criteria import (
    BipartiteParams,
    bipartition_average_norm,
    bordered_matrix,
    separability_bound,
)
from .states import DensityMatrix

__all__ = [
    "Measure",
    "BoundResult",
    "concurrence_pure",
    "cren_pure",
    "gme_concurrence_pure",
    "concurrence_lower_bound",
    "cren_lower_bound",
    "gme_concurrence_lower_bound",
    "realignment_concurrence_baseline",
]


class Measure(Enum):
    CONCURRENCE = "concurrence"
    CREN = "cren"
    GME_CONCURRENCE = "gme_concurrence"


@dataclass(frozen=True)
class BoundResult:
    """A lower bound on an entanglement measure.

    `value` may be negative (vacuous bound).  `params` records the border
    parameters used, or None for parameter-free baselines.  `cut` names a
    bipartition when the bound refers to one.
    """

    measure: Measure
    value: float
    params: BipartiteParams | None = None
    cut: tuple[int, ...] | None = None


def _clamped(value: float, clamp: bool) -> float:
    return max(value, 0.0) if clamp else value


def concurrence_pure(psi: np.ndarray, d_a: int, d_b: int) -> float:
    """Concurrence sqrt(2 * (1 - sum mu_i^2)) of a normalized pure state,
    with mu_i the squared Schmidt coefficients."""
    mu = linalg.schmidt_coefficients(psi, d_a, d_b)
    return math.sqrt(max(2.0 * (1.0 - float(np.sum(mu * mu))), 0.0))


def cren_pure(psi: np.ndarray, d_a: int, d_b: int) -> float:
    """Convex-roof extended negativity (2 sum_{i<j} sqrt(mu_i mu_j)) / (d-1)
    of a normalized pure state, with d = min(d_a, d_b).

    Normalized so that maximally entangled states score 1 in every
    dimension.  Product states (d = 1 included) score 0.
    """
    mu = linalg.schmidt_coefficients(psi, d_a, d_b)
    d = min(d_a, d_b)
    if d == 1:
        return 0.0
    roots = np.sqrt(np.clip(mu, 0.0, None))
    # sum_{i<j} sqrt(mu_i mu_j) = ((sum sqrt(mu))^2 - sum mu) / 2
    cross = (float(np.sum(roots)) ** 2 - float(np.sum(mu))) / 2.0
    return 2.0 * cross / (d - 1)


def gme_concurrence_pure(psi: np.ndarray, d: int) -> float:
    """GME concurrence of a normalized tripartite pure state on d x d x d:
    the minimum over the three single-site marginals of sqrt(1 - purity).

    Zero exactly on biseparable pure states (some marginal is pure).
    """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.shape[0] != d**3:
        raise ValueError(
            f"gme_concurrence_pure: state of length {psi.shape[0]} does not "
            f"live on {d}x{d}x{d}"
        )
    nrm = float(np.linalg.norm(psi))
    if abs(nrm - 1.0) > 1e-10:
        raise ValueError(f"gme_concurrence_pure: state has norm {nrm!r}, expected 1")
    rho = DensityMatrix(np.outer(psi, psi.conj()), (d, d, d))
    best = math.inf
    for keep in range(3):
        marginal = rho.partial_trace(tuple(i for i in range(3) if i != keep))
        purity = float(np.real(np.trace(marginal @ marginal)))
        best = min(best, math.sqrt(max(1.0 - purity, 0.0)))
    return best


def concurrence_lower_bound(
    rho: DensityMatrix, p: BipartiteParams, clamp: bool = False
) -> BoundResult:
    """Concurrence lower bound sqrt(2/(d(d-1))) * (trace_norm(M) - ceiling)
    for a bipartite state, with d = min(d_A, d_B) and M the bordered
    realignment matrix at (alpha, beta, l)."""
    d = min(rho.dims)
    if rho.n_parts != 2 or d < 2:
        raise ValueError(
            "concurrence_lower_bound: need a bipartite state with both local "
            f"dimensions >= 2, got dims {rho.dims}"
        )
    excess = linalg.trace_norm(bordered_matrix(rho, p)) - separability_bound(p)
    value = math.sqrt(2.0 / (d * (d - 1))) * excess
    return BoundResult(Measure.CONCURRENCE, _clamped(value, clamp), p)


def cren_lower_bound(
    rho: DensityMatrix, p: BipartiteParams, clamp: bool = False
) -> BoundResult:
    """CREN lower bound (trace_norm(M) - ceiling) / (d - 1) for a bipartite
    state, with d = min(d_A, d_B)."""
    d = min(rho.dims)
    if rho.n_parts != 2 or d < 2:
        raise ValueError(
            "cren_lower_bound: need a bipartite state with both local "
            f"dimensions >= 2, got dims {rho.dims}"
        )
    excess = linalg.trace_norm(bordered_matrix(rho, p)) - separability_bound(p)
    return BoundResult(Measure.CREN, _clamped(excess / (d - 1), clamp), p)


def gme_concurrence_lower_bound(
    rho: DensityMatrix, p: BipartiteParams, clamp: bool = False
) -> BoundResult:
    """GME concurrence lower bound for a tripartite d x d x d state:

        (avg_norm - ceiling - 2(d-1)/3) / sqrt(d(d-1))

    where avg_norm averages the bordered-matrix trace norms over the
    three one-vs-two bipartitions."""
    if rho.n_parts != 3:
        raise ValueError(
            "gme_concurrence_lower_bound: expected a tripartite state, got "
            f"{rho.n_parts} parts"
        )
    d = rho.dims[0]
    if any(dk != d for dk in rho.dims):
        raise ValueError(
            "gme_concurrence_lower_bound: local dimensions must be equal, "
            f"got {rho.dims}"
        )
    excess = (
        bipartition_average_norm(rho, p)
        - separability_bound(p)
        - 2.0 * (d - 1) / 3.0
    )
    value = excess / math.sqrt(d * (d - 1))
    return BoundResult(Measure.GME_CONCURRENCE, _clamped(value, clamp), p)


def realignment_concurrence_baseline(
    rho: DensityMatrix, clamp: bool = False
) -> BoundResult:
    """Border-free comparison baseline
    sqrt(2/(d(d-1))) * (max(trace_norm(R(rho)), trace_norm(rho^PT)) - 1)."""
    d = min(rho.dims)
    if rho.n_parts != 2 or d < 2:
        raise ValueError(
            "realignment_concurrence_baseline: need a bipartite state with "
            f"both local dimensions >= 2, got dims {rho.dims}"
        )
    da, db = rho.dims
    realigned = linalg.trace_norm(linalg.realign(rho.matrix, da, db))
    transposed = linalg.trace_norm(rho.partial_transpose(1))
    value = math.sqrt(2.0 / (d * (d - 1))) * (max(realigned, transposed) - 1.0)
    return BoundResult(Measure.CONCURRENCE, _clamped(value, clamp), None)
