"""Separability criteria built on bordered realignment matrices.

The central object is the bordered matrix

    M = [[alpha*beta*E_l,  alpha * W(rho_B)^T],
         [beta * W(rho_A), R(rho)           ]]

where E_l is the all-ones l x l block, W(X) repeats vec(X) as l columns,
and R is the realignment map.  Every separable bipartite state obeys
trace_norm(M) <= sqrt((l*alpha^2 + 1) * (l*beta^2 + 1)) for arbitrary
real alpha, beta, so exceeding the bound certifies entanglement.  The
module also provides the plain realignment and PPT baselines, the
averaged-over-bipartitions variant that certifies genuine tripartite
entanglement, and the multilinear extension whose trace norm bounds
fully separable n-party states.

All tests return a :class:`CriterionVerdict`; a state is flagged only
when the margin exceeds :data:`DECISION_TOLERANCE`, so "Inconclusive"
covers both separable states and entanglement too weak for the chosen
parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from . import linalg
from .states import DensityMatrix

__all__ = [
    "DECISION_TOLERANCE",
    "BipartiteParams",
    "MultipartiteParams",
    "Verdict",
    "CriterionVerdict",
    "repeated_vec",
    "bordered_matrix",
    "separability_bound",
    "bordered_realignment_test",
    "realignment_test",
    "ppt_test",
    "merge_bipartition",
    "bipartition_average_norm",
    "gme_test",
    "multipartite_bordered_matrix",
    "full_separability_bound",
    "full_separability_test",
]

DECISION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class BipartiteParams:
    """Border weights and width for the bipartite bordered matrix.

    `alpha` and `beta` may be any finite reals (including negative);
    `l` is the border width, a positive integer.
    """

    alpha: float
    beta: float
    l: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise ValueError(
                f"BipartiteParams: alpha={self.alpha!r}, beta={self.beta!r} "
                "must be finite"
            )
        if not isinstance(self.l, int) or self.l < 1:
            raise ValueError(f"BipartiteParams: l={self.l!r} must be an integer >= 1")


@dataclass(frozen=True)
class MultipartiteParams:
    """Border weights for the multilinear bordered matrix.

    `q` selects which subsystem contributes the column factor: subsystems
    1..q-1 pass through untouched, subsystem q is vectorized as a column,
    subsystems q+1..n as rows.  `alphas` lists the non-negative border
    weights for subsystems q..n in that order.
    """

    q: int
    alphas: tuple[float, ...]
    l: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        if not isinstance(self.q, int) or self.q < 1:
            raise ValueError(f"MultipartiteParams: q={self.q!r} must be an integer >= 1")
        if not self.alphas:
            raise ValueError("MultipartiteParams: alphas must be non-empty")
        if any(not math.isfinite(a) or a < 0 for a in self.alphas):
            raise ValueError(
                f"MultipartiteParams: alphas={self.alphas!r} must be non-negative"
            )
        if not isinstance(self.l, int) or self.l < 1:
            raise ValueError(f"MultipartiteParams: l={self.l!r} must be an integer >= 1")


class Verdict(Enum):
    ENTANGLEMENT_DETECTED = "entanglement_detected"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CriterionVerdict:
    """Outcome of a separability test.

    `margin` is `norm_value - bound`; the verdict is
    ENTANGLEMENT_DETECTED exactly when the margin exceeds the decision
    tolerance.
    """

    norm_value: float
    bound: float
    margin: float
    verdict: Verdict

    @property
    def detected(self) -> bool:
        return self.verdict is Verdict.ENTANGLEMENT_DETECTED

    @classmethod
    def from_norm(
        cls, norm_value: float, bound: float, tolerance: float = DECISION_TOLERANCE
    ) -> "CriterionVerdict":
        margin = norm_value - bound
        verdict = (
            Verdict.ENTANGLEMENT_DETECTED
            if margin > tolerance
            else Verdict.INCONCLUSIVE
        )
        return cls(norm_value, bound, margin, verdict)


def repeated_vec(x: np.ndarray, l: int) -> np.ndarray:
    """Stack l identical copies of vec(x) as columns; shape (rows*cols, l)."""
    if l < 1:
        raise ValueError(f"repeated_vec: l={l!r} must be >= 1")
    v = linalg.vectorize(x)
    return np.tile(v[:, None], (1, l))


def _require_bipartite(rho: DensityMatrix, who: str) -> tuple[int, int]:
    if rho.n_parts != 2:
        raise ValueError(f"{who}: expected a bipartite state, got {rho.n_parts} parts")
    return rho.dims[0], rho.dims[1]


def bordered_matrix(rho: DensityMatrix, p: BipartiteParams) -> np.ndarray:
    """Assemble the bordered realignment matrix of a bipartite state.

    Shape is (l + d_A^2) x (l + d_B^2).  The border rows repeat
    vec(tr_A rho) scaled by alpha, the border columns repeat
    vec(tr_B rho) scaled by beta, the corner is alpha*beta, and the core
    is the realignment of rho.  Borders use plain (unconjugated)
    transposes.
    """
    da, db = _require_bipartite(rho, "bordered_matrix")
    l = p.l
    r = linalg.realign(rho.matrix, da, db)
    rho_a = rho.partial_trace((1,))
    rho_b = rho.partial_trace((0,))
    top = np.hstack(
        [p.alpha * p.beta * np.ones((l, l)), p.alpha * repeated_vec(rho_b, l).T]
    )
    bottom = np.hstack([p.beta * repeated_vec(rho_a, l), r])
    return np.vstack([top, bottom])


def separability_bound(p: BipartiteParams) -> float:
    """Trace-norm ceiling sqrt((l*alpha^2 + 1)*(l*beta^2 + 1)) obeyed by
    every separable state's bordered matrix."""
    return math.sqrt(
        (p.l * p.alpha**2 + 1.0) * (p.l * p.beta**2 + 1.0)
    )


def bordered_realignment_test(
    rho: DensityMatrix,
    p: BipartiteParams,
    tolerance: float = DECISION_TOLERANCE,
) -> CriterionVerdict:
    """Flag entanglement when the bordered matrix's trace norm exceeds the
    separable ceiling for the given (alpha, beta, l)."""
    norm = linalg.trace_norm(bordered_matrix(rho, p))
    return CriterionVerdict.from_norm(norm, separability_bound(p), tolerance)


def realignment_test(
    rho: DensityMatrix, tolerance: float = DECISION_TOLERANCE
) -> CriterionVerdict:
    """Plain realignment (computable cross norm) baseline: separable states
    satisfy trace_norm(R(rho)) <= 1."""
    da, db = _require_bipartite(rho, "realignment_test")
    norm = linalg.trace_norm(linalg.realign(rho.matrix, da, db))
    return CriterionVerdict.from_norm(norm, 1.0, tolerance)


def ppt_test(
    rho: DensityMatrix,
    cut: int | Sequence[int] = 1,
    tolerance: float = DECISION_TOLERANCE,
) -> CriterionVerdict:
    """Positivity of the partial transpose across `cut`.

    `cut` names the subsystem(s) to transpose.  The reported norm_value
    is the negated smallest eigenvalue of the partial transpose against a
    bound of zero, so the margin is positive exactly when the partial
    transpose fails to be positive semidefinite.
    """
    subsystems = (cut,) if isinstance(cut, int) else tuple(cut)
    if not subsystems or len(set(subsystems)) != len(subsystems):
        raise ValueError(f"ppt_test: invalid cut {cut!r}")
    for s in subsystems:
        if not 0 <= s < rho.n_parts:
            raise ValueError(
                f"ppt_test: subsystem {s} out of range for {rho.n_parts} parts"
            )
    mat = rho.matrix
    for s in subsystems:
        mat = linalg.partial_transpose(mat, rho.dims, s)
    min_eig = float(np.linalg.eigvalsh((mat + mat.conj().T) / 2).min())
    return CriterionVerdict.from_norm(-min_eig, 0.0, tolerance)


def merge_bipartition(rho: DensityMatrix, first: int) -> DensityMatrix:
    """View a tripartite state as bipartite across the cut first | rest.

    Subsystem `first` becomes the left factor; the other two keep their
    ascending index order and merge into a single right factor.
    """
    if rho.n_parts != 3:
        raise ValueError(
            f"merge_bipartition: expected a tripartite state, got {rho.n_parts} parts"
        )
    if not 0 <= first < 3:
        raise ValueError(f"merge_bipartition: invalid subsystem {first!r}")
    rest = tuple(i for i in range(3) if i != first)
    permuted = rho.permute((first,) + rest)
    d0, d1, d2 = permuted.dims
    return DensityMatrix(permuted.matrix, (d0, d1 * d2))


def bipartition_average_norm(rho: DensityMatrix, p: BipartiteParams) -> float:
    """Average of the bordered-matrix trace norms over the three one-vs-two
    bipartitions of a tripartite state, with the same (alpha, beta, l)
    applied to every cut."""
    if rho.n_parts != 3:
        raise ValueError(
            "bipartition_average_norm: expected a tripartite state, "
            f"got {rho.n_parts} parts"
        )
    norms = [
        linalg.trace_norm(bordered_matrix(merge_bipartition(rho, first), p))
        for first in range(3)
    ]
    return float(sum(norms) / 3.0)


def gme_test(
    rho: DensityMatrix,
    p: BipartiteParams,
    tolerance: float = DECISION_TOLERANCE,
) -> CriterionVerdict:
    """Genuine tripartite entanglement test for equal local dimensions d.

    Every biseparable state keeps the bipartition-averaged norm below
    sqrt((l*alpha^2+1)*(l*beta^2+1)) + 2(d-1)/3, so a positive margin
    certifies genuine multipartite entanglement, not mere inseparability.
    """
    if rho.n_parts != 3:
        raise ValueError(
            f"gme_test: expected a tripartite state, got {rho.n_parts} parts"
        )
    d = rho.dims[0]
    if any(dk != d for dk in rho.dims):
        raise ValueError(f"gme_test: local dimensions must be equal, got {rho.dims}")
    norm = bipartition_average_norm(rho, p)
    bound = separability_bound(p) + 2.0 * (d - 1) / 3.0
    return CriterionVerdict.from_norm(norm, bound, tolerance)


def _border_tensor(d: int, alpha: float, l: int) -> np.ndarray:
    """Per-factor contraction tensor G with G[x, i, j] the x-th entry of
    the bordered column (alpha repeated l times, then vec(E_ij))."""
    g = np.zeros((l + d * d, d, d))
    for i in range(d):
        g[:l, i, i] = alpha
    for i in range(d):
        for j in range(d):
            g[l + j * d + i, i, j] = 1.0
    return g


def multipartite_bordered_matrix(
    rho: DensityMatrix, p: MultipartiteParams
) -> np.ndarray:
    """Assemble the multilinear bordered matrix of an n-party state.

    For the matrix-unit decomposition rho = sum c * E1 x ... x En, each
    term contributes E1 x ... x E_{q-1} tensored with an outer product:
    the bordered column of factor q times the bordered rows of factors
    n, n-1, ..., q+1 (in that order).  The map is linear in rho, so the
    result does not depend on the decomposition; the implementation
    contracts all terms at once with a single einsum.

    Shape: (d_1..d_{q-1} * (l + d_q^2)) x (d_1..d_{q-1} * prod_{k>q}(l + d_k^2)).
    """
    dims = rho.dims
    n = len(dims)
    if n < 2:
        raise ValueError(
            f"multipartite_bordered_matrix: need at least 2 parts, got {n}"
        )
    if not 1 <= p.q <= n - 1:
        raise ValueError(
            f"multipartite_bordered_matrix: q={p.q} outside [1, {n - 1}]"
        )
    if len(p.alphas) != n - p.q + 1:
        raise ValueError(
            f"multipartite_bordered_matrix: need {n - p.q + 1} alphas for "
            f"q={p.q} on {n} parts, got {len(p.alphas)}"
        )
    q0 = p.q - 1  # 0-based index of the column factor
    t = rho.matrix.reshape(dims + dims)
    operands: list[np.ndarray] = [t]
    subscripts: list[list[int]] = [list(range(2 * n))]
    next_label = 2 * n
    operands.append(_border_tensor(dims[q0], p.alphas[0], p.l))
    subscripts.append([next_label, q0, n + q0])
    x_label = next_label
    next_label += 1
    y_labels: list[int] = []
    for k in range(n - 1, q0, -1):
        operands.append(_border_tensor(dims[k], p.alphas[k - q0], p.l))
        subscripts.append([next_label, k, n + k])
        y_labels.append(next_label)
        next_label += 1
    out_sub = (
        list(range(q0)) + [x_label] + list(range(n, n + q0)) + y_labels
    )
    args: list[object] = []
    for op, sub in zip(operands, subscripts):
        args.extend([op, sub])
    args.append(out_sub)
    result = np.einsum(*args)
    rows = int(np.prod(dims[:q0], dtype=int)) * (p.l + dims[q0] ** 2)
    cols = int(np.prod(dims[:q0], dtype=int))
    for k in range(q0 + 1, n):
        cols *= p.l + dims[k] ** 2
    return np.ascontiguousarray(result.reshape(rows, cols))


def full_separability_bound(p: MultipartiteParams) -> float:
    """Trace-norm ceiling prod_k sqrt(l*alpha_k^2 + 1) obeyed by every
    fully separable state's multilinear bordered matrix."""
    return float(np.prod([math.sqrt(p.l * a * a + 1.0) for a in p.alphas]))


def full_separability_test(
    rho: DensityMatrix,
    p: MultipartiteParams,
    tolerance: float = DECISION_TOLERANCE,
) -> CriterionVerdict:
    """Flag a state as not fully separable when the multilinear bordered
    matrix's trace norm exceeds prod_k sqrt(l*alpha_k^2 + 1)."""
    norm = linalg.trace_norm(multipartite_bordered_matrix(rho, p))
    return CriterionVerdict.from_norm(norm, full_separability_bound(p), tolerance)
