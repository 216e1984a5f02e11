"""Thin scikit-learn adapters over the criteria and measures.

These wrap the functional API in the estimator protocol (``fit`` /
``predict`` / ``decision_function`` / ``transform`` with ``get_params``)
so detectors can sit in pipelines and grid searches.  There is nothing
to learn from data: ``fit`` only freezes the configured criterion, and
the "samples" are density matrices rather than feature rows, so X is a
sequence of :class:`~realent.states.DensityMatrix` objects.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .criteria import DECISION_TOLERANCE, BipartiteParams, MultipartiteParams
from .measures import (
    concurrence_lower_bound,
    cren_lower_bound,
    gme_concurrence_lower_bound,
    realignment_concurrence_baseline,
)
from .search import CRITERION_KINDS, CriterionSpec, evaluate
from .states import DensityMatrix

__all__ = [
    "as_state_batch",
    "EntanglementDetector",
    "EntanglementBoundTransformer",
]


def as_state_batch(X) -> list[DensityMatrix]:
    """Coerce the estimator input into a list of density matrices.

    Accepts a single :class:`DensityMatrix` or any iterable of them; a
    lone state becomes a batch of one.
    """
    if isinstance(X, DensityMatrix):
        return [X]
    if isinstance(X, Iterable):
        batch = list(X)
        if batch and all(isinstance(s, DensityMatrix) for s in batch):
            return batch
    raise TypeError(
        "expected a DensityMatrix or an iterable of DensityMatrix objects, "
        f"got {type(X).__name__}"
    )


class EntanglementDetector(BaseEstimator):
    """Binary entanglement detector with a scikit-learn face.

    Parameters mirror :class:`~realent.search.CriterionSpec`: `kind`
    selects the criterion, `alpha`/`beta`/`l` feed the bordered kinds,
    `q`/`alphas` feed the full-separability kind, `cut` selects a
    subsystem where relevant.  ``predict`` returns 1 where the margin
    exceeds `tolerance`, ``decision_function`` returns the raw margins.
    """

    def __init__(
        self,
        kind: str = "bordered",
        alpha: float = 0.0,
        beta: float = 0.0,
        l: int = 1,
        q: int = 1,
        alphas: tuple[float, ...] | None = None,
        cut: int | None = None,
        tolerance: float = DECISION_TOLERANCE,
    ):
        self.kind = kind
        self.alpha = alpha
        self.beta = beta
        self.l = l
        self.q = q
        self.alphas = alphas
        self.cut = cut
        self.tolerance = tolerance

    def _build_spec(self) -> CriterionSpec:
        if self.kind not in CRITERION_KINDS:
            raise ValueError(
                f"kind={self.kind!r} is not one of {', '.join(CRITERION_KINDS)}"
            )
        bipartite = BipartiteParams(self.alpha, self.beta, self.l)
        multipartite = None
        if self.kind == "fullsep":
            if self.alphas is None:
                raise ValueError("kind='fullsep' requires the alphas parameter")
            multipartite = MultipartiteParams(self.q, tuple(self.alphas), self.l)
        return CriterionSpec(
            self.kind, bipartite=bipartite, multipartite=multipartite, cut=self.cut
        )

    def fit(self, X=None, y=None):
        """Validate parameters and freeze the criterion; y is ignored."""
        self.spec_ = self._build_spec()
        return self

    def decision_function(self, X) -> np.ndarray:
        check_is_fitted(self, "spec_")
        return np.array([evaluate(rho, self.spec_) for rho in as_state_batch(X)])

    def predict(self, X) -> np.ndarray:
        """1 where entanglement is detected, 0 where inconclusive."""
        return (self.decision_function(X) > self.tolerance).astype(int)


class EntanglementBoundTransformer(BaseEstimator, TransformerMixin):
    """Maps a batch of states to a column of measure lower bounds.

    `measure` is one of "concurrence", "cren", "gme_concurrence", or
    "baseline" (the border-free concurrence baseline, which ignores
    alpha/beta/l).
    """

    _MEASURES = ("concurrence", "cren", "gme_concurrence", "baseline")

    def __init__(
        self,
        measure: str = "concurrence",
        alpha: float = 0.0,
        beta: float = 0.0,
        l: int = 1,
        clamp: bool = False,
    ):
        self.measure = measure
        self.alpha = alpha
        self.beta = beta
        self.l = l
        self.clamp = clamp

    def fit(self, X=None, y=None):
        if self.measure not in self._MEASURES:
            raise ValueError(
                f"measure={self.measure!r} is not one of {', '.join(self._MEASURES)}"
            )
        self.params_ = BipartiteParams(self.alpha, self.beta, self.l)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "params_")
        batch = as_state_batch(X)
        values = []
        for rho in batch:
            if self.measure == "concurrence":
                r = concurrence_lower_bound(rho, self.params_, clamp=self.clamp)
            elif self.measure == "cren":
                r = cren_lower_bound(rho, self.params_, clamp=self.clamp)
            elif self.measure == "gme_concurrence":
                r = gme_concurrence_lower_bound(rho, self.params_, clamp=self.clamp)
            else:
                r = realignment_concurrence_baseline(rho, clamp=self.clamp)
            values.append(r.value)
        return np.array(values)[:, None]
