"""Threshold location, parameter sweeps, and curve tabulation over
one-parameter state families.

A :class:`CriterionSpec` bundles a criterion kind with its parameters so
that every detector and measure bound in the library exposes the same
scalar interface: ``margin(family, x, spec)``.  For separability tests
the margin is norm minus bound; for measure bounds it is the bound value
itself.  In both cases a positive margin means detection, so thresholds
are zero crossings of the margin along the family parameter.

Bisection runs on the margin shifted down by the decision tolerance.
This keeps the search consistent with verdicts (a state is only
"detected" when its margin clears the tolerance) and makes families
whose margin sits exactly at zero on the separable side, as the partial
transpose does on some bound entangled families, bracket correctly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .criteria import (
    DECISION_TOLERANCE,
    BipartiteParams,
    MultipartiteParams,
    bordered_realignment_test,
    full_separability_test,
    gme_test,
    merge_bipartition,
    ppt_test,
    realignment_test,
)
from .measures import (
    concurrence_lower_bound,
    cren_lower_bound,
    gme_concurrence_lower_bound,
    realignment_concurrence_baseline,
)
from .states import DensityMatrix, StateFamily

__all__ = [
    "CRITERION_KINDS",
    "CriterionSpec",
    "ThresholdResult",
    "Objective",
    "SweepGrid",
    "SweepOutcome",
    "NoThresholdFound",
    "evaluate",
    "margin",
    "find_threshold",
    "sweep",
    "tabulate_curve",
]

PRESCAN_POINTS = 64
DEFAULT_TOLERANCE = 1e-6

# Criterion kinds and their parameter requirements:
#   bordered, gme, concurrence, cren, gme_concurrence -> BipartiteParams
#   fullsep                                           -> MultipartiteParams
#   realignment, ppt, baseline                        -> parameter-free
CRITERION_KINDS = (
    "bordered",
    "realignment",
    "ppt",
    "gme",
    "fullsep",
    "concurrence",
    "cren",
    "gme_concurrence",
    "baseline",
)

_NEEDS_BIPARTITE = {"bordered", "gme", "concurrence", "cren", "gme_concurrence"}
_BIPARTITE_ONLY = {"bordered", "realignment", "concurrence", "cren", "baseline"}


@dataclass(frozen=True)
class CriterionSpec:
    """A criterion kind plus whatever parameters that kind requires.

    `cut` plays two roles: for `ppt` it selects the transposed subsystem;
    for the bipartite-only kinds applied to a tripartite state it selects
    the one-vs-two bipartition to merge first.
    """

    kind: str
    bipartite: BipartiteParams | None = None
    multipartite: MultipartiteParams | None = None
    cut: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in CRITERION_KINDS:
            raise ValueError(
                f"CriterionSpec: unknown kind {self.kind!r}; "
                f"expected one of {', '.join(CRITERION_KINDS)}"
            )
        if self.kind in _NEEDS_BIPARTITE and self.bipartite is None:
            raise ValueError(f"CriterionSpec: kind {self.kind!r} needs alpha/beta/l")
        if self.kind == "fullsep" and self.multipartite is None:
            raise ValueError(f"CriterionSpec: kind {self.kind!r} needs q/alphas/l")

    def label(self) -> str:
        if self.kind in _NEEDS_BIPARTITE:
            p = self.bipartite
            body = f"alpha={p.alpha:g}, beta={p.beta:g}, l={p.l}"
        elif self.kind == "fullsep":
            p = self.multipartite
            alphas = ", ".join(f"{a:g}" for a in p.alphas)
            body = f"q={p.q}, alphas=({alphas}), l={p.l}"
        else:
            body = ""
        if self.cut is not None:
            body = f"{body}, cut={self.cut}" if body else f"cut={self.cut}"
        return f"{self.kind}({body})" if body else self.kind


@dataclass(frozen=True)
class ThresholdResult:
    family: str
    criterion: str
    threshold: float
    bracket: tuple[float, float]
    tolerance: float
    evaluations: int


class Objective(Enum):
    MAXIMIZE_MARGIN = "maximize_margin"
    MINIMIZE_THRESHOLD = "minimize_threshold"


@dataclass(frozen=True)
class SweepGrid:
    """Cartesian grid of border parameters for a sweep."""

    alphas: tuple[float, ...]
    betas: tuple[float, ...]
    ls: tuple[int, ...]
    objective: Objective = Objective.MINIMIZE_THRESHOLD

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        object.__setattr__(self, "betas", tuple(float(b) for b in self.betas))
        object.__setattr__(self, "ls", tuple(int(l) for l in self.ls))
        if not (self.alphas and self.betas and self.ls):
            raise ValueError("SweepGrid: all three axes must be non-empty")
        values = self.alphas + self.betas
        if any(not math.isfinite(v) for v in values):
            raise ValueError("SweepGrid: axis values must be finite")
        if any(l < 1 for l in self.ls):
            raise ValueError("SweepGrid: l values must be >= 1")

    def cells(self) -> list[BipartiteParams]:
        return [
            BipartiteParams(a, b, l)
            for a, b, l in itertools.product(self.alphas, self.betas, self.ls)
        ]


@dataclass(frozen=True)
class SweepOutcome:
    params: BipartiteParams
    threshold: float | None = None
    margin: float | None = None

    @property
    def found(self) -> bool:
        return self.threshold is not None or self.margin is not None


class NoThresholdFound(Exception):
    """The margin never changes sign on the scanned interval.

    Carries the scanned (x, margin) profile so callers can report why the
    search failed.
    """

    def __init__(
        self,
        family: str,
        criterion: str,
        profile: Sequence[tuple[float, float]],
    ) -> None:
        self.family = family
        self.criterion = criterion
        self.profile = tuple(profile)
        lo_x, lo_m = min(profile, key=lambda row: row[1])
        hi_x, hi_m = max(profile, key=lambda row: row[1])
        super().__init__(
            f"no sign change for {criterion} on family {family}: margin spans "
            f"[{lo_m:.6g} at x={lo_x:.6g}, {hi_m:.6g} at x={hi_x:.6g}] "
            f"over {len(profile)} scanned points"
        )


def evaluate(rho: DensityMatrix, spec: CriterionSpec) -> float:
    """Signed detection margin of `spec` on a single state.

    Positive means detection: for separability tests this is norm minus
    bound, for measure bounds the bound value itself.  Tripartite states
    handed to a bipartite-only kind are merged across `spec.cut` first
    (default cut 0).
    """
    if rho.n_parts == 3 and spec.kind in _BIPARTITE_ONLY:
        rho = merge_bipartition(rho, spec.cut if spec.cut is not None else 0)
    if spec.kind == "bordered":
        return bordered_realignment_test(rho, spec.bipartite).margin
    if spec.kind == "realignment":
        return realignment_test(rho).margin
    if spec.kind == "ppt":
        return ppt_test(rho, cut=spec.cut if spec.cut is not None else 1).margin
    if spec.kind == "gme":
        return gme_test(rho, spec.bipartite).margin
    if spec.kind == "fullsep":
        return full_separability_test(rho, spec.multipartite).margin
    if spec.kind == "concurrence":
        return concurrence_lower_bound(rho, spec.bipartite).value
    if spec.kind == "cren":
        return cren_lower_bound(rho, spec.bipartite).value
    if spec.kind == "gme_concurrence":
        return gme_concurrence_lower_bound(rho, spec.bipartite).value
    if spec.kind == "baseline":
        return realignment_concurrence_baseline(rho).value
    raise AssertionError(f"unhandled criterion kind {spec.kind!r}")


def margin(family: StateFamily, x: float, spec: CriterionSpec) -> float:
    """Signed detection margin of `spec` on the family member at `x`."""
    return evaluate(family(x), spec)


def find_threshold(
    family: StateFamily,
    spec: CriterionSpec,
    bracket: tuple[float, float] | None = None,
    tol: float = DEFAULT_TOLERANCE,
) -> ThresholdResult:
    """Locate the detection threshold of `spec` along the family parameter.

    Scans 64 uniform points over `bracket` (default: the family's whole
    interval), takes the lowest-x sign change of the tolerance-shifted
    margin, and bisects it down to width `tol`.  The scan, rather than
    trusting the endpoints alone, guards against non-monotone margins; if
    several sign changes appear, the lowest-x one is refined.

    Raises :class:`NoThresholdFound` with the full scanned profile when
    the margin never changes sign.
    """
    lo, hi = bracket if bracket is not None else family.interval
    if not lo < hi:
        raise ValueError(f"find_threshold: empty bracket ({lo!r}, {hi!r})")
    evaluations = 0

    def shifted(x: float) -> float:
        nonlocal evaluations
        evaluations += 1
        return margin(family, x, spec) - DECISION_TOLERANCE

    xs = [lo + (hi - lo) * i / (PRESCAN_POINTS - 1) for i in range(PRESCAN_POINTS)]
    gs = [shifted(x) for x in xs]
    bracket_idx = next(
        (i for i in range(len(xs) - 1) if (gs[i] > 0) != (gs[i + 1] > 0)),
        None,
    )
    if bracket_idx is None:
        profile = [(x, g + DECISION_TOLERANCE) for x, g in zip(xs, gs)]
        raise NoThresholdFound(family.name, spec.label(), profile)
    a, b = xs[bracket_idx], xs[bracket_idx + 1]
    ga = gs[bracket_idx]
    while b - a > tol:
        mid = (a + b) / 2.0
        gm = shifted(mid)
        if (ga > 0) != (gm > 0):
            b = mid
        else:
            a, ga = mid, gm
    return ThresholdResult(
        family=family.name,
        criterion=spec.label(),
        threshold=(a + b) / 2.0,
        bracket=(a, b),
        tolerance=tol,
        evaluations=evaluations,
    )


def _spec_for_cell(base: CriterionSpec, cell: BipartiteParams) -> CriterionSpec:
    return CriterionSpec(base.kind, bipartite=cell, cut=base.cut)


def sweep(
    family: StateFamily,
    grid: SweepGrid,
    kind: str,
    at: float | None = None,
    tol: float = DEFAULT_TOLERANCE,
) -> list[SweepOutcome]:
    """Evaluate a criterion kind over every (alpha, beta, l) grid cell.

    With objective MINIMIZE_THRESHOLD each cell gets a threshold search
    and cells rank by ascending threshold; cells without a sign change
    rank last.  With MAXIMIZE_MARGIN each cell's margin is evaluated at
    `at` (default: the family's upper endpoint) and cells rank by
    descending margin.  Ties break deterministically by smaller l, then
    smaller |alpha|, then smaller |beta|.
    """
    if kind not in _NEEDS_BIPARTITE:
        raise ValueError(
            f"sweep: kind {kind!r} does not take alpha/beta/l parameters"
        )
    base = CriterionSpec(kind, bipartite=BipartiteParams(0.0, 0.0, 1))
    outcomes: list[SweepOutcome] = []
    if grid.objective is Objective.MINIMIZE_THRESHOLD:
        for cell in grid.cells():
            try:
                res = find_threshold(family, _spec_for_cell(base, cell), tol=tol)
                outcomes.append(SweepOutcome(cell, threshold=res.threshold))
            except NoThresholdFound:
                outcomes.append(SweepOutcome(cell))

        def key(o: SweepOutcome):
            t = o.threshold if o.threshold is not None else math.inf
            return (t, o.params.l, abs(o.params.alpha), abs(o.params.beta))

    else:
        x = at if at is not None else family.interval[1]
        for cell in grid.cells():
            m = margin(family, x, _spec_for_cell(base, cell))
            outcomes.append(SweepOutcome(cell, margin=m))

        def key(o: SweepOutcome):
            return (-o.margin, o.params.l, abs(o.params.alpha), abs(o.params.beta))

    return sorted(outcomes, key=key)


def tabulate_curve(
    family: StateFamily, spec: CriterionSpec, xs: Sequence[float]
) -> list[tuple[float, float]]:
    """Margin of `spec` at each requested family parameter, one row per x."""
    return [(float(x), margin(family, float(x), spec)) for x in xs]
