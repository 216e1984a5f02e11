"""Unit tests for pure-state measures and mixed-state lower bounds."""

import math

import numpy as np
import pytest

from realent import (
    BipartiteParams,
    DensityMatrix,
    Measure,
    bordered_matrix,
    concurrence_lower_bound,
    concurrence_pure,
    cren_lower_bound,
    cren_pure,
    gme_concurrence_lower_bound,
    gme_concurrence_pure,
    random_separable,
    realignment_concurrence_baseline,
    schmidt_coefficients,
    separability_bound,
    tiles_family,
    trace_norm,
)
from util import random_biseparable, random_product_vector, random_vector

BELL_VEC = np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2)
BELL = DensityMatrix(np.outer(BELL_VEC, BELL_VEC), (2, 2))
GHZ_VEC = np.zeros(8)
GHZ_VEC[0] = GHZ_VEC[7] = 1.0 / math.sqrt(2)


def _max_entangled(d: int) -> np.ndarray:
    psi = np.zeros(d * d)
    for i in range(d):
        psi[i * d + i] = 1.0 / math.sqrt(d)
    return psi


class TestPureMeasures:
    def test_concurrence_bell(self):
        assert concurrence_pure(BELL_VEC, 2, 2) == pytest.approx(1.0, abs=1e-12)

    def test_concurrence_product(self):
        psi = np.array([1.0, 0.0, 0.0, 0.0])
        assert concurrence_pure(psi, 2, 2) == pytest.approx(0.0, abs=1e-12)

    def test_concurrence_maximally_entangled_qutrits(self):
        assert concurrence_pure(_max_entangled(3), 3, 3) == pytest.approx(
            math.sqrt(4.0 / 3.0), abs=1e-12
        )

    def test_cren_bell_and_qutrits(self):
        assert cren_pure(BELL_VEC, 2, 2) == pytest.approx(1.0, abs=1e-12)
        assert cren_pure(_max_entangled(3), 3, 3) == pytest.approx(1.0, abs=1e-12)

    def test_cren_product(self):
        psi = np.zeros(6)
        psi[0] = 1.0
        assert cren_pure(psi, 2, 3) == pytest.approx(0.0, abs=1e-12)

    def test_unnormalized_rejected(self):
        with pytest.raises(ValueError, match="not normalized"):
            concurrence_pure(np.array([1.0, 0.0, 0.0, 1.0]), 2, 2)

    def test_gme_concurrence_ghz(self):
        assert gme_concurrence_pure(GHZ_VEC, 2) == pytest.approx(
            1.0 / math.sqrt(2.0), abs=1e-12
        )

    def test_gme_concurrence_triproduct(self):
        rng = np.random.default_rng(1)
        v = random_product_vector(rng, (2, 2, 2))
        assert gme_concurrence_pure(v, 2) == pytest.approx(0.0, abs=1e-7)

    def test_gme_concurrence_biseparable(self):
        psi = np.kron(np.array([1.0, 0.0]), BELL_VEC)
        # the square root amplifies the ~1e-16 purity roundoff to ~1e-8
        assert gme_concurrence_pure(psi, 2) == pytest.approx(0.0, abs=1e-7)

    def test_gme_concurrence_wrong_size(self):
        with pytest.raises(ValueError, match="does not live on"):
            gme_concurrence_pure(np.ones(4) / 2.0, 2)


class TestTightness:
    def test_bell_concurrence_bound_is_exact(self):
        res = concurrence_lower_bound(BELL, BipartiteParams(0.0, 0.0, 1))
        assert res.measure is Measure.CONCURRENCE
        assert res.value == pytest.approx(1.0, abs=1e-9)
        assert res.value == pytest.approx(concurrence_pure(BELL_VEC, 2, 2), abs=1e-9)

    def test_bell_cren_bound_is_exact(self):
        res = cren_lower_bound(BELL, BipartiteParams(0.0, 0.0, 1))
        assert res.value == pytest.approx(1.0, abs=1e-9)
        assert res.value == pytest.approx(cren_pure(BELL_VEC, 2, 2), abs=1e-9)

    def test_baseline_bell(self):
        res = realignment_concurrence_baseline(BELL)
        assert res.value == pytest.approx(1.0, abs=1e-9)


class TestMixedBounds:
    def test_separable_bounds_nonpositive(self):
        for seed in range(5):
            rho = random_separable((2, 3), terms=6, seed=seed)
            p = BipartiteParams(1.0, 1.0, 2)
            assert concurrence_lower_bound(rho, p).value <= 1e-9
            assert cren_lower_bound(rho, p).value <= 1e-9
            assert realignment_concurrence_baseline(rho).value <= 1e-9

    def test_clamp_floors_at_zero(self):
        rho = random_separable((2, 2), terms=6, seed=3)
        p = BipartiteParams(1.0, 1.0, 2)
        raw = concurrence_lower_bound(rho, p).value
        clamped = concurrence_lower_bound(rho, p, clamp=True).value
        assert raw < 0.0
        assert clamped == 0.0

    def test_tiles_family_positive_bound(self):
        rho = tiles_family()(0.95)
        assert concurrence_lower_bound(rho, BipartiteParams(1.0, 1.0, 10)).value > 0

    def test_dimension_validation(self):
        rho = DensityMatrix(np.eye(2) / 2, (1, 2))
        with pytest.raises(ValueError, match=">= 2"):
            concurrence_lower_bound(rho, BipartiteParams(0.0, 0.0, 1))
        tri = DensityMatrix(np.eye(12) / 12, (2, 2, 3))
        with pytest.raises(ValueError, match="equal"):
            gme_concurrence_lower_bound(tri, BipartiteParams(0.0, 0.0, 1))

    def test_gme_bound_nonpositive_on_biseparable(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            rho = random_biseparable(rng, d=2, terms=3)
            res = gme_concurrence_lower_bound(rho, BipartiteParams(1.0, 1.0, 2))
            assert res.value <= 1e-9

    def test_bounds_convex_in_the_state(self):
        rng = np.random.default_rng(7)
        p = BipartiteParams(1.1, 0.9, 2)
        for _ in range(10):
            a = random_separable((2, 2), terms=4, seed=int(rng.integers(1000)))
            v = random_vector(rng, 4)
            b = DensityMatrix(np.outer(v, v.conj()), (2, 2))
            k = float(rng.uniform())
            blend = DensityMatrix(k * a.matrix + (1 - k) * b.matrix, (2, 2))
            for fn in (concurrence_lower_bound, cren_lower_bound):
                mixed = fn(blend, p).value
                split = k * fn(a, p).value + (1 - k) * fn(b, p).value
                assert mixed <= split + 1e-8


class TestPureStateInequalities:
    def test_bordered_norm_inequalities(self):
        # trace_norm(M) stays below bound + 2*sum_{i<j} sqrt(mu_i mu_j)
        # and below bound + (d-1), on random pure states
        rng = np.random.default_rng(9)
        for _ in range(40):
            da, db = [(2, 2), (2, 3), (3, 3), (3, 4)][int(rng.integers(4))]
            psi = random_vector(rng, da * db)
            rho = DensityMatrix(np.outer(psi, psi.conj()), (da, db))
            p = BipartiteParams(
                float(rng.uniform(-2, 2)),
                float(rng.uniform(-2, 2)),
                int(rng.integers(1, 5)),
            )
            mu = schmidt_coefficients(psi, da, db)
            roots = np.sqrt(mu)
            cross = (roots.sum() ** 2 - mu.sum()) / 2.0
            norm = trace_norm(bordered_matrix(rho, p))
            bound = separability_bound(p)
            d = min(da, db)
            assert norm <= bound + 2.0 * cross + 1e-8
            assert norm <= bound + (d - 1) + 1e-8

    def test_bounds_below_pure_values(self):
        rng = np.random.default_rng(11)
        for _ in range(40):
            da, db = [(2, 2), (2, 3), (3, 3)][int(rng.integers(3))]
            psi = random_vector(rng, da * db)
            rho = DensityMatrix(np.outer(psi, psi.conj()), (da, db))
            p = BipartiteParams(
                float(rng.uniform(0, 2)),
                float(rng.uniform(0, 2)),
                int(rng.integers(1, 4)),
            )
            assert (
                concurrence_lower_bound(rho, p).value
                <= concurrence_pure(psi, da, db) + 1e-8
            )
            assert cren_lower_bound(rho, p).value <= cren_pure(psi, da, db) + 1e-8

    def test_gme_bound_below_pure_value(self):
        rng = np.random.default_rng(13)
        for _ in range(20):
            psi = random_vector(rng, 8)
            rho = DensityMatrix(np.outer(psi, psi.conj()), (2, 2, 2))
            p = BipartiteParams(
                float(rng.uniform(0, 2)),
                float(rng.uniform(0, 2)),
                int(rng.integers(1, 4)),
            )
            assert (
                gme_concurrence_lower_bound(rho, p).value
                <= gme_concurrence_pure(psi, 2) + 1e-8
            )

    def test_bounds_below_theoretical_maxima(self):
        rng = np.random.default_rng(15)
        p = BipartiteParams(1.0, 1.0, 2)
        for _ in range(20):
            da, db = [(2, 2), (3, 3)][int(rng.integers(2))]
            psi = random_vector(rng, da * db)
            rho = DensityMatrix(np.outer(psi, psi.conj()), (da, db))
            d = min(da, db)
            assert concurrence_lower_bound(rho, p).value <= math.sqrt(
                2.0 * (d - 1) / d
            ) + 1e-9
            assert cren_lower_bound(rho, p).value <= 1.0 + 1e-9


class TestSchmidtDiagonalDecomposition:
    def test_bordered_norm_splits_into_diagonal_block(self):
        # for computational-basis Schmidt states the bordered matrix is
        # permutation-equivalent to a small core plus a diagonal tail of
        # sqrt(mu_i mu_j) entries, so the trace norms add
        rng = np.random.default_rng(17)
        for _ in range(20):
            d = int(rng.integers(2, 4))
            mu = rng.dirichlet(np.ones(d))
            psi = np.zeros(d * d)
            for i in range(d):
                psi[i * d + i] = math.sqrt(mu[i])
            rho = DensityMatrix(np.outer(psi, psi), (d, d))
            p = BipartiteParams(
                float(rng.uniform(-2, 2)),
                float(rng.uniform(-2, 2)),
                int(rng.integers(1, 4)),
            )
            full = trace_norm(bordered_matrix(rho, p))
            core = np.zeros((p.l + d, p.l + d))
            core[: p.l, : p.l] = p.alpha * p.beta
            core[: p.l, p.l :] = p.alpha * mu
            core[p.l :, : p.l] = (p.beta * mu)[:, None]
            core[p.l :, p.l :] = np.diag(mu)
            roots = np.sqrt(mu)
            tail = roots.sum() ** 2 - mu.sum()
            assert full == pytest.approx(trace_norm(core) + tail, abs=1e-9)
