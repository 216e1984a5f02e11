"""Unit tests for state constructors, validation, families, and JSON I/O."""

import json

import numpy as np
import pytest

from realent import (
    DensityMatrix,
    example1_family,
    ghz3_family,
    ghz3_state,
    ghz_epsilon_state,
    horodecki_2x4,
    horodecki_3x3,
    horodecki_3x3_family,
    load_state,
    mix_with_white_noise,
    random_mixed,
    random_pure,
    random_separable,
    realignment_test,
    save_state,
    tiles_family,
    tiles_upb_state,
    validate,
    w_bar_state,
)

BELL = DensityMatrix(
    np.array(
        [
            [0.5, 0, 0, 0.5],
            [0, 0, 0, 0],
            [0, 0, 0, 0],
            [0.5, 0, 0, 0.5],
        ]
    ),
    (2, 2),
)


def _min_pt_eig(rho: DensityMatrix) -> float:
    pt = rho.partial_transpose(1)
    return float(np.linalg.eigvalsh((pt + pt.conj().T) / 2).min())


class TestDensityMatrix:
    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError, match="does not match dims"):
            DensityMatrix(np.eye(4), (2, 3))

    def test_invalid_dims_rejected(self):
        with pytest.raises(ValueError, match="invalid dims"):
            DensityMatrix(np.eye(4), (2, 0, 2))

    def test_matrix_is_read_only(self):
        rho = DensityMatrix(np.eye(2) / 2, (2,))
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 1.0

    def test_properties(self):
        assert BELL.dim == 4
        assert BELL.n_parts == 2
        assert BELL.purity() == pytest.approx(1.0, abs=1e-12)

    def test_permute_returns_new_state(self):
        swapped = BELL.permute((1, 0))
        assert swapped.dims == (2, 2)
        assert np.allclose(swapped.matrix, BELL.matrix, atol=1e-14)


class TestValidate:
    def test_bell_is_valid(self):
        report = validate(BELL)
        assert report.valid
        assert report.hermiticity_defect <= 1e-12
        assert report.trace_defect <= 1e-12
        assert report.min_eigenvalue >= -1e-12

    def test_non_hermitian_flagged(self):
        m = np.eye(2, dtype=complex) / 2
        m[0, 1] = 0.3
        report = validate(DensityMatrix(m, (2,)))
        assert not report.valid
        assert report.hermiticity_defect == pytest.approx(0.3, abs=1e-12)

    def test_wrong_trace_flagged(self):
        report = validate(DensityMatrix(np.eye(2), (2,)))
        assert not report.valid
        assert report.trace_defect == pytest.approx(1.0, abs=1e-12)

    def test_negative_eigenvalue_flagged(self):
        report = validate(DensityMatrix(np.diag([1.5, -0.5]), (2,)))
        assert not report.valid
        assert report.min_eigenvalue == pytest.approx(-0.5, abs=1e-12)


def test_horodecki_2x4_is_valid_and_ppt():
    rho = horodecki_2x4(0.9)
    assert rho.dims == (2, 4)
    assert validate(rho).valid
    # positive partial transpose, and on its own below the realignment
    # bound; only mixing in the pure component makes it detectable
    assert _min_pt_eig(rho) >= -1e-10
    assert not realignment_test(rho).detected
    assert realignment_test(example1_family(0.9)(0.5)).detected


def test_horodecki_2x4_parameter_range():
    for bad in (0.0, 1.0, -0.5, 1.5):
        with pytest.raises(ValueError, match="outside"):
            horodecki_2x4(bad)


def test_horodecki_3x3_is_valid_and_ppt():
    for x in (0.2, 0.5, 0.8):
        rho = horodecki_3x3(x)
        assert rho.dims == (3, 3)
        assert validate(rho).valid
        assert _min_pt_eig(rho) >= -1e-10


def test_tiles_state_structure():
    rho = tiles_upb_state()
    assert validate(rho).valid
    eigs = np.sort(np.linalg.eigvalsh(rho.matrix))
    # rank 4 with flat spectrum 1/4
    assert np.allclose(eigs[-4:], 0.25, atol=1e-12)
    assert np.allclose(eigs[:-4], 0.0, atol=1e-12)
    assert _min_pt_eig(rho) >= -1e-10
    assert realignment_test(rho).detected


def test_tiles_projector_vectors_are_orthonormal():
    # the five product vectors annihilated by the state form an orthonormal set
    rho = tiles_upb_state()
    complement = np.eye(9) - 4.0 * rho.matrix
    # complement is the projector onto the 5-dimensional product-vector span
    assert np.allclose(complement @ complement, complement, atol=1e-12)
    assert np.trace(complement).real == pytest.approx(5.0, abs=1e-12)


def test_w_bar_state_is_pure_tripartite():
    rho = w_bar_state()
    assert rho.dims == (3, 3, 3)
    assert validate(rho).valid
    assert rho.purity() == pytest.approx(1.0, abs=1e-12)


def test_ghz_epsilon_reduces_to_ghz():
    assert np.allclose(
        ghz_epsilon_state(0.0).matrix, ghz3_state().matrix, atol=1e-14
    )


def test_ghz_epsilon_normalized_for_large_eps():
    rho = ghz_epsilon_state(10.0)
    assert validate(rho).valid
    assert rho.purity() == pytest.approx(1.0, abs=1e-12)


def test_mix_with_white_noise_endpoints():
    mixed = mix_with_white_noise(BELL, 0.0)
    assert np.allclose(mixed.matrix, np.eye(4) / 4, atol=1e-14)
    assert np.allclose(mix_with_white_noise(BELL, 1.0).matrix, BELL.matrix)
    with pytest.raises(ValueError, match="outside"):
        mix_with_white_noise(BELL, 1.2)


def test_example1_family_endpoints():
    fam = example1_family(0.9)
    assert fam.free_parameter == "x"
    assert np.allclose(fam(0.0).matrix, horodecki_2x4(0.9).matrix, atol=1e-14)
    top = fam(1.0)
    assert top.purity() == pytest.approx(1.0, abs=1e-12)
    # |xi> occupies flat indices 0 and 5 with weight 1/2 each
    assert top.matrix[0, 0] == pytest.approx(0.5, abs=1e-12)
    assert top.matrix[5, 5] == pytest.approx(0.5, abs=1e-12)
    assert top.matrix[0, 5] == pytest.approx(0.5, abs=1e-12)


def test_family_interval_enforced():
    fam = tiles_family()
    with pytest.raises(ValueError, match="outside"):
        fam(1.5)


def test_horodecki_3x3_family_is_noise_mixture():
    fam = horodecki_3x3_family(0.4)
    assert np.allclose(fam(0.0).matrix, np.eye(9) / 9, atol=1e-14)
    assert np.allclose(fam(1.0).matrix, horodecki_3x3(0.4).matrix, atol=1e-14)


def test_ghz3_family_parameter_is_noise_weight():
    fam = ghz3_family()
    assert fam(0.0).purity() == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(fam(1.0).matrix, np.eye(8) / 8, atol=1e-14)


def test_random_pure_is_pure_and_seeded():
    a = random_pure((2, 3), seed=5)
    b = random_pure((2, 3), seed=5)
    assert a.purity() == pytest.approx(1.0, abs=1e-12)
    assert np.array_equal(a.matrix, b.matrix)
    assert validate(a).valid


def test_random_mixed_is_valid():
    rho = random_mixed((2, 2), rank=3, seed=9)
    assert validate(rho).valid
    assert rho.purity() < 1.0


def test_random_separable_is_ppt_and_realignment_negative():
    for seed in range(5):
        rho = random_separable((2, 2), terms=6, seed=seed)
        assert validate(rho).valid
        assert _min_pt_eig(rho) >= -1e-10
        assert not realignment_test(rho).detected


class TestStateFiles:
    def test_round_trip_is_exact(self, tmp_path):
        rho = random_mixed((2, 3), rank=4, seed=21)
        path = tmp_path / "state.json"
        save_state(rho, str(path))
        loaded = load_state(str(path))
        assert loaded.dims == rho.dims
        assert np.array_equal(loaded.matrix, rho.matrix)

    def test_missing_fields_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"dims": [2, 2]}))
        with pytest.raises(ValueError, match="'dims' and 'matrix'"):
            load_state(str(path))

    def test_bad_dims_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"dims": [2, 0], "matrix": []}))
        with pytest.raises(ValueError, match="positive integers"):
            load_state(str(path))

    def test_row_count_mismatch_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"dims": [2], "matrix": [[[1.0, 0.0]]]}))
        with pytest.raises(ValueError, match="must have 2 rows"):
            load_state(str(path))

    def test_bad_entry_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        doc = {"dims": [2], "matrix": [[[1.0, 0.0], [0.0]], [[0.0, 0.0], [0.0, 0.0]]]}
        path.write_text(json.dumps(doc))
        with pytest.raises(ValueError, match=r"entry \(0, 1\)"):
            load_state(str(path))

    def test_non_finite_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        doc = {
            "dims": [2],
            "matrix": [[[1e999, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
        }
        path.write_text(json.dumps(doc))
        with pytest.raises(ValueError, match="non-finite"):
            load_state(str(path))
