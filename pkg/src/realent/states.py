"""Density matrices, validation, and the state constructors used by the
bundled reproduction studies.

Provides:

* :class:`DensityMatrix`, a matrix plus ordered subsystem dimensions, and
  :func:`validate` for its physicality invariants,
* :class:`StateFamily`, a one-parameter family of states with a named free
  parameter on a closed interval,
* constructors for the bound entangled 2x4 and 3x3 states, the tiles
  unextendible-product-basis state, a 3x3x3 W-type state, GHZ-type qubit
  states, and white-noise mixtures of all of them,
* seeded random pure / mixed / fully separable states for property tests,
* the JSON state-file format used by the command line interface.

Basis ordering is lexicographic in subsystem indices with the leftmost
factor most significant, so |i, j> maps to flat index i * d_B + j.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from . import linalg

__all__ = [
    "DensityMatrix",
    "StateFamily",
    "ValidationReport",
    "validate",
    "mix_with_white_noise",
    "horodecki_2x4",
    "example1_family",
    "horodecki_3x3",
    "horodecki_3x3_family",
    "tiles_upb_state",
    "tiles_family",
    "w_bar_state",
    "w_bar_family",
    "ghz_epsilon_state",
    "ghz_epsilon_family",
    "ghz3_state",
    "ghz3_family",
    "random_pure",
    "random_mixed",
    "random_separable",
    "save_state",
    "load_state",
]

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-8


@dataclass(frozen=True)
class DensityMatrix:
    """A D x D matrix together with the ordered subsystem dimensions.

    Construction checks shape consistency only; physical invariants
    (Hermiticity, unit trace, positivity) are checked by :func:`validate`
    so that diagnostic code can still hold unphysical matrices.
    """

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        mat = np.ascontiguousarray(np.asarray(self.matrix, dtype=complex))
        dims = tuple(int(d) for d in self.dims)
        if any(d < 1 for d in dims):
            raise ValueError(f"DensityMatrix: invalid dims {dims}")
        side = int(np.prod(dims))
        if mat.shape != (side, side):
            raise ValueError(
                f"DensityMatrix: matrix shape {mat.shape} does not match dims "
                f"{dims} (expected {side}x{side})"
            )
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "dims", dims)

    @property
    def n_parts(self) -> int:
        return len(self.dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def partial_trace(self, traced: Sequence[int]) -> np.ndarray:
        return linalg.partial_trace(self.matrix, self.dims, traced)

    def partial_transpose(self, subsystem: int) -> np.ndarray:
        return linalg.partial_transpose(self.matrix, self.dims, subsystem)

    def permute(self, perm: Sequence[int]) -> "DensityMatrix":
        mat, dims = linalg.permute_systems(self.matrix, self.dims, perm)
        return DensityMatrix(mat, dims)


@dataclass(frozen=True)
class ValidationReport:
    hermiticity_defect: float
    trace_defect: float
    min_eigenvalue: float

    @property
    def valid(self) -> bool:
        return (
            self.hermiticity_defect <= HERMITICITY_TOL
            and self.trace_defect <= TRACE_TOL
            and self.min_eigenvalue >= -PSD_TOL
        )


def validate(rho: DensityMatrix) -> ValidationReport:
    """Measure the three physicality defects of a candidate density matrix.

    Returns the entrywise Hermiticity defect, the deviation of the trace
    from 1, and the smallest eigenvalue of the Hermitian part.  The state
    is considered valid when all three are within tolerance
    (1e-10, 1e-10, -1e-8).
    """
    m = rho.matrix
    herm = float(np.abs(m - m.conj().T).max())
    tracedef = float(abs(np.trace(m) - 1.0))
    mineig = float(np.linalg.eigvalsh((m + m.conj().T) / 2).min())
    return ValidationReport(herm, tracedef, mineig)


@dataclass(frozen=True)
class StateFamily:
    """One-parameter family of density matrices.

    `generator` maps the free parameter to a state; `interval` is the
    closed range of physically meaningful parameter values.
    """

    name: str
    free_parameter: str
    interval: tuple[float, float]
    generator: Callable[[float], DensityMatrix] = field(repr=False)
    fixed_params: Mapping[str, float] = field(default_factory=dict)

    def __call__(self, x: float) -> DensityMatrix:
        lo, hi = self.interval
        if not lo <= x <= hi:
            raise ValueError(
                f"{self.name}: parameter {self.free_parameter}={x!r} outside "
                f"[{lo}, {hi}]"
            )
        return self.generator(x)


def mix_with_white_noise(rho: DensityMatrix, p: float) -> DensityMatrix:
    """Return (1-p)/D * I + p * rho, the white-noise mixture at visibility p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mix_with_white_noise: p={p!r} outside [0, 1]")
    d = rho.dim
    return DensityMatrix((1.0 - p) / d * np.eye(d) + p * rho.matrix, rho.dims)


def horodecki_2x4(d: float) -> DensityMatrix:
    """Bound entangled 2x4 state with parameter d in (0, 1).

    The 8x8 matrix has diagonal weight d on the first four levels, a pair
    of (1+d)/2 entries, sqrt(1-d^2)/2 couplings, and normalization
    1/(1+7d).  It is PPT for every d yet entangled (detected by
    realignment-type criteria).
    """
    if not 0.0 < d < 1.0:
        raise ValueError(f"horodecki_2x4: d={d!r} outside (0, 1)")
    s = math.sqrt(1.0 - d * d) / 2.0
    h = (1.0 + d) / 2.0
    m = np.zeros((8, 8))
    for i, j in [(0, 0), (0, 5), (1, 1), (1, 6), (2, 2), (2, 7), (3, 3),
                 (5, 0), (5, 5), (6, 1), (6, 6), (7, 2)]:
        m[i, j] = d
    m[4, 4] = m[7, 7] = h
    m[4, 7] = m[7, 4] = s
    return DensityMatrix(m / (1.0 + 7.0 * d), (2, 4))


def example1_family(d: float = 0.9) -> StateFamily:
    """Family x |xi><xi| + (1-x) rho_d over x in [0, 1].

    |xi> = (|0,0> + |1,1>)/sqrt(2) lives on levels 0 and 1 of the 4-level
    factor, i.e. flat indices 0 and 5, matching the nonzero pattern of the
    2x4 bound entangled state rho_d.
    """
    base = horodecki_2x4(d)
    xi = np.zeros(8)
    xi[0] = xi[5] = 1.0 / math.sqrt(2.0)
    proj = np.outer(xi, xi)

    def gen(x: float) -> DensityMatrix:
        return DensityMatrix(x * proj + (1.0 - x) * base.matrix, (2, 4))

    return StateFamily(
        name="example1",
        free_parameter="x",
        interval=(0.0, 1.0),
        generator=gen,
        fixed_params={"d": d},
    )


def horodecki_3x3(x: float) -> DensityMatrix:
    """Bound entangled 3x3 state with parameter x in (0, 1).

    Canonical form: diagonal x on levels 0..5 and 7, (1+x)/2 on levels 6
    and 8, x couplings between |0,0>, |1,1>, |2,2>, a sqrt(1-x^2)/2
    coupling between levels 6 and 8, all normalized by 1/(1+8x).
    """
    if not 0.0 < x < 1.0:
        raise ValueError(f"horodecki_3x3: x={x!r} outside (0, 1)")
    m = np.zeros((9, 9))
    for i in (0, 1, 2, 3, 4, 5, 7):
        m[i, i] = x
    m[6, 6] = m[8, 8] = (1.0 + x) / 2.0
    m[6, 8] = m[8, 6] = math.sqrt(1.0 - x * x) / 2.0
    for i, j in [(0, 4), (0, 8), (4, 8)]:
        m[i, j] = m[j, i] = x
    return DensityMatrix(m / (1.0 + 8.0 * x), (3, 3))


def horodecki_3x3_family(x: float) -> StateFamily:
    """White-noise mixture family p -> (1-p)/9 I + p rho_x over p in [0, 1]."""
    base = horodecki_3x3(x)
    return StateFamily(
        name="horodecki_3x3",
        free_parameter="p",
        interval=(0.0, 1.0),
        generator=lambda p: mix_with_white_noise(base, p),
        fixed_params={"x": x},
    )


def tiles_upb_state() -> DensityMatrix:
    """The 3x3 PPT entangled state complementary to the tiles product basis.

    rho = (I_9 - sum of the five tile projectors)/4; rank 4, each nonzero
    eigenvalue 1/4.
    """
    e = np.eye(9)
    r2 = math.sqrt(2.0)
    phis = [
        (e[0] - e[1]) / r2,      # |0>(|0>-|1>)
        (e[2] - e[5]) / r2,      # (|0>-|1>)|2>
        (e[7] - e[8]) / r2,      # |2>(|1>-|2>)
        (e[3] - e[6]) / r2,      # (|1>-|2>)|0>
        np.ones(9) / 3.0,
    ]
    proj = sum(np.outer(v, v) for v in phis)
    return DensityMatrix((np.eye(9) - proj) / 4.0, (3, 3))


def tiles_family() -> StateFamily:
    """White-noise mixture family t -> (1-t)/9 I + t rho_tiles over t in [0, 1]."""
    base = tiles_upb_state()
    return StateFamily(
        name="tiles",
        free_parameter="t",
        interval=(0.0, 1.0),
        generator=lambda t: mix_with_white_noise(base, t),
    )


def w_bar_state() -> DensityMatrix:
    """Projector onto (|001>+|010>+|100>+|112>+|121>+|211>)/sqrt(6) in 3x3x3."""
    psi = np.zeros(27)
    for idx in (1, 3, 9, 14, 16, 22):
        psi[idx] = 1.0 / math.sqrt(6.0)
    return DensityMatrix(np.outer(psi, psi), (3, 3, 3))


def w_bar_family() -> StateFamily:
    """White-noise mixture family q -> (1-q)/27 I + q rho_W over q in [0, 1]."""
    base = w_bar_state()
    return StateFamily(
        name="w_bar",
        free_parameter="q",
        interval=(0.0, 1.0),
        generator=lambda q: mix_with_white_noise(base, q),
    )


def ghz_epsilon_state(eps: float) -> DensityMatrix:
    """Projector onto (|000> + eps |110> + |111>)/x with x = sqrt(2 + eps^2).

    The normalization follows from unit norm.  eps = 0 reduces to the
    standard GHZ state.
    """
    x = math.sqrt(2.0 + eps * eps)
    psi = np.zeros(8)
    psi[0] = 1.0 / x
    psi[6] = eps / x
    psi[7] = 1.0 / x
    return DensityMatrix(np.outer(psi, psi), (2, 2, 2))


def ghz_epsilon_family(eps: float) -> StateFamily:
    """White-noise mixture family p -> (1-p)/8 I + p rho_GHZ(eps) over p in [0, 1]."""
    base = ghz_epsilon_state(eps)
    return StateFamily(
        name="ghz_epsilon",
        free_parameter="p",
        interval=(0.0, 1.0),
        generator=lambda p: mix_with_white_noise(base, p),
        fixed_params={"eps": eps},
    )


def ghz3_state() -> DensityMatrix:
    """Projector onto the three-qubit GHZ state (|000> + |111>)/sqrt(2)."""
    psi = np.zeros(8)
    psi[0] = psi[7] = 1.0 / math.sqrt(2.0)
    return DensityMatrix(np.outer(psi, psi), (2, 2, 2))


def ghz3_family() -> StateFamily:
    """Family x -> x/8 I + (1-x) GHZ over x in [0, 1].

    Note the inverted role of the parameter: here x is the noise weight,
    so the state is pure GHZ at x = 0.
    """
    base = ghz3_state()
    return StateFamily(
        name="ghz3",
        free_parameter="x",
        interval=(0.0, 1.0),
        generator=lambda x: mix_with_white_noise(base, 1.0 - x),
    )


def _rng(seed: int | None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_pure(dims: Sequence[int], seed: int | None = None) -> DensityMatrix:
    """Haar-ish random pure state: normalized complex Gaussian vector."""
    rng = _rng(seed)
    d = int(np.prod(tuple(dims)))
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    v /= np.linalg.norm(v)
    return DensityMatrix(np.outer(v, v.conj()), tuple(dims))


def random_mixed(
    dims: Sequence[int], rank: int, seed: int | None = None
) -> DensityMatrix:
    """Random mixed state from a D x rank Ginibre factor G: G G^H / tr."""
    rng = _rng(seed)
    d = int(np.prod(tuple(dims)))
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    m = g @ g.conj().T
    return DensityMatrix(m / np.trace(m).real, tuple(dims))


def random_separable(
    dims: Sequence[int], terms: int, seed: int | None = None
) -> DensityMatrix:
    """Random fully separable state: Dirichlet-weighted mixture of `terms`
    random pure product states.  Separability holds by construction."""
    rng = _rng(seed)
    dims = tuple(int(d) for d in dims)
    weights = rng.dirichlet(np.ones(terms))
    total = np.zeros((int(np.prod(dims)), int(np.prod(dims))), dtype=complex)
    for w in weights:
        v = np.ones(1, dtype=complex)
        for d in dims:
            f = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            f /= np.linalg.norm(f)
            v = np.kron(v, f)
        total += w * np.outer(v, v.conj())
    return DensityMatrix(total, dims)


def save_state(rho: DensityMatrix, path: str) -> None:
    """Write a state to the JSON file format (fields `dims` and `matrix`).

    Matrix entries are [re, im] pairs serialized at full round-trip
    precision.
    """
    doc = {
        "dims": list(rho.dims),
        "matrix": [
            [[float(z.real), float(z.imag)] for z in row] for row in rho.matrix
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_state(path: str) -> DensityMatrix:
    """Read a state from the JSON file format, rejecting malformed documents."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or "dims" not in doc or "matrix" not in doc:
        raise ValueError(f"{path}: expected a JSON object with 'dims' and 'matrix'")
    dims = doc["dims"]
    if (
        not isinstance(dims, list)
        or not dims
        or not all(isinstance(d, int) and d >= 1 for d in dims)
    ):
        raise ValueError(f"{path}: field 'dims' must be a list of positive integers")
    side = int(np.prod(dims))
    rows = doc["matrix"]
    if not isinstance(rows, list) or len(rows) != side:
        raise ValueError(
            f"{path}: field 'matrix' must have {side} rows to match dims {dims}, "
            f"got {len(rows) if isinstance(rows, list) else type(rows).__name__}"
        )
    out = np.empty((side, side), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != side:
            raise ValueError(f"{path}: matrix row {i} does not have {side} entries")
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(v, (int, float)) for v in entry)
            ):
                raise ValueError(
                    f"{path}: matrix entry ({i}, {j}) is not an [re, im] pair"
                )
            out[i, j] = complex(entry[0], entry[1])
    if not np.all(np.isfinite(out.view(float))):
        raise ValueError(f"{path}: matrix contains non-finite entries")
    return DensityMatrix(out, tuple(dims))
