"""
Sp(4) generators as 4x4 matrices, their classification against the
canonical symplectic form, and commutator-algebra bookkeeping.

Phase-space ordering is (q1, ..., qn, p1, ..., pn) throughout.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

EPS_ALG = 1e-12

LABELS = ("L1", "L2", "L3", "H", "K1", "K2", "K3", "B1", "B2", "B3")
FIRST_SET = ("L1", "L2", "L3", "H")
SECOND_SET = ("K1", "K2", "K3", "B1", "B2", "B3")
CARRIERS = ("matrix", "polynomial", "fock-operator")

# numpy array of shape (dim, dim), complex dtype
ComplexMatrix = np.ndarray


class DegenerateBasisError(ValueError):
    """Generators handed to structure_constants are linearly dependent."""


def as_complex_matrix(x) -> ComplexMatrix:
    m = np.asarray(x, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {m.shape}")
    return m


def is_hermitian(m, tol: float = EPS_ALG) -> bool:
    m = as_complex_matrix(m)
    return bool(np.abs(m - m.conj().T).max() < tol)


def is_symmetric(m, tol: float = EPS_ALG) -> bool:
    m = as_complex_matrix(m)
    return bool(np.abs(m - m.T).max() < tol)


def is_antisymmetric(m, tol: float = EPS_ALG) -> bool:
    m = as_complex_matrix(m)
    return bool(np.abs(m + m.T).max() < tol)


def levi_civita(i: int, j: int, k: int) -> int:
    """Totally antisymmetric symbol on 1-based indices {1, 2, 3}."""
    if len({i, j, k}) < 3:
        return 0
    return 1 if (i, j, k) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


def pauli(index: int) -> ComplexMatrix:
    if index == 1:
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if index == 2:
        return np.array([[0, -1j], [1j, 0]], dtype=complex)
    if index == 3:
        return np.array([[1, 0], [0, -1]], dtype=complex)
    raise ValueError(f"Pauli index must be 1, 2 or 3, got {index!r}")


def canonical_j(n_pairs: int) -> ComplexMatrix:
    """The 2n x 2n matrix [[0, I], [-I, 0]]."""
    if n_pairs < 1:
        raise ValueError("n_pairs must be >= 1")
    eye = np.eye(n_pairs)
    zero = np.zeros((n_pairs, n_pairs))
    return np.block([[zero, eye], [-eye, zero]]).astype(complex)


def commutator(a, b) -> ComplexMatrix:
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


@dataclass(frozen=True)
class GeneratorSet:
    """The ten de Sitter generators carried by matrices, polynomials or Fock operators."""

    carrier: str
    elements: Mapping[str, Any]

    def __post_init__(self):
        if self.carrier not in CARRIERS:
            raise ValueError(f"unknown carrier {self.carrier!r}")
        if set(self.elements) != set(LABELS):
            raise ValueError(f"expected exactly the labels {LABELS}, got {sorted(self.elements)}")
        # fix iteration order to LABELS
        object.__setattr__(self, "elements", {k: self.elements[k] for k in LABELS})

    def __getitem__(self, label: str):
        return self.elements[label]

    def __iter__(self):
        return iter(LABELS)

    def __len__(self) -> int:
        return len(LABELS)

    @property
    def labels(self) -> tuple[str, ...]:
        return LABELS

    def values(self) -> list:
        return [self.elements[k] for k in LABELS]

    def items(self):
        return self.elements.items()


def _block(a, b, c, d) -> ComplexMatrix:
    return np.block([[a, b], [c, d]]).astype(complex)


def sp4_generators() -> GeneratorSet:
    """The ten pure-imaginary 4x4 Sp(4) generators built from Pauli blocks.

    B1 carries a factor -i/2; without the i the matrix is real and the
    bracket table fails for every relation involving B1.
    """
    s1, s2, s3 = pauli(1), pauli(2), pauli(3)
    eye = np.eye(2)
    z = np.zeros((2, 2))
    half_i = 0.5j
    gens = {
        "L1": half_i * _block(z, s1, -s1, z),
        "L2": 0.5 * _block(s2, z, z, s2),
        "L3": half_i * _block(z, s3, -s3, z),
        "H": half_i * _block(z, eye, -eye, z),
        "K1": half_i * _block(z, s3, s3, z),
        "K2": half_i * _block(eye, z, z, -eye),
        "K3": -half_i * _block(z, s1, s1, z),
        "B1": -half_i * _block(s3, z, z, -s3),
        "B2": half_i * _block(z, eye, eye, z),
        "B3": half_i * _block(s1, z, z, -s1),
    }
    return GeneratorSet("matrix", gens)


class Classification(enum.Enum):
    FIRST_SET = "first_set"
    SECOND_SET = "second_set"
    NOT_GENERATOR = "not_generator"


def is_symplectic_generator(g, j, tol: float = EPS_ALG) -> Classification:
    """Classify ``g`` as a cyclic (first set) or hyperbolic (second set) generator.

    First set: antisymmetric and commuting with ``j``.  Second set: symmetric
    and anticommuting with ``j``.  In both cases the real Hamiltonian form
    ``-i g`` must also satisfy ``M^T j + j M = 0``.
    """
    g = as_complex_matrix(g)
    j = as_complex_matrix(j)
    if g.shape != j.shape:
        raise ValueError(f"dimension mismatch: {g.shape} vs {j.shape}")
    if abs(np.linalg.det(j)) < tol:
        raise ValueError("j must be invertible")

    m = -1j * g
    infinitesimal = np.abs(m.T @ j + j @ m).max() < tol
    if not infinitesimal:
        return Classification.NOT_GENERATOR
    if is_antisymmetric(g, tol) and np.abs(g @ j - j @ g).max() < tol:
        return Classification.FIRST_SET
    if is_symmetric(g, tol) and np.abs(g @ j + j @ g).max() < tol:
        return Classification.SECOND_SET
    return Classification.NOT_GENERATOR


@dataclass(frozen=True)
class StructureTable:
    """c[i, j, k] with [G_i, G_j] = sum_k c[i, j, k] G_k, plus expansion residuals."""

    labels: tuple[str, ...]
    c: np.ndarray
    residual: np.ndarray

    @property
    def n_gen(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def coefficient(self, a: str, b: str, k: str) -> complex:
        return complex(self.c[self.index(a), self.index(b), self.index(k)])

    def bracket(self, a: str, b: str, tol: float = EPS_ALG) -> dict[str, complex]:
        """Non-negligible expansion coefficients of [a, b]."""
        row = self.c[self.index(a), self.index(b)]
        return {lab: complex(v) for lab, v in zip(self.labels, row) if abs(v) > tol}

    @property
    def max_residual(self) -> float:
        return float(self.residual.max()) if self.residual.size else 0.0

    def is_closed(self, tol: float = EPS_ALG) -> bool:
        return self.max_residual < tol

    def antisymmetry_defect(self) -> float:
        return float(np.abs(self.c + self.c.transpose(1, 0, 2)).max())


def expand_in_basis(basis: Sequence[np.ndarray], targets: Sequence[np.ndarray]):
    """Least-squares coefficients of each target in the span of ``basis``.

    Returns (coefficients of shape (len(targets), len(basis)), Frobenius residuals).
    """
    v = np.stack([np.asarray(b, dtype=complex).ravel() for b in basis], axis=1)
    rank = np.linalg.matrix_rank(v, tol=1e-9 * max(1.0, np.abs(v).max()))
    if rank < v.shape[1]:
        raise DegenerateBasisError(f"basis of {v.shape[1]} elements has rank {rank}")
    t = np.stack([np.asarray(x, dtype=complex).ravel() for x in targets], axis=1)
    coef, *_ = np.linalg.lstsq(v, t, rcond=None)
    resid = np.linalg.norm(t - v @ coef, axis=0)
    return coef.T, resid


def _labelled(gens) -> tuple[tuple[str, ...], list]:
    if isinstance(gens, GeneratorSet):
        return gens.labels, gens.values()
    if isinstance(gens, Mapping):
        return tuple(gens), list(gens.values())
    values = list(gens)
    return tuple(f"G{i + 1}" for i in range(len(values))), values


def _bracket_data(values: list):
    """Vectorised generators and all pairwise brackets for any supported carrier."""
    from . import fock
    from .symplectic_geometry import QuadraticForm, poisson_bracket

    first = values[0]
    n = len(values)
    pairs = list(itertools.product(range(n), repeat=2))
    if isinstance(first, fock.FockOperator):
        # one common safe subspace so every bracket lives in the same vector space
        shift = max(x.max_shift for x in values)
        cutoff = first.space.cutoff - 2 * shift
        if cutoff < 0:
            raise fock.CutoffTooSmallError(
                f"cutoff {first.space.cutoff} too small for operators shifting by {shift}"
            )
        basis = [x.restrict(cutoff) for x in values]
        br = {}
        for i, j in pairs:
            if j >= i:
                br[i, j] = fock.safe_commutator(values[i], values[j]).result.restrict(cutoff)
                br[j, i] = -br[i, j]
        return basis, br
    if isinstance(first, QuadraticForm):
        basis = [x.a for x in values]
        br = {}
        for i, j in pairs:
            if j >= i:
                br[i, j] = poisson_bracket(values[i], values[j]).a
                br[j, i] = -br[i, j]
        return basis, br
    mats = [as_complex_matrix(x) for x in values]
    br = {}
    for i, j in pairs:
        if j >= i:
            br[i, j] = commutator(mats[i], mats[j])
            br[j, i] = -br[i, j]
    return mats, br


def structure_constants(gens) -> StructureTable:
    """Expand every pairwise bracket in the generator basis by least squares.

    ``gens`` may be a GeneratorSet, a label -> element mapping, or a plain
    sequence.  Matrices use the commutator, QuadraticForms the Poisson
    bracket, and FockOperators the commutator restricted to the subspace on
    which truncation does not affect it.  Closure failures show up as large
    entries of ``residual`` rather than as an exception.
    """
    labels, values = _labelled(gens)
    if not values:
        raise ValueError("empty generator collection")
    basis, br = _bracket_data(values)
    n = len(values)
    keys = list(itertools.product(range(n), repeat=2))
    coef, resid = expand_in_basis(basis, [br[k] for k in keys])
    c = coef.reshape(n, n, n)
    return StructureTable(labels, c, resid.reshape(n, n))


def expected_desitter_table(labels: Sequence[str] = LABELS) -> np.ndarray:
    """Structure constants of the de Sitter algebra written out bracket by bracket."""
    idx = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    c = np.zeros((n, n, n), dtype=complex)

    def put(a, b, k, v):
        c[idx[a], idx[b], idx[k]] += v
        c[idx[b], idx[a], idx[k]] -= v

    for i, j, k in itertools.permutations((1, 2, 3)):
        e = levi_civita(i, j, k)
        if i < j:
            put(f"L{i}", f"L{j}", f"L{k}", 1j * e)
            put(f"K{i}", f"K{j}", f"L{k}", -1j * e)
            put(f"B{i}", f"B{j}", f"L{k}", -1j * e)
        put(f"L{i}", f"K{j}", f"K{k}", 1j * e)
        put(f"L{i}", f"B{j}", f"B{k}", 1j * e)
    for i in (1, 2, 3):
        put(f"K{i}", "H", f"B{i}", 1j)
        put(f"B{i}", "H", f"K{i}", -1j)
        put(f"K{i}", f"B{i}", "H", 1j)
    return c


# --- de Sitter index map ---------------------------------------------------

@dataclass(frozen=True)
class DeSitterIndexMap:
    """J_ij for 1 <= i < j <= 5 as signed generator labels, with metric eta."""

    eta: tuple[int, ...] = (1, 1, 1, -1, -1)
    mapping: Mapping[tuple[int, int], tuple[int, str]] = field(default_factory=dict)

    def __post_init__(self):
        pairs = set(itertools.combinations(range(1, 6), 2))
        if set(self.mapping) != pairs:
            raise ValueError("index map must cover every pair i < j of 1..5 exactly once")

    def generator(self, gens, i: int, j: int):
        """J_ij built from ``gens``; J_ji = -J_ij and J_ii = 0."""
        if i == j:
            return 0 * gens[LABELS[0]]
        if i > j:
            return -1 * self.generator(gens, j, i)
        sign, label = self.mapping[i, j]
        return sign * gens[label]


def standard_index_map() -> DeSitterIndexMap:
    mapping = {}
    for i, j in itertools.combinations((1, 2, 3), 2):
        k = 6 - i - j
        mapping[i, j] = (levi_civita(i, j, k), f"L{k}")
    for i in (1, 2, 3):
        mapping[i, 4] = (1, f"K{i}")
        mapping[i, 5] = (1, f"B{i}")
    mapping[4, 5] = (1, "H")
    return DeSitterIndexMap(mapping=mapping)


def desitter_rhs(jmat, eta, i, j, k, l):
    """i (J_ik eta_jl - J_il eta_jk + J_jl eta_ik - J_jk eta_il), indices 1-based."""

    def g(a, b):
        return eta[a - 1] if a == b else 0

    return 1j * (
        jmat(i, k) * g(j, l)
        - jmat(i, l) * g(j, k)
        + jmat(j, l) * g(i, k)
        - jmat(j, k) * g(i, l)
    )


def verify_desitter(gens: GeneratorSet, idx: DeSitterIndexMap | None = None, tol: float | None = None):
    """Check the so(3,2) bracket for every (i<j, k<l) and report residuals.

    Fock-operator carriers are compared on the safe subspace of each
    commutator.  The metric is eta = diag(+1, +1, +1, -1, -1).
    """
    from . import fock
    from .report import VerificationReport

    idx = idx or standard_index_map()
    is_fock = gens.carrier == "fock-operator"
    if tol is None:
        tol = fock.EPS_FOCK if is_fock else EPS_ALG

    table = structure_constants(gens)
    report = VerificationReport("desitter")
    report.add(f"closure ({gens.carrier})", table.max_residual, tol)

    def jmat(a, b):
        return idx.generator(gens, a, b)

    pairs = list(itertools.combinations(range(1, 6), 2))
    for (i, j), (k, l) in itertools.product(pairs, repeat=2):
        rhs = desitter_rhs(jmat, idx.eta, i, j, k, l)
        if is_fock:
            sc = fock.safe_commutator(jmat(i, j), jmat(k, l))
            res = np.linalg.norm(sc.result.restrict(sc.safe_cutoff) - rhs.restrict(sc.safe_cutoff))
        else:
            res = np.linalg.norm(commutator(jmat(i, j), jmat(k, l)) - rhs)
        report.add(f"[J{i}{j},J{k}{l}]", float(res), tol)
    return report


def sp4_matrices_list(gens: GeneratorSet | None = None) -> list[ComplexMatrix]:
    gens = gens or sp4_generators()
    return [gens[k] for k in LABELS]


def span_rank(mats: Iterable, real: bool = True) -> int:
    """Rank of the span of ``mats``; over the reals when ``real`` is set."""
    rows = []
    for m in mats:
        v = np.asarray(m, dtype=complex).ravel()
        rows.append(np.concatenate([v.real, v.imag]) if real else v)
    return int(np.linalg.matrix_rank(np.array(rows), tol=1e-9))
