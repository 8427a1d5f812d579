"""
Generalised Jordan maps and the Sp(2n) family.

Bilinear map      M -> 1/2 a^dag M a
Plus  (W-type)    M -> 1/4 (a^dag M a^dag + a M a)
Minus (Z-type)    M -> i/4 (a^dag M a^dag - a M a)

Note on normalisation: [a^dag A a, a^dag B a] = a^dag [A, B] a, so the
structure-preserving map is M -> a^dag M a.  The 1/2 in the bilinear map
halves every structure constant; jordan_algebra_check therefore compares the
matrix table against the images a^dag M a = 2 * jordan_bilinear(M).
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from . import fock
from .fock import LOWER, RAISE, FockOperator, FockSpace
from .lie_matrix import (
    EPS_ALG,
    GeneratorSet,
    as_complex_matrix,
    pauli,
    structure_constants,
)
from .quantization import quantize
from .report import VerificationReport
from .symplectic_geometry import LinearField, form_from_field


def _square_for(m, space: FockSpace) -> np.ndarray:
    m = as_complex_matrix(m)
    if m.shape[0] != space.modes:
        raise ValueError(f"{m.shape[0]}x{m.shape[0]} matrix needs {m.shape[0]} modes, space has {space.modes}")
    return m


def _sandwich(space: FockSpace, m: np.ndarray, left: str, right: str) -> FockOperator:
    """sum_ij c_i M_ij c_j with c = a or a^dag on each side."""
    k = m.shape[0]
    terms = [
        (m[i, j], [(i + 1, left), (j + 1, right)])
        for i, j in itertools.product(range(k), repeat=2)
        if m[i, j] != 0
    ]
    return fock.linear_combination(space, terms)


def jordan_bilinear(m, space: FockSpace) -> FockOperator:
    m = _square_for(m, space)
    return 0.5 * _sandwich(space, m, RAISE, LOWER)


def jordan_plus(m, space: FockSpace) -> FockOperator:
    m = _square_for(m, space)
    return 0.25 * (_sandwich(space, m, RAISE, RAISE) + _sandwich(space, m, LOWER, LOWER))


def jordan_minus(m, space: FockSpace) -> FockOperator:
    m = _square_for(m, space)
    return 0.25j * (_sandwich(space, m, RAISE, RAISE) - _sandwich(space, m, LOWER, LOWER))


def jordan_symmetrized(m, space: FockSpace) -> FockOperator:
    """1/4 sum_ij M_ij (a_i^dag a_j + a_j a_i^dag); for M = I this is the oscillator H."""
    m = _square_for(m, space)
    return 0.25 * (_sandwich(space, m, RAISE, LOWER) + _sandwich(space, m.T, LOWER, RAISE))


def jordan_algebra_check(
    ms: Sequence, space: FockSpace, labels: Sequence[str] | None = None, tol: float = fock.EPS_FOCK
) -> VerificationReport:
    """Compare the matrix structure constants with those of the images a^dag M a."""
    ms = [as_complex_matrix(m) for m in ms]
    labels = tuple(labels) if labels is not None else tuple(f"M{i + 1}" for i in range(len(ms)))
    matrix_table = structure_constants(dict(zip(labels, ms)))
    images = {lab: 2 * jordan_bilinear(m, space) for lab, m in zip(labels, ms)}
    image_table = structure_constants(images)

    report = VerificationReport(f"jordan-algebra ({len(ms)} generators, {space.modes} modes)")
    report.add("matrix closure", matrix_table.max_residual, EPS_ALG)
    report.add("image closure (safe subspace)", image_table.max_residual, tol)
    for i, j in itertools.combinations(range(len(ms)), 2):
        diff = np.abs(matrix_table.c[i, j] - image_table.c[i, j]).max()
        report.add(f"omega[{labels[i]},{labels[j]}]", float(diff), tol)
    return report


def assemble_dirac_via_jordan(space: FockSpace) -> GeneratorSet:
    """All ten two-oscillator generators from Pauli and identity matrices."""
    if space.modes != 2:
        raise ValueError(f"needs 2 modes, got {space.modes}")
    s1, s2, s3 = pauli(1), pauli(2), pauli(3)
    eye = np.eye(2)
    ops = {
        "L1": jordan_bilinear(s1, space),
        "L2": jordan_bilinear(s2, space),
        "L3": jordan_bilinear(s3, space),
        "H": jordan_symmetrized(eye, space),
        "K1": -jordan_plus(s3, space),
        "K2": jordan_minus(eye, space),
        "K3": jordan_plus(s1, space),
        "B1": -jordan_minus(s3, space),
        "B2": -jordan_plus(eye, space),
        "B3": jordan_minus(s1, space),
    }
    return GeneratorSet("fock-operator", ops)


# --- Sp(2n) ----------------------------------------------------------------

def generator_count(n: int) -> int:
    return 2 * n * n + n


def _unit(n: int, a: int, b: int) -> np.ndarray:
    e = np.zeros((n, n))
    e[a, b] = 1.0
    return e


def _symmetric_units(n: int):
    for a in range(n):
        for b in range(a, n):
            s = _unit(n, a, b) + _unit(n, b, a) if a != b else _unit(n, a, a)
            yield (a + 1, b + 1), s


def sp2n_basis_labelled(n: int) -> list[tuple[str, np.ndarray]]:
    """Labelled basis of 2n^2 + n pure-imaginary Sp(2n) generators.

    Ordering (a <= b, 1-based, lexicographic within each family):

    * ``R_ab`` (a < b): i/2 [[S, 0], [0, S]] with S = E_ba - E_ab     (first set)
    * ``C_ab``        : i/2 [[0, S], [-S, 0]] with S symmetric unit   (first set)
    * ``D_ab``        : i/2 [[S, 0], [0, -S]] with S symmetric unit   (second set)
    * ``E_ab``        : i/2 [[0, S], [S, 0]]  with S symmetric unit   (second set)

    For n = 2, R_12 is the generator L2 exactly.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    z = np.zeros((n, n))
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            s = _unit(n, b, a) - _unit(n, a, b)
            out.append((f"R_{a + 1}{b + 1}", 0.5j * np.block([[s, z], [z, s]])))
    for (a, b), s in _symmetric_units(n):
        out.append((f"C_{a}{b}", 0.5j * np.block([[z, s], [-s, z]])))
    for (a, b), s in _symmetric_units(n):
        out.append((f"D_{a}{b}", 0.5j * np.block([[s, z], [z, -s]])))
    for (a, b), s in _symmetric_units(n):
        out.append((f"E_{a}{b}", 0.5j * np.block([[z, s], [s, z]])))
    return [(lab, m.astype(complex)) for lab, m in out]


def sp2n_basis(n: int) -> list[np.ndarray]:
    return [m for _, m in sp2n_basis_labelled(n)]


def sp2n_labels(n: int) -> list[str]:
    return [lab for lab, _ in sp2n_basis_labelled(n)]


def minimal_representation(n: int, space: FockSpace) -> list[FockOperator]:
    """Quantize the Sp(2n) basis on n modes through the field -> form -> operator pipeline."""
    if space.modes != n:
        raise ValueError(f"Sp({2 * n}) needs {n} modes, space has {space.modes}")
    return [quantize(form_from_field(LinearField(m)), space) for m in sp2n_basis(n)]


def operator_rank(ops: Sequence[FockOperator], max_total: int | None = None) -> int:
    """Complex rank of the span of ``ops`` (restricted to a total-occupation block if given)."""
    if max_total is None:
        rows = [op.toarray().ravel() for op in ops]
    else:
        rows = [op.restrict(max_total).ravel() for op in ops]
    return int(np.linalg.matrix_rank(np.array(rows), tol=1e-9))


def align_basis(ops: Sequence[FockOperator], reference: Sequence[FockOperator]):
    """Least-squares R with ops[k] ~ sum_l R[k, l] reference[l].

    Returns (R, residual) where residual is the Frobenius norm of the misfit.
    """
    ref = np.stack([r.toarray().ravel() for r in reference], axis=1)
    tgt = np.stack([o.toarray().ravel() for o in ops], axis=1)
    coef, *_ = np.linalg.lstsq(ref, tgt, rcond=None)
    resid = float(np.linalg.norm(tgt - ref @ coef))
    return coef.T, resid


def quadratic_monomials(space: FockSpace) -> list[FockOperator]:
    """All ordered products of two ladder operators (4 n^2 of them)."""
    n = space.modes
    kinds = (LOWER, RAISE)
    ops = []
    for (i, k1), (j, k2) in itertools.product(itertools.product(range(1, n + 1), kinds), repeat=2):
        ops.append(fock.ladder_product(space, [(i, k1), (j, k2)]))
    return ops


def independent_quadratic_count(space: FockSpace) -> int:
    """Dimension of the span of quadratic ladder monomials modulo the identity."""
    ops = quadratic_monomials(space)
    ident = FockOperator.identity(space)
    return operator_rank(ops + [ident]) - 1

