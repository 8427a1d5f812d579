"""
From quadratic polynomials to hermitian oscillator operators.

The map multiplies a polynomial by -i, symmetrises each monomial
(z_k z_l -> 1/2 (z_k z_l + z_l z_k)) and substitutes q = (a + a^dag)/sqrt2,
p = -i (a - a^dag)/sqrt2.  Applied to the ten Sp(4) generator matrices it
reproduces Dirac's two-oscillator representation, which is also written out
by hand below as an independent reference.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import fock
from .fock import LOWER, RAISE, FockOperator, FockSpace
from .lie_matrix import EPS_ALG, LABELS, GeneratorSet, commutator, sp4_generators
from .report import VerificationReport
from .symplectic_geometry import LinearField, QuadraticForm, form_from_field


class ConventionViolationError(ValueError):
    """Quantized operator is not hermitian (input generator was not pure imaginary)."""


@dataclass(frozen=True)
class QuantizationConvention:
    prefactor: complex = -1j
    ordering: str = "weyl"

    def __post_init__(self):
        if self.ordering != "weyl":
            raise ValueError(f"unsupported ordering {self.ordering!r}")


GENERATOR_CONVENTION = QuantizationConvention()
# real Hamiltonians (e.g. 1/2 (q^2 + p^2)) are quantized without the -i
HAMILTONIAN_CONVENTION = QuantizationConvention(prefactor=1.0)


def _coordinates(n_pairs: int, modes: Sequence[int]) -> list[tuple[int, str]]:
    return [(m, "q") for m in modes] + [(m, "p") for m in modes]


def quantize(
    f: QuadraticForm,
    space: FockSpace,
    convention: QuantizationConvention = GENERATOR_CONVENTION,
    modes: Sequence[int] | None = None,
) -> FockOperator:
    """Weyl-ordered operator for ``convention.prefactor * f``.

    ``modes`` places phase-space pair k on Fock mode ``modes[k]``; by default
    pair k goes to mode k + 1 and the space must have exactly ``f.n_pairs`` modes.
    """
    if modes is None:
        if space.modes != f.n_pairs:
            raise ValueError(f"form has {f.n_pairs} pairs but space has {space.modes} modes")
        modes = range(1, f.n_pairs + 1)
    modes = list(modes)
    if len(modes) != f.n_pairs:
        raise ValueError(f"need {f.n_pairs} target modes, got {len(modes)}")
    for m in modes:
        space.check_mode(m)

    a = convention.prefactor * f.a
    coords = _coordinates(f.n_pairs, modes)
    d = len(coords)
    out = FockOperator.zero(space)
    for k in range(d):
        for l in range(k, d):
            # 1/2 z^T a z = sum_k 1/2 a_kk z_k^2 + sum_{k<l} a_kl z_k z_l
            c = 0.5 * a[k, k] if k == l else a[k, l]
            if c == 0:
                continue
            sym = 0.5 * (
                fock.quadrature_product(space, coords[k], coords[l])
                + fock.quadrature_product(space, coords[l], coords[k])
            )
            out = out + c * sym
    if not out.is_hermitian():
        raise ConventionViolationError("quantized operator is not hermitian")
    return out


def _op(space: FockSpace):
    def a(i):
        return (i, LOWER)

    def ad(i):
        return (i, RAISE)

    def term(*factors):
        return fock.ladder_product(space, factors)

    return a, ad, term


def dirac_representation(space: FockSpace) -> GeneratorSet:
    """The ten two-oscillator operators, written directly in ladder operators."""
    if space.modes != 2:
        raise ValueError(f"Dirac's representation needs 2 modes, got {space.modes}")
    a, ad, t = _op(space)
    ops = {
        "L1": 0.5 * (t(ad(1), a(2)) + t(ad(2), a(1))),
        "L2": 0.5j * (t(ad(2), a(1)) - t(ad(1), a(2))),
        "L3": 0.5 * (t(ad(1), a(1)) - t(ad(2), a(2))),
        "H": 0.5 * (t(ad(1), a(1)) + t(a(2), ad(2))),
        "K1": -0.25 * (t(ad(1), ad(1)) + t(a(1), a(1)) - t(ad(2), ad(2)) - t(a(2), a(2))),
        "K2": 0.25j * (t(ad(1), ad(1)) + t(ad(2), ad(2)) - t(a(1), a(1)) - t(a(2), a(2))),
        "K3": 0.5 * (t(ad(1), ad(2)) + t(a(1), a(2))),
        "B1": -0.25j * (t(ad(1), ad(1)) - t(a(1), a(1)) - t(ad(2), ad(2)) + t(a(2), a(2))),
        "B2": -0.25 * (t(ad(1), ad(1)) + t(ad(2), ad(2)) + t(a(1), a(1)) + t(a(2), a(2))),
        "B3": 0.5j * (t(ad(1), ad(2)) - t(a(1), a(2))),
    }
    return GeneratorSet("fock-operator", ops)


def pipeline_representation(space: FockSpace, gens: GeneratorSet | None = None) -> GeneratorSet:
    """Generator matrix -> Hamiltonian field -> quadratic form -> operator, for all ten."""
    if space.modes != 2:
        raise ValueError(f"the Sp(4) pipeline needs 2 modes, got {space.modes}")
    gens = gens or sp4_generators()
    return GeneratorSet(
        "fock-operator",
        {k: quantize(form_from_field(LinearField(gens[k])), space) for k in LABELS},
    )


def representation_deviation(x: GeneratorSet, y: GeneratorSet) -> dict[str, float]:
    """Largest entrywise deviation per label over the full truncated space."""
    return {k: fock.distance(x[k], y[k]) for k in LABELS}


# --- SU(1,1) ---------------------------------------------------------------

def su11_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    s1 = 0.5j * np.array([[1, 0], [0, -1]], dtype=complex)
    s2 = 0.5j * np.array([[0, 1], [-1, 0]], dtype=complex)
    s3 = 0.5j * np.array([[0, 1], [1, 0]], dtype=complex)
    return s1, s2, s3


SU11_RELATIONS = (
    # (a, b, coefficient, c): [S_a, S_b] = coefficient * S_c, 0-based
    (0, 1, 1j, 2),
    (1, 2, 1j, 0),
    (2, 0, -1j, 1),
)


def su11_operators(space: FockSpace, mode: int) -> tuple[FockOperator, FockOperator, FockOperator]:
    """The S-matrices quantized on a single mode via form_from_field + quantize."""
    space.check_mode(mode)
    return tuple(
        quantize(form_from_field(LinearField(s)), space, modes=[mode]) for s in su11_matrices()
    )


def su11_matrix_check(tol: float = EPS_ALG) -> VerificationReport:
    s = su11_matrices()
    report = VerificationReport("su11-matrices")
    for a, b, coef, c in SU11_RELATIONS:
        res = np.linalg.norm(commutator(s[a], s[b]) - coef * s[c])
        report.add(f"[S{a + 1},S{b + 1}]", float(res), tol)
    return report


def su11_operator_check(space: FockSpace, mode: int = 1, tol: float = fock.EPS_FOCK) -> VerificationReport:
    s = su11_operators(space, mode)
    report = VerificationReport("su11-operators")
    for a, b, coef, c in SU11_RELATIONS:
        sc = fock.safe_commutator(s[a], s[b])
        report.add(f"[S{a + 1}^,S{b + 1}^] mode {mode}", fock.safe_distance(sc.result, coef * s[c], sc.safe_cutoff), tol)
    return report


def su11_triples_check(gens: GeneratorSet, tol: float | None = None) -> VerificationReport:
    """Check [K_i, H] = i B_i, [B_i, H] = -i K_i, [K_i, B_i] = i H, and [K_i, B_j] = 0 for i != j."""
    is_fock = gens.carrier == "fock-operator"
    if tol is None:
        tol = fock.EPS_FOCK if is_fock else EPS_ALG

    def residual(x, y, expected):
        if is_fock:
            sc = fock.safe_commutator(x, y)
            return np.linalg.norm(sc.result.restrict(sc.safe_cutoff) - expected.restrict(sc.safe_cutoff))
        return np.linalg.norm(commutator(x, y) - expected)

    h = gens["H"]
    report = VerificationReport(f"su11-triples ({gens.carrier})")
    for i in (1, 2, 3):
        k, b = gens[f"K{i}"], gens[f"B{i}"]
        report.add(f"[K{i},H]=iB{i}", residual(k, h, 1j * b), tol)
        report.add(f"[B{i},H]=-iK{i}", residual(b, h, -1j * k), tol)
        report.add(f"[K{i},B{i}]=iH", residual(k, b, 1j * h), tol)
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i != j:
                report.add(f"[K{i},B{j}]=0", residual(gens[f"K{i}"], gens[f"B{j}"], 0 * h), tol)
    return report
