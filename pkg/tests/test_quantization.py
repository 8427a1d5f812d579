import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import dense_ladders
from sp4osc import fock
from sp4osc.fock import EPS_FOCK, FockSpace
from sp4osc.lie_matrix import EPS_ALG, LABELS, expected_desitter_table, structure_constants
from sp4osc.quantization import (
    HAMILTONIAN_CONVENTION,
    ConventionViolationError,
    QuantizationConvention,
    quantize,
    representation_deviation,
    su11_matrix_check,
    su11_operator_check,
    su11_operators,
    su11_triples_check,
)
from sp4osc.symplectic_geometry import QuadraticForm


def dense_dirac(cutoff):
    """Dirac's ten operators from dense matrices on a padded space, cropped back to ``cutoff``."""
    big = cutoff + 2
    a1, a2 = dense_ladders(2, big)
    d1, d2 = a1.conj().T, a2.conj().T
    ops = {
        "L1": 0.5 * (d1 @ a2 + d2 @ a1),
        "L2": 0.5j * (d2 @ a1 - d1 @ a2),
        "L3": 0.5 * (d1 @ a1 - d2 @ a2),
        "H": 0.5 * (d1 @ a1 + d2 @ a2 + np.eye(len(a1))),
        "K1": -0.25 * (d1 @ d1 + a1 @ a1 - d2 @ d2 - a2 @ a2),
        "K2": 0.25j * (d1 @ d1 + d2 @ d2 - a1 @ a1 - a2 @ a2),
        "K3": 0.5 * (d1 @ d2 + a1 @ a2),
        "B1": -0.25j * (d1 @ d1 - a1 @ a1 - d2 @ d2 + a2 @ a2),
        "B2": -0.25 * (d1 @ d1 + d2 @ d2 + a1 @ a1 + a2 @ a2),
        "B3": 0.5j * (d1 @ d2 - a1 @ a2),
    }
    occ = FockSpace(2, big).occupations
    idx = np.flatnonzero((occ <= cutoff).all(axis=1))
    return {k: v[np.ix_(idx, idx)] for k, v in ops.items()}


def test_dirac_matches_dense_oracle(dirac8):
    ref = dense_dirac(8)
    for k in LABELS:
        assert np.abs(dirac8[k].toarray() - ref[k]).max() < 1e-12, k


@pytest.mark.parametrize("label", LABELS)
def test_pipeline_equals_dirac(pipeline8, dirac8, label):
    assert fock.distance(pipeline8[label], dirac8[label]) < EPS_FOCK


def test_representation_deviation_keys(pipeline8, dirac8):
    dev = representation_deviation(pipeline8, dirac8)
    assert set(dev) == set(LABELS)
    assert max(dev.values()) < EPS_FOCK


def test_worked_l1_case(space8, pipeline8):
    """-i (i/2)(q1 q2 + p1 p2) -> 1/2 (a1^dag a2 + a2^dag a1)."""
    q1q2 = fock.quadrature_product(space8, (1, "q"), (2, "q"))
    p1p2 = fock.quadrature_product(space8, (1, "p"), (2, "p"))
    assert fock.distance(pipeline8["L1"], 0.5 * (q1q2 + p1p2)) < EPS_FOCK
    ref = 0.5 * (fock.ladder_product(space8, [(1, "raise"), (2, "lower")]) + fock.ladder_product(space8, [(2, "raise"), (1, "lower")]))
    assert fock.distance(pipeline8["L1"], ref) < EPS_FOCK


def test_worked_k2_case(space8, pipeline8):
    """Weyl ordering of 1/2 (q1 p1 + q2 p2) reduces to 1/2 (q1 p1 + p2 q2)."""
    qp = lambda m: fock.quadrature_product(space8, (m, "q"), (m, "p"))  # noqa: E731
    pq = lambda m: fock.quadrature_product(space8, (m, "p"), (m, "q"))  # noqa: E731
    symmetric = 0.25 * (qp(1) + pq(1) + qp(2) + pq(2))
    reduced = 0.5 * (qp(1) + pq(2))
    assert fock.distance(pipeline8["K2"], symmetric) < EPS_FOCK
    assert fock.distance(pipeline8["K2"], reduced) < EPS_FOCK


@pytest.mark.parametrize("label", LABELS)
def test_quantized_operators_hermitian(pipeline8, label):
    assert pipeline8[label].is_hermitian()


def test_fock_structure_table_matches(dirac8):
    tab = structure_constants(dirac8)
    assert tab.max_residual < EPS_FOCK
    assert np.abs(tab.c - expected_desitter_table()).max() < EPS_FOCK


def test_real_generator_violates_convention(space8):
    # a real symmetric matrix under the -i convention gives an antihermitian operator
    f = QuadraticForm.from_terms(2, {"q1^2": 1.0})
    with pytest.raises(ConventionViolationError):
        quantize(f, space8)
    assert quantize(f, space8, HAMILTONIAN_CONVENTION).is_hermitian()


def test_unsupported_ordering():
    with pytest.raises(ValueError):
        QuantizationConvention(ordering="normal")


def test_mode_placement_errors(space8):
    f = QuadraticForm.from_terms(1, {"p1^2": 0.5j})
    with pytest.raises(ValueError):
        quantize(f, space8)
    with pytest.raises(ValueError):
        quantize(f, space8, modes=[3])


def test_su11():
    assert su11_matrix_check().ok
    space = FockSpace(2, 8)
    for mode in (1, 2):
        assert su11_operator_check(space, mode).ok


def test_su11_two_mode_sum_is_h(space8, dirac8):
    s2 = su11_operators(space8, 1)[1] + su11_operators(space8, 2)[1]
    assert fock.distance(s2, dirac8["H"]) < EPS_ALG


@pytest.mark.parametrize("carrier", ["matrix", "fock"])
def test_su11_triples(gens, dirac8, carrier):
    rep = su11_triples_check(gens if carrier == "matrix" else dirac8)
    assert rep.ok
    assert rep.passed == 15


@settings(max_examples=25, deadline=None)
@given(st.lists(st.floats(-2, 2, allow_nan=False), min_size=10, max_size=10))
def test_quantization_is_linear(gens, coeffs):
    space = FockSpace(2, 3)
    from sp4osc.symplectic_geometry import sp4_polynomials

    polys = sp4_polynomials(gens)
    combo = sum((c * polys[k] for c, k in zip(coeffs, LABELS)), QuadraticForm.zero(2))
    lhs = quantize(combo, space)
    rhs = sum((c * quantize(polys[k], space) for c, k in zip(coeffs, LABELS)), fock.FockOperator.zero(space))
    assert fock.distance(lhs, rhs) < 1e-10
