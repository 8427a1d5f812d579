"""
Acceptance criteria, one test each.  Every test prints a single
``PASS``/``FAIL`` line with the measured residual and the tolerance.

Run alone with ``pytest tests/test_acceptance.py -v`` or
``python tests/test_acceptance.py``.
"""

import itertools
import sys
import time

import numpy as np
import pytest

from sp4osc import chiral, fock, jordan, quantization, suites
from sp4osc.fock import EPS_FOCK, LOWER, RAISE, FockSpace
from sp4osc.lie_matrix import (
    EPS_ALG,
    LABELS,
    commutator,
    expected_desitter_table,
    pauli,
    sp4_generators,
    structure_constants,
    verify_desitter,
)
from sp4osc.symplectic_geometry import QuadraticForm, sp4_polynomials, vector_field_isomorphism_check


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})")
        assert ok, detail

    return emit


def test_criterion_1_matrix_algebra(report):
    start = time.perf_counter()
    gens = sp4_generators()
    expected = expected_desitter_table()
    worst = 0.0
    for i, j in itertools.combinations(range(10), 2):
        rhs = sum(expected[i, j, k] * gens[LABELS[k]] for k in range(10))
        worst = max(worst, np.abs(commutator(gens[LABELS[i]], gens[LABELS[j]]) - rhs).max())
    elapsed = time.perf_counter() - start
    report(1, "45 brackets of the ten 4x4 generators", worst < EPS_ALG and elapsed < 1.0,
           f"max residual {worst:.2e} < 1e-12, {elapsed:.3f} s < 1 s")


def test_criterion_2_desitter_identity(report):
    matrix = verify_desitter(sp4_generators())
    space = FockSpace(2, 8)
    fock_rep = verify_desitter(quantization.dirac_representation(space))
    ok = matrix.ok and fock_rep.ok and matrix.passed == fock_rep.passed == 101
    report(2, "so(3,2) bracket on matrix and Fock (N=8) carriers", ok,
           f"matrix max {matrix.max_residual:.2e} < 1e-12, fock max {fock_rep.max_residual:.2e} < 1e-10, "
           f"{matrix.passed}+{fock_rep.passed} checks")


def test_criterion_3_pipeline_equivalence(report):
    space = FockSpace(2, 8)
    pipe = quantization.pipeline_representation(space)
    dirac = quantization.dirac_representation(space)
    dev = quantization.representation_deviation(pipe, dirac)
    t = lambda *f: fock.ladder_product(space, f)  # noqa: E731
    l1 = 0.5 * (t((1, RAISE), (2, LOWER)) + t((2, RAISE), (1, LOWER)))
    qp = lambda m: fock.quadrature_product(space, (m, "q"), (m, "p"))  # noqa: E731
    pq = lambda m: fock.quadrature_product(space, (m, "p"), (m, "q"))  # noqa: E731
    k2 = 0.5 * (qp(1) + pq(2))
    worked = max(fock.distance(pipe["L1"], l1), fock.distance(pipe["K2"], k2))
    worst = max(dev.values())
    report(3, "pipeline equals hand-coded representation at N=8", worst < EPS_FOCK and worked < EPS_FOCK,
           f"max over ten {worst:.2e}, worked L1/K2 {worked:.2e} < 1e-10")


def test_criterion_4_field_bracket_isomorphism(report):
    f1 = QuadraticForm.from_terms(1, {"p1^2": 0.5, "q1^2": 0.5})
    f2 = QuadraticForm.from_terms(1, {"p1^2": 0.5})
    example = vector_field_isomorphism_check(f1, f2)
    polys = sp4_polynomials()
    pairs = [vector_field_isomorphism_check(polys[a], polys[b]) for a, b in itertools.combinations(LABELS, 2)]
    ok = example < EPS_ALG and len(pairs) == 45 and max(pairs) < EPS_ALG
    report(4, "[xi_f, xi_g] = -xi_{f,g}", ok, f"example {example:.2e}, 45 pairs max {max(pairs):.2e} < 1e-12")


def test_criterion_5_generalised_jordan(report):
    space = FockSpace(2, 8)
    d = quantization.dirac_representation(space)
    s1, s2, s3 = (pauli(i) for i in (1, 2, 3))
    eye = np.eye(2)
    devs = {
        "bilinear s1": fock.distance(jordan.jordan_bilinear(s1, space), d["L1"]),
        "bilinear s2": fock.distance(jordan.jordan_bilinear(s2, space), d["L2"]),
        "bilinear s3": fock.distance(jordan.jordan_bilinear(s3, space), d["L3"]),
        "plus s1": fock.distance(jordan.jordan_plus(s1, space), d["K3"]),
        "plus s3": fock.distance(jordan.jordan_plus(s3, space), -d["K1"]),
        "minus s1": fock.distance(jordan.jordan_minus(s1, space), d["B3"]),
        "minus s3": fock.distance(jordan.jordan_minus(s3, space), -d["B1"]),
        "plus I": fock.distance(jordan.jordan_plus(eye, space), -d["B2"]),
        "minus I": fock.distance(jordan.jordan_minus(eye, space), d["K2"]),
        "symmetrized I": fock.distance(jordan.jordan_symmetrized(eye, space), d["H"]),
    }
    zeros = jordan.jordan_plus(s2, space).is_zero() and jordan.jordan_minus(s2, space).is_zero()
    assembled = jordan.assemble_dirac_via_jordan(space)
    asm = max(quantization.representation_deviation(assembled, d).values())
    worst = max(devs.values())
    report(5, "generalised Jordan maps", worst < EPS_FOCK and zeros and asm < EPS_FOCK,
           f"max map deviation {worst:.2e}, sigma2 images exactly zero: {zeros}, assembled {asm:.2e} < 1e-10")


def test_criterion_6_four_mode_jordan(report):
    gens = sp4_generators()
    small = FockSpace(4, 3)
    t = lambda i, j: fock.ladder_product(small, [(i, RAISE), (j, LOWER)])  # noqa: E731
    want = 0.25j * (t(1, 4) + t(2, 3) - t(3, 2) - t(4, 1))
    l1 = fock.distance(jordan.jordan_bilinear(gens["L1"], small), want)
    check = jordan.jordan_algebra_check([gens[k] for k in LABELS], FockSpace(4, 6), LABELS)
    report(6, "four-mode Jordan map, N=6", l1 < EPS_FOCK and check.ok,
           f"L1 formula {l1:.2e}, algebra {check.passed}/{len(check.checks)} checks, max {check.max_residual:.2e}")


def test_criterion_7_spectra(report):
    space = FockSpace(2, 8)
    d = quantization.dirac_representation(space)
    h_vals = fock.spectrum(d["H"])
    occ = space.occupations
    expected = np.sort((occ[:, 0] + occ[:, 1] + 1) / 2.0)
    rows = fock.multiplicities(h_vals)
    l3 = np.array([v for v, _ in fock.multiplicities(fock.spectrum(d["L3"]))])
    has_int = bool(np.any(np.isclose(l3, np.round(l3))))
    has_half = bool(np.any(np.isclose(l3 - 0.5, np.round(l3 - 0.5))))
    comm = d["H"] @ d["L3"] - d["L3"] @ d["H"]
    ok = (
        rows[0] == (0.5, 1)
        and abs(h_vals[0] - 0.5) < EPS_ALG
        and np.abs(h_vals - expected).max() < EPS_FOCK
        and has_int and has_half
        and comm.is_zero()
    )
    report(7, "spectra of H and L3", ok,
           f"min {float(h_vals[0])!r} x{rows[0][1]}, H vs (n1+n2+1)/2 {np.abs(h_vals - expected).max():.2e}, "
           f"L3 integer {has_int} half-integer {has_half}, [H,L3] exactly zero {comm.is_zero()}")


def test_criterion_8_su11(report):
    space = FockSpace(2, 8)
    mats = quantization.su11_matrix_check()
    ops = [quantization.su11_operator_check(space, m) for m in (1, 2)]
    s2 = quantization.su11_operators(space, 1)[1] + quantization.su11_operators(space, 2)[1]
    d = quantization.dirac_representation(space)
    sum_dev = fock.distance(s2, d["H"])
    triples = quantization.su11_triples_check(sp4_generators())
    ok = mats.max_residual < EPS_ALG and all(r.ok for r in ops) and sum_dev < EPS_ALG and triples.ok
    report(8, "SU(1,1)", ok,
           f"matrices {mats.max_residual:.2e}, operators {max(r.max_residual for r in ops):.2e}, "
           f"S2 sum vs H {sum_dev:.2e}, triples {triples.passed}/{len(triples.checks)}")


def test_criterion_9_sp2n_scaling(report):
    counts = [len(jordan.sp2n_basis(n)) for n in (1, 2, 3, 4)]
    closure = structure_constants(dict(jordan.sp2n_basis_labelled(3))).max_residual
    ops = jordan.minimal_representation(3, FockSpace(3, 4))
    rank = jordan.operator_rank(ops)
    start = time.perf_counter()
    full = suites.run_suite("all")
    elapsed = time.perf_counter() - start
    ok = counts == [3, 10, 21, 36] and closure < EPS_ALG and rank == 21 and full.ok and elapsed < 30.0
    report(9, "Sp(2n) scaling and full-suite runtime", ok,
           f"counts {counts}, n=3 closure {closure:.2e}, rank {rank}/21, "
           f"full suite {full.passed} passed {full.failed} failed in {elapsed:.2f} s < 30 s")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
