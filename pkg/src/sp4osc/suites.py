"""Named verification suites run by ``sp4osc verify``."""

from __future__ import annotations

import itertools

import numpy as np

from . import chiral, fock, jordan, quantization
from .fock import LOWER, RAISE, FockSpace
from .lie_matrix import (
    EPS_ALG,
    FIRST_SET,
    LABELS,
    Classification,
    canonical_j,
    commutator,
    expected_desitter_table,
    is_symplectic_generator,
    levi_civita,
    pauli,
    sp4_generators,
    structure_constants,
    verify_desitter,
)
from .report import VerificationReport
from .symplectic_geometry import (
    LinearField,
    QuadraticForm,
    field_bracket_check,
    field_from_form,
    form_from_field,
    sp4_polynomials,
    vector_field_isomorphism_check,
)

EPS_FOCK = fock.EPS_FOCK
SUITES = ("all", "matrix", "desitter", "fock", "jordan", "chiral", "su11")
FOCK_SUITES = ("all", "desitter", "fock", "jordan", "chiral", "su11")
MIN_FOCK_CUTOFF = 4
FOUR_MODE_CUTOFF = 6


def bracket_residuals(gens, expected: np.ndarray, tol: float) -> VerificationReport:
    """|| [G_i, G_j] - sum_k expected[i, j, k] G_k || for every unordered pair."""
    report = VerificationReport("brackets")
    values = [gens[k] for k in LABELS]
    is_fock = gens.carrier == "fock-operator"
    for i, j in itertools.combinations(range(len(LABELS)), 2):
        rhs = sum(expected[i, j, k] * values[k] for k in range(len(LABELS)) if expected[i, j, k] != 0)
        if is_fock:
            sc = fock.safe_commutator(values[i], values[j])
            rhs = rhs if not isinstance(rhs, int) else 0 * values[0]
            res = np.linalg.norm(sc.result.restrict(sc.safe_cutoff) - rhs.restrict(sc.safe_cutoff))
        else:
            res = np.linalg.norm(commutator(values[i], values[j]) - rhs)
        report.add(f"[{LABELS[i]},{LABELS[j]}]", float(res), tol)
    return report


def matrix_suite() -> VerificationReport:
    report = VerificationReport("matrix")
    for i, j in itertools.product((1, 2, 3), repeat=2):
        rhs = sum(2j * levi_civita(i, j, k) * pauli(k) for k in (1, 2, 3))
        report.add(f"[s{i},s{j}]=2i eps s", np.abs(commutator(pauli(i), pauli(j)) - rhs).max(), EPS_ALG)
    j4 = canonical_j(2)
    report.add("J^2 = -I", np.abs(j4 @ j4 + np.eye(4)).max(), EPS_ALG)

    gens = sp4_generators()
    report.extend(bracket_residuals(gens, expected_desitter_table(), EPS_ALG), "eq-table ")
    table = structure_constants(gens)
    report.add("structure constants vs table", np.abs(table.c - expected_desitter_table()).max(), EPS_ALG)
    report.add("structure constants antisymmetric", table.antisymmetry_defect(), EPS_ALG)
    for lab in LABELS:
        g = gens[lab]
        report.add(f"{lab} pure imaginary", np.abs(g.real).max(), EPS_ALG)
        want = Classification.FIRST_SET if lab in FIRST_SET else Classification.SECOND_SET
        got = is_symplectic_generator(g, j4)
        report.add(f"{lab} classified {want.value}", 0.0 if got is want else 1.0, 0.5)
        m = -1j * g
        report.add(f"{lab} infinitesimally symplectic", np.abs(m.T @ j4 + j4 @ m).max(), EPS_ALG)

    # quadratic forms and vector fields
    f1 = QuadraticForm.from_terms(1, {"p1^2": 0.5, "q1^2": 0.5})
    f2 = QuadraticForm.from_terms(1, {"p1^2": 0.5})
    report.add("harmonic/free-particle field bracket", field_bracket_check(f1, f2), EPS_ALG)
    report.add("harmonic/free-particle vector-field bracket", vector_field_isomorphism_check(f1, f2), EPS_ALG)
    polys = sp4_polynomials(gens)
    for a, b in itertools.combinations(LABELS, 2):
        report.add(f"field bracket ({a},{b})", field_bracket_check(polys[a], polys[b]), EPS_ALG)
    ptable = structure_constants(polys)
    report.add("Poisson table equals matrix table", np.abs(ptable.c - table.c).max(), EPS_ALG)
    for lab in LABELS:
        back = field_from_form(form_from_field(LinearField(gens[lab]))).m
        report.add(f"{lab} field/form round trip", np.abs(back - gens[lab]).max(), EPS_ALG)
    return report


def desitter_suite(cutoff: int) -> VerificationReport:
    report = VerificationReport("desitter")
    report.extend(verify_desitter(sp4_generators()), "matrix ")
    space = FockSpace(2, cutoff)
    report.extend(verify_desitter(quantization.dirac_representation(space)), f"fock N={cutoff} ")
    return report


def fock_suite(cutoff: int) -> VerificationReport:
    report = VerificationReport("fock")
    space = FockSpace(2, cutoff)
    a = {(m, k): fock.ladder(space, m, k) for m in (1, 2) for k in (LOWER, RAISE)}
    ident = fock.FockOperator.identity(space)
    for i, j in itertools.product((1, 2), repeat=2):
        sc = fock.safe_commutator(a[i, LOWER], a[j, RAISE])
        report.add(f"[a{i},a{j}^dag]", fock.safe_distance(sc.result, (i == j) * ident, sc.safe_cutoff), EPS_FOCK)
        sc = fock.safe_commutator(a[i, LOWER], a[j, LOWER])
        report.add(f"[a{i},a{j}]", float(np.abs(sc.result.toarray()).max()), EPS_FOCK)
    q = {m: fock.quadrature(space, m, "q") for m in (1, 2)}
    p = {m: fock.quadrature(space, m, "p") for m in (1, 2)}
    for i, j in itertools.product((1, 2), repeat=2):
        sc = fock.safe_commutator(q[i], p[j])
        report.add(f"[q{i},p{j}]", fock.safe_distance(sc.result, 1j * (i == j) * ident, sc.safe_cutoff), EPS_FOCK)

    dirac = quantization.dirac_representation(space)
    pipe = quantization.pipeline_representation(space)
    for lab, dev in quantization.representation_deviation(pipe, dirac).items():
        report.add(f"pipeline {lab} = Dirac {lab}", dev, EPS_FOCK)
    for lab in LABELS:
        d = dirac[lab]
        report.add(f"{lab} hermitian", float(abs(d.matrix - d.matrix.conj().T).max()), EPS_FOCK)
    report.extend(bracket_residuals(dirac, expected_desitter_table(), EPS_FOCK), "eq-table ")

    occ = space.occupations
    expected = np.sort((occ[:, 0] + occ[:, 1] + 1) / 2.0)
    report.add("spectrum(H) = (n1+n2+1)/2", np.abs(fock.spectrum(dirac["H"]) - expected).max(), EPS_FOCK)
    return report


def _four_mode_l1(space: FockSpace):
    t = lambda i, j: fock.ladder_product(space, [(i, RAISE), (j, LOWER)])  # noqa: E731
    return 0.25j * (t(1, 4) + t(2, 3) - t(3, 2) - t(4, 1))


def jordan_suite(cutoff: int, n: int) -> VerificationReport:
    report = VerificationReport("jordan")
    space = FockSpace(2, cutoff)
    dirac = quantization.dirac_representation(space)
    s = {i: pauli(i) for i in (1, 2, 3)}
    eye = np.eye(2)
    for i in (1, 2, 3):
        report.add(f"bilinear(s{i}) = L{i}", fock.distance(jordan.jordan_bilinear(s[i], space), dirac[f"L{i}"]), EPS_FOCK)
    cases = [
        ("W1 = K3", jordan.jordan_plus(s[1], space), dirac["K3"]),
        ("W3 = -K1", jordan.jordan_plus(s[3], space), -dirac["K1"]),
        ("Z1 = B3", jordan.jordan_minus(s[1], space), dirac["B3"]),
        ("Z3 = -B1", jordan.jordan_minus(s[3], space), -dirac["B1"]),
        ("W(I) = -B2", jordan.jordan_plus(eye, space), -dirac["B2"]),
        ("Z(I) = K2", jordan.jordan_minus(eye, space), dirac["K2"]),
        ("symmetrized(I) = H", jordan.jordan_symmetrized(eye, space), dirac["H"]),
    ]
    for label, got, want in cases:
        report.add(label, fock.distance(got, want), EPS_FOCK)
    for name, op in (("W2", jordan.jordan_plus(s[2], space)), ("Z2", jordan.jordan_minus(s[2], space))):
        report.add(f"{name} = 0 exactly", 0.0 if op.is_zero() else 1.0, 0.5)
    assembled = jordan.assemble_dirac_via_jordan(space)
    report.add(
        "assembled = Dirac",
        max(quantization.representation_deviation(assembled, dirac).values()),
        EPS_FOCK,
    )
    report.extend(jordan.jordan_algebra_check([s[i] / 2 for i in (1, 2, 3)], space, ("L1", "L2", "L3")), "su2 ")

    space4 = FockSpace(4, min(cutoff, FOUR_MODE_CUTOFF))
    gens = sp4_generators()
    report.add(
        "4-mode bilinear(L1)",
        fock.distance(jordan.jordan_bilinear(gens["L1"], space4), _four_mode_l1(space4)),
        EPS_FOCK,
    )
    report.extend(jordan.jordan_algebra_check([gens[k] for k in LABELS], space4, LABELS), "4-mode ")

    for m in sorted({1, 2, 3, 4, n}):
        basis = jordan.sp2n_basis(m)
        report.add(f"sp({2 * m}) count = {jordan.generator_count(m)}", abs(len(basis) - jordan.generator_count(m)), 0.5)
        jm = canonical_j(m)
        bad = sum(is_symplectic_generator(b, jm) is Classification.NOT_GENERATOR for b in basis)
        report.add(f"sp({2 * m}) all classified", bad, 0.5)
        report.add(f"sp({2 * m}) closure", structure_constants(basis).max_residual, EPS_ALG)

    n_space = FockSpace(n, min(cutoff, FOUR_MODE_CUTOFF) if n >= 3 else cutoff)
    ops = jordan.minimal_representation(n, n_space)
    report.add(
        f"n={n}: {len(ops)} quantized operators independent",
        abs(jordan.operator_rank(ops) - jordan.generator_count(n)),
        0.5,
    )
    report.add(f"n={n}: quantized closure", structure_constants(ops).max_residual, EPS_FOCK)
    if n == 2:
        _, resid = jordan.align_basis(ops, dirac.values())
        report.add("n=2 spans Dirac representation", resid, 1e-8)
    return report


def chiral_suite(cutoff: int) -> VerificationReport:
    report = VerificationReport("chiral")
    report.extend(chiral.decoupling_check())
    for c in (chiral.ChiralOscillator(1), chiral.ChiralOscillator(-1)):
        sign = "+" if c.chirality == 1 else "-"
        report.add(f"{{q1,q2}} = {-c.chirality} for L{sign}", abs(chiral.chiral_bracket(c, 1, 2) + c.chirality), EPS_ALG)
        jq = chiral.chiral_angular_momentum(c)
        report.add(f"J{sign} = {sign}H~", np.abs(jq.a - c.chirality * c.hamiltonian().a).max(), EPS_ALG)
    space = FockSpace(2, cutoff)
    dirac = quantization.dirac_representation(space)
    h, j = chiral.compose_chiral_pair(space)
    report.add("composed H = Dirac H", fock.distance(h, dirac["H"]), EPS_FOCK)
    report.add("composed J = Dirac L3", fock.distance(j, dirac["L3"]), EPS_FOCK)
    ev = fock.spectrum(h)
    report.add("min eigenvalue of H = 1/2", abs(ev[0] - 0.5), EPS_FOCK)
    report.add("ground state non-degenerate", float(np.sum(np.abs(ev - 0.5) < 1e-8) != 1), 0.5)
    report.add("[H, J] = 0", fock.distance(h @ j, j @ h), EPS_FOCK)
    jev = fock.spectrum(j)
    has_int = np.any(np.abs(jev - np.round(jev)) < 1e-9)
    has_half = np.any(np.abs(jev - np.round(jev) - 0.5) < 1e-9) or np.any(np.abs(jev - np.round(jev) + 0.5) < 1e-9)
    report.add("J has integer and half-integer values", float(not (has_int and has_half)), 0.5)
    return report


def su11_suite(cutoff: int) -> VerificationReport:
    report = VerificationReport("su11")
    report.extend(quantization.su11_matrix_check())
    space = FockSpace(2, cutoff)
    for mode in (1, 2):
        report.extend(quantization.su11_operator_check(space, mode))
    dirac = quantization.dirac_representation(space)
    s_1 = quantization.su11_operators(space, 1)
    s_2 = quantization.su11_operators(space, 2)
    report.add("S2^(1) + S2^(2) = H", fock.distance(s_1[1] + s_2[1], dirac["H"]), EPS_FOCK)
    report.extend(quantization.su11_triples_check(sp4_generators()), "matrix ")
    report.extend(quantization.su11_triples_check(dirac), "fock ")
    return report


def run_suite(name: str, cutoff: int = 8, n: int = 2) -> VerificationReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    if name in FOCK_SUITES and cutoff < MIN_FOCK_CUTOFF:
        raise ValueError(f"cutoff must be >= {MIN_FOCK_CUTOFF} for the {name!r} suite, got {cutoff}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    runners = {
        "matrix": lambda: matrix_suite(),
        "desitter": lambda: desitter_suite(cutoff),
        "fock": lambda: fock_suite(cutoff),
        "jordan": lambda: jordan_suite(cutoff, n),
        "chiral": lambda: chiral_suite(cutoff),
        "su11": lambda: su11_suite(cutoff),
    }
    if name != "all":
        return runners[name]()
    report = VerificationReport("all")
    for suite in SUITES[1:]:
        report.extend(runners[suite](), f"{suite}: ")
    return report
