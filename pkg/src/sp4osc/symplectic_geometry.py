"""
Quadratic phase-space polynomials, linear Hamiltonian vector fields and
their Poisson / commutator algebras.

A homogeneous quadratic f(z) = 1/2 z^T A z generates the linear field
dz/dt = J A z, so fields are matrices and forms are symmetric matrices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .lie_matrix import EPS_ALG, LABELS, GeneratorSet, as_complex_matrix, canonical_j, sp4_generators


class NotHamiltonianError(ValueError):
    """Field matrix violates M^T J + J M = 0."""


def coordinate_names(n_pairs: int) -> list[str]:
    return [f"q{i}" for i in range(1, n_pairs + 1)] + [f"p{i}" for i in range(1, n_pairs + 1)]


def _n_pairs(m: np.ndarray) -> int:
    if m.shape[0] % 2:
        raise ValueError(f"phase space dimension must be even, got {m.shape[0]}")
    return m.shape[0] // 2


@dataclass(frozen=True, eq=False)
class QuadraticForm:
    """f(z) = 1/2 z^T a z over z = (q1..qn, p1..pn); ``a`` is symmetrised on construction."""

    a: np.ndarray

    def __post_init__(self):
        a = as_complex_matrix(self.a)
        _n_pairs(a)
        object.__setattr__(self, "a", 0.5 * (a + a.T))

    @property
    def n_pairs(self) -> int:
        return self.a.shape[0] // 2

    @classmethod
    def zero(cls, n_pairs: int) -> "QuadraticForm":
        return cls(np.zeros((2 * n_pairs, 2 * n_pairs)))

    @classmethod
    def from_terms(cls, n_pairs: int, terms: dict[str, complex]) -> "QuadraticForm":
        """Build from monomials like ``{"p1*p2": 0.5j, "q1^2": 1}``."""
        names = coordinate_names(n_pairs)
        a = np.zeros((2 * n_pairs, 2 * n_pairs), dtype=complex)
        for mono, coef in terms.items():
            m = re.fullmatch(r"\s*([qp]\d+)\s*(?:\^\s*2|\*\s*([qp]\d+))\s*", mono)
            if not m:
                raise ValueError(f"cannot parse monomial {mono!r}")
            x, y = m.group(1), m.group(2) or m.group(1)
            i, j = names.index(x), names.index(y)
            if i == j:
                a[i, i] += 2 * coef
            else:
                a[i, j] += coef
                a[j, i] += coef
        return cls(a)

    def terms(self, tol: float = EPS_ALG) -> dict[str, complex]:
        """Monomial coefficients in coordinate order (inverse of from_terms)."""
        names = coordinate_names(self.n_pairs)
        out = {}
        d = self.a.shape[0]
        for i in range(d):
            for j in range(i, d):
                c = 0.5 * self.a[i, i] if i == j else self.a[i, j]
                if abs(c) > tol:
                    key = f"{names[i]}^2" if i == j else f"{names[i]}*{names[j]}"
                    out[key] = complex(c)
        return out

    def __call__(self, z) -> complex:
        z = np.asarray(z)
        return 0.5 * z @ self.a @ z

    def gradient(self, z) -> np.ndarray:
        return self.a @ np.asarray(z)

    def __add__(self, other):
        if isinstance(other, (int, float, complex)) and other == 0:
            return self
        if not isinstance(other, QuadraticForm):
            return NotImplemented
        if other.n_pairs != self.n_pairs:
            raise ValueError("forms over different phase spaces")
        return QuadraticForm(self.a + other.a)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, float, complex, np.number)):
            return NotImplemented
        return QuadraticForm(self.a * scalar)

    __rmul__ = __mul__

    def allclose(self, other: "QuadraticForm", tol: float = EPS_ALG) -> bool:
        return self.a.shape == other.a.shape and bool(np.abs(self.a - other.a).max() < tol)


@dataclass(frozen=True, eq=False)
class LinearField:
    """The vector field dz/dt = m z."""

    m: np.ndarray

    def __post_init__(self):
        m = as_complex_matrix(self.m)
        _n_pairs(m)
        object.__setattr__(self, "m", m)

    @property
    def n_pairs(self) -> int:
        return self.m.shape[0] // 2

    def hamiltonian_defect(self) -> float:
        j = canonical_j(self.n_pairs)
        return float(np.abs(self.m.T @ j + j @ self.m).max())

    def is_hamiltonian(self, tol: float = EPS_ALG) -> bool:
        return self.hamiltonian_defect() < tol

    def __call__(self, z) -> np.ndarray:
        return self.m @ np.asarray(z)

    def allclose(self, other: "LinearField", tol: float = EPS_ALG) -> bool:
        return self.m.shape == other.m.shape and bool(np.abs(self.m - other.m).max() < tol)


def field_from_form(f: QuadraticForm) -> LinearField:
    """dq/dt = df/dp, dp/dt = -df/dq, i.e. M = J A."""
    return LinearField(canonical_j(f.n_pairs) @ f.a)


def form_from_field(xi: LinearField | np.ndarray, tol: float = EPS_ALG) -> QuadraticForm:
    """Inverse of field_from_form: A = -J M."""
    if not isinstance(xi, LinearField):
        xi = LinearField(xi)
    if not xi.is_hamiltonian(tol):
        raise NotHamiltonianError(f"M^T J + J M = {xi.hamiltonian_defect():.3e} != 0")
    return QuadraticForm(-canonical_j(xi.n_pairs) @ xi.m)


def poisson_bracket(f: QuadraticForm, g: QuadraticForm) -> QuadraticForm:
    """{f, g} = -xi_f g.

    With xi_f = (J A_f z).grad this is z^T A_f J A_g z, so the bracket of
    two quadratics is the quadratic with matrix A_f J A_g - A_g J A_f.
    """
    if f.n_pairs != g.n_pairs:
        raise ValueError(f"dimension mismatch: {f.n_pairs} vs {g.n_pairs} pairs")
    j = canonical_j(f.n_pairs)
    return QuadraticForm(f.a @ j @ g.a - g.a @ j @ f.a)


def vector_field_commutator(xi: LinearField, eta: LinearField) -> LinearField:
    """Lie bracket of the first-order differential operators (xi z).grad and (eta z).grad.

    For linear fields [xi_M, xi_N] = xi_{NM - MN}.
    """
    return LinearField(eta.m @ xi.m - xi.m @ eta.m)


def field_bracket_check(f: QuadraticForm, g: QuadraticForm) -> float:
    """|| [M_f, M_g] - M_{f,g} ||_F."""
    mf = field_from_form(f).m
    mg = field_from_form(g).m
    mfg = field_from_form(poisson_bracket(f, g)).m
    return float(np.linalg.norm(mf @ mg - mg @ mf - mfg))


def vector_field_isomorphism_check(f: QuadraticForm, g: QuadraticForm) -> float:
    """|| [xi_f, xi_g] + xi_{f,g} ||_F with the bracket taken between vector fields."""
    lhs = vector_field_commutator(field_from_form(f), field_from_form(g)).m
    rhs = -field_from_form(poisson_bracket(f, g)).m
    return float(np.linalg.norm(lhs - rhs))


def sp4_polynomials(gens: GeneratorSet | None = None) -> GeneratorSet:
    """The ten quadratic polynomials recovered from the Sp(4) generator matrices."""
    gens = gens or sp4_generators()
    return GeneratorSet("polynomial", {k: form_from_field(LinearField(gens[k])) for k in LABELS})


def format_form(f: QuadraticForm, tol: float = EPS_ALG) -> str:
    """Human-readable polynomial, e.g. ``1/2 q1 q2 + 1/2 p1 p2``."""
    from .serialize import format_scalar

    parts = []
    for mono, c in f.terms(tol).items():
        parts.append(f"({format_scalar(c)}) {mono.replace('*', ' ')}")
    return " + ".join(parts) if parts else "0"
