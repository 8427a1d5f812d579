"""
Chiral oscillators and their composition into a planar oscillator.

Lagrangian statements are handled as linear/quadratic data: a first-order
Lagrangian is L = 1/2 x^T C xdot - 1/2 x^T V x, and a second-order one is
L = 1/2 xdot^T M xdot + xdot^T G x - 1/2 x^T K x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .fock import FockOperator, FockSpace
from .lie_matrix import EPS_ALG
from .quantization import HAMILTONIAN_CONVENTION, quantize
from .report import VerificationReport
from .symplectic_geometry import QuadraticForm

EPS2 = np.array([[0.0, 1.0], [-1.0, 0.0]])  # epsilon_{alpha beta}, epsilon_12 = 1


@dataclass(frozen=True)
class ChiralOscillator:
    chirality: int

    def __post_init__(self):
        if self.chirality not in (1, -1):
            raise ValueError(f"chirality must be +1 or -1, got {self.chirality!r}")

    def lagrangian(self) -> "FirstOrderLagrangian":
        """L = 1/2 (+- eps q qdot - q^2) over (q1, q2)."""
        return FirstOrderLagrangian(self.chirality * EPS2, np.eye(2))

    def poisson_tensor(self) -> np.ndarray:
        """{q_alpha, q_beta} as a 2x2 matrix."""
        return -self.chirality * EPS2

    def canonical_pair(self) -> tuple[int, int]:
        """(position, momentum) indices among (q1, q2): (2, 1) for +, (1, 2) for -."""
        return (2, 1) if self.chirality == 1 else (1, 2)

    def hamiltonian(self) -> QuadraticForm:
        """1/2 (q1^2 + q2^2), written over the sector's canonical (q, p) pair."""
        return QuadraticForm(np.eye(2))

    def flipped(self) -> "ChiralOscillator":
        return ChiralOscillator(-self.chirality)


def chiral_bracket(c: ChiralOscillator, alpha: int, beta: int) -> float:
    if alpha not in (1, 2) or beta not in (1, 2):
        raise ValueError(f"indices must be 1 or 2, got ({alpha}, {beta})")
    return float(c.poisson_tensor()[alpha - 1, beta - 1])


def canonical_momenta(c: ChiralOscillator) -> np.ndarray:
    """P with p_beta = sum_rho P[beta, rho] q_rho, from p = dL/dqdot."""
    # dL/dqdot_beta = +-1/2 eps_{rho beta} q_rho
    return 0.5 * c.chirality * EPS2.T


def chiral_angular_momentum(c: ChiralOscillator) -> QuadraticForm:
    """J = eps_{alpha beta} q_alpha p_beta with the momenta above; equals +-1/2 q^2."""
    # J = q^T eps P q  ->  quadratic-form matrix 2 * sym(eps P)
    j = EPS2 @ canonical_momenta(c)
    return QuadraticForm(j + j.T)


def compose_chiral_pair(space: FockSpace) -> tuple[FockOperator, FockOperator]:
    """H = (H+ + H-)/2 and J = (H+ - H-)/2 with the + sector on mode 1, - on mode 2."""
    if space.modes != 2:
        raise ValueError(f"needs 2 modes, got {space.modes}")
    sectors = {}
    for mode, c in ((1, ChiralOscillator(1)), (2, ChiralOscillator(-1))):
        sectors[c.chirality] = quantize(c.hamiltonian(), space, HAMILTONIAN_CONVENTION, modes=[mode])
    h = 0.5 * (sectors[1] + sectors[-1])
    j = 0.5 * (sectors[1] - sectors[-1])
    return h, j


# --- Lagrangian bookkeeping --------------------------------------------------

@dataclass(frozen=True, eq=False)
class FirstOrderLagrangian:
    """L = 1/2 x^T C xdot - 1/2 x^T V x; only the antisymmetric part of C is dynamical."""

    c: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.c, dtype=float)
        v = np.asarray(self.v, dtype=float)
        if c.shape != v.shape or c.shape[0] != c.shape[1]:
            raise ValueError("C and V must be square and of equal size")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "v", 0.5 * (v + v.T))

    @property
    def kinetic(self) -> np.ndarray:
        """Antisymmetric kinetic matrix; the symmetric part is a total derivative."""
        return 0.5 * (self.c - self.c.T)

    def change_variables(self, t: np.ndarray) -> "FirstOrderLagrangian":
        """Express in new variables y with x = t y."""
        t = np.asarray(t, dtype=float)
        return FirstOrderLagrangian(t.T @ self.c @ t, t.T @ self.v @ t)

    def equations_of_motion(self) -> tuple[np.ndarray, np.ndarray]:
        """(A, V) with A xdot = V x, A the antisymmetric kinetic matrix."""
        return self.kinetic, self.v

    def eliminate(self, keep: Sequence[int], drop: Sequence[int]) -> "SecondOrderLagrangian":
        """Solve the algebraic equations of the ``drop`` variables and substitute back."""
        keep, drop = list(keep), list(drop)
        ka = self.kinetic
        if np.abs(ka[np.ix_(drop, drop)]).max(initial=0.0) > EPS_ALG:
            raise ValueError("eliminated variables carry their own time derivatives")
        a_kk = ka[np.ix_(keep, keep)]
        g = ka[np.ix_(drop, keep)]  # couples drop to keep-dot after integrating by parts
        v_kk = self.v[np.ix_(keep, keep)]
        v_dk = self.v[np.ix_(drop, keep)]
        v_dd = self.v[np.ix_(drop, drop)]
        inv = np.linalg.inv(v_dd)
        # stationarity: g kdot - v_dk k - v_dd d = 0
        mass = g.T @ inv @ g
        cross = -g.T @ inv @ v_dk - 0.5 * a_kk
        stiffness = v_kk - v_dk.T @ inv @ v_dk
        return SecondOrderLagrangian(mass, cross, stiffness)


@dataclass(frozen=True, eq=False)
class SecondOrderLagrangian:
    """L = 1/2 xdot^T M xdot + xdot^T G x - 1/2 x^T K x."""

    mass: np.ndarray
    cross: np.ndarray
    stiffness: np.ndarray

    def equations_of_motion(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(M, gyroscopic, K) with M xddot + gyroscopic xdot + K x = 0."""
        return self.mass, self.cross - self.cross.T, self.stiffness

    def acceleration_matrix(self) -> np.ndarray:
        """A with xddot = A x when the gyroscopic term vanishes."""
        return -np.linalg.solve(self.mass, self.stiffness)


def composite_lagrangian() -> FirstOrderLagrangian:
    """L+(q) + L-(r) over x = (q1, q2, r1, r2)."""
    plus, minus = ChiralOscillator(1).lagrangian(), ChiralOscillator(-1).lagrangian()
    z = np.zeros((2, 2))
    c = np.block([[plus.c, z], [z, minus.c]])
    v = np.block([[plus.v, z], [z, minus.v]])
    return FirstOrderLagrangian(c, v)


def sum_difference_map() -> np.ndarray:
    """(q, r) -> (Q, R) = (q + r, q - r) on x = (q1, q2, r1, r2)."""
    eye = np.eye(2)
    return np.block([[eye, eye], [eye, -eye]])


def target_lagrangian() -> FirstOrderLagrangian:
    """1/2 eps R Qdot - 1/4 (Q^2 + R^2) over y = (Q1, Q2, R1, R2)."""
    z = np.zeros((2, 2))
    c = np.block([[z, z], [EPS2, z]])
    return FirstOrderLagrangian(c, 0.5 * np.eye(4))


def decoupling_check(tol: float = EPS_ALG) -> VerificationReport:
    """Check the chiral-pair change of variables and the reduction to a planar oscillator."""
    report = VerificationReport("chiral-decoupling")
    one_dim = SecondOrderLagrangian(np.eye(1), np.zeros((1, 1)), np.eye(1))

    # each chiral Lagrangian reduces to the 1D oscillator
    for c in (ChiralOscillator(1), ChiralOscillator(-1)):
        for keep, drop in (([0], [1]), ([1], [0])):
            red = c.lagrangian().eliminate(keep, drop)
            m, gyro, k = red.equations_of_motion()
            res = max(np.abs(m - one_dim.mass).max(), np.abs(k - one_dim.stiffness).max(), np.abs(gyro).max())
            sign = "+" if c.chirality == 1 else "-"
            report.add(f"L{sign} -> 1D oscillator keeping q{keep[0] + 1}", res, tol)

    t_forward = sum_difference_map()
    for pair in range(2):
        sub = t_forward[np.ix_([pair, pair + 2], [pair, pair + 2])]
        report.add(f"det of (q,r)->(Q,R), pair {pair + 1} = -2", abs(np.linalg.det(sub) + 2.0), tol)

    transformed = composite_lagrangian().change_variables(np.linalg.inv(t_forward))
    target = target_lagrangian()
    report.add("kinetic term after change of variables", np.abs(transformed.kinetic - target.kinetic).max(), tol)
    report.add("potential 1/4 (Q^2 + R^2)", np.abs(transformed.v - target.v).max(), tol)

    q_idx, r_idx = [0, 1], [2, 3]
    for name, keep, drop in (("Q", q_idx, r_idx), ("R", r_idx, q_idx)):
        red = transformed.eliminate(keep, drop)
        m, gyro, k = red.equations_of_motion()
        report.add(f"eliminate -> mass 1/2 I in {name}", np.abs(m - 0.5 * np.eye(2)).max(), tol)
        report.add(f"eliminate -> stiffness 1/2 I in {name}", np.abs(k - 0.5 * np.eye(2)).max(), tol)
        report.add(f"no gyroscopic term in {name}", np.abs(gyro).max(), tol)
        report.add(f"{name}ddot = -{name}", np.abs(red.acceleration_matrix() + np.eye(2)).max(), tol)
        # normalisation relative to L = 1/2 (qdot^2 - q^2)
        report.add(f"overall normalisation 1/2 ({name})", abs(m[0, 0] / one_dim.mass[0, 0] - 0.5), tol)
    return report
