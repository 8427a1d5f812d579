"""
Truncated multi-mode bosonic Fock spaces.

Each mode keeps occupations 0..N.  Products of ladder operators are built as
exact compressions: the product acts on the untruncated space and only the
final state is required to lie inside the cutoff.  This keeps operator
identities that follow from the canonical commutation relations (for example
``a a^dag = a^dag a + 1``) exact on every matrix element, so quadratic
operators written in different orderings agree entry by entry.

Matrix products of two compressed operators are *not* compressions of the
product; ``safe_commutator`` reports the total-occupation range on which such
a product is still exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

EPS_FOCK = 1e-10

LOWER = "lower"
RAISE = "raise"


class CutoffTooSmallError(ValueError):
    """No occupation subspace is free of truncation effects."""


@dataclass(frozen=True)
class FockSpace:
    modes: int
    cutoff: int

    def __post_init__(self):
        if self.modes < 1:
            raise ValueError("modes must be >= 1")
        if self.cutoff < 1:
            raise ValueError("cutoff must be >= 1")

    @property
    def dim(self) -> int:
        return (self.cutoff + 1) ** self.modes

    @cached_property
    def occupations(self) -> np.ndarray:
        """(dim, modes) array of occupation tuples in lexicographic order."""
        states = itertools.product(range(self.cutoff + 1), repeat=self.modes)
        return np.array(list(states), dtype=np.int64).reshape(self.dim, self.modes)

    @cached_property
    def total_occupation(self) -> np.ndarray:
        return self.occupations.sum(axis=1)

    def index(self, state: Sequence[int]) -> int:
        if len(state) != self.modes or any(not 0 <= n <= self.cutoff for n in state):
            raise ValueError(f"state {tuple(state)} outside the space")
        return int(np.ravel_multi_index(tuple(state), (self.cutoff + 1,) * self.modes))

    def safe_indices(self, max_total: int) -> np.ndarray:
        """Basis indices with total occupation <= max_total."""
        return np.flatnonzero(self.total_occupation <= max_total)

    def check_mode(self, mode: int) -> None:
        if not 1 <= mode <= self.modes:
            raise ValueError(f"mode must be in 1..{self.modes}, got {mode!r}")

    def basis_vector(self, state: Sequence[int]) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[self.index(state)] = 1.0
        return v


@dataclass(frozen=True, eq=False)
class FockOperator:
    """Operator on a truncated Fock space.

    ``shifts`` holds the possible changes of total occupation the operator
    can produce, tracked symbolically through sums and products.
    """

    space: FockSpace
    matrix: sp.csr_matrix
    shifts: frozenset = frozenset({0})

    def __post_init__(self):
        m = sp.csr_matrix(self.matrix, dtype=complex)
        if m.shape != (self.space.dim, self.space.dim):
            raise ValueError(f"matrix shape {m.shape} does not match space dim {self.space.dim}")
        m.eliminate_zeros()
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "shifts", frozenset(self.shifts))

    # -- construction helpers
    @classmethod
    def identity(cls, space: FockSpace) -> "FockOperator":
        return cls(space, sp.identity(space.dim, dtype=complex, format="csr"), frozenset({0}))

    @classmethod
    def zero(cls, space: FockSpace) -> "FockOperator":
        return cls(space, sp.csr_matrix((space.dim, space.dim), dtype=complex), frozenset({0}))

    # -- arithmetic
    def _check(self, other: "FockOperator") -> None:
        if not isinstance(other, FockOperator):
            raise TypeError(f"expected FockOperator, got {type(other).__name__}")
        if other.space != self.space:
            raise ValueError(f"operators live on different spaces: {self.space} vs {other.space}")

    def __add__(self, other):
        if isinstance(other, (int, float, complex)) and other == 0:
            return self
        self._check(other)
        return FockOperator(self.space, self.matrix + other.matrix, self.shifts | other.shifts)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, float, complex, np.number)):
            return NotImplemented
        return FockOperator(self.space, self.matrix * complex(scalar), self.shifts)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1.0 / scalar)

    def __matmul__(self, other):
        self._check(other)
        shifts = frozenset(a + b for a in self.shifts for b in other.shifts)
        return FockOperator(self.space, self.matrix @ other.matrix, shifts)

    def dag(self) -> "FockOperator":
        return FockOperator(self.space, self.matrix.conj().T.tocsr(), frozenset(-s for s in self.shifts))

    # -- inspection
    @property
    def max_shift(self) -> int:
        return max(abs(s) for s in self.shifts)

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()

    def restrict(self, max_total: int) -> np.ndarray:
        """Dense block on states with total occupation <= max_total."""
        idx = self.space.safe_indices(max_total)
        return self.matrix[idx][:, idx].toarray()

    def is_hermitian(self, tol: float = EPS_FOCK) -> bool:
        diff = self.matrix - self.matrix.conj().T
        return diff.nnz == 0 or float(abs(diff).max()) < tol

    def matrix_element(self, bra: Sequence[int], ket: Sequence[int]) -> complex:
        return complex(self.matrix[self.space.index(bra), self.space.index(ket)])

    def is_zero(self) -> bool:
        """Exact test: no stored nonzero entries."""
        m = self.matrix.copy()
        m.eliminate_zeros()
        return m.nnz == 0


def ladder_product(space: FockSpace, factors: Sequence[tuple[int, str]]) -> FockOperator:
    """Exact compression of a product of ladder operators.

    ``factors`` is read left to right as written, e.g. ``[(1, RAISE), (2, LOWER)]``
    is a1^dag a2; the rightmost factor acts first.  Modes are 1-based.
    """
    for mode, kind in factors:
        space.check_mode(mode)
        if kind not in (LOWER, RAISE):
            raise ValueError(f"kind must be {LOWER!r} or {RAISE!r}, got {kind!r}")
    occ = space.occupations.copy()
    coef = np.ones(space.dim)
    for mode, kind in reversed(factors):
        col = mode - 1
        if kind == LOWER:
            coef *= np.sqrt(np.clip(occ[:, col], 0, None))
            occ[:, col] -= 1
        else:
            coef *= np.sqrt(np.clip(occ[:, col] + 1, 0, None))
            occ[:, col] += 1
    keep = (coef != 0) & np.all((occ >= 0) & (occ <= space.cutoff), axis=1)
    src = np.flatnonzero(keep)
    dst = np.ravel_multi_index(occ[keep].T, (space.cutoff + 1,) * space.modes) if src.size else src
    mat = sp.csr_matrix((coef[keep].astype(complex), (dst, src)), shape=(space.dim, space.dim))
    shift = sum(1 if kind == RAISE else -1 for _, kind in factors)
    return FockOperator(space, mat, frozenset({shift}))


def ladder(space: FockSpace, mode: int, kind: str) -> FockOperator:
    """a (kind='lower') or a^dag (kind='raise') on ``mode``; the N -> N+1 element is dropped."""
    return ladder_product(space, [(mode, kind)])


def number(space: FockSpace, mode: int) -> FockOperator:
    return ladder_product(space, [(mode, RAISE), (mode, LOWER)])


_SQRT_HALF = 1.0 / np.sqrt(2.0)


def quadrature_terms(mode: int, kind: str) -> list[tuple[complex, tuple[int, str]]]:
    """q = (a + a^dag)/sqrt2 and p = -i (a - a^dag)/sqrt2 as ladder combinations."""
    if kind == "q":
        return [(_SQRT_HALF, (mode, LOWER)), (_SQRT_HALF, (mode, RAISE))]
    if kind == "p":
        return [(-1j * _SQRT_HALF, (mode, LOWER)), (1j * _SQRT_HALF, (mode, RAISE))]
    raise ValueError(f"quadrature kind must be 'q' or 'p', got {kind!r}")


def quadrature(space: FockSpace, mode: int, kind: str) -> FockOperator:
    space.check_mode(mode)
    return sum(c * ladder(space, *f) for c, f in quadrature_terms(mode, kind))


def quadrature_product(space: FockSpace, first: tuple[int, str], second: tuple[int, str]) -> FockOperator:
    """Exact compression of the product of two quadratures, e.g. ((1, 'q'), (2, 'p'))."""
    out = FockOperator.zero(space)
    for c1, f1 in quadrature_terms(*first):
        for c2, f2 in quadrature_terms(*second):
            out = out + (c1 * c2) * ladder_product(space, [f1, f2])
    return out


def linear_combination(space: FockSpace, terms: Iterable[tuple[complex, Sequence[tuple[int, str]]]]) -> FockOperator:
    """Sum of coefficient * ladder_product(factors)."""
    out = FockOperator.zero(space)
    for coef, factors in terms:
        if coef != 0:
            out = out + coef * ladder_product(space, factors)
    return out


@dataclass(frozen=True)
class SafeCommutator:
    result: FockOperator
    safe_cutoff: int

    def restrict(self) -> np.ndarray:
        return self.result.restrict(self.safe_cutoff)


def safe_commutator(x: FockOperator, y: FockOperator) -> SafeCommutator:
    """xy - yx with the largest total occupation K on which it is exact.

    K = N - (max shift of x + max shift of y).
    """
    x._check(y)
    k = x.space.cutoff - (x.max_shift + y.max_shift)
    if k < 0:
        raise CutoffTooSmallError(
            f"cutoff {x.space.cutoff} leaves no safe subspace for shifts {x.max_shift}+{y.max_shift}"
        )
    return SafeCommutator(x @ y - y @ x, k)


def safe_distance(x: FockOperator, y, max_total: int) -> float:
    """Largest entrywise deviation between x and y on the total-occupation block <= max_total."""
    yb = y.restrict(max_total) if isinstance(y, FockOperator) else np.asarray(y)
    return float(np.abs(x.restrict(max_total) - yb).max(initial=0.0))


def distance(x: FockOperator, y: FockOperator) -> float:
    """Largest entrywise deviation over the whole truncated space."""
    x._check(y)
    diff = x.matrix - y.matrix
    return float(abs(diff).max()) if diff.nnz else 0.0


def spectrum(x: FockOperator, tol: float = EPS_FOCK) -> np.ndarray:
    if not x.is_hermitian(tol):
        raise ValueError("spectrum requires a hermitian operator")
    m = x.toarray()
    return np.sort(np.linalg.eigvalsh(0.5 * (m + m.conj().T)))


def multiplicities(values: Sequence[float], tol: float = 1e-8) -> list[tuple[float, int]]:
    """Group sorted eigenvalues that agree within ``tol``; returns (value, count) rows."""
    rows: list[list] = []
    for v in np.sort(np.asarray(values, dtype=float)):
        if rows and abs(v - rows[-1][0]) < tol:
            rows[-1][1] += 1
        else:
            rows.append([v, 1])
    out = []
    for v, count in rows:
        v = round(float(v), 9)
        out.append((v + 0.0, count))
    return out
