"""
Quantum system states, unitary evolution and projective measurement.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ContractError, DimensionError, ImpossibleOutcomeError, StateValidationError
from .linalg import (
    DEFAULT_HBAR,
    DEFAULT_TOL,
    as_matrix,
    is_hermitian,
    ket_projector,
    max_abs,
    unitary_exp,
)

ZERO_EIGENVALUE = 1e-14
OUTCOME_TOL = 1e-12


def check_density_matrix(m, tol: float = DEFAULT_TOL, block: int | None = None) -> np.ndarray:
    """
    Return ``m`` as a complex array after checking it is a density matrix.

    Raises
    ------
    StateValidationError
        Carries ``block`` so callers assembling many blocks can report which
        one failed.
    """
    where = "" if block is None else f"block {block}: "
    try:
        a = as_matrix(m)
    except (DimensionError, ContractError) as exc:
        raise StateValidationError(f"{where}{exc}", block) from exc
    if a.shape[0] != a.shape[1]:
        raise StateValidationError(f"{where}density matrix must be square", block)
    if not is_hermitian(a, tol):
        raise StateValidationError(
            f"{where}not Hermitian (max |rho - rho^dagger| = {max_abs(a - a.conj().T):.3e})",
            block,
        )
    tr = np.trace(a)
    if abs(tr - 1.0) > tol:
        raise StateValidationError(f"{where}trace is {tr.real:.12g}, expected 1", block)
    lam_min = np.linalg.eigvalsh(0.5 * (a + a.conj().T))[0]
    if lam_min < -tol:
        raise StateValidationError(
            f"{where}not positive semidefinite (min eigenvalue {lam_min:.3e})", block
        )
    return a


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Density matrix ``rho_S`` of the measured system."""

    matrix: np.ndarray

    def __post_init__(self):
        a = check_density_matrix(self.matrix).copy()
        a.setflags(write=False)
        object.__setattr__(self, "matrix", a)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def pure(cls, vector) -> "QuantumState":
        v = np.asarray(vector, dtype=complex).reshape(-1)
        norm = np.linalg.norm(v)
        if norm == 0:
            raise ContractError("cannot build a pure state from the zero vector")
        return cls(ket_projector(v / norm))

    @classmethod
    def maximally_mixed(cls, d: int) -> "QuantumState":
        return cls(np.eye(d, dtype=complex) / d)

    def spectrum(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    def __eq__(self, other):
        if not isinstance(other, QuantumState):
            return NotImplemented
        return self.matrix.shape == other.matrix.shape and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.matrix.tobytes())


@dataclass(frozen=True, eq=False)
class MeasurementBasis:
    """
    Orthonormal measurement basis ``{|phi_m>}``.

    ``vectors`` holds the basis vectors as columns. ``labels`` name the
    outcomes for reporting; they default to ``"0", "1", ...``.
    """

    vectors: np.ndarray
    labels: tuple[str, ...] = field(default=())
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2 or v.shape[0] != v.shape[1] or v.shape[0] < 1:
            raise ContractError(f"basis needs d vectors of length d, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ContractError("basis vectors must be finite")
        gram = v.conj().T @ v
        err = max_abs(gram - np.eye(v.shape[0]))
        if err > self.tol:
            raise ContractError(f"basis is not orthonormal (max Gram error {err:.3e})")
        labels = tuple(str(x) for x in self.labels) or tuple(str(m) for m in range(v.shape[0]))
        if len(labels) != v.shape[0]:
            raise ContractError(f"{len(labels)} labels for {v.shape[0]} basis vectors")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)
        object.__setattr__(self, "labels", labels)

    @property
    def dimension(self) -> int:
        return self.vectors.shape[0]

    def vector(self, m: int) -> np.ndarray:
        if not 0 <= m < self.dimension:
            raise IndexError(f"outcome {m} out of range for a {self.dimension}-vector basis")
        return self.vectors[:, m]

    def projector(self, m: int) -> np.ndarray:
        return ket_projector(self.vector(m))

    @classmethod
    def computational(cls, d: int) -> "MeasurementBasis":
        return cls(np.eye(d, dtype=complex))

    @classmethod
    def plus_minus(cls) -> "MeasurementBasis":
        s = 1 / np.sqrt(2)
        return cls(np.array([[s, s], [s, -s]], dtype=complex), labels=("+", "-"))

    @classmethod
    def eigenbasis(cls, observable, labels=()) -> "MeasurementBasis":
        """Eigenvectors of a Hermitian observable, ascending eigenvalue order."""
        a = as_matrix(observable)
        if not is_hermitian(a):
            raise ContractError("observable must be Hermitian")
        _, v = np.linalg.eigh(0.5 * (a + a.conj().T))
        return cls(v, labels=labels)


def _check_dims(state: QuantumState, d: int) -> None:
    if state.dimension != d:
        raise DimensionError(f"state of dimension {state.dimension} vs operator of dimension {d}")


def von_neumann_evolve(
    state: QuantumState, h, t: float, hbar: float = DEFAULT_HBAR
) -> QuantumState:
    """``rho(t) = U rho U^dagger`` with ``U = exp(-i h t / hbar)``."""
    u = unitary_exp(h, t, hbar)
    _check_dims(state, u.shape[0])
    rho = u @ state.matrix @ u.conj().T
    return QuantumState(0.5 * (rho + rho.conj().T))


def born_probabilities(state: QuantumState, basis: MeasurementBasis) -> np.ndarray:
    """All ``<phi_m| rho |phi_m>`` at once, clamped to ``[0, 1]``."""
    _check_dims(state, basis.dimension)
    v = basis.vectors
    p = np.einsum("km,kl,lm->m", v.conj(), state.matrix, v).real
    return np.clip(p, 0.0, 1.0)


def born_probability(state: QuantumState, basis: MeasurementBasis, m: int) -> float:
    """Born-rule probability of outcome ``m``."""
    phi = basis.vector(m)
    _check_dims(state, basis.dimension)
    p = float(np.real(phi.conj() @ state.matrix @ phi))
    return min(1.0, max(0.0, p))


def reduce_state(state: QuantumState, basis: MeasurementBasis, m: int) -> QuantumState:
    """
    Projective collapse onto ``|phi_m>``.

    Raises
    ------
    ImpossibleOutcomeError
        If outcome ``m`` has probability at most 1e-12.
    """
    p = born_probability(state, basis, m)
    if p <= OUTCOME_TOL:
        raise ImpossibleOutcomeError(f"outcome {m} has probability {p:.3e}")
    return QuantumState(basis.projector(m))


def entropy_from_spectrum(eigenvalues, k_const: float = 1.0) -> float:
    """
    ``-K sum lam ln lam`` over eigenvalues above 1e-14.

    Eigenvalues within 1e-14 of one are taken as exactly one, so pure
    states give exactly zero.
    """
    lam = np.asarray(eigenvalues, dtype=float)
    lam = lam[lam > ZERO_EIGENVALUE]
    lam = np.where(np.abs(lam - 1.0) <= ZERO_EIGENVALUE, 1.0, lam)
    return float(max(0.0, -k_const * np.sum(lam * np.log(lam))))


def von_neumann_entropy(state: QuantumState, k_const: float = 1.0) -> float:
    return entropy_from_spectrum(state.spectrum(), k_const)
