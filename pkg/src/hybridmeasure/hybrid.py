"""
Quantum-classical joint states ``rho_AS = sum_i p_i |E_i><E_i| (x) rho_S^(i)``.

The native representation is the decomposition itself: a weight vector and
one conditional system state per pointer. Cross-pointer coherences cannot
be represented, so every :class:`HybridState` is classical on the apparatus
side and unentangled by construction. The full ``(n d) x (n d)`` matrix is
only built by :meth:`HybridState.materialize`, mainly for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .classical import ClassicalState, TransitionMatrix, clean_probabilities
from .errors import (
    ClassicalityError,
    DimensionError,
    StateValidationError,
    UndefinedConditionalError,
    ValidationError,
)
from .linalg import DEFAULT_TOL, as_matrix, is_hermitian, max_abs
from .quantum import QuantumState, check_density_matrix

# Weights at or below this are treated as zero: their conditional state is
# undetermined and kept absent.
WEIGHT_FLOOR = 1e-12


@dataclass(frozen=True, eq=False)
class HybridState:
    """
    Block-diagonal hybrid state.

    Parameters
    ----------
    weights : array_like
        Pointer probabilities ``p_i``; nonnegative, summing to one.
    blocks : sequence of QuantumState or None
        Conditional states ``rho_S^(i)``. ``None`` marks an absent block and
        is only allowed where ``p_i <= 1e-12``.
    """

    weights: np.ndarray
    blocks: tuple

    def __post_init__(self):
        p = clean_probabilities(self.weights)
        blocks = tuple(self.blocks)
        if len(blocks) != p.size:
            raise DimensionError(f"{len(blocks)} blocks for {p.size} weights")
        dims = set()
        for i, (w, b) in enumerate(zip(p, blocks)):
            if b is None:
                if w > WEIGHT_FLOOR:
                    raise StateValidationError(
                        f"block {i}: missing conditional state for weight {w:.3e}", i
                    )
                continue
            if not isinstance(b, QuantumState):
                raise StateValidationError(f"block {i}: expected a QuantumState", i)
            dims.add(b.dimension)
        if not dims:
            raise ValidationError("hybrid state has no conditional blocks")
        if len(dims) > 1:
            raise DimensionError(f"conditional blocks have mixed dimensions {sorted(dims)}")
        p = p.copy()
        p.setflags(write=False)
        object.__setattr__(self, "weights", p)
        object.__setattr__(self, "blocks", blocks)

    @property
    def apparatus_dim(self) -> int:
        return self.weights.size

    @property
    def system_dim(self) -> int:
        return next(b.dimension for b in self.blocks if b is not None)

    def present(self):
        """Iterate ``(i, p_i, rho_S^(i))`` over pointers carrying a block."""
        for i, (w, b) in enumerate(zip(self.weights, self.blocks)):
            if b is not None:
                yield i, float(w), b

    def materialize(self) -> np.ndarray:
        n, d = self.apparatus_dim, self.system_dim
        m = np.zeros((n * d, n * d), dtype=complex)
        for i, w, b in self.present():
            m[i * d:(i + 1) * d, i * d:(i + 1) * d] = w * b.matrix
        return m

    def registered_pointer(self, tol: float = DEFAULT_TOL) -> int | None:
        """Index ``l`` if the apparatus is definitely in ``|E_l>``, else ``None``."""
        l = int(np.argmax(self.weights))
        return l if abs(self.weights[l] - 1.0) <= tol else None


def assemble_hybrid(weights: Sequence[float], blocks: Sequence) -> HybridState:
    """
    Build ``sum_i p_i |E_i><E_i| (x) rho_S^(i)`` from weights and blocks.

    Blocks may be :class:`QuantumState` objects, raw matrices, or ``None``
    for zero-weight pointers. A block whose weight is exactly zero is
    dropped.

    Raises
    ------
    NormalizationError
        Weights do not sum to one.
    StateValidationError
        A block with nonzero weight is not a density matrix; ``.block``
        holds its index.
    """
    w = np.asarray(weights, dtype=float).reshape(-1)
    if len(blocks) != w.size:
        raise DimensionError(f"{len(blocks)} blocks for {w.size} weights")
    states = []
    for i, (wi, b) in enumerate(zip(w, blocks)):
        if b is None or wi == 0.0:
            states.append(None)
        elif isinstance(b, QuantumState):
            states.append(b)
        else:
            states.append(QuantumState(check_density_matrix(b, block=i)))
    return HybridState(w, tuple(states))


def product_state(block: QuantumState, n: int = 1, pointer: int = 0) -> HybridState:
    """Apparatus definitely in ``|E_pointer>`` with the system in ``block``."""
    w = np.zeros(n)
    w[pointer] = 1.0
    return HybridState(w, tuple(block if i == pointer else None for i in range(n)))


def validate_hybrid_matrix(m, n: int, d: int, tol: float = DEFAULT_TOL) -> HybridState:
    """
    Parse a full ``(n d) x (n d)`` matrix as a hybrid state.

    The matrix must be Hermitian, have unit trace and be positive
    semidefinite, and every off-diagonal pointer block ``(i, j)``, ``i != j``,
    must vanish within ``tol``. Weights are the block traces; conditional
    states are the normalized diagonal blocks.

    Raises
    ------
    ClassicalityError
        First offending off-diagonal block, with its max magnitude.
    StateValidationError
        Hermiticity, trace or positivity failure.
    """
    a = as_matrix(m)
    if a.shape != (n * d, n * d):
        raise DimensionError(f"matrix of shape {a.shape} is not ({n}*{d}) x ({n}*{d})")
    if not is_hermitian(a, tol):
        raise StateValidationError(
            f"joint matrix not Hermitian (max deviation {max_abs(a - a.conj().T):.3e})"
        )
    tr = np.trace(a).real
    if abs(tr - 1.0) > tol:
        raise StateValidationError(f"joint trace is {tr:.12g}, expected 1")
    blocks4 = a.reshape(n, d, n, d)
    for i in range(n):
        for j in range(n):
            if i != j:
                mag = max_abs(blocks4[i, :, j, :])
                if mag > tol:
                    raise ClassicalityError((i, j), mag)
    lam_min = np.linalg.eigvalsh(0.5 * (a + a.conj().T))[0]
    if lam_min < -tol:
        raise StateValidationError(f"joint matrix not positive (min eigenvalue {lam_min:.3e})")
    weights = np.array([np.trace(blocks4[i, :, i, :]).real for i in range(n)])
    weights = np.clip(weights, 0.0, None)
    states = []
    for i in range(n):
        if weights[i] <= WEIGHT_FLOOR:
            states.append(None)
            continue
        b = blocks4[i, :, i, :] / weights[i]
        b = 0.5 * (b + b.conj().T)
        # Joint positivity already implies block positivity; the check here
        # only guards the normalization, whose error grows as 1/p_i.
        check_density_matrix(b, tol=tol / weights[i], block=i)
        states.append(QuantumState(b / b.trace().real))
    return HybridState(weights / weights.sum(), tuple(states))


def pointer_probability(state: HybridState, i: int) -> float:
    if not 0 <= i < state.apparatus_dim:
        raise IndexError(f"pointer {i} out of range for {state.apparatus_dim} pointers")
    return float(state.weights[i])


def conditional_state(state: HybridState, i: int) -> QuantumState:
    """
    Conditional system state given pointer ``i``.

    Raises
    ------
    UndefinedConditionalError
        If ``p_i <= 1e-12``.
    """
    p = pointer_probability(state, i)
    b = state.blocks[i]
    if p <= WEIGHT_FLOOR or b is None:
        raise UndefinedConditionalError(f"pointer {i} has weight {p:.3e}")
    return b


def reduce_to_apparatus(state: HybridState, energies=None) -> ClassicalState:
    return ClassicalState(state.weights, energies)


def reduce_to_system(state: HybridState) -> QuantumState:
    d = state.system_dim
    rho = np.zeros((d, d), dtype=complex)
    for _, w, b in state.present():
        rho += w * b.matrix
    return QuantumState(rho / rho.trace().real)


def apply_pointer_channel(state: HybridState, t_matrix: TransitionMatrix) -> HybridState:
    """
    Apply a classical stochastic map to the apparatus of a hybrid state.

    Equivalent to the Kraus form ``sum_j (K_j (x) 1) rho_AS (K_j (x) 1)^dagger``:
    pointer ``i`` hands weight ``T[j, i] p_i`` to pointer ``j``, carrying its
    conditional state along, so block ``j`` becomes the corresponding
    weighted mixture.
    """
    n = state.apparatus_dim
    if t_matrix.dimension != n:
        raise DimensionError(f"transition matrix of dimension {t_matrix.dimension} for {n} pointers")
    T = t_matrix.entries
    d = state.system_dim
    new_w = T @ state.weights
    blocks = []
    for j in range(n):
        if new_w[j] <= WEIGHT_FLOOR:
            blocks.append(None)
            continue
        acc = np.zeros((d, d), dtype=complex)
        for i, w, b in state.present():
            acc += T[j, i] * w * b.matrix
        tr = acc.trace().real
        blocks.append(QuantumState(acc / tr) if tr > WEIGHT_FLOOR else None)
    new_w = np.where([b is None for b in blocks], 0.0, new_w)
    return HybridState(new_w / new_w.sum(), tuple(blocks))
