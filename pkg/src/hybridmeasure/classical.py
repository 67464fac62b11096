"""
Classical apparatus: diagonal density matrices over a fixed pointer basis.

A classical state is stored as its probability vector; the matrix view
``rho_A = sum_i p_i |E_i><E_i|`` is materialized on demand, so it is
diagonal by construction. Stochastic evolution is either a transition
matrix ``T`` (columns sum to one, ``T[j, i]`` = probability of ``i -> j``)
or a Markov generator ``G`` with ``T(t) = exp(G t)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, NormalizationError, ValidationError
from .linalg import DEFAULT_TOL, general_exp

ROUNDOFF_TOL = 1e-12


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def clean_probabilities(p, tol: float = DEFAULT_TOL) -> np.ndarray:
    """
    Validate a probability vector.

    Entries in ``[-1e-12, 0)`` are treated as roundoff: they are clamped to
    zero and the vector is renormalized. Anything more negative, or a sum
    further than ``tol`` from one, is an error.
    """
    p = np.asarray(p, dtype=float).reshape(-1)
    if p.size == 0:
        raise ValidationError("probability vector is empty")
    if not np.all(np.isfinite(p)):
        raise ValidationError("probabilities must be finite")
    if np.any(p < -ROUNDOFF_TOL):
        i = int(np.argmin(p))
        raise ValidationError(f"negative probability p[{i}] = {p[i]:.3e}")
    if abs(p.sum() - 1.0) > tol:
        raise NormalizationError(f"probabilities sum to {p.sum():.12g}, expected 1")
    if np.any(p < 0):
        p = np.clip(p, 0.0, None)
        p = p / p.sum()
    return p


@dataclass(frozen=True)
class ClassicalState:
    """Epistemic distribution over pointer states ``|E_i>``."""

    probabilities: np.ndarray
    energies: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        p = clean_probabilities(self.probabilities)
        e = np.zeros(p.size) if self.energies is None else np.asarray(self.energies, dtype=float).reshape(-1)
        if e.size != p.size:
            raise DimensionError(f"{e.size} energies for {p.size} pointer states")
        object.__setattr__(self, "probabilities", _frozen(p.copy()))
        object.__setattr__(self, "energies", _frozen(e.copy()))

    @property
    def pointer_count(self) -> int:
        return self.probabilities.size

    def matrix(self) -> np.ndarray:
        return np.diag(self.probabilities).astype(complex)

    @classmethod
    def definite(cls, n: int, i: int, energies=None) -> "ClassicalState":
        p = np.zeros(n)
        p[i] = 1.0
        return cls(p, energies)

    @classmethod
    def uniform(cls, n: int, energies=None) -> "ClassicalState":
        return cls(np.full(n, 1.0 / n), energies)

    def with_probabilities(self, p) -> "ClassicalState":
        return ClassicalState(p, self.energies)


@dataclass(frozen=True)
class MarkovGenerator:
    """Rate matrix: nonnegative off-diagonal, columns summing to zero."""

    entries: np.ndarray
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        g = np.asarray(self.entries, dtype=float)
        if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] < 1:
            raise DimensionError(f"generator must be square, got shape {g.shape}")
        off = g - np.diag(np.diag(g))
        if np.any(off < -self.tol):
            j, i = np.unravel_index(np.argmin(off), off.shape)
            raise ValidationError(f"negative rate G[{j}, {i}] = {g[j, i]:.3e}")
        sums = g.sum(axis=0)
        bad = np.flatnonzero(np.abs(sums) > self.tol)
        if bad.size:
            raise ValidationError(
                f"generator column {bad[0]} sums to {sums[bad[0]]:.3e}, expected 0"
            )
        object.__setattr__(self, "entries", _frozen(g.copy()))

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    def transition(self, t: float) -> "TransitionMatrix":
        """``T(t) = exp(G t)``, with roundoff-level negatives clipped."""
        if t < 0:
            raise ValueError("Markov evolution is only defined for t >= 0")
        T = general_exp(self.entries, t).real
        T = np.where((T < 0) & (T > -ROUNDOFF_TOL), 0.0, T)
        return TransitionMatrix(T)


@dataclass(frozen=True)
class TransitionMatrix:
    """Column-stochastic matrix ``T[j, i] = P(i -> j)``."""

    entries: np.ndarray
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        T = np.asarray(self.entries, dtype=float)
        if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] < 1:
            raise DimensionError(f"transition matrix must be square, got {T.shape}")
        neg = np.argwhere(T < -ROUNDOFF_TOL)
        if neg.size:
            j, i = neg[0]
            raise ValidationError(
                f"column {i}: negative transition probability T[{j}, {i}] = {T[j, i]:.3e}"
            )
        sums = T.sum(axis=0)
        bad = np.flatnonzero(np.abs(sums - 1.0) > self.tol)
        if bad.size:
            raise ValidationError(
                f"column {bad[0]} sums to {sums[bad[0]]:.12g}, expected 1"
            )
        object.__setattr__(self, "entries", _frozen(np.clip(T, 0.0, None)))

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class ClassicalObservable:
    """Diagonal observable ``F = sum_i f_i |E_i><E_i|``."""

    values: np.ndarray

    def __post_init__(self):
        f = np.asarray(self.values, dtype=float).reshape(-1)
        if f.size == 0:
            raise DimensionError("observable needs at least one value")
        object.__setattr__(self, "values", _frozen(f.copy()))

    @property
    def dimension(self) -> int:
        return self.values.size

    def matrix(self) -> np.ndarray:
        return np.diag(self.values).astype(complex)


def kraus_from_transition(t_matrix: TransitionMatrix) -> list[np.ndarray]:
    """
    Classical Kraus operators ``K_j = sum_i sqrt(T[j, i]) |E_j><E_i|``.

    ``K_j`` has a single nonzero row ``j``. The set preserves the trace of
    every diagonal ``rho_A`` (``diag(sum_j K_j^dagger K_j) = 1``), which is all
    a classical state needs; off-diagonal entries of ``sum_j K_j^dagger K_j``
    are ``sum_j sqrt(T[j, i] T[j, k])`` and generally nonzero. Use
    :func:`elementary_kraus` for an operator-complete set.
    """
    if not isinstance(t_matrix, TransitionMatrix):
        t_matrix = TransitionMatrix(t_matrix)
    T = t_matrix.entries
    n = T.shape[0]
    kraus = []
    for j in range(n):
        k = np.zeros((n, n), dtype=complex)
        k[j, :] = np.sqrt(T[j, :])
        kraus.append(k)
    return kraus


def elementary_kraus(t_matrix: TransitionMatrix) -> list[np.ndarray]:
    """
    The ``n**2`` operators ``sqrt(T[j, i]) |E_j><E_i|`` (zero ones omitted).

    Same action as :func:`kraus_from_transition` on diagonal states, and
    complete on the whole operator space: ``sum K^dagger K = I``.
    """
    if not isinstance(t_matrix, TransitionMatrix):
        t_matrix = TransitionMatrix(t_matrix)
    T = t_matrix.entries
    n = T.shape[0]
    kraus = []
    for j, i in zip(*np.nonzero(T)):
        k = np.zeros((n, n), dtype=complex)
        k[j, i] = np.sqrt(T[j, i])
        kraus.append(k)
    return kraus


def apply_kraus(kraus: list[np.ndarray], rho: np.ndarray) -> np.ndarray:
    """Operator-sum form ``sum_j K_j rho K_j^dagger``."""
    return sum(k @ rho @ k.conj().T for k in kraus)


def apply_channel(state: ClassicalState, t_matrix: TransitionMatrix) -> ClassicalState:
    """Push the distribution through ``T``: ``p'_j = sum_i T[j, i] p_i``."""
    if t_matrix.dimension != state.pointer_count:
        raise DimensionError(
            f"transition matrix of dimension {t_matrix.dimension} "
            f"applied to {state.pointer_count} pointer states"
        )
    return state.with_probabilities(t_matrix.entries @ state.probabilities)


def evolve_master(state: ClassicalState, gen: MarkovGenerator, t: float) -> ClassicalState:
    """Solve ``dp/dt = G p`` over time ``t >= 0``."""
    if gen.dimension != state.pointer_count:
        raise DimensionError(
            f"generator of dimension {gen.dimension} applied to "
            f"{state.pointer_count} pointer states"
        )
    if t < 0:
        raise ValueError("Markov evolution is only defined for t >= 0")
    p = general_exp(gen.entries, t).real @ state.probabilities
    return state.with_probabilities(p)


def detailed_balance_holds(
    gen: MarkovGenerator, state: ClassicalState, tol: float = 1e-12
) -> bool:
    """True iff every pairwise flux balances: ``G[j, i] p_i == G[i, j] p_j``."""
    if gen.dimension != state.pointer_count:
        raise DimensionError("generator and state dimensions differ")
    flux = gen.entries * state.probabilities[np.newaxis, :]
    imbalance = np.abs(flux - flux.T)
    np.fill_diagonal(imbalance, 0.0)
    return bool(np.max(imbalance) <= tol)


def shannon_information(state: ClassicalState, k_const: float = 1.0) -> float:
    """``-K sum_i p_i ln p_i`` with ``0 ln 0 = 0``."""
    p = state.probabilities
    p = p[p > 0]
    return float(max(0.0, -k_const * np.sum(p * np.log(p))))


def classical_expectation(obs: ClassicalObservable, state: ClassicalState) -> float:
    if obs.dimension != state.pointer_count:
        raise DimensionError("observable and state dimensions differ")
    return float(np.dot(obs.values, state.probabilities))
