"""Seeded random instances for property checks and demos."""

from __future__ import annotations

import numpy as np

from .classical import ClassicalState, MarkovGenerator, TransitionMatrix
from .hybrid import HybridState
from .measurement import GeneralHamiltonian, MeasurementHamiltonian
from .quantum import QuantumState


def _rng(rng) -> np.random.Generator:
    return rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)


def random_complex(rng, shape) -> np.ndarray:
    rng = _rng(rng)
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def random_hermitian(rng, d: int, scale: float = 1.0) -> np.ndarray:
    a = random_complex(rng, (d, d))
    return scale * 0.5 * (a + a.conj().T)


def random_unit_vector(rng, d: int) -> np.ndarray:
    v = random_complex(rng, d)
    return v / np.linalg.norm(v)


def random_density_matrix(rng, d: int, rank: int | None = None) -> np.ndarray:
    """Ginibre-distributed density matrix of the given rank (full by default)."""
    a = random_complex(rng, (d, rank or d))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_quantum_state(rng, d: int, rank: int | None = None) -> QuantumState:
    return QuantumState(random_density_matrix(rng, d, rank))


def random_probabilities(rng, n: int) -> np.ndarray:
    return _rng(rng).dirichlet(np.ones(n))


def random_classical_state(rng, n: int) -> ClassicalState:
    rng = _rng(rng)
    return ClassicalState(random_probabilities(rng, n), rng.normal(size=n))


def random_hybrid(rng, n: int, d: int) -> HybridState:
    rng = _rng(rng)
    return HybridState(
        random_probabilities(rng, n),
        tuple(random_quantum_state(rng, d) for _ in range(n)),
    )


def random_generator(rng, n: int, rate: float = 1.0) -> MarkovGenerator:
    rng = _rng(rng)
    g = rate * rng.exponential(size=(n, n))
    np.fill_diagonal(g, 0.0)
    np.fill_diagonal(g, -g.sum(axis=0))
    return MarkovGenerator(g)


def random_transition(rng, n: int) -> TransitionMatrix:
    rng = _rng(rng)
    return TransitionMatrix(rng.dirichlet(np.ones(n), size=n).T)


def random_measurement_hamiltonian(rng, n: int, d: int, scale: float = 1.0) -> MeasurementHamiltonian:
    rng = _rng(rng)
    return MeasurementHamiltonian(
        scale * rng.normal(size=n),
        random_hermitian(rng, d, scale),
        tuple(random_hermitian(rng, d, scale) for _ in range(n)),
    )


def random_general_hamiltonian(
    rng, n: int, d: int, coupling: tuple[int, int] | None = None, scale: float = 1.0
) -> GeneralHamiltonian:
    """
    Random joint Hamiltonian.

    With ``coupling=(k, l)`` only that off-diagonal pair (and its adjoint)
    is populated besides the diagonal blocks; otherwise every block is.
    """
    rng = _rng(rng)
    if coupling is None:
        full = random_hermitian(rng, n * d, scale)
        return GeneralHamiltonian.from_matrix(full, n, d)
    k, l = coupling
    if k == l:
        raise ValueError("coupling must name two distinct pointers")
    w = np.zeros((n, n, d, d), dtype=complex)
    for i in range(n):
        w[i, i] = random_hermitian(rng, d, scale)
    w[k, l] = scale * random_complex(rng, (d, d))
    w[l, k] = w[k, l].conj().T
    return GeneralHamiltonian(w)
