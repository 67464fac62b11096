"""
Measurement interaction and completion.

The classicality-preserving joint Hamiltonian is

    H_AS = sum_i E_i |E_i><E_i| (x) 1 + 1 (x) H_S + sum_i |E_i><E_i| (x) V_i

which commutes with every pointer projector, so pointer ``j`` only evolves
its conditional state under ``H_S + V_j`` and the weights never move. A
general Hamiltonian ``sum_ij |E_i><E_j| (x) W_ij`` with a nonzero
off-diagonal block breaks this: starting from ``|E_k> (x) |phi>`` the
coherence ``<E_k| rho_A(t) |E_l>`` grows as ``(i t / hbar) <phi|W_kl|phi>``.

Completion is two explicit steps: :func:`register` reveals a pointer with
probability ``p_l``; :func:`complete_measurement` then reduces the revealed
conditional state onto a basis vector with Born probability ``pi_m^(l)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ContractError, DimensionError, ImpossibleOutcomeError, ValidationError
from .hybrid import WEIGHT_FLOOR, HybridState, product_state, reduce_to_apparatus, reduce_to_system
from .linalg import (
    DEFAULT_HBAR,
    DEFAULT_TOL,
    as_matrix,
    basis_projector,
    commutator,
    is_hermitian,
    kron,
    ket_projector,
    max_abs,
    partial_trace_system,
    unitary_exp,
)
from .classical import shannon_information
from .quantum import (
    MeasurementBasis,
    QuantumState,
    born_probabilities,
    entropy_from_spectrum,
    von_neumann_entropy,
    von_neumann_evolve,
)


def _readonly(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class MeasurementHamiltonian:
    """Classicality-compatible joint Hamiltonian as ``(E_i, H_S, V_i)``."""

    energies: np.ndarray
    system_hamiltonian: np.ndarray
    potentials: tuple
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        e = np.asarray(self.energies, dtype=float).reshape(-1)
        h_s = as_matrix(self.system_hamiltonian)
        if h_s.shape[0] != h_s.shape[1]:
            raise DimensionError("H_S must be square")
        if not is_hermitian(h_s, self.tol):
            raise ContractError("system Hamiltonian H_S is not Hermitian")
        pots = []
        for i, v in enumerate(self.potentials):
            v = as_matrix(v)
            if v.shape != h_s.shape:
                raise DimensionError(f"potential V_{i} has shape {v.shape}, expected {h_s.shape}")
            if not is_hermitian(v, self.tol):
                raise ContractError(f"potential V_{i} is not Hermitian")
            pots.append(_readonly(v))
        if len(pots) != e.size:
            raise DimensionError(f"{len(pots)} potentials for {e.size} apparatus energies")
        object.__setattr__(self, "energies", _readonly(e))
        object.__setattr__(self, "system_hamiltonian", _readonly(h_s))
        object.__setattr__(self, "potentials", tuple(pots))

    @property
    def apparatus_dim(self) -> int:
        return self.energies.size

    @property
    def system_dim(self) -> int:
        return self.system_hamiltonian.shape[0]

    def effective(self, j: int) -> np.ndarray:
        """Hamiltonian ``H_S + V_j`` seen by the system under pointer ``j``."""
        return self.system_hamiltonian + self.potentials[j]

    def materialize(self) -> np.ndarray:
        n, d = self.apparatus_dim, self.system_dim
        h = kron(np.eye(n), self.system_hamiltonian)
        for i in range(n):
            p = basis_projector(n, i)
            h = h + kron(p, self.energies[i] * np.eye(d) + self.potentials[i])
        return h

    def as_general(self) -> "GeneralHamiltonian":
        return GeneralHamiltonian.from_matrix(self.materialize(), self.apparatus_dim, self.system_dim)


def build_measurement_hamiltonian(energies, h_s, potentials) -> MeasurementHamiltonian:
    """
    Validate ``(E_i, H_S, V_i)`` and confirm ``[H_AS, |E_i><E_i| (x) 1] = 0``.

    Raises
    ------
    ContractError
        ``H_S`` or some ``V_i`` is not Hermitian; the message names it.
    """
    h = MeasurementHamiltonian(energies, h_s, tuple(potentials))
    full = h.materialize()
    n, d = h.apparatus_dim, h.system_dim
    for i in range(n):
        c = max_abs(commutator(full, kron(basis_projector(n, i), np.eye(d))))
        if c > h.tol:
            raise ValidationError(f"H_AS does not commute with pointer projector {i} ({c:.3e})")
    return h


def stern_gerlach_hamiltonian(g: float = 1.0) -> MeasurementHamiltonian:
    """Two pointers, ``H_S = 0``, ``V_1 = g sigma_z``, ``V_2 = -g sigma_z``."""
    sz = np.diag([1.0, -1.0]).astype(complex)
    return build_measurement_hamiltonian([0.0, 0.0], np.zeros((2, 2)), [g * sz, -g * sz])


@dataclass(frozen=True, eq=False)
class GeneralHamiltonian:
    """Joint Hamiltonian ``sum_ij |E_i><E_j| (x) W_ij``; ``blocks[i, j] = W_ij``."""

    blocks: np.ndarray
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        w = np.asarray(self.blocks, dtype=complex)
        if w.ndim != 4 or w.shape[0] != w.shape[1] or w.shape[2] != w.shape[3]:
            raise DimensionError(f"blocks must have shape (n, n, d, d), got {w.shape}")
        dev = max_abs(w - np.conj(np.transpose(w, (1, 0, 3, 2))))
        if dev > self.tol:
            raise ContractError(f"W_ji != W_ij^dagger (max deviation {dev:.3e})")
        object.__setattr__(self, "blocks", _readonly(w))

    @property
    def apparatus_dim(self) -> int:
        return self.blocks.shape[0]

    @property
    def system_dim(self) -> int:
        return self.blocks.shape[2]

    @classmethod
    def from_matrix(cls, m, n: int, d: int, tol: float = DEFAULT_TOL) -> "GeneralHamiltonian":
        a = as_matrix(m)
        if a.shape != (n * d, n * d):
            raise DimensionError(f"matrix of shape {a.shape} is not ({n}*{d}) x ({n}*{d})")
        return cls(a.reshape(n, d, n, d).transpose(0, 2, 1, 3), tol)

    def materialize(self) -> np.ndarray:
        n, d = self.apparatus_dim, self.system_dim
        return self.blocks.transpose(0, 2, 1, 3).reshape(n * d, n * d)


@dataclass(frozen=True, eq=False)
class ClassicalityVerdict:
    classical: bool
    witness: tuple[int, int] | None = None
    witness_block: np.ndarray | None = None
    magnitude: float = 0.0
    decomposition: MeasurementHamiltonian | None = None

    def __bool__(self) -> bool:
        return self.classical


def check_classicality(
    h: GeneralHamiltonian, tol: float = DEFAULT_TOL, h_s=None
) -> ClassicalityVerdict:
    """
    Decide whether ``h`` keeps the apparatus classical.

    Classical iff every ``W_ij`` with ``i != j`` is zero within ``tol``. On a
    classical verdict the diagonal blocks are split as
    ``W_ii = E_i 1 + H_S + V_i``: ``H_S`` is ``h_s`` if given, else the mean
    of the ``W_ii``; ``E_i = tr(W_ii - H_S) / d`` and ``V_i`` is the
    traceless remainder. Any such split yields the same dynamics.
    On violation the first offending pair in row-major order is returned.
    """
    n, d = h.apparatus_dim, h.system_dim
    w = h.blocks
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            mag = max_abs(w[i, j])
            if mag > tol:
                return ClassicalityVerdict(False, (i, j), np.array(w[i, j]), mag)
    diag = [np.array(w[i, i]) for i in range(n)]
    base = np.mean(diag, axis=0) if h_s is None else as_matrix(h_s)
    energies, pots = [], []
    eye = np.eye(d)
    for wii in diag:
        rest = wii - base
        e = float(np.trace(rest).real / d)
        energies.append(e)
        pots.append(rest - e * eye)
    decomposition = MeasurementHamiltonian(energies, base, tuple(pots))
    return ClassicalityVerdict(True, decomposition=decomposition)


def coherence_growth_prediction(w_kl, phi, t: float, hbar: float = DEFAULT_HBAR) -> complex:
    """
    First-order pointer coherence ``(i t / hbar) <phi| W_kl |phi>``.

    Raises
    ------
    ContractError
        If ``phi`` is not normalized within 1e-10.
    """
    w = as_matrix(w_kl)
    v = np.asarray(phi, dtype=complex).reshape(-1)
    if abs(np.linalg.norm(v) - 1.0) > DEFAULT_TOL:
        raise ContractError("phi must be a unit vector")
    if v.size != w.shape[0]:
        raise DimensionError("phi and W_kl dimensions differ")
    return complex(1j * t / hbar * (v.conj() @ w @ v))


def exact_pointer_coherence(
    h: GeneralHamiltonian, k: int, l: int, phi, t: float, hbar: float = DEFAULT_HBAR
) -> complex:
    """
    ``<E_k| rho_A(t) |E_l>`` from exact exponentiation of the full Hamiltonian,
    starting at ``|E_k> (x) |phi>``.
    """
    n, d = h.apparatus_dim, h.system_dim
    v = np.asarray(phi, dtype=complex).reshape(-1)
    rho0 = kron(basis_projector(n, k), ket_projector(v))
    u = unitary_exp(h.materialize(), t, hbar)
    rho_a = partial_trace_system(u @ rho0 @ u.conj().T, n, d)
    return complex(rho_a[k, l])


def coherence_witness_state(w_kl) -> np.ndarray:
    """
    A unit vector with large ``|<phi|W|phi>|``.

    Candidates are the extreme eigenvectors of the Hermitian and
    anti-Hermitian parts of ``W``; the best one is returned. It is nonzero
    whenever ``W`` is.
    """
    w = as_matrix(w_kl)
    herm = 0.5 * (w + w.conj().T)
    anti = -0.5j * (w - w.conj().T)
    best, best_val = None, -1.0
    for part in (herm, anti):
        _, vecs = np.linalg.eigh(part)
        for v in (vecs[:, 0], vecs[:, -1]):
            val = abs(v.conj() @ w @ v)
            if val > best_val:
                best, best_val = v, val
    return best


def evolve_hybrid(
    state: HybridState, h: MeasurementHamiltonian, t: float, hbar: float = DEFAULT_HBAR
) -> HybridState:
    """Evolve each conditional block under ``H_S + V_j``; weights stay fixed."""
    if state.apparatus_dim != h.apparatus_dim or state.system_dim != h.system_dim:
        raise DimensionError(
            f"state is {state.apparatus_dim}x{state.system_dim}, "
            f"Hamiltonian is {h.apparatus_dim}x{h.system_dim}"
        )
    blocks = tuple(
        None if b is None else von_neumann_evolve(b, h.effective(j), t, hbar)
        for j, b in enumerate(state.blocks)
    )
    return HybridState(state.weights, blocks)


def evolve_joint_matrix(rho_as, h_matrix, t: float, hbar: float = DEFAULT_HBAR) -> np.ndarray:
    """Full-space conjugation ``U rho_AS U^dagger`` (reference path)."""
    u = unitary_exp(h_matrix, t, hbar)
    return u @ as_matrix(rho_as) @ u.conj().T


def _rng(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def sample_index(probabilities, rng) -> int:
    """Draw an index with the given probabilities; zero-probability entries are never chosen."""
    p = np.asarray(probabilities, dtype=float)
    cum = np.cumsum(p)
    total = cum[-1]
    if not total > 0:
        raise ImpossibleOutcomeError("all outcome probabilities are zero")
    u = _rng(rng).random() * total
    i = int(np.searchsorted(cum, u, side="right"))
    if i >= p.size or p[i] <= 0:
        i = int(np.flatnonzero(p > 0)[-1])
    return i


def register_outcome(state: HybridState, l: int) -> HybridState:
    """
    Reveal pointer ``l``: weight 1 on ``l``, its conditional block unchanged.

    Raises
    ------
    ImpossibleOutcomeError
        If ``p_l <= 1e-12``.
    """
    if not 0 <= l < state.apparatus_dim:
        raise IndexError(f"pointer {l} out of range")
    if state.weights[l] <= WEIGHT_FLOOR or state.blocks[l] is None:
        raise ImpossibleOutcomeError(f"pointer {l} has weight {state.weights[l]:.3e}")
    return product_state(state.blocks[l], state.apparatus_dim, l)


def register(state: HybridState, rng) -> tuple[int, HybridState]:
    """Sample a pointer ``l`` with probability ``p_l`` and reveal it."""
    l = sample_index(state.weights, rng)
    return l, register_outcome(state, l)


@dataclass(frozen=True, eq=False)
class CompletionEvent:
    registered_pointer: int
    reduced_outcome: int
    pointer_prob: float
    outcome_prob: float
    post_state: HybridState


def _check_basis(state: HybridState, basis: MeasurementBasis) -> None:
    if not isinstance(basis, MeasurementBasis):
        raise ContractError("complete_measurement needs an orthonormal MeasurementBasis")
    if basis.dimension != state.system_dim:
        raise ContractError(
            f"basis of dimension {basis.dimension} for a {state.system_dim}-level system"
        )


def complete_outcome(
    state: HybridState, basis: MeasurementBasis, l: int, m: int
) -> CompletionEvent:
    """Deterministic completion with pointer ``l`` and outcome ``m``."""
    _check_basis(state, basis)
    registered = state.registered_pointer()
    if registered is not None and registered != l:
        raise ImpossibleOutcomeError(f"apparatus already registered in pointer {registered}")
    p_l = 1.0 if registered is not None else float(state.weights[l])
    post = register_outcome(state, l)
    pi = born_probabilities(post.blocks[l], basis)
    if not 0 <= m < basis.dimension:
        raise IndexError(f"outcome {m} out of range")
    if pi[m] <= WEIGHT_FLOOR:
        raise ImpossibleOutcomeError(f"outcome {m} has probability {pi[m]:.3e}")
    reduced = product_state(QuantumState(basis.projector(m)), state.apparatus_dim, l)
    return CompletionEvent(l, m, p_l, float(pi[m]), reduced)


def complete_measurement(state: HybridState, basis: MeasurementBasis, rng) -> CompletionEvent:
    """
    Register (if not yet registered) and reduce by the Born rule.

    The post-state has weight 1 on the registered pointer and the pure block
    ``|phi_m><phi_m|``, so its joint information is zero.
    """
    _check_basis(state, basis)
    rng = _rng(rng)
    l = state.registered_pointer()
    if l is None:
        l = sample_index(state.weights, rng)
    pi = born_probabilities(state.blocks[l], basis)
    m = sample_index(pi, rng)
    return complete_outcome(state, basis, l, m)


class Context(str, enum.Enum):
    ESSENTIAL = "essential"
    NON_ESSENTIAL = "non-essential"


def classify_context(observable, h: MeasurementHamiltonian, tol: float = DEFAULT_TOL) -> Context:
    """
    Essential iff ``1_A (x) observable`` commutes with ``H_AS`` within ``tol``.

    Projectors wrapped as propositions are rejected: a proposition is not a
    measured observable.
    """
    from .logic import Proposition

    if isinstance(observable, Proposition):
        raise TypeError("a Proposition is not a measurable observable; pass its matrix explicitly")
    o = as_matrix(observable)
    if o.shape != (h.system_dim, h.system_dim):
        raise DimensionError(f"observable of shape {o.shape} for a {h.system_dim}-level system")
    if not is_hermitian(o, tol):
        raise ContractError("observable must be Hermitian")
    lifted = kron(np.eye(h.apparatus_dim), o)
    c = max_abs(commutator(lifted, h.materialize()))
    return Context.ESSENTIAL if c <= tol else Context.NON_ESSENTIAL


@dataclass(frozen=True)
class InformationLedger:
    i_apparatus: float
    i_system: float
    i_total: float
    k_const: float = 1.0

    def as_dict(self) -> dict:
        return {"I_A": self.i_apparatus, "I_S": self.i_system, "I_AS": self.i_total, "K": self.k_const}


def joint_spectrum(state: HybridState) -> np.ndarray:
    """Eigenvalues of the joint matrix: the union over pointers of ``p_i spectrum(rho_S^(i))``."""
    return np.concatenate([w * b.spectrum() for _, w, b in state.present()])


def information_ledger(state: HybridState, k_const: float = 1.0) -> InformationLedger:
    if k_const <= 0:
        raise ContractError("K must be positive")
    i_a = shannon_information(reduce_to_apparatus(state), k_const)
    i_s = von_neumann_entropy(reduce_to_system(state), k_const)
    i_as = entropy_from_spectrum(joint_spectrum(state), k_const)
    return InformationLedger(i_a, i_s, i_as, k_const)
