"""
Experimental propositions as orthogonal projectors.

Only the commuting (Boolean) core is provided: conjunction ``P Q`` and
disjunction ``P + Q - P Q`` are defined for compatible propositions and
raise :class:`CompatibilityError` otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CompatibilityError, DimensionError, ValidationError
from .linalg import DEFAULT_TOL, as_matrix, ket_projector, max_abs
from .quantum import QuantumState

SNAP_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Proposition:
    """A Hermitian idempotent ``P``; eigenvalues are snapped to {0, 1}."""

    projector: np.ndarray

    def __post_init__(self):
        p = as_matrix(self.projector)
        if p.shape[0] != p.shape[1]:
            raise DimensionError("projector must be square")
        if max_abs(p - p.conj().T) > DEFAULT_TOL:
            raise ValidationError("projector is not Hermitian")
        if max_abs(p @ p - p) > DEFAULT_TOL:
            raise ValidationError("projector is not idempotent")
        if max_abs(p @ p - p) > 0 or max_abs(p - p.conj().T) > 0:
            w, v = np.linalg.eigh(0.5 * (p + p.conj().T))
            snapped = np.round(w)
            if max_abs(w - snapped) > SNAP_TOL:
                raise ValidationError("projector eigenvalues are not in {0, 1}")
            p = (v * snapped) @ v.conj().T
        p = p.copy()
        p.setflags(write=False)
        object.__setattr__(self, "projector", p)

    @property
    def dimension(self) -> int:
        return self.projector.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Proposition):
            return NotImplemented
        return self.dimension == other.dimension and np.array_equal(self.projector, other.projector)

    def __hash__(self):
        return hash(self.projector.tobytes())

    def close_to(self, other: "Proposition", tol: float = DEFAULT_TOL) -> bool:
        return self.dimension == other.dimension and max_abs(self.projector - other.projector) <= tol

    @classmethod
    def zero(cls, n: int) -> "Proposition":
        return cls(np.zeros((n, n), dtype=complex))

    @classmethod
    def identity(cls, n: int) -> "Proposition":
        return cls(np.eye(n, dtype=complex))

    @classmethod
    def from_vector(cls, v) -> "Proposition":
        v = np.asarray(v, dtype=complex).reshape(-1)
        return cls(ket_projector(v / np.linalg.norm(v)))


def from_pointer_subset(n: int, subset: Iterable[int]) -> Proposition:
    """Classical projector ``sum_{i in S} |E_i><E_i|``."""
    diag = np.zeros(n)
    for i in subset:
        if not 0 <= i < n:
            raise IndexError(f"pointer {i} out of range for {n} pointers")
        diag[i] = 1.0
    return Proposition(np.diag(diag).astype(complex))


def _same_dim(p: Proposition, q: Proposition) -> None:
    if p.dimension != q.dimension:
        raise DimensionError(f"propositions of dimension {p.dimension} and {q.dimension}")


def compatible(p: Proposition, q: Proposition, tol: float = DEFAULT_TOL) -> bool:
    _same_dim(p, q)
    a, b = p.projector, q.projector
    return max_abs(a @ b - b @ a) <= tol


def _require_compatible(p: Proposition, q: Proposition) -> None:
    if not compatible(p, q):
        raise CompatibilityError("connectives are only defined here for commuting projectors")


def conjunction(p: Proposition, q: Proposition) -> Proposition:
    _require_compatible(p, q)
    return Proposition(p.projector @ q.projector)


def disjunction(p: Proposition, q: Proposition) -> Proposition:
    _require_compatible(p, q)
    a, b = p.projector, q.projector
    return Proposition(a + b - a @ b)


def complement(p: Proposition) -> Proposition:
    return Proposition(np.eye(p.dimension) - p.projector)


def truth_probability(p: Proposition, state: QuantumState) -> float:
    """``Tr(P rho)`` clamped to ``[0, 1]``."""
    if p.dimension != state.dimension:
        raise DimensionError("proposition and state dimensions differ")
    val = float(np.real(np.trace(p.projector @ state.matrix)))
    return min(1.0, max(0.0, val))


class _Family:
    """Membership up to ``tol``, with an exact-hash fast path."""

    def __init__(self, props: Sequence[Proposition], tol: float):
        self.props = props
        self.tol = tol
        self.exact = set(props)

    def __contains__(self, r: Proposition) -> bool:
        return r in self.exact or any(r.close_to(q, self.tol) for q in self.props)


def boolean_sublattice_check(
    props: Sequence[Proposition], tol: float = DEFAULT_TOL, max_triples: int = 512
) -> bool:
    """
    True iff ``props`` is a family of mutually commuting projectors closed
    under conjunction, disjunction and complement.

    Distributivity is then spot-checked on up to ``max_triples`` triples
    (all of them when the family is small).
    """
    props = list(props)
    if not props:
        return False
    for p in props[1:]:
        if p.dimension != props[0].dimension:
            return False
    for p, q in itertools.combinations(props, 2):
        if not compatible(p, q, tol):
            return False
    family = _Family(props, tol)
    for p in props:
        if complement(p) not in family:
            return False
    for p, q in itertools.combinations_with_replacement(props, 2):
        if conjunction(p, q) not in family or disjunction(p, q) not in family:
            return False
    k = len(props)
    if k**3 <= max_triples:
        triples = itertools.product(props, repeat=3)
    else:
        rng = np.random.default_rng(0)
        idx = rng.integers(0, k, size=(max_triples, 3))
        triples = ((props[a], props[b], props[c]) for a, b, c in idx)
    for p, q, r in triples:
        lhs = conjunction(p, disjunction(q, r))
        rhs = disjunction(conjunction(p, q), conjunction(p, r))
        if not lhs.close_to(rhs, tol):
            return False
    return True


def power_set_family(n: int) -> list[Proposition]:
    """All ``2**n`` classical subset projectors over ``n`` pointers."""
    return [
        from_pointer_subset(n, [i for i in range(n) if mask >> i & 1])
        for mask in range(2**n)
    ]
