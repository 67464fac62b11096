"""
Dense complex-matrix kernel.

All operators and states in the package are plain ``numpy.ndarray`` objects
of complex dtype. Composite apparatus-system indices are apparatus-major:
the row of ``|E_i> (x) |phi_k>`` is ``i * dim_s + k``, which is exactly the
layout produced by ``numpy.kron(apparatus_op, system_op)``.
"""

from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt

from .errors import ContractError, DimensionError

DEFAULT_TOL = 1e-10
DEFAULT_HBAR = 1.0

ArrayLike = npt.ArrayLike


def as_matrix(m: ArrayLike) -> np.ndarray:
    """Coerce ``m`` to a finite 2-D complex array."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ContractError("matrix contains NaN or Inf entries")
    return a


def _square(m: ArrayLike) -> np.ndarray:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


def dagger(m: ArrayLike) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(m).conj().T


def max_abs(m: ArrayLike) -> float:
    """Largest elementwise magnitude (0 for empty input)."""
    a = np.asarray(m)
    return float(np.max(np.abs(a))) if a.size else 0.0


def is_hermitian(m: ArrayLike, tol: float = DEFAULT_TOL) -> bool:
    a = _square(m)
    return max_abs(a - a.conj().T) <= tol


def is_positive_semidefinite(m: ArrayLike, tol: float = DEFAULT_TOL) -> bool:
    """
    Check ``min eigenvalue >= -tol`` using a Hermitian eigensolver.

    Raises
    ------
    ContractError
        If ``m`` is not Hermitian within ``tol``.
    """
    a = _square(m)
    if not is_hermitian(a, tol):
        raise ContractError("positivity is only defined here for Hermitian input")
    evals = np.linalg.eigvalsh(0.5 * (a + a.conj().T))
    return bool(evals[0] >= -tol)


def trace(m: ArrayLike) -> complex:
    return complex(np.trace(_square(m)))


def kron(a: ArrayLike, b: ArrayLike) -> np.ndarray:
    """Kronecker product with the apparatus factor ``a`` on the left."""
    return np.kron(as_matrix(a), as_matrix(b))


def _check_composite(m: np.ndarray, dim_a: int, dim_s: int) -> None:
    if dim_a < 1 or dim_s < 1:
        raise DimensionError("subsystem dimensions must be positive")
    n = dim_a * dim_s
    if m.shape != (n, n):
        raise DimensionError(
            f"matrix of shape {m.shape} does not match dim_a*dim_s = {n}"
        )


def partial_trace_system(m: ArrayLike, dim_a: int, dim_s: int) -> np.ndarray:
    """Trace out the system factor: ``result[i, j] = sum_k m[(i,k), (j,k)]``."""
    a = as_matrix(m)
    _check_composite(a, dim_a, dim_s)
    return np.einsum("ikjk->ij", a.reshape(dim_a, dim_s, dim_a, dim_s))


def partial_trace_apparatus(m: ArrayLike, dim_a: int, dim_s: int) -> np.ndarray:
    """Trace out the apparatus factor: ``result[k, l] = sum_i m[(i,k), (i,l)]``."""
    a = as_matrix(m)
    _check_composite(a, dim_a, dim_s)
    return np.einsum("ikil->kl", a.reshape(dim_a, dim_s, dim_a, dim_s))


def unitary_exp(
    h: ArrayLike, t: float, hbar: float = DEFAULT_HBAR, tol: float = DEFAULT_TOL
) -> np.ndarray:
    """
    Propagator ``exp(-i h t / hbar)`` of a Hermitian generator.

    Computed from the eigendecomposition ``h = V diag(w) V^dagger`` so the
    result is unitary to machine precision.

    Raises
    ------
    ContractError
        If ``h`` is not Hermitian within ``tol`` or ``hbar <= 0``.
    """
    a = _square(h)
    if hbar <= 0:
        raise ContractError("hbar must be positive")
    if not is_hermitian(a, tol):
        raise ContractError("unitary_exp requires a Hermitian generator")
    w, v = np.linalg.eigh(0.5 * (a + a.conj().T))
    phases = np.exp(-1j * w * (t / hbar))
    return (v * phases) @ v.conj().T


_TAYLOR_ORDER = 18


def general_exp(g: ArrayLike, t: float = 1.0) -> np.ndarray:
    """
    Matrix exponential ``exp(g t)`` for arbitrary square ``g``.

    Scaling and squaring: the argument is halved until its 1-norm is at
    most 1/2, a degree-18 Taylor polynomial is evaluated (truncation error
    below 2**-19 / 19! relative), then the result is squared back. Real
    input gives a real result.
    """
    a = _square(g) * t
    if not np.any(a.imag):
        a = a.real
    norm = float(np.linalg.norm(a, 1))
    s = 0
    if norm > 0.5:
        s = int(math.ceil(math.log2(norm / 0.5)))
    a = a / (2.0**s)
    n = a.shape[0]
    result = np.eye(n, dtype=a.dtype)
    term = np.eye(n, dtype=a.dtype)
    for k in range(1, _TAYLOR_ORDER + 1):
        term = term @ a / k
        result = result + term
    for _ in range(s):
        result = result @ result
    return result


def commutator(a: ArrayLike, b: ArrayLike) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    return a @ b - b @ a


def basis_projector(n: int, i: int) -> np.ndarray:
    """``|e_i><e_i|`` in dimension ``n``."""
    if not 0 <= i < n:
        raise IndexError(f"index {i} out of range for dimension {n}")
    p = np.zeros((n, n), dtype=complex)
    p[i, i] = 1.0
    return p


def ket_projector(v: ArrayLike) -> np.ndarray:
    """Outer product ``|v><v|`` of a column vector."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    return np.outer(v, v.conj())


PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

for _m in (PAULI_X, PAULI_Y, PAULI_Z):
    _m.setflags(write=False)
del _m
