"""Dense complex linear algebra for small multi-qubit systems.

All operators are plain ``numpy`` arrays of shape (d, d) with complex
entries.  Qubit registers use one global slot convention: slot 0 is the
most significant bit of the computational-basis index, so a Kronecker
product places its left factor on the lower-numbered slots.  Dimensions
stay at or below 2**7, hence everything is dense.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Tolerances:
    """Numerical slack used across the package, in one place."""

    hermitian: float = 1e-12       # max |M - M^dag| for a density matrix
    trace: float = 1e-12           # |tr(rho) - 1|
    psd: float = 1e-10             # eigenvalues >= -psd still count as PSD
    eig_input: float = 1e-10       # Hermiticity required by eig_hermitian
    sqrt_residual: float = 1e-9    # |S @ S - M| guaranteed by sqrt_psd
    sqrt_reject: float = 1e-8      # eigenvalue below -sqrt_reject: not PSD
    imag_discard: float = 1e-10    # imaginary residue discarded in traces


TOL = Tolerances()


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return m.conj().T


def hermitianize(m: np.ndarray) -> np.ndarray:
    """Hermitian part (M + M^dag) / 2; removes round-off asymmetry."""
    return (m + m.conj().T) / 2


def is_hermitian(m: np.ndarray, tol: float = TOL.hermitian) -> bool:
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def kron(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more matrices, left factor on top slots."""
    if not factors:
        raise ValueError("kron needs at least one factor")
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


def qubit_count(dim: int) -> int:
    """Number of qubits for a 2**n dimension; raises if dim is not one."""
    n = dim.bit_length() - 1
    if dim <= 0 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def partial_trace(m: np.ndarray, keep, num_qubits: int | None = None) -> np.ndarray:
    """Trace out every qubit slot not listed in ``keep``.

    ``m`` may be any square matrix on the 2**n register (the operation is
    linear, not restricted to density matrices).  Kept slots appear in the
    result in ascending slot order.
    """
    m = np.asarray(m)
    n = qubit_count(m.shape[0]) if num_qubits is None else num_qubits
    if m.shape != (2**n, 2**n):
        raise ValueError(f"matrix shape {m.shape} does not match {n} qubits")
    keep = sorted(set(keep))
    if not keep:
        raise ValueError("keep must name at least one qubit slot")
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"keep slots {keep} out of range for {n} qubits")

    arr = m.reshape([2] * (2 * n))
    remaining = n
    for slot in sorted(set(range(n)) - set(keep), reverse=True):
        arr = np.trace(arr, axis1=slot, axis2=slot + remaining)
        remaining -= 1
    d = 2 ** len(keep)
    return arr.reshape(d, d)


def eig_hermitian(m: np.ndarray, tol: float = TOL.eig_input) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending, real) and eigenvector columns of a Hermitian matrix."""
    m = np.asarray(m, dtype=complex)
    if not is_hermitian(m, tol):
        raise ValueError("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh(hermitianize(m))
    return w[::-1], v[:, ::-1]


def sqrt_psd(m: np.ndarray) -> np.ndarray:
    """Principal square root of a Hermitian positive semidefinite matrix.

    Eigenvalues inside the negative numerical slack are clamped to zero;
    anything below -TOL.sqrt_reject means the input is genuinely not PSD.
    """
    w, v = eig_hermitian(m)
    if w[-1] < -TOL.sqrt_reject:
        raise ValueError(f"matrix is not PSD: smallest eigenvalue {w[-1]:.3e}")
    s = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    return hermitianize(s)


def check_density_matrix(rho: np.ndarray, num_qubits: int | None = None) -> int:
    """Validate Hermiticity, unit trace and positivity; return the qubit count."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    n = qubit_count(rho.shape[0])
    if num_qubits is not None and n != num_qubits:
        raise ValueError(f"expected {num_qubits} qubits, matrix carries {n}")
    if not is_hermitian(rho, TOL.hermitian):
        raise ValueError("density matrix is not Hermitian within tolerance")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TOL.trace:
        raise ValueError(f"density matrix trace {tr} differs from 1")
    w = np.linalg.eigvalsh(hermitianize(np.asarray(rho, dtype=complex)))
    if w[0] < -TOL.psd:
        raise ValueError(f"density matrix has negative eigenvalue {w[0]:.3e}")
    return n
