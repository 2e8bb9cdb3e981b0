"""Pauli matrices, Bell states and parametrized single-qubit states.

Bell states are indexed by the Pauli label k through the correspondence
|k> = 2**(-1/2) * sum_{l,m} [sigma_k]_{lm} |l m>, i.e. the maximally
entangled state whose coefficient matrix is sigma_k / sqrt(2) (Choi
matrix notation).  Index 0 is (|00> + |11>)/sqrt(2).
"""

from __future__ import annotations

import numpy as np

_SIGMA = (
    np.array([[1, 0], [0, 1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def _check_index(k: int) -> int:
    if k not in (0, 1, 2, 3):
        raise ValueError(f"Pauli/Bell index must be in 0..3, got {k}")
    return k


def pauli(k: int) -> np.ndarray:
    """The 2x2 Pauli matrix sigma_k, k in 0..3 (0 is the identity)."""
    return _SIGMA[_check_index(k)].copy()


def bell_vector(k: int) -> np.ndarray:
    """State vector of the Bell state labelled by sigma_k.

    Entry (2l + m) holds [sigma_k]_{lm} / sqrt(2); slot 0 is the first
    (most significant) qubit.
    """
    return _SIGMA[_check_index(k)].reshape(4) / np.sqrt(2.0)


def bell_state(k: int) -> np.ndarray:
    """Density matrix (4x4 rank-1 projector) of the Bell state sigma_k."""
    v = bell_vector(k)
    return np.outer(v, v.conj())


def qubit_vector(theta: float, phi: float) -> np.ndarray:
    """Pure qubit cos(theta/2)|0> + exp(i phi) sin(theta/2)|1>.

    theta in [0, pi], phi in [0, 2 pi).
    """
    if not 0.0 <= theta <= np.pi:
        raise ValueError(f"theta must be in [0, pi], got {theta}")
    if not 0.0 <= phi < 2 * np.pi:
        raise ValueError(f"phi must be in [0, 2 pi), got {phi}")
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)], dtype=complex)


def qubit_state(theta: float, phi: float) -> np.ndarray:
    """Density matrix of the Bloch-angle pure state."""
    v = qubit_vector(theta, phi)
    return np.outer(v, v.conj())
