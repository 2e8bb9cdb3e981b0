"""Shared test utilities: random states and independent numerical oracles."""

from __future__ import annotations

import numpy as np


def random_density(rng: np.random.Generator, num_qubits: int = 2) -> np.ndarray:
    """Random full-rank density matrix from a Ginibre draw."""
    d = 2**num_qubits
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_bloch_angles(rng: np.random.Generator) -> tuple[float, float]:
    """Uniform point on the Bloch sphere as (theta, phi)."""
    return float(np.arccos(rng.uniform(-1.0, 1.0))), float(rng.uniform(0.0, 2 * np.pi))


def eig3_symmetric_desc(m: np.ndarray) -> np.ndarray:
    """Closed-form (Cardano) eigenvalues of a real symmetric 3x3 matrix, descending.

    Independent of any iterative eigensolver; used to cross-check
    eigendecompositions of 3x3 correlation matrices.
    """
    m = np.asarray(m, dtype=float)
    p1 = m[0, 1] ** 2 + m[0, 2] ** 2 + m[1, 2] ** 2
    q = np.trace(m) / 3.0
    p2 = (m[0, 0] - q) ** 2 + (m[1, 1] - q) ** 2 + (m[2, 2] - q) ** 2 + 2.0 * p1
    p = np.sqrt(p2 / 6.0)
    if p == 0.0:
        return np.array([q, q, q])
    b = (m - q * np.eye(3)) / p
    r = np.clip(np.linalg.det(b) / 2.0, -1.0, 1.0)
    phi = np.arccos(r) / 3.0
    eig_hi = q + 2.0 * p * np.cos(phi)
    eig_lo = q + 2.0 * p * np.cos(phi + 2.0 * np.pi / 3.0)
    return np.array([eig_hi, 3.0 * q - eig_hi - eig_lo, eig_lo])
