"""Entanglement and nonlocality figures of merit for two-qubit states.

Concurrence follows Wootters' recipe: with rho' = (Y x Y) rho* (Y x Y),
the value is max(0, l1 - l2 - l3 - l4) where the l_i are the descending
square roots of the eigenvalues of rho rho' (equivalently the eigenvalues
of sqrt(sqrt(rho) rho' sqrt(rho)), kept here as a cross-check route).

The CHSH maximum uses the Horodecki criterion: 2 sqrt(mu1 + mu2) with
mu1 >= mu2 the two largest eigenvalues of T^t T, T the 3x3 correlation
matrix T[n, m] = tr[rho (sigma_n x sigma_m)].  A state is nonlocal iff
the value exceeds 2; the Tsirelson bound caps it at 2 sqrt(2).

`chsh_max_search` maximizes the Bell-operator expectation value over
explicit measurement directions instead; it is a deliberately independent
lower-bound search used to validate the eigenvalue formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .channels import Case, noisy_bell
from .linalg import TOL, eig_hermitian, hermitianize, kron, qubit_count, sqrt_psd
from .qec import corrected_pair
from .states import pauli

_CONC_IMAG_SLACK = 1e-9
# Eigenvalues of rho rho' at or below this are indistinguishable from exact
# zeros at double precision; square-rooting them would inject sqrt(eps)-scale
# noise into the concurrence, so they are floored first.
_CONC_EIG_FLOOR = 1e-13


def _check_two_qubits(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4) or qubit_count(rho.shape[0]) != 2:
        raise ValueError(f"expected a two-qubit (4x4) state, got shape {rho.shape}")
    return rho


def _spin_flipped(rho: np.ndarray) -> np.ndarray:
    yy = kron(pauli(2), pauli(2))
    return yy @ rho.conj() @ yy


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit density matrix, in [0, 1]."""
    rho = _check_two_qubits(rho)
    ev = np.linalg.eigvals(rho @ _spin_flipped(rho))
    if np.max(np.abs(ev.imag)) > _CONC_IMAG_SLACK:
        raise ValueError("eigenvalues of rho rho' carry non-negligible imaginary parts")
    ev = np.where(ev.real > _CONC_EIG_FLOOR, ev.real, 0.0)
    lam = np.sqrt(np.sort(ev)[::-1])
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def concurrence_via_sqrt(rho: np.ndarray) -> float:
    """Concurrence through the nested-square-root operator; cross-check route."""
    rho = _check_two_qubits(rho)
    s = sqrt_psd(rho)
    omega = sqrt_psd(hermitianize(s @ _spin_flipped(rho) @ s))
    lam, _ = eig_hermitian(omega)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def correlation_matrix(rho: np.ndarray) -> np.ndarray:
    """3x3 real correlation matrix T[n, m] = tr[rho (sigma_n x sigma_m)], n, m = 1..3."""
    rho = _check_two_qubits(rho)
    t = np.empty((3, 3))
    for n in range(3):
        for m in range(3):
            val = np.trace(rho @ kron(pauli(n + 1), pauli(m + 1)))
            if abs(val.imag) > TOL.imag_discard:
                raise ValueError(f"correlation entry ({n + 1},{m + 1}) is not real: {val}")
            t[n, m] = val.real
    return t


def chsh_max(rho: np.ndarray) -> float:
    """Maximum CHSH expectation value, from the two largest eigenvalues of T^t T."""
    t = correlation_matrix(rho)
    mu = np.sort(np.linalg.eigvalsh(t.T @ t))[::-1]
    return float(2.0 * np.sqrt(mu[0] + mu[1]))


def _orthonormal_plane(c1: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal basis of the plane perpendicular to the unit vector c1."""
    seed = np.array([1.0, 0.0, 0.0]) if abs(c1[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    u = seed - np.dot(seed, c1) * c1
    u /= np.linalg.norm(u)
    return u, np.cross(c1, u)


def _best_orthogonal_pair(r: np.ndarray, c1: np.ndarray) -> tuple[float, np.ndarray]:
    """Max of c1.R.c1 + c2.R.c2 over unit c2 perpendicular to c1, plus the argmax c2."""
    u, v = _orthonormal_plane(c1)
    quu, qvv, quv = u @ r @ u, v @ r @ v, u @ r @ v
    half_diff = (quu - qvv) / 2.0
    lam = (quu + qvv) / 2.0 + np.hypot(half_diff, quv)
    # eigenvector of [[quu, quv], [quv, qvv]] for its larger eigenvalue
    if abs(quv) < 1e-15:
        c2 = u if quu >= qvv else v
    else:
        w1 = (quv, lam - quu)
        w2 = (lam - qvv, quv)
        w = w1 if np.hypot(*w1) >= np.hypot(*w2) else w2
        c2 = w[0] * u + w[1] * v
        c2 /= np.linalg.norm(c2)
    return float(c1 @ r @ c1 + lam), c2


def _unit(theta: float, phi: float) -> np.ndarray:
    return np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])


def chsh_max_search(rho: np.ndarray, grid: int = 24, refine_steps: int = 50) -> float:
    """Maximize the Bell operator over explicit measurement directions.

    Scans a grid of directions for the first principal axis, completes it
    with the best perpendicular partner, hill-climbs the grid optimum, then
    evaluates tr[rho B] for the reconstructed operator
    B = a1.sigma x (b1 + b2).sigma + a2.sigma x (b1 - b2).sigma.
    Converges to the Horodecki value from below.
    """
    rho = _check_two_qubits(rho)
    t = correlation_matrix(rho)
    r = t.T @ t

    best_val = -np.inf
    best_angles = (0.0, 0.0)
    thetas = np.linspace(0.0, np.pi, grid)
    phis = np.linspace(0.0, 2 * np.pi, grid, endpoint=False)
    for theta in thetas:
        for phi in phis:
            val, _ = _best_orthogonal_pair(r, _unit(theta, phi))
            if val > best_val:
                best_val, best_angles = val, (theta, phi)

    theta, phi = best_angles
    d_theta = np.pi / grid
    d_phi = 2 * np.pi / grid
    for _ in range(refine_steps):
        moved = False
        for cand in ((theta + d_theta, phi), (theta - d_theta, phi),
                     (theta, phi + d_phi), (theta, phi - d_phi)):
            val, _ = _best_orthogonal_pair(r, _unit(*cand))
            if val > best_val + 1e-15:
                best_val, (theta, phi) = val, cand
                moved = True
        if not moved:
            d_theta /= 2.0
            d_phi /= 2.0

    c1 = _unit(theta, phi)
    _, c2 = _best_orthogonal_pair(r, c1)

    # Optimal split angle and Alice directions for the chosen (c1, c2).
    tc1, tc2 = t @ c1, t @ c2
    n1, n2 = np.linalg.norm(tc1), np.linalg.norm(tc2)
    ang = np.arctan2(n2, n1)
    a1 = tc1 / n1 if n1 > 1e-15 else np.array([0.0, 0.0, 1.0])
    a2 = tc2 / n2 if n2 > 1e-15 else np.array([0.0, 0.0, 1.0])
    b1 = np.cos(ang) * c1 + np.sin(ang) * c2
    b2 = np.cos(ang) * c1 - np.sin(ang) * c2

    def dot_sigma(vec: np.ndarray) -> np.ndarray:
        return sum(vec[i] * pauli(i + 1) for i in range(3))

    bell_op = kron(dot_sigma(a1), dot_sigma(b1 + b2)) + kron(dot_sigma(a2), dot_sigma(b1 - b2))
    return float(np.trace(rho @ bell_op).real)


@dataclass(frozen=True)
class MetricsPoint:
    """Concurrence and CHSH maximum of one simulated state at error probability p."""

    p: float
    concurrence: float
    chsh_max: float


def case_curves(case: Case, p_values: Sequence[float], with_qec: bool = False) -> list[MetricsPoint]:
    """Metrics along an error-probability sweep, by full simulation of each point."""
    points = []
    for p in p_values:
        rho = corrected_pair(case, p) if with_qec else noisy_bell(case, p)
        points.append(MetricsPoint(p=float(p), concurrence=concurrence(rho), chsh_max=chsh_max(rho)))
    return points
