"""Superdense coding and teleportation over the noisy (optionally protected) pair.

Superdense coding: Alice encodes symbol j (prior 1/4 each) by preparing the
Bell state with label j, both qubits traverse the noise scenario, and Bob
performs a Bell measurement.  The figure of merit is the mutual information
of the resulting 4x4 conditional distribution, in bits.

Teleportation: a source qubit C in a Bloch pure state is combined with the
shared pair AB, Alice projects (C, A) onto the Bell basis, and Bob applies
the Pauli matching her outcome.  The per-state score is the overlap of
Bob's averaged output with the intended state; the Bloch-sphere average of
that overlap is taken exactly over the six Pauli eigenstates, which form a
spherical 2-design (the overlap is quadratic in the input state, so the
six-point average equals the uniform integral).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import Case, noisy_bell
from .linalg import kron, partial_trace
from .qec import corrected_pair
from .states import bell_state, pauli, qubit_state, qubit_vector

_IDENTITY_2 = np.eye(2, dtype=complex)
_PROB_FLOOR = 1e-15     # conditional probabilities below this count as exact zeros
_OUTCOME_GUARD = 1e-14  # Bell outcomes this unlikely contribute nothing

# (theta, phi) of the six Pauli eigenstates: +-z, +-x, +-y.
TWO_DESIGN_ANGLES = (
    (0.0, 0.0),
    (np.pi, 0.0),
    (np.pi / 2, 0.0),
    (np.pi / 2, np.pi),
    (np.pi / 2, np.pi / 2),
    (np.pi / 2, 3 * np.pi / 2),
)


def bell_projectors() -> list[np.ndarray]:
    """The four orthogonal Bell-basis projectors; they resolve the identity."""
    return [bell_state(k) for k in range(4)]


def _pair_state(case: Case, p: float, with_qec: bool, input_bell: int = 0) -> np.ndarray:
    if with_qec:
        return corrected_pair(case, p, input_bell=input_bell)
    return noisy_bell(case, p, input_bell=input_bell)


@dataclass(frozen=True)
class DenseCodingResult:
    """Conditional outcome matrix P(k|j) (rows j) and its mutual information in bits."""

    conditional: np.ndarray
    mutual_information: float


def mutual_information(conditional: np.ndarray, priors: np.ndarray | None = None) -> float:
    """Mutual information in bits of P(k|j) rows under the given priors.

    Terms with probability below the floor are treated as exact zeros
    (0 log 0 = 0).
    """
    cond = np.asarray(conditional, dtype=float)
    q = np.full(cond.shape[0], 1.0 / cond.shape[0]) if priors is None else np.asarray(priors)
    cond = np.where(cond < _PROB_FLOOR, 0.0, cond)
    marginal = q @ cond
    info = 0.0
    for j in range(cond.shape[0]):
        for k in range(cond.shape[1]):
            pkj = cond[j, k]
            if pkj > 0.0 and marginal[k] > 0.0:
                info += q[j] * pkj * np.log2(pkj / marginal[k])
    return float(info)


def dense_coding(case: Case, p: float, with_qec: bool = False) -> DenseCodingResult:
    """Run superdense coding through the scenario's channels for all four symbols."""
    projectors = bell_projectors()
    cond = np.empty((4, 4))
    for j in range(4):
        rho = _pair_state(case, p, with_qec, input_bell=j)
        for k in range(4):
            cond[j, k] = np.trace(rho @ projectors[k]).real
    return DenseCodingResult(conditional=cond, mutual_information=mutual_information(cond))


def teleport_output(rho_pair: np.ndarray, theta: float, phi: float) -> tuple[np.ndarray, np.ndarray]:
    """Bob's averaged output state and the four Bell-outcome probabilities.

    Works on the 3-qubit register (C, A, B): project (C, A) onto Bell state
    k, renormalize, apply Bob's sigma_k, and average the outcomes with
    their probabilities.
    """
    joint = kron(qubit_state(theta, phi), rho_pair)
    probs = np.empty(4)
    bob = np.zeros((2, 2), dtype=complex)
    for k, proj in enumerate(bell_projectors()):
        unnormalized = partial_trace(joint @ kron(proj, _IDENTITY_2), keep=(2,), num_qubits=3)
        q_k = np.trace(unnormalized).real
        probs[k] = q_k
        if q_k < _OUTCOME_GUARD:
            continue
        corrected = pauli(k) @ (unnormalized / q_k) @ pauli(k)
        bob += q_k * corrected
    return bob, probs


def teleport(case: Case, p: float, theta: float, phi: float, with_qec: bool = False) -> float:
    """Teleportation fidelity for one input state through the noisy pair."""
    rho_pair = _pair_state(case, p, with_qec)
    bob, _ = teleport_output(rho_pair, theta, phi)
    psi = qubit_vector(theta, phi)
    return float((psi.conj() @ bob @ psi).real)


def avg_teleport_fidelity(case: Case, p: float, with_qec: bool = False) -> float:
    """Bloch-sphere-averaged teleportation fidelity via the six-state 2-design."""
    rho_pair = _pair_state(case, p, with_qec)
    total = 0.0
    for theta, phi in TWO_DESIGN_ANGLES:
        bob, _ = teleport_output(rho_pair, theta, phi)
        psi = qubit_vector(theta, phi)
        total += (psi.conj() @ bob @ psi).real
    return float(total / len(TWO_DESIGN_ANGLES))
