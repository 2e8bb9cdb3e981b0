"""Analytic reference curves for every simulated figure of merit.

These expressions exist to be *compared against* the full density-matrix
simulation (see the ``verify`` CLI subcommand and the test suite); nothing
in the simulation pipeline imports this module.

Notation: case "I" sends both Bell qubits through bit-flip channels, case
"II" sends one through a bit-flip and one through a phase-flip channel.
With three-qubit error correction the residual error on each carrier is a
bit flip with probability p**2 (3 - 2p) regardless of the case, so every
protected curve is case-independent.
"""

from __future__ import annotations

import numpy as np

from .channels import Case
from .qec import logical_bit_flip_probability

SUDDEN_DEATH_ONSET = 1.0 - 1.0 / np.sqrt(2.0)  # concurrence zero on [onset, 1 - onset]


def _check_case(case: Case) -> None:
    if case not in ("I", "II"):
        raise ValueError(f"case must be 'I' or 'II', got {case!r}")


def concurrence(case: Case, p: float, with_qec: bool = False) -> float:
    _check_case(case)
    if with_qec:
        return (1.0 - 6.0 * p**2 + 4.0 * p**3) ** 2
    if case == "I":
        return (1.0 - 2.0 * p) ** 2
    if p <= SUDDEN_DEATH_ONSET:
        return 2.0 * p**2 - 4.0 * p + 1.0
    if p >= 1.0 - SUDDEN_DEATH_ONSET:
        return 2.0 * p**2 - 1.0
    return 0.0


def chsh_max(case: Case, p: float, with_qec: bool = False) -> float:
    _check_case(case)
    if with_qec:
        return 2.0 * np.sqrt(1.0 + (1.0 - 6.0 * p**2 + 4.0 * p**3) ** 4)
    if case == "I":
        return 2.0 * np.sqrt(1.0 + (1.0 - 2.0 * p) ** 4)
    return 2.0 * np.sqrt(2.0) * abs(1.0 - 2.0 * p)


def _entropy_bits(weights) -> float:
    w = np.asarray(weights, dtype=float)
    w = w[w > 0.0]
    return float(-np.sum(w * np.log2(w)))


def mutual_information(case: Case, p: float, with_qec: bool = False) -> float:
    """Dense-coding mutual information in bits.

    Each single-qubit error permutes the Bell labels, so the conditional
    distribution of Bob's outcome is a fixed weight vector up to
    relabeling and the channel output is uniform under uniform priors;
    the information is then 2 minus the weight-vector entropy.
    """
    _check_case(case)
    if with_qec:
        q = logical_bit_flip_probability(p)
        flip = 2.0 * q * (1.0 - q)
        return 2.0 - _entropy_bits([1.0 - flip, flip])
    if case == "I":
        flip = 2.0 * p * (1.0 - p)
        return 2.0 - _entropy_bits([1.0 - flip, flip])
    return 2.0 - _entropy_bits([(1.0 - p) ** 2, p * (1.0 - p), p * (1.0 - p), p**2])


def avg_fidelity(case: Case, p: float, with_qec: bool = False) -> float:
    _check_case(case)
    if with_qec:
        return 1.0 - (4.0 / 3.0) * p**2 * (1.0 - p) ** 2 * (3.0 - 2.0 * p) * (1.0 + 2.0 * p)
    if case == "I":
        return 1.0 - (4.0 / 3.0) * p * (1.0 - p)
    return 1.0 - (2.0 / 3.0) * p * (2.0 - p)
