"""Noisy Bell pairs, three-qubit error correction, and what they buy you.

Density-matrix simulation of a two-qubit Bell state sent through bit-flip
and phase-flip channels, with optional three-qubit code protection, and
the derived figures of merit: concurrence, maximal CHSH value, dense-coding
mutual information and average teleportation fidelity.
"""

from .channels import PauliChannel, apply_channel, bit_flip, case_channels, noisy_bell, phase_flip
from .gates import cnot, hadamard_at, pauli_at, toffoli
from .linalg import (
    TOL,
    check_density_matrix,
    dagger,
    eig_hermitian,
    kron,
    partial_trace,
    qubit_count,
    sqrt_psd,
)
from .metrics import (
    MetricsPoint,
    case_curves,
    chsh_max,
    chsh_max_search,
    concurrence,
    concurrence_via_sqrt,
    correlation_matrix,
)
from .protocols import (
    TWO_DESIGN_ANGLES,
    DenseCodingResult,
    avg_teleport_fidelity,
    bell_projectors,
    dense_coding,
    teleport,
    teleport_output,
)
from .qec import (
    QecCode,
    build_code,
    correction_probability,
    corrected_pair,
    logical_bit_flip_probability,
    protect_single_qubit,
)
from .states import bell_state, bell_vector, pauli, qubit_state, qubit_vector

__all__ = [
    "TOL",
    "PauliChannel",
    "QecCode",
    "MetricsPoint",
    "DenseCodingResult",
    "TWO_DESIGN_ANGLES",
    "apply_channel",
    "avg_teleport_fidelity",
    "bell_projectors",
    "bell_state",
    "bell_vector",
    "bit_flip",
    "build_code",
    "case_channels",
    "case_curves",
    "check_density_matrix",
    "chsh_max",
    "chsh_max_search",
    "cnot",
    "concurrence",
    "concurrence_via_sqrt",
    "correlation_matrix",
    "corrected_pair",
    "correction_probability",
    "dagger",
    "dense_coding",
    "eig_hermitian",
    "hadamard_at",
    "kron",
    "logical_bit_flip_probability",
    "noisy_bell",
    "partial_trace",
    "pauli",
    "pauli_at",
    "phase_flip",
    "protect_single_qubit",
    "qubit_count",
    "qubit_state",
    "qubit_vector",
    "sqrt_psd",
    "teleport",
    "teleport_output",
    "toffoli",
]
