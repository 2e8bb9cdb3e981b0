"""Gates materialized as full 2**n x 2**n unitaries.

Registers are small (n <= 7), so every gate is built as a dense matrix
acting on the whole register; uninvolved slots carry the identity.  Slot 0
is the most significant bit of the basis index.
"""

from __future__ import annotations

import numpy as np

from .linalg import kron
from .states import pauli

HADAMARD_2x2 = (pauli(1) + pauli(3)) / np.sqrt(2.0)


def _check_slots(num_qubits: int, *slots: int) -> None:
    if len(set(slots)) != len(slots):
        raise ValueError(f"gate slots must be distinct, got {slots}")
    for s in slots:
        if not 0 <= s < num_qubits:
            raise ValueError(f"slot {s} out of range for {num_qubits} qubits")


def _bit(index: int, slot: int, num_qubits: int) -> int:
    return (index >> (num_qubits - 1 - slot)) & 1


def pauli_at(num_qubits: int, k: int, slot: int) -> np.ndarray:
    """sigma_k on one slot, identity elsewhere."""
    _check_slots(num_qubits, slot)
    return kron(*(pauli(k) if s == slot else pauli(0) for s in range(num_qubits)))


def hadamard_at(num_qubits: int, slot: int) -> np.ndarray:
    """Hadamard (sigma_1 + sigma_3)/sqrt(2) on one slot."""
    _check_slots(num_qubits, slot)
    return kron(*(HADAMARD_2x2 if s == slot else pauli(0) for s in range(num_qubits)))


def cnot(num_qubits: int, control: int, target: int) -> np.ndarray:
    """CNOT flipping ``target`` when ``control`` is set."""
    _check_slots(num_qubits, control, target)
    dim = 2**num_qubits
    u = np.zeros((dim, dim), dtype=complex)
    flip = 1 << (num_qubits - 1 - target)
    for i in range(dim):
        j = i ^ flip if _bit(i, control, num_qubits) else i
        u[j, i] = 1.0
    return u


def toffoli(num_qubits: int, control1: int, control2: int, target: int) -> np.ndarray:
    """Doubly-controlled NOT: flips ``target`` when both controls are set."""
    _check_slots(num_qubits, control1, control2, target)
    dim = 2**num_qubits
    u = np.zeros((dim, dim), dtype=complex)
    flip = 1 << (num_qubits - 1 - target)
    for i in range(dim):
        both = _bit(i, control1, num_qubits) and _bit(i, control2, num_qubits)
        u[i ^ flip if both else i, i] = 1.0
    return u
