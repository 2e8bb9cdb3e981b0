"""Three-qubit repetition-style error correction on one or two logical qubits.

Each code block holds a carrier qubit at slot 0 and two ancillas, prepared
in |00>, at slots 1 and 2.  The bit-flip encoder copies the carrier onto
the ancillas with two CNOTs; the decoder repeats the CNOTs (computing the
error syndrome into the ancillas) and applies a Toffoli, controlled on
both ancillas, that flips the carrier back when both parities fired.  No
measurement is involved: correction is coherent and the ancillas are
traced out afterwards.

The phase-flip code is the Hadamard conjugate of the bit-flip code: the
encoder gains a trailing layer of Hadamards, the decoder a leading one,
turning Z errors on the wire into X errors the bit-flip logic can fix.

A single block corrects any one-slot error perfectly; with independent
per-slot error probability p the carrier survives with probability
(1 - p)^2 (1 + 2p), the chance of at most one slot failing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import Case, ChannelKind, PauliChannel, apply_channel, case_channels
from .gates import cnot, hadamard_at, toffoli
from .linalg import dagger, kron, partial_trace
from .states import bell_vector


@dataclass(frozen=True)
class QecCode:
    """Encoder/decoder pair (8x8 unitaries) for one protected qubit."""

    kind: ChannelKind
    encoder: np.ndarray
    decoder: np.ndarray


def build_code(kind: ChannelKind) -> QecCode:
    """Construct the three-qubit code correcting the given error type."""
    encode = cnot(3, 0, 2) @ cnot(3, 0, 1)
    decode = toffoli(3, 1, 2, 0) @ cnot(3, 0, 2) @ cnot(3, 0, 1)
    if kind == "bit_flip":
        return QecCode(kind, encode, decode)
    if kind == "phase_flip":
        h3 = hadamard_at(3, 0) @ hadamard_at(3, 1) @ hadamard_at(3, 2)
        return QecCode(kind, h3 @ encode, decode @ h3)
    raise ValueError(f"unknown code kind {kind!r}")


def code_for_channel(channel: PauliChannel) -> QecCode:
    """The code matched to a channel's error type."""
    return build_code(channel.kind)


def correction_probability(p: float) -> float:
    """Probability that at most one of the three block slots errs."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"error probability must be in [0, 1], got {p}")
    return (1.0 - p) ** 2 * (1.0 + 2.0 * p)


def _embedded_pair_state(input_bell: int) -> np.ndarray:
    """Bell pair on slots (0, 3) of a 6-qubit register, four ancillas in |0>."""
    bell = bell_vector(input_bell)
    psi = np.zeros(64, dtype=complex)
    for a in (0, 1):
        for b in (0, 1):
            psi[a * 32 + b * 4] = bell[2 * a + b]
    return np.outer(psi, psi.conj())


def corrected_pair(case: Case, p: float, input_bell: int = 0) -> np.ndarray:
    """Bell pair protected by per-qubit three-qubit codes against the case's noise.

    Pipeline on the slot order (A, A1, A2, B, B1, B2): encode both blocks,
    send all six qubits through their independent channels (bit flips on
    the A side, bit or phase flips on the B side depending on the case),
    decode both blocks, trace out the four ancillas.  Returns the 4x4
    carrier-pair state.
    """
    chan_template_a, chan_template_b = case_channels(case, p)
    code_a = code_for_channel(chan_template_a)
    code_b = code_for_channel(chan_template_b)

    rho = _embedded_pair_state(input_bell)

    enc = kron(code_a.encoder, code_b.encoder)
    rho = enc @ rho @ dagger(enc)

    for slot in range(3):
        rho = apply_channel(rho, chan_template_a, slot)
    for slot in range(3, 6):
        rho = apply_channel(rho, chan_template_b, slot)

    dec = kron(code_a.decoder, code_b.decoder)
    rho = dec @ rho @ dagger(dec)

    return partial_trace(rho, keep=(0, 3), num_qubits=6)


def logical_bit_flip_probability(p: float) -> float:
    """Residual flip probability of one protected carrier: 1 - correction_probability."""
    return 1.0 - correction_probability(p)


# Convenience used by tests and single-block demonstrations.
def protect_single_qubit(rho_carrier: np.ndarray, channel: PauliChannel) -> np.ndarray:
    """Run one carrier through encode -> per-slot noise -> decode -> ancilla trace."""
    code = code_for_channel(channel)
    anc = np.zeros((4, 4), dtype=complex)
    anc[0, 0] = 1.0
    rho = kron(rho_carrier, anc)
    rho = code.encoder @ rho @ dagger(code.encoder)
    for slot in range(3):
        rho = apply_channel(rho, channel, slot)
    rho = code.decoder @ rho @ dagger(code.decoder)
    return partial_trace(rho, keep=(0,), num_qubits=3)
