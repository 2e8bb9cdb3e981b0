"""Single-qubit bit-flip and phase-flip channels on multi-qubit states.

The bit-flip map sends rho to (1-p) rho + p X rho X, the phase-flip map
to (1-p) rho + p Z rho Z.  Both are applied by embedding the error Pauli
at the chosen register slot; no general Kraus machinery is needed for
these two maps.

Two named noise scenarios act on a Bell pair (slots A=0, B=1):

* case "I":  bit flip on both qubits;
* case "II": bit flip on A, phase flip on B.

`p` is accepted on all of [0, 1]; the interesting physics is precisely
what happens when the error probability is not small.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .gates import pauli_at
from .linalg import qubit_count
from .states import bell_state

ChannelKind = Literal["bit_flip", "phase_flip"]
Case = Literal["I", "II"]

_ERROR_PAULI = {"bit_flip": 1, "phase_flip": 3}


@dataclass(frozen=True)
class PauliChannel:
    """A single-Pauli error channel: error with probability p, else identity."""

    kind: ChannelKind
    p: float

    def __post_init__(self) -> None:
        if self.kind not in _ERROR_PAULI:
            raise ValueError(f"unknown channel kind {self.kind!r}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"error probability must be in [0, 1], got {self.p}")

    @property
    def error_index(self) -> int:
        """Pauli index of the error operator (1 for X, 3 for Z)."""
        return _ERROR_PAULI[self.kind]


def bit_flip(p: float) -> PauliChannel:
    return PauliChannel("bit_flip", p)


def phase_flip(p: float) -> PauliChannel:
    return PauliChannel("phase_flip", p)


def apply_channel(rho: np.ndarray, channel: PauliChannel, slot: int) -> np.ndarray:
    """Apply the channel to one slot of a multi-qubit density matrix."""
    n = qubit_count(rho.shape[0])
    e = pauli_at(n, channel.error_index, slot)
    return (1.0 - channel.p) * rho + channel.p * (e @ rho @ e)


def case_channels(case: Case, p: float) -> tuple[PauliChannel, PauliChannel]:
    """The (A, B) channel pair for a named noise scenario."""
    if case == "I":
        return bit_flip(p), bit_flip(p)
    if case == "II":
        return bit_flip(p), phase_flip(p)
    raise ValueError(f"case must be 'I' or 'II', got {case!r}")


def noisy_bell(case: Case, p: float, input_bell: int = 0) -> np.ndarray:
    """Bell state after both qubits traverse the scenario's channels.

    The output is always a convex mixture of the four Bell projectors.
    """
    chan_a, chan_b = case_channels(case, p)
    rho = bell_state(input_bell)
    rho = apply_channel(rho, chan_a, slot=0)
    return apply_channel(rho, chan_b, slot=1)
