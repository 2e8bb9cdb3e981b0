"""Acceptance gate: every headline result at its contractual tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion.  All randomized checks use fixed seeds.
"""

import itertools
import time

import numpy as np
from helpers import random_density

from bellqec import (
    apply_channel,
    avg_teleport_fidelity,
    bell_projectors,
    bit_flip,
    chsh_max,
    chsh_max_search,
    cnot,
    concurrence,
    concurrence_via_sqrt,
    corrected_pair,
    correction_probability,
    dense_coding,
    hadamard_at,
    noisy_bell,
    pauli_at,
    phase_flip,
    teleport_output,
    toffoli,
)

GRID = np.linspace(0.0, 1.0, 101)
SUDDEN_DEATH_ONSET = 1.0 - 1.0 / np.sqrt(2.0)


def test_criterion_01_symmetric_concurrence_curve():
    start = time.perf_counter()
    worst = max(
        abs(concurrence(noisy_bell("I", float(p))) - (1.0 - 2.0 * p) ** 2) for p in GRID
    )
    elapsed = time.perf_counter() - start
    assert worst <= 1e-10
    assert elapsed < 1.0
    print(f"criterion 1 PASS: case-I concurrence max dev {worst:.2e} in {elapsed:.2f}s")


def test_criterion_02_symmetric_chsh_curve():
    worst = max(
        abs(chsh_max(noisy_bell("I", float(p))) - 2.0 * np.sqrt(1.0 + (1.0 - 2.0 * p) ** 4))
        for p in GRID
    )
    assert worst <= 1e-9
    print(f"criterion 2 PASS: case-I CHSH max dev {worst:.2e}")


def test_criterion_03_sudden_death_and_asymmetric_curves():
    p0 = SUDDEN_DEATH_ONSET
    worst_c = worst_b = 0.0
    for p in GRID:
        p = float(p)
        rho = noisy_bell("II", p)
        c = concurrence(rho)
        if p0 <= p <= 1.0 - p0:
            assert c == 0.0
        elif p < p0:
            worst_c = max(worst_c, abs(c - (2.0 * p**2 - 4.0 * p + 1.0)))
        else:
            worst_c = max(worst_c, abs(c - (2.0 * p**2 - 1.0)))
        worst_b = max(worst_b, abs(chsh_max(rho) - 2.0 * np.sqrt(2.0) * abs(1.0 - 2.0 * p)))
    assert worst_c <= 1e-10
    assert worst_b <= 1e-9
    print(f"criterion 3 PASS: sudden death exact, piecewise dev {worst_c:.2e}, "
          f"CHSH dev {worst_b:.2e}")


def test_criterion_04_entanglement_without_nonlocality():
    p0 = SUDDEN_DEATH_ONSET
    samples = np.linspace(p0 / 2, p0, 12)[1:-1]     # 10 points strictly inside
    for p in samples:
        rho = noisy_bell("II", float(p))
        assert concurrence(rho) > 0.0
        assert chsh_max(rho) <= 2.0
    print("criterion 4 PASS: 10 window points entangled but local")


def test_criterion_05_protected_metrics():
    start = time.perf_counter()
    worst_c = worst_b = worst_eq = 0.0
    for p in GRID:
        p = float(p)
        rho = corrected_pair("I", p)
        scale = 1.0 - 6.0 * p**2 + 4.0 * p**3
        worst_c = max(worst_c, abs(concurrence(rho) - scale**2))
        worst_b = max(worst_b, abs(chsh_max(rho) - 2.0 * np.sqrt(1.0 + scale**4)))
        worst_eq = max(worst_eq, float(np.max(np.abs(corrected_pair("II", p) - rho))))
    elapsed = time.perf_counter() - start
    assert worst_c <= 1e-10
    assert worst_b <= 1e-10
    assert worst_eq <= 1e-12
    assert elapsed < 10.0
    print(f"criterion 5 PASS: protected concurrence dev {worst_c:.2e}, CHSH dev "
          f"{worst_b:.2e}, case gap {worst_eq:.2e}, {elapsed:.2f}s")


def test_criterion_06_correction_probability_enumeration():
    for p in (0.0, 0.1, 0.3, 1.0):
        survive = 0.0
        for pattern in itertools.product((0, 1), repeat=3):
            weight = 1.0
            for bit in pattern:
                weight *= p if bit else 1.0 - p
            if sum(pattern) <= 1:
                survive += weight
        assert survive == correction_probability(p)
    print("criterion 6 PASS: 8-pattern enumeration reproduces (1-p)^2(1+2p) exactly")


def test_criterion_07_dense_coding():
    assert abs(dense_coding("I", 0.0).mutual_information - 2.0) <= 1e-9
    assert abs(dense_coding("I", 0.5).mutual_information - 1.0) <= 1e-9
    assert abs(dense_coding("II", 0.5).mutual_information - 0.0) <= 1e-9
    worst_eq = 0.0
    for p in GRID:
        p = float(p)
        a = dense_coding("I", p, with_qec=True).mutual_information
        b = dense_coding("II", p, with_qec=True).mutual_information
        worst_eq = max(worst_eq, abs(a - b))
        assert a >= dense_coding("II", p).mutual_information - 1e-10
    assert worst_eq <= 1e-10
    print(f"criterion 7 PASS: dense-coding endpoints exact, protected case gap {worst_eq:.2e}")


def test_criterion_08_teleportation_fidelity():
    start = time.perf_counter()
    worst = 0.0
    for p in GRID:
        p = float(p)
        worst = max(worst, abs(avg_teleport_fidelity("I", p) - (1 - 4 / 3 * p * (1 - p))))
        worst = max(worst, abs(avg_teleport_fidelity("II", p) - (1 - 2 / 3 * p * (2 - p))))
        protected = avg_teleport_fidelity("I", p, with_qec=True)
        expected = 1 - 4 / 3 * p**2 * (1 - p) ** 2 * (3 - 2 * p) * (1 + 2 * p)
        worst = max(worst, abs(protected - expected))
    elapsed = time.perf_counter() - start
    assert worst <= 1e-9
    assert abs(avg_teleport_fidelity("I", 0.5) - 2.0 / 3.0) <= 1e-9
    assert abs(avg_teleport_fidelity("II", 1.0) - 1.0 / 3.0) <= 1e-9
    assert elapsed < 20.0
    print(f"criterion 8 PASS: fidelity curves dev {worst:.2e} in {elapsed:.2f}s")


def test_criterion_09_oracle_equivalence():
    rng = np.random.default_rng(90)
    worst_search = max(
        abs(chsh_max_search(rho) - chsh_max(rho))
        for rho in (random_density(rng, 2) for _ in range(100))
    )
    assert worst_search <= 1e-3
    worst_conc = max(
        abs(concurrence(rho) - concurrence_via_sqrt(rho))
        for rho in (random_density(rng, 2) for _ in range(200))
    )
    assert worst_conc <= 1e-8
    print(f"criterion 9 PASS: CHSH search dev {worst_search:.2e}, "
          f"concurrence dual-route dev {worst_conc:.2e}")


def test_criterion_10_property_suite():
    rng = np.random.default_rng(97)

    # trace and positivity preservation through the channels
    for _ in range(25):
        rho = random_density(rng, 2)
        channel = bit_flip(rng.uniform()) if rng.uniform() < 0.5 else phase_flip(rng.uniform())
        out = apply_channel(rho, channel, int(rng.integers(2)))
        assert abs(np.trace(out).real - 1.0) <= 1e-12
        assert np.min(np.linalg.eigvalsh(out)) >= -1e-10

    # gate unitarity
    for _ in range(10):
        n = int(rng.integers(2, 5))
        slots = rng.permutation(n)
        gates = [
            cnot(n, int(slots[0]), int(slots[1])),
            hadamard_at(n, int(slots[0])),
            pauli_at(n, int(rng.integers(4)), int(slots[1])),
        ]
        if n >= 3:
            gates.append(toffoli(n, int(slots[0]), int(slots[1]), int(slots[2])))
        for g in gates:
            assert np.max(np.abs(g.conj().T @ g - np.eye(2**n))) <= 1e-12

    # Bell measurement resolves the identity
    assert np.max(np.abs(sum(bell_projectors()) - np.eye(4))) <= 1e-12

    # teleportation outcome uniformity across the sweep grid
    for case in ("I", "II"):
        for qec in (False, True):
            for p in np.linspace(0.0, 1.0, 11):
                pair = corrected_pair(case, float(p)) if qec else noisy_bell(case, float(p))
                _, probs = teleport_output(pair, float(rng.uniform(0, np.pi)),
                                           float(rng.uniform(0, 2 * np.pi)))
                assert np.max(np.abs(probs - 0.25)) <= 1e-10

    print("criterion 10 PASS: trace/PSD preservation, unitarity, completeness, uniformity")
