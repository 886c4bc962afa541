"""Timing kernels for the word-parallel string product and tableau gates."""

from __future__ import annotations

import time

import numpy as np

from .strings import BladeString, PauliString, pauli_mul, string_mul
from .tableau import Tableau

KERNELS = ("pauli-mul", "tableau-gate")

# a tableau gate touches all 2n rows, each O(n/w) words, so per-gate time is
# quadratic-with-word-parallel; sizes above this are skipped for that kernel
TABLEAU_GATE_SIZE_CAP = 1 << 14


def random_pauli(n: int, rng) -> PauliString:
    nbytes = (n + 7) // 8
    mask = (1 << n) - 1
    x = int.from_bytes(rng.bytes(nbytes), "little") & mask
    z = int.from_bytes(rng.bytes(nbytes), "little") & mask
    return PauliString(n, x, z, int(rng.integers(4)))


def random_blades(n: int, rng) -> BladeString:
    nbytes = (n + 7) // 8
    mask = (1 << n) - 1
    e1 = int.from_bytes(rng.bytes(nbytes), "little") & mask
    e2 = int.from_bytes(rng.bytes(nbytes), "little") & mask
    return BladeString(n, e1, e2, int(rng.choice((1, -1))))


def time_string_mul(n: int, reps: int = 20, seed: int = 0, inner: int = 4) -> list[float]:
    """Per-call wall times in ns for the blade-string product."""
    rng = np.random.default_rng([seed, n])
    pairs = [(random_blades(n, rng), random_blades(n, rng)) for _ in range(inner)]
    for a, b in pairs:  # warm-up
        string_mul(a, b)
    samples = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        for a, b in pairs:
            string_mul(a, b)
        samples.append((time.perf_counter_ns() - t0) / inner)
    return samples


def time_pauli_mul(n: int, reps: int = 20, seed: int = 0, inner: int = 4) -> list[float]:
    """Per-call wall times in ns; each rep times `inner` products."""
    rng = np.random.default_rng([seed, n])
    pairs = [(random_pauli(n, rng), random_pauli(n, rng)) for _ in range(inner)]
    for a, b in pairs:  # warm-up
        pauli_mul(a, b)
    samples = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        for a, b in pairs:
            pauli_mul(a, b)
        samples.append((time.perf_counter_ns() - t0) / inner)
    return samples


def time_tableau_gate(n: int, reps: int = 20, seed: int = 0, gates_per_rep: int = 4) -> list[float]:
    """Per-gate wall times in ns on a fresh tableau (H on random qubits)."""
    rng = np.random.default_rng([seed, n])
    t = Tableau(n)
    qubits = [int(q) for q in rng.integers(0, n, size=gates_per_rep)]
    for q in qubits:  # warm-up
        t.h(q)
    samples = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        for q in qubits:
            t.h(q)
        samples.append((time.perf_counter_ns() - t0) / gates_per_rep)
    return samples


def bench_rows(sizes, reps: int = 20, kernels=KERNELS, seed: int = 0) -> list[dict]:
    if reps < 1:
        raise ValueError("need at least one repetition")
    rows = []
    for kernel in kernels:
        timer = time_pauli_mul if kernel == "pauli-mul" else time_tableau_gate
        for n in sizes:
            if kernel == "tableau-gate" and n > TABLEAU_GATE_SIZE_CAP:
                continue
            samples = timer(n, reps=reps, seed=seed)
            rows.append(
                {
                    "kernel": kernel,
                    "n": int(n),
                    "median_ns": float(np.median(samples)),
                    "p90_ns": float(np.percentile(samples, 90)),
                }
            )
    return rows


def format_csv(rows) -> str:
    lines = ["kernel,n,median_ns,p90_ns"]
    for r in rows:
        lines.append(f"{r['kernel']},{r['n']},{r['median_ns']:.1f},{r['p90_ns']:.1f}")
    return "\n".join(lines) + "\n"
