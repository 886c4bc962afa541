"""Circuit execution on three backends, plus cross-validation between them.

Backends:
  * "stabilizer":     tableau engine, scales to thousands of qubits.
  * "dense-clifford": the state lives inside the algebra and gates act as
                      operator pairs; capped by the dense-oracle limit.
  * "statevector":    plain Hilbert-space simulation; capped at a desk scale.

Every backend derives one random stream per shot from (seed, shot index), so
a report is reproducible from its flags regardless of execution order.  The
gate prefix before the first measurement is evolved once and snapshotted.
"""

from __future__ import annotations

import math
import time

import numpy as np

from . import statevector as sv
from .circuit import Circuit
from .dense import check_cap
from .errors import TableauInvariantError
from .gates import gate_to_operator_pair, qubit_projector
from .ideal import IdealState, OperatorPair, apply, to_statevector
from .tableau import Tableau

BACKENDS = ("stabilizer", "dense-clifford", "statevector")

EXACT_TOL = 1e-8
STAT_TOL = 0.02
BORN_ENUMERATION_LIMIT = 16


def _shot_rng(seed: int, shot: int):
    return np.random.default_rng([int(seed), int(shot)])


def statevector_pairs(v: np.ndarray) -> list[list[float]]:
    """State vector as JSON-ready [re, im] pairs."""
    return [[float(a.real), float(a.imag)] for a in np.asarray(v).ravel()]


def matrix_pairs(m: np.ndarray) -> list[list[list[float]]]:
    """Complex matrix as row-major [re, im] pairs."""
    return [statevector_pairs(row) for row in np.asarray(m)]


def _counts(circuit: Circuit, records: list[list[int]]) -> dict[str, int]:
    counts: dict[str, int] = {}
    measures = [op for op in circuit.ops if op.is_measure]
    for rec in records:
        reg = ["0"] * circuit.creg
        for op, outcome in zip(measures, rec):
            reg[op.slot] = str(outcome)
        key = "".join(reg)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _split_at_first_measure(circuit: Circuit) -> int:
    for i, op in enumerate(circuit.ops):
        if op.is_measure:
            return i
    return len(circuit.ops)


def _run_stabilizer(circuit: Circuit, shots: int, seed: int):
    cut = _split_at_first_measure(circuit)
    base = Tableau(circuit.n)
    for op in circuit.ops[:cut]:
        base.apply_gate(op)
    records = []
    last = base
    for shot in range(shots):
        t = base.copy()
        rng = _shot_rng(seed, shot)
        rec = []
        for op in circuit.ops[cut:]:
            if op.is_measure:
                outcome, _ = t.measure_z(op.qubits[0], rng)
                rec.append(outcome)
            else:
                t.apply_gate(op)
        records.append(rec)
        last = t
    return records, {"stabilizers": last.stabilizer_lines()}


def _run_statevector(circuit: Circuit, shots: int, seed: int):
    cut = _split_at_first_measure(circuit)
    base = sv.zero_state(circuit.n)
    for op in circuit.ops[:cut]:
        base = sv.apply_gate(base, op, circuit.n)
    records = []
    last = base
    for shot in range(shots):
        state = base
        rng = _shot_rng(seed, shot)
        rec = []
        for op in circuit.ops[cut:]:
            if op.is_measure:
                state, outcome, _ = sv.measure(state, op.qubits[0], circuit.n, rng)
                rec.append(outcome)
            else:
                state = sv.apply_gate(state, op, circuit.n)
        records.append(rec)
        last = state
    return records, {"statevector": statevector_pairs(last)}


def _ideal_p1(state: IdealState, q: int) -> tuple[float, np.ndarray]:
    amps = to_statevector(state)
    w = np.abs(amps) ** 2
    total = float(w.sum())
    bit = ((np.arange(w.size) >> (state.n - 1 - q)) & 1).astype(bool)
    return float(w[bit].sum() / total), w


def _ideal_collapse(state: IdealState, q: int, outcome: int, weight: float) -> IdealState:
    proj = OperatorPair.real(qubit_projector(state.n, q, outcome))
    projected = apply(proj, state)
    return IdealState(state.n, projected.psi * (1.0 / math.sqrt(weight)))


def _run_dense_clifford(circuit: Circuit, shots: int, seed: int):
    n = circuit.n
    check_cap(n, "dense-clifford backend")
    pairs = {}
    for op in circuit.ops:
        if not op.is_measure and (op.kind, op.qubits) not in pairs:
            pairs[(op.kind, op.qubits)] = gate_to_operator_pair(op, n)
    cut = _split_at_first_measure(circuit)
    base = IdealState.zero_state(n)
    for op in circuit.ops[:cut]:
        base = apply(pairs[(op.kind, op.qubits)], base)
    records = []
    last = base
    for shot in range(shots):
        state = base
        rng = _shot_rng(seed, shot)
        rec = []
        for op in circuit.ops[cut:]:
            if op.is_measure:
                q = op.qubits[0]
                p1, w = _ideal_p1(state, q)
                outcome = 1 if rng.random() < p1 else 0
                branch = p1 if outcome else 1.0 - p1
                state = _ideal_collapse(state, q, outcome, branch * float(w.sum()))
                rec.append(outcome)
            else:
                state = apply(pairs[(op.kind, op.qubits)], state)
        records.append(rec)
        last = state
    return records, {"statevector": statevector_pairs(to_statevector(last))}


_RUNNERS = {
    "stabilizer": _run_stabilizer,
    "statevector": _run_statevector,
    "dense-clifford": _run_dense_clifford,
}


def run(circuit: Circuit, backend: str = "stabilizer", shots: int = 1, seed: int = 0) -> dict:
    """Execute a circuit and return a JSON-ready report.

    The report is identical for identical (circuit, backend, shots, seed)
    except for the "timing" section.
    """
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}, expected one of {BACKENDS}")
    if shots < 1:
        raise ValueError("shots must be at least 1")
    t0 = time.perf_counter()
    records, final = _RUNNERS[backend](circuit, shots, seed)
    elapsed = time.perf_counter() - t0
    return {
        "backend": backend,
        "n": circuit.n,
        "creg": circuit.creg,
        "shots": shots,
        "seed": seed,
        "records": records,
        "counts": _counts(circuit, records),
        "final": final,
        "timing": {"total_s": elapsed, "per_shot_s": elapsed / shots},
    }


def born_distribution(
    circuit: Circuit, max_measures: int = BORN_ENUMERATION_LIMIT, eps: float = 1e-12
) -> dict:
    """Exact outcome-record distribution by branching the state vector.

    Returns {record tuple: probability}.  Cost doubles per measurement, so
    circuits with more than `max_measures` measurements are rejected.
    """
    if circuit.measure_count > max_measures:
        raise ValueError(f"cannot enumerate more than {max_measures} measurements")
    n = circuit.n
    out: dict[tuple, float] = {}
    stack = [(sv.zero_state(n), 0, 1.0, ())]
    while stack:
        state, i, prob, rec = stack.pop()
        while i < len(circuit.ops) and not circuit.ops[i].is_measure:
            state = sv.apply_gate(state, circuit.ops[i], n)
            i += 1
        if i == len(circuit.ops):
            out[rec] = out.get(rec, 0.0) + prob
            continue
        q = circuit.ops[i].qubits[0]
        p1 = sv.born_p1(state, q, n)
        for outcome, p in ((0, 1.0 - p1), (1, p1)):
            if p > eps:
                stack.append((sv.collapse(state, q, n, outcome), i + 1, prob * p, rec + (outcome,)))
    return out


def validate(
    circuit: Circuit,
    shots: int = 10_000,
    seed: int = 0,
    exact_tol: float = EXACT_TOL,
    stat_tol: float | None = None,
) -> dict:
    """Cross-check the three backends on one circuit.

    Exact checks: tableau invariants after every step, every final stabilizer
    row fixes the oracle state, and the algebra-resident state tracks the
    state vector through gates and synchronized measurements.  Statistical
    check: stabilizer-backend outcome frequencies against the exact Born
    distribution; the default tolerance is 0.02 at 10^4 shots and widens as
    four binomial sigmas below that.  The report lists one entry per check.
    """
    check_cap(circuit.n, "validation")
    if stat_tol is None:
        stat_tol = max(STAT_TOL, 4.0 * math.sqrt(0.25 / max(shots, 1)))
    n = circuit.n
    checks = []

    # tableau group structure after every gate and measurement
    try:
        t = Tableau(n)
        rng = _shot_rng(seed, 0)
        t.check_invariants()
        for op in circuit.ops:
            if op.is_measure:
                t.measure_z(op.qubits[0], rng)
            else:
                t.apply_gate(op)
            t.check_invariants()
        checks.append({"name": "tableau_invariants", "passed": True, "detail": "ok"})
    except TableauInvariantError as err:
        checks.append({"name": "tableau_invariants", "passed": False, "detail": str(err)})

    # final stabilizer rows fix the oracle state (unitary part of the circuit)
    t = Tableau(n)
    psi = sv.zero_state(n)
    for op in circuit.ops:
        if op.is_measure:
            continue
        t.apply_gate(op)
        psi = sv.apply_gate(psi, op, n)
    dev = 0.0
    for row in t.stabilizers:
        dev = max(dev, float(np.max(np.abs(sv.pauli_matrix(row) @ psi - psi))))
    checks.append(
        {
            "name": "stabilizer_rows_fix_oracle_state",
            "passed": dev <= exact_tol,
            "detail": f"max |rho(s) psi - psi| = {dev:.3e}",
        }
    )

    # algebra-resident evolution against the state vector, shared outcomes
    pairs = {}
    for op in circuit.ops:
        if not op.is_measure and (op.kind, op.qubits) not in pairs:
            pairs[(op.kind, op.qubits)] = gate_to_operator_pair(op, n)
    state_sv = sv.zero_state(n)
    state_dc = IdealState.zero_state(n)
    rng = _shot_rng(seed, 1)
    dev = 0.0
    for op in circuit.ops:
        if op.is_measure:
            q = op.qubits[0]
            p1_sv = sv.born_p1(state_sv, q, n)
            p1_dc, w = _ideal_p1(state_dc, q)
            dev = max(dev, abs(p1_sv - p1_dc))
            outcome = 1 if rng.random() < p1_sv else 0
            state_sv = sv.collapse(state_sv, q, n, outcome)
            branch = p1_dc if outcome else 1.0 - p1_dc
            state_dc = _ideal_collapse(state_dc, q, outcome, branch * float(w.sum()))
        else:
            state_sv = sv.apply_gate(state_sv, op, n)
            state_dc = apply(pairs[(op.kind, op.qubits)], state_dc)
    dev = max(dev, float(np.max(np.abs(to_statevector(state_dc) - state_sv))))
    checks.append(
        {
            "name": "dense_clifford_matches_statevector",
            "passed": dev <= exact_tol,
            "detail": f"max deviation = {dev:.3e}",
        }
    )

    # empirical stabilizer statistics against the exact distribution (or an
    # empirical state-vector reference when there are too many measurements
    # to enumerate every branch)
    if circuit.measure_count > 0 and shots > 0:
        report = run(circuit, "stabilizer", shots=shots, seed=seed)
        freqs: dict[tuple, float] = {}
        for rec in report["records"]:
            key = tuple(rec)
            freqs[key] = freqs.get(key, 0.0) + 1.0 / shots
        enumerable = circuit.measure_count <= BORN_ENUMERATION_LIMIT
        if enumerable:
            dist = born_distribution(circuit)
            tol = stat_tol
            impossible = [k for k in freqs if k not in dist]
        else:
            ref = run(circuit, "statevector", shots=shots, seed=seed)
            dist = {}
            for rec in ref["records"]:
                key = tuple(rec)
                dist[key] = dist.get(key, 0.0) + 1.0 / shots
            tol = stat_tol * math.sqrt(2.0)  # two sampled sides
            impossible = []
        worst = 0.0
        for key in set(dist) | set(freqs):
            worst = max(worst, abs(freqs.get(key, 0.0) - dist.get(key, 0.0)))
        passed = not impossible and worst <= tol
        ref_name = "exact" if enumerable else "sampled"
        detail = f"max |freq - p| = {worst:.4f} over {len(dist)} records ({ref_name} reference)"
        if impossible:
            detail = f"impossible record observed: {impossible[0]}; " + detail
        checks.append({"name": "measurement_statistics", "passed": passed, "detail": detail})

    return {
        "n": n,
        "shots": shots,
        "seed": seed,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }
