"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Every tolerance is pinned in the assertions below; each criterion
also carries a wall-clock budget.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

import numpy as np

from stabur import (
    DenseState,
    EntropySpec,
    Graph,
    amplitude_recurrence,
    amplitude_transform,
    anticommutation_count,
    anticommuting_bound,
    boundary_curve,
    check_tightness,
    commutes,
    dense_pauli,
    entropy_from_sq_expectation,
    enumerate_elements,
    flat_entropy,
    graph_group,
    graph_state_dense,
    graph_sum,
    group_ur_verify,
    meta_uncertainty_check,
    min_entropy_multibasis_bound,
    minimize_entropy_sum,
    mu_bound_graphs,
    parse_pauli,
    perfect_matching,
    random_pauli,
    stabilizer_state_dense,
    state_from_expectations,
    symmetric_difference,
    validate_group,
)
from stabur.stabgroup import overlap_squared, random_group

from conftest import random_graph

SH = EntropySpec("shannon")
TS2 = EntropySpec("tsallis", 2.0)

XYZ = [parse_pauli(s) for s in ("X", "Y", "Z")]
ANTI5 = [parse_pauli(s) for s in ("XII", "YII", "ZXI", "ZYI", "ZZX")]


def _finish(num: int, name: str, started: float, budget: float, ok: bool) -> None:
    elapsed = time.monotonic() - started
    print(f"criterion {num:2d} [{name}]: {'PASS' if ok else 'FAIL'} "
          f"({elapsed:.1f}s of {budget:.0f}s budget)")
    assert ok, f"criterion {num} ({name}) failed"
    assert elapsed < budget, f"criterion {num} runtime {elapsed:.1f}s over budget {budget}s"


def _haar_states(n: int, count: int, rng) -> np.ndarray:
    vecs = rng.standard_normal((count, 1 << n)) + 1j * rng.standard_normal((count, 1 << n))
    return vecs / np.linalg.norm(vecs, axis=1, keepdims=True)


def _pauli_expectations(states: np.ndarray, paulis) -> np.ndarray:
    mats = np.asarray([dense_pauli(p) for p in paulis])
    return np.real(np.einsum("bi,kij,bj->bk", states.conj(), mats, states))


def _shannon_two_outcome(e: np.ndarray) -> np.ndarray:
    p = np.clip((1.0 + np.abs(e)) / 2.0, 0.5, 1.0)
    q = 1.0 - p
    out = -p * np.log2(p)
    nz = q > 0
    out[nz] -= q[nz] * np.log2(q[nz])
    return out


def test_criterion_01_overlap_oracle_equivalence():
    started = time.monotonic()
    rng = np.random.default_rng(42)
    worst = 0.0
    for n in (2, 3, 4, 5):
        for _ in range(100):
            s, t = random_group(n, rng), random_group(n, rng)
            exact = float(overlap_squared(s, t).overlap_squared)
            psi = stabilizer_state_dense(s).data
            phi = stabilizer_state_dense(t).data
            worst = max(worst, abs(exact - abs(np.vdot(psi, phi)) ** 2))
    _finish(1, "overlap oracle equivalence", started, 30, worst <= 1e-12)


def test_criterion_02_two_basis_tightness():
    started = time.monotonic()
    rng = np.random.default_rng(42)
    ok = True
    for n in (2, 3, 4):
        for _ in range(50):
            s, t = random_group(n, rng), random_group(n, rng)
            report = check_tightness(s, t)
            ok = ok and abs(report.achieved - report.bound) <= 1e-9
            ok = ok and all(abs(avg - report.bound) <= 1e-9 for _, _, avg in report.per_state)
            ok = ok and report.tight
    _finish(2, "stabilizer-basis tightness, every state attains", started, 120, ok)


def test_criterion_03_worked_four_qubit_example():
    started = time.monotonic()
    complete, path = Graph.complete(4), Graph.path(4)
    summed = graph_sum(complete, path)
    ok = set(summed.edges()) == {(0, 2), (0, 3), (1, 3)}
    via_pair = mu_bound_graphs(complete, path)
    via_sum = mu_bound_graphs(Graph.empty(4), summed)
    ok = ok and via_pair == 2.0 and via_sum == via_pair
    _finish(3, "four-qubit worked example, 2 bits", started, 1, ok)


def test_criterion_04_closed_forms_complete_and_path():
    started = time.monotonic()
    ok = True
    for n in (2, 4, 6, 8, 10):
        want = Fraction(1, 2 ** (n // 2))
        ok = ok and amplitude_transform(Graph.complete(n)).r_max == want
        ok = ok and amplitude_transform(Graph.path(n)).r_max == want
    for n in (3, 5, 7, 9):
        want = Fraction(1, 2 ** ((n - 1) // 2))
        ok = ok and amplitude_transform(Graph.complete(n)).r_max == want
        ok = ok and amplitude_transform(Graph.path(n)).r_max == want
    _finish(4, "closed-form r for complete and path graphs", started, 60, ok)


def test_criterion_05_recurrence_transform_oracle_agree():
    started = time.monotonic()
    rng = np.random.default_rng(42)
    hadamard = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
    ok = True
    worst = 0.0
    for _ in range(50):
        n = int(rng.integers(2, 9))
        g = random_graph(n, rng)
        table = amplitude_transform(g)
        full = np.ones((1, 1), dtype=complex)
        for _ in range(n):
            full = np.kron(full, hadamard)
        dense = np.real(full @ graph_state_dense(g).data)
        for y in range(1 << n):
            exact = amplitude_recurrence(y, g)
            ok = ok and exact == table.value(y)
            worst = max(worst, abs(float(exact) - dense[y]))
    _finish(5, "recurrence = transform = dense oracle", started, 120, ok and worst <= 1e-12)


def test_criterion_06_expectation_ball_round_trip():
    started = time.monotonic()
    rng = np.random.default_rng(42)
    ok = True
    for i in range(100):
        L = 2 + i % 4  # sets of size 2..5 from the anticommuting family
        obs = ANTI5[:L]
        raw = rng.standard_normal(L)
        raw *= rng.random() / np.linalg.norm(raw)
        state = state_from_expectations(obs, raw)
        ok = ok and float(np.linalg.eigvalsh(state.data).min()) >= -1e-10
        back = [state.expectation(dense_pauli(a)) for a in obs]
        ok = ok and max(abs(b - t) for b, t in zip(back, raw)) <= 1e-10
    states = _haar_states(3, 10_000, rng)
    sums = (_pauli_expectations(states, ANTI5) ** 2).sum(axis=1)
    ok = ok and float(sums.max()) <= 1 + 1e-9
    _finish(6, "expectation ball: build states and bound the sum", started, 60, ok)


def test_criterion_07_anticommuting_minimum():
    started = time.monotonic()
    rng = np.random.default_rng(42)
    result3 = minimize_entropy_sum(XYZ, SH, restarts=200, seed=42)
    ok = abs(result3.value - 2 / 3) <= 1e-6
    peak = max(abs(result3.state.expectation(dense_pauli(a))) for a in XYZ)
    ok = ok and peak > 1 - 1e-3  # attained at an eigenstate of one observable
    pair = [parse_pauli("X"), parse_pauli("Y")]
    result2 = minimize_entropy_sum(pair, TS2, restarts=200, seed=42)
    ok = ok and abs(result2.value - 0.25) <= 1e-6

    states = _haar_states(1, 10_000, rng)
    e3 = _pauli_expectations(states, XYZ)
    avg3 = _shannon_two_outcome(e3).mean(axis=1)
    ok = ok and float(avg3.min()) >= 2 / 3 - 1e-9
    e2 = _pauli_expectations(states, pair)
    avg2 = ((1.0 - e2**2) / 2.0).mean(axis=1)
    ok = ok and float(avg2.min()) >= 0.25 - 1e-9
    _finish(7, "exact minimum for anticommuting observables", started, 60, ok)


def test_criterion_08_concavity_second_differences():
    started = time.monotonic()
    expected = {1.1: -1, 1.5: -1, 1.9: -1, 2.0: 0, 2.5: 1, 3.0: 0, 3.5: -1, 8.0: -1}
    h = 1e-2
    ok = True
    for q, want in expected.items():
        spec = EntropySpec("tsallis", q)
        for x in np.arange(0.05, 0.951, 0.05):
            d2 = (
                entropy_from_sq_expectation(spec, x + h)
                - 2 * entropy_from_sq_expectation(spec, x)
                + entropy_from_sq_expectation(spec, x - h)
            ) / (h * h)
            sign = 0 if abs(d2) <= 1e-9 else (1 if d2 > 0 else -1)
            ok = ok and sign == want
    _finish(8, "concavity classification by second differences", started, 1, ok)


def test_criterion_09_half_anticommutation():
    started = time.monotonic()
    rng = np.random.default_rng(42)
    ok = True
    for n in (2, 3, 4, 5, 6):
        for _ in range(50):
            g = random_group(n, rng)
            while True:
                p = random_pauli(n, rng)
                if anticommutation_count(g, p) > 0:
                    break
            brute = sum(1 for e in enumerate_elements(g) if not commutes(e, p))
            ok = ok and brute == (1 << (n - 1)) == anticommutation_count(g, p)
    _finish(9, "anticommutation with exactly half the group", started, 30, ok)


def test_criterion_10_matching_and_group_bound():
    started = time.monotonic()
    rng = np.random.default_rng(42)
    ok = True
    for n in (2, 3, 4, 5):
        done = 0
        while done < 50:
            s, t = random_group(n, rng), random_group(n, rng)
            try:
                diff = symmetric_difference(s, t)
            except ValueError:
                continue  # equal up to signs; criterion needs distinct bases
            done += 1
            matching = perfect_matching(diff)
            obs = diff.observables
            ok = ok and sorted(k for pair in matching.pairs for k in pair) == list(range(diff.L))
            ok = ok and all(not commutes(obs[a], obs[b]) for a, b in matching.pairs)
            shannon_report = group_ur_verify(s, t, SH, num_random=1000, seed=42)
            ok = ok and shannon_report.bound == 0.5
            ok = ok and all(avg == 0.5 for _, _, avg in shannon_report.per_state)
            ok = ok and shannon_report.achieved >= 0.5 - 1e-9
            tsallis_report = group_ur_verify(s, t, TS2, num_random=0, seed=42)
            ok = ok and tsallis_report.bound == 0.25
            ok = ok and all(avg == 0.25 for _, _, avg in tsallis_report.per_state)
    _finish(10, "matching and S0/2 group bound", started, 120, ok)


def test_criterion_11_min_entropy_multibasis():
    started = time.monotonic()
    rng = np.random.default_rng(42)
    x = validate_group([parse_pauli("+X")])
    y = validate_group([parse_pauli("+Y")])
    z = validate_group([parse_pauli("+Z")])
    two = min_entropy_multibasis_bound([x, z])
    three = min_entropy_multibasis_bound([x, y, z])
    ok = abs(two - 0.22844669683638807) <= 1e-12
    ok = ok and abs(three - 0.3134091975575444) <= 1e-12

    states = _haar_states(1, 10_000, rng)
    exp_xyz = _pauli_expectations(states, XYZ)
    min_entropies = -np.log2((1.0 + np.abs(exp_xyz)) / 2.0)
    ok = ok and float(min_entropies[:, [0, 2]].mean(axis=1).min()) >= two - 1e-9
    ok = ok and float(min_entropies.mean(axis=1).min()) >= three - 1e-9
    _finish(11, "multi-basis min-entropy bound", started, 30, ok)


def test_criterion_12_boundary_curves():
    started = time.monotonic()
    circle = boundary_curve(TS2, 501)
    ok = all(abs(a * a + b * b - 1.0) <= 1e-10 for a, b in circle)

    def symmetric_radius(spec) -> float:
        s0 = flat_entropy(spec)
        lo, hi = 0.0, 1.0
        for _ in range(200):
            mid = (lo + hi) / 2
            if 2 * entropy_from_sq_expectation(spec, mid) > s0:
                lo = mid
            else:
                hi = mid
        return math.sqrt((lo + hi) / 2)

    ok = ok and symmetric_radius(SH) < symmetric_radius(EntropySpec("tsallis", 8.0))
    for spec in (SH, TS2, EntropySpec("tsallis", 8.0)):
        pts = boundary_curve(spec, 101)
        ok = ok and pts[0] == (0.0, 1.0) and pts[-1] == (1.0, 0.0)
    _finish(12, "expectation-plane boundary curves", started, 5, ok)


def test_criterion_13_odd_vertex_counts():
    started = time.monotonic()
    rng = np.random.default_rng(42)
    ok = True
    all_edges3 = [(0, 1), (0, 2), (1, 2)]
    for bits in range(8):
        g = Graph.from_edges(3, [e for k, e in enumerate(all_edges3) if (bits >> k) & 1])
        r = amplitude_transform(g).r_max
        ok = ok and (r / Fraction(1, 4)).denominator == 1
        ok = ok and float(r) > 2 ** (-3 / 2)
    for _ in range(100):
        r = amplitude_transform(random_graph(5, rng)).r_max
        ok = ok and (r / Fraction(1, 16)).denominator == 1
        ok = ok and float(r) > 2 ** (-5 / 2)
    _finish(13, "odd vertex counts never maximally strong", started, 30, ok)
