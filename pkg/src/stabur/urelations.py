"""Uncertainty-relation evaluation and verification.

Covers four families of statements about dichotomic (±1-eigenvalue)
observables and measurement bases:

* the two-basis entropic bound -log2 max|<a_i|b_j>| and its tightness for
  stabilizer bases, where every basis state attains the bound;
* the expectation-ball constraint sum_k <A_k>^2 <= 1 for pairwise
  anticommuting observables, together with its converse (any point of the
  ball is realized by the state (1 + sum_k a_k A_k)/d);
* the resulting exact minimum (L-1)/L * S0 of the average entropy for L
  pairwise anticommuting observables, valid for any entropy concave in the
  squared expectation value;
* the average-entropy bound S0/2 for the symmetric difference of two
  stabilizer groups, obtained by splitting the difference into
  anticommuting pairs via bipartite matching, with every basis state of
  either group attaining it;
* a multi-basis min-entropy bound -log2[(1 + r(L-1))/L] from the largest
  pairwise basis overlap r (verified empirically against sampled states).

Entropy averages on stabilizer basis states are evaluated group-
theoretically (expectations in {-1, 0, +1}); dense states enter only for
sampled non-stabilizer states and oracle cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from .entropy import (
    EntropySpec,
    entropy,
    entropy_from_sq_expectation,
    flat_entropy,
    require_concave,
)
from .oracle import DenseState, dense_pauli, random_pure_state, stabilizer_state_dense
from .pauli import DimensionMismatch, PauliOperator, commutes
from .stabgroup import (
    StabilizerGroup,
    basis_state_group,
    enumerate_elements,
    intersect,
    max_overlap_magnitude,
    mu_bound_stabilizer,
    stabilizer_expectation,
)


class ObservableSet:
    """Dichotomic observables: Hermitian, non-identity Pauli words on n qubits."""

    def __init__(self, observables: Sequence[PauliOperator]):
        obs = tuple(observables)
        if not obs:
            raise ValueError("empty observable set")
        n = obs[0].n
        for i, a in enumerate(obs):
            if a.n != n:
                raise DimensionMismatch(f"observable {i} acts on {a.n} qubits, expected {n}")
            _check_dichotomic(a, i)
        self.observables = obs
        self.n = n

    @property
    def L(self) -> int:
        return len(self.observables)

    def pairwise_anticommuting(self) -> bool:
        obs = self.observables
        return all(
            not commutes(obs[i], obs[j])
            for i in range(len(obs))
            for j in range(i + 1, len(obs))
        )

    def require_anticommuting(self) -> None:
        obs = self.observables
        for i in range(len(obs)):
            for j in range(i + 1, len(obs)):
                if commutes(obs[i], obs[j]):
                    raise ValueError(
                        f"observables {i} and {j} commute; a pairwise anticommuting set is required"
                    )


@dataclass(frozen=True)
class SymmetricDifference:
    """Sign-insensitive symmetric difference of two groups, keeping the two sides."""

    s_only: Tuple[PauliOperator, ...]
    t_only: Tuple[PauliOperator, ...]

    @property
    def observables(self) -> Tuple[PauliOperator, ...]:
        return self.s_only + self.t_only

    @property
    def L(self) -> int:
        return len(self.s_only) + len(self.t_only)


@dataclass(frozen=True)
class MatchingResult:
    """Disjoint anticommuting index pairs covering a symmetric difference.

    Index k < L/2 refers to s_only[k]; index k >= L/2 to t_only[k - L/2].
    """

    pairs: Tuple[Tuple[int, int], ...]


class MetaCheckResult(NamedTuple):
    sum_sq: float
    holds: bool
    variance_sum: float


@dataclass(frozen=True)
class URReport:
    """Outcome of an uncertainty-relation check at concrete states.

    ``achieved`` is the smallest average entropy seen; ``per_state`` carries
    one (basis tag, label, average) row per evaluated basis state.
    """

    bound: float
    achieved: float
    tight: bool
    witness: str
    per_state: Tuple[Tuple[str, int, float], ...] = field(default=(), repr=False)


def entropy_of_observable(a: PauliOperator, state: DenseState, spec: EntropySpec) -> float:
    """Entropy of the two-outcome distribution ((1+<a>)/2, (1-<a>)/2)."""
    _check_dichotomic(a, 0)
    if state.dim != (1 << a.n):
        raise DimensionMismatch(
            f"state dimension {state.dim} does not match {a.n}-qubit observable"
        )
    e = state.expectation(dense_pauli(a))
    e = min(max(e, -1.0), 1.0)
    return entropy(spec, ((1.0 + e) / 2.0, (1.0 - e) / 2.0))


def mu_bound_general(basis_a, basis_b) -> float:
    """-log2 of the largest overlap magnitude between two orthonormal bases."""
    mat_a = _basis_matrix(basis_a)
    mat_b = _basis_matrix(basis_b)
    if mat_a.shape != mat_b.shape:
        raise ValueError("bases act on different dimensions")
    overlaps = np.abs(mat_a.conj() @ mat_b.T)
    return float(-math.log2(float(overlaps.max())))


def check_tightness(s: StabilizerGroup, t: StabilizerGroup, max_n: int = 8) -> URReport:
    """Evaluate the two-basis Shannon bound on every basis state of both bases.

    The bound comes from the group intersection; the entropy averages come
    from dense overlap probabilities (snapped to exact dyadics when within
    1e-9), so the two sides are computed along independent routes.
    """
    if s.n != t.n:
        raise DimensionMismatch(f"group sizes differ: {s.n} vs {t.n}")
    if s.n > max_n:
        raise ValueError(f"{s.n} qubits exceeds the oracle limit of {max_n}")
    bound = mu_bound_stabilizer(s, t)
    size = 1 << s.n
    mat_s = np.asarray(
        [stabilizer_state_dense(basis_state_group(s, lab)).data for lab in range(size)]
    )
    mat_t = np.asarray(
        [stabilizer_state_dense(basis_state_group(t, lab)).data for lab in range(size)]
    )
    ss = np.abs(mat_s.conj() @ mat_s.T) ** 2
    st = np.abs(mat_s.conj() @ mat_t.T) ** 2
    tt = np.abs(mat_t.conj() @ mat_t.T) ** 2
    shannon = EntropySpec("shannon")
    rows: List[Tuple[str, int, float]] = []
    for lab in range(size):
        avg = 0.5 * (
            entropy(shannon, _snap_dyadic(ss[lab], s.n))
            + entropy(shannon, _snap_dyadic(st[lab], s.n))
        )
        rows.append(("s", lab, avg))
    for lab in range(size):
        avg = 0.5 * (
            entropy(shannon, _snap_dyadic(st[:, lab], s.n))
            + entropy(shannon, _snap_dyadic(tt[lab], s.n))
        )
        rows.append(("t", lab, avg))
    achieved = min(avg for _, _, avg in rows)
    witness_tag, witness_lab, _ = min(rows, key=lambda r: (r[2], r[0], r[1]))
    return URReport(
        bound=bound,
        achieved=achieved,
        tight=bool(abs(achieved - bound) <= 1e-9),
        witness=f"basis {witness_tag}, label {format(witness_lab, f'0{s.n}b')}",
        per_state=tuple(rows),
    )


def meta_uncertainty_check(obs, state: DenseState) -> MetaCheckResult:
    """Sum of squared expectations of a pairwise anticommuting set on a state.

    The sum never exceeds 1 for valid inputs; equivalently the variances sum
    to at least L - 1.
    """
    obs = _as_observable_set(obs)
    obs.require_anticommuting()
    if state.dim != (1 << obs.n):
        raise DimensionMismatch(
            f"state dimension {state.dim} does not match {obs.n}-qubit observables"
        )
    sum_sq = 0.0
    for a in obs.observables:
        e = state.expectation(dense_pauli(a))
        sum_sq += e * e
    return MetaCheckResult(
        sum_sq=sum_sq,
        holds=bool(sum_sq <= 1.0 + 1e-9),
        variance_sum=obs.L - sum_sq,
    )


def state_from_expectations(obs, targets: Sequence[float]) -> DenseState:
    """State (1/d)(I + sum_k a_k A_k) realizing the requested expectations.

    Requires sum a_k^2 <= 1 and a pairwise anticommuting set; the result is
    verified positive semidefinite and to reproduce the targets to 1e-10.
    """
    obs = _as_observable_set(obs)
    obs.require_anticommuting()
    targets = [float(a) for a in targets]
    if len(targets) != obs.L:
        raise ValueError(f"{len(targets)} targets for {obs.L} observables")
    norm_sq = sum(a * a for a in targets)
    if norm_sq > 1.0 + 1e-12:
        raise ValueError(f"sum of squared targets {norm_sq} exceeds 1; infeasible")
    d = 1 << obs.n
    rho = np.eye(d, dtype=complex)
    mats = [dense_pauli(a) for a in obs.observables]
    for a_k, m in zip(targets, mats):
        rho += a_k * m
    state = DenseState.mixed(rho / d)
    for a_k, m in zip(targets, mats):
        got = state.expectation(m)
        if abs(got - a_k) > 1e-10:
            raise AssertionError(f"expectation {got} != target {a_k}")
    return state


def anticommuting_bound(L: int, spec: EntropySpec) -> float:
    """Exact minimum (L-1)/L * S0 of the average entropy for L anticommuting observables."""
    if L < 1:
        raise ValueError(f"need at least one observable, got {L}")
    require_concave(spec)
    return (L - 1) / L * flat_entropy(spec)


def anticommutation_count(g: StabilizerGroup, p: PauliOperator) -> int:
    """Number of group elements anticommuting with p: 0 or exactly 2^(n-1).

    Anticommutation against a product is the XOR over its factors, so the
    count is zero when p commutes with every generator and half the group
    otherwise; only generator symplectic products are evaluated.
    """
    if p.n != g.n:
        raise DimensionMismatch(f"operator acts on {p.n} qubits, group on {g.n}")
    if all(commutes(p, gen) for gen in g.generators):
        return 0
    return 1 << (g.n - 1)


def symmetric_difference(s: StabilizerGroup, t: StabilizerGroup) -> SymmetricDifference:
    """Elements in exactly one group, signs ignored for membership.

    Elements keep the sign they carry in their own group.  Raises for equal
    groups (equality up to generator signs), where the difference is empty.
    """
    if s.n != t.n:
        raise DimensionMismatch(f"group sizes differ: {s.n} vs {t.n}")
    s_elems = enumerate_elements(s)
    t_elems = enumerate_elements(t)
    s_keys = {(e.x, e.z) for e in s_elems}
    t_keys = {(e.x, e.z) for e in t_elems}
    s_only = tuple(e for e in s_elems if (e.x, e.z) not in t_keys)
    t_only = tuple(e for e in t_elems if (e.x, e.z) not in s_keys)
    if not s_only:
        raise ValueError("groups are equal up to signs; symmetric difference is empty")
    assert len(s_only) == len(t_only)
    return SymmetricDifference(s_only=s_only, t_only=t_only)


def perfect_matching(diff: SymmetricDifference) -> MatchingResult:
    """Perfect matching of anticommuting pairs across the two difference sides.

    Uses repeated augmenting-path search on the bipartite anticommutation
    graph; a perfect matching always exists for valid inputs, so failure to
    find one signals a bug.
    """
    half = len(diff.s_only)
    adjacency = [
        [j for j, t_op in enumerate(diff.t_only) if not commutes(s_op, t_op)]
        for s_op in diff.s_only
    ]
    match_t = [-1] * half

    def augment(i: int, visited: List[bool]) -> bool:
        for j in adjacency[i]:
            if visited[j]:
                continue
            visited[j] = True
            if match_t[j] < 0 or augment(match_t[j], visited):
                match_t[j] = i
                return True
        return False

    for i in range(half):
        if not augment(i, [False] * half):
            raise AssertionError(
                "no perfect matching found; the anticommutation structure is broken"
            )
    pairs = sorted((match_t[j], half + j) for j in range(half))
    for left, right in pairs:
        assert not commutes(diff.s_only[left], diff.t_only[right - half])
    return MatchingResult(pairs=tuple(pairs))


def group_ur_verify(
    s: StabilizerGroup,
    t: StabilizerGroup,
    spec: EntropySpec,
    num_random: int = 200,
    seed: int = 42,
    max_n: int = 8,
) -> URReport:
    """Verify the S0/2 average-entropy bound over the symmetric difference.

    Basis states of either group are evaluated group-theoretically and must
    attain exactly S0/2 (half the observables have definite outcome, half
    are completely random); Haar-sampled states must stay above the bound.
    """
    require_concave(spec)
    if s.n > max_n:
        raise ValueError(f"{s.n} qubits exceeds the oracle limit of {max_n}")
    diff = symmetric_difference(s, t)
    perfect_matching(diff)  # existence check; the bound needs only the pairing
    bound = 0.5 * flat_entropy(spec)
    rows: List[Tuple[str, int, float]] = []
    for tag, group in (("s", s), ("t", t)):
        for lab in range(1 << s.n):
            basis_group = basis_state_group(group, lab)
            total = 0.0
            for a in diff.observables:
                e = stabilizer_expectation(basis_group, a)
                total += entropy_from_sq_expectation(spec, float(e * e))
            rows.append((tag, lab, total / diff.L))
    basis_min = min(avg for _, _, avg in rows)
    basis_max = max(avg for _, _, avg in rows)
    sampled_min = math.inf
    if num_random > 0:
        rng = np.random.default_rng(seed)
        mats = np.asarray([dense_pauli(a) for a in diff.observables])
        states = np.asarray([random_pure_state(s.n, rng).data for _ in range(num_random)])
        expect = np.real(np.einsum("bi,kij,bj->bk", states.conj(), mats, states))
        expect = np.clip(expect, -1.0, 1.0)
        for row in expect:
            avg = sum(
                entropy_from_sq_expectation(spec, float(e * e)) for e in row
            ) / diff.L
            sampled_min = min(sampled_min, avg)
    achieved = min(basis_min, sampled_min)
    tight = bool(
        abs(basis_min - bound) <= 1e-9
        and abs(basis_max - bound) <= 1e-9
        and achieved >= bound - 1e-9
    )
    return URReport(
        bound=bound,
        achieved=achieved,
        tight=tight,
        witness="every basis state of either group",
        per_state=tuple(rows),
    )


def min_entropy_multibasis_bound(bases: Sequence[StabilizerGroup]) -> float:
    """Min-entropy bound -log2[(1 + r(L-1))/L] from the largest pairwise overlap r."""
    bases = list(bases)
    if len(bases) < 2:
        raise ValueError(f"need at least 2 bases, got {len(bases)}")
    n = bases[0].n
    for b in bases[1:]:
        if b.n != n:
            raise DimensionMismatch("bases act on different qubit counts")
    r = max(
        max_overlap_magnitude(bases[i], bases[j])
        for i in range(len(bases))
        for j in range(i + 1, len(bases))
    )
    L = len(bases)
    return float(-math.log2((1.0 + r * (L - 1)) / L))


def _check_dichotomic(a: PauliOperator, index: int) -> None:
    if not a.is_hermitian:
        raise ValueError(f"observable {index} ({a}) is not Hermitian")
    if a.x == 0 and a.z == 0:
        raise ValueError(f"observable {index} is proportional to the identity")


def _as_observable_set(obs) -> ObservableSet:
    return obs if isinstance(obs, ObservableSet) else ObservableSet(obs)


def _basis_matrix(basis) -> np.ndarray:
    rows = []
    for b in basis:
        rows.append(b.data if isinstance(b, DenseState) else np.asarray(b, dtype=complex))
    mat = np.asarray(rows, dtype=complex)
    gram = mat.conj() @ mat.T
    if mat.shape[0] != mat.shape[1] or np.max(np.abs(gram - np.eye(mat.shape[0]))) > 1e-10:
        raise ValueError("input is not a complete orthonormal basis")
    return mat


def _snap_dyadic(probs: np.ndarray, n: int, tol: float = 1e-9) -> np.ndarray:
    """Replace probabilities by exact multiples of 2^-n when all are within tol."""
    scaled = probs * (1 << n)
    rounded = np.rint(scaled)
    if np.max(np.abs(scaled - rounded)) <= tol * (1 << n) and int(rounded.sum()) == (1 << n):
        return rounded / (1 << n)
    return probs
