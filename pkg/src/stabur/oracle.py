"""Dense complex linear-algebra ground truth for the group-theoretic fast paths.

Everything here works on explicit statevectors and density matrices, so it is
exponential in the qubit count and gated by resource limits (statevectors up
to n = 10, density matrices up to n = 8 by default).  The basis-index
convention matches the rest of the package: qubit 0 is the first Kronecker
factor, i.e. the most significant bit of the index.

States are compared only through overlap magnitudes, never entrywise, so
global phases cannot cause false mismatches.
"""

from __future__ import annotations

import math
from typing import List, NamedTuple, Optional, Sequence, Union

import numpy as np

from .entropy import EntropySpec, ProbabilityDistribution, entropy
from .graphstate import Graph, ResourceLimitError
from .pauli import PauliOperator
from .stabgroup import StabilizerGroup, enumerate_elements

MAX_VECTOR_QUBITS = 10
MAX_DENSITY_QUBITS = 8

_SINGLE = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
    (1, 1): np.array([[0, -1], [1, 0]], dtype=complex),  # X @ Z
}


class DenseState:
    """Pure state (unit vector) or mixed state (density matrix)."""

    def __init__(self, data, kind: str):
        if kind not in ("pure", "mixed"):
            raise ValueError(f"kind must be 'pure' or 'mixed', got {kind!r}")
        arr = np.asarray(data, dtype=complex)
        if kind == "pure":
            if arr.ndim != 1:
                raise ValueError("pure state must be a vector")
            norm = float(np.linalg.norm(arr))
            if abs(norm - 1.0) > 1e-12:
                raise ValueError(f"pure state norm {norm!r} differs from 1")
        else:
            if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
                raise ValueError("mixed state must be a square matrix")
            if np.max(np.abs(arr - arr.conj().T)) > 1e-12:
                raise ValueError("density matrix must be Hermitian")
            tr = complex(np.trace(arr))
            if abs(tr - 1.0) > 1e-12:
                raise ValueError(f"density matrix trace {tr!r} differs from 1")
            if float(np.linalg.eigvalsh(arr).min()) < -1e-10:
                raise ValueError("density matrix is not positive semidefinite")
        arr.setflags(write=False)
        self.data = arr
        self.kind = kind

    @classmethod
    def pure(cls, vec) -> "DenseState":
        return cls(vec, "pure")

    @classmethod
    def mixed(cls, mat) -> "DenseState":
        return cls(mat, "mixed")

    @property
    def dim(self) -> int:
        return int(self.data.shape[0])

    @property
    def n(self) -> int:
        n = self.dim.bit_length() - 1
        if 1 << n != self.dim:
            raise ValueError(f"dimension {self.dim} is not a power of two")
        return n

    def density(self) -> np.ndarray:
        if self.kind == "mixed":
            return self.data
        return np.outer(self.data, self.data.conj())

    def expectation(self, matrix: np.ndarray) -> float:
        """Real expectation value tr(M rho) of a Hermitian matrix."""
        if self.kind == "pure":
            return float(np.real(np.vdot(self.data, matrix @ self.data)))
        return float(np.real(np.trace(matrix @ self.data)))


def dense_pauli(p: PauliOperator, max_n: int = MAX_VECTOR_QUBITS) -> np.ndarray:
    """Kronecker-product matrix of a Pauli word, including its i^phase prefactor."""
    if p.n > max_n:
        raise ResourceLimitError(f"{p.n} qubits exceeds the dense limit of {max_n}")
    m = np.ones((1, 1), dtype=complex)
    for i in range(p.n):
        m = np.kron(m, _SINGLE[(p.x >> i) & 1, (p.z >> i) & 1])
    return (1j**p.phase) * m


def stabilizer_state_dense(
    g: StabilizerGroup, max_n: int = MAX_DENSITY_QUBITS
) -> DenseState:
    """Stabilizer state as the top eigenvector of the group-average projector.

    The average of all 2^n dense group elements must be a rank-1 projector;
    a second eigenvalue above 1e-10 means the group was invalid.
    """
    if g.n > max_n:
        raise ResourceLimitError(f"{g.n} qubits exceeds the dense limit of {max_n}")
    d = 1 << g.n
    proj = np.zeros((d, d), dtype=complex)
    for e in enumerate_elements(g):
        proj += dense_pauli(e)
    proj /= d
    vals, vecs = np.linalg.eigh(proj)
    if abs(vals[-1] - 1.0) > 1e-10 or abs(vals[-2]) > 1e-10:
        raise ValueError(f"group average is not a rank-1 projector (top eigenvalues {vals[-2:]})")
    return DenseState.pure(vecs[:, -1])


def graph_state_dense(g: Graph, max_n: int = MAX_VECTOR_QUBITS) -> DenseState:
    """Graph state built by the phase-gate circuit on |+>^n."""
    if g.n > max_n:
        raise ResourceLimitError(f"{g.n} qubits exceeds the dense limit of {max_n}")
    d = 1 << g.n
    vec = np.full(d, 1.0 / math.sqrt(d), dtype=complex)
    idx = np.arange(d)
    for i, j in g.edges():
        both = ((idx >> (g.n - 1 - i)) & 1) & ((idx >> (g.n - 1 - j)) & 1)
        vec[both == 1] *= -1
    return DenseState.pure(vec)


def computational_amplitudes(basis_vec: int, n: int) -> np.ndarray:
    """Standard basis vector |y> with the package's MSB-first indexing."""
    vec = np.zeros(1 << n, dtype=complex)
    vec[basis_vec] = 1.0
    return vec


def measure_distribution(
    basis: Sequence[Union[DenseState, np.ndarray]], state: DenseState
) -> ProbabilityDistribution:
    """Outcome probabilities p_i = <a_i| rho |a_i> for an orthonormal basis."""
    vecs = _as_basis_matrix(basis)
    if vecs.shape[1] != state.dim:
        raise ValueError(f"basis dimension {vecs.shape[1]} != state dimension {state.dim}")
    _check_orthonormal(vecs)
    if state.kind == "pure":
        probs = np.abs(vecs.conj() @ state.data) ** 2
    else:
        probs = np.real(np.einsum("ij,jk,ik->i", vecs.conj(), state.data, vecs))
    return ProbabilityDistribution(probs)


def random_pure_state(n: int, rng) -> DenseState:
    """Haar-random pure state from a normalized complex Gaussian vector."""
    d = 1 << n
    vec = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return DenseState.pure(vec / np.linalg.norm(vec))


class MinimizeResult(NamedTuple):
    value: float
    state: DenseState
    converged: bool


def minimize_entropy_sum(
    targets,
    spec: EntropySpec,
    restarts: int = 20,
    seed: int = 42,
    jobs: int = 1,
    max_n: int = 6,
) -> MinimizeResult:
    """Search for the smallest average entropy over observables or bases.

    ``targets`` is either a sequence of Hermitian ±1 Pauli observables or a
    sequence of orthonormal bases (each a sequence of vectors/DenseState).
    Each restart runs a local perturbation descent from a Haar-random state:
    perturb one amplitude, renormalize, keep on improvement; the step starts
    at 0.1, halves after 50 stagnant moves and stops below 1e-7.  The result
    is an upper bound on the true minimum; ``converged`` reports whether
    every restart exhausted its step schedule.
    """
    objective, dim = _build_objective(targets, spec, max_n)
    seeds = np.random.SeedSequence(seed).spawn(restarts)
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(
                pool.map(lambda s: _descend(objective, dim, s), seeds)
            )
    else:
        outcomes = [_descend(objective, dim, s) for s in seeds]
    best_value, best_vec, all_converged = math.inf, None, True
    for value, vec, conv in outcomes:
        all_converged = all_converged and conv
        if value < best_value:
            best_value, best_vec = value, vec
    return MinimizeResult(best_value, DenseState.pure(best_vec), all_converged)


def _build_objective(targets, spec: EntropySpec, max_n: int):
    targets = list(targets)
    if not targets:
        raise ValueError("no observables or bases given")
    if isinstance(targets[0], PauliOperator):
        n = targets[0].n
        if n > max_n:
            raise ResourceLimitError(f"{n} qubits exceeds the search limit of {max_n}")
        mats = [dense_pauli(p) for p in targets]
        dim = 1 << n

        def objective(vec: np.ndarray) -> float:
            total = 0.0
            for m in mats:
                e = float(np.real(np.vdot(vec, m @ vec)))
                e = min(max(e, -1.0), 1.0)
                total += entropy(spec, ((1 + e) / 2, (1 - e) / 2))
            return total / len(mats)

        return objective, dim
    bases = [_as_basis_matrix(b) for b in targets]
    dim = bases[0].shape[1]
    for b in bases:
        if b.shape[1] != dim:
            raise ValueError("bases act on different dimensions")
        _check_orthonormal(b)

    def objective(vec: np.ndarray) -> float:
        total = 0.0
        for b in bases:
            probs = np.abs(b.conj() @ vec) ** 2
            total += entropy(spec, probs / probs.sum())
        return total / len(bases)

    return objective, dim


def _descend(objective, dim: int, seed_seq) -> tuple:
    rng = np.random.default_rng(seed_seq)
    vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    vec /= np.linalg.norm(vec)
    best = objective(vec)
    step = 0.1
    stagnant = 0
    evals = 0
    while step >= 1e-7 and evals < 200_000:
        cand = vec.copy()
        coord = int(rng.integers(dim))
        cand[coord] += step * (rng.standard_normal() + 1j * rng.standard_normal())
        cand /= np.linalg.norm(cand)
        value = objective(cand)
        evals += 1
        if value < best:
            best, vec = value, cand
            stagnant = 0
        else:
            stagnant += 1
            if stagnant >= 50:
                step *= 0.5
                stagnant = 0
    return best, vec, step < 1e-7


def _as_basis_matrix(basis) -> np.ndarray:
    rows = []
    for b in basis:
        rows.append(b.data if isinstance(b, DenseState) else np.asarray(b, dtype=complex))
    return np.asarray(rows, dtype=complex)


def _check_orthonormal(vecs: np.ndarray, tol: float = 1e-10) -> None:
    if vecs.shape[0] != vecs.shape[1]:
        raise ValueError(f"basis has {vecs.shape[0]} vectors in dimension {vecs.shape[1]}")
    gram = vecs.conj() @ vecs.T
    if np.max(np.abs(gram - np.eye(vecs.shape[0]))) > tol:
        raise ValueError("basis is not orthonormal")
