"""Graph states: generators, mod-2 graph sums, and exact basis amplitudes.

A graph on n vertices defines the state reached from |+>^n by applying a
controlled-phase gate on every edge.  Its stabilizer generators are read off
the graph: X on vertex i and Z on each neighbour.

The amplitudes of a graph state in the local-X product basis,

    R(y, A) = 2^-n * sum_x (-1)^(y.x + sum_{i<j} x_i A_ij x_j),

are exact dyadic rationals; every value is an integer multiple of 2^(1-n).
They are computed two independent ways: a vertex-peeling recurrence

    R_n(y, A) = 1/2 R_{n-1}(y', A') + (-1)^(y_0) 1/2 R_{n-1}(y' + a', A'),

with a' the neighbour row of the peeled vertex, and a size-2^n butterfly
transform of the quadratic-form sign vector.  The largest magnitude over y
gives the entropic bound for the pair of graph-state bases: the bound for
two graphs equals the bound for the empty graph against their mod-2 sum.

Basis bitstrings y are indexed most-significant-bit-first: vertex 0 is the
leftmost character of the printed string and the top bit of the integer
index.  Graph files hold the vertex count on the first line and one
``i j`` edge (0-indexed) per following line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from .pauli import PauliOperator
from .stabgroup import StabilizerGroup, validate_group


class ResourceLimitError(ValueError):
    """Requested size exceeds a configured enumeration limit."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as a symmetric 0/1 adjacency matrix."""

    n: int
    adjacency: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=np.uint8)
        if a.shape != (self.n, self.n):
            raise ValueError(f"adjacency must be {self.n}x{self.n}, got {a.shape}")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diag(a)):
            raise ValueError("adjacency diagonal must be zero")
        if not np.isin(a, (0, 1)).all():
            raise ValueError("adjacency entries must be 0 or 1")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[Tuple[int, int]]) -> "Graph":
        a = np.zeros((n, n), dtype=np.uint8)
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range for {n} vertices")
            if i == j:
                raise ValueError(f"self-loop ({i},{j}) not allowed")
            if a[i, j]:
                raise ValueError(f"duplicate edge ({i},{j})")
            a[i, j] = a[j, i] = 1
        return cls(n, a)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, np.zeros((n, n), dtype=np.uint8))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        a = np.ones((n, n), dtype=np.uint8) - np.eye(n, dtype=np.uint8)
        return cls(n, a)

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    def edges(self) -> List[Tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.adjacency[i, j]
        ]

    def neighbour_mask(self, i: int) -> int:
        """Neighbours of vertex i as a qubit bitmask (bit j = vertex j)."""
        return int(sum(1 << j for j in range(self.n) if self.adjacency[i, j]))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self.adjacency, other.adjacency)
        )

    def __hash__(self):
        return hash((self.n, self.adjacency.tobytes()))


def graph_generators(g: Graph) -> List[PauliOperator]:
    """Stabilizer generators: X on vertex i, Z on its neighbours, sign +."""
    return [
        PauliOperator(g.n, 1 << i, g.neighbour_mask(i), 0) for i in range(g.n)
    ]


def graph_group(g: Graph) -> StabilizerGroup:
    return validate_group(graph_generators(g))


def graph_sum(g1: Graph, g2: Graph) -> Graph:
    """Entrywise mod-2 sum of the adjacency matrices."""
    _check_same_n(g1, g2)
    return Graph(g1.n, np.bitwise_xor(g1.adjacency, g2.adjacency))


@dataclass(frozen=True)
class AmplitudeTable:
    """All 2^n amplitudes as exact numerators over the common 2^n denominator."""

    n: int
    numerators: np.ndarray  # int64, indexed by the y bitstring (MSB first)

    def __post_init__(self):
        object.__setattr__(
            self, "numerators", np.asarray(self.numerators, dtype=np.int64)
        )
        self.numerators.setflags(write=False)

    @property
    def log2_den(self) -> int:
        return self.n

    def value(self, y: int) -> Fraction:
        return Fraction(int(self.numerators[y]), 1 << self.n)

    @property
    def r_max(self) -> Fraction:
        return Fraction(int(np.max(np.abs(self.numerators))), 1 << self.n)

    def attaining(self) -> List[int]:
        """All y whose |value| equals r_max, ascending."""
        peak = np.max(np.abs(self.numerators))
        return [int(y) for y in np.nonzero(np.abs(self.numerators) == peak)[0]]

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        for y in range(1 << self.n):
            yield y, self.value(y)

    def rows(self) -> Iterator[Tuple[str, int, int, int]]:
        """CSV rows: y bitstring, |numerator|, log2 denominator, sign."""
        for y in range(1 << self.n):
            num = int(self.numerators[y])
            sign = 0 if num == 0 else (1 if num > 0 else -1)
            yield format(y, f"0{self.n}b"), abs(num), self.n, sign


def amplitude_recurrence(y, g: Graph) -> Fraction:
    """Single amplitude via the vertex-peeling recurrence (exact rational).

    ``y`` is an n-bit integer index (MSB = vertex 0) or a bit sequence.
    Memoized on (peel depth, remaining bits); the peel order is fixed, so
    the remaining subgraph is determined by the depth alone.
    """
    y_idx = _y_index(y, g.n)
    # suffix row masks: bits of neighbours j > k of vertex k, at position n-1-j
    suffix_rows = [
        sum(int(g.adjacency[k, j]) << (g.n - 1 - j) for j in range(k + 1, g.n))
        for k in range(g.n)
    ]
    cache: dict[Tuple[int, int], Fraction] = {}

    def rec(k: int, suffix: int) -> Fraction:
        if k == g.n:
            return Fraction(1)
        key = (k, suffix)
        hit = cache.get(key)
        if hit is not None:
            return hit
        top = (suffix >> (g.n - 1 - k)) & 1
        rest = suffix & ((1 << (g.n - 1 - k)) - 1)
        half = Fraction(1, 2)
        out = half * rec(k + 1, rest)
        branch = half * rec(k + 1, rest ^ suffix_rows[k])
        out = out - branch if top else out + branch
        cache[key] = out
        return out

    return rec(0, y_idx)


def amplitude_transform(g: Graph, max_n: int = 20) -> AmplitudeTable:
    """All 2^n amplitudes via a butterfly transform of the sign vector."""
    if g.n > max_n:
        raise ResourceLimitError(f"{g.n} vertices exceeds the limit of {max_n}")
    size = 1 << g.n
    signs = np.ones(size, dtype=np.int64)
    idx = np.arange(size)
    for i, j in g.edges():
        both = ((idx >> (g.n - 1 - i)) & 1) & ((idx >> (g.n - 1 - j)) & 1)
        signs[both == 1] *= -1
    h = 1
    while h < size:
        signs = signs.reshape(size // (2 * h), 2, h)
        a = signs[:, 0, :].copy()
        b = signs[:, 1, :].copy()
        signs[:, 0, :] = a + b
        signs[:, 1, :] = a - b
        signs = signs.reshape(size)
        h *= 2
    return AmplitudeTable(g.n, signs)


def mu_bound_graphs(g1: Graph, g2: Graph) -> float:
    """Entropic bound (bits) for the two graph-state bases: -log2 r_max."""
    _check_same_n(g1, g2)
    table = amplitude_transform(graph_sum(g1, g2))
    r = table.r_max
    return math.log2(r.denominator) - math.log2(r.numerator)


def read_graph_file(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_lines(fh.readlines(), source=str(path))


def parse_graph_lines(lines: Sequence[str], source: str = "<input>") -> Graph:
    """First significant line: vertex count; then one 0-indexed edge per line."""
    n = None
    edges: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise ValueError(f"{source}, line {lineno}: expected a vertex count")
            n = int(parts[0])
            if n < 1:
                raise ValueError(f"{source}, line {lineno}: vertex count must be positive")
            continue
        if len(parts) != 2:
            raise ValueError(f"{source}, line {lineno}: expected 'i j' edge")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"{source}, line {lineno}: edge endpoints must be integers") from None
        edges.append((i, j))
    if n is None:
        raise ValueError(f"{source}: empty graph file")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise ValueError(f"{source}: {exc}") from None


def _y_index(y, n: int) -> int:
    if isinstance(y, (int, np.integer)):
        y = int(y)
        if not 0 <= y < (1 << n):
            raise ValueError(f"y={y} out of range for {n} bits")
        return y
    bits = [int(b) for b in y]
    if len(bits) != n or any(b not in (0, 1) for b in bits):
        raise ValueError(f"y must be {n} bits")
    idx = 0
    for b in bits:
        idx = (idx << 1) | b
    return idx


def _check_same_n(g1: Graph, g2: Graph) -> None:
    if g1.n != g2.n:
        raise ValueError(f"graph sizes differ: {g1.n} vs {g2.n}")
