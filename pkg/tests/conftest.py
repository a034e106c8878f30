"""Shared helpers for the test suite (dense single-qubit matrices, sampling)."""

from __future__ import annotations

import numpy as np
import pytest

from stabur import Graph

I2 = np.eye(2, dtype=complex)
X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Y2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z2 = np.array([[1, 0], [0, -1]], dtype=complex)

DENSE_1Q = {"I": I2, "X": X2, "Y": Y2, "Z": Z2}


def dense_from_label(label: str) -> np.ndarray:
    """Dense matrix of an unsigned Pauli label via explicit Kronecker products."""
    m = np.ones((1, 1), dtype=complex)
    for ch in label:
        m = np.kron(m, DENSE_1Q[ch])
    return m


def random_graph(n: int, rng) -> Graph:
    a = np.triu(rng.integers(0, 2, size=(n, n), dtype=np.uint8), k=1)
    return Graph(n, a | a.T)


@pytest.fixture
def rng():
    return np.random.default_rng(42)
