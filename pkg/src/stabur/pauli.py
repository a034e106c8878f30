"""Exact n-qubit Pauli algebra in binary symplectic form with phase tracking.

An operator is stored as ``i**phase * X(x) * Z(z)`` where ``x`` and ``z`` are
n-bit masks (bit ``i`` = qubit ``i``) and ``X(x)`` applies X on every qubit
whose bit is set in ``x`` (likewise ``Z(z)``), with X factors to the left of
Z factors on each qubit.  ``Y`` is stored as ``i * X * Z``, so every Y factor
contributes one unit to the stored phase.  This makes multiplication a pure
XOR plus a mod-2 dot product:

    (i^a X(x1)Z(z1)) (i^b X(x2)Z(z2))
        = i^(a + b + 2*<z1,x2>) X(x1^x2) Z(z1^z2)

The phase convention for Y (``+i`` rather than ``-i`` times XZ) is an
implementation choice; every quantity of interest downstream depends only on
real signs of Hermitian operators, which are convention independent.

String form: an optional sign (``+``, ``-``, ``+i``, ``-i``) followed by one
character per qubit from ``IXYZ``; the leftmost character is qubit 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .gf2 import parity

_SIGN_PREFIXES = (("+i", 1), ("-i", 3), ("+", 0), ("-", 2))
_CHAR_TO_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_TO_CHAR = {v: k for k, v in _CHAR_TO_BITS.items()}
_SIGN_STR = {0: "+", 1: "+i", 2: "-", 3: "-i"}


class PauliParseError(ValueError):
    """Malformed Pauli string; carries the offending 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class DimensionMismatch(ValueError):
    """Operands act on different qubit counts."""


@dataclass(frozen=True)
class PauliOperator:
    """Signed Pauli word ``i**phase * X(x) * Z(z)`` on ``n`` qubits."""

    n: int
    x: int
    z: int
    phase: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"qubit count must be positive, got {self.n}")
        top = 1 << self.n
        if not (0 <= self.x < top and 0 <= self.z < top):
            raise ValueError("x/z masks out of range for qubit count")
        if not 0 <= self.phase < 4:
            raise ValueError(f"phase must be in 0..3, got {self.phase}")

    @property
    def y_count(self) -> int:
        return (self.x & self.z).bit_count()

    @property
    def sign_exponent(self) -> int:
        """Exponent k of the i**k prefactor over the Hermitian word for (x, z)."""
        return (self.phase - self.y_count) % 4

    @property
    def is_hermitian(self) -> bool:
        return self.sign_exponent % 2 == 0

    @property
    def sign(self) -> int:
        """+1 or -1 for Hermitian operators."""
        e = self.sign_exponent
        if e % 2:
            raise ValueError(f"{self} has an imaginary prefactor, no real sign")
        return 1 if e == 0 else -1

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0 and self.phase == 0

    def negate(self) -> "PauliOperator":
        return PauliOperator(self.n, self.x, self.z, (self.phase + 2) % 4)

    def symplectic(self) -> int:
        """2n-bit packed row: x in the low half, z in the high half."""
        return self.x | (self.z << self.n)

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return multiply(self, other)

    def __str__(self) -> str:
        body = "".join(
            _BITS_TO_CHAR[(self.x >> i) & 1, (self.z >> i) & 1] for i in range(self.n)
        )
        return _SIGN_STR[self.sign_exponent] + body

    def __repr__(self) -> str:
        return f"PauliOperator({str(self)!r})"


def identity(n: int) -> PauliOperator:
    return PauliOperator(n, 0, 0, 0)


def parse_pauli(text: str) -> PauliOperator:
    """Parse a signed Pauli string such as ``+XZIZ``, ``-YXII`` or ``Y``."""
    body_start = 0
    phase = 0
    for prefix, ph in _SIGN_PREFIXES:
        if text.startswith(prefix):
            body_start = len(prefix)
            phase = ph
            break
    body = text[body_start:]
    if not body:
        raise PauliParseError("empty Pauli body", body_start)
    x = z = 0
    for i, ch in enumerate(body):
        try:
            xb, zb = _CHAR_TO_BITS[ch]
        except KeyError:
            raise PauliParseError(f"invalid character {ch!r}", body_start + i) from None
        x |= xb << i
        z |= zb << i
        if ch == "Y":
            phase = (phase + 1) % 4
    return PauliOperator(len(body), x, z, phase)


def multiply(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Exact product; phase picks up 2*<z_p, x_q> from commuting Z past X."""
    _check_n(p, q)
    phase = (p.phase + q.phase + 2 * parity(p.z & q.x)) % 4
    return PauliOperator(p.n, p.x ^ q.x, p.z ^ q.z, phase)


def product(factors: Iterable[PauliOperator], n: int) -> PauliOperator:
    """Exact product of a (possibly empty) sequence of same-size operators."""
    out = identity(n)
    for f in factors:
        out = multiply(out, f)
    return out


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    """True iff the operators commute (else they anticommute)."""
    _check_n(p, q)
    return (parity(p.x & q.z) ^ parity(p.z & q.x)) == 0


def trace_inner(p: PauliOperator, q: PauliOperator) -> Union[int, complex]:
    """tr(P Q) -- nonzero only when both share the same (x, z) masks.

    Returns an int (±2^n) or a pure-imaginary complex (±i 2^n).
    """
    _check_n(p, q)
    if p.x != q.x or p.z != q.z:
        return 0
    d = 1 << p.n
    ph = multiply(p, q).phase
    return (d, d * 1j, -d, -d * 1j)[ph]


def random_pauli(n, rng, hermitian: bool = True, nonidentity: bool = True) -> PauliOperator:
    """Uniformly random Pauli word with a random real sign."""
    while True:
        x = int(rng.integers(0, 1 << n))
        z = int(rng.integers(0, 1 << n))
        if nonidentity and x == 0 and z == 0:
            continue
        break
    w = (x & z).bit_count()
    if hermitian:
        phase = (w + 2 * int(rng.integers(0, 2))) % 4
    else:
        phase = int(rng.integers(0, 4))
    return PauliOperator(n, x, z, phase)


def _check_n(p: PauliOperator, q: PauliOperator) -> None:
    if p.n != q.n:
        raise DimensionMismatch(f"operand sizes differ: {p.n} vs {q.n}")
