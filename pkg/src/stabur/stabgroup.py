"""Stabilizer groups, their bases, and sign-aware group intersections.

A stabilizer group on n qubits is given by n independent, pairwise commuting
Hermitian Pauli generators whose generated group of 2^n signed elements does
not contain -identity.  Such a group fixes a unique pure state, and flipping
generator signs enumerates a complete orthonormal basis; basis labels are
n-bit integers whose bit i (counted from the string left, i.e. from the most
significant label bit) flips the sign of generator i.

The squared overlap of two stabilizer states is computed without dense
matrices: with S+ the set of signed elements shared by both groups and S-
the elements of one group whose negation lies in the other,

    |<S|T>|^2 = (|S+| - |S-|) / 2^n = (2^(p+1) - 2^q) / 2^n,

where |S+| = 2^p and |S+ ∪ S-| = 2^q.  Sign-ignored intersections are done
by GF(2) elimination on the stacked symplectic rows; signs are then resolved
by exact phase-tracked generator products.  An explicit 2^n enumeration of
both groups is kept as a cross-check path for small n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from . import gf2
from .pauli import (
    DimensionMismatch,
    PauliOperator,
    commutes,
    identity,
    multiply,
    parse_pauli,
    product,
)


class InvalidGroupError(ValueError):
    """Generator set is not a valid stabilizer group."""


@dataclass(frozen=True)
class StabilizerGroup:
    """Validated stabilizer group; construct via :func:`validate_group`."""

    n: int
    generators: Tuple[PauliOperator, ...]

    def symplectic_rows(self) -> List[int]:
        return [g.symplectic() for g in self.generators]

    def element_for(self, x: int, z: int) -> Optional[PauliOperator]:
        """The unique signed group element with the given masks, or None."""
        combo = gf2.solve_combination(self.symplectic_rows(), x | (z << self.n))
        if combo is None:
            return None
        return product(
            (g for i, g in enumerate(self.generators) if (combo >> i) & 1), self.n
        )

    def with_flipped_signs(self, label: int) -> "StabilizerGroup":
        return basis_state_group(self, label)

    def __str__(self) -> str:
        return "{" + ", ".join(str(g) for g in self.generators) + "}"


class IntersectionResult(NamedTuple):
    s_plus: Tuple[PauliOperator, ...]
    s_minus: Tuple[PauliOperator, ...]
    c: int


@dataclass(frozen=True)
class OverlapReport:
    """p = log2 |S+|, q = log2 |S+ ∪ S-|, and the exact squared overlap."""

    p: int
    q: int
    overlap_squared: Fraction


def validate_group(generators: Sequence[PauliOperator]) -> StabilizerGroup:
    """Validate commuting, independent, Hermitian generators; reject -identity."""
    gens = tuple(generators)
    if not gens:
        raise InvalidGroupError("no generators given")
    n = gens[0].n
    for i, g in enumerate(gens):
        if g.n != n:
            raise DimensionMismatch(f"generator {i} acts on {g.n} qubits, expected {n}")
        if not g.is_hermitian:
            raise InvalidGroupError(f"generator {i} ({g}) is not Hermitian")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not commutes(gens[i], gens[j]):
                raise InvalidGroupError(f"not commuting ({i},{j})")
    seen_rows: List[int] = []
    for i, g in enumerate(gens):
        combo = gf2.solve_combination(seen_rows, g.symplectic())
        if combo is not None:
            prior = product(
                (gens[k] for k in range(i) if (combo >> k) & 1), n
            )
            if multiply(prior, g).phase == 0:
                raise InvalidGroupError(f"dependent generator {i}")
            raise InvalidGroupError("group contains -identity")
        seen_rows.append(g.symplectic())
    if len(gens) != n:
        raise InvalidGroupError(f"{len(gens)} generators for {n} qubits, need exactly n")
    return StabilizerGroup(n, gens)


def enumerate_elements(g: StabilizerGroup) -> List[PauliOperator]:
    """All 2^n signed elements, ordered by generator-subset integer."""
    elems = [identity(g.n)]
    for k in range(1, 1 << g.n):
        low = k & -k
        elems.append(multiply(elems[k ^ low], g.generators[low.bit_length() - 1]))
    return elems


def intersect(s: StabilizerGroup, t: StabilizerGroup) -> IntersectionResult:
    """Sign-aware intersection (S+, S-, c) with c = log2 |S ∩ ±T|.

    The sign-ignored intersection subspace comes from GF(2) elimination; each
    basis vector's sign in either group is recovered by the exact generator
    product, and the sign mismatch extends multiplicatively over subsets.
    """
    _check_same_n(s, t)
    basis = gf2.intersection_basis(s.symplectic_rows(), t.symplectic_rows(), 2 * s.n)
    c = len(basis)
    mask = (1 << s.n) - 1
    reps_s: List[PauliOperator] = []
    mismatch: List[bool] = []
    for v in basis:
        x, z = v & mask, v >> s.n
        es = s.element_for(x, z)
        et = t.element_for(x, z)
        assert es is not None and et is not None
        reps_s.append(es)
        mismatch.append(es.phase != et.phase)
    s_plus: List[PauliOperator] = []
    s_minus: List[PauliOperator] = []
    elem = [identity(s.n)]
    flips = [False]
    for k in range(1 << c):
        if k:
            low = k & -k
            i = low.bit_length() - 1
            elem.append(multiply(elem[k ^ low], reps_s[i]))
            flips.append(flips[k ^ low] ^ mismatch[i])
        (s_minus if flips[k] else s_plus).append(elem[k])
    return IntersectionResult(tuple(s_plus), tuple(s_minus), c)


def intersect_by_enumeration(s: StabilizerGroup, t: StabilizerGroup) -> IntersectionResult:
    """Brute-force 2^n cross-check of :func:`intersect` for small n."""
    _check_same_n(s, t)
    t_by_masks = {(e.x, e.z): e for e in enumerate_elements(t)}
    s_plus: List[PauliOperator] = []
    s_minus: List[PauliOperator] = []
    for e in enumerate_elements(s):
        other = t_by_masks.get((e.x, e.z))
        if other is None:
            continue
        (s_plus if e.phase == other.phase else s_minus).append(e)
    c = (len(s_plus) + len(s_minus)).bit_length() - 1
    return IntersectionResult(tuple(s_plus), tuple(s_minus), c)


def overlap_squared(s: StabilizerGroup, t: StabilizerGroup) -> OverlapReport:
    """Exact squared overlap of the two stabilizer states as a dyadic rational."""
    inter = intersect(s, t)
    p = len(inter.s_plus).bit_length() - 1
    q = (len(inter.s_plus) + len(inter.s_minus)).bit_length() - 1
    if p < q - 1:
        raise AssertionError(f"p={p} < q-1={q - 1}: sign bookkeeping is broken")
    value = Fraction(2 ** (p + 1) - 2**q, 2**s.n)
    return OverlapReport(p=p, q=q, overlap_squared=value)


def basis_state_group(g: StabilizerGroup, label) -> StabilizerGroup:
    """Group of the basis state selected by ``label`` (bit i flips generator i).

    ``label`` is an n-bit integer read most-significant-bit-first, or a
    sequence of n bits.
    """
    bits = _label_bits(label, g.n)
    gens = tuple(
        gen.negate() if bits[i] else gen for i, gen in enumerate(g.generators)
    )
    return StabilizerGroup(g.n, gens)


def stabilizer_expectation(g: StabilizerGroup, a: PauliOperator) -> int:
    """tr(a ρ) for the group's state: ±1 if ±a is a group element, else 0."""
    if a.n != g.n:
        raise DimensionMismatch(f"observable acts on {a.n} qubits, group on {g.n}")
    if not a.is_hermitian:
        raise ValueError(f"observable {a} is not Hermitian")
    member = g.element_for(a.x, a.z)
    if member is None:
        return 0
    return 1 if member.phase == a.phase else -1


def mu_bound_stabilizer(s: StabilizerGroup, t: StabilizerGroup) -> float:
    """Entropic lower bound -log2 r in bits, with r = 2^-((n-c)/2)."""
    inter = intersect(s, t)
    return (s.n - inter.c) / 2


def max_overlap_magnitude(s: StabilizerGroup, t: StabilizerGroup) -> float:
    """r = 2^-((n-c)/2), the largest |overlap| between the two bases."""
    inter = intersect(s, t)
    return 2.0 ** (-(s.n - inter.c) / 2)


def random_group(n: int, rng) -> StabilizerGroup:
    """Random stabilizer group (valid by construction, not uniformly sampled).

    Each generator is drawn from the kernel of the symplectic-product map of
    the ones already chosen, resampling until independent, with random signs.
    """
    gens: List[PauliOperator] = []
    rows: List[int] = []
    constraint_rows: List[int] = []
    while len(gens) < n:
        kernel = gf2.kernel_basis(constraint_rows, 2 * n)
        while True:
            v = 0
            for b in kernel:
                if rng.integers(0, 2):
                    v ^= b
            if v and gf2.solve_combination(rows, v) is None:
                break
        x, z = v & ((1 << n) - 1), v >> n
        w = (x & z).bit_count()
        phase = (w + 2 * int(rng.integers(0, 2))) % 4
        gens.append(PauliOperator(n, x, z, phase))
        rows.append(v)
        constraint_rows.append(z | (x << n))
    return validate_group(gens)


def parse_generator_lines(lines: Sequence[str], source: str = "<input>") -> StabilizerGroup:
    """Parse one signed Pauli string per line; '#' comments, blanks ignored."""
    gens: List[PauliOperator] = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            gens.append(parse_pauli(text))
        except ValueError as exc:
            raise ValueError(f"{source}, line {lineno}: {exc}") from None
    if not gens:
        raise ValueError(f"{source}: no generators found")
    try:
        return validate_group(gens)
    except ValueError as exc:
        raise type(exc)(f"{source}: {exc}") from None


def read_generator_file(path) -> StabilizerGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_generator_lines(fh.readlines(), source=str(path))


def _label_bits(label, n: int) -> List[int]:
    if isinstance(label, int):
        if not 0 <= label < (1 << n):
            raise ValueError(f"label {label} out of range for {n} generators")
        return [(label >> (n - 1 - i)) & 1 for i in range(n)]
    bits = [int(b) for b in label]
    if len(bits) != n or any(b not in (0, 1) for b in bits):
        raise ValueError(f"label must be {n} bits")
    return bits


def _check_same_n(s: StabilizerGroup, t: StabilizerGroup) -> None:
    if s.n != t.n:
        raise DimensionMismatch(f"group sizes differ: {s.n} vs {t.n}")
