"""Small GF(2) linear algebra helpers on int bitmask rows (bit j = column j)."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple


def parity(v: int) -> int:
    """Parity of the popcount of ``v``."""
    return v.bit_count() & 1


def rank(rows: Sequence[int]) -> int:
    """Rank over GF(2) via leading-bit elimination."""
    pivots: dict[int, int] = {}
    for row in rows:
        row = _reduce_leading(row, pivots)
        if row:
            pivots[row.bit_length() - 1] = row
    return len(pivots)


def _reduce_leading(row: int, pivots: dict[int, int]) -> int:
    while row:
        b = row.bit_length() - 1
        p = pivots.get(b)
        if p is None:
            return row
        row ^= p
    return 0


def solve_combination(rows: Sequence[int], target: int) -> Optional[int]:
    """Express ``target`` as a XOR of ``rows``.

    Returns a bitmask over row indices (bit i set = row i used), or None if
    ``target`` is not in the rowspan.
    """
    pivots: dict[int, Tuple[int, int]] = {}
    for i, row in enumerate(rows):
        tag = 1 << i
        while row:
            b = row.bit_length() - 1
            hit = pivots.get(b)
            if hit is None:
                pivots[b] = (row, tag)
                break
            row ^= hit[0]
            tag ^= hit[1]
    combo = 0
    while target:
        b = target.bit_length() - 1
        hit = pivots.get(b)
        if hit is None:
            return None
        target ^= hit[0]
        combo ^= hit[1]
    return combo


def rref(rows: Sequence[int], ncols: int) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form; returns (pivot columns, nonzero rows)."""
    work = list(rows)
    pivot_cols: List[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if (work[i] >> col) & 1), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        pivot_cols.append(col)
        r += 1
    return pivot_cols, work[:r]


def kernel_basis(rows: Sequence[int], ncols: int) -> List[int]:
    """Basis of {v : parity(row & v) = 0 for every row}."""
    pivot_cols, reduced = rref(rows, ncols)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(reduced, pivot_cols):
            if (row >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def intersection_basis(rows_a: Sequence[int], rows_b: Sequence[int], ncols: int) -> List[int]:
    """Basis of span(rows_a) ∩ span(rows_b) by the Zassenhaus block trick.

    Rows [a|a] and [b|0] are eliminated on the left block; surviving rows with
    a zero left block carry an intersection basis in the right block.
    """
    mask = (1 << ncols) - 1
    work = [(a << ncols) | a for a in rows_a] + [b << ncols for b in rows_b]
    r = 0
    for col in range(2 * ncols - 1, ncols - 1, -1):
        piv = next((i for i in range(r, len(work)) if (work[i] >> col) & 1), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        r += 1
    tail = [row & mask for row in work[r:]]
    _, reduced = rref(tail, ncols)
    return reduced
