"""Entropy functions for measurement statistics and two-outcome observables.

Three entropy kinds are supported, all in bits (base-2 logarithms):
Shannon -sum p log2 p, min-entropy -log2 max p, and the Tsallis family
(1 - sum p^q)/(q-1) for q > 1.  (The Tsallis expression carries no explicit
logarithm; its q -> 1 limit is the natural-log Shannon entropy.)

For an observable with eigenvalues ±1, the outcome distribution is
((1+e)/2, (1-e)/2) with e the expectation value, so any permutation-
invariant entropy becomes a function of the squared expectation x = e^2.
Whether that function is concave on [0,1] decides which entropies admit
the uncertainty bounds in :mod:`stabur.urelations`: Shannon qualifies, the
Tsallis family is concave for 1 < q < 2 and q > 3, exactly linear at
q in {2, 3} (where it reduces to half resp. three-eighths of the variance)
and convex for 2 < q < 3; min-entropy does not qualify.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

_KINDS = ("shannon", "min", "tsallis")
_SUM_TOL = 1e-12
_NEG_TOL = 1e-12


@dataclass(frozen=True)
class EntropySpec:
    """Entropy selector: kind in {shannon, min, tsallis}; q > 1 for tsallis."""

    kind: str
    q: Optional[float] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown entropy kind {self.kind!r}, expected one of {_KINDS}")
        if self.kind == "tsallis":
            if self.q is None or not self.q > 1:
                raise ValueError("tsallis entropy requires a parameter q > 1")
        elif self.q is not None:
            raise ValueError(f"q is only meaningful for the tsallis entropy, not {self.kind}")

    def label(self) -> str:
        return f"tsallis(q={self.q:g})" if self.kind == "tsallis" else self.kind


SHANNON = EntropySpec("shannon")
MIN_ENTROPY = EntropySpec("min")


class ProbabilityDistribution:
    """Finite outcome distribution; entries clamped at -1e-12, sum within 1e-12 of 1."""

    def __init__(self, probs):
        p = np.asarray(probs, dtype=float).ravel()
        if p.size == 0:
            raise ValueError("empty distribution")
        if np.any(p < -_NEG_TOL) or np.any(p > 1 + _NEG_TOL):
            raise ValueError(f"probabilities outside [0,1]: {p}")
        total = float(p.sum())
        if abs(total - 1.0) > _SUM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        p = np.clip(p, 0.0, 1.0) / total
        p.setflags(write=False)
        self.probs = p

    def __len__(self) -> int:
        return int(self.probs.size)


def entropy(spec: EntropySpec, p) -> float:
    """Entropy of a distribution (array-like or ProbabilityDistribution), in bits."""
    if not isinstance(p, ProbabilityDistribution):
        p = ProbabilityDistribution(p)
    probs = p.probs
    if spec.kind == "shannon":
        nz = probs[probs > 0.0]
        return float(-(nz * np.log2(nz)).sum())
    if spec.kind == "min":
        return float(-math.log2(float(probs.max())))
    return float((1.0 - (probs**spec.q).sum()) / (spec.q - 1.0))


def flat_entropy(spec: EntropySpec) -> float:
    """Entropy of the flat two-outcome distribution (1/2, 1/2)."""
    if spec.kind in ("shannon", "min"):
        return 1.0
    return (1.0 - 2.0 ** (1.0 - spec.q)) / (spec.q - 1.0)


def entropy_from_sq_expectation(spec: EntropySpec, x: float) -> float:
    """Entropy of ((1+sqrt(x))/2, (1-sqrt(x))/2) as a function of x in [0,1].

    Values within 1e-9 outside [0,1] are clamped (measurement noise);
    anything further out is rejected.
    """
    if x < -1e-9 or x > 1 + 1e-9:
        raise ValueError(f"squared expectation {x} outside [0,1]")
    x = min(max(x, 0.0), 1.0)
    s = math.sqrt(x)
    return entropy(spec, ((1.0 + s) / 2.0, (1.0 - s) / 2.0))


def tsallis_concavity_class(q: float) -> str:
    """Concavity of the tsallis squared-expectation entropy on [0,1]."""
    if not q > 1:
        raise ValueError(f"tsallis parameter must exceed 1, got {q}")
    if q == 2 or q == 3:
        return "linear"
    if 2 < q < 3:
        return "convex"
    return "concave"


def is_concave_in_sq_expectation(spec: EntropySpec) -> bool:
    """Whether the squared-expectation entropy is concave (linear counts)."""
    if spec.kind == "shannon":
        return True
    if spec.kind == "min":
        return False
    return tsallis_concavity_class(spec.q) in ("concave", "linear")


def require_concave(spec: EntropySpec) -> None:
    if is_concave_in_sq_expectation(spec):
        return
    if spec.kind == "tsallis":
        raise ValueError(
            f"tsallis entropy with q={spec.q:g} is convex in the squared expectation "
            "value on 2 < q < 3 and admits no bound of this form"
        )
    raise ValueError(
        "min-entropy is not concave in the squared expectation value and admits "
        "no bound of this form"
    )


def concavity_factor(q: float, y: float) -> float:
    """Bracketed factor of the second derivative of the tsallis curve, at y = sqrt(x).

    Negative on (0,1] exactly when the curve is concave, positive when
    convex, identically zero at q in {2, 3}.
    """
    _check_qy(q, y)
    if y == 1.0 and q < 2:
        return -math.inf
    return (1 + y) ** (q - 2) * (1 - y * (q - 2)) - (1 - y) ** (q - 2) * (
        1 + y * (q - 2)
    )


def concavity_factor_derivative(q: float, y: float) -> float:
    """d/dy of :func:`concavity_factor`; fixed sign on (0,1) per concavity class."""
    _check_qy(q, y)
    if y == 1.0 and q < 3:
        return math.inf if 2 < q < 3 else (0.0 if q in (2.0, 3.0) else -math.inf)
    return -(q - 2) * (q - 1) * y * ((1 + y) ** (q - 3) - (1 - y) ** (q - 3))


def boundary_curve(spec: EntropySpec, samples: int) -> List[Tuple[float, float]]:
    """First-quadrant points of the saturation curve of the two-observable bound.

    Solves S(a1^2) + S(a2^2) = S0 (S the squared-expectation entropy, S0 its
    flat value) by monotone bisection in x2 = a2^2 for each sampled a1; for
    tsallis q in {2, 3} the curve is exactly the unit circle.  Rejects specs
    that are not concave in the squared expectation value.  The remaining
    quadrants follow by sign symmetry of the expectation values.
    """
    require_concave(spec)
    if samples < 2:
        raise ValueError("need at least 2 samples")
    s0 = flat_entropy(spec)
    points = []
    for k in range(samples):
        a1 = k / (samples - 1)
        target = s0 - entropy_from_sq_expectation(spec, a1 * a1)
        points.append((a1, math.sqrt(_solve_sq_expectation(spec, target, s0))))
    return points


def _solve_sq_expectation(spec: EntropySpec, target: float, s0: float) -> float:
    """x in [0,1] with S(x) = target, for S strictly decreasing from s0 to 0."""
    if target <= 0.0:
        return 1.0
    if target >= s0:
        return 0.0
    lo, hi = 0.0, 1.0
    for _ in range(200):
        if hi - lo <= 1e-12:
            break
        mid = (lo + hi) / 2.0
        if entropy_from_sq_expectation(spec, mid) > target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def _check_qy(q: float, y: float) -> None:
    if not q > 1:
        raise ValueError(f"tsallis parameter must exceed 1, got {q}")
    if not 0 < y <= 1:
        raise ValueError(f"y must be in (0,1], got {y}")
