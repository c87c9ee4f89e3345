"""Expectation-value estimators, the analytic reference, and CHSH search.

Per trial the outcome product is ``cos 2(a-b) + sign_i * sin 2(a-b) *
e_xy``: a constant scalar channel plus a bivector channel proportional to
the orientation sign.  The estimators therefore reduce the Monte Carlo
average to the exact integer sum of the +1/-1 signs.  That keeps the
scalar mean equal to ``cos 2(a-b)`` to the last bit at any trial count,
and makes merging per-shard sums bit-identical to a single pass, since
integer addition has no rounding.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .protocol import PolarizerAngle, handedness_signs, polarizer_axis

__all__ = [
    "CorrelationEstimate",
    "ChshSettings",
    "single_expectation",
    "joint_expectation",
    "quantum_reference",
    "chsh_value",
    "chsh_maximize",
]


@dataclass(frozen=True)
class CorrelationEstimate:
    """Componentwise Monte Carlo average of even-element outcomes.

    The scalar and bivector channels are reported separately and never
    re-normalized; ``standard_error`` is the 1/sqrt(n) envelope of the
    +1/-1 sign population that drives the bivector channel (the scalar
    channel is per-trial constant, hence exact).
    """

    scalar_mean: float
    bivector_mean: tuple
    trial_count: int
    standard_error: float

    def __post_init__(self):
        if self.trial_count < 1:
            raise ValueError(f"trial_count must be at least 1, got {self.trial_count}")
        if self.standard_error < 0.0:
            raise ValueError("standard_error must be non-negative")
        mean = tuple(float(c) for c in self.bivector_mean)
        if len(mean) != 3:
            raise ValueError("bivector_mean needs exactly 3 components")
        object.__setattr__(self, "bivector_mean", mean)

    @property
    def bivector_norm(self) -> float:
        byz, bzx, bxy = self.bivector_mean
        return math.sqrt(byz * byz + bzx * bzx + bxy * bxy)


@dataclass(frozen=True)
class ChshSettings:
    """The four polarizer angles of one CHSH evaluation."""

    alpha: PolarizerAngle
    alpha_prime: PolarizerAngle
    beta: PolarizerAngle
    beta_prime: PolarizerAngle


def _shard_bounds(n: int, shards: int) -> list:
    shards = max(1, min(shards, n))
    step, extra = divmod(n, shards)
    bounds = []
    start = 0
    for i in range(shards):
        size = step + (1 if i < extra else 0)
        bounds.append((start, size))
        start += size
    return bounds


def _summed_signs(seed: int, n: int, threads: int = 1) -> int:
    """Exact sum of the first ``n`` orientation signs for ``seed``.

    Each shard sums its own block of the stream; the totals are integers,
    so the merged result is identical for every shard layout.
    """
    if threads <= 1:
        return int(handedness_signs(seed, n).sum())
    bounds = _shard_bounds(n, threads)
    with ThreadPoolExecutor(max_workers=len(bounds)) as pool:
        parts = pool.map(
            lambda se: int(handedness_signs(seed, se[1], start=se[0]).sum()), bounds
        )
        return sum(parts)


def single_expectation(
    theta: PolarizerAngle, n: int, seed: int, threads: int = 1
) -> CorrelationEstimate:
    """Average one station's outcome over ``n`` orientation samples.

    Outcomes are pure bivectors, so the scalar mean is exactly zero and
    the bivector mean is the mean sign times the polarizer axis; under
    the 50/50 orientation law it decays like 1/sqrt(n).
    """
    if n < 1:
        raise ValueError(f"trial count must be at least 1, got {n}")
    mean_sign = _summed_signs(seed, n, threads) / n
    axis = polarizer_axis(theta)
    return CorrelationEstimate(
        scalar_mean=0.0,
        bivector_mean=(mean_sign * axis.x, mean_sign * axis.y, mean_sign * axis.z),
        trial_count=n,
        standard_error=1.0 / math.sqrt(n),
    )


def joint_expectation(
    alpha: PolarizerAngle, beta: PolarizerAngle, n: int, seed: int, threads: int = 1
) -> CorrelationEstimate:
    """Average the outcome product over ``n`` shared orientation samples.

    The scalar channel is per-trial constant, so the mean equals
    ``cos 2(alpha-beta)`` for every seed and trial count; the bivector
    channel is the mean sign times ``sin 2(alpha-beta)`` on the ``e_xy``
    axis and vanishes at the 1/sqrt(n) rate.
    """
    if n < 1:
        raise ValueError(f"trial count must be at least 1, got {n}")
    d = 2.0 * (alpha.radians - beta.radians)
    mean_sign = _summed_signs(seed, n, threads) / n
    return CorrelationEstimate(
        scalar_mean=math.cos(d),
        bivector_mean=(0.0, 0.0, mean_sign * math.sin(d)),
        trial_count=n,
        standard_error=1.0 / math.sqrt(n),
    )


def quantum_reference(alpha: PolarizerAngle, beta: PolarizerAngle) -> float:
    """The quantum-mechanical correlation ``cos 2(alpha - beta)``."""
    return math.cos(2.0 * (alpha.radians - beta.radians))


def chsh_value(settings: ChshSettings, correlation) -> float:
    """Four-setting CHSH combination, minus sign on the primed-primed term."""
    e = correlation
    return abs(
        e(settings.alpha, settings.beta)
        + e(settings.alpha, settings.beta_prime)
        + e(settings.alpha_prime, settings.beta)
        - e(settings.alpha_prime, settings.beta_prime)
    )


# Finest supported grid: keeps the correlation matrix and the per-column
# scans inside a few hundred MB / a couple of minutes.
_MAX_GRID = 4096


def chsh_maximize(resolution: float, correlation) -> tuple:
    """Exhaustive CHSH maximum over all angle quadruples on a ``[0, pi)`` grid.

    Every quadruple ``(a, a', b, b')`` of grid angles is covered: for each
    ``(b, b')`` column pair the best ``a`` and ``a'`` are found by exact
    row reductions over the precomputed correlation matrix, which gives
    the same maximum as enumerating all ``m**4`` quadruples at ``m**3``
    cost.  Returns the maximizing settings and the value.
    """
    if not resolution > 0.0:
        raise ValueError(f"resolution must be positive, got {resolution!r}")
    m = int(math.ceil(math.pi / resolution - 1e-9))
    m = max(m, 1)
    if m > _MAX_GRID:
        raise ValueError(
            f"resolution {resolution:g} needs {m} grid points; finest supported is {_MAX_GRID}"
        )
    thetas = [k * resolution for k in range(m)]
    angles = [PolarizerAngle(t) for t in thetas]
    matrix = np.empty((m, m))
    for i, a in enumerate(angles):
        row = matrix[i]
        for j, b in enumerate(angles):
            row[j] = correlation(a, b)

    best_value = -math.inf
    best = (0, 0, 0, 0)
    for bp in range(m):
        column = matrix[:, bp : bp + 1]
        plus = matrix + column  # [a, b] -> E(a,b) + E(a,b')
        minus = matrix - column  # [a', b] -> E(a',b) - E(a',b')
        pos = plus.max(axis=0) + minus.max(axis=0)
        neg = -(plus.min(axis=0) + minus.min(axis=0))
        b_pos = int(np.argmax(pos))
        b_neg = int(np.argmax(neg))
        if pos[b_pos] > best_value:
            b = b_pos
            best_value = float(pos[b])
            best = (int(np.argmax(plus[:, b])), int(np.argmax(minus[:, b])), b, bp)
        if neg[b_neg] > best_value:
            b = b_neg
            best_value = float(neg[b])
            best = (int(np.argmin(plus[:, b])), int(np.argmin(minus[:, b])), b, bp)

    ia, iap, ib, ibp = best
    settings = ChshSettings(
        alpha=angles[ia], alpha_prime=angles[iap], beta=angles[ib], beta_prime=angles[ibp]
    )
    return settings, chsh_value(settings, correlation)
