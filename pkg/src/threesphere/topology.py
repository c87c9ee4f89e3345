"""Membership tests and constructions on the 3-sphere and its equator.

Unit even elements form the 3-sphere, which is closed under
multiplication; the pure unit bivectors form its equatorial 2-sphere,
which is not.  This module provides the membership predicates, a
demonstration of both facts, the factorization of any 3-sphere point
into an arbitrary number of unit factors, and the stereographic
projection between the 2-sphere (minus its north pole) and the plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import RIGHT_HANDED, EvenElement, Vector3, dual_bivector, even_product

__all__ = [
    "NorthPoleError",
    "S2Point",
    "PlanePoint",
    "is_unit_s3",
    "is_equatorial",
    "factorize_s3_point",
    "s2_nonclosure_witness",
    "stereographic_project",
    "stereographic_unproject",
]


class NorthPoleError(ValueError):
    """Raised for the one point the stereographic projection cannot map."""


@dataclass(frozen=True)
class S2Point:
    """Point on the unit 2-sphere."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        r2 = self.x * self.x + self.y * self.y + self.z * self.z
        if not math.isfinite(r2) or abs(r2 - 1.0) > 1e-12:
            raise ValueError(f"({self.x}, {self.y}, {self.z}) is not on the unit sphere")

    @classmethod
    def from_direction(cls, x: float, y: float, z: float) -> "S2Point":
        n = math.sqrt(x * x + y * y + z * z)
        if n == 0.0:
            raise ValueError("cannot project the zero vector onto the sphere")
        return cls(x / n, y / n, z / n)


@dataclass(frozen=True)
class PlanePoint:
    """Point of the projection plane."""

    u: float
    v: float

    def __post_init__(self):
        if not (math.isfinite(self.u) and math.isfinite(self.v)):
            raise ValueError("plane coordinates must be finite")


def _check_tol(tol: float) -> None:
    if not tol > 0.0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")


def is_unit_s3(q: EvenElement, tol: float = 1e-12) -> bool:
    """True when ``q`` lies on the unit 3-sphere within ``tol``."""
    _check_tol(tol)
    return abs(q.norm_squared() - 1.0) <= tol


def is_equatorial(q: EvenElement, tol: float = 1e-12) -> bool:
    """True for unit elements with (near) zero scalar part: pure unit bivectors."""
    _check_tol(tol)
    return is_unit_s3(q, tol) and abs(q.s) <= tol


def _random_unit_even(rng: np.random.Generator) -> EvenElement:
    while True:
        w = rng.standard_normal(4)
        n = float(np.sqrt(np.dot(w, w)))
        if n > 1e-8:
            return EvenElement(w[0] / n, w[1] / n, w[2] / n, w[3] / n)


def factorize_s3_point(target: EvenElement, count: int, seed: int) -> list:
    """Split a 3-sphere point into ``count`` unit factors that multiply back to it.

    The first ``count - 1`` factors are drawn uniformly on the 3-sphere
    (normalized 4-component Gaussians, deterministic for a fixed seed);
    the last factor is the inverse of their ordered product times the
    target.  Every factor is unit and the ordered product reproduces the
    target up to rounding.
    """
    if count < 1:
        raise ValueError(f"factor count must be at least 1, got {count}")
    if not is_unit_s3(target, 1e-9):
        raise ValueError("target must lie on the unit 3-sphere (within 1e-9)")
    if count == 1:
        return [target]
    rng = np.random.default_rng(seed)
    factors = [_random_unit_even(rng) for _ in range(count - 1)]
    prefix = factors[0]
    for f in factors[1:]:
        prefix = even_product(prefix, f)
    last = even_product(prefix.conjugate(), target).normalized()
    return factors + [last]


def s2_nonclosure_witness(a: Vector3, b: Vector3) -> EvenElement:
    """Product of the two equatorial points dual to ``a`` and ``b``.

    Its scalar part equals ``-a.dot(b)``, so whenever the directions are
    not orthogonal the product has left the equator: the 2-sphere is not
    closed under multiplication, while the ambient 3-sphere is.
    """
    return even_product(dual_bivector(RIGHT_HANDED, a), dual_bivector(RIGHT_HANDED, b))


def stereographic_project(p: S2Point) -> PlanePoint:
    """Project from the north pole ``(0, 0, 1)`` onto the ``z = 0`` plane.

    The north pole itself has no image; inputs within ``1e-12`` of it are
    rejected with :class:`NorthPoleError`.
    """
    d = 1.0 - p.z
    if abs(d) <= 1e-12:
        raise NorthPoleError("the north pole has no image under this projection")
    return PlanePoint(p.x / d, p.y / d)


def stereographic_unproject(q: PlanePoint) -> S2Point:
    """Closed-form inverse of :func:`stereographic_project`."""
    r2 = q.u * q.u + q.v * q.v
    if math.isinf(r2):
        # Limit of the inverse formula far from the origin.
        return S2Point(0.0, 0.0, 1.0)
    d = r2 + 1.0
    return S2Point(2.0 * q.u / d, 2.0 * q.v / d, (r2 - 1.0) / d)
