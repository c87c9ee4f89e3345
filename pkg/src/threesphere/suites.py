"""Seeded identity suites: each check reports its worst residual.

These back the ``verify`` command.  A check is a batch of random
instances of one algebraic or topological contract; the residual is the
largest absolute coefficient deviation seen, compared against a fixed
tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    LEFT_HANDED,
    RIGHT_HANDED,
    EvenElement,
    Multivector,
    Vector3,
    bivector_identity_residual,
    dual_bivector,
    even_product,
    geometric_product,
    oriented_even_product,
    wedge,
)
from .protocol import (
    PolarizerAngle,
    alice_outcome,
    bob_outcome,
    handedness_signs,
    joint_product_closed_form,
)
from .topology import (
    NorthPoleError,
    S2Point,
    factorize_s3_point,
    s2_nonclosure_witness,
    stereographic_project,
    stereographic_unproject,
)

__all__ = ["PropertyCheck", "algebra_suite", "topology_suite", "protocol_suite", "SUITES"]

_HANDED = (RIGHT_HANDED, LEFT_HANDED)
_BASIS_VECTORS = (Vector3(1.0, 0.0, 0.0), Vector3(0.0, 1.0, 0.0), Vector3(0.0, 0.0, 1.0))


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    max_residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance


def _gap(lhs, rhs) -> float:
    return max(abs(a - b) for a, b in zip(lhs.coeffs, rhs.coeffs))


def _random_vector(rng) -> Vector3:
    x, y, z = rng.standard_normal(3)
    return Vector3(x, y, z)


def _random_unit_vector(rng) -> Vector3:
    while True:
        v = _random_vector(rng)
        if v.norm() > 1e-8:
            return v.normalized()


def _random_even(rng) -> EvenElement:
    return EvenElement(*rng.standard_normal(4))


def _random_unit_even(rng) -> EvenElement:
    while True:
        q = _random_even(rng)
        if q.norm() > 1e-8:
            return q.normalized()


def _random_handedness(rng):
    return _HANDED[int(rng.integers(2))]


def algebra_suite(samples: int = 1000, seed: int = 0) -> list:
    rng = np.random.default_rng(seed)
    checks = []

    worst = 0.0
    for _ in range(samples):
        u, v = _random_vector(rng), _random_vector(rng)
        mu, mv = u.as_multivector(), v.as_multivector()
        split = Multivector.scalar(u.dot(v)) + wedge(mu, mv)
        worst = max(worst, _gap(geometric_product(mu, mv), split))
    checks.append(PropertyCheck("vector product splits into dot plus wedge", worst, 1e-12))

    worst = 0.0
    for _ in range(samples):
        j, k = int(rng.integers(3)), int(rng.integers(3))
        handed = _random_handedness(rng)
        ej, ek = _BASIS_VECTORS[j], _BASIS_VECTORS[k]
        product = even_product(dual_bivector(handed, ej), dual_bivector(handed, ek))
        delta = 1.0 if j == k else 0.0
        oriented_cross = ej.cross(ek).scaled(float(handed.sign))
        residual = product + EvenElement.scalar(delta) + dual_bivector(handed, oriented_cross)
        worst = max(worst, max(abs(c) for c in residual.coeffs))
    checks.append(
        PropertyCheck("basis bivector products follow the orientation rule", worst, 1e-12)
    )

    worst = 0.0
    for _ in range(samples):
        handed = _random_handedness(rng)
        residual = bivector_identity_residual(handed, _random_vector(rng), _random_vector(rng))
        worst = max(worst, max(abs(c) for c in residual.coeffs))
    checks.append(PropertyCheck("generic oriented bivector identity", worst, 1e-12))

    worst = 0.0
    for _ in range(samples):
        p, q = _random_even(rng), _random_even(rng)
        full = geometric_product(p.embed(), q.embed())
        odd = max(abs(full.coeffs[i]) for i in (1, 2, 3, 7))
        even_gap = _gap(even_product(p, q), EvenElement.from_multivector(full))
        worst = max(worst, odd, even_gap)
    checks.append(
        PropertyCheck("even subalgebra closes and matches the full product", worst, 1e-12)
    )

    worst = 0.0
    for _ in range(samples):
        p, q = _random_even(rng), _random_even(rng)
        worst = max(worst, abs(even_product(p, q).norm() - p.norm() * q.norm()))
    checks.append(PropertyCheck("norm is multiplicative on the even part", worst, 1e-12))

    worst = 0.0
    for _ in range(samples):
        m, n, p = (Multivector(tuple(rng.uniform(-10.0, 10.0, 8))) for _ in range(3))
        worst = max(
            worst,
            _gap(geometric_product(geometric_product(m, n), p),
                 geometric_product(m, geometric_product(n, p))),
        )
    checks.append(PropertyCheck("geometric product associates", worst, 1e-10))

    worst = 0.0
    for _ in range(samples):
        v = _random_vector(rng)
        flipped = dual_bivector(LEFT_HANDED, v) + dual_bivector(RIGHT_HANDED, v)
        worst = max(worst, max(abs(c) for c in flipped.coeffs))
    checks.append(PropertyCheck("orientation flip negates the dual exactly", worst, 0.0))

    return checks


def topology_suite(samples: int = 1000, seed: int = 0) -> list:
    rng = np.random.default_rng(seed)
    checks = []

    worst = 0.0
    for _ in range(samples):
        v = _random_unit_vector(rng)
        if v.z > 1.0 - 1e-6:
            v = Vector3(v.x, v.y, -v.z)
        point = S2Point(v.x, v.y, v.z)
        back = stereographic_unproject(stereographic_project(point))
        worst = max(worst, abs(back.x - point.x), abs(back.y - point.y), abs(back.z - point.z))
    checks.append(PropertyCheck("stereographic round trip returns to the point", worst, 1e-12))

    try:
        stereographic_project(S2Point(0.0, 0.0, 1.0))
        rejected = 1.0
    except NorthPoleError:
        rejected = 0.0
    checks.append(PropertyCheck("north pole is rejected by the projection", rejected, 0.0))

    worst_product = 0.0
    worst_unit = 0.0
    for i in range(samples):
        target = _random_unit_even(rng)
        count = 1 + i % 8
        factors = factorize_s3_point(target, count, seed=int(rng.integers(2**31)))
        prod = factors[0]
        for f in factors[1:]:
            prod = even_product(prod, f)
        worst_product = max(worst_product, _gap(prod, target))
        worst_unit = max(worst_unit, max(abs(f.norm_squared() - 1.0) for f in factors))
    checks.append(PropertyCheck("factors multiply back to the target", worst_product, 1e-9))
    checks.append(PropertyCheck("every factor lies on the unit 3-sphere", worst_unit, 1e-12))

    worst = 0.0
    for _ in range(samples):
        a, b = _random_unit_vector(rng), _random_unit_vector(rng)
        worst = max(worst, abs(s2_nonclosure_witness(a, b).s + a.dot(b)))
    checks.append(PropertyCheck("equatorial product scalar equals minus the dot", worst, 1e-12))

    worst = 0.0
    for _ in range(samples):
        p, q = _random_unit_even(rng), _random_unit_even(rng)
        worst = max(worst, abs(even_product(p, q).norm_squared() - 1.0))
    checks.append(PropertyCheck("the 3-sphere closes under multiplication", worst, 1e-12))

    return checks


def protocol_suite(samples: int = 1000, seed: int = 0) -> list:
    rng = np.random.default_rng(seed)
    checks = []

    worst = 0.0
    for _ in range(samples):
        alpha = PolarizerAngle(rng.uniform(-2.0 * math.pi, 2.0 * math.pi))
        beta = PolarizerAngle(rng.uniform(-2.0 * math.pi, 2.0 * math.pi))
        handed = _random_handedness(rng)
        direct = oriented_even_product(
            handed, alice_outcome(alpha, handed), bob_outcome(beta, handed)
        )
        worst = max(worst, _gap(direct, joint_product_closed_form(alpha, beta, handed)))
    checks.append(PropertyCheck("closed form matches the direct outcome product", worst, 1e-12))

    worst = 0.0
    for _ in range(samples):
        theta = PolarizerAngle(rng.uniform(-2.0 * math.pi, 2.0 * math.pi))
        handed = _random_handedness(rng)
        outcome = alice_outcome(theta, handed)
        worst = max(worst, abs(outcome.s), abs(outcome.norm_squared() - 1.0))
    checks.append(PropertyCheck("outcomes sit on the equator of the 3-sphere", worst, 1e-12))

    worst = 0.0
    for _ in range(samples):
        alpha = PolarizerAngle(rng.uniform(-2.0 * math.pi, 2.0 * math.pi))
        beta = PolarizerAngle(rng.uniform(-2.0 * math.pi, 2.0 * math.pi))
        handed = _random_handedness(rng)
        product = oriented_even_product(
            handed, alice_outcome(alpha, handed), bob_outcome(beta, handed)
        )
        worst = max(worst, abs(product.norm_squared() - 1.0))
    checks.append(PropertyCheck("outcome products stay on the 3-sphere", worst, 1e-12))

    worst = 0.0
    for _ in range(samples):
        theta = rng.uniform(-2.0 * math.pi, 2.0 * math.pi)
        handed = _random_handedness(rng)
        worst = max(
            worst,
            _gap(
                alice_outcome(PolarizerAngle(theta), handed),
                alice_outcome(PolarizerAngle(theta + math.pi), handed),
            ),
        )
    checks.append(PropertyCheck("outcomes are invariant under a half-turn", worst, 1e-12))

    first = handedness_signs(seed, samples)
    again = handedness_signs(seed, samples)
    checks.append(
        PropertyCheck(
            "orientation stream repeats for a fixed seed",
            float(np.abs(first - again).max()) if samples else 0.0,
            0.0,
        )
    )

    balance = abs(float(first.mean())) if samples else 0.0
    checks.append(
        PropertyCheck(
            "orientation samples are balanced within 4/sqrt(n)",
            balance,
            4.0 / math.sqrt(max(samples, 1)),
        )
    )

    return checks


SUITES = {
    "algebra": algebra_suite,
    "topology": topology_suite,
    "protocol": protocol_suite,
}
